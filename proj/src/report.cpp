#include "planes/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace planes {

namespace {

using json = nlohmann::ordered_json;

double to_ms(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

std::string fixed_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f ms", ms);
    return buf;
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::string_view sign_name(Sign s) {
    switch (s) {
        case Sign::Plus: return "+";
        case Sign::Minus: return "-";
        case Sign::Circ: return "o";
        case Sign::None: break;
    }
    return "";
}

}  // namespace

std::string case_record(const CaseResult& r, OutputFormat format) {
    const CaseCheck* c = find_case(r.id);
    const std::string section = c ? c->section : "";
    const std::string anchor = c ? c->anchor : "";
    const std::size_t shown = std::min(r.witnesses.size(), kReportWitnessLimit);

    if (format == OutputFormat::Structured) {
        json w = json::array();
        for (std::size_t i = 0; i < shown; ++i)
            w.push_back({{"params", r.witnesses[i].params}, {"values", r.witnesses[i].values}});
        json rec = {{"record", "case"},
                    {"id", r.id},
                    {"section", section},
                    {"anchor", anchor},
                    {"verdict", std::string(to_string(r.verdict))},
                    {"witness_count", r.witnesses.size()},
                    {"witnesses", w},
                    {"notes", r.notes},
                    {"elapsed_ms", to_ms(r.elapsed)}};
        return rec.dump();
    }
    std::ostringstream os;
    os << upper(to_string(r.verdict)) << "  " << r.id << "  [" << section << "]  witnesses=" << r.witnesses.size()
       << "  " << fixed_ms(to_ms(r.elapsed)) << '\n';
    for (std::size_t i = 0; i < shown; ++i) os << "    " << r.witnesses[i].params << ": " << r.witnesses[i].values << '\n';
    if (shown < r.witnesses.size()) os << "    ... " << r.witnesses.size() - shown << " more\n";
    for (const auto& n : r.notes) os << "    note: " << n << '\n';
    std::string out = os.str();
    out.pop_back();
    return out;
}

std::string case_summary(const std::vector<CaseResult>& results, OutputFormat format) {
    std::size_t elim = 0, viol = 0, inc = 0;
    std::chrono::nanoseconds total{0};
    for (const auto& r : results) {
        total += r.elapsed;
        switch (r.verdict) {
            case Verdict::Eliminated: ++elim; break;
            case Verdict::Violated: ++viol; break;
            case Verdict::Inconclusive: ++inc; break;
        }
    }
    const bool ok = viol == 0 && inc == 0;
    if (format == OutputFormat::Structured) {
        json rec = {{"record", "summary"},       {"cases", results.size()}, {"eliminated", elim},
                    {"violated", viol},          {"inconclusive", inc},     {"all_eliminated", ok},
                    {"elapsed_ms", to_ms(total)}};
        return rec.dump();
    }
    std::ostringstream os;
    os << "summary: " << results.size() << " cases, " << elim << " eliminated, " << viol << " violated, " << inc
       << " inconclusive  " << fixed_ms(to_ms(total));
    return os.str();
}

std::string row_record(const SieveRow& row, OutputFormat format) {
    if (format == OutputFormat::Structured) {
        json trace = json::array();
        for (const auto& f : row.filter_trace) trace.push_back({{"filter", f.name}, {"pass", f.pass}, {"detail", f.detail}});
        json rec = {{"record", "row"},
                    {"u", row.u.str()},
                    {"v", row.v.str()},
                    {"v_factors", row.v_factors.to_string()},
                    {"ljunggren", std::string(to_string(row.ljunggren))},
                    {"survived", row.survived},
                    {"filters", trace}};
        return rec.dump();
    }
    std::ostringstream os;
    os << "u=" << row.u << "  v=" << row.v << " = " << row.v_factors.to_string() << "  "
       << (row.survived ? "survives" : "eliminated");
    for (const auto& f : row.filter_trace) {
        os << "\n    " << (f.pass ? "pass " : "FAIL ") << f.name;
        if (!f.detail.empty()) os << ": " << f.detail;
    }
    return os.str();
}

std::string row_summary(std::size_t rows, std::size_t survivors, OutputFormat format) {
    if (format == OutputFormat::Structured)
        return json{{"record", "summary"}, {"rows", rows}, {"survivors", survivors}}.dump();
    return "summary: " + std::to_string(rows) + " rows, " + std::to_string(survivors) + " not eliminated";
}

std::string catalog_record(const CatalogEntry& e, OutputFormat format) {
    std::string group(family_name(e.family));
    group += sign_name(e.sign);
    if (format == OutputFormat::Structured) {
        json rec = {{"record", "class"},
                    {"group", group},
                    {"label", e.label},
                    {"formula", e.formula.render()},
                    {"exact", e.exact},
                    {"anchor", e.anchor}};
        return rec.dump();
    }
    return group + "  " + e.label + "  " + (e.exact ? "n_g = " : "n_g | ") + e.formula.render();
}

std::string integer_record(const std::string& what, const BigInt& value, OutputFormat format) {
    const std::string f = factorize(value).to_string();
    if (format == OutputFormat::Structured)
        return json{{"record", "integer"}, {"query", what}, {"value", value.str()}, {"factorization", f}}.dump();
    const std::string head = what.empty() ? value.str() : what + " = " + value.str();
    return head + " = " + f;
}

}  // namespace planes
