// Command-line front end for the ledger, the sieve and the exact queries.
#include "planes/exactmath.hpp"
#include "planes/groups.hpp"
#include "planes/ledger.hpp"
#include "planes/report.hpp"
#include "planes/scan.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace planes;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

constexpr std::uint64_t kQCap = 1024;
constexpr unsigned kRankCap = 50;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigInt parse_int(const std::string& token, const char* what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError(std::string(what) + ": expected a nonnegative integer, got '" + token + "'");
    return BigInt(token);
}

unsigned parse_rank(const std::string& token) {
    const BigInt n = parse_int(token, "n");
    if (n > kRankCap) throw UsageError("n = " + token + " exceeds the cap " + std::to_string(kRankCap));
    return static_cast<unsigned>(n);
}

BigInt parse_q(const std::string& token) {
    const BigInt q = parse_int(token, "q");
    if (q > kQCap) throw UsageError("q = " + token + " exceeds the cap " + std::to_string(kQCap));
    return q;
}

Sign parse_sign(const std::string& token, bool allow_circ) {
    if (token == "+") return Sign::Plus;
    if (token == "-") return Sign::Minus;
    if (allow_circ && token == "o") return Sign::Circ;
    throw UsageError("bad sign '" + token + "'");
}

GroupSpec parse_group(const std::vector<std::string>& t) {
    if (t.empty()) throw UsageError("missing group spec");
    const auto fam = parse_family(t[0]);
    if (!fam) throw UsageError("unknown family '" + t[0] + "'");
    const auto need = [&](std::size_t k) {
        if (t.size() != k + 1)
            throw UsageError(t[0] + " takes " + std::to_string(k) + " parameter" + (k == 1 ? "" : "s"));
    };
    GroupSpec s;
    try {
        switch (*fam) {
            case Family::Alternating: need(1); s = GroupSpec::alternating(parse_rank(t[1])); break;
            case Family::Sporadic: need(1); s = GroupSpec::sporadic(t[1]); break;
            case Family::PSL: need(2); s = GroupSpec::linear(parse_rank(t[1]), parse_q(t[2])); break;
            case Family::PSU: need(2); s = GroupSpec::unitary(parse_rank(t[1]), parse_q(t[2])); break;
            case Family::PSp: need(2); s = GroupSpec::symplectic(parse_rank(t[1]), parse_q(t[2])); break;
            case Family::POmega:
                need(3);
                s = GroupSpec::orthogonal(parse_rank(t[1]), parse_q(t[2]), parse_sign(t[3], true));
                break;
            case Family::E6: need(2); s = GroupSpec::exceptional(*fam, parse_q(t[1]), parse_sign(t[2], false)); break;
            default: need(1); s = GroupSpec::exceptional(*fam, parse_q(t[1])); break;
        }
        validate(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, sep)) out.push_back(part);
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

std::optional<BigInt> capped(const std::string& token, const char* name, const BigInt& cap) {
    if (token.empty()) return std::nullopt;
    const BigInt v = parse_int(token, name);
    if (v > cap) throw UsageError(std::string(name) + " = " + token + " exceeds the cap " + cap.str());
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact replay of plane-order eliminations, a feasibility sieve and group-order queries."};
    app.require_subcommand(1);
    app.footer(
        "Hard caps: u <= 1000000, q <= 1024, rank n <= 50.\n"
        "Exit status: 0 success, 1 a case is Violated or Inconclusive, 2 usage error, 3 internal error.");

    std::string format = "text";
    unsigned jobs = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    app.fallthrough();

    std::string u_max_opt, q_max_opt;
    auto* verify_all = app.add_subcommand("verify-all", "Replay every registered case");
    verify_all->add_option("--u-max", u_max_opt, "Tighten u bounds (cap 1000000)");
    verify_all->add_option("--q-max", q_max_opt, "Tighten q bounds (cap 1024)");

    std::string case_id;
    auto* verify = app.add_subcommand("verify", "Replay one case");
    verify->add_option("id", case_id, "Case id")->required();
    verify->add_option("--u-max", u_max_opt, "Tighten u bounds (cap 1000000)");
    verify->add_option("--q-max", q_max_opt, "Tighten q bounds (cap 1024)");

    std::uint64_t u_min = 2, u_max = 0;
    std::string candidates;
    auto* scan = app.add_subcommand("scan", "Sieve plane orders u_min..u_max");
    scan->add_option("--u-min", u_min, "Smallest u (>= 2)")->required();
    scan->add_option("--u-max", u_max, "Largest u (<= 1000000)")->required();
    scan->add_option("--candidates", candidates, "Comma-separated group specs, e.g. \"PSL 2 13,G2 7\"");

    std::vector<std::string> group_tokens;
    auto* order_cmd = app.add_subcommand("order", "Order of a simple group");
    order_cmd->add_option("spec", group_tokens, "Group spec, e.g. PSL 2 13")->required();

    unsigned parabolic = 0;
    auto* index_cmd = app.add_subcommand("index", "Index of a maximal parabolic subgroup");
    index_cmd->add_option("spec", group_tokens, "Group spec")->required();
    index_cmd->add_option("--parabolic", parabolic, "Parabolic P_m")->required();

    std::string factor_arg;
    auto* factor_cmd = app.add_subcommand("factor", "Factor a nonnegative integer");
    factor_cmd->add_option("n", factor_arg, "Integer")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "List the involution class catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const OutputFormat fmt = format == "structured" ? OutputFormat::Structured : OutputFormat::Text;
    try {
        if (*verify_all || *verify) {
            CaseContext ctx;
            ctx.jobs = jobs;
            ctx.u_max = capped(u_max_opt, "u-max", kScanUMax);
            ctx.q_max = capped(q_max_opt, "q-max", kQCap);
            std::vector<CaseResult> results;
            if (*verify) {
                if (!find_case(case_id)) throw UsageError("unknown case id '" + case_id + "'");
                results.push_back(replay(case_id, ctx));
            } else {
                results = planes::verify_all(ctx);
            }
            for (const auto& r : results) std::cout << case_record(r, fmt) << '\n';
            std::cout << case_summary(results, fmt) << '\n';
            return all_eliminated(results) ? kExitOk : kExitVerdict;
        }
        if (*scan) {
            if (u_min < 2 || u_min > u_max || u_max > kScanUMax)
                throw UsageError("need 2 <= u-min <= u-max <= 1000000");
            std::vector<GroupSpec> specs;
            for (const auto& c : split(candidates, ','))
                if (!words(c).empty()) specs.push_back(parse_group(words(c)));
            std::size_t rows = 0, survivors = 0;
            sieve_orders_each(u_min, u_max, specs, jobs, [&](const SieveRow& row) {
                ++rows;
                survivors += row.survived;
                std::cout << row_record(row, fmt) << '\n';
            });
            std::cout << row_summary(rows, survivors, fmt) << '\n';
            return kExitOk;
        }
        if (*order_cmd) {
            const GroupSpec s = parse_group(group_tokens);
            std::cout << integer_record("|" + s.to_string() + "|", order(s), fmt) << '\n';
            return kExitOk;
        }
        if (*index_cmd) {
            const GroupSpec s = parse_group(group_tokens);
            const unsigned rank = parabolic_rank(s);
            if (parabolic < 1 || parabolic > rank)
                throw UsageError(s.to_string() + " has parabolics P_1..P_" + std::to_string(rank));
            std::cout << integer_record("|" + s.to_string() + ":P_" + std::to_string(parabolic) + "|",
                                        parabolic_index(s, parabolic), fmt)
                      << '\n';
            return kExitOk;
        }
        if (*factor_cmd) {
            std::cout << integer_record("", parse_int(factor_arg, "n"), fmt) << '\n';
            return kExitOk;
        }
        if (*catalog_cmd) {
            for (const auto& e : involution_catalog()) std::cout << catalog_record(e, fmt) << '\n';
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
