#include "planes/ledger.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

namespace planes {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Eliminated: return "Eliminated";
        case Verdict::Violated: return "Violated";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

bool CaseResult::same_outcome(const CaseResult& other) const {
    return id == other.id && verdict == other.verdict && witnesses == other.witnesses && notes == other.notes;
}

CaseBuilder::CaseBuilder(std::string id) { result_.id = std::move(id); }

void CaseBuilder::witness(std::string params, std::string values) {
    result_.witnesses.push_back({std::move(params), std::move(values)});
}

void CaseBuilder::violation(std::string params, std::string values) {
    violated_ = true;
    result_.witnesses.push_back({std::move(params), "VIOLATION: " + values});
}

bool CaseBuilder::expect(bool ok, const std::string& params, const std::string& values) {
    if (!ok) violation(params, values);
    return ok;
}

void CaseBuilder::note(std::string text) { result_.notes.push_back(std::move(text)); }

BigInt CaseBuilder::bound(const char* name, const BigInt& cap, const std::optional<BigInt>& override_value) {
    if (!override_value || *override_value >= cap) return cap;
    truncated_ = true;
    note(std::string(name) + " tightened to " + override_value->str() + " (cap " + cap.str() + ")");
    return *override_value;
}

CaseResult CaseBuilder::finish() {
    if (violated_)
        result_.verdict = Verdict::Violated;
    else if (truncated_)
        result_.verdict = Verdict::Inconclusive;
    else
        result_.verdict = Verdict::Eliminated;
    return result_;
}

std::vector<BigInt> prime_powers_up_to(const BigInt& cap) {
    std::vector<BigInt> out;
    for (std::uint32_t p : small_primes()) {
        if (p > 1024 || p > cap) break;
        for (BigInt q = p; q <= cap; q *= p) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<CaseCheck>& registry() {
    static const std::vector<CaseCheck> all = [] {
        std::vector<CaseCheck> v;
        for (auto* part : {&frame_cases, &linear_cases, &classical_cases, &exceptional_cases, &global_cases}) {
            auto cases = (*part)();
            std::move(cases.begin(), cases.end(), std::back_inserter(v));
        }
        return v;
    }();
    return all;
}

const CaseCheck* find_case(std::string_view id) {
    for (const auto& c : registry())
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

CaseResult run_one(const CaseCheck& c, const CaseContext& ctx) {
    const auto start = std::chrono::steady_clock::now();
    CaseResult r = c.check(ctx);
    r.id = c.id;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

}  // namespace

CaseResult replay(std::string_view id, const CaseContext& ctx) {
    const CaseCheck* c = find_case(id);
    if (!c) throw std::out_of_range("unknown case id: " + std::string(id));
    return run_one(*c, ctx);
}

std::vector<CaseResult> verify_all(const std::vector<CaseCheck>& cases, const CaseContext& ctx) {
    std::vector<CaseResult> results(cases.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(ctx.jobs, static_cast<unsigned>(cases.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) results[i] = run_one(cases[i], ctx);
        return results;
    }
    // Inner scans stay sequential when cases already run in parallel.
    CaseContext inner = ctx;
    inner.jobs = 1;
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < cases.size(); i = next++) results[i] = run_one(cases[i], inner);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

std::vector<CaseResult> verify_all(const CaseContext& ctx) { return verify_all(registry(), ctx); }

bool all_eliminated(const std::vector<CaseResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CaseResult& r) { return r.verdict == Verdict::Eliminated; });
}

}  // namespace planes
