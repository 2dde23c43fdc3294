#include "planes/scan.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace planes {

namespace {

struct RootedPrime {
    std::uint32_t p;
    std::uint32_t roots[2];
    unsigned root_count;
};

std::uint64_t powmod_small(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Roots of w^2 + w + 1 modulo each prime below 10^6 that has any.
const std::vector<RootedPrime>& rooted_primes() {
    static const std::vector<RootedPrime> table = [] {
        std::vector<RootedPrime> out;
        for (std::uint32_t p : small_primes()) {
            if (p == 3) {
                out.push_back({3, {1, 0}, 1});
            } else if (p % 3 == 1) {
                std::uint64_t w = 1;
                for (std::uint64_t g = 2; w == 1; ++g) w = powmod_small(g, (p - 1) / 3, p);
                const auto w2 = static_cast<std::uint32_t>(w * w % p);
                const auto a = static_cast<std::uint32_t>(w);
                out.push_back({p, {std::min(a, w2), std::max(a, w2)}, 2});
            }
        }
        return out;
    }();
    return table;
}

constexpr std::uint64_t kChunk = 1u << 15;

}  // namespace

void for_each_quadratic(std::uint64_t lo, std::uint64_t hi,
                        const std::function<void(std::uint64_t, std::uint64_t, const WordFactors&)>& visit) {
    if (lo > hi) return;
    if (hi > kScanUMax) throw std::invalid_argument("for_each_quadratic: range exceeds cap");
    const auto& primes = rooted_primes();
    std::vector<std::uint64_t> value, rest;
    std::vector<WordFactors> factors;
    for (std::uint64_t a = lo; a <= hi; a += kChunk) {
        const std::uint64_t b = std::min(hi, a + kChunk - 1);
        const std::size_t len = b - a + 1;
        value.resize(len);
        rest.resize(len);
        factors.assign(len, {});
        for (std::size_t i = 0; i < len; ++i) {
            const std::uint64_t w = a + i;
            value[i] = rest[i] = w * w + w + 1;
        }
        // A prime above b + 1 can only appear as the final cofactor.
        for (const auto& rp : primes) {
            if (rp.p > b + 1) break;
            for (unsigned k = 0; k < rp.root_count; ++k) {
                const std::uint64_t r = rp.roots[k];
                std::uint64_t start = a + (r + rp.p - a % rp.p) % rp.p;
                for (std::uint64_t w = start; w <= b; w += rp.p) {
                    auto& x = rest[w - a];
                    unsigned e = 0;
                    while (x % rp.p == 0) {
                        x /= rp.p;
                        ++e;
                    }
                    factors[w - a].emplace_back(rp.p, e);
                }
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (rest[i] > 1) factors[i].emplace_back(rest[i], 1);
            visit(a + i, value[i], factors[i]);
        }
    }
}

std::string_view to_string(GateVerdict g) {
    switch (g) {
        case GateVerdict::Pass: return "pass";
        case GateVerdict::Fail: return "fail";
        case GateVerdict::Uncovered: return "uncovered";
    }
    return "?";
}

CandidateGate::CandidateGate(GroupSpec spec, GateOptions options) : spec_(std::move(spec)), options_(options) {
    validate(spec_);
    for (const auto& cls : classes_for(spec_)) {
        ClassData d;
        d.label = cls.entry->label;
        d.exact = cls.entry->exact;
        d.n_g = involution_class_size(cls);
        const auto pf = factorize_bounded(d.n_g, options_.rho_budget);
        if (pf.cofactor != 1) {
            d.uncovered = "class size not fully factored";
        } else {
            std::size_t count = 1;
            for (const auto& f : pf.known.factors) {
                count *= f.exponent + 1;
                if (count > options_.divisor_cap) break;
            }
            if (count > options_.divisor_cap) d.uncovered = "divisor count above cap";
        }
        classes_.push_back(std::move(d));
    }
    if (options_.index_floor) {
        const unsigned rank = parabolic_rank(spec_);
        for (unsigned m = 1; m <= rank; ++m) {
            BigInt idx = parabolic_index(spec_, m);
            if (!floor_ || idx < *floor_) floor_ = std::move(idx);
        }
    }
}

GateResult CandidateGate::evaluate(const BigInt& u, const BigInt& v) const {
    GateResult out;
    if (classes_.empty()) {
        out.verdict = GateVerdict::Uncovered;
        out.reasons.push_back("uncovered family: no catalog class for " + spec_.to_string());
        return out;
    }
    const BigInt ratio = u * u - u + 1;
    bool any_pass = false, any_uncovered = false;
    for (const auto& c : classes_) {
        const std::string tag = c.label + (c.exact ? "" : " (divisor bound)") + ": ";
        if (!c.uncovered.empty()) {
            any_uncovered = true;
            out.reasons.push_back(tag + "uncovered, " + c.uncovered);
            continue;
        }
        if (c.n_g % ratio != 0) {
            out.reasons.push_back(tag + "non-divisor, u^2-u+1 = " + ratio.str() + " does not divide n_g = " + c.n_g.str());
            continue;
        }
        const BigInt r_g = c.n_g / ratio;
        const auto ic = involution_counts(c.n_g, r_g);
        if (!ic || ic->u != u) {
            out.reasons.push_back(tag + "wrong quadratic form for r_g = " + r_g.str());
            continue;
        }
        if (ic->v() != v) {
            out.reasons.push_back(tag + "v mismatch, ratio*d_g = " + ic->v().str());
            continue;
        }
        any_pass = true;
        out.reasons.push_back(tag + "pass with r_g = " + r_g.str() + ", d_g = " + ic->d_g.str());
    }
    if (any_pass && floor_ && v <= *floor_) {
        out.reasons.push_back("index floor: v = " + v.str() + " does not exceed " + floor_->str());
        out.verdict = GateVerdict::Fail;
        return out;
    }
    out.verdict = any_pass ? GateVerdict::Pass : any_uncovered ? GateVerdict::Uncovered : GateVerdict::Fail;
    return out;
}

GateResult candidate_gate(const PlaneOrder& plane, const GroupSpec& spec, const GateOptions& options) {
    return CandidateGate(spec, options).evaluate(plane.u, plane.v);
}

namespace {

Factorization to_factorization(const WordFactors& w) {
    Factorization f;
    f.value = 1;
    for (const auto& [p, e] : w) {
        f.factors.push_back({BigInt(p), e});
        f.value *= ipow(BigInt(p), e);
    }
    return f;
}

}  // namespace

SieveRow make_row(std::uint64_t u, const WordFactors& plus, const WordFactors& minus,
                  const std::vector<CandidateGate>& gates) {
    SieveRow row;
    row.u = u;
    row.v = plane_points(row.u);

    WordFactors merged;
    std::merge(plus.begin(), plus.end(), minus.begin(), minus.end(), std::back_inserter(merged));
    bool coprime = true;
    for (std::size_t i = 1; i < merged.size(); ++i)
        if (merged[i].first == merged[i - 1].first) coprime = false;
    row.v_factors = to_factorization(merged);
    row.v_factors.value = row.v;

    auto add = [&row](std::string name, bool pass, std::string detail) {
        row.filter_trace.push_back({std::move(name), pass, std::move(detail)});
        row.survived = row.survived && pass;
    };

    add("coprime", coprime, coprime ? "" : "u^2+u+1 and u^2-u+1 share a prime");
    const bool adm = admissible_factorization(row.v_factors);
    add("admissible", adm, adm ? "" : "prime 2 mod 3 or 9 divides v");

    row.ljunggren = ljunggren_from_factors(to_factorization(plus));
    add("ljunggren", row.ljunggren != Ljunggren::OtherPrimePower, std::string(to_string(row.ljunggren)));

    bool kantor_ok = true;
    std::string kantor_detail;
    for (const auto& pf : row.v_factors.factors) {
        if (pf.exponent < 2) continue;
        const BigInt pa = ipow(pf.prime, pf.exponent);
        const bool ok = kantor_inequality_holds(pf.prime, pf.exponent, row.v / pa, row.u);
        kantor_ok = kantor_ok && ok;
        if (!kantor_detail.empty()) kantor_detail += "; ";
        kantor_detail += pf.prime.str() + "^" + std::to_string(pf.exponent) + (ok ? " ok" : " fails");
    }
    add("kantor", kantor_ok, kantor_detail.empty() ? "not applicable" : kantor_detail);

    for (const auto& gate : gates) {
        const GateResult g = gate.evaluate(row.u, row.v);
        std::string detail(to_string(g.verdict));
        for (const auto& r : g.reasons) detail += "; " + r;
        // Uncovered is not a failure: the row is simply not decided by that spec.
        add("gate " + gate.spec().to_string(), g.verdict != GateVerdict::Fail, detail);
    }
    return row;
}

namespace {

std::vector<SieveRow> rows_for_block(std::uint64_t lo, std::uint64_t hi, const std::vector<CandidateGate>& gates) {
    std::vector<WordFactors> f;
    f.reserve(hi - lo + 2);
    for_each_quadratic(lo - 1, hi, [&](std::uint64_t, std::uint64_t, const WordFactors& w) { f.push_back(w); });
    std::vector<SieveRow> rows;
    rows.reserve(hi - lo + 1);
    for (std::uint64_t u = lo; u <= hi; ++u) rows.push_back(make_row(u, f[u - lo + 1], f[u - lo], gates));
    return rows;
}

constexpr std::uint64_t kBlock = 8192;

}  // namespace

void sieve_orders_each(std::uint64_t u_min, std::uint64_t u_max, const std::vector<GroupSpec>& candidates,
                       unsigned jobs, const std::function<void(const SieveRow&)>& visit) {
    if (u_min < 2) throw std::invalid_argument("sieve_orders: u_min must be at least 2");
    if (u_min > u_max) throw std::invalid_argument("sieve_orders: u_min exceeds u_max");
    if (u_max > kScanUMax) throw std::invalid_argument("sieve_orders: u_max exceeds cap 1000000");
    std::vector<CandidateGate> gates;
    for (const auto& s : candidates) gates.emplace_back(s);

    jobs = std::max(1u, jobs);
    std::uint64_t next = u_min;
    while (next <= u_max) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks;
        for (unsigned j = 0; j < jobs && next <= u_max; ++j) {
            const std::uint64_t hi = std::min(u_max, next + kBlock - 1);
            blocks.emplace_back(next, hi);
            next = hi + 1;
        }
        std::vector<std::vector<SieveRow>> out(blocks.size());
        if (blocks.size() == 1) {
            out[0] = rows_for_block(blocks[0].first, blocks[0].second, gates);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t i = 0; i < blocks.size(); ++i)
                pool.emplace_back([&, i] { out[i] = rows_for_block(blocks[i].first, blocks[i].second, gates); });
            for (auto& t : pool) t.join();
        }
        for (const auto& block : out)
            for (const auto& row : block) visit(row);
    }
}

std::vector<SieveRow> sieve_orders(std::uint64_t u_min, std::uint64_t u_max, const std::vector<GroupSpec>& candidates,
                                   unsigned jobs) {
    std::vector<SieveRow> rows;
    sieve_orders_each(u_min, u_max, candidates, jobs, [&](const SieveRow& r) { rows.push_back(r); });
    return rows;
}

}  // namespace planes
