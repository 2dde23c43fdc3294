// Framework inequality, alternating groups, and the two registry-wide
// table/scan cases.
#include "case_util.hpp"
#include "planes/groups.hpp"
#include "planes/ledger.hpp"
#include "planes/plane.hpp"
#include "planes/scan.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <thread>

namespace planes {

using detail::kv;
using detail::str;

namespace {

CaseResult frame_5sqrt(const CaseContext& ctx) {
    CaseBuilder b("FRAME-5SQRT");
    const BigInt tail = b.bound("u_max", 1000, ctx.u_max);
    const BigInt window = std::min<BigInt>(100, tail);
    for (BigInt u = 2; u <= window; ++u) {
        const BigInt v = plane_points(u);
        const BigInt rhs = ipow(5, static_cast<unsigned>(u));
        b.expect(v < rhs, kv({{"u", str(u)}}), "x^2+x+1 = " + str(v) + " is not below 5^u");
    }
    // 5^u / v(u) increases iff 5 v(u) > v(u+1).
    for (BigInt u = 2; u < tail; ++u)
        b.expect(5 * plane_points(u) > plane_points(u + 1), kv({{"u", str(u)}}), "ratio 5^u/v(u) not increasing");
    b.witness(kv({{"u", "2"}}), "v=21 < 25");
    b.witness(kv({{"window", "2.." + str(window)}, {"monotone", "2.." + str(tail)}}), "x^2+x+1 < 5^sqrt(x) throughout");
    return b.finish();
}

CaseResult alt_bound(const CaseContext&) {
    CaseBuilder b("ALT-BOUND");
    unsigned last_hold = 0;
    for (unsigned n = 8; n <= 200; ++n) {
        const unsigned k = n / 2;
        const BigInt N = n;
        const bool second = ipow(2, k) < ipow(N, 4);
        // 2^(k-1) <= 2 n^2(n-1)^2(n-2)^2(n-3)^2 / (2^6 k^2 (k-1)^2), cross-multiplied.
        const BigInt num = 2 * ipow(N * (N - 1) * (N - 2) * (N - 3), 2);
        const BigInt den = 64 * ipow(BigInt(k) * (k - 1), 2);
        const bool first = ipow(2, k - 1) * den <= num;
        b.expect(!first || second, kv({{"n", str(n)}}), "first inequality holds but 2^floor(n/2) < n^4 fails");
        b.expect(second == (n <= 43), kv({{"n", str(n)}}), second ? "holds beyond 43" : "fails at or below 43");
        if (second) last_hold = n;
    }
    b.witness("n=43", "2^21 = 2097152 < 43^4 = 3418801");
    b.witness("n=44", "2^22 = 4194304 >= 44^4 = 3748096");
    b.witness("last n with 2^floor(n/2) < n^4", str(static_cast<long long>(last_hold)));
    // v < 2 (n_g/r_g)^2 for u > 2: (u^2-u+1)(u^2+u+1) < 2(u^2-u+1)^2 iff 2u < u^2-u+1.
    for (unsigned u = 3; u <= 10000; ++u) {
        const BigInt U = u;
        const BigInt r = U * U - U + 1;
        b.expect(plane_points(U) < 2 * r * r, kv({{"u", str(u)}}), "v >= 2 (u^2-u+1)^2");
    }
    return b.finish();
}

CaseResult alt_ratio(const CaseContext&) {
    CaseBuilder b("ALT-RATIO");
    for (long long n = 11; n <= 200; ++n)
        b.expect(n * (n - 1) < 3 * (n - 4) * (n - 5), kv({{"n", str(n)}}),
                 "n(n-1)/((n-4)(n-5)) >= 3");
    b.witness("n=10", "n(n-1) = 90 = 3(n-4)(n-5): ratio exactly 3");
    b.witness("n=11", "110 < 126");
    b.note("u^2-u+1 >= 3 for u >= 2, so a ratio below 3 is impossible");
    return b.finish();
}

using Perm = std::array<int, 7>;

bool is_even(const Perm& p) {
    int inv = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) inv += p[i] > p[j];
    return inv % 2 == 0;
}

bool is_double_transposition(const Perm& p) {
    int moved = 0;
    for (int i = 0; i < 7; ++i) {
        if (p[p[i]] != i) return false;
        moved += p[i] != i;
    }
    return moved == 4;
}

CaseResult alt_a7(const CaseContext&) {
    CaseBuilder b("ALT-A7");
    Perm p;
    std::iota(p.begin(), p.end(), 0);
    long long a7 = 0, s5 = 0, a6 = 0, n_g = 0, r_s5 = 0, r_s5_plain = 0, r_a6 = 0;
    do {
        if (!is_even(p)) continue;
        ++a7;
        const bool in_s5 = (p[5] == 5 && p[6] == 6) || (p[5] == 6 && p[6] == 5);
        const bool in_a6 = p[6] == 6;
        s5 += in_s5;
        a6 += in_a6;
        if (!is_double_transposition(p)) continue;
        ++n_g;
        if (in_s5) {
            ++r_s5;
            r_s5_plain += p[5] == 5;
        }
        r_a6 += in_a6;
    } while (std::next_permutation(p.begin(), p.end()));

    b.expect(a7 == 2520 && s5 == 120 && a6 == 360, "orders",
             kv({{"|A7|", str(a7)}, {"|S5|", str(s5)}, {"|A6|", str(a6)}}));
    b.expect(n_g == 105, "n_g", str(n_g));
    b.expect(r_s5 == 25 && r_s5_plain == 15, "r_g(S5)", kv({{"total", str(r_s5)}, {"fixing 5,6", str(r_s5_plain)}}));
    b.expect(r_a6 == 45, "r_g(A6)", str(r_a6));

    const bool s5_int = n_g % r_s5 == 0;
    const bool a6_int = n_g % r_a6 == 0;
    b.expect(!s5_int, "L_alpha=S5", "n_g/r_g is an integer");
    b.expect(!a6_int, "L_alpha=A6", "n_g/r_g is an integer");
    b.witness("L_alpha=S5, index 21", kv({{"n_g", "105"}, {"r_g", str(r_s5)}, {"n_g/r_g", "105/25 not integral"}}));
    b.witness("L_alpha=A6, index 7", kv({{"n_g", "105"}, {"r_g", str(r_a6)}, {"n_g/r_g", "105/45 not integral"}}));

    // Counting only the 15 double transpositions that fix both 5 and 6.
    const auto naive = involution_counts(n_g, r_s5_plain);
    b.expect(naive && naive->u == 3 && naive->v() == 91, "L_alpha=S5, r_g=15", "unexpected naive chain");
    if (naive) {
        b.expect(naive->v() % 21 != 0, "L_alpha=S5, r_g=15", "v divisible by |A7:S5|");
        b.witness("L_alpha=S5, r_g=15 (untwisted only)",
                  kv({{"ratio", str(naive->ratio)}, {"u", str(naive->u)}, {"d_g", str(naive->d_g)},
                      {"v", str(naive->v())}, {"21 | v", "no"}}));
    }
    b.note("integrality eliminates both subgroups; the 10 twisted elements (transposition times (5 6)) are what make 105/r_g non-integral for S5");
    b.note("counting only the 15 untwisted elements gives ratio 7, u=3, v=91, which |A7:S5|=21 does not divide");
    return b.finish();
}

CaseResult ljunggren_scan(const CaseContext& ctx) {
    CaseBuilder b("LJUNGGREN-SCAN");
    const auto u_max = static_cast<std::uint64_t>(b.bound("u_max", kScanUMax, ctx.u_max));
    struct Tally {
        std::uint64_t prime = 0, composite = 0;
        std::vector<std::uint64_t> seven_cubed, other;
    };
    const unsigned jobs = std::max(1u, ctx.jobs);
    std::vector<Tally> tallies(jobs);
    auto work = [&](unsigned j) {
        const std::uint64_t span = (u_max + jobs - 1) / jobs;
        const std::uint64_t lo = 1 + j * span;
        const std::uint64_t hi = std::min(u_max, lo + span - 1);
        if (lo > hi) return;
        for_each_quadratic(lo, hi, [&](std::uint64_t u, std::uint64_t value, const WordFactors& f) {
            auto& t = tallies[j];
            if (f.size() != 1) ++t.composite;
            else if (f[0].second == 1) ++t.prime;
            else if (value == 343) t.seven_cubed.push_back(u);
            else t.other.push_back(u);
        });
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
        for (auto& t : pool) t.join();
    }
    Tally all;
    for (const auto& t : tallies) {
        all.prime += t.prime;
        all.composite += t.composite;
        all.seven_cubed.insert(all.seven_cubed.end(), t.seven_cubed.begin(), t.seven_cubed.end());
        all.other.insert(all.other.end(), t.other.begin(), t.other.end());
    }
    for (auto u : all.other) b.violation(kv({{"u", str(static_cast<long long>(u))}}), "u^2+u+1 is a prime power other than 7^3");
    b.expect(all.seven_cubed == std::vector<std::uint64_t>{18} || u_max < 18, "u=18",
             "7^3 witnesses: " + std::to_string(all.seven_cubed.size()));
    if (!all.seven_cubed.empty()) b.witness("u=18", "u^2+u+1 = 343 = 7^3");
    b.witness(kv({{"u", "1.." + std::to_string(u_max)}}),
              kv({{"prime", std::to_string(all.prime)}, {"composite", std::to_string(all.composite)},
                  {"7^3", std::to_string(all.seven_cubed.size())}, {"other prime power", std::to_string(all.other.size())}}));
    return b.finish();
}

CaseResult sporadic(const CaseContext&) {
    CaseBuilder b("SPORADIC");
    std::vector<std::string> without;
    for (const auto& e : sporadic_table()) {
        if (e.odd_indices.empty()) {
            without.emplace_back(e.name);
            continue;
        }
        const BigInt order{std::string(e.order)};
        for (auto idx_text : e.odd_indices) {
            const BigInt idx{std::string(idx_text)};
            const std::string where = kv({{"group", std::string(e.name)}, {"index", std::string(idx_text)}});
            b.expect(idx % 2 == 1 && order % idx == 0, where, "index is not an odd divisor of the order");
            const Factorization f = factorize(idx);
            std::string reason;
            if (idx % 9 == 0) reason = "9 divides the index";
            for (const auto& pf : f.factors)
                if (pf.prime % 3 == 2) {
                    reason = "prime " + str(pf.prime) + " = 2 mod 3 divides the index";
                    break;
                }
            b.expect(!admissible_index(idx), where, "index is admissible");
            b.witness(where, f.to_string() + ": " + reason);
        }
    }
    if (!without.empty()) b.note("no odd-index entries tabulated for: " + detail::join(without, ", "));
    return b.finish();
}

}  // namespace

std::vector<CaseCheck> frame_cases() {
    return {
        {"FRAME-5SQRT", "framework inequality", "This has no solutions.",
         "2 <= u <= 100 directly; ratio monotone on 2 <= u <= 1000", frame_5sqrt},
        {"ALT-BOUND", "alternating groups",
         "&\\implies&2^{\\lfloor\\frac{n}{2}\\rfloor}<n^4\\\\ &\\implies& n\\leq43.",
         "8 <= n <= 200; 3 <= u <= 10^4 for v < 2(n_g/r_g)^2", alt_bound},
        {"ALT-RATIO", "alternating groups", "(n-4)(n-5)}< 3$ for $n\\geq 11$", "11 <= n <= 200", alt_ratio},
        {"ALT-A7", "alternating groups", "$\\frac{n_g}{r_g}$ is not an integer",
         "all 5040 permutations of 7 points", alt_a7},
    };
}

std::vector<CaseCheck> global_cases() {
    return {
        {"LJUNGGREN-SCAN", "prime-power values", "either $p_1^a=p_1$ or $p_1^a=7^3$", "1 <= u <= 10^6",
         ljunggren_scan},
        {"SPORADIC", "sporadic groups", "divisible by $9$ or by", "tabulated odd indices of sporadic maximal subgroups",
         sporadic},
    };
}

}  // namespace planes
