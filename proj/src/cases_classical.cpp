// Unitary, symplectic and odd-dimensional orthogonal groups.
#include "case_util.hpp"
#include "planes/groups.hpp"
#include "planes/ledger.hpp"
#include "planes/plane.hpp"

#include <set>

namespace planes {

using detail::kv;
using detail::str;

namespace {

// Why an index fails admissibility, found without a full factorization.
std::string obstruction(const BigInt& n) {
    if (n % 9 == 0) return "9 divides";
    for (std::uint32_t p : small_primes())
        if (p % 3 == 2 && n % p == 0) return std::to_string(p) + " divides";
    BigInt m = n;
    if (m % 3 == 0) m /= 3;
    for (std::uint32_t p : small_primes())
        while (p != 3 && m % p == 0) m /= p;
    return "cofactor " + str(m % 3) + " mod 3";
}

CaseResult u_parab_mod(const CaseContext& ctx) {
    CaseBuilder b("U-PARAB-MOD");
    const BigInt q_cap = b.bound("q_max", 512, ctx.q_max);
    std::vector<std::string> passes, misses;
    for (unsigned a = 1; a <= 9; a += 2) {
        const BigInt q = ipow(2, a);
        if (q > q_cap) break;
        for (unsigned n = 3; n <= 50; ++n) {
            if (n == 3 && q == 2) continue;  // PSU(3,2) is solvable
            const BigInt idx = parabolic_index(GroupSpec::unitary(n, q), 1);
            const std::string at = "(q=" + str(q) + ",n=" + std::to_string(n) + ")";
            if (admissible_index(idx)) {
                passes.push_back(at);
                b.expect(n % 12 == 2, at, "admissible index with n not 2 mod 12");
            } else if (n % 12 == 2) {
                misses.push_back(at + " " + obstruction(idx));
            }
        }
    }
    b.witness("admissible", "{" + detail::join(passes) + "}");
    b.witness("n = 2 mod 12, not admissible", "{" + detail::join(misses, "; ") + "}");
    b.note("admissibility implies n = 2 mod 12 on the whole window; the converse fails, see the second witness");
    return b.finish();
}

CaseResult sp_parab(const CaseContext& ctx) {
    CaseBuilder b("SP-PARAB");
    const BigInt q_cap = b.bound("q_max", 10000, ctx.q_max);
    for (BigInt q = 2; q <= q_cap; ++q) {
        if (q % 3 == 0) continue;
        b.expect((q * q + 1) % 3 == 2, kv({{"q", str(q)}}), "q^2+1 not 2 mod 3");
    }
    // The divisibility itself, on small parameters.
    long long checked = 0;
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        if (q > q_cap) continue;
        for (unsigned n = 4; n <= 20; n += 2) {
            if (n == 4 && q == 2) continue;
            const GroupSpec s = GroupSpec::symplectic(n, q);
            for (unsigned m = 2; m <= n / 2; ++m) {
                const BigInt idx = parabolic_index(s, m);
                b.expect(idx % (q * q + 1) == 0, kv({{"q", str(q)}, {"n", str(n)}, {"m", str(m)}}),
                         "q^2+1 does not divide |PSp:P_m|");
                ++checked;
            }
        }
    }
    b.witness("q <= " + str(q_cap) + ", 3 does not divide q", "q^2+1 = 2 mod 3");
    b.witness("q in {2,3,4,5,7,8,9}, n <= 20", std::to_string(checked) + " indices divisible by q^2+1");
    return b.finish();
}

CaseResult sp_n6(const CaseContext&) {
    CaseBuilder b("SP-N6");
    for (unsigned qv : {7u, 13u, 19u, 25u, 31u}) {
        const BigInt q = qv;
        const std::string at = kv({{"q", str(q)}});
        const BigInt q2 = q * q, q4 = q2 * q2;
        const BigInt N = q4 + q2 + 1;
        const BigInt index = q4 * N;
        const BigInt rmax = 2 * q2 * (q2 + 1);
        // p-part at least q^4 with an odd ratio <= rmax leaves only q^4.
        b.expect(q4 <= rmax && 3 * q4 > rmax, at, "q^4 is not the only odd multiple below the bound");
        b.expect(!solve_minus_form(q4), at, "q^4 = u^2-u+1 solvable");
        // ratio = q^4+q^2+1: u = q^2+1 and q^4 does not divide d_g.
        const auto u = solve_minus_form(N);
        b.expect(u && *u == q2 + 1, at, "q^4+q^2+1 is not (q^2+1)^2-(q^2+1)+1");
        if (u) {
            const BigInt d = *u * *u + *u + 1;
            b.expect(d == q4 + 3 * q2 + 3 && d % q4 != 0 && (N * d) % index != 0, at, "d_g divisible by q^4");
            b.witness(at + ", ratio=q^4+q^2+1", kv({{"u", str(*u)}, {"d_g", str(d)}, {"d_g mod q^4", str(d % q4)}}));
        }
        // Every proper divisor of N is at most N/3 < N/2; each gives v below the index.
        const BigInt third = N / 3;
        b.expect(third * (third + 2 * isqrt(third) + 2) < index, at, "crude bound reaches the index");
        const auto divs = divisors(factorize(N), 100000);
        std::size_t representable = 0;
        if (divs) {
            for (const BigInt& r : *divs) {
                if (r == N) continue;
                const auto w = solve_minus_form(r);
                if (!w) continue;
                ++representable;
                b.expect(2 * r < N && plane_points(*w) < index, at + ", ratio=" + str(r), "v reaches the index");
            }
        }
        b.witness(at, kv({{"|L:L_alpha|", str(index)}, {"proper divisors u^2-u+1", std::to_string(representable)}}));
    }
    return b.finish();
}

CaseResult sp_highrank(const CaseContext& ctx) {
    CaseBuilder b("SP-HIGHRANK");
    const BigInt q_cap = b.bound("q_max", 1024, ctx.q_max);
    std::size_t pairs = 0;
    for (const BigInt& q : prime_powers_up_to(q_cap)) {
        if (q % 2 == 0) continue;
        const BigInt q2 = q * q;
        const BigInt rmax = 2 * q2 * (q2 + 1);
        const BigInt vmax = 8 * q2 * q2 * (q2 + 1) * (q2 + 1);
        b.expect(rmax * (rmax + 2 * isqrt(rmax) + 2) <= vmax, kv({{"q", str(q)}}), "v bound above 8q^4(q^2+1)^2");
        for (unsigned n = 8; n <= 50; n += 2) {
            const BigInt index = ipow(q, n - 2) * geom_sum(q, (n - 2) / 2, 2);
            b.expect(vmax < index, kv({{"q", str(q)}, {"n", str(n)}}), "8q^4(q^2+1)^2 reaches the index");
            ++pairs;
        }
        const BigInt index6 = ipow(q, 4) * geom_sum(q, 2, 2);
        b.expect(vmax >= index6, kv({{"q", str(q)}, {"n", "6"}}), "bound already decides n = 6");
    }
    b.witness("odd prime powers q <= " + str(q_cap) + ", even 8 <= n <= 50",
              std::to_string(pairs) + " pairs with 8q^4(q^2+1)^2 < q^(n-2)(q^(n-2)+...+q^2+1)");
    b.witness("n=6", "bound does not decide; handled by SP-N6");
    return b.finish();
}

CaseResult oo_contra(const CaseContext&) {
    CaseBuilder b("OO-CONTRA");
    for (unsigned qv : {7u, 13u}) {
        const BigInt q = qv;
        for (unsigned n = 7; n <= 15; n += 2) {
            const unsigned k = (n - 1) / 2;
            const std::string at = kv({{"q", str(q)}, {"n", std::to_string(n)}});
            for (int eta : {1, -1})
                for (int zeta : {1, -1}) {
                    // n_h / r_h <= q(q^(n-1)-1) / ((q^(k-1)+eta zeta)(q^k-eta)) <= q(q+1).
                    const BigInt den = (ipow(q, k - 1) + eta * zeta) * (ipow(q, k) - eta);
                    b.expect(q * (ipow(q, n - 1) - 1) <= q * (q + 1) * den,
                             at + ", eta=" + std::to_string(eta) + ", zeta=" + std::to_string(zeta),
                             "n_h/r_h exceeds q(q+1)");
                }
            const BigInt r = q * (q + 1);
            const BigInt vmax = 2 * q * q * (q + 1) * (q + 1);
            b.expect(r * (r + 2 * isqrt(r) + 2) <= vmax, at, "v bound above 2q^2(q+1)^2");
            BigInt smallest;
            for (int eta : {1, -1}) {
                // |L:L_alpha| = (1/2) q^k (q^k + eta).
                const BigInt twice = ipow(q, k) * (ipow(q, k) + eta);
                b.expect(2 * vmax < twice, at + ", eta=" + std::to_string(eta), "2q^2(q+1)^2 reaches |L:L_alpha|");
                if (smallest == 0 || twice / 2 < smallest) smallest = twice / 2;
            }
            b.witness(at, kv({{"v_max", str(vmax)}, {"min |L:L_alpha|", str(smallest)}}));
        }
    }
    return b.finish();
}

}  // namespace

std::vector<CaseCheck> classical_cases() {
    return {
        {"U-PARAB-MOD", "unitary groups, parabolics", "$n$ is even and $n\\equiv 2(12)$",
         "q = 2^a, a odd <= 9, 3 <= n <= 50", u_parab_mod},
        {"SP-PARAB", "symplectic groups, parabolics", "divisible by $q^2+1$ for all $m>1$",
         "q <= 10^4 prime to 3; indices for q <= 9, n <= 20", sp_parab},
        {"SP-N6", "symplectic groups, dimension six", "If $\\frac{n_g}{r_g}=q^4+q^2+1$ then",
         "n = 6, q in {7,13,19,25,31}", sp_n6},
        {"SP-HIGHRANK", "symplectic groups, large dimension", "which is a contradiction for $n>6$",
         "odd prime powers q <= 1024, even 8 <= n <= 50", sp_highrank},
        {"OO-CONTRA", "orthogonal groups, odd dimension", "$\\frac{n_h}{r_h}\\leq q(q+1)$ and so",
         "odd 7 <= n <= 15, q in {7,13}", oo_contra},
    };
}

}  // namespace planes
