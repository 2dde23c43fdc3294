// Brute-force oracles shared by the unit tests and the acceptance run.
#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// GF(p) or GF(p^2) = GF(p)[x]/(x^2 - c1 x - c0), elements a + b x encoded as a + b p.
struct SmallField {
    int q = 0;
    std::vector<std::vector<int>> add, mul;

    SmallField(int p, int e, int c0 = 0, int c1 = 0) : q(e == 1 ? p : p * p) {
        add.assign(q, std::vector<int>(q));
        mul.assign(q, std::vector<int>(q));
        for (int s = 0; s < q; ++s)
            for (int t = 0; t < q; ++t) {
                const int a = s % p, b = s / p, c = t % p, d = t / p;
                add[s][t] = (a + c) % p + p * ((b + d) % p) * (e == 2);
                // (a + bx)(c + dx) = ac + (ad + bc)x + bd x^2, x^2 = c0 + c1 x
                const int bd = b * d;
                const int lo = (a * c + bd * c0) % p;
                const int hi = (a * d + b * c + bd * c1) % p;
                mul[s][t] = lo + p * hi * (e == 2);
            }
    }
};

using Matrix = std::vector<int>;  // row-major n x n

inline Matrix multiply(const SmallField& F, const Matrix& x, const Matrix& y, int n) {
    Matrix z(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int k = 0; k < n; ++k) acc = F.add[acc][F.mul[x[i * n + k]][y[k * n + j]]];
            z[i * n + j] = acc;
        }
    return z;
}

inline int neg(const SmallField& F, int a) {
    for (int b = 0; b < F.q; ++b)
        if (F.add[a][b] == 0) return b;
    return -1;
}

inline int det(const SmallField& F, const Matrix& m, int n) {
    if (n == 2) return F.add[F.mul[m[0]][m[3]]][neg(F, F.mul[m[1]][m[2]])];
    int acc = 0;
    for (int j = 0; j < 3; ++j) {
        const int a = m[(j + 1) % 3 + 3], b = m[(j + 2) % 3 + 6], c = m[(j + 2) % 3 + 3], d = m[(j + 1) % 3 + 6];
        const int minor = F.add[F.mul[a][b]][neg(F, F.mul[c][d])];
        acc = F.add[acc][F.mul[m[j]][minor]];
    }
    return acc;
}

struct Census {
    long long psl_order = 0;
    long long involutions = 0;
};

// |PSL(n,q)| and its involution count by enumerating every n x n matrix.
inline Census enumerate_psl(const SmallField& F, int n) {
    long long sl = 0, centre = 0, square_central = 0;
    std::vector<int> scalars;
    Matrix m(n * n, 0);
    const auto is_scalar = [&](const Matrix& x) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j ? x[i * n + j] != 0 : x[i * n + j] != x[0]) return false;
        return true;
    };
    long long total = 1;
    for (int i = 0; i < n * n; ++i) total *= F.q;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < n * n; ++i, c /= F.q) m[i] = static_cast<int>(c % F.q);
        if (det(F, m, n) != 1) continue;
        ++sl;
        if (is_scalar(m)) {
            ++centre;
            continue;
        }
        if (is_scalar(multiply(F, m, m, n))) ++square_central;
    }
    return {sl / centre, square_central / centre};
}

// Number of m-dimensional subspaces of GF(2)^n, by closing spans of bitmasks.
inline std::size_t count_subspaces_gf2(unsigned n, unsigned m) {
    std::set<std::vector<unsigned>> seen;
    const unsigned total = 1u << n;
    std::vector<unsigned> basis;
    const auto rec = [&](auto&& self, unsigned start) -> void {
        if (basis.size() == m) {
            std::vector<unsigned> span{0};
            for (unsigned b : basis) {
                const std::size_t k = span.size();
                for (std::size_t i = 0; i < k; ++i) span.push_back(span[i] ^ b);
            }
            std::sort(span.begin(), span.end());
            if (std::adjacent_find(span.begin(), span.end()) == span.end()) seen.insert(span);
            return;
        }
        for (unsigned v = start; v < total; ++v) {
            basis.push_back(v);
            self(self, v + 1);
            basis.pop_back();
        }
    };
    rec(rec, 1);
    return seen.size();
}

struct A7Census {
    int order = 0, s5_order = 0, a6_order = 0;
    int n_g = 0, r_s5 = 0, r_a6 = 0;
};

// Double transpositions in A7 and in its subgroups S5 (even permutations
// stabilizing {5,6}) and A6 (fixing 6).
inline A7Census census_a7() {
    A7Census c;
    std::array<int, 7> p{};
    std::iota(p.begin(), p.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) inversions += p[i] > p[j];
        if (inversions % 2) continue;
        ++c.order;
        bool involution = true, identity = true;
        for (int i = 0; i < 7; ++i) {
            involution &= p[p[i]] == i;
            identity &= p[i] == i;
        }
        const bool in_s5 = (p[5] == 5 || p[5] == 6) && (p[6] == 5 || p[6] == 6);
        const bool in_a6 = p[6] == 6;
        c.s5_order += in_s5;
        c.a6_order += in_a6;
        if (!involution || identity) continue;
        ++c.n_g;
        c.r_s5 += in_s5;
        c.r_a6 += in_a6;
    } while (std::next_permutation(p.begin(), p.end()));
    return c;
}

}  // namespace oracle
