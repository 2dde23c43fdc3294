#include "planes/exactmath.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace planes {

namespace mp = boost::multiprecision;

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;
constexpr std::uint64_t kTrialLimitSq = std::uint64_t{kTrialLimit} * kTrialLimit;
constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

using u64 = std::uint64_t;
using u128 = unsigned __int128;

const BigInt kU64Max = BigInt(std::numeric_limits<u64>::max());
const BigInt kU128Max = (BigInt(1) << 128) - 1;

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
    std::vector<bool> composite(limit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = u64{i} * i; j < limit; j += i) composite[j] = true;
    }
    return out;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

template <class W>
W gcd_word(W a, W b) {
    while (b) {
        W t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Montgomery arithmetic modulo an odd n with R = 2^64.
struct Mont64 {
    using word = u64;
    u64 n, ninv;
    explicit Mont64(u64 m) : n(m), ninv(0) {
        u64 inv = m;
        for (int i = 0; i < 6; ++i) inv *= 2 - m * inv;
        ninv = ~inv + 1;
    }
    u64 mul(u64 a, u64 b) const {
        const u128 t = static_cast<u128>(a) * b;
        const u64 lo = static_cast<u64>(t), hi = static_cast<u64>(t >> 64);
        const u64 m = lo * ninv;
        const u64 mh = static_cast<u64>((static_cast<u128>(m) * n) >> 64);
        const u64 carry = lo != 0;
        const u64 r = hi + mh;
        bool over = r < hi;
        const u64 r2 = r + carry;
        over = over || r2 < r;
        return (over || r2 >= n) ? r2 - n : r2;
    }
    u64 add(u64 a, u64 b) const {
        const u64 s = a + b;
        return (s < a || s >= n) ? s - n : s;
    }
};

// Montgomery arithmetic modulo an odd n with R = 2^128.
struct Mont128 {
    using word = u128;
    u128 n, ninv;
    explicit Mont128(u128 m) : n(m), ninv(0) {
        u128 inv = m;
        for (int i = 0; i < 7; ++i) inv *= 2 - m * inv;
        ninv = ~inv + 1;
    }
    static void mul_wide(u128 a, u128 b, u128& hi, u128& lo) {
        const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
        const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
        const u128 p00 = static_cast<u128>(a0) * b0, p01 = static_cast<u128>(a0) * b1;
        const u128 p10 = static_cast<u128>(a1) * b0, p11 = static_cast<u128>(a1) * b1;
        const u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
        lo = (mid << 64) | static_cast<u64>(p00);
        hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    }
    u128 mul(u128 a, u128 b) const {
        u128 hi, lo, mh, ml;
        mul_wide(a, b, hi, lo);
        const u128 m = lo * ninv;
        mul_wide(m, n, mh, ml);
        const u128 carry = lo != 0;
        const u128 r = hi + mh;
        bool over = r < hi;
        const u128 r2 = r + carry;
        over = over || r2 < r;
        return (over || r2 >= n) ? r2 - n : r2;
    }
    u128 add(u128 a, u128 b) const {
        const u128 s = a + b;
        return (s < a || s >= n) ? s - n : s;
    }
};

// Brent's variant of Pollard rho with batched gcds, run in Montgomery form.
// The iteration map picks up a unit factor, which rho does not care about.
// Returns a nontrivial factor or 0 once the budget is spent.
template <class M>
typename M::word rho_mont(typename M::word n, u64 budget) {
    using W = typename M::word;
    if (n % 2 == 0) return 2;
    const M mo(n);
    u64 spent = 0;
    for (u64 c = 1;; ++c) {
        W y = static_cast<W>(c + 1) % n, x = y, ys = y, q = 1, g = 1;
        const W cc = static_cast<W>(c) % n;
        auto f = [&](W z) { return mo.add(mo.mul(z, z), cc); };
        u64 r = 1;
        constexpr u64 batch = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                const u64 lim = std::min(batch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mo.mul(q, x > y ? x - y : y - x);
                }
                g = gcd_word<W>(q, n);
                k += lim;
            }
            spent += 2 * r;
            r *= 2;
            if (g == 1 && spent > budget) return 0;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd_word<W>(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
        if (spent > budget) return 0;
    }
}

// Same algorithm on arbitrary-precision integers for moduli above 2^128.
BigInt rho_big(const BigInt& n, u64 budget) {
    if (n % 2 == 0) return 2;
    u64 spent = 0;
    for (u64 c = 1;; ++c) {
        BigInt y = BigInt(c + 1) % n, x = y, ys = y, q = 1, g = 1;
        auto f = [&](const BigInt& z) { return BigInt((z * z + c) % n); };
        auto dist = [](const BigInt& a, const BigInt& b) { return a > b ? BigInt(a - b) : BigInt(b - a); };
        u64 r = 1;
        constexpr u64 batch = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                const u64 lim = std::min(batch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = f(y);
                    q = q * dist(x, y) % n;
                }
                g = mp::gcd(q, n);
                k += lim;
            }
            spent += 2 * r;
            r *= 2;
            if (g == 1 && spent > budget) return 0;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = mp::gcd(dist(x, ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
        if (spent > budget) return 0;
    }
}

bool mr_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Splits a composite with no factor below the trial limit.
BigInt split_composite(const BigInt& n, u64 budget) {
    if (n <= kU64Max) return BigInt(rho_mont<Mont64>(static_cast<u64>(n), budget));
    if (n <= kU128Max) {
        const u128 m = (static_cast<u128>(static_cast<u64>(n >> 64)) << 64) | static_cast<u64>(n & kU64Max);
        const u128 d = rho_mont<Mont128>(m, budget);
        return (BigInt(static_cast<u64>(d >> 64)) << 64) | BigInt(static_cast<u64>(d));
    }
    return rho_big(n, budget);
}

// Factors n, which has no prime factor below the trial limit, into `out`.
// Returns the unsplit composite part (1 on success).
BigInt factor_large(const BigInt& n, u64 budget, std::map<BigInt, unsigned>& out) {
    if (n == 1) return 1;
    if (n < kTrialLimitSq || is_prime(n)) {
        ++out[n];
        return 1;
    }
    BigInt d = split_composite(n, budget);
    if (d == 0) return n;
    BigInt rest = factor_large(d, budget, out);
    rest *= factor_large(n / d, budget, out);
    return rest;
}

PartialFactorization factor_impl(const BigInt& n, u64 budget) {
    PartialFactorization res;
    res.known.value = n;
    if (n < 2) return res;
    std::map<BigInt, unsigned> acc;
    BigInt rest;
    if (n <= kU64Max) {
        u64 m = static_cast<u64>(n);
        for (std::uint32_t p : small_primes()) {
            if (u64{p} * p > m) break;
            if (m % p) continue;
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            acc[p] = e;
        }
        rest = m;
    } else {
        rest = n;
        for (std::uint32_t p : small_primes()) {
            if (BigInt(p) * p > rest) break;
            if (static_cast<std::uint32_t>(rest % p) != 0) continue;
            unsigned e = 0;
            while (static_cast<std::uint32_t>(rest % p) == 0) {
                rest /= p;
                ++e;
            }
            acc[p] = e;
        }
    }
    res.cofactor = factor_large(rest, budget, acc);
    for (auto& [p, e] : acc) res.known.factors.push_back({p, e});
    return res;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = sieve_primes(kTrialLimit);
    return primes;
}

bool is_prime_u64(std::uint64_t n) { return mr_u64(n); }

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n <= kU64Max) return mr_u64(static_cast<u64>(n));
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
        if (static_cast<std::uint32_t>(n % p) == 0) return false;
    }
    // Fixed seed keeps the verdict reproducible.
    std::mt19937_64 gen(0x5eed);
    return mp::miller_rabin_test(n, 32, gen);
}

BigInt Factorization::product() const {
    BigInt r = 1;
    for (const auto& f : factors) r *= ipow(f.prime, f.exponent);
    return r;
}

unsigned Factorization::exponent_of(const BigInt& p) const {
    for (const auto& f : factors) {
        if (f.prime == p) return f.exponent;
    }
    return 0;
}

std::string Factorization::to_string() const {
    if (factors.empty()) return value.str();
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << '*';
        os << factors[i].prime;
        if (factors[i].exponent > 1) os << '^' << factors[i].exponent;
    }
    return os.str();
}

Factorization factorize(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("factorize: negative input");
    return factor_impl(n, kUnbounded).known;
}

PartialFactorization factorize_bounded(const BigInt& n, std::uint64_t rho_budget) {
    if (n < 0) throw std::invalid_argument("factorize: negative input");
    return factor_impl(n, rho_budget);
}

std::optional<std::pair<BigInt, unsigned>> is_prime_power(const BigInt& n) {
    if (n < 2) return std::nullopt;
    if (n <= kU64Max) {
        Factorization f = factorize(n);
        if (f.factors.size() != 1) return std::nullopt;
        return std::make_pair(f.factors[0].prime, f.factors[0].exponent);
    }
    const unsigned bits = static_cast<unsigned>(mp::msb(n)) + 1;
    for (unsigned k = bits; k >= 1; --k) {
        BigInt r = iroot(n, k);
        if (r < 2 || ipow(r, k) != n) continue;
        if (is_prime(r)) return std::make_pair(r, k);
        return std::nullopt;
    }
    return std::nullopt;
}

BigInt ipow(const BigInt& base, unsigned exp) { return mp::pow(base, exp); }

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    return mp::sqrt(n);
}

BigInt iroot(const BigInt& n, unsigned k) {
    if (n < 0 || k == 0) throw std::invalid_argument("iroot: bad input");
    if (k == 1 || n < 2) return n;
    if (k == 2) return isqrt(n);
    const unsigned bits = static_cast<unsigned>(mp::msb(n)) + 1;
    if (k >= bits) return 1;
    BigInt x = BigInt(1) << ((bits + k - 1) / k);
    for (;;) {
        BigInt y = ((k - 1) * x + n / ipow(x, k - 1)) / k;
        if (y >= x) break;
        x = y;
    }
    while (ipow(x + 1, k) <= n) ++x;
    while (ipow(x, k) > n) --x;
    return x;
}

BigInt geom_sum(const BigInt& q, unsigned k, unsigned step) {
    if (step == 0) throw std::invalid_argument("geom_sum: step must be positive");
    const BigInt qs = ipow(q, step);
    BigInt term = 1, sum = 0;
    for (unsigned i = 0; i <= k; ++i) {
        sum += term;
        term *= qs;
    }
    return sum;
}

BigInt gaussian_binomial(unsigned n, unsigned m, const BigInt& q) {
    if (m > n) throw std::invalid_argument("gaussian_binomial: m > n");
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q < 2");
    m = std::min(m, n - m);
    BigInt r = 1;
    // After step i the running value is [n, i+1]_q, so each division is exact.
    for (unsigned i = 0; i < m; ++i) {
        r *= ipow(q, n - i) - 1;
        r /= ipow(q, i + 1) - 1;
    }
    return r;
}

std::optional<std::vector<BigInt>> divisors(const Factorization& f, std::size_t cap) {
    if (f.value == 0) throw std::invalid_argument("divisors: zero has no finite divisor set");
    std::size_t count = 1;
    for (const auto& pf : f.factors) {
        if (count > cap / (pf.exponent + 1)) return std::nullopt;
        count *= pf.exponent + 1;
    }
    if (count > cap) return std::nullopt;
    std::vector<BigInt> ds{1};
    ds.reserve(count);
    for (const auto& pf : f.factors) {
        const std::size_t base = ds.size();
        BigInt pk = 1;
        for (unsigned e = 1; e <= pf.exponent; ++e) {
            pk *= pf.prime;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace planes
