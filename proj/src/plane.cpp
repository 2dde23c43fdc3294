#include "planes/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace planes {

BigInt plane_points(const BigInt& u) {
    const BigInt x = u * u;
    return x * x + x + 1;
}

PlaneOrder plane_order(const BigInt& u) {
    if (u < 2) throw std::invalid_argument("plane_order: u must be at least 2");
    PlaneOrder p;
    p.u = u;
    p.x = u * u;
    p.v = p.x * p.x + p.x + 1;
    p.factor_plus = p.x + u + 1;
    p.factor_minus = p.x - u + 1;
    p.v_factors = factorize(p.v);
    return p;
}

bool admissible_factorization(const Factorization& f) {
    if (f.value < 1) throw std::invalid_argument("admissible_index: n must be positive");
    return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimeFactor& pf) {
        if (pf.prime == 3) return pf.exponent <= 1;
        return pf.prime % 3 == 1;
    });
}

bool admissible_index(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("admissible_index: n must be positive");
    if (n % 9 == 0) return false;
    BigInt m = n % 3 == 0 ? BigInt(n / 3) : n;
    for (std::uint32_t p : small_primes()) {
        if (p == 3) continue;
        if (BigInt(p) * p > m) return m == 1 || m % 3 == 1;  // m is 1 or prime
        if (m % p != 0) continue;
        if (p % 3 == 2) return false;
        while (m % p == 0) m /= p;
    }
    if (m == 1) return true;
    // A product of primes that are all 1 mod 3 is itself 1 mod 3.
    if (m % 3 == 2) return false;
    return admissible_factorization(factorize(m));
}

std::string_view to_string(Ljunggren verdict) {
    switch (verdict) {
        case Ljunggren::PrimeValue: return "PrimeValue";
        case Ljunggren::SevenCubed: return "SevenCubed";
        case Ljunggren::OtherPrimePower: return "OtherPrimePower";
        case Ljunggren::Composite: return "Composite";
    }
    return "?";
}

Ljunggren ljunggren_from_factors(const Factorization& f) {
    if (f.factors.size() != 1) return Ljunggren::Composite;
    if (f.factors[0].exponent == 1) return Ljunggren::PrimeValue;
    if (f.value == 343) return Ljunggren::SevenCubed;
    return Ljunggren::OtherPrimePower;
}

Ljunggren ljunggren_classify(const BigInt& u) {
    if (u < 1) throw std::invalid_argument("ljunggren_classify: u must be at least 1");
    return ljunggren_from_factors(factorize(u * u + u + 1));
}

bool kantor_inequality_holds(const BigInt& p, unsigned a, const BigInt& m, const BigInt& u) {
    if (u < 2) throw std::invalid_argument("kantor: u must be at least 2");
    if (a < 2) throw std::invalid_argument("kantor: exponent must be at least 2");
    if (m < 1) throw std::invalid_argument("kantor: m must be positive");
    if (!is_prime(p)) throw std::invalid_argument("kantor: p must be prime");
    if (m % p == 0) throw std::invalid_argument("kantor: p divides m");
    const BigInt pa = ipow(p, a);
    if (pa * m != plane_points(u)) throw std::invalid_argument("kantor: p^a * m != v(u)");
    if (m > 8 * pa) return true;
    const BigInt x = u * u;
    return pa == 343 && (x + u + 1 == 343 || x - u + 1 == 343);
}

std::optional<BigInt> solve_minus_form(const BigInt& ratio) {
    // u^2 - u + 1 = r  <=>  (2u - 1)^2 = 4r - 3
    if (ratio < 3) return std::nullopt;
    const BigInt disc = 4 * ratio - 3;
    const BigInt s = isqrt(disc);
    if (s * s != disc) return std::nullopt;
    const BigInt u = (s + 1) / 2;
    if (u < 2) return std::nullopt;
    return u;
}

std::optional<BigInt> solve_plus_form(const BigInt& value) {
    // u^2 + u + 1 = w  <=>  (2u + 1)^2 = 4w - 3
    if (value < 3) return std::nullopt;
    const BigInt disc = 4 * value - 3;
    const BigInt s = isqrt(disc);
    if (s * s != disc) return std::nullopt;
    return (s - 1) / 2;
}

std::optional<InvolutionCount> involution_counts(const BigInt& n_g, const BigInt& r_g) {
    if (n_g < 1 || r_g < 1) throw std::invalid_argument("involution_counts: inputs must be positive");
    if (n_g % r_g != 0) return std::nullopt;
    const BigInt ratio = n_g / r_g;
    auto u = solve_minus_form(ratio);
    if (!u) return std::nullopt;
    InvolutionCount c;
    c.n_g = n_g;
    c.r_g = r_g;
    c.ratio = ratio;
    c.u = *u;
    c.d_g = *u * *u + *u + 1;
    return c;
}

BigInt largest_prime_part_bound(unsigned /*c*/, const BigInt& p, unsigned a, const BigInt& m) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("largest_prime_part_bound: p must be an odd prime");
    if (m < 1) throw std::invalid_argument("largest_prime_part_bound: m must be positive");
    if (m % 2 == 0) throw std::invalid_argument("largest_prime_part_bound: m must be odd");
    if (m % p == 0) throw std::invalid_argument("largest_prime_part_bound: p divides m");
    const BigInt pa = ipow(p, a);
    const BigInt other = m + 2 * isqrt(m) + 2;
    return std::max(pa, other);
}

}  // namespace planes
