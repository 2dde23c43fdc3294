/// @file plane.hpp
/// @brief Plane parameters (u, x = u^2, v = x^2 + x + 1) and the counting
///        and divisibility predicates that act on them.
#pragma once

#include "planes/exactmath.hpp"

#include <optional>
#include <string_view>

namespace planes {

struct PlaneOrder {
    BigInt u;
    BigInt x;
    BigInt v;
    Factorization v_factors;
    BigInt factor_plus;   // u^2 + u + 1
    BigInt factor_minus;  // u^2 - u + 1
};

/// Throws std::invalid_argument for u < 2.
PlaneOrder plane_order(const BigInt& u);

/// v(u) = u^4 + u^2 + 1 without factoring.
BigInt plane_points(const BigInt& u);

/// True iff every prime divisor is 3 or 1 mod 3 and 9 does not divide n.
bool admissible_index(const BigInt& n);
bool admissible_factorization(const Factorization& f);

enum class Ljunggren { PrimeValue, SevenCubed, OtherPrimePower, Composite };

std::string_view to_string(Ljunggren verdict);

/// Classifies u^2 + u + 1 by factoring it.
Ljunggren ljunggren_classify(const BigInt& u);
/// Same classification from an existing factorization of u^2 + u + 1.
Ljunggren ljunggren_from_factors(const Factorization& f);

/// Requires p^a * m == v(u), p prime, a >= 2, p not dividing m.
bool kantor_inequality_holds(const BigInt& p, unsigned a, const BigInt& m, const BigInt& u);

struct InvolutionCount {
    BigInt n_g;
    BigInt r_g;
    BigInt ratio;
    BigInt u;
    BigInt d_g;

    BigInt v() const { return ratio * d_g; }
};

/// The u >= 2 with u^2 - u + 1 == ratio, if any.
std::optional<BigInt> solve_minus_form(const BigInt& ratio);
/// The u >= 1 with u^2 + u + 1 == value, if any.
std::optional<BigInt> solve_plus_form(const BigInt& value);

std::optional<InvolutionCount> involution_counts(const BigInt& n_g, const BigInt& r_g);

/// max(p^a, m + 2 floor(sqrt m) + 2) for n_g = 2^c p^a m, gcd(m, 2p) = 1.
BigInt largest_prime_part_bound(unsigned c, const BigInt& p, unsigned a, const BigInt& m);

}  // namespace planes
