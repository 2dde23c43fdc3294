/// @file exactmath.hpp
/// @brief Exact integer primitives: factorization, prime powers, q-analogs.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace planes {

using BigInt = boost::multiprecision::cpp_int;

struct PrimeFactor {
    BigInt prime;
    unsigned exponent = 0;

    bool operator==(const PrimeFactor&) const = default;
};

/// Prime factorization of a nonnegative integer. 0 and 1 carry no factors.
struct Factorization {
    BigInt value;
    std::vector<PrimeFactor> factors;

    /// Product of prime^exponent; equals value for value >= 1.
    BigInt product() const;
    /// Exponent of p in value, 0 when absent.
    unsigned exponent_of(const BigInt& p) const;
    /// Renders as "2^2*3*7*13"; "1" and "0" for the trivial cases.
    std::string to_string() const;

    bool operator==(const Factorization&) const = default;
};

/// Complete factorization of a partially factored value. The cofactor is 1
/// when the effort budget was sufficient.
struct PartialFactorization {
    Factorization known;
    BigInt cofactor = 1;
};

bool is_prime(const BigInt& n);
bool is_prime_u64(std::uint64_t n);

Factorization factorize(const BigInt& n);

/// Like factorize but gives up on a composite cofactor after roughly
/// `rho_budget` Pollard iterations per split attempt.
PartialFactorization factorize_bounded(const BigInt& n, std::uint64_t rho_budget);

std::optional<std::pair<BigInt, unsigned>> is_prime_power(const BigInt& n);

BigInt ipow(const BigInt& base, unsigned exp);
BigInt isqrt(const BigInt& n);
/// Floor of the k-th root.
BigInt iroot(const BigInt& n, unsigned k);

/// 1 + q^step + q^{2 step} + ... + q^{k step}.
BigInt geom_sum(const BigInt& q, unsigned k, unsigned step);

/// Number of m-dimensional subspaces of GF(q)^n.
BigInt gaussian_binomial(unsigned n, unsigned m, const BigInt& q);

/// Primes below the trial-division limit 10^6, ascending.
const std::vector<std::uint32_t>& small_primes();

/// All positive divisors of the factored value, ascending. Returns nullopt
/// when the divisor count exceeds `cap`.
std::optional<std::vector<BigInt>> divisors(const Factorization& f, std::size_t cap);

}  // namespace planes
