/// @file scan.hpp
/// @brief Feasibility sieve over plane orders u, with optional per-group
///        involution-counting gates. Surviving rows are "not yet
///        eliminated"; survival never asserts that a plane exists.
#pragma once

#include "planes/groups.hpp"
#include "planes/plane.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace planes {

inline constexpr std::uint64_t kScanUMax = 1'000'000;
inline constexpr std::size_t kGateDivisorCap = 100'000;

/// Prime factors of w^2 + w + 1 as (prime, exponent), ascending.
using WordFactors = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Sieves w^2 + w + 1 for lo <= w <= hi (hi <= kScanUMax) and calls
/// visit(w, value, factors) in ascending order of w.
void for_each_quadratic(std::uint64_t lo, std::uint64_t hi,
                        const std::function<void(std::uint64_t, std::uint64_t, const WordFactors&)>& visit);

enum class GateVerdict { Pass, Fail, Uncovered };

std::string_view to_string(GateVerdict g);

struct GateResult {
    GateVerdict verdict = GateVerdict::Fail;
    std::vector<std::string> reasons;  // one per catalog class, plus the floor
};

struct GateOptions {
    /// Require v to exceed the smallest implemented parabolic index.
    bool index_floor = true;
    std::size_t divisor_cap = kGateDivisorCap;
    std::uint64_t rho_budget = 2'000'000;
};

/// Per-spec data for the counting gate, computed once and reused per row.
class CandidateGate {
public:
    explicit CandidateGate(GroupSpec spec, GateOptions options = {});

    const GroupSpec& spec() const { return spec_; }
    GateResult evaluate(const BigInt& u, const BigInt& v) const;

private:
    struct ClassData {
        std::string label;
        BigInt n_g;
        bool exact = true;
        std::string uncovered;  // non-empty when the divisor budget is exceeded
    };

    GroupSpec spec_;
    GateOptions options_;
    std::vector<ClassData> classes_;
    std::optional<BigInt> floor_;
};

GateResult candidate_gate(const PlaneOrder& plane, const GroupSpec& spec, const GateOptions& options = {});

struct FilterOutcome {
    std::string name;
    bool pass = true;
    std::string detail;

    bool operator==(const FilterOutcome&) const = default;
};

struct SieveRow {
    BigInt u;
    BigInt v;
    Factorization v_factors;
    Ljunggren ljunggren = Ljunggren::PrimeValue;
    std::vector<FilterOutcome> filter_trace;
    bool survived = true;
};

/// Builds the row for one u from the factorizations of u^2 + u + 1 and
/// u^2 - u + 1 (the latter is (u-1)^2 + (u-1) + 1).
SieveRow make_row(std::uint64_t u, const WordFactors& plus, const WordFactors& minus,
                  const std::vector<CandidateGate>& gates);

/// Streams rows for u_min..u_max in ascending u. Throws std::invalid_argument
/// for u_min < 2, u_min > u_max or u_max > kScanUMax.
void sieve_orders_each(std::uint64_t u_min, std::uint64_t u_max, const std::vector<GroupSpec>& candidates,
                       unsigned jobs, const std::function<void(const SieveRow&)>& visit);

std::vector<SieveRow> sieve_orders(std::uint64_t u_min, std::uint64_t u_max,
                                   const std::vector<GroupSpec>& candidates = {}, unsigned jobs = 1);

}  // namespace planes
