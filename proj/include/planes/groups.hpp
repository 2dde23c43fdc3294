/// @file groups.hpp
/// @brief Finite simple group families: parameters, orders, p-parts and
///        parabolic indices, plus the involution class-size catalog.
#pragma once

#include "planes/exactmath.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace planes {

enum class Family {
    Alternating,
    Sporadic,
    PSL,
    PSU,
    PSp,
    POmega,
    G2,
    F4,
    E6,
    E7,
    E8,
    TwoB2,
    TwoG2,
    ThreeD4,
    TwoF4,
};

enum class Sign { None, Plus, Minus, Circ };

/// q = p^e with p prime.
struct FieldOrder {
    unsigned p = 0;
    unsigned e = 0;

    BigInt value() const;
    bool operator==(const FieldOrder&) const = default;
};

/// Tagged family with its parameters. Fields a family does not use are
/// left at their defaults.
struct GroupSpec {
    Family family = Family::Alternating;
    unsigned n = 0;
    FieldOrder q;
    Sign sign = Sign::None;
    std::string name;  // sporadic only

    static GroupSpec alternating(unsigned n);
    static GroupSpec sporadic(std::string name);
    static GroupSpec linear(unsigned n, const BigInt& q);
    static GroupSpec unitary(unsigned n, const BigInt& q);
    static GroupSpec symplectic(unsigned n, const BigInt& q);
    static GroupSpec orthogonal(unsigned n, const BigInt& q, Sign sign);
    /// G2, F4, E7, E8, 2B2, 2G2, 3D4, 2F4 (sign ignored) and E6 (sign +/-).
    static GroupSpec exceptional(Family f, const BigInt& q, Sign sign = Sign::None);

    bool is_lie_type() const;
    BigInt q_value() const { return q.value(); }
    std::string to_string() const;

    bool operator==(const GroupSpec&) const = default;
};

/// Splits q into (p, e); throws unless q is a prime power.
FieldOrder field_order(const BigInt& q);

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view token);

/// Throws std::invalid_argument when the parameters do not name a simple group.
void validate(const GroupSpec& spec);

/// Order of the simple group.
BigInt order(const GroupSpec& spec);

/// Order of the Sylow p-subgroup for the defining characteristic.
BigInt p_part(const GroupSpec& spec);

/// Largest m accepted by parabolic_index for this spec.
unsigned parabolic_rank(const GroupSpec& spec);

/// Index of the stabilizer of a totally singular m-space (classical) or of
/// the listed maximal parabolic (exceptional, m = 1 only).
BigInt parabolic_index(const GroupSpec& spec, unsigned m);

struct SporadicEntry {
    std::string_view name;
    std::string_view order;
    /// Indices of maximal subgroups of odd index, as decimal strings.
    std::vector<std::string_view> odd_indices;
};

const std::vector<SporadicEntry>& sporadic_table();

// ---------------------------------------------------------------------------
// Involution class-size catalog

/// c * q^(a*n + b). Exponents may depend on the rank parameter n.
struct Term {
    long coef = 1;
    int n_mul = 0;
    int offset = 0;

    bool operator==(const Term&) const = default;
};

using Poly = std::vector<Term>;

/// scalar_num/scalar_den * gcd(gcd_k, q + gcd_shift) * prod(numer) / prod(denom).
/// gcd_k == 0 means no gcd multiplier.
struct Formula {
    long scalar_num = 1;
    long scalar_den = 1;
    unsigned gcd_k = 0;
    int gcd_shift = 0;
    std::vector<Poly> numer;
    std::vector<Poly> denom;

    BigInt evaluate(const BigInt& q, unsigned n) const;
    std::string render() const;
};

enum class Parity { Any, Odd, Even };

/// Parameter region where a catalog entry applies.
struct Domain {
    Parity q_parity = Parity::Any;
    unsigned q_mod4 = 0;  // 0 means unconstrained
    unsigned n_min = 0;
    unsigned n_max = 0;  // 0 means unbounded
    Parity n_parity = Parity::Any;
};

struct CatalogEntry {
    std::string label;
    Family family;
    Sign sign = Sign::None;  // E6 and the E7 centralizer sign
    Domain domain;
    Formula formula;
    bool exact = true;  // false: formula is a multiple of the class size
    std::string anchor;
};

/// A catalog entry bound to concrete group parameters.
struct InvolutionClass {
    GroupSpec group;
    const CatalogEntry* entry = nullptr;
};

const std::vector<CatalogEntry>& involution_catalog();

/// True iff the entry's family, sign and domain accept the spec.
bool entry_applies(const CatalogEntry& entry, const GroupSpec& spec);

/// All catalog classes applicable to spec, in catalog order.
std::vector<InvolutionClass> classes_for(const GroupSpec& spec);

/// Throws std::invalid_argument when the spec lies outside the entry's domain.
BigInt involution_class_size(const InvolutionClass& cls);

}  // namespace planes
