#include "planes/groups.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace planes {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

// prod over i in degrees of (q^i - 1)
BigInt cyclo_product(const BigInt& q, std::initializer_list<unsigned> degrees) {
    BigInt r = 1;
    for (unsigned d : degrees) r *= ipow(q, d) - 1;
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// Number of totally isotropic m-spaces in the unitary space of dimension n.
BigInt unitary_isotropic(unsigned n, unsigned m, const BigInt& q) {
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < m; ++i) {
        const unsigned a = n - 2 * i, b = n - 2 * i - 1;
        num *= (ipow(q, a) - (a % 2 ? -1 : 1)) * (ipow(q, b) - (b % 2 ? -1 : 1));
        den *= ipow(q, 2 * (i + 1)) - 1;
    }
    return num / den;
}

// Totally singular m-spaces in a symplectic or odd orthogonal space of
// dimension 2k or 2k+1.
BigInt symplectic_isotropic(unsigned k, unsigned m, const BigInt& q) {
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < m; ++i) {
        num *= ipow(q, 2 * (k - i)) - 1;
        den *= ipow(q, i + 1) - 1;
    }
    return num / den;
}

// Totally singular m-spaces in the even orthogonal space of dimension 2k and
// type eps (+1 or -1).
BigInt orthogonal_isotropic(unsigned k, unsigned m, const BigInt& q, int eps) {
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < m; ++i) {
        num *= (ipow(q, k - i) - eps) * (ipow(q, k - i - 1) + eps);
        den *= ipow(q, i + 1) - 1;
    }
    return num / den;
}

std::string sign_token(Sign s) {
    switch (s) {
        case Sign::Plus: return "+";
        case Sign::Minus: return "-";
        case Sign::Circ: return "o";
        case Sign::None: return "";
    }
    return "";
}

}  // namespace

BigInt FieldOrder::value() const { return ipow(BigInt(p), e); }

FieldOrder field_order(const BigInt& q) {
    auto pp = is_prime_power(q);
    if (!pp) bad("q = " + q.str() + " is not a prime power");
    if (pp->first > 1'000'000'000) bad("characteristic too large");
    return FieldOrder{static_cast<unsigned>(pp->first), pp->second};
}

GroupSpec GroupSpec::alternating(unsigned n) {
    GroupSpec s;
    s.family = Family::Alternating;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::sporadic(std::string name) {
    GroupSpec s;
    s.family = Family::Sporadic;
    s.name = std::move(name);
    return s;
}

GroupSpec GroupSpec::linear(unsigned n, const BigInt& q) {
    GroupSpec s;
    s.family = Family::PSL;
    s.n = n;
    s.q = field_order(q);
    return s;
}

GroupSpec GroupSpec::unitary(unsigned n, const BigInt& q) {
    GroupSpec s = linear(n, q);
    s.family = Family::PSU;
    return s;
}

GroupSpec GroupSpec::symplectic(unsigned n, const BigInt& q) {
    GroupSpec s = linear(n, q);
    s.family = Family::PSp;
    return s;
}

GroupSpec GroupSpec::orthogonal(unsigned n, const BigInt& q, Sign sign) {
    GroupSpec s = linear(n, q);
    s.family = Family::POmega;
    s.sign = sign;
    return s;
}

GroupSpec GroupSpec::exceptional(Family f, const BigInt& q, Sign sign) {
    GroupSpec s;
    s.family = f;
    s.q = field_order(q);
    s.sign = f == Family::E6 ? sign : Sign::None;
    return s;
}

bool GroupSpec::is_lie_type() const { return family != Family::Alternating && family != Family::Sporadic; }

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Alternating: return "A";
        case Family::Sporadic: return "SPOR";
        case Family::PSL: return "PSL";
        case Family::PSU: return "PSU";
        case Family::PSp: return "PSp";
        case Family::POmega: return "POmega";
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::TwoB2: return "2B2";
        case Family::TwoG2: return "2G2";
        case Family::ThreeD4: return "3D4";
        case Family::TwoF4: return "2F4";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view token) {
    static constexpr std::array all{Family::Alternating, Family::Sporadic, Family::PSL,   Family::PSU,
                                    Family::PSp,         Family::POmega,   Family::G2,    Family::F4,
                                    Family::E6,          Family::E7,       Family::E8,    Family::TwoB2,
                                    Family::TwoG2,       Family::ThreeD4,  Family::TwoF4};
    for (Family f : all) {
        if (family_name(f) == token) return f;
    }
    return std::nullopt;
}

std::string GroupSpec::to_string() const {
    std::ostringstream os;
    os << family_name(family);
    switch (family) {
        case Family::Alternating: os << '(' << n << ')'; break;
        case Family::Sporadic: os << '(' << name << ')'; break;
        case Family::PSL:
        case Family::PSU:
        case Family::PSp: os << '(' << n << ',' << q.value() << ')'; break;
        case Family::POmega: os << sign_token(sign) << '(' << n << ',' << q.value() << ')'; break;
        case Family::E6: os << sign_token(sign) << '(' << q.value() << ')'; break;
        default: os << '(' << q.value() << ')'; break;
    }
    return os.str();
}

void validate(const GroupSpec& s) {
    const auto need_q = [&] {
        if (s.q.e == 0 || !is_prime(BigInt(s.q.p))) bad(s.to_string() + ": q must be a prime power");
    };
    switch (s.family) {
        case Family::Alternating:
            if (s.n < 5) bad("A(n) needs n >= 5");
            return;
        case Family::Sporadic: {
            const auto& t = sporadic_table();
            if (std::none_of(t.begin(), t.end(), [&](const SporadicEntry& e) { return e.name == s.name; })) {
                bad("unknown sporadic group '" + s.name + "'");
            }
            return;
        }
        case Family::PSL:
            need_q();
            if (s.n < 2) bad("PSL needs n >= 2");
            if (s.n == 2 && s.q.p <= 3 && s.q.e == 1) bad("PSL(2,2) and PSL(2,3) are not simple");
            return;
        case Family::PSU:
            need_q();
            if (s.n < 3) bad("PSU needs n >= 3");
            if (s.n == 3 && s.q.p == 2 && s.q.e == 1) bad("PSU(3,2) is not simple");
            return;
        case Family::PSp:
            need_q();
            if (s.n < 4 || s.n % 2) bad("PSp needs even n >= 4");
            if (s.n == 4 && s.q.p == 2 && s.q.e == 1) bad("PSp(4,2) is not simple");
            return;
        case Family::POmega:
            need_q();
            if (s.sign == Sign::Circ) {
                if (s.n < 7 || s.n % 2 == 0) bad("POmega o needs odd n >= 7");
                if (s.q.p == 2) bad("POmega o needs odd q");
            } else if (s.sign == Sign::Plus || s.sign == Sign::Minus) {
                if (s.n < 8 || s.n % 2) bad("POmega +/- needs even n >= 8");
            } else {
                bad("POmega needs a sign +, - or o");
            }
            return;
        case Family::G2:
            need_q();
            if (s.q.p == 2 && s.q.e == 1) bad("G2(2) is not simple");
            return;
        case Family::E6:
            need_q();
            if (s.sign != Sign::Plus && s.sign != Sign::Minus) bad("E6 needs a sign + or -");
            return;
        case Family::F4:
        case Family::E7:
        case Family::E8:
        case Family::ThreeD4: need_q(); return;
        case Family::TwoB2:
            need_q();
            if (s.q.p != 2 || s.q.e % 2 == 0 || s.q.e < 3) bad("2B2 needs q = 2^e, e odd >= 3");
            return;
        case Family::TwoG2:
            need_q();
            if (s.q.p != 3 || s.q.e % 2 == 0 || s.q.e < 3) bad("2G2 needs q = 3^e, e odd >= 3");
            return;
        case Family::TwoF4:
            need_q();
            if (s.q.p != 2 || s.q.e % 2 == 0 || s.q.e < 3) bad("2F4 needs q = 2^e, e odd >= 3");
            return;
    }
}

BigInt p_part(const GroupSpec& s) {
    validate(s);
    const BigInt q = s.q.value();
    switch (s.family) {
        case Family::Alternating:
        case Family::Sporadic: bad("p_part: no defining characteristic for " + s.to_string());
        case Family::PSL:
        case Family::PSU: return ipow(q, s.n * (s.n - 1) / 2);
        case Family::PSp: return ipow(q, (s.n / 2) * (s.n / 2));
        case Family::POmega: {
            const unsigned k = s.n / 2;
            return s.sign == Sign::Circ ? ipow(q, k * k) : ipow(q, k * (k - 1));
        }
        case Family::G2: return ipow(q, 6);
        case Family::F4: return ipow(q, 24);
        case Family::E6: return ipow(q, 36);
        case Family::E7: return ipow(q, 63);
        case Family::E8: return ipow(q, 120);
        case Family::TwoB2: return ipow(q, 2);
        case Family::TwoG2: return ipow(q, 3);
        case Family::ThreeD4: return ipow(q, 12);
        case Family::TwoF4: return ipow(q, 12);
    }
    bad("p_part: unhandled family");
}

BigInt order(const GroupSpec& s) {
    validate(s);
    if (s.family == Family::Alternating) return factorial(s.n) / 2;
    if (s.family == Family::Sporadic) {
        for (const auto& e : sporadic_table()) {
            if (e.name == s.name) return BigInt(std::string(e.order));
        }
    }
    const BigInt q = s.q.value();
    const BigInt qp = p_part(s);
    switch (s.family) {
        case Family::PSL: {
            BigInt r = qp;
            for (unsigned i = 2; i <= s.n; ++i) r *= ipow(q, i) - 1;
            return r / big_gcd(s.n, q - 1);
        }
        case Family::PSU: {
            BigInt r = qp;
            for (unsigned i = 2; i <= s.n; ++i) r *= ipow(q, i) - (i % 2 ? -1 : 1);
            return r / big_gcd(s.n, q + 1);
        }
        case Family::PSp: {
            BigInt r = qp;
            for (unsigned i = 1; i <= s.n / 2; ++i) r *= ipow(q, 2 * i) - 1;
            return r / big_gcd(2, q - 1);
        }
        case Family::POmega: {
            const unsigned k = s.n / 2;
            BigInt r = qp;
            if (s.sign == Sign::Circ) {
                for (unsigned i = 1; i <= k; ++i) r *= ipow(q, 2 * i) - 1;
                return r / big_gcd(2, q - 1);
            }
            const int eps = s.sign == Sign::Plus ? 1 : -1;
            for (unsigned i = 1; i < k; ++i) r *= ipow(q, 2 * i) - 1;
            const BigInt top = ipow(q, k) - eps;
            return r * top / big_gcd(4, top);
        }
        case Family::G2: return qp * cyclo_product(q, {6, 2});
        case Family::F4: return qp * cyclo_product(q, {12, 8, 6, 2});
        case Family::E6: {
            if (s.sign == Sign::Plus) return qp * cyclo_product(q, {12, 9, 8, 6, 5, 2}) / big_gcd(3, q - 1);
            return qp * cyclo_product(q, {12, 8, 6, 2}) * (ipow(q, 9) + 1) * (ipow(q, 5) + 1) / big_gcd(3, q + 1);
        }
        case Family::E7: return qp * cyclo_product(q, {18, 14, 12, 10, 8, 6, 2}) / big_gcd(2, q - 1);
        case Family::E8: return qp * cyclo_product(q, {30, 24, 20, 18, 14, 12, 8, 2});
        case Family::TwoB2: return qp * (q * q + 1) * (q - 1);
        case Family::TwoG2: return qp * (ipow(q, 3) + 1) * (q - 1);
        case Family::ThreeD4: return qp * (ipow(q, 8) + ipow(q, 4) + 1) * cyclo_product(q, {6, 2});
        case Family::TwoF4: return qp * (ipow(q, 6) + 1) * (ipow(q, 4) - 1) * (ipow(q, 3) + 1) * (q - 1);
        default: break;
    }
    bad("order: unhandled family");
}

unsigned parabolic_rank(const GroupSpec& s) {
    validate(s);
    switch (s.family) {
        case Family::PSL: return s.n - 1;
        case Family::PSU: return s.n / 2;
        case Family::PSp: return s.n / 2;
        case Family::POmega:
            if (s.sign == Sign::Circ) return s.n / 2;
            return s.sign == Sign::Plus ? s.n / 2 - 2 : s.n / 2 - 1;
        case Family::Alternating:
        case Family::Sporadic: return 0;
        case Family::E6: return s.sign == Sign::Plus ? 1 : 0;
        default: return 1;
    }
}

BigInt parabolic_index(const GroupSpec& s, unsigned m) {
    const unsigned rank = parabolic_rank(s);
    if (rank == 0) bad("parabolic_index: not implemented for " + s.to_string());
    if (m < 1 || m > rank) bad("parabolic_index: m out of range for " + s.to_string());
    const BigInt q = s.q.value();
    switch (s.family) {
        case Family::PSL: return gaussian_binomial(s.n, m, q);
        case Family::PSU: return unitary_isotropic(s.n, m, q);
        case Family::PSp: return symplectic_isotropic(s.n / 2, m, q);
        case Family::POmega:
            if (s.sign == Sign::Circ) return symplectic_isotropic(s.n / 2, m, q);
            return orthogonal_isotropic(s.n / 2, m, q, s.sign == Sign::Plus ? 1 : -1);
        // Exceptional families: the maximal parabolic of smallest index.
        case Family::G2: return (ipow(q, 6) - 1) / (q - 1);
        case Family::F4: return (ipow(q, 12) - 1) * (ipow(q, 4) + 1) / (q - 1);
        case Family::E6: return (ipow(q, 9) - 1) * (ipow(q, 8) + ipow(q, 4) + 1) / (q - 1);
        case Family::E7: return (ipow(q, 14) - 1) * (ipow(q, 9) + 1) * (ipow(q, 5) + 1) / (q - 1);
        case Family::E8:
            return (ipow(q, 30) - 1) * (ipow(q, 12) + 1) * (ipow(q, 10) + 1) * (ipow(q, 6) + 1) / (q - 1);
        case Family::TwoB2: return q * q + 1;
        case Family::TwoG2: return ipow(q, 3) + 1;
        case Family::ThreeD4: return (ipow(q, 8) + ipow(q, 4) + 1) * (q + 1);
        case Family::TwoF4: return (ipow(q, 6) + 1) * (ipow(q, 3) + 1) * (q + 1);
        default: break;
    }
    bad("parabolic_index: unhandled family");
}

const std::vector<SporadicEntry>& sporadic_table() {
    static const std::vector<SporadicEntry> table{
        {"M11", "7920", {"11", "55", "165"}},
        {"M12", "95040", {"495", "495"}},
        {"M22", "443520", {"77", "231"}},
        {"M23", "10200960", {"23", "253", "253", "1771"}},
        {"M24", "244823040", {"759", "1771", "3795"}},
        {"J1", "175560", {"1045", "1463"}},
        {"J2", "604800", {"315", "525"}},
        {"J3", "50232960", {"26163", "43605"}},
        {"J4", "86775571046077562880", {}},
        {"HS", "44352000", {"4125", "5775"}},
        {"McL", "898128000", {"275", "2025", "2025", "22275"}},
        {"Suz", "448345497600", {}},
        {"Co1", "4157776806543360000", {"8292375", "46621575"}},
        {"Co2", "42305421312000", {"46575", "56925"}},
        {"Co3", "495766656000", {"170775", "1536975"}},
        {"He", "4030387200", {}},
        {"Fi22", "64561751654400", {}},
        {"Fi23", "4089470473293004800", {}},
        {"Fi24'", "1255205709190661721292800", {}},
        {"HN", "273030912000000", {}},
        {"Ly", "51765179004000000", {}},
        {"Th", "90745943887872000", {}},
        {"ON", "460815505920", {}},
        {"Ru", "145926144000", {}},
        {"B", "4154781481226426191177580544000000", {}},
        {"M", "808017424794512875886459904961710757005754368000000000", {}},
    };
    return table;
}

}  // namespace planes
