#include "planes/groups.hpp"

#include <sstream>
#include <stdexcept>

namespace planes {

namespace {

BigInt eval_poly(const Poly& poly, const BigInt& q, unsigned n) {
    BigInt r = 0;
    for (const Term& t : poly) {
        const long e = static_cast<long>(t.n_mul) * static_cast<long>(n) + t.offset;
        if (e < 0) throw std::invalid_argument("formula: negative exponent");
        r += BigInt(t.coef) * ipow(q, static_cast<unsigned>(e));
    }
    return r;
}

std::string render_exponent(const Term& t) {
    std::ostringstream os;
    if (t.n_mul == 0) {
        os << t.offset;
        return os.str();
    }
    if (t.n_mul != 1) os << t.n_mul;
    os << 'n';
    if (t.offset > 0) os << '+' << t.offset;
    if (t.offset < 0) os << t.offset;
    return t.offset == 0 && t.n_mul == 1 ? os.str() : "(" + os.str() + ")";
}

std::string render_poly(const Poly& poly) {
    std::ostringstream os;
    bool first = true;
    for (const Term& t : poly) {
        const bool constant = t.n_mul == 0 && t.offset == 0;
        long c = t.coef;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            c = c < 0 ? -c : c;
        } else if (c < 0) {
            os << '-';
            c = -c;
        }
        first = false;
        if (constant) {
            os << c;
            continue;
        }
        if (c != 1) os << c << '*';
        os << 'q';
        if (!(t.n_mul == 0 && t.offset == 1)) os << '^' << render_exponent(t);
    }
    return os.str();
}

Term q(int e, long c = 1) { return Term{c, 0, e}; }
Term qn(int n_mul, int off, long c = 1) { return Term{c, n_mul, off}; }
Term one(long c = 1) { return Term{c, 0, 0}; }

Domain q_odd() { return Domain{Parity::Odd, 0, 0, 0, Parity::Any}; }

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    const auto add = [&](std::string label, Family fam, Sign sign, Domain dom, Formula f, bool exact,
                         std::string anchor) {
        c.push_back(CatalogEntry{std::move(label), fam, sign, dom, std::move(f), exact, std::move(anchor)});
    };

    add("psl2-half-q(q+1)", Family::PSL, Sign::None, Domain{Parity::Odd, 1, 2, 2, Parity::Any},
        Formula{1, 2, 0, 0, {{q(1)}, {q(1), one()}}, {}}, true, "n_g= \\frac{1}{2}q(q\\pm 1)");
    add("psl2-half-q(q-1)", Family::PSL, Sign::None, Domain{Parity::Odd, 3, 2, 2, Parity::Any},
        Formula{1, 2, 0, 0, {{q(1)}, {q(1), one(-1)}}, {}}, true, "n_g=\\frac{1}{2}q(q-1)$ and $q\\equiv 3(4)");
    add("psl2-even", Family::PSL, Sign::None, Domain{Parity::Even, 0, 2, 2, Parity::Any},
        Formula{1, 1, 0, 0, {{q(2), one(-1)}}, {}}, true, "n_g=q^2-1");
    add("psl3-odd", Family::PSL, Sign::None, Domain{Parity::Odd, 0, 3, 3, Parity::Any},
        Formula{1, 1, 0, 0, {{q(2)}, {q(2), q(1), one()}}, {}}, true, "n_g=q^2(q^2+q+1)$ for $q$ odd");
    add("psl3-even", Family::PSL, Sign::None, Domain{Parity::Even, 0, 3, 3, Parity::Any},
        Formula{1, 1, 0, 0, {{q(2), one(-1)}, {q(2), q(1), one()}}, {}}, true,
        "n_g=(q^2-1)(q^2+q+1)$ for $q$ even");
    add("psln-diag-odd-n", Family::PSL, Sign::None, Domain{Parity::Odd, 0, 5, 0, Parity::Odd},
        Formula{1, 1, 0, 0, {{qn(1, -1)}, {qn(1, 0), one(-1)}}, {{q(1), one(-1)}}}, true,
        "n_g=q^{n-1}(\\polysum{n-1})");
    add("psln-diag-even-n", Family::PSL, Sign::None, Domain{Parity::Odd, 0, 4, 0, Parity::Even},
        Formula{1, 1, 0, 0, {{qn(2, -4)}, {qn(1, 0), one(-1)}, {qn(1, -1), one(-1)}}, {{q(2), one(-1)}, {q(1), one(-1)}}},
        true, "n_g=q^{2(n-2)}(\\polysum{n-2})(\\polysumsq{n-2})");
    add("psln-transvection", Family::PSL, Sign::None, Domain{Parity::Even, 0, 4, 0, Parity::Any},
        Formula{1, 1, 0, 0, {{qn(1, -1), one(-1)}, {qn(1, 0), one(-1)}}, {{q(1), one(-1)}}}, true,
        "n_g=(q^{n-1}-1)(\\polysum{n-1})");
    add("psu3-odd", Family::PSU, Sign::None, Domain{Parity::Odd, 0, 3, 3, Parity::Any},
        Formula{1, 1, 0, 0, {{q(2)}, {q(2), q(1, -1), one()}}, {}}, true, "n_g=q^2(q^2-q+1)");
    add("psu4-odd", Family::PSU, Sign::None, Domain{Parity::Odd, 0, 4, 4, Parity::Any},
        Formula{1, 2, 0, 0, {{q(4)}, {q(2), q(1, -1), one()}, {q(2), one()}}, {}}, true,
        "n_g=\\frac{1}{2}q^4(q^2-q+1)(q^2+1)");
    add("psun-odd-n", Family::PSU, Sign::None, Domain{Parity::Odd, 0, 5, 0, Parity::Odd},
        Formula{1, 1, 0, 0, {{qn(2, -4)}, {qn(1, 0), one()}, {qn(1, -1), one(-1)}}, {{q(1), one()}, {q(2), one(-1)}}},
        false, "n_g=q^{2(n-2)}\\frac{(q^n+1)(q^{n-1}-1)}{(q+1)(q^2-1)}");
    add("psun-even-n", Family::PSU, Sign::None, Domain{Parity::Odd, 0, 6, 0, Parity::Even},
        Formula{1, 1, 0, 0, {{qn(2, -4)}, {qn(1, 0), one(-1)}, {qn(1, -1), one()}}, {{q(1), one()}, {q(2), one(-1)}}},
        true, "n_g=q^{2(n-2)}\\frac{(q^n-1)(q^{n-1}+1)}{(q+1)(q^2-1)}");
    add("psp4-odd", Family::PSp, Sign::None, Domain{Parity::Odd, 0, 4, 4, Parity::Any},
        Formula{1, 2, 0, 0, {{q(2)}, {q(2), one()}}, {}}, true, "n_g=\\frac{1}{2}q^2(q^2+1)");
    add("pspn-odd", Family::PSp, Sign::None, Domain{Parity::Odd, 0, 6, 0, Parity::Even},
        Formula{1, 1, 0, 0, {{qn(1, -2)}, {qn(1, 0), one(-1)}}, {{q(2), one(-1)}}}, true,
        "n_g=|L:B|=q^{n-2}(\\polysumsq{n-2})");
    add("g2-odd", Family::G2, Sign::None, q_odd(), Formula{1, 1, 0, 0, {{q(4)}, {q(4), q(2), one()}}, {}}, true,
        "n_g=q^4(q^4+q^2+1).");
    add("3d4-odd", Family::ThreeD4, Sign::None, q_odd(), Formula{1, 1, 0, 0, {{q(8)}, {q(8), q(4), one()}}, {}},
        true, "n_g=q^8(q^8+q^4+1)$ and so");
    add("f4-odd", Family::F4, Sign::None, q_odd(), Formula{1, 1, 0, 0, {{q(8)}, {q(8), q(4), one()}}, {}}, true,
        "n_g=q^8(q^8+q^4+1).");
    add("e6+-odd", Family::E6, Sign::Plus, q_odd(),
        Formula{1, 1, 0, 0, {{q(16)}, {q(6), q(3), one()}, {q(2), q(1), one()}, {q(8), q(4), one()}}, {}}, true,
        "n_g=q^{16}(q^6+\\epsilon q^3+1)(q^2+\\epsilon q+1)(q^8+q^4+1)");
    add("e6--odd", Family::E6, Sign::Minus, q_odd(),
        Formula{1, 1, 0, 0, {{q(16)}, {q(6), q(3, -1), one()}, {q(2), q(1, -1), one()}, {q(8), q(4), one()}}, {}},
        true, "n_g=q^{16}(q^6+\\epsilon q^3+1)(q^2+\\epsilon q+1)(q^8+q^4+1)");
    add("e7-sl8+", Family::E7, Sign::Plus, q_odd(),
        Formula{1, 1, 4, -1, {{q(35)}, {q(7), one()}, {q(5), one()}, {q(3), one()}, {q(8), q(4), one()}, {q(12), q(6), one()}}, {}},
        false, "(4,q-1)q^{35}(q^7+\\epsilon)(q^5+\\epsilon)(q^3+\\epsilon)");
    add("e7-sl8-", Family::E7, Sign::Minus, q_odd(),
        Formula{1, 1, 4, -1, {{q(35)}, {q(7), one(-1)}, {q(5), one(-1)}, {q(3), one(-1)}, {q(8), q(4), one()}, {q(12), q(6), one()}}, {}},
        false, "(4,q-1)q^{35}(q^7+\\epsilon)(q^5+\\epsilon)(q^3+\\epsilon)");
    add("e8-a1e7", Family::E8, Sign::None, q_odd(),
        Formula{2, 1, 0, 0, {{q(56)}, {q(10), one()}, {q(12), one()}, {q(6), one()}, {q(30), one(-1)}}, {{q(2), one(-1)}}},
        false, "\\frac{2q^{56}(q^{10}+1)(q^{12}+1)(q^6+1)(q^{30}-1)}{q^2-1}");
    return c;
}

bool parity_ok(Parity want, const BigInt& x) {
    if (want == Parity::Any) return true;
    return (x % 2 == 1) == (want == Parity::Odd);
}

}  // namespace

BigInt Formula::evaluate(const BigInt& qv, unsigned n) const {
    BigInt num = scalar_num, den = scalar_den;
    if (gcd_k) num *= boost::multiprecision::gcd(BigInt(gcd_k), BigInt(qv + gcd_shift));
    for (const Poly& p : numer) num *= eval_poly(p, qv, n);
    for (const Poly& p : denom) den *= eval_poly(p, qv, n);
    if (den == 0 || num % den != 0) throw std::domain_error("formula does not evaluate to an integer");
    return num / den;
}

std::string Formula::render() const {
    std::ostringstream os;
    bool first = true;
    const auto sep = [&] {
        if (!first) os << " * ";
        first = false;
    };
    if (scalar_num != 1 || scalar_den != 1) {
        sep();
        os << scalar_num;
        if (scalar_den != 1) os << '/' << scalar_den;
    }
    if (gcd_k) {
        sep();
        os << "gcd(" << gcd_k << ", q" << (gcd_shift < 0 ? " - " : " + ") << (gcd_shift < 0 ? -gcd_shift : gcd_shift)
           << ')';
    }
    for (const Poly& p : numer) {
        sep();
        os << (p.size() == 1 ? render_poly(p) : "(" + render_poly(p) + ")");
    }
    if (!denom.empty()) {
        os << " / ";
        for (std::size_t i = 0; i < denom.size(); ++i) {
            if (i) os << " * ";
            os << '(' << render_poly(denom[i]) << ')';
        }
    }
    return os.str();
}

const std::vector<CatalogEntry>& involution_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

bool entry_applies(const CatalogEntry& e, const GroupSpec& s) {
    if (e.family != s.family) return false;
    if (s.family == Family::E6 && e.sign != s.sign) return false;
    const BigInt qv = s.q.value();
    if (!parity_ok(e.domain.q_parity, qv)) return false;
    if (e.domain.q_mod4 && qv % 4 != e.domain.q_mod4) return false;
    if (e.domain.n_min && s.n < e.domain.n_min) return false;
    if (e.domain.n_max && s.n > e.domain.n_max) return false;
    return parity_ok(e.domain.n_parity, BigInt(s.n));
}

std::vector<InvolutionClass> classes_for(const GroupSpec& s) {
    validate(s);
    std::vector<InvolutionClass> out;
    for (const auto& e : involution_catalog()) {
        if (entry_applies(e, s)) out.push_back(InvolutionClass{s, &e});
    }
    return out;
}

BigInt involution_class_size(const InvolutionClass& cls) {
    if (!cls.entry) throw std::invalid_argument("involution_class_size: no catalog entry");
    validate(cls.group);
    if (!entry_applies(*cls.entry, cls.group)) {
        throw std::invalid_argument("involution_class_size: " + cls.group.to_string() + " outside the domain of " +
                                    cls.entry->label);
    }
    return cls.entry->formula.evaluate(cls.group.q.value(), cls.group.n);
}

}  // namespace planes
