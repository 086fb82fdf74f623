#include "shifted.hpp"

#include <array>
#include <stdexcept>

namespace hexcsl {

namespace {

Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational fractional_part(const Rational& r) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return r - Rational(fl);
}

}  // namespace

AffinelyRelated make_affinely_related(Integer p1, Integer q1, Integer p2, Integer q2) {
    if (q1 == 0 || q2 == 0) throw std::invalid_argument("affinely-related shift: zero denominator");
    if (p2 == 0) throw std::invalid_argument("affinely-related shift: p2 = 0 would make a rational");
    if (q1 < 0) { q1 = -q1; p1 = -p1; }
    if (q2 < 0) { q2 = -q2; p2 = -p2; }
    Integer g;
    mpz_gcd(g.get_mpz_t(), p1.get_mpz_t(), q1.get_mpz_t());
    p1 /= g; q1 /= g;
    mpz_gcd(g.get_mpz_t(), p2.get_mpz_t(), q2.get_mpz_t());
    p2 /= g; q2 /= g;
    return {p1, q1, p2, q2};
}

EisensteinRational shift_value(const RationalShift& x) {
    return EisensteinRational::from_coords(x.a, x.b);
}

DenominatorForm to_denominator_form(const RationalShift& x) {
    EisensteinRational v = shift_value(x);
    EisensteinInt num = v.num();
    EisensteinInt den(v.den(), Integer(0));
    if (num.is_zero()) return {EisensteinInt(0, 0), EisensteinInt(1, 0)};
    EisensteinInt g = gcd(num, den);
    EisensteinInt p = exact_div(num, g);
    EisensteinInt q = exact_div(den, g);
    auto [u, qc] = canonical_associate(q);
    return {u.times(p), qc};
}

bool soc_member(const CoincidenceIsometry& r, const RationalShift& x) {
    if (r.reflect()) throw std::invalid_argument("soc_member: expected a rotation");
    EisensteinInt d = r.eps().times(r.z()) - r.z().conj();
    if (d.is_zero()) return true;
    return divides(to_denominator_form(x).q, d);
}

bool soc_member_direct(const CoincidenceIsometry& r, const RationalShift& x) {
    if (r.reflect()) throw std::invalid_argument("soc_member_direct: expected a rotation");
    EisensteinInt d = r.eps().times(r.z()) - r.z().conj();
    return (shift_value(x) * d).is_integral();
}

bool oc_member(const CoincidenceIsometry& t, const RationalShift& x) {
    if (!t.reflect()) throw std::invalid_argument("oc_member: expected a reflection");
    EisensteinRational xv = shift_value(x);
    EisensteinRational d = xv.conj() * t.eps().times(t.z()) - xv * t.z().conj();
    return d.is_integral();
}

bool member(const CoincidenceIsometry& r, const RationalShift& x) {
    return r.reflect() ? oc_member(r, x) : soc_member(r, x);
}

namespace {

// The six congruence conditions in table order, paired with their units:
// b, a-b, a, -2a+b, a+b, a-2b  ->  1, ξ, ξ², -1, -ξ, -ξ².
std::array<std::pair<Rational, Unit>, 6> reflection_conditions(const RationalShift& x) {
    return {{
        {x.b, Unit(0)},
        {x.a - x.b, Unit(2)},
        {x.a, Unit(4)},
        {-2 * x.a + x.b, Unit(3)},
        {x.a + x.b, Unit(5)},
        {x.a - 2 * x.b, Unit(1)},
    }};
}

}  // namespace

std::optional<Unit> reflection_unit(const RationalShift& x) {
    auto conds = reflection_conditions(x);
    for (const auto& [v, u] : conds)
        if (v == 0) return u;
    for (const auto& [v, u] : conds)
        if (is_integer(v)) return u;
    return std::nullopt;
}

bool is_group_certified(const RationalShift& x) {
    if (reflection_unit(x).has_value()) return true;
    Integer nq = to_denominator_form(x).q.norm();
    for (const auto& [p, e] : factor_integer(nq)) {
        (void)e;
        if (p % 3 == 1) return false;
    }
    return true;
}

SocDescription soc_unit_set(const RationalShift& x) {
    DenominatorForm df = to_denominator_form(x);
    if (df.q.is_unit())
        return {SocKind::full, Unit::all(), df, "C6 x Z^(aleph_0)"};
    if (df.q == ramified_prime()) {
        // modulo 1-ξ every valid numerator is a nonzero residue and the six
        // units collapse to ±1, so membership depends only on the unit
        return {SocKind::unit_set, {Unit(0), Unit(2), Unit(4)}, df, "C3 x Z^(aleph_0)"};
    }
    return {SocKind::predicate, {}, df, "membership per numerator: q | (eps*z - conj(z))"};
}

std::string oc_kind_name(OcKind k) {
    switch (k) {
        case OcKind::full_oc: return "full-oc";
        case OcKind::trivial: return "trivial";
        case OcKind::single_reflection: return "single-reflection";
        case OcKind::rotation_subgroup_with_reflection: return "rotation-subgroup-with-reflection";
        case OcKind::rotation_subgroup_only: return "rotation-subgroup-only";
        case OcKind::predicate: return "predicate";
    }
    return "?";
}

OcDescription oc_group_irrational(const ShiftSpec& x) {
    OcDescription out;
    out.certified_group = true;  // every case below is a group of order <= 2
    if (std::holds_alternative<RationalShift>(x))
        throw std::invalid_argument("oc_group_irrational: shift is rational");
    if (const auto* ia = std::get_if<IrrationalA>(&x)) {
        if (is_integer(ia->b)) {
            out.kind = OcKind::single_reflection;
            out.reflection = CoincidenceIsometry::real_axis_reflection();
            out.structure = "C2";
        } else {
            out.kind = OcKind::trivial;
            out.structure = "C1";
        }
        return out;
    }
    if (const auto* ib = std::get_if<IrrationalB>(&x)) {
        if (is_integer(ib->a)) {
            out.kind = OcKind::single_reflection;
            out.reflection = CoincidenceIsometry::reflection(EisensteinInt(1, 0), Unit(4));
            out.structure = "C2";
        } else {
            out.kind = OcKind::trivial;
            out.structure = "C1";
        }
        return out;
    }
    if (std::holds_alternative<BothIndependent>(x)) {
        out.kind = OcKind::trivial;
        out.structure = "C1";
        return out;
    }
    const auto& raw = std::get<AffinelyRelated>(x);
    AffinelyRelated ar = make_affinely_related(raw.p1, raw.q1, raw.p2, raw.q2);
    if (ar.q2 % ar.q1 != 0) {
        out.kind = OcKind::trivial;
        out.structure = "C1";
        return out;
    }
    Integer r3 = ((ar.p2 * ar.q2) % 3 + 3) % 3;
    out.kind = OcKind::single_reflection;
    out.structure = "C2";
    if (r3 == 2) {
        EisensteinInt z(Integer((2 * ar.q2 - ar.p2) / 3), Integer((ar.q2 - 2 * ar.p2) / 3));
        out.reflection = CoincidenceIsometry::reflection(z, Unit(3));
    } else {
        out.reflection = CoincidenceIsometry::reflection(EisensteinInt(ar.p2, ar.q2), Unit(0));
    }
    return out;
}

OcDescription describe_oc(const ShiftSpec& x) {
    if (!std::holds_alternative<RationalShift>(x)) return oc_group_irrational(x);
    const auto& rs = std::get<RationalShift>(x);
    OcDescription out;
    SocDescription soc = soc_unit_set(rs);
    out.den = soc.den;
    out.units = soc.units;
    out.certified_group = is_group_certified(rs);
    if (auto eps = reflection_unit(rs))
        out.reflection = CoincidenceIsometry::reflection(EisensteinInt(1, 0), *eps);
    switch (soc.kind) {
        case SocKind::full:
            out.kind = OcKind::full_oc;
            out.structure = "(C6 x Z^(aleph_0)) : C2";
            break;
        case SocKind::unit_set:
            out.kind = out.reflection ? OcKind::rotation_subgroup_with_reflection
                                      : OcKind::rotation_subgroup_only;
            out.structure = soc.structure;
            break;
        case SocKind::predicate:
            out.kind = OcKind::predicate;
            out.structure = soc.structure;
            break;
    }
    return out;
}

namespace {

struct LinearForm {
    Rational c, d;  // c·a + d·b
};

std::array<LinearForm, 2> membership_forms(const CoincidenceIsometry& r) {
    if (!r.reflect()) {
        EisensteinInt u = r.eps().times(r.z()) - r.z().conj();
        return {{{make_rational(u.m(), 1), make_rational(Integer(-u.n()), 1)},
                 {make_rational(u.n(), 1), make_rational(Integer(u.m() - u.n()), 1)}}};
    }
    EisensteinInt w = r.eps().times(r.z());
    EisensteinInt v = r.z().conj();
    return {{{make_rational(Integer(w.m() - v.m()), 1),
              make_rational(Integer(-w.m() + w.n() + v.n()), 1)},
             {make_rational(Integer(w.n() - v.n()), 1),
              make_rational(Integer(-w.m() - v.m() + v.n()), 1)}}};
}

}  // namespace

bool accepts_symbolic(const CoincidenceIsometry& r, const ShiftSpec& x) {
    for (const auto& f : membership_forms(r)) {
        if (const auto* rs = std::get_if<RationalShift>(&x)) {
            if (!is_integer(f.c * rs->a + f.d * rs->b)) return false;
        } else if (const auto* ia = std::get_if<IrrationalA>(&x)) {
            if (f.c != 0 || !is_integer(f.d * ia->b)) return false;
        } else if (const auto* ib = std::get_if<IrrationalB>(&x)) {
            if (f.d != 0 || !is_integer(f.c * ib->a)) return false;
        } else if (std::holds_alternative<BothIndependent>(x)) {
            if (f.c != 0 || f.d != 0) return false;
        } else {
            const auto& ar = std::get<AffinelyRelated>(x);
            Rational s = make_rational(ar.p2, ar.q2);
            Rational r1 = make_rational(ar.p1, ar.q1);
            if (f.c * s + f.d != 0) return false;
            if (!is_integer(f.c * r1)) return false;
        }
    }
    return true;
}

CosetCsl shifted_csl(const CoincidenceIsometry& r, const RationalShift& x) {
    if (!member(r, x))
        throw std::domain_error("shifted_csl: isometry is not a coincidence of the shifted lattice");
    EisensteinRational xv = shift_value(x);
    EisensteinRational y = apply(r, xv) - xv;
    EisensteinRational w = y * r.z().conj();
    const EisensteinInt& big = w.as_integer();  // y ∈ Γ + RΓ = (1/conj(z))·Γ
    auto bez = gcd_ext(r.z().conj(), r.z());
    if (!bez.g.is_one()) throw std::logic_error("shifted_csl: numerator not coprime to conjugate");
    EisensteinInt l = divmod(big * bez.s, r.z()).second;
    if (!divides(r.z(), big - r.z().conj() * l))
        throw std::logic_error("shifted_csl: Bezout solution check failed");
    return {xv + EisensteinRational(l), r.z()};
}

bool in_fundamental_domain(const Rational& a, const Rational& b) {
    return 0 <= 4 * b && 4 * b <= 2 * a && 2 * a <= b + 1;
}

RationalShift normalize_to_fundamental_domain(const RationalShift& x) {
    EisensteinRational v = shift_value(x);
    for (int refl = 0; refl < 2; ++refl) {
        EisensteinRational base = refl ? v.conj() : v;
        for (int k = 0; k < 6; ++k) {
            EisensteinRational y = base * Unit(k).value();
            Rational a = fractional_part(y.coord_a());
            Rational b = fractional_part(y.coord_b());
            if (in_fundamental_domain(a, b)) return {a, b};
        }
    }
    throw std::logic_error("normalize_to_fundamental_domain: no representative found");
}

}  // namespace hexcsl
