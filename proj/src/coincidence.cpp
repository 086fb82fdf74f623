#include "coincidence.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hexcsl {

bool is_numerator(const EisensteinInt& z) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), z.m().get_mpz_t(), z.n().get_mpz_t());
    if (g != 1) throw std::invalid_argument("is_numerator: coordinates are not coprime");
    return (z.m() + z.n()) % 3 != 0;
}

CoincidenceIsometry CoincidenceIsometry::from_parts(const EisensteinInt& z, Unit eps, bool reflect) {
    if (z.is_zero()) throw std::invalid_argument("coincidence isometry: zero numerator");
    if (!is_numerator(z))
        throw std::invalid_argument("coincidence isometry: 3 divides norm of numerator");
    auto [u, zc] = canonical_associate(z);
    // z = u^{-1} zc, so z/conj(z) = u^{-2} · zc/conj(zc); fold u^{-2} into eps.
    return {zc, eps.mul(u.pow(-2)), reflect};
}

std::string CoincidenceIsometry::str() const {
    std::ostringstream os;
    os << (reflect_ ? "T" : "R") << "[" << z_.str() << ", " << eps_.str() << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CoincidenceIsometry& r) { return os << r.str(); }

EisensteinRational isometry_value(const CoincidenceIsometry& r) {
    // eps·z/conj(z) = eps·z² / norm(z)
    return {r.eps().times(r.z() * r.z()), r.z().norm()};
}

namespace {

double arg_radians(const EisensteinInt& g) {
    double x = g.m().get_d() - g.n().get_d() / 2.0;
    double y = g.n().get_d() * std::sqrt(3.0) / 2.0;
    return std::atan2(y, x);
}

}  // namespace

double angle_degrees(const CoincidenceIsometry& r) {
    double deg = 60.0 * r.eps().k() + 2.0 * arg_radians(r.z()) * 180.0 / M_PI;
    deg = std::fmod(deg, 360.0);
    if (deg < 0) deg += 360.0;
    return deg;
}

double reduced_angle_degrees(const CoincidenceIsometry& r) {
    double deg = std::fmod(angle_degrees(r), 60.0);
    if (deg < 0) deg += 60.0;
    if (deg > 30.0) deg -= 60.0;
    return deg;
}

EisensteinRational apply(const CoincidenceIsometry& r, const EisensteinRational& y) {
    EisensteinRational arg = r.reflect() ? y.conj() : y;
    // eps·z·arg / conj(z) = eps·z²·arg / norm(z)
    return (arg * r.eps().times(r.z() * r.z())).div_by(EisensteinInt(r.z().norm(), Integer(0)));
}

Csl csl_of(const CoincidenceIsometry& r) { return {r.z()}; }

Integer coincidence_index(const CoincidenceIsometry& r) { return r.z().norm(); }

EisensteinInt numerator_from_exponents(const std::map<Integer, int>& t) {
    EisensteinInt z(1, 0);
    for (const auto& [p, e] : t) {
        if (e == 0) continue;
        EisensteinInt w = split_prime(p);  // validates p
        if (e < 0) w = w.conj();
        for (int i = 0; i < std::abs(e); ++i) z = z * w;
    }
    return canonical_associate(z).second;
}

ExponentVector exponents_from_numerator(const EisensteinInt& z) {
    if (z.is_zero() || !is_numerator(z))
        throw std::invalid_argument("exponents_from_numerator: not a valid numerator");
    return to_exponents(CoincidenceIsometry::rotation(z, Unit(0)));
}

ExponentVector to_exponents(const CoincidenceIsometry& r) {
    // z = u_f · ∏ ω_p^{a_p} · ∏ ϖ_p^{b_p} with ϖ_p = v_p·conj(ω_p) canonical,
    // so value = eps · (u_f ∏ v_p^{b_p})² · ∏ (ω_p/conj(ω_p))^{a_p - b_p}.
    ExponentVector out;
    auto fac = factor(r.z());
    Unit scale = fac.unit;
    for (const auto& pf : fac.factors) {
        Integer p = pf.prime.norm();
        EisensteinInt w = split_prime(p);
        if (pf.prime == w) {
            out.t[p] += pf.exponent;
        } else {
            auto [v, wc] = canonical_associate(w.conj());
            if (wc != pf.prime) throw std::logic_error("to_exponents: unexpected split factor");
            out.t[p] -= pf.exponent;
            scale = scale.mul(v.pow(pf.exponent));
        }
    }
    for (auto it = out.t.begin(); it != out.t.end();)
        it = it->second == 0 ? out.t.erase(it) : std::next(it);
    out.eps = r.eps().mul(scale.pow(2));
    return out;
}

CoincidenceIsometry rotation_from_exponents(const ExponentVector& v) {
    EisensteinInt raw(1, 0);
    for (const auto& [p, e] : v.t) {
        if (e == 0) continue;
        EisensteinInt w = split_prime(p);
        if (e < 0) w = w.conj();
        for (int i = 0; i < std::abs(e); ++i) raw = raw * w;
    }
    // from_parts canonicalizes raw and folds the unit correction into eps.
    return CoincidenceIsometry::from_parts(raw, v.eps, false);
}

CoincidenceIsometry compose(const CoincidenceIsometry& r1, const CoincidenceIsometry& r2) {
    ExponentVector a = to_exponents(r1);
    ExponentVector b = to_exponents(r2);
    if (r1.reflect()) {
        // moving r2's rotation part across a conjugation inverts it
        b.eps = b.eps.conj();
        for (auto& [p, e] : b.t) e = -e;
    }
    ExponentVector c;
    c.eps = a.eps.mul(b.eps);
    c.t = a.t;
    for (const auto& [p, e] : b.t) {
        c.t[p] += e;
        if (c.t[p] == 0) c.t.erase(p);
    }
    CoincidenceIsometry rot = rotation_from_exponents(c);
    return CoincidenceIsometry::from_parts(rot.z(), rot.eps(), r1.reflect() != r2.reflect());
}

CoincidenceIsometry inverse(const CoincidenceIsometry& r) {
    if (r.reflect()) return r;  // reflections are involutions
    ExponentVector v = to_exponents(r);
    v.eps = v.eps.inverse();
    for (auto& [p, e] : v.t) e = -e;
    return rotation_from_exponents(v);
}

std::vector<CslEntry> enumerate_csls(const Integer& max_index) {
    if (max_index < 1) throw std::invalid_argument("enumerate_csls: max_index must be >= 1");
    std::vector<CslEntry> out;
    // norm >= (3/4)·max(m², n²), so canonical candidates have 0 <= n < m <= bound
    Integer b4 = 4 * max_index / 3 + 1;
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), b4.get_mpz_t());
    bound += 1;
    for (Integer n = 0; n <= bound; ++n) {
        for (Integer m = n + 1; m <= bound; ++m) {
            EisensteinInt z(m, n);
            Integer nz = z.norm();
            if (nz > max_index) continue;
            Integer g;
            mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
            if (g != 1) continue;
            if ((m + n) % 3 == 0) continue;
            out.push_back({Csl{z}, nz});
        }
    }
    std::sort(out.begin(), out.end(), [](const CslEntry& a, const CslEntry& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.csl.z < b.csl.z;
    });
    return out;
}

Integer count_csls(const Integer& m) {
    if (m < 1) throw std::invalid_argument("count_csls: index must be >= 1");
    Integer f = 1;
    for (const auto& [p, e] : factor_integer(m)) {
        (void)e;
        if (p == 3 || p % 3 == 2) return 0;
        f *= 2;
    }
    return f;
}

Integer count_rotations(const Integer& m) { return 6 * count_csls(m); }

std::vector<Integer> dirichlet_coefficients(long max_m) {
    if (max_m < 1) throw std::invalid_argument("dirichlet_coefficients: max must be >= 1");
    std::vector<Integer> out;
    out.reserve(static_cast<size_t>(max_m));
    for (long m = 1; m <= max_m; ++m) out.push_back(count_csls(Integer(m)));
    return out;
}

}  // namespace hexcsl
