#include "eisenstein.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace hexcsl {

Integer EisensteinInt::norm() const {
    Integer d = m_ - n_;
    return d * d + m_ * n_;
}

EisensteinInt EisensteinInt::operator*(const EisensteinInt& o) const {
    // (m1 + n1 ξ)(m2 + n2 ξ) with ξ² = -1 - ξ.
    return {Integer(m_ * o.m_ - n_ * o.n_),
            Integer(m_ * o.n_ + n_ * o.m_ - n_ * o.n_)};
}

std::string EisensteinInt::str() const {
    if (n_ == 0) return m_.get_str();
    std::ostringstream os;
    if (m_ != 0) os << m_.get_str();
    if (n_ > 0 && m_ != 0) os << "+";
    if (n_ == -1) os << "-";
    else if (n_ != 1) os << n_.get_str();
    os << "ξ";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& g) { return os << g.str(); }

EisensteinInt Unit::value() const {
    static const std::array<std::pair<long, long>, 6> coords = {{
        {1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1},
    }};
    return {coords[k_].first, coords[k_].second};
}

std::optional<Unit> Unit::from_value(const EisensteinInt& g) {
    for (int k = 0; k < 6; ++k)
        if (Unit(k).value() == g) return Unit(k);
    return std::nullopt;
}

std::vector<Unit> Unit::all() {
    return {Unit(0), Unit(1), Unit(2), Unit(3), Unit(4), Unit(5)};
}

std::string Unit::str() const {
    static const std::array<const char*, 6> names = {"1", "-ξ²", "ξ", "-1", "ξ²", "-ξ"};
    return names[k_];
}

std::ostream& operator<<(std::ostream& os, Unit u) { return os << u.str(); }

Integer round_nearest_half_down(const Integer& num, const Integer& den) {
    // ceil((2 num - den) / (2 den)); den > 0.
    Integer top = 2 * num - den;
    Integer bot = 2 * den;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), top.get_mpz_t(), bot.get_mpz_t());
    return q;
}

std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& a, const EisensteinInt& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero");
    EisensteinInt t = a * b.conj();
    Integer d = b.norm();
    EisensteinInt q(round_nearest_half_down(t.m(), d), round_nearest_half_down(t.n(), d));
    EisensteinInt r = a - q * b;
    return {q, r};
}

bool divides(const EisensteinInt& d, const EisensteinInt& a) {
    if (d.is_zero()) throw std::domain_error("divides: zero divisor");
    EisensteinInt t = a * d.conj();
    Integer nd = d.norm();
    return t.m() % nd == 0 && t.n() % nd == 0;
}

EisensteinInt exact_div(const EisensteinInt& a, const EisensteinInt& d) {
    if (d.is_zero()) throw std::domain_error("exact_div: zero divisor");
    EisensteinInt t = a * d.conj();
    Integer nd = d.norm();
    if (t.m() % nd != 0 || t.n() % nd != 0)
        throw std::domain_error("exact_div: not divisible");
    return {Integer(t.m() / nd), Integer(t.n() / nd)};
}

std::pair<Unit, EisensteinInt> canonical_associate(const EisensteinInt& g) {
    if (g.is_zero()) throw std::domain_error("canonical_associate: zero input");
    for (int k = 0; k < 6; ++k) {
        EisensteinInt c = Unit(k).times(g);
        if (c.n() >= 0 && c.m() > c.n()) return {Unit(k), c};
    }
    throw std::logic_error("canonical_associate: no sector found");
}

bool is_canonical_associate(const EisensteinInt& g) {
    return !g.is_zero() && g.n() >= 0 && g.m() > g.n();
}

EisensteinInt gcd(const EisensteinInt& a, const EisensteinInt& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    EisensteinInt x = a, y = b;
    while (!y.is_zero()) {
        EisensteinInt r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return canonical_associate(x).second;
}

Bezout gcd_ext(const EisensteinInt& a, const EisensteinInt& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd_ext(0, 0) is undefined");
    EisensteinInt r0 = a, r1 = b;
    EisensteinInt s0(1, 0), s1(0, 0);
    EisensteinInt t0(0, 0), t1(1, 0);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1; r1 = r;
        EisensteinInt s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        EisensteinInt t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    Unit u = canonical_associate(r0).first;
    return {u.times(r0), u.times(s0), u.times(t0)};
}

std::string prime_class_name(PrimeClass c) {
    switch (c) {
        case PrimeClass::ramified: return "ramified";
        case PrimeClass::inert: return "inert";
        case PrimeClass::split: return "split";
    }
    return "?";
}

EisensteinInt PrimeFactorization::value() const {
    EisensteinInt v = unit.value();
    for (const auto& f : factors)
        for (int i = 0; i < f.exponent; ++i) v = v * f.prime;
    return v;
}

EisensteinInt ramified_prime() { return {2, 1}; }

namespace {

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Integer pollard_rho(const Integer& n) {
    // n odd, composite, > 1.
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) { d = n; break; }
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) { out[n] += 1; return; }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(Integer(n / d), out);
}

}  // namespace

std::map<Integer, int> factor_integer(Integer n) {
    if (n < 1) throw std::domain_error("factor_integer: input must be positive");
    std::map<Integer, int> out;
    while (n % 2 == 0) { out[2] += 1; n /= 2; }
    for (Integer d = 3; d <= 9973 && d * d <= n; d += 2)
        while (n % d == 0) { out[d] += 1; n /= d; }
    if (n > 1) factor_into(n, out);
    return out;
}

EisensteinInt split_prime(const Integer& p) {
    if (p < 5 || !is_probable_prime(p))
        throw std::invalid_argument("split_prime: input is not a prime >= 7");
    if (p % 3 != 1)
        throw std::invalid_argument("split_prime: prime is not congruent to 1 mod 3");
    Integer e = (p - 1) / 3;
    Integer t;
    for (Integer g = 2;; ++g) {
        mpz_powm(t.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if (t != 1) break;
    }
    // t is a primitive cube root of unity mod p, so p | N(t - ξ).
    EisensteinInt w = gcd(EisensteinInt(p, 0), EisensteinInt(t, Integer(-1)));
    if (w.norm() != p) throw std::logic_error("split_prime: gcd did not yield a prime of norm p");
    return w;
}

PrimeFactorization factor(const EisensteinInt& g) {
    if (g.is_zero()) throw std::domain_error("factor: zero input");
    std::vector<PrimeFactor> out;
    EisensteinInt work = g;
    auto nf = factor_integer(g.norm());
    for (const auto& [p, e] : nf) {
        (void)e;
        if (p == 3) {
            const EisensteinInt lam = ramified_prime();
            int c = 0;
            while (divides(lam, work)) { work = exact_div(work, lam); ++c; }
            if (c > 0) out.push_back({lam, c, PrimeClass::ramified});
        } else if (p % 3 == 2) {
            const EisensteinInt q(p, 0);
            int c = 0;
            while (divides(q, work)) { work = exact_div(work, q); ++c; }
            if (c > 0) out.push_back({q, c, PrimeClass::inert});
        } else {
            const EisensteinInt w = split_prime(p);
            const EisensteinInt wc = canonical_associate(w.conj()).second;
            int a = 0, b = 0;
            while (divides(w, work)) { work = exact_div(work, w); ++a; }
            while (divides(wc, work)) { work = exact_div(work, wc); ++b; }
            if (a > 0) out.push_back({w, a, PrimeClass::split});
            if (b > 0) out.push_back({wc, b, PrimeClass::split});
        }
    }
    auto u = Unit::from_value(work);
    if (!u) throw std::logic_error("factor: residual element is not a unit");
    std::sort(out.begin(), out.end(), [](const PrimeFactor& x, const PrimeFactor& y) {
        Integer nx = x.prime.norm(), ny = y.prime.norm();
        if (nx != ny) return nx < ny;
        return x.prime < y.prime;
    });
    return {*u, out};
}

EisensteinRational::EisensteinRational(EisensteinInt num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("EisensteinRational: zero denominator");
    reduce();
}

void EisensteinRational::reduce() {
    if (den_ < 0) { den_ = -den_; num_ = -num_; }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.m().get_mpz_t(), num_.n().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ = EisensteinInt(Integer(num_.m() / g), Integer(num_.n() / g));
        den_ /= g;
    }
}

EisensteinRational EisensteinRational::from_coords(const Rational& a, const Rational& b) {
    Integer den;
    mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Integer m = a.get_num() * (den / a.get_den());
    Integer n = b.get_num() * (den / b.get_den());
    return {EisensteinInt(m, n), den};
}

Rational EisensteinRational::coord_a() const {
    Rational r(num_.m(), den_);
    r.canonicalize();
    return r;
}

Rational EisensteinRational::coord_b() const {
    Rational r(num_.n(), den_);
    r.canonicalize();
    return r;
}

const EisensteinInt& EisensteinRational::as_integer() const {
    if (den_ != 1) throw std::domain_error("as_integer: value is not a lattice element");
    return num_;
}

Rational EisensteinRational::squared_length() const {
    Rational r(num_.norm(), Integer(den_ * den_));
    r.canonicalize();
    return r;
}

EisensteinRational EisensteinRational::operator+(const EisensteinRational& o) const {
    return {num_ * o.den_ + o.num_ * den_, Integer(den_ * o.den_)};
}

EisensteinRational EisensteinRational::operator-(const EisensteinRational& o) const {
    return *this + (-o);
}

EisensteinRational EisensteinRational::operator*(const EisensteinRational& o) const {
    return {num_ * o.num_, Integer(den_ * o.den_)};
}

EisensteinRational EisensteinRational::operator*(const EisensteinInt& g) const {
    return {num_ * g, den_};
}

EisensteinRational EisensteinRational::operator*(const Integer& k) const {
    return {num_ * k, den_};
}

EisensteinRational EisensteinRational::div_by(const EisensteinInt& z) const {
    if (z.is_zero()) throw std::domain_error("div_by: division by zero");
    return {num_ * z.conj(), Integer(den_ * z.norm())};
}

bool EisensteinRational::operator<(const EisensteinRational& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return num_ < o.num_;
}

std::string EisensteinRational::str() const {
    if (den_ == 1) return num_.str();
    return "(" + num_.str() + ")/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const EisensteinRational& y) { return os << y.str(); }

}  // namespace hexcsl
