#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hexcsl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element m + n*ξ of the ring Z[ξ], where ξ = exp(2πi/3).
///
/// ξ satisfies ξ² + ξ + 1 = 0, so products reduce via ξ² = -1 - ξ.
/// Coordinates are arbitrary-precision integers; all operations are exact.
class EisensteinInt {
public:
    EisensteinInt() : m_(0), n_(0) {}
    EisensteinInt(Integer m, Integer n) : m_(std::move(m)), n_(std::move(n)) {}
    EisensteinInt(long m, long n) : m_(m), n_(n) {}
    explicit EisensteinInt(long m) : m_(m), n_(0) {}

    const Integer& m() const { return m_; }
    const Integer& n() const { return n_; }

    bool is_zero() const { return m_ == 0 && n_ == 0; }
    bool is_one() const { return m_ == 1 && n_ == 0; }
    bool is_unit() const { return norm() == 1; }

    /// Complex conjugate: m + n*ξ  ->  (m - n) - n*ξ.
    EisensteinInt conj() const { return {Integer(m_ - n_), Integer(-n_)}; }

    /// Number-theoretic norm (m - n)² + m·n = |m + n·ξ|².
    /// Nonnegative, zero only at zero, and multiplicative.
    Integer norm() const;

    EisensteinInt operator-() const { return {Integer(-m_), Integer(-n_)}; }
    EisensteinInt operator+(const EisensteinInt& o) const { return {Integer(m_ + o.m_), Integer(n_ + o.n_)}; }
    EisensteinInt operator-(const EisensteinInt& o) const { return {Integer(m_ - o.m_), Integer(n_ - o.n_)}; }
    EisensteinInt operator*(const EisensteinInt& o) const;
    EisensteinInt operator*(const Integer& k) const { return {Integer(m_ * k), Integer(n_ * k)}; }

    bool operator==(const EisensteinInt& o) const { return m_ == o.m_ && n_ == o.n_; }
    bool operator!=(const EisensteinInt& o) const { return !(*this == o); }
    /// Lexicographic order on (m, n); only used for deterministic containers.
    bool operator<(const EisensteinInt& o) const
    { return m_ != o.m_ ? m_ < o.m_ : n_ < o.n_; }

    std::string str() const;

private:
    Integer m_, n_;
};

std::ostream& operator<<(std::ostream& os, const EisensteinInt& g);

inline Integer norm(const EisensteinInt& g) { return g.norm(); }
inline EisensteinInt conj(const EisensteinInt& g) { return g.conj(); }

/// One of the six units of Z[ξ], stored as the exponent k of (1+ξ)^k.
/// 1 + ξ = -ξ² = exp(iπ/3) generates the unit group C₆; the cycle is
/// k = 0..5  ->  1, -ξ², ξ, -1, ξ², -ξ.
class Unit {
public:
    explicit Unit(int k = 0) : k_(((k % 6) + 6) % 6) {}

    int k() const { return k_; }
    EisensteinInt value() const;

    Unit mul(Unit o) const { return Unit(k_ + o.k_); }
    Unit pow(int e) const { return Unit(static_cast<int>(((k_ * static_cast<long>(e)) % 6 + 6) % 6)); }
    Unit inverse() const { return Unit(6 - k_); }
    /// Complex conjugation inverts a unit on the circle.
    Unit conj() const { return inverse(); }

    EisensteinInt times(const EisensteinInt& g) const { return value() * g; }

    bool operator==(Unit o) const { return k_ == o.k_; }
    bool operator!=(Unit o) const { return k_ != o.k_; }
    bool operator<(Unit o) const { return k_ < o.k_; }

    static std::optional<Unit> from_value(const EisensteinInt& g);
    static std::vector<Unit> all();

    std::string str() const;

private:
    int k_;
};

std::ostream& operator<<(std::ostream& os, Unit u);

/// Round num/den (den > 0) to the nearest integer, ties toward -infinity.
Integer round_nearest_half_down(const Integer& num, const Integer& den);

/// Euclidean division: a = q·b + r with norm(r) < norm(b).
/// q is the nearest-lattice-point rounding of a/b in (1, ξ) coordinates,
/// ties toward -infinity in each coordinate.  Throws on b = 0.
std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& a, const EisensteinInt& b);

/// Whether d divides a exactly in Z[ξ] (d != 0).
bool divides(const EisensteinInt& d, const EisensteinInt& a);

/// Exact quotient a/d; throws if d does not divide a.
EisensteinInt exact_div(const EisensteinInt& a, const EisensteinInt& d);

/// Canonical associate: the unique unit multiple of g with complex argument
/// in [0°, 60°), decided by exact sign tests (n >= 0 and m > n).
/// Returns (u, g') with g' = u·g.  Throws on g = 0.
std::pair<Unit, EisensteinInt> canonical_associate(const EisensteinInt& g);

bool is_canonical_associate(const EisensteinInt& g);

/// gcd up to units, returned as a canonical associate.  gcd(0,0) throws.
EisensteinInt gcd(const EisensteinInt& a, const EisensteinInt& b);

struct Bezout {
    EisensteinInt g, s, t;  // s·a + t·b = g, g canonical
};
Bezout gcd_ext(const EisensteinInt& a, const EisensteinInt& b);

enum class PrimeClass { ramified, inert, split };

std::string prime_class_name(PrimeClass c);

struct PrimeFactor {
    EisensteinInt prime;  // canonical associate
    int exponent = 0;
    PrimeClass cls = PrimeClass::split;
};

struct PrimeFactorization {
    Unit unit;
    std::vector<PrimeFactor> factors;  // sorted by (norm, m, n)

    /// unit · ∏ prime^exponent, which reconstructs the factored element.
    EisensteinInt value() const;
};

/// Complete factorization into canonical-associate primes.  The ramified
/// prime (norm 3) is the canonical associate of 1-ξ; inert primes are the
/// rational primes p ≡ 2 (mod 3); split primes have prime norm p ≡ 1 (mod 3)
/// and come in conjugate pairs.  Throws on zero.
PrimeFactorization factor(const EisensteinInt& g);

/// The canonical associate of 1 - ξ, namely 2 + ξ.  Its square is 3 up to a unit.
EisensteinInt ramified_prime();

/// For a rational prime p ≡ 1 (mod 3), the canonical prime ω with norm(ω) = p.
/// Deterministic: a cube root of unity t mod p is found as g^((p-1)/3) for the
/// smallest g = 2, 3, ... with t != 1, and ω = gcd(p, t - ξ).
/// Throws if p is not a prime ≡ 1 (mod 3).
EisensteinInt split_prime(const Integer& p);

/// Factorization of a positive rational integer (trial division plus
/// Pollard rho; adequate for desk-scale norms up to ~10¹²).
std::map<Integer, int> factor_integer(Integer n);

/// Element a + b·ξ of Q(ξ) with rational a, b, stored as num/den with
/// num in Z[ξ], den > 0, and gcd(den, content(num)) = 1.
class EisensteinRational {
public:
    EisensteinRational() : num_(), den_(1) {}
    EisensteinRational(EisensteinInt g) : num_(std::move(g)), den_(1) {}  // NOLINT(google-explicit-constructor)
    EisensteinRational(EisensteinInt num, Integer den);

    static EisensteinRational from_coords(const Rational& a, const Rational& b);

    const EisensteinInt& num() const { return num_; }
    const Integer& den() const { return den_; }

    Rational coord_a() const;  // coefficient of 1
    Rational coord_b() const;  // coefficient of ξ

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }
    /// The underlying lattice element; throws unless den = 1.
    const EisensteinInt& as_integer() const;

    EisensteinRational conj() const { return {num_.conj(), den_}; }
    /// |a + b·ξ|² = a² - a·b + b², exact.
    Rational squared_length() const;

    EisensteinRational operator-() const { return {-num_, den_}; }
    EisensteinRational operator+(const EisensteinRational& o) const;
    EisensteinRational operator-(const EisensteinRational& o) const;
    EisensteinRational operator*(const EisensteinRational& o) const;
    EisensteinRational operator*(const EisensteinInt& g) const;
    EisensteinRational operator*(const Integer& k) const;
    /// Exact division by a nonzero lattice element.
    EisensteinRational div_by(const EisensteinInt& z) const;

    bool operator==(const EisensteinRational& o) const
    { return den_ == o.den_ && num_ == o.num_; }
    bool operator!=(const EisensteinRational& o) const { return !(*this == o); }
    bool operator<(const EisensteinRational& o) const;

    std::string str() const;

private:
    void reduce();

    EisensteinInt num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const EisensteinRational& y);

}  // namespace hexcsl
