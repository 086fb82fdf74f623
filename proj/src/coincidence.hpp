#pragma once

#include <map>
#include <vector>

#include "eisenstein.hpp"

namespace hexcsl {

/// Whether a primitive z = m + n·ξ is the numerator of a coincidence rotation:
/// true iff 3 does not divide m + n (equivalently 3 does not divide norm(z)).
/// Throws std::invalid_argument unless gcd(m, n) = 1.
bool is_numerator(const EisensteinInt& z);

/// A coincidence isometry of the lattice Z[ξ].
///
/// Rotations act on Q(ξ) as y -> ε·z·y / conj(z); reflections conjugate first:
/// y -> ε·z·conj(y) / conj(z).  The numerator z is stored as its canonical
/// associate (primitive, 3 ∤ m+n), with the canonicalizing unit folded into ε
/// so the acting value is unchanged.
class CoincidenceIsometry {
public:
    static CoincidenceIsometry from_parts(const EisensteinInt& z, Unit eps, bool reflect);
    static CoincidenceIsometry rotation(const EisensteinInt& z, Unit eps)
    { return from_parts(z, eps, false); }
    static CoincidenceIsometry reflection(const EisensteinInt& z, Unit eps)
    { return from_parts(z, eps, true); }
    static CoincidenceIsometry identity() { return rotation(EisensteinInt(1, 0), Unit(0)); }
    /// Reflection along the real axis (complex conjugation).
    static CoincidenceIsometry real_axis_reflection()
    { return reflection(EisensteinInt(1, 0), Unit(0)); }

    const EisensteinInt& z() const { return z_; }
    Unit eps() const { return eps_; }
    bool reflect() const { return reflect_; }
    bool is_rotation() const { return !reflect_; }

    bool operator==(const CoincidenceIsometry& o) const
    { return z_ == o.z_ && eps_ == o.eps_ && reflect_ == o.reflect_; }
    bool operator!=(const CoincidenceIsometry& o) const { return !(*this == o); }

    std::string str() const;

private:
    CoincidenceIsometry(EisensteinInt z, Unit eps, bool reflect)
        : z_(std::move(z)), eps_(eps), reflect_(reflect) {}

    EisensteinInt z_;
    Unit eps_;
    bool reflect_;
};

std::ostream& operator<<(std::ostream& os, const CoincidenceIsometry& r);

/// The exact value ε·z/conj(z) the rotation part multiplies by (modulus 1).
EisensteinRational isometry_value(const CoincidenceIsometry& r);

/// Display-only angle of the value in degrees, normalized to [0, 360).
double angle_degrees(const CoincidenceIsometry& r);

/// Misorientation-style display angle: the rotation angle folded into
/// (-30, 30] by the six-fold lattice symmetry.  Display-only.
double reduced_angle_degrees(const CoincidenceIsometry& r);

/// Exact action on a point of Q(ξ).
EisensteinRational apply(const CoincidenceIsometry& r, const EisensteinRational& y);

/// The coincidence site lattice z·Z[ξ], named by its canonical generator.
struct Csl {
    EisensteinInt z;
    Integer index() const { return z.norm(); }
    bool operator==(const Csl& o) const { return z == o.z; }
};

/// CSL of r (the reflection flag does not change it), and its index norm(z).
Csl csl_of(const CoincidenceIsometry& r);
Integer coincidence_index(const CoincidenceIsometry& r);

/// Direction of the group O(2)-composition: compose(r1, r2) acts as r1 ∘ r2.
CoincidenceIsometry compose(const CoincidenceIsometry& r1, const CoincidenceIsometry& r2);
CoincidenceIsometry inverse(const CoincidenceIsometry& r);

/// Rotation written multiplicatively over the split primes:
/// value = eps · ∏_p (ω_p / conj(ω_p))^{t_p}, finitely many t_p nonzero.
struct ExponentVector {
    Unit eps;
    std::map<Integer, int> t;  // split prime p -> exponent t_p != 0
};

/// z = ∏_{t_p > 0} ω_p^{t_p} · ∏_{t_p < 0} conj(ω_p)^{-t_p}, canonicalized.
/// Keys must be primes ≡ 1 (mod 3); the empty map yields 1.
EisensteinInt numerator_from_exponents(const std::map<Integer, int>& t);

/// Inverse direction; round-trips with numerator_from_exponents.
/// The eps field carries the unit making value(z, eps=1) = eps·∏(ω/ω̄)^t exact.
ExponentVector exponents_from_numerator(const EisensteinInt& z);

/// Exponent normal form of the rotation part of r (value-preserving).
ExponentVector to_exponents(const CoincidenceIsometry& r);
CoincidenceIsometry rotation_from_exponents(const ExponentVector& v);

struct CslEntry {
    Csl csl;
    Integer index;
};

/// All distinct CSLs with index <= max_index, sorted by (index, m, n).
std::vector<CslEntry> enumerate_csls(const Integer& max_index);

/// Number of CSLs of index m: multiplicative with f(p^r) = 2 for p ≡ 1 (mod 3)
/// and 0 for p = 3 or p ≡ 2 (mod 3).
Integer count_csls(const Integer& m);

/// Number of coincidence rotations of index m: 6·count_csls(m).
Integer count_rotations(const Integer& m);

/// The list [f(1), ..., f(max_m)].
std::vector<Integer> dirichlet_coefficients(long max_m);

}  // namespace hexcsl
