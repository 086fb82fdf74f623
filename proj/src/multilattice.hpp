#pragma once

#include <set>
#include <utility>
#include <vector>

#include "coincidence.hpp"
#include "eisenstein.hpp"

namespace hexcsl {

/// A finite union of shifted copies of the lattice: L = ∪ (x_k + Γ),
/// with x_0 = 0 and pairwise differences of shifts outside Γ.
class Multilattice {
public:
    explicit Multilattice(std::vector<EisensteinRational> shifts);

    const std::vector<EisensteinRational>& shifts() const { return shifts_; }
    size_t size() const { return shifts_.size(); }

private:
    std::vector<EisensteinRational> shifts_;
};

/// The hexagonal packing Γ ∪ (x + Γ) with x = 1/(1-ξ) = (2+ξ)/3.
Multilattice honeycomb();
EisensteinRational honeycomb_shift();

/// Membership y ∈ Γ + rΓ, decided exactly as conj(z)·y ∈ Γ.
/// Valid because Γ + rΓ = (1/conj(z))·Γ: the rotated lattice is (z/conj(z))·Γ
/// and gcd(z, conj(z)) = 1 for every numerator, so conj(z)Γ + zΓ = Γ.
bool in_gamma_plus_rgamma(const EisensteinRational& y, const CoincidenceIsometry& r);

/// Index pairs (j, k) with r·x_j - x_k ∈ Γ + rΓ; controls the coincidence index.
struct SigmaSet {
    std::set<std::pair<int, int>> pairs;
    bool operator==(const SigmaSet& o) const { return pairs == o.pairs; }
};

SigmaSet sigma(const Multilattice& l, const CoincidenceIsometry& r);

/// Coincidence index of the multilattice: (m / |σ|) · norm(z), exact.
Rational multilattice_index(const Multilattice& l, const CoincidenceIsometry& r);

/// The intersection L ∩ rL: a union of cosets of the CSL z·Z[ξ].
/// Component shifts are reduced mod z·Z[ξ] and deduplicated.
struct Csml {
    EisensteinInt z;
    std::vector<EisensteinRational> components;
    Rational index;
};

Csml csml(const Multilattice& l, const CoincidenceIsometry& r);

/// σ of the shifted multilattice x + L, over pairs r(x+x_j) - (x+x_k).
SigmaSet shifted_sigma(const EisensteinRational& x, const Multilattice& l,
                       const CoincidenceIsometry& r);

/// Index of r with respect to x + L; throws std::domain_error when σ is empty
/// (r is then not a coincidence of x + L).
Rational shifted_multilattice_index(const EisensteinRational& x, const Multilattice& l,
                                    const CoincidenceIsometry& r);

Csml shifted_csml(const EisensteinRational& x, const Multilattice& l,
                  const CoincidenceIsometry& r);

/// Closed-form honeycomb index: norm(z) when r is a coincidence of the shifted
/// copy x + Γ (x the honeycomb shift), 2·norm(z) otherwise.
Integer honeycomb_index(const CoincidenceIsometry& r);

/// Canonical representative of y modulo z·Z[ξ] (constant on cosets).
EisensteinRational reduce_mod_lattice(const EisensteinRational& y, const EisensteinInt& z);

}  // namespace hexcsl
