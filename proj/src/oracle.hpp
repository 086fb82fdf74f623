#pragma once

#include <set>
#include <string>
#include <vector>

#include "coincidence.hpp"
#include "eisenstein.hpp"
#include "multilattice.hpp"

namespace hexcsl {

/// A finite piece of a point set: all points with |y|² <= radius², exact.
struct PointPatch {
    std::set<EisensteinRational> points;
    Rational radius;
    std::string source;

    size_t size() const { return points.size(); }
    bool operator==(const PointPatch& o) const { return points == o.points; }
};

/// The points of shift + Γ inside the ball of the given radius.
PointPatch patch(const EisensteinRational& shift, const Rational& radius);

/// The points of shift + z·Z[ξ] inside the ball.
PointPatch coset_patch(const EisensteinRational& shift, const EisensteinInt& z,
                       const Rational& radius);

/// Union of coset patches over a list of shifts.
PointPatch union_patch(const std::vector<EisensteinRational>& shifts, const Rational& radius);

PointPatch multi_patch(const Multilattice& l, const Rational& radius);

/// Image of a patch under an isometry (radius is preserved exactly).
PointPatch apply_patch(const CoincidenceIsometry& r, const PointPatch& p);

/// Exact set intersection; requires equal radii.
PointPatch brute_intersection(const PointPatch& a, const PointPatch& b);

/// Residue count of Γ modulo z·Z[ξ] by exhaustive reduction of a covering box.
Integer brute_index(const EisensteinInt& z);

/// Count of canonical coincidence numerators of norm exactly m by direct scan.
Integer brute_count_csls(const Integer& m);

/// Brute membership y ∈ Γ + rΓ by scanning lattice summands γ with
/// |γ|² <= norm(z) (the minimal coset representative is within covering radius).
bool brute_in_lattice_sum(const EisensteinRational& y, const CoincidenceIsometry& r);

struct MultiIndexResult {
    Rational ball_ratio;     // |L ∩ ball| / |(L ∩ rL) ∩ ball|, boundary-affected
    Rational exact;          // m·norm(z) / #residues of the intersection mod z·Z[ξ]
};

/// Brute multilattice coincidence index from an actual point-set intersection.
MultiIndexResult brute_multilattice_index(const Multilattice& l, const CoincidenceIsometry& r,
                                          const Rational& radius);

/// Same for the shifted multilattice x + L.
MultiIndexResult brute_shifted_multilattice_index(const EisensteinRational& x,
                                                  const Multilattice& l,
                                                  const CoincidenceIsometry& r,
                                                  const Rational& radius);

struct VerificationReport {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
    std::string context;
};

struct SuiteConfig {
    long norm_bound = 50;
    long radius = 15;
    long grid_max_den = 9;
    long property_samples = 10000;
    unsigned long seed = 0x5eedcafe;
};

/// Every registered closed-form-vs-brute-force check, one report per check.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace hexcsl
