#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coincidence.hpp"
#include "eisenstein.hpp"

namespace hexcsl {

/// Shift vector x = a + b·ξ with both coordinates rational.
struct RationalShift {
    Rational a, b;
};

/// a irrational, b rational; the value of a never enters the decision.
struct IrrationalA {
    Rational b;
};

/// a rational, b irrational.
struct IrrationalB {
    Rational a;
};

/// 1, a, b rationally independent.
struct BothIndependent {};

/// a = p1/q1 + (p2/q2)·b with b irrational, both pairs reduced, q_j >= 1, p2 != 0.
struct AffinelyRelated {
    Integer p1, q1, p2, q2;
};

using ShiftSpec = std::variant<RationalShift, IrrationalA, IrrationalB, BothIndependent, AffinelyRelated>;

/// Reduced pairs, positive q_j, p2 != 0 (otherwise the shift would be IrrationalB).
AffinelyRelated make_affinely_related(Integer p1, Integer q1, Integer p2, Integer q2);

EisensteinRational shift_value(const RationalShift& x);

/// x = p/q with p, q in Z[ξ], gcd(p, q) = 1, q a canonical associate.
struct DenominatorForm {
    EisensteinInt p, q;
};

DenominatorForm to_denominator_form(const RationalShift& x);

/// Rotation membership in SOC(x+Γ): q | (ε·z - conj(z)) for x = p/q reduced.
bool soc_member(const CoincidenceIsometry& r, const RationalShift& x);

/// Same decision evaluated directly as (ε·z - conj(z))·x ∈ Γ.
bool soc_member_direct(const CoincidenceIsometry& r, const RationalShift& x);

/// Reflection membership in OC(x+Γ): ε·z·conj(x) - conj(z)·x ∈ Γ.
bool oc_member(const CoincidenceIsometry& t, const RationalShift& x);

/// Dispatch on the reflection flag.
bool member(const CoincidenceIsometry& r, const RationalShift& x);

/// The unit ε for which the lattice reflection T[1, ε] belongs to OC(x+Γ),
/// from the six congruence conditions on (a, b).  Conditions whose linear
/// form vanishes exactly (the reflection axis passes through x) are preferred;
/// within each pass the table order 1, ξ, ξ², -1, -ξ, -ξ² is used.
std::optional<Unit> reflection_unit(const RationalShift& x);

/// Sufficient conditions for OC(x+Γ) to be a group: no prime factor of
/// norm(q) is ≡ 1 (mod 3), or a lattice reflection exists.  False means
/// "not certified", not "not a group".
bool is_group_certified(const RationalShift& x);

enum class SocKind {
    full,      // x ∈ Γ: all of SOC(Γ)
    unit_set,  // membership depends only on ε; units listed
    predicate  // membership decided per numerator by q | (ε·z - conj(z))
};

struct SocDescription {
    SocKind kind;
    std::vector<Unit> units;  // meaningful for full / unit_set
    DenominatorForm den;
    std::string structure;  // human-readable group structure, display only
};

SocDescription soc_unit_set(const RationalShift& x);

enum class OcKind {
    full_oc,
    trivial,
    single_reflection,
    rotation_subgroup_with_reflection,
    rotation_subgroup_only,
    predicate
};

std::string oc_kind_name(OcKind k);

struct OcDescription {
    OcKind kind = OcKind::trivial;
    std::vector<Unit> units;  // surviving rotation units when unit-set shaped
    std::optional<CoincidenceIsometry> reflection;
    bool certified_group = false;
    std::optional<DenominatorForm> den;  // rational shifts only
    std::string structure;
};

/// The at-most-two-element groups of the irrational-shift classification.
/// Throws std::invalid_argument on a RationalShift.
OcDescription oc_group_irrational(const ShiftSpec& x);

/// Full dispatch over rational and irrational shift classes.
OcDescription describe_oc(const ShiftSpec& x);

/// Exact acceptance test for r against a shift class, evaluated symbolically
/// for the irrational variants (the irrational coordinates are kept as
/// indeterminates and their coefficients must vanish).
bool accepts_symbolic(const CoincidenceIsometry& r, const ShiftSpec& x);

/// A coset (shift) + z·Z[ξ] of a CSL inside Q(ξ).
struct CosetCsl {
    EisensteinRational shift;
    EisensteinInt z;
    Integer index() const { return z.norm(); }
};

/// The intersection (x+Γ) ∩ r(x+Γ) = (x+ℓ) + z·Z[ξ], with ℓ obtained from the
/// Bézout solution of conj(z)·ℓ ≡ conj(z)·(r·x - x) (mod z), reduced mod z.
/// Throws std::domain_error unless r ∈ OC(x+Γ).
CosetCsl shifted_csl(const CoincidenceIsometry& r, const RationalShift& x);

/// Normalization helper: an equivalent shift (under the point group and
/// lattice translations) inside the fundamental domain 0 <= 4b <= 2a <= b+1.
RationalShift normalize_to_fundamental_domain(const RationalShift& x);

bool in_fundamental_domain(const Rational& a, const Rational& b);

}  // namespace hexcsl
