#include "multilattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "shifted.hpp"

namespace hexcsl {

Multilattice::Multilattice(std::vector<EisensteinRational> shifts) : shifts_(std::move(shifts)) {
    if (shifts_.empty()) throw std::invalid_argument("multilattice: no shifts");
    if (!shifts_[0].is_zero()) throw std::invalid_argument("multilattice: first shift must be 0");
    for (size_t i = 0; i < shifts_.size(); ++i)
        for (size_t j = i + 1; j < shifts_.size(); ++j)
            if ((shifts_[i] - shifts_[j]).is_integral())
                throw std::invalid_argument("multilattice: shifts differ by a lattice vector");
}

EisensteinRational honeycomb_shift() {
    return {EisensteinInt(2, 1), Integer(3)};
}

Multilattice honeycomb() {
    return Multilattice({EisensteinRational(EisensteinInt(0, 0)), honeycomb_shift()});
}

bool in_gamma_plus_rgamma(const EisensteinRational& y, const CoincidenceIsometry& r) {
    return (y * r.z().conj()).is_integral();
}

SigmaSet sigma(const Multilattice& l, const CoincidenceIsometry& r) {
    SigmaSet out;
    const auto& xs = l.shifts();
    for (int j = 0; j < static_cast<int>(xs.size()); ++j)
        for (int k = 0; k < static_cast<int>(xs.size()); ++k)
            if (in_gamma_plus_rgamma(apply(r, xs[j]) - xs[k], r)) out.pairs.insert({j, k});
    return out;
}

namespace {

Rational index_from_sigma(size_t m, size_t sigma_size, const Integer& nz) {
    Rational out(Integer(m) * nz, Integer(sigma_size));
    out.canonicalize();
    return out;
}

// Solves conj(z)·l ≡ w (mod z) for the coset offset l, reduced mod z.
EisensteinInt coset_offset(const EisensteinInt& w, const EisensteinInt& z) {
    auto bez = gcd_ext(z.conj(), z);
    if (!bez.g.is_one()) throw std::logic_error("coset_offset: numerator not coprime to conjugate");
    return divmod(w * bez.s, z).second;
}

Csml csml_from_pairs(const std::vector<EisensteinRational>& rotated_sources,
                     const std::vector<EisensteinRational>& targets, const SigmaSet& s,
                     const CoincidenceIsometry& r, const Rational& index) {
    Csml out;
    out.z = r.z();
    out.index = index;
    std::set<EisensteinRational> reps;
    for (const auto& [j, k] : s.pairs) {
        EisensteinRational y = rotated_sources[j] - targets[k];
        EisensteinInt l = coset_offset((y * r.z().conj()).as_integer(), r.z());
        reps.insert(reduce_mod_lattice(targets[k] + EisensteinRational(l), r.z()));
    }
    out.components.assign(reps.begin(), reps.end());
    return out;
}

}  // namespace

Rational multilattice_index(const Multilattice& l, const CoincidenceIsometry& r) {
    SigmaSet s = sigma(l, r);
    if (s.pairs.empty()) throw std::domain_error("multilattice_index: empty sigma set");
    return index_from_sigma(l.size(), s.pairs.size(), r.z().norm());
}

Csml csml(const Multilattice& l, const CoincidenceIsometry& r) {
    SigmaSet s = sigma(l, r);
    std::vector<EisensteinRational> rotated;
    rotated.reserve(l.size());
    for (const auto& x : l.shifts()) rotated.push_back(apply(r, x));
    return csml_from_pairs(rotated, l.shifts(), s, r,
                           index_from_sigma(l.size(), s.pairs.size(), r.z().norm()));
}

SigmaSet shifted_sigma(const EisensteinRational& x, const Multilattice& l,
                       const CoincidenceIsometry& r) {
    SigmaSet out;
    const auto& xs = l.shifts();
    for (int j = 0; j < static_cast<int>(xs.size()); ++j)
        for (int k = 0; k < static_cast<int>(xs.size()); ++k)
            if (in_gamma_plus_rgamma(apply(r, x + xs[j]) - (x + xs[k]), r)) out.pairs.insert({j, k});
    return out;
}

Rational shifted_multilattice_index(const EisensteinRational& x, const Multilattice& l,
                                    const CoincidenceIsometry& r) {
    SigmaSet s = shifted_sigma(x, l, r);
    if (s.pairs.empty())
        throw std::domain_error("shifted_multilattice_index: not a coincidence of the shifted multilattice");
    return index_from_sigma(l.size(), s.pairs.size(), r.z().norm());
}

Csml shifted_csml(const EisensteinRational& x, const Multilattice& l,
                  const CoincidenceIsometry& r) {
    SigmaSet s = shifted_sigma(x, l, r);
    if (s.pairs.empty())
        throw std::domain_error("shifted_csml: not a coincidence of the shifted multilattice");
    std::vector<EisensteinRational> rotated, targets;
    rotated.reserve(l.size());
    targets.reserve(l.size());
    for (const auto& xk : l.shifts()) {
        rotated.push_back(apply(r, x + xk));
        targets.push_back(x + xk);
    }
    return csml_from_pairs(rotated, targets, s, r,
                           index_from_sigma(l.size(), s.pairs.size(), r.z().norm()));
}

Integer honeycomb_index(const CoincidenceIsometry& r) {
    RationalShift x{Rational(2, 3), Rational(1, 3)};
    bool accepted = r.reflect() ? oc_member(r, x) : soc_member(r, x);
    return accepted ? r.z().norm() : Integer(2 * r.z().norm());
}

EisensteinRational reduce_mod_lattice(const EisensteinRational& y, const EisensteinInt& z) {
    EisensteinRational q = y.div_by(z);
    EisensteinInt rounded(round_nearest_half_down(q.num().m(), q.den()),
                          round_nearest_half_down(q.num().n(), q.den()));
    return y - EisensteinRational(rounded * z);
}

}  // namespace hexcsl
