#include "opmine/plausibility.hpp"

#include <cmath>

#include "opmine/errors.hpp"

namespace opmine {

PlausibilityVector::PlausibilityVector(FrameOfDiscernment frame, std::vector<double> values)
    : frame_(std::move(frame)), values_(std::move(values)) {
    if (values_.size() != frame_.subset_count()) {
        throw RangeError("plausibility vector has " + std::to_string(values_.size()) +
                         " entries, frame needs " + std::to_string(frame_.subset_count()));
    }
}

double PlausibilityVector::at(SubsetMask set) const {
    if (set == 0) {
        throw RangeError("plausibility of the empty set is not stored");
    }
    if (set > frame_.full_mask()) {
        throw FrameMismatchError("mask " + std::to_string(set) + " is outside the frame");
    }
    return values_[set - 1];
}

PlausibilityVector plausibility(const MassFunction& m) {
    const std::size_t n = m.frame().size();
    const SubsetMask full = m.frame().full_mask();

    // bel[A] = sum of masses of focal sets contained in A, via the zeta transform.
    std::vector<double> bel(std::size_t(full) + 1, 0.0);
    double total = 0.0;
    for (const auto& [set, mass] : m.focal()) {
        bel[set] += mass;
        total += mass;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const SubsetMask bit = SubsetMask(1) << k;
        for (SubsetMask a = 0; a <= full; ++a) {
            if (a & bit) {
                bel[a] += bel[a ^ bit];
            }
        }
    }

    // Pl(A) = total - bel(complement of A): mass not fully outside A intersects it.
    std::vector<double> pl(full);
    for (SubsetMask a = 1; a <= full; ++a) {
        pl[a - 1] = total - bel[full ^ a];
    }
    return PlausibilityVector(m.frame(), std::move(pl));
}

bool pl_leq(const PlausibilityVector& pl1, const PlausibilityVector& pl2) {
    if (!(pl1.frame() == pl2.frame())) {
        throw FrameMismatchError("plausibility ordering needs a common frame");
    }
    const auto v1 = pl1.values();
    const auto v2 = pl2.values();
    for (std::size_t i = 0; i < v1.size(); ++i) {
        if (v1[i] > v2[i] + kPlTolerance) {
            return false;
        }
    }
    return true;
}

bool pl_leq(const MassFunction& m1, const MassFunction& m2) {
    return pl_leq(plausibility(m1), plausibility(m2));
}

double commitment(const PlausibilityVector& pattern, const PlausibilityVector& row) {
    if (!(pattern.frame() == row.frame())) {
        throw FrameMismatchError("commitment needs a common frame");
    }
    const auto vp = pattern.values();
    const auto vr = row.values();
    for (std::size_t i = 0; i < vp.size(); ++i) {
        if (vp[i] > vr[i] + kPlTolerance) {
            return 0.0;
        }
    }
    double sumsq = 0.0;
    for (std::size_t i = 0; i < vp.size(); ++i) {
        const double d = vr[i] - vp[i];
        sumsq += d * d;
    }
    const double c = 1.0 - std::sqrt(sumsq);
    return c > 0.0 ? c : 0.0;
}

double commitment(const MassFunction& pattern, const MassFunction& row) {
    return commitment(plausibility(pattern), plausibility(row));
}

}  // namespace opmine
