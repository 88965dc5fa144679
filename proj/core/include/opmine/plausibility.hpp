#pragma once

#include <span>
#include <vector>

#include "opmine/mass.hpp"

namespace opmine {

/// Dense plausibility over all nonempty subsets of a frame.
/// values()[mask - 1] == Pl(mask) for mask in [1, 2^N - 1].
class PlausibilityVector {
public:
    PlausibilityVector(FrameOfDiscernment frame, std::vector<double> values);

    const FrameOfDiscernment& frame() const noexcept { return frame_; }
    std::span<const double> values() const noexcept { return values_; }

    /// Pl of a nonempty subset. Throws RangeError for the empty mask,
    /// FrameMismatchError for masks outside the frame.
    double at(SubsetMask set) const;

    bool operator==(const PlausibilityVector& other) const noexcept {
        return frame_ == other.frame_ && values_ == other.values_;
    }

private:
    FrameOfDiscernment frame_;
    std::vector<double> values_;
};

/// Plausibility of every nonempty subset: Pl(A) = sum of masses intersecting A.
/// Computed with a subset-sum (zeta) transform in O(N * 2^N).
PlausibilityVector plausibility(const MassFunction& m);

/// Plausibility ordering: true when Pl1(A) <= Pl2(A) + kPlTolerance for every
/// nonempty A, i.e. m1 is at least as committed as m2.
/// Throws FrameMismatchError when the frames differ.
bool pl_leq(const PlausibilityVector& pl1, const PlausibilityVector& pl2);
bool pl_leq(const MassFunction& m1, const MassFunction& m2);

/// Commitment of `row` with respect to `pattern`: when the row's plausibility
/// dominates the pattern's pointwise, 1 minus the L2 distance between the two
/// plausibility vectors over all nonempty subsets, clamped into [0,1];
/// otherwise 0. Throws FrameMismatchError when the frames differ.
double commitment(const PlausibilityVector& pattern, const PlausibilityVector& row);
double commitment(const MassFunction& pattern, const MassFunction& row);

}  // namespace opmine
