#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "opmine/frame.hpp"

namespace opmine {

/// Tolerance for |sum of masses - 1| on a valid BBA.
inline constexpr double kMassTolerance = 1e-9;
/// Tolerance for pointwise plausibility comparisons.
inline constexpr double kPlTolerance = 1e-9;

/// Normalized basic belief assignment: strictly positive masses on nonempty
/// subsets of one frame, summing to 1. Immutable after construction.
class MassFunction {
public:
    using Focal = std::pair<SubsetMask, double>;

    const FrameOfDiscernment& frame() const noexcept { return frame_; }
    /// Focal sets sorted by mask, no zero entries.
    std::span<const Focal> focal() const noexcept { return focal_; }
    std::size_t focal_count() const noexcept { return focal_.size(); }
    /// Mass of `set`, 0 when it is not focal.
    double mass(SubsetMask set) const noexcept;
    double total_mass() const noexcept;
    bool is_vacuous() const noexcept {
        return focal_.size() == 1 && focal_.front().first == frame_.full_mask();
    }

    /// Exact structural equality: same frame, same focal sets and masses.
    bool operator==(const MassFunction& other) const noexcept {
        return frame_ == other.frame_ && focal_ == other.focal_;
    }

    /// Stores the entries as given, without any validation. For loaders that
    /// must stage a database before `validate()` inspects it, and for tests
    /// that need deliberately broken cells.
    static MassFunction unchecked(FrameOfDiscernment frame, std::vector<Focal> focal);

private:
    MassFunction(FrameOfDiscernment frame, std::vector<Focal> focal)
        : frame_(std::move(frame)), focal_(std::move(focal)) {}

    friend MassFunction make_bba(const FrameOfDiscernment&, std::vector<Focal>);

    FrameOfDiscernment frame_;
    std::vector<Focal> focal_;
};

/// Builds a validated BBA. Duplicate masks are summed, zero masses dropped.
/// Throws EmptyFocalError for positive mass on the empty set,
/// FrameMismatchError for masks outside the frame, RangeError for negative or
/// non-finite masses and MassSumError when the total is off 1 by more than
/// kMassTolerance.
MassFunction make_bba(const FrameOfDiscernment& frame, std::vector<MassFunction::Focal> assignments);

/// All mass on the singleton {element}. Throws FrameMismatchError when the
/// element is not in the frame.
MassFunction certain_bba(const FrameOfDiscernment& frame, std::string_view element);

/// All mass on the whole frame (total ignorance).
MassFunction vacuous_bba(const FrameOfDiscernment& frame);

/// Reliability discounting: every mass is scaled by (1 - alpha) and the
/// removed fraction moves to the full frame. alpha = 0 is the identity,
/// alpha = 1 yields the vacuous BBA. Throws RangeError for alpha outside [0,1].
MassFunction discount(const MassFunction& m, double alpha);

/// Pignistic probability over the frame elements: each focal mass is split
/// equally among its members. Indexed like the frame, sums to 1.
std::vector<double> pignistic(const MassFunction& m);

}  // namespace opmine
