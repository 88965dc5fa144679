#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace opmine {

/// N-bit subset of a frame's elements; bit k set <=> element k is in the subset.
/// 0 encodes the empty set and is rejected wherever a focal element or a
/// plausibility index is expected.
using SubsetMask = std::uint32_t;

/// Ordered, immutable set of mutually exclusive answer elements for one
/// attribute. Copies share storage, so passing frames by value is cheap.
class FrameOfDiscernment {
public:
    static constexpr std::size_t max_elements = 16;

    /// Throws FrameError on empty list, empty/duplicate names, or more than
    /// max_elements entries.
    explicit FrameOfDiscernment(std::vector<std::string> elements);
    FrameOfDiscernment(std::initializer_list<std::string> elements);

    std::size_t size() const noexcept { return shared_->elements.size(); }
    std::span<const std::string> elements() const noexcept { return shared_->elements; }
    const std::string& element(std::size_t index) const;

    /// Mask with every element bit set (the frame itself).
    SubsetMask full_mask() const noexcept {
        return static_cast<SubsetMask>((1u << shared_->elements.size()) - 1u);
    }
    /// Number of nonempty subsets, 2^N - 1.
    std::size_t subset_count() const noexcept { return full_mask(); }

    std::optional<std::size_t> index_of(std::string_view name) const noexcept;
    bool contains(std::string_view name) const noexcept { return index_of(name).has_value(); }

    /// Mask of the named elements. Throws FrameMismatchError on unknown names.
    SubsetMask mask_of(std::span<const std::string> names) const;
    SubsetMask mask_of(std::initializer_list<std::string_view> names) const;

    /// Element names of `mask` in frame order. Throws FrameMismatchError if
    /// the mask has bits outside the frame, or RangeError for the empty mask.
    std::vector<std::string> names_of(SubsetMask mask) const;

    /// Frames are equal when their element lists are identical.
    bool operator==(const FrameOfDiscernment& other) const noexcept {
        return shared_ == other.shared_ || shared_->elements == other.shared_->elements;
    }

private:
    struct Shared {
        std::vector<std::string> elements;
    };
    std::shared_ptr<const Shared> shared_;
};

}  // namespace opmine
