#include "opmine/frame.hpp"

#include <algorithm>

#include "opmine/errors.hpp"

namespace opmine {

FrameOfDiscernment::FrameOfDiscernment(std::vector<std::string> elements) {
    if (elements.empty()) {
        throw FrameError("frame needs at least one element");
    }
    if (elements.size() > max_elements) {
        throw FrameError("frame has " + std::to_string(elements.size()) + " elements, limit is " +
                         std::to_string(max_elements));
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].empty()) {
            throw FrameError("frame element " + std::to_string(i) + " has an empty name");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (elements[k] == elements[i]) {
                throw FrameError("duplicate frame element '" + elements[i] + "'");
            }
        }
    }
    shared_ = std::make_shared<const Shared>(Shared{std::move(elements)});
}

FrameOfDiscernment::FrameOfDiscernment(std::initializer_list<std::string> elements)
    : FrameOfDiscernment(std::vector<std::string>(elements)) {}

const std::string& FrameOfDiscernment::element(std::size_t index) const {
    if (index >= shared_->elements.size()) {
        throw RangeError("element index " + std::to_string(index) + " out of range");
    }
    return shared_->elements[index];
}

std::optional<std::size_t> FrameOfDiscernment::index_of(std::string_view name) const noexcept {
    const auto& els = shared_->elements;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (els[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

SubsetMask FrameOfDiscernment::mask_of(std::span<const std::string> names) const {
    SubsetMask mask = 0;
    for (const auto& name : names) {
        auto idx = index_of(name);
        if (!idx) {
            throw FrameMismatchError("element '" + name + "' is not in the frame");
        }
        mask |= SubsetMask(1) << *idx;
    }
    return mask;
}

SubsetMask FrameOfDiscernment::mask_of(std::initializer_list<std::string_view> names) const {
    SubsetMask mask = 0;
    for (auto name : names) {
        auto idx = index_of(name);
        if (!idx) {
            throw FrameMismatchError("element '" + std::string(name) + "' is not in the frame");
        }
        mask |= SubsetMask(1) << *idx;
    }
    return mask;
}

std::vector<std::string> FrameOfDiscernment::names_of(SubsetMask mask) const {
    if (mask == 0) {
        throw RangeError("empty subset has no element names");
    }
    if (mask > full_mask()) {
        throw FrameMismatchError("mask " + std::to_string(mask) + " is outside the frame");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < size(); ++i) {
        if (mask & (SubsetMask(1) << i)) {
            names.push_back(shared_->elements[i]);
        }
    }
    return names;
}

}  // namespace opmine
