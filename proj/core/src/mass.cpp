#include "opmine/mass.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "opmine/errors.hpp"

namespace opmine {

double MassFunction::mass(SubsetMask set) const noexcept {
    auto it = std::lower_bound(focal_.begin(), focal_.end(), set,
                               [](const Focal& f, SubsetMask m) { return f.first < m; });
    return (it != focal_.end() && it->first == set) ? it->second : 0.0;
}

double MassFunction::total_mass() const noexcept {
    double sum = 0.0;
    for (const auto& [set, m] : focal_) {
        sum += m;
    }
    return sum;
}

MassFunction MassFunction::unchecked(FrameOfDiscernment frame, std::vector<Focal> focal) {
    std::stable_sort(focal.begin(), focal.end(),
                     [](const Focal& a, const Focal& b) { return a.first < b.first; });
    return MassFunction(std::move(frame), std::move(focal));
}

MassFunction make_bba(const FrameOfDiscernment& frame, std::vector<MassFunction::Focal> assignments) {
    const SubsetMask full = frame.full_mask();
    std::map<SubsetMask, double> merged;
    for (const auto& [set, mass] : assignments) {
        if (!(mass >= 0.0) || !std::isfinite(mass)) {
            throw RangeError("focal mass must be a finite value >= 0");
        }
        if (set == 0) {
            if (mass > 0.0) {
                throw EmptyFocalError("positive mass on the empty set");
            }
            continue;
        }
        if (set > full) {
            throw FrameMismatchError("focal mask " + std::to_string(set) + " is outside the frame");
        }
        merged[set] += mass;
    }

    double sum = 0.0;
    std::vector<MassFunction::Focal> focal;
    focal.reserve(merged.size());
    for (const auto& [set, mass] : merged) {
        if (mass == 0.0) {
            continue;
        }
        focal.emplace_back(set, mass);
        sum += mass;
    }
    if (std::abs(sum - 1.0) > kMassTolerance) {
        throw MassSumError("masses sum to " + std::to_string(sum) + ", expected 1");
    }
    return MassFunction(frame, std::move(focal));
}

MassFunction certain_bba(const FrameOfDiscernment& frame, std::string_view element) {
    auto idx = frame.index_of(element);
    if (!idx) {
        throw FrameMismatchError("element '" + std::string(element) + "' is not in the frame");
    }
    return make_bba(frame, {{SubsetMask(1) << *idx, 1.0}});
}

MassFunction vacuous_bba(const FrameOfDiscernment& frame) {
    return make_bba(frame, {{frame.full_mask(), 1.0}});
}

MassFunction discount(const MassFunction& m, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw RangeError("discount rate must be in [0,1]");
    }
    const SubsetMask full = m.frame().full_mask();
    std::vector<MassFunction::Focal> focal;
    focal.reserve(m.focal_count() + 1);
    double theta = alpha;
    for (const auto& [set, mass] : m.focal()) {
        if (set == full) {
            theta += (1.0 - alpha) * mass;
        } else {
            focal.emplace_back(set, (1.0 - alpha) * mass);
        }
    }
    focal.emplace_back(full, theta);
    return make_bba(m.frame(), std::move(focal));
}

std::vector<double> pignistic(const MassFunction& m) {
    std::vector<double> betp(m.frame().size(), 0.0);
    for (const auto& [set, mass] : m.focal()) {
        const double share = mass / std::popcount(set);
        for (std::size_t i = 0; i < betp.size(); ++i) {
            if (set & (SubsetMask(1) << i)) {
                betp[i] += share;
            }
        }
    }
    return betp;
}

}  // namespace opmine
