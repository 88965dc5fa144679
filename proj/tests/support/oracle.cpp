#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "opmine/errors.hpp"
#include "opmine/synth.hpp"

namespace opmine::oracle {

namespace {

double effective_minsup(double minsup) {
    return minsup > 0.0 ? minsup : std::numeric_limits<double>::denorm_min();
}

double commitment_impl(const MassFunction& pattern, const MassFunction& row, bool clamp) {
    if (!(pattern.frame() == row.frame())) {
        throw FrameMismatchError("commitment needs a common frame");
    }
    const std::vector<double> plp = naive_plausibility(pattern);
    const std::vector<double> plr = naive_plausibility(row);
    for (std::size_t i = 0; i < plp.size(); ++i) {
        if (plp[i] > plr[i] + kPlTolerance) {
            return 0.0;
        }
    }
    double sumsq = 0.0;
    for (std::size_t i = 0; i < plp.size(); ++i) {
        sumsq += (plr[i] - plp[i]) * (plr[i] - plp[i]);
    }
    const double c = 1.0 - std::sqrt(sumsq);
    return clamp ? std::max(0.0, c) : c;
}

double support_impl(const BbaPattern& pattern, const EvidentialDatabase& db, bool clamp) {
    if (pattern.empty()) {
        return 1.0;
    }
    if (db.row_count() == 0) {
        return 0.0;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < db.row_count(); ++i) {
        double prod = 1.0;
        for (const auto& [attribute, bba] : pattern) {
            prod *= commitment_impl(bba, db.cell(i, attribute), clamp);
        }
        total += prod;
    }
    return total / static_cast<double>(db.row_count());
}

}  // namespace

std::vector<double> naive_plausibility(const MassFunction& m) {
    const SubsetMask full = m.frame().full_mask();
    std::vector<double> pl(full, 0.0);
    for (SubsetMask a = 1; a <= full; ++a) {
        for (const auto& [b, mass] : m.focal()) {
            if ((a & b) != 0) {
                pl[a - 1] += mass;
            }
        }
    }
    return pl;
}

double naive_commitment(const MassFunction& pattern, const MassFunction& row) {
    return commitment_impl(pattern, row, true);
}

double naive_commitment_unclamped(const MassFunction& pattern, const MassFunction& row) {
    return commitment_impl(pattern, row, false);
}

double naive_support(const BbaPattern& pattern, const EvidentialDatabase& db) {
    return support_impl(pattern, db, true);
}

double naive_support_unclamped(const BbaPattern& pattern, const EvidentialDatabase& db) {
    return support_impl(pattern, db, false);
}

MiningResult bruteforce_mine(const EvidentialDatabase& db, const MinerConfig& config) {
    validate_config(config);
    if (db.row_count() > 16 || db.attribute_count() > 5) {
        throw SizeError("bruteforce mining is limited to d <= 16, n <= 5");
    }
    for (const auto& attr : db.attributes()) {
        if (attr.frame.size() > 4) {
            throw SizeError("bruteforce mining is limited to frames with N <= 4");
        }
    }
    const double minsup = effective_minsup(config.minsup);
    const std::size_t maxlen =
        config.maxlen == 0 ? db.attribute_count() : std::min(config.maxlen, db.attribute_count());

    ItemCatalog catalog = extract_items(db);
    std::vector<MinedPattern> found;
    IndexPattern current;

    // one-or-no item per attribute, in attribute order
    auto recurse = [&](auto&& self, std::size_t attribute) -> void {
        if (attribute == db.attribute_count()) {
            if (current.empty()) {
                return;
            }
            const double sup = naive_support(materialize(current, catalog), db);
            if (sup >= minsup) {
                found.push_back({current, sup});
            }
            return;
        }
        self(self, attribute + 1);
        if (current.size() < maxlen) {
            auto [first, last] = catalog.attribute_span(attribute);
            for (std::size_t id = first; id < last; ++id) {
                current.push_back(static_cast<std::uint32_t>(id));
                self(self, attribute + 1);
                current.pop_back();
            }
        }
    };
    recurse(recurse, 0);

    std::sort(found.begin(), found.end(), [](const MinedPattern& a, const MinedPattern& b) {
        if (a.items.size() != b.items.size()) {
            return a.items.size() < b.items.size();
        }
        return a.items < b.items;
    });
    return MiningResult{std::move(catalog), std::move(found)};
}

AntiMonoReport check_antimonotonicity(const EvidentialDatabase& db, std::size_t trials,
                                      std::uint64_t seed, const SupportFn& support_fn) {
    const SupportFn sup = support_fn ? support_fn : SupportFn(&naive_support);
    AntiMonoReport report;
    report.trials = trials;
    if (db.attribute_count() == 0) {
        return report;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        // attributes in random order; the first k form X, the next one is y
        std::vector<std::size_t> attrs(db.attribute_count());
        for (std::size_t j = 0; j < attrs.size(); ++j) {
            attrs[j] = j;
        }
        for (std::size_t j = attrs.size(); j > 1; --j) {
            std::swap(attrs[j - 1], attrs[rng() % j]);
        }
        const std::size_t base_len = rng() % db.attribute_count();  // may be 0

        BbaPattern base;
        for (std::size_t k = 0; k < base_len; ++k) {
            const auto& frame = db.attribute(attrs[k]).frame;
            const std::size_t max_focal = std::min<std::size_t>(3, frame.subset_count());
            base.emplace_back(attrs[k], random_bba(frame, max_focal, 0.3, rng));
        }
        std::sort(base.begin(), base.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        const std::size_t ext_attr = attrs[base_len];
        const auto& ext_frame = db.attribute(ext_attr).frame;
        BbaPattern extended = base;
        extended.emplace_back(ext_attr,
                              random_bba(ext_frame, std::min<std::size_t>(3, ext_frame.subset_count()),
                                         0.3, rng));
        std::sort(extended.begin(), extended.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        const double s_base = sup(base, db);
        const double s_ext = sup(extended, db);
        if (s_ext > s_base + 1e-12) {
            report.violations.push_back({base, ext_attr, s_base, s_ext});
        }
    }
    return report;
}

}  // namespace opmine::oracle
