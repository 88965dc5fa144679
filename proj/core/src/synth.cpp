#include "opmine/synth.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "opmine/errors.hpp"
#include "opmine/miner.hpp"

namespace opmine {

namespace {

// Fixed samplers on top of the raw 64-bit stream; std:: distributions are not
// portable across standard libraries.
double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t draw = rng();
    while (draw >= limit) {
        draw = rng();
    }
    return draw % bound;
}

/// `count` distinct masks from [1, full), i.e. nonempty proper subsets.
std::vector<SubsetMask> sample_proper_subsets(std::mt19937_64& rng, SubsetMask full,
                                              std::size_t count) {
    const std::uint64_t pool = full - 1;  // masks 1 .. full-1
    count = std::min<std::size_t>(count, pool);
    std::vector<SubsetMask> out;
    while (out.size() < count) {
        const SubsetMask mask = static_cast<SubsetMask>(1 + uniform_below(rng, pool));
        if (std::find(out.begin(), out.end(), mask) == out.end()) {
            out.push_back(mask);
        }
    }
    return out;
}

}  // namespace

MassFunction random_bba(const FrameOfDiscernment& frame, std::size_t max_focal, double p_certain,
                        std::mt19937_64& rng) {
    if (max_focal < 1 || max_focal > frame.subset_count()) {
        throw RangeError("max_focal must be in [1, 2^N - 1]");
    }
    if (!(p_certain >= 0.0 && p_certain <= 1.0)) {
        throw RangeError("p_certain must be in [0,1]");
    }
    if (unit_real(rng) < p_certain) {
        const std::size_t e = uniform_below(rng, frame.size());
        return certain_bba(frame, frame.element(e));
    }

    const SubsetMask full = frame.full_mask();
    const std::size_t count = 1 + uniform_below(rng, max_focal);
    std::vector<SubsetMask> masks;
    if (unit_real(rng) < 0.5) {
        masks = sample_proper_subsets(rng, full, count - 1);
        masks.push_back(full);
    } else {
        masks = sample_proper_subsets(rng, full, count);
        if (masks.empty()) {
            masks.push_back(full);  // 1-element frame has no proper subsets
        }
    }

    // Masses as gaps between sorted uniform cuts: uniform over the simplex.
    std::vector<double> cuts;
    cuts.reserve(masks.size() + 1);
    for (std::size_t k = 0; k + 1 < masks.size(); ++k) {
        cuts.push_back(unit_real(rng));
    }
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());

    std::vector<MassFunction::Focal> focal;
    double prev = 0.0;
    for (std::size_t k = 0; k < masks.size(); ++k) {
        focal.emplace_back(masks[k], cuts[k] - prev);
        prev = cuts[k];
    }
    return make_bba(frame, std::move(focal));
}

EvidentialDatabase generate(const SynthConfig& config) {
    if (config.attributes < 1) {
        throw RangeError("generator needs at least one attribute");
    }
    if (config.frame_size < 1 || config.frame_size > FrameOfDiscernment::max_elements) {
        throw RangeError("frame_size must be in [1,16]");
    }
    const std::size_t subsets = (std::size_t(1) << config.frame_size) - 1;
    if (config.max_focal < 1 || config.max_focal > subsets) {
        throw RangeError("max_focal must be in [1, 2^N - 1]");
    }
    if (!(config.p_certain >= 0.0 && config.p_certain <= 1.0)) {
        throw RangeError("p_certain must be in [0,1]");
    }

    std::vector<std::string> elements;
    for (std::size_t e = 0; e < config.frame_size; ++e) {
        elements.push_back("v" + std::to_string(e + 1));
    }
    const FrameOfDiscernment frame(elements);

    std::vector<AttributeSchema> attributes;
    for (std::size_t j = 0; j < config.attributes; ++j) {
        attributes.push_back({"A" + std::to_string(j + 1), frame});
    }

    std::mt19937_64 rng(config.seed);
    std::vector<EvidentialDatabase::Row> rows;
    rows.reserve(config.rows);
    for (std::size_t i = 0; i < config.rows; ++i) {
        EvidentialDatabase::Row row;
        row.label = "t" + std::to_string(i + 1);
        row.cells.reserve(config.attributes);
        for (std::size_t j = 0; j < config.attributes; ++j) {
            row.cells.push_back(random_bba(frame, config.max_focal, config.p_certain, rng));
        }
        rows.push_back(std::move(row));
    }
    return EvidentialDatabase(std::move(attributes), std::move(rows));
}

std::vector<SweepPoint> sweep(const EvidentialDatabase& db, std::span<const double> minsups,
                              std::size_t maxlen) {
    for (std::size_t k = 0; k < minsups.size(); ++k) {
        if (k > 0 && !(minsups[k] > minsups[k - 1])) {
            throw RangeError("minsup list must be strictly increasing");
        }
    }
    std::vector<SweepPoint> out;
    out.reserve(minsups.size());
    for (double minsup : minsups) {
        const auto start = std::chrono::steady_clock::now();
        MiningResult result = opminer(db, {minsup, maxlen});
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        out.push_back({minsup, result.patterns.size(), ms});
    }
    return out;
}

std::string sweep_csv(std::span<const SweepPoint> points) {
    std::ostringstream out;
    out.precision(9);
    out << "minsup,pattern_count,wall_ms\n";
    for (const auto& p : points) {
        out << p.minsup << ',' << p.pattern_count << ',' << p.wall_ms << '\n';
    }
    return out.str();
}

}  // namespace opmine
