#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "opmine/edb.hpp"

namespace opmine {

/// Parameters of the deterministic database generator. The stream of draws is
/// fixed by the seed: mt19937_64 plus in-house bounded-integer (rejection) and
/// unit-real (53-bit) samplers, so a config reproduces the same database on
/// any platform.
struct SynthConfig {
    std::size_t rows = 100;
    std::size_t attributes = 4;
    std::size_t frame_size = 3;   // elements per attribute, 1..16
    std::size_t max_focal = 2;    // focal sets per generated BBA, 1..2^N-1
    double p_certain = 0.3;       // chance a cell is a certain BBA
    std::uint64_t seed = 1;
};

/// Random BBA on `frame`: with probability p_certain a certain BBA on a
/// uniform element; otherwise 1..max_focal focal sets (the full frame forced
/// in with probability 1/2) with masses from sorted-uniform spacings.
MassFunction random_bba(const FrameOfDiscernment& frame, std::size_t max_focal, double p_certain,
                        std::mt19937_64& rng);

/// Attributes "A1".."An" over elements "v1".."vN"; rows labelled "t1".."td".
/// Cells are generated row-major. Throws RangeError on an invalid config.
EvidentialDatabase generate(const SynthConfig& config);

struct SweepPoint {
    double minsup;
    std::size_t pattern_count;
    double wall_ms;
};

/// Mines the database at each threshold. The list must be strictly increasing
/// (RangeError otherwise); counts are then non-increasing along the curve.
std::vector<SweepPoint> sweep(const EvidentialDatabase& db, std::span<const double> minsups,
                              std::size_t maxlen = 0);

/// "minsup,pattern_count,wall_ms" rows.
std::string sweep_csv(std::span<const SweepPoint> points);

}  // namespace opmine
