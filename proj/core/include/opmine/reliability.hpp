#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opmine/miner.hpp"

namespace opmine {

enum class Verdict { high, moderate, low };

std::string_view to_string(Verdict v);

struct AssessConfig {
    /// Strictly decreasing thresholds tried until a full-coverage pattern
    /// exists. Full-coverage supports are products over all questions, so the
    /// ladder reaches well below typical single-item thresholds.
    std::vector<double> minsup_ladder = {0.3, 0.2, 0.1, 0.05};
    std::size_t maxlen = 0;  // 0 = question count
    double high_threshold = 0.75;
    double moderate_threshold = 0.45;
};

/// The dominant reading of one question in the best pattern.
struct QuestionMode {
    std::string question;
    std::string evaluation;  // scale label ("Any" for a vacuous item)
    std::string confidence;  // scale label recovered from the ignorance mass, or "mixed"
};

struct SourceReport {
    std::string source;
    std::vector<std::string> questions;
    std::optional<double> minsup_used;  // ladder step that produced the pattern
    bool has_best_pattern = false;
    BbaPattern best_pattern;  // ordered by attribute
    double best_support = 0.0;
    std::vector<QuestionMode> per_question;
    double positivity = 0.0;
    Verdict verdict = Verdict::low;
};

/// Patterns touching every attribute, sorted by support descending (ties by
/// item ids).
std::vector<MinedPattern> full_coverage_patterns(std::span<const MinedPattern> frequent,
                                                 std::size_t attribute_count);

/// Mean over items of the pignistic rank expectation on the five-degree scale
/// (VeryLow = 0 ... VeryHigh = 4, normalized by 4). Throws RangeError for an
/// empty pattern and FrameMismatchError when an item is not on the scale.
double positivity_score(const BbaPattern& pattern);

/// Mines the database down the minsup ladder until a full-coverage pattern
/// appears, scores the best one and turns it into a verdict. A database with
/// no full-coverage pattern at any ladder step yields a report without a best
/// pattern and a low verdict.
SourceReport assess_source(const EvidentialDatabase& db, const AssessConfig& config = AssessConfig());

/// Machine-readable report (fields mirror SourceReport).
std::string report_json(const SourceReport& report, int indent = 2);
/// Human-readable table.
std::string report_text(const SourceReport& report);

}  // namespace opmine
