#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opmine/edb.hpp"

namespace opmine {

/// The five-degree evaluation scale, best to worst. Both the answer and the
/// confidence columns of a survey use these labels (case-insensitive).
inline constexpr std::array<std::string_view, 5> kScaleLabels = {"VeryHigh", "High", "Moderate",
                                                                 "Low", "VeryLow"};

/// Shared frame over kScaleLabels, in that order.
const FrameOfDiscernment& evaluation_scale();

/// Canonical scale label for a raw token (case-insensitive, spaces/underscores/
/// hyphens ignored, so "very high" and "VeryHigh" match). Empty result when
/// the token is not on the scale.
std::string_view normalize_scale_label(std::string_view raw);

struct SurveyAnswer {
    std::string evaluation;  // scale label; empty = missing answer
    std::string confidence;  // scale label; empty only if evaluation is empty
};

struct SurveyRecord {
    std::string expert;
    std::string source;
    std::vector<SurveyAnswer> answers;  // one per question
};

struct SurveyData {
    std::vector<std::string> questions;  // from the CSV header
    std::vector<SurveyRecord> records;   // input order
};

/// Confidence label -> discount rate alpha. Defaults: VeryHigh confidence is
/// taken at face value (alpha 0) and each step down moves 0.2 more mass to
/// ignorance, up to 0.8 for VeryLow.
class ConfidenceMap {
public:
    ConfidenceMap();
    /// Overrides selected labels. Unknown labels throw LabelError, rates
    /// outside [0,1] throw RangeError.
    explicit ConfidenceMap(const std::map<std::string, double>& overrides);

    double alpha(std::string_view confidence_label) const;  // LabelError on unknown

private:
    std::array<double, kScaleLabels.size()> alphas_;
};

/// JSON override file: {"VeryHigh": 0.0, "High": 0.2, ...} (any subset of keys).
ConfidenceMap parse_confidence_map_json(const std::filesystem::path& path);
ConfidenceMap confidence_map_from_json_string(std::string_view text);

/// CSV with header "expert,source,Q1,conf1,Q2,conf2,...". The question count
/// is taken from the header; labels are validated case-insensitively. Throws
/// IoError for unreadable files and LabelError (with 1-based line/column) for
/// malformed rows or unknown labels.
SurveyData parse_survey_csv(const std::filesystem::path& path);
SurveyData parse_survey_csv_text(std::string_view text);

/// Distinct sources in input order.
std::vector<std::string> sources_of(const SurveyData& data);
/// The subset of records for one source (questions shared).
SurveyData filter_source(const SurveyData& data, std::string_view source);

/// Database for one source: every answer becomes a certain BBA discounted by
/// its confidence rate; missing answers become vacuous cells. All records must
/// carry the same source (filter first). Rows keep input order, labelled by
/// expert, and every question keeps the full five-element frame.
EvidentialDatabase build_edb(const SurveyData& data, const ConfidenceMap& confidence = ConfidenceMap());

}  // namespace opmine
