#include "opmine/survey.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "opmine/errors.hpp"

namespace opmine {

namespace {

constexpr std::array<double, 5> kDefaultAlphas = {0.0, 0.2, 0.4, 0.6, 0.8};

std::string fold(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        if (c == ' ' || c == '\t' || c == '_' || c == '-') {
            continue;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

std::size_t scale_index(std::string_view label) {
    const std::string folded = fold(label);
    for (std::size_t i = 0; i < kScaleLabels.size(); ++i) {
        if (folded == fold(kScaleLabels[i])) {
            return i;
        }
    }
    return kScaleLabels.size();
}

}  // namespace

const FrameOfDiscernment& evaluation_scale() {
    static const FrameOfDiscernment scale(
        std::vector<std::string>(kScaleLabels.begin(), kScaleLabels.end()));
    return scale;
}

std::string_view normalize_scale_label(std::string_view raw) {
    const std::size_t i = scale_index(raw);
    return i < kScaleLabels.size() ? kScaleLabels[i] : std::string_view{};
}

ConfidenceMap::ConfidenceMap() : alphas_(kDefaultAlphas) {}

ConfidenceMap::ConfidenceMap(const std::map<std::string, double>& overrides) : alphas_(kDefaultAlphas) {
    for (const auto& [label, alpha] : overrides) {
        const std::size_t i = scale_index(label);
        if (i >= kScaleLabels.size()) {
            throw LabelError("unknown confidence label '" + label + "'");
        }
        if (!(alpha >= 0.0 && alpha <= 1.0)) {
            throw RangeError("confidence rate for '" + label + "' must be in [0,1]");
        }
        alphas_[i] = alpha;
    }
}

double ConfidenceMap::alpha(std::string_view confidence_label) const {
    const std::size_t i = scale_index(confidence_label);
    if (i >= kScaleLabels.size()) {
        throw LabelError("unknown confidence label '" + std::string(confidence_label) + "'");
    }
    return alphas_[i];
}

ConfidenceMap confidence_map_from_json_string(std::string_view text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw SchemaError(std::string("$: ") + err.what());
    }
    if (!root.is_object()) {
        throw SchemaError("$: expected an object of label -> rate");
    }
    std::map<std::string, double> overrides;
    for (const auto& [key, value] : root.items()) {
        if (!value.is_number()) {
            throw SchemaError("$." + key + ": expected a number");
        }
        overrides[key] = value.get<double>();
    }
    return ConfidenceMap(overrides);
}

ConfidenceMap parse_confidence_map_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return confidence_map_from_json_string(buf.str());
}

SurveyData parse_survey_csv_text(std::string_view text) {
    SurveyData data;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::size_t expected_fields = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trim(line).empty()) {
            continue;
        }
        std::vector<std::string> fields = split_csv_line(line);
        if (lineno == 1) {
            if (fields.size() < 4 || fields.size() % 2 != 0) {
                throw LabelError("header must be expert,source,Q1,conf1,...", 1, fields.size());
            }
            if (fold(fields[0]) != "expert" || fold(fields[1]) != "source") {
                throw LabelError("header must start with 'expert,source'", 1, 1);
            }
            for (std::size_t c = 2; c < fields.size(); c += 2) {
                if (fields[c].empty()) {
                    throw LabelError("empty question name in header", 1, c + 1);
                }
                data.questions.push_back(fields[c]);
            }
            expected_fields = fields.size();
            continue;
        }
        if (fields.size() != expected_fields) {
            throw LabelError("row has " + std::to_string(fields.size()) + " fields, header has " +
                                 std::to_string(expected_fields),
                             lineno, fields.size());
        }
        SurveyRecord rec;
        rec.expert = fields[0];
        rec.source = fields[1];
        if (rec.expert.empty()) {
            throw LabelError("empty expert id", lineno, 1);
        }
        if (rec.source.empty()) {
            throw LabelError("empty source id", lineno, 2);
        }
        for (std::size_t q = 0; q < data.questions.size(); ++q) {
            const std::size_t eval_col = 2 + 2 * q;
            const std::size_t conf_col = eval_col + 1;
            SurveyAnswer answer;
            if (!fields[eval_col].empty()) {
                const auto eval = normalize_scale_label(fields[eval_col]);
                if (eval.empty()) {
                    throw LabelError("unknown evaluation label '" + fields[eval_col] + "'", lineno,
                                     eval_col + 1);
                }
                if (fields[conf_col].empty()) {
                    throw LabelError("answer without a confidence", lineno, conf_col + 1);
                }
                const auto conf = normalize_scale_label(fields[conf_col]);
                if (conf.empty()) {
                    throw LabelError("unknown confidence label '" + fields[conf_col] + "'", lineno,
                                     conf_col + 1);
                }
                answer.evaluation = std::string(eval);
                answer.confidence = std::string(conf);
            }
            rec.answers.push_back(std::move(answer));
        }
        data.records.push_back(std::move(rec));
    }
    if (data.questions.empty()) {
        throw LabelError("empty survey: no header found", lineno == 0 ? 1 : lineno, 1);
    }
    return data;
}

SurveyData parse_survey_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_survey_csv_text(buf.str());
}

std::vector<std::string> sources_of(const SurveyData& data) {
    std::vector<std::string> out;
    for (const auto& rec : data.records) {
        if (std::find(out.begin(), out.end(), rec.source) == out.end()) {
            out.push_back(rec.source);
        }
    }
    return out;
}

SurveyData filter_source(const SurveyData& data, std::string_view source) {
    SurveyData out;
    out.questions = data.questions;
    for (const auto& rec : data.records) {
        if (rec.source == source) {
            out.records.push_back(rec);
        }
    }
    return out;
}

EvidentialDatabase build_edb(const SurveyData& data, const ConfidenceMap& confidence) {
    std::string source;
    for (const auto& rec : data.records) {
        if (source.empty()) {
            source = rec.source;
        } else if (rec.source != source) {
            throw LabelError("records span sources '" + source + "' and '" + rec.source +
                             "'; filter to one source first");
        }
    }

    const FrameOfDiscernment& scale = evaluation_scale();
    std::vector<AttributeSchema> attributes;
    attributes.reserve(data.questions.size());
    for (const auto& q : data.questions) {
        attributes.push_back({q, scale});
    }

    std::vector<EvidentialDatabase::Row> rows;
    rows.reserve(data.records.size());
    for (const auto& rec : data.records) {
        EvidentialDatabase::Row row;
        row.label = rec.expert;
        row.cells.reserve(data.questions.size());
        for (std::size_t q = 0; q < data.questions.size(); ++q) {
            if (q >= rec.answers.size() || rec.answers[q].evaluation.empty()) {
                row.cells.push_back(vacuous_bba(scale));
            } else {
                const auto& answer = rec.answers[q];
                row.cells.push_back(
                    discount(certain_bba(scale, answer.evaluation), confidence.alpha(answer.confidence)));
            }
        }
        rows.push_back(std::move(row));
    }
    return EvidentialDatabase(std::move(attributes), std::move(rows), std::move(source));
}

}  // namespace opmine
