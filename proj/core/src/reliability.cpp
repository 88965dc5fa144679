#include "opmine/reliability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "opmine/errors.hpp"
#include "opmine/json_codec.hpp"
#include "opmine/survey.hpp"

namespace opmine {

namespace {

constexpr std::array<double, 5> kLadderAlphas = {0.0, 0.2, 0.4, 0.6, 0.8};

/// Largest-BetP element, first of the frame on ties.
std::size_t dominant_element(const MassFunction& m) {
    const std::vector<double> betp = pignistic(m);
    std::size_t best = 0;
    for (std::size_t i = 1; i < betp.size(); ++i) {
        if (betp[i] > betp[best]) {
            best = i;
        }
    }
    return best;
}

QuestionMode describe_item(const std::string& question, const MassFunction& bba) {
    QuestionMode mode;
    mode.question = question;
    if (bba.is_vacuous()) {
        mode.evaluation = "Any";
        mode.confidence = std::string(kScaleLabels.back());
        return mode;
    }
    const SubsetMask full = bba.frame().full_mask();
    bool simple = true;  // at most one non-ignorance focal, and it is a singleton
    SubsetMask core = 0;
    double theta_mass = 0.0;
    for (const auto& [set, mass] : bba.focal()) {
        if (set == full) {
            theta_mass = mass;
        } else if (core == 0 && std::popcount(set) == 1) {
            core = set;
        } else {
            simple = false;
        }
    }
    if (simple && core != 0) {
        mode.evaluation = bba.frame().element(static_cast<std::size_t>(std::countr_zero(core)));
        std::size_t nearest = 0;
        for (std::size_t i = 1; i < kLadderAlphas.size(); ++i) {
            if (std::abs(kLadderAlphas[i] - theta_mass) < std::abs(kLadderAlphas[nearest] - theta_mass)) {
                nearest = i;
            }
        }
        mode.confidence = std::string(kScaleLabels[nearest]);
    } else {
        mode.evaluation = bba.frame().element(dominant_element(bba));
        mode.confidence = "mixed";
    }
    return mode;
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::high:
            return "high";
        case Verdict::moderate:
            return "moderate";
        case Verdict::low:
            return "low";
    }
    return "low";
}

std::vector<MinedPattern> full_coverage_patterns(std::span<const MinedPattern> frequent,
                                                 std::size_t attribute_count) {
    std::vector<MinedPattern> out;
    for (const MinedPattern& pat : frequent) {
        if (pat.items.size() == attribute_count) {
            out.push_back(pat);
        }
    }
    std::sort(out.begin(), out.end(), [](const MinedPattern& a, const MinedPattern& b) {
        if (a.support != b.support) {
            return a.support > b.support;
        }
        return a.items < b.items;
    });
    return out;
}

double positivity_score(const BbaPattern& pattern) {
    if (pattern.empty()) {
        throw RangeError("positivity of an empty pattern is undefined");
    }
    const FrameOfDiscernment& scale = evaluation_scale();
    const double top_rank = static_cast<double>(scale.size() - 1);
    double sum = 0.0;
    for (const auto& [attribute, bba] : pattern) {
        if (!(bba.frame() == scale)) {
            throw FrameMismatchError("positivity needs items on the five-degree scale");
        }
        const std::vector<double> betp = pignistic(bba);
        double item_score = 0.0;
        for (std::size_t i = 0; i < betp.size(); ++i) {
            const double rank = top_rank - static_cast<double>(i);  // VeryHigh first
            item_score += betp[i] * rank;
        }
        sum += item_score / top_rank;
    }
    return sum / static_cast<double>(pattern.size());
}

SourceReport assess_source(const EvidentialDatabase& db, const AssessConfig& config) {
    for (std::size_t k = 0; k < config.minsup_ladder.size(); ++k) {
        const double step = config.minsup_ladder[k];
        if (!(step > 0.0 && step <= 1.0)) {
            throw RangeError("minsup ladder values must be in (0,1]");
        }
        if (k > 0 && step >= config.minsup_ladder[k - 1]) {
            throw RangeError("minsup ladder must be strictly decreasing");
        }
    }

    SourceReport report;
    report.source = db.source();
    for (const auto& attr : db.attributes()) {
        report.questions.push_back(attr.name);
    }

    for (double minsup : config.minsup_ladder) {
        MiningResult result = opminer(db, {minsup, config.maxlen});
        std::vector<MinedPattern> covering =
            full_coverage_patterns(result.patterns, db.attribute_count());
        if (covering.empty()) {
            continue;
        }
        report.minsup_used = minsup;
        report.has_best_pattern = true;
        report.best_pattern = materialize(covering.front().items, result.catalog);
        report.best_support = covering.front().support;
        for (const auto& [attribute, bba] : report.best_pattern) {
            report.per_question.push_back(describe_item(db.attribute(attribute).name, bba));
        }
        report.positivity = positivity_score(report.best_pattern);
        break;
    }

    if (report.positivity >= config.high_threshold) {
        report.verdict = Verdict::high;
    } else if (report.positivity >= config.moderate_threshold) {
        report.verdict = Verdict::moderate;
    } else {
        report.verdict = Verdict::low;
    }
    return report;
}

std::string report_json(const SourceReport& report, int indent) {
    Json root;
    root["source"] = report.source;
    root["questions"] = report.questions;
    if (report.minsup_used) {
        root["minsup_used"] = *report.minsup_used;
    } else {
        root["minsup_used"] = nullptr;
    }
    if (report.has_best_pattern) {
        Json best;
        best["support"] = report.best_support;
        {
            std::ostringstream sup;
            sup.setf(std::ios::fixed);
            sup.precision(9);
            sup << report.best_support;
            best["support_text"] = sup.str();
        }
        best["items"] = Json::array();
        for (std::size_t k = 0; k < report.best_pattern.size(); ++k) {
            const auto& [attribute, bba] = report.best_pattern[k];
            Json item;
            item["attribute"] = report.questions.at(attribute);
            item["bba"] = bba_to_json(bba);
            best["items"].push_back(std::move(item));
        }
        root["best_pattern"] = std::move(best);
    } else {
        root["best_pattern"] = nullptr;
    }
    root["per_question"] = Json::array();
    for (const auto& mode : report.per_question) {
        Json q;
        q["question"] = mode.question;
        q["evaluation"] = mode.evaluation;
        q["confidence"] = mode.confidence;
        root["per_question"].push_back(std::move(q));
    }
    root["positivity"] = report.positivity;
    root["verdict"] = std::string(to_string(report.verdict));
    return root.dump(indent);
}

std::string report_text(const SourceReport& report) {
    std::ostringstream out;
    out << "source: " << (report.source.empty() ? "(unnamed)" : report.source) << '\n';
    if (!report.has_best_pattern) {
        out << "no full-coverage frequent pattern found\n";
        out << "verdict: " << to_string(report.verdict) << '\n';
        return out.str();
    }
    out.setf(std::ios::fixed);
    out.precision(9);
    out << "minsup used: " << *report.minsup_used << '\n';
    out << "best pattern support: " << report.best_support << '\n';
    std::size_t width = 8;
    for (const auto& mode : report.per_question) {
        width = std::max(width, mode.question.size());
    }
    out << '\n';
    for (const auto& mode : report.per_question) {
        out << "  " << mode.question;
        for (std::size_t pad = mode.question.size(); pad < width + 2; ++pad) {
            out << ' ';
        }
        out << mode.evaluation << " (confidence " << mode.confidence << ")\n";
    }
    out << '\n';
    out.precision(4);
    out << "positivity: " << report.positivity << '\n';
    out << "verdict: " << to_string(report.verdict) << '\n';
    return out.str();
}

}  // namespace opmine
