// opminer: mine frequent opinion patterns from evidential databases.
//
// Subcommands: ingest, mine, assess, synth, sweep, selftest.
// Exit codes: 0 success, 2 usage/input error, 1 internal failure.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opmine/edb_json.hpp"
#include "opmine/errors.hpp"
#include "opmine/json_codec.hpp"
#include "opmine/miner.hpp"
#include "opmine/reliability.hpp"
#include "opmine/survey.hpp"
#include "opmine/synth.hpp"

namespace {

using namespace opmine;

// Bundled expert survey sample (same content as data/s1_sample.csv).
constexpr const char* kBundledSurvey =
    "expert,source,Q1,conf1,Q2,conf2,Q3,conf3,Q4,conf4\n"
    "expert1,S1,High,High,High,High,Moderate,High,High,Moderate\n"
    "expert2,S1,High,VeryHigh,Moderate,VeryHigh,High,VeryHigh,Moderate,VeryHigh\n"
    "expert3,S1,High,High,High,High,High,High,High,High\n"
    "expert4,S1,High,High,Moderate,High,High,High,Moderate,High\n"
    "expert5,S1,Low,VeryHigh,Low,VeryHigh,Moderate,VeryHigh,Moderate,VeryHigh\n"
    "expert6,S1,Moderate,Moderate,Moderate,Moderate,Low,High,Low,High\n"
    "expert7,S1,Moderate,VeryHigh,Moderate,VeryHigh,High,VeryHigh,Moderate,VeryHigh\n"
    "expert8,S1,Moderate,VeryHigh,Low,High,High,VeryHigh,Low,VeryHigh\n"
    "expert9,S1,Moderate,VeryHigh,Moderate,High,High,VeryHigh,Moderate,High\n"
    "expert10,S1,Moderate,High,Moderate,High,Moderate,High,Moderate,High\n"
    "expert11,S1,VeryHigh,VeryHigh,VeryHigh,VeryHigh,VeryHigh,VeryHigh,VeryHigh,VeryHigh\n";

std::string format_support(double value) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(9);
    out << value;
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

EvidentialDatabase load_validated(const std::filesystem::path& path) {
    EvidentialDatabase db = load_json(path);
    const auto issues = validate(db);
    if (!issues.empty()) {
        std::ostringstream msg;
        msg << path.string() << " fails validation:";
        for (const auto& v : issues) {
            msg << "\n  ";
            if (v.row) {
                msg << "row " << *v.row << " ";
            }
            if (v.attribute) {
                msg << "attribute " << *v.attribute << " ";
            }
            msg << v.message;
        }
        throw SchemaError(msg.str());
    }
    return db;
}

Json patterns_to_json(const MiningResult& result, const EvidentialDatabase& db, double minsup,
                      std::size_t maxlen) {
    Json root;
    root["minsup"] = minsup;
    root["maxlen"] = maxlen == 0 ? db.attribute_count() : maxlen;
    root["pattern_count"] = result.patterns.size();
    root["patterns"] = Json::array();
    for (const auto& mined : result.patterns) {
        Json p;
        p["length"] = mined.items.size();
        p["support"] = mined.support;
        p["support_text"] = format_support(mined.support);
        p["items"] = Json::array();
        for (std::uint32_t id : mined.items) {
            const Item& item = result.catalog.item(id);
            Json entry;
            entry["attribute"] = db.attribute(item.attribute).name;
            entry["bba"] = bba_to_json(item.bba);
            p["items"].push_back(std::move(entry));
        }
        root["patterns"].push_back(std::move(p));
    }
    return root;
}

// "db.edb.json" + "S1" -> "db.S1.edb.json": the source lands after the stem,
// before the whole extension chain.
std::filesystem::path per_source_path(const std::filesystem::path& out, const std::string& source) {
    const std::string name = out.filename().string();
    const std::size_t dot = name.find('.');
    const std::string updated = dot == std::string::npos
                                    ? name + "." + source
                                    : name.substr(0, dot) + "." + source + name.substr(dot);
    std::filesystem::path path = out;
    path.replace_filename(updated);
    return path;
}

int run_ingest(const std::string& survey, const std::string& confmap, const std::string& out,
               const std::string& source) {
    const SurveyData data = parse_survey_csv(survey);
    const ConfidenceMap conf = confmap.empty() ? ConfidenceMap() : parse_confidence_map_json(confmap);
    const auto sources = sources_of(data);
    if (sources.empty()) {
        throw LabelError("survey has no records");
    }

    if (!source.empty()) {
        const SurveyData picked = filter_source(data, source);
        if (picked.records.empty()) {
            throw LabelError("source '" + source + "' does not appear in the survey");
        }
        const EvidentialDatabase db = build_edb(picked, conf);
        save_json(db, out);
        std::cout << out << ": " << db.row_count() << " rows x " << db.attribute_count()
                  << " attributes (source " << source << ")\n";
        return 0;
    }
    if (sources.size() == 1) {
        const EvidentialDatabase db = build_edb(data, conf);
        save_json(db, out);
        std::cout << out << ": " << db.row_count() << " rows x " << db.attribute_count()
                  << " attributes (source " << sources.front() << ")\n";
        return 0;
    }
    for (const auto& s : sources) {
        const EvidentialDatabase db = build_edb(filter_source(data, s), conf);
        const auto path = per_source_path(out, s);
        save_json(db, path);
        std::cout << path.string() << ": " << db.row_count() << " rows x " << db.attribute_count()
                  << " attributes (source " << s << ")\n";
    }
    return 0;
}

int run_mine(const std::string& edb, double minsup, std::size_t maxlen, const std::string& out) {
    const EvidentialDatabase db = load_validated(edb);
    const MinerConfig config{minsup, maxlen};
    validate_config(config);
    const MiningResult result = opminer(db, config);
    write_text_file(out, patterns_to_json(result, db, minsup, maxlen).dump(2) + "\n");
    std::cout << result.patterns.size() << " frequent patterns (minsup " << minsup << ") -> " << out
              << "\n";
    return 0;
}

int run_assess(const std::string& edb, const std::vector<double>& ladder, std::size_t maxlen,
               const std::string& out, bool text) {
    const EvidentialDatabase db = load_validated(edb);
    AssessConfig config;
    if (!ladder.empty()) {
        config.minsup_ladder = ladder;
    }
    config.maxlen = maxlen;
    const SourceReport report = assess_source(db, config);
    if (!out.empty()) {
        write_text_file(out, report_json(report) + "\n");
    }
    if (text || out.empty()) {
        std::cout << report_text(report);
    } else {
        std::cout << "verdict: " << to_string(report.verdict) << " -> " << out << "\n";
    }
    return 0;
}

int run_synth(std::size_t rows, std::size_t attributes, std::size_t frame_size,
              std::size_t max_focal, double p_certain, std::uint64_t seed, const std::string& out) {
    const SynthConfig config{rows, attributes, frame_size, max_focal, p_certain, seed};
    const EvidentialDatabase db = generate(config);
    save_json(db, out);
    std::cout << out << ": " << db.row_count() << " rows x " << db.attribute_count()
              << " attributes (seed " << seed << ")\n";
    return 0;
}

int run_sweep(const std::string& edb, const std::vector<double>& minsups, std::size_t maxlen,
              const std::string& out) {
    const EvidentialDatabase db = load_validated(edb);
    const auto curve = sweep(db, minsups, maxlen);
    const std::string csv = sweep_csv(curve);
    if (out.empty()) {
        std::cout << csv;
    } else {
        write_text_file(out, csv);
        std::cout << curve.size() << " sweep points -> " << out << "\n";
    }
    return 0;
}

struct SelfCheck {
    const char* name;
    double got;
    double want;
    double tolerance;
};

int run_selftest() {
    int failures = 0;
    auto check = [&](const SelfCheck& c) {
        const bool ok = std::abs(c.got - c.want) <= c.tolerance;
        std::cout << (ok ? "ok   " : "FAIL ") << c.name << ": " << format_support(c.got)
                  << " (expected " << format_support(c.want) << " +/- " << c.tolerance << ")\n";
        failures += ok ? 0 : 1;
    };

    // Two-practitioner treatments example.
    const FrameOfDiscernment gab{"Good", "Average", "Bad"};
    const MassFunction m11 = make_bba(gab, {{gab.mask_of({"Good"}), 0.7}, {gab.full_mask(), 0.3}});
    const MassFunction m21 = make_bba(gab, {{gab.mask_of({"Good"}), 0.6}, {gab.full_mask(), 0.4}});
    const MassFunction m12 = make_bba(
        gab, {{gab.mask_of({"Good"}), 0.4}, {gab.mask_of({"Average"}), 0.2}, {gab.full_mask(), 0.4}});
    const MassFunction m22 = make_bba(gab, {{gab.mask_of({"Good"}), 0.3}, {gab.full_mask(), 0.7}});
    std::vector<EvidentialDatabase::Row> rows;
    rows.push_back({"P1", {m11, m12}});
    rows.push_back({"P2", {m21, m22}});
    const EvidentialDatabase treatments({{"Treatment1", gab}, {"Treatment2", gab}}, std::move(rows));

    check({"commitment(m11, m21)", commitment(m11, m21), 0.826795, 1e-6});
    check({"commitment(m12, m22)", commitment(m12, m22), 0.564110, 1e-6});
    const auto tproj = pl_project(treatments);
    check({"support({m11, m12})", support({{0, m11}, {1, m12}}, tproj), 0.733202, 1e-6});

    const auto mined = opminer(treatments, {0.7, 2});
    check({"patterns at minsup 0.7", static_cast<double>(mined.patterns.size()), 3.0, 0.0});

    // Bundled survey sample.
    const EvidentialDatabase s1 = build_edb(parse_survey_csv_text(kBundledSurvey));
    const auto proj = pl_project(s1);
    const auto& scale = evaluation_scale();
    check({"support(Q3 = certain High)", support({{2, certain_bba(scale, "High")}}, proj), 0.404619,
           1e-4});
    check({"support(Q1 = certain Moderate)", support({{0, certain_bba(scale, "Moderate")}}, proj),
           0.293219, 1e-4});

    const SourceReport report = assess_source(s1);
    check({"best coverage support", report.has_best_pattern ? report.best_support : -1.0, 0.095528,
           1e-5});
    check({"positivity", report.positivity, 0.5625, 1e-9});
    {
        const bool pattern_ok = report.per_question.size() == 4 &&
                                report.per_question[0].evaluation == "Moderate" &&
                                report.per_question[1].evaluation == "Moderate" &&
                                report.per_question[2].evaluation == "High" &&
                                report.per_question[3].evaluation == "Moderate";
        std::cout << (pattern_ok ? "ok   " : "FAIL ") << "best pattern reads Mo/Mo/Hig/Mo\n";
        failures += pattern_ok ? 0 : 1;
        const bool verdict_ok = report.verdict == Verdict::moderate;
        std::cout << (verdict_ok ? "ok   " : "FAIL ") << "verdict: " << to_string(report.verdict)
                  << " (expected moderate)\n";
        failures += verdict_ok ? 0 : 1;
    }

    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frequent opinion-pattern mining over evidential databases"};
    app.require_subcommand(1);
    int rc = 0;

    // ingest
    std::string in_survey, in_confmap, in_out, in_source;
    auto* ingest = app.add_subcommand("ingest", "Build evidential databases from a survey CSV");
    ingest->add_option("--survey", in_survey, "survey CSV file")->required();
    ingest->add_option("--confmap", in_confmap, "JSON confidence->rate override");
    ingest->add_option("--out", in_out, "output EDB JSON path")->required();
    ingest->add_option("--source", in_source, "keep only this source");
    ingest->callback([&] { rc = run_ingest(in_survey, in_confmap, in_out, in_source); });

    // mine
    std::string mi_edb, mi_out;
    double mi_minsup = 0.5;
    std::size_t mi_maxlen = 0;
    auto* mine = app.add_subcommand("mine", "Mine frequent opinion patterns");
    mine->add_option("--edb", mi_edb, "EDB JSON file")->required();
    mine->add_option("--minsup", mi_minsup, "support threshold in [0,1]")->required();
    mine->add_option("--maxlen", mi_maxlen, "longest pattern (0 = all attributes)");
    mine->add_option("--out", mi_out, "output patterns JSON path")->required();
    mine->callback([&] { rc = run_mine(mi_edb, mi_minsup, mi_maxlen, mi_out); });

    // assess
    std::string as_edb, as_out;
    std::vector<double> as_ladder;
    std::size_t as_maxlen = 0;
    bool as_text = false;
    auto* assess = app.add_subcommand("assess", "Assess source reliability");
    assess->add_option("--edb", as_edb, "EDB JSON file")->required();
    assess->add_option("--minsup-ladder", as_ladder, "decreasing thresholds, e.g. 0.3,0.2,0.1")
        ->delimiter(',');
    assess->add_option("--maxlen", as_maxlen, "longest pattern (0 = all attributes)");
    assess->add_option("--out", as_out, "output report JSON path");
    assess->add_flag("--text", as_text, "also print the human-readable table");
    assess->callback([&] { rc = run_assess(as_edb, as_ladder, as_maxlen, as_out, as_text); });

    // synth
    std::size_t sy_rows = 100, sy_attrs = 4, sy_frame = 3, sy_focal = 2;
    double sy_pcertain = 0.3;
    std::uint64_t sy_seed = 1;
    std::string sy_out;
    auto* synth = app.add_subcommand("synth", "Generate a seeded synthetic database");
    synth->add_option("--rows", sy_rows, "transactions");
    synth->add_option("--attributes", sy_attrs, "attributes");
    synth->add_option("--frame-size", sy_frame, "elements per frame (1..16)");
    synth->add_option("--max-focal", sy_focal, "focal sets per BBA");
    synth->add_option("--p-certain", sy_pcertain, "probability of a certain cell");
    synth->add_option("--seed", sy_seed, "generator seed");
    synth->add_option("--out", sy_out, "output EDB JSON path")->required();
    synth->callback(
        [&] { rc = run_synth(sy_rows, sy_attrs, sy_frame, sy_focal, sy_pcertain, sy_seed, sy_out); });

    // sweep
    std::string sw_edb, sw_out;
    std::vector<double> sw_minsups;
    std::size_t sw_maxlen = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Pattern counts and timings across thresholds");
    sweep_cmd->add_option("--edb", sw_edb, "EDB JSON file")->required();
    sweep_cmd->add_option("--minsups", sw_minsups, "increasing thresholds, e.g. 0.1,0.2,0.3")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--maxlen", sw_maxlen, "longest pattern (0 = all attributes)");
    sweep_cmd->add_option("--out", sw_out, "output CSV path (stdout when omitted)");
    sweep_cmd->callback([&] { rc = run_sweep(sw_edb, sw_minsups, sw_maxlen, sw_out); });

    // selftest
    auto* selftest = app.add_subcommand("selftest", "Run the built-in acceptance vectors");
    selftest->callback([&] { rc = run_selftest(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
