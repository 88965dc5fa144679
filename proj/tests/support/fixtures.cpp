#include "fixtures.hpp"

#ifndef OPMINE_DATA_DIR
#error "OPMINE_DATA_DIR must point at the bundled data directory"
#endif

namespace opmine::testing {

namespace {

const FrameOfDiscernment& treatment_frame() {
    static const FrameOfDiscernment frame{"Good", "Average", "Bad"};
    return frame;
}

}  // namespace

const MassFunction& treatments_m11() {
    const auto& f = treatment_frame();
    static const MassFunction m = make_bba(f, {{f.mask_of({"Good"}), 0.7}, {f.full_mask(), 0.3}});
    return m;
}

const MassFunction& treatments_m21() {
    const auto& f = treatment_frame();
    static const MassFunction m = make_bba(f, {{f.mask_of({"Good"}), 0.6}, {f.full_mask(), 0.4}});
    return m;
}

const MassFunction& treatments_m12() {
    const auto& f = treatment_frame();
    static const MassFunction m = make_bba(
        f, {{f.mask_of({"Good"}), 0.4}, {f.mask_of({"Average"}), 0.2}, {f.full_mask(), 0.4}});
    return m;
}

const MassFunction& treatments_m22() {
    const auto& f = treatment_frame();
    static const MassFunction m = make_bba(f, {{f.mask_of({"Good"}), 0.3}, {f.full_mask(), 0.7}});
    return m;
}

EvidentialDatabase treatments_db() {
    std::vector<AttributeSchema> attributes = {{"Treatment1", treatment_frame()},
                                               {"Treatment2", treatment_frame()}};
    std::vector<EvidentialDatabase::Row> rows;
    rows.push_back({"P1", {treatments_m11(), treatments_m12()}});
    rows.push_back({"P2", {treatments_m21(), treatments_m22()}});
    return EvidentialDatabase(std::move(attributes), std::move(rows), "treatments");
}

std::filesystem::path data_dir() {
    return std::filesystem::path(OPMINE_DATA_DIR);
}

std::filesystem::path s1_csv_path() {
    return data_dir() / "s1_sample.csv";
}

SurveyData s1_survey() {
    return parse_survey_csv(s1_csv_path());
}

EvidentialDatabase s1_db() {
    return build_edb(s1_survey());
}

}  // namespace opmine::testing
