#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "opmine/edb_json.hpp"
#include "opmine/errors.hpp"
#include "opmine/synth.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace opmine;
using namespace opmine::testing;

namespace {

EvidentialDatabase broken_db(MassFunction bad_cell) {
    const FrameOfDiscernment f{"Good", "Average", "Bad"};
    std::vector<AttributeSchema> attrs = {{"T1", f}};
    std::vector<EvidentialDatabase::Row> rows;
    rows.push_back({"r", {std::move(bad_cell)}});
    return EvidentialDatabase(std::move(attrs), std::move(rows));
}

}  // namespace

TEST_CASE("validate accepts the worked example database") {
    CHECK(validate(treatments_db()).empty());
    CHECK(validate(s1_db()).empty());
}

TEST_CASE("validate reports violations with coordinates") {
    const FrameOfDiscernment f{"Good", "Average", "Bad"};

    SUBCASE("mass sum off one") {
        auto db = broken_db(MassFunction::unchecked(f, {{1, 0.5}, {7, 0.4}}));
        const auto issues = validate(db);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0].row == 0);
        CHECK(issues[0].attribute == 0);
        CHECK(issues[0].message.find("sum") != std::string::npos);
    }
    SUBCASE("focal mask outside the frame") {
        auto db = broken_db(MassFunction::unchecked(f, {{0b1000, 1.0}}));
        const auto issues = validate(db);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0].row == 0);
        CHECK(issues[0].attribute == 0);
        CHECK(issues[0].message.find("outside the frame") != std::string::npos);
    }
    SUBCASE("empty focal set") {
        auto db = broken_db(MassFunction::unchecked(f, {{0, 0.3}, {7, 0.7}}));
        const auto issues = validate(db);
        REQUIRE(!issues.empty());
        CHECK(issues[0].message.find("empty set") != std::string::npos);
    }
    SUBCASE("cell built over a foreign frame") {
        auto db = broken_db(vacuous_bba(FrameOfDiscernment{"x", "y"}));
        const auto issues = validate(db);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0].message.find("frame") != std::string::npos);
    }
    SUBCASE("ragged row") {
        std::vector<AttributeSchema> attrs = {{"T1", f}, {"T2", f}};
        std::vector<EvidentialDatabase::Row> rows;
        rows.push_back({"r", {vacuous_bba(f)}});
        const auto issues = validate(EvidentialDatabase(std::move(attrs), std::move(rows)));
        REQUIRE(issues.size() == 1);
        CHECK(issues[0].row == 0);
        CHECK(!issues[0].attribute);
    }
    SUBCASE("duplicate attribute names") {
        std::vector<AttributeSchema> attrs = {{"T", f}, {"T", f}};
        std::vector<EvidentialDatabase::Row> rows;
        rows.push_back({"r", {vacuous_bba(f), vacuous_bba(f)}});
        const auto issues = validate(EvidentialDatabase(std::move(attrs), std::move(rows)));
        REQUIRE(issues.size() == 1);
        CHECK(!issues[0].row);
        CHECK(issues[0].attribute == 1);
    }
    SUBCASE("a scan reports every broken cell, not just the first") {
        std::vector<AttributeSchema> attrs = {{"T1", f}, {"T2", f}};
        std::vector<EvidentialDatabase::Row> rows;
        rows.push_back({"r1", {MassFunction::unchecked(f, {{1, 0.5}}), vacuous_bba(f)}});
        rows.push_back({"r2", {vacuous_bba(f), MassFunction::unchecked(f, {{2, 1.5}})}});
        const auto issues = validate(EvidentialDatabase(std::move(attrs), std::move(rows)));
        CHECK(issues.size() == 2);
    }
}

TEST_CASE("pl_project computes one vector per cell") {
    const auto db = treatments_db();
    const auto proj = pl_project(db);
    CHECK(proj.row_count() == 2);
    CHECK(proj.attribute_count() == 2);

    const auto& f = db.attribute(0).frame;
    const auto& p11 = proj.at(0, 0);
    CHECK(p11.at(f.mask_of({"Good"})) == doctest::Approx(1.0));
    CHECK(p11.at(f.mask_of({"Average"})) == doctest::Approx(0.3));
    CHECK(p11.at(f.mask_of({"Bad"})) == doctest::Approx(0.3));
    CHECK(p11.at(f.mask_of({"Good", "Average"})) == doctest::Approx(1.0));
    CHECK(p11.at(f.mask_of({"Good", "Bad"})) == doctest::Approx(1.0));
    CHECK(p11.at(f.mask_of({"Average", "Bad"})) == doctest::Approx(0.3));
    CHECK(p11.at(f.full_mask()) == doctest::Approx(1.0));

    SUBCASE("matches an independent recomputation on every cell") {
        for (std::size_t i = 0; i < db.row_count(); ++i) {
            for (std::size_t j = 0; j < db.attribute_count(); ++j) {
                const auto slow = oracle::naive_plausibility(db.cell(i, j));
                const auto fast = proj.at(i, j).values();
                for (std::size_t k = 0; k < slow.size(); ++k) {
                    CHECK(fast[k] == doctest::Approx(slow[k]).epsilon(1e-12));
                }
            }
        }
    }
    SUBCASE("all-vacuous database projects to all ones") {
        const FrameOfDiscernment f{"a", "b"};
        std::vector<EvidentialDatabase::Row> rows(3, {"", {vacuous_bba(f), vacuous_bba(f)}});
        const EvidentialDatabase vdb({{"A", f}, {"B", f}}, std::move(rows));
        const auto vproj = pl_project(vdb);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                for (double v : vproj.at(i, j).values()) {
                    CHECK(v == 1.0);
                }
            }
        }
    }
    SUBCASE("empty database projects to nothing") {
        const FrameOfDiscernment f{"a", "b"};
        const EvidentialDatabase empty({{"A", f}}, {});
        CHECK(pl_project(empty).row_count() == 0);
    }
}

TEST_CASE("JSON round-trip is exact") {
    SUBCASE("worked example database") {
        const auto db = treatments_db();
        CHECK(from_json_string(to_json_string(db)) == db);
    }
    SUBCASE("bundled example file loads to the in-memory database") {
        CHECK(load_json(data_dir() / "treatments_example.edb.json") == treatments_db());
    }
    SUBCASE("random databases, including irrational masses") {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            const auto db = generate({.rows = 6,
                                      .attributes = 3,
                                      .frame_size = 2 + seed % 3,
                                      .max_focal = 2 + seed % 2,
                                      .p_certain = 0.3,
                                      .seed = seed});
            CHECK(from_json_string(to_json_string(db)) == db);
        }
    }
    SUBCASE("file save/load") {
        const auto path = std::filesystem::temp_directory_path() / "opmine_roundtrip.edb.json";
        save_json(treatments_db(), path);
        CHECK(load_json(path) == treatments_db());
        std::filesystem::remove(path);
    }
}

TEST_CASE("malformed JSON is rejected with a path") {
    auto schema_error_contains = [](std::string_view text, std::string_view needle) {
        try {
            (void)from_json_string(text);
            FAIL_CHECK("expected SchemaError for ", text);
        } catch (const SchemaError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    schema_error_contains(R"({"rows": []})", "$.attributes");
    schema_error_contains(R"({"attributes": []})", "$.attributes");
    schema_error_contains(R"({"attributes": [{"name": "Q", "frame": ["a"]}]})", "$.rows");
    schema_error_contains(R"("just a string")", "$");
    schema_error_contains("{", "$");
    schema_error_contains(
        R"({"attributes": [{"name": "Q", "frame": ["Good", "Good"]}], "rows": []})",
        "$.attributes[0].frame");
    schema_error_contains(
        R"({"attributes": [{"name": "Q", "frame": ["Good"]}, {"name": "Q", "frame": ["Good"]}], "rows": []})",
        "$.attributes[1].name");

    const std::string prefix =
        R"({"attributes": [{"name": "Q", "frame": ["Good", "Average"]}], "rows": [{"cells": )";
    schema_error_contains(prefix + R"([[{"set": ["Good", "Good"], "mass": 1.0}]]}]})",
                          "$.rows[0].cells[0][0].set[1]");
    schema_error_contains(prefix + R"([[{"set": ["Nope"], "mass": 1.0}]]}]})",
                          "$.rows[0].cells[0][0].set[0]");
    schema_error_contains(prefix + R"([[{"set": [], "mass": 1.0}]]}]})", ".set");
    schema_error_contains(prefix + R"([[{"set": ["Good"], "mass": "x"}]]}]})", ".mass");
    schema_error_contains(prefix + R"([[{"set": ["Good"]}]]}]})", ".mass");
    schema_error_contains(prefix + R"([[]]}]})", "$.rows[0].cells[0]");
    schema_error_contains(prefix + R"([]}]})", "$.rows[0].cells");

    SUBCASE("value-level problems load and surface through validate") {
        const auto db = from_json_string(
            R"({"attributes": [{"name": "Q", "frame": ["Good", "Average"]}],
                "rows": [{"cells": [[{"set": ["Good"], "mass": 0.9}]]}]})");
        const auto issues = validate(db);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0].row == 0);
        CHECK(issues[0].message.find("sum") != std::string::npos);
    }
}

TEST_CASE("missing files raise IoError") {
    CHECK_THROWS_AS(load_json("/nonexistent/nowhere.json"), IoError);
    CHECK_THROWS_AS(save_json(treatments_db(), "/nonexistent/dir/out.json"), IoError);
}
