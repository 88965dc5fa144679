#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "opmine/errors.hpp"
#include "opmine/miner.hpp"
#include "opmine/synth.hpp"
#include "support/fixtures.hpp"

using namespace opmine;
using namespace opmine::testing;

TEST_CASE("generator basics") {
    SUBCASE("p_certain = 1 gives only certain cells") {
        const auto db = generate({.rows = 2, .attributes = 2, .frame_size = 3, .max_focal = 2,
                                  .p_certain = 1.0, .seed = 9});
        CHECK(db.row_count() == 2);
        CHECK(db.attribute_count() == 2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                CHECK(db.cell(i, j).focal_count() == 1);
                CHECK(db.cell(i, j).focal().front().second == 1.0);
            }
        }
    }
    SUBCASE("same seed reproduces the database, a different seed does not") {
        const SynthConfig cfg{.rows = 20, .attributes = 4, .frame_size = 4, .max_focal = 4,
                              .p_certain = 0.4, .seed = 1234};
        CHECK(generate(cfg) == generate(cfg));
        SynthConfig other = cfg;
        other.seed = 1235;
        CHECK(!(generate(other) == generate(cfg)));
    }
    SUBCASE("every generated database validates, over many seeds") {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const auto db = generate({.rows = 3,
                                      .attributes = 2,
                                      .frame_size = 1 + seed % 5,
                                      .max_focal = 1 + seed % ((1u << (1 + seed % 5)) - 1),
                                      .p_certain = 0.1 * (seed % 11),
                                      .seed = seed});
            CHECK(validate(db).empty());
        }
    }
    SUBCASE("bad configs are rejected") {
        CHECK_THROWS_AS(generate({.rows = 1, .attributes = 0}), RangeError);
        CHECK_THROWS_AS(generate({.rows = 1, .attributes = 1, .frame_size = 17}), RangeError);
        CHECK_THROWS_AS(generate({.rows = 1, .attributes = 1, .frame_size = 2, .max_focal = 4}),
                        RangeError);
        CHECK_THROWS_AS(
            generate({.rows = 1, .attributes = 1, .frame_size = 2, .max_focal = 1, .p_certain = 1.5}),
            RangeError);
    }
    SUBCASE("zero rows is a valid empty database") {
        const auto db = generate({.rows = 0, .attributes = 2, .frame_size = 2, .max_focal = 2,
                                  .p_certain = 0.5, .seed = 3});
        CHECK(db.row_count() == 0);
        CHECK(pl_project(db).row_count() == 0);
    }
}

TEST_CASE("item extraction shrinks the cell population when duplicates exist") {
    SUBCASE("survey sample") {
        const auto db = s1_db();
        const auto catalog = extract_items(db);
        CHECK(catalog.size() < db.row_count() * db.attribute_count());
        CHECK(catalog.size() == 16);
    }
    SUBCASE("certain-heavy synthetic database") {
        const auto db = generate({.rows = 200, .attributes = 6, .frame_size = 4, .max_focal = 2,
                                  .p_certain = 0.5, .seed = 321});
        const auto catalog = extract_items(db);
        CHECK(catalog.size() < db.row_count() * db.attribute_count());
    }
}

TEST_CASE("sweep") {
    SUBCASE("counts are non-increasing on the survey sample") {
        const double minsups[] = {0.1, 0.2, 0.3, 0.4};
        const auto curve = sweep(s1_db(), minsups);
        REQUIRE(curve.size() == 4);
        for (std::size_t k = 0; k + 1 < curve.size(); ++k) {
            CHECK(curve[k].pattern_count >= curve[k + 1].pattern_count);
        }
        CHECK(curve[0].minsup == 0.1);
    }
    SUBCASE("threshold beyond the best support yields zero patterns") {
        const double minsups[] = {0.99};
        const auto curve = sweep(s1_db(), minsups);
        REQUIRE(curve.size() == 1);
        CHECK(curve[0].pattern_count == 0);
    }
    SUBCASE("single point") {
        const double minsups[] = {0.3};
        CHECK(sweep(s1_db(), minsups).size() == 1);
    }
    SUBCASE("list must be strictly increasing") {
        const double bad[] = {0.3, 0.3};
        CHECK_THROWS_AS(sweep(s1_db(), bad), RangeError);
        const double worse[] = {0.4, 0.2};
        CHECK_THROWS_AS(sweep(s1_db(), worse), RangeError);
    }
    SUBCASE("csv rendering") {
        const double minsups[] = {0.2, 0.4};
        const auto curve = sweep(treatments_db(), minsups);
        const std::string csv = sweep_csv(curve);
        CHECK(csv.rfind("minsup,pattern_count,wall_ms\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
        CHECK(csv.find("0.2,") != std::string::npos);
    }
}

TEST_CASE("sweep counts are reproducible for a fixed seed") {
    const auto db = generate({.rows = 60, .attributes = 4, .frame_size = 3, .max_focal = 3,
                              .p_certain = 0.5, .seed = 777});
    const double minsups[] = {0.1, 0.3, 0.5};
    const auto a = sweep(db, minsups);
    const auto b = sweep(db, minsups);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].pattern_count == b[k].pattern_count);
    }
}
