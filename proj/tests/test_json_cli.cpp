#include <catch2/catch_amalgamated.hpp>

#include "hwcoho/hwcoho.hpp"

using namespace hwcoho;

namespace {

HWMatrix gamma1() {
    return HWMatrix::complete(5, {{1, 3, 2, 2, 2},
                                  {2, 1, 3, 2, 2},
                                  {2, 2, 1, 3, 2},
                                  {2, 2, 2, 1, 3}});
}

} // namespace

TEST_CASE("matrix json round trip", "[cli]") {
    HWMatrix a = gamma1();
    json j = matrix_to_json(a);
    CHECK(j["format"] == "hwcoho/1");
    CHECK(j["n"] == 5);
    CHECK(j["rows"][0] == json::array({1, 3, 2, 2, 2}));
    CHECK(matrix_from_json(j) == a);

    // readers accept n-1 rows and complete the last one
    json partial = j;
    partial["rows"].erase(4);
    CHECK(matrix_from_json(partial) == a);

    // ... and verify the last row when all n are given
    json broken = j;
    broken["rows"][4][0] = (broken["rows"][4][0] == 2) ? 3 : 2;
    CHECK_THROWS_AS(matrix_from_json(broken), validation_error);

    json badformat = j;
    badformat["format"] = "hwcoho/999";
    CHECK_THROWS_AS(matrix_from_json(badformat), io_error);
}

TEST_CASE("generator json round trip", "[cli]") {
    auto gens = to_generators(gamma1());
    json j = generators_to_json(5, gens);
    CHECK(j["generators"][0]["index"] == 1);
    CHECK(j["generators"][0]["shifts"] == json::array({1, 1, 0, 0, 0}));
    CHECK(generators_from_json(j) == gamma1());
}

TEST_CASE("invariant json round trip", "[cli]") {
    RingInvariant inv = invariant_of(gamma1());
    json j = invariant_to_json(inv);
    CHECK(j["m"] == 4);
    RingInvariant back = invariant_from_json(j);
    CHECK(back.m == inv.m);
    REQUIRE(back.quads.size() == inv.quads.size());
    for (std::size_t i = 0; i < inv.quads.size(); ++i) CHECK(back.quads[i] == inv.quads[i]);

    // T_1 = x1^2 + x1x2 + x1x3 + x1x4 serializes as index pairs
    CHECK(j["quads"][0] == json::array({json::array({1, 1}), json::array({1, 2}),
                                        json::array({1, 3}), json::array({1, 4})}));
}

TEST_CASE("linear form serialization uses 1-based indices", "[cli]") {
    LinForm l(4, 0b1011);
    CHECK(linform_to_json(l) == json::array({1, 2, 4}));
    CHECK(linform_from_json(json::array({1, 2, 4}), 4) == l);
    CHECK_THROWS_AS(linform_from_json(json::array({0}), 4), io_error);
}

TEST_CASE("catalog json and stability", "[cli]") {
    Catalog c5 = classify(5);
    json j = catalog_to_json(c5);
    CHECK(j["class_count"] == 2);
    CHECK(j["classes"].size() == 2);

    Catalog back = catalog_from_json(j);
    REQUIRE(back.classes.size() == c5.classes.size());
    for (std::size_t i = 0; i < back.classes.size(); ++i) {
        CHECK(back.classes[i].canonical == c5.classes[i].canonical);
        CHECK(back.classes[i].orbit_size == c5.classes[i].orbit_size);
    }

    // two independent runs serialize byte-identically
    std::string once = catalog_to_json(classify(5)).dump(2);
    std::string twice = catalog_to_json(classify(5)).dump(2);
    CHECK(once == twice);
}

TEST_CASE("suite reports serialize with witnesses", "[cli]") {
    Catalog c3 = classify(3);
    auto reports = run_suites(c3, "all", 0);
    bool saw_skip = false;
    for (const auto& r : reports) {
        json j = report_to_json(r);
        if (r.skipped) {
            saw_skip = true;
            CHECK(j.contains("reason"));
        } else {
            CHECK(j["pass"] == r.pass());
        }
    }
    CHECK(saw_skip); // the n > 3 suites must skip at dim 3 with a reason
}
