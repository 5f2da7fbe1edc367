#include <catch2/catch_amalgamated.hpp>

#include "hwcoho/dict.hpp"

using namespace hwcoho;

namespace {
const DictElem all[4] = {g0, g1, g2, g3};
}

TEST_CASE("projection table", "[dict]") {
    // p2: 0 1 1 0, p3: 0 1 0 1 over g0..g3
    CHECK(p2_of(g0) == false);
    CHECK(p3_of(g0) == false);
    CHECK(p2_of(g1) == true);
    CHECK(p3_of(g1) == true);
    CHECK(p2_of(g2) == true);
    CHECK(p3_of(g2) == false);
    CHECK(p2_of(g3) == false);
    CHECK(p3_of(g3) == true);
}

TEST_CASE("klein addition", "[dict]") {
    CHECK(g0 + g2 == g2);
    CHECK(g1 + g2 == g3);
    CHECK(g2 + g3 == g1);
    CHECK(g1 + g3 == g2);
}

TEST_CASE("affine map to dictionary", "[dict]") {
    CHECK(dict_from_affine(1, false) == g0);
    CHECK(dict_from_affine(-1, true) == g3);
    CHECK(dict_from_affine(1, true) == g1);
    CHECK(dict_from_affine(-1, false) == g2);
}

TEST_CASE("projections are homomorphisms", "[dict]") {
    for (DictElem a : all)
        for (DictElem b : all) {
            CHECK(p2_of(a + b) == (p2_of(a) ^ p2_of(b)));
            CHECK(p3_of(a + b) == (p3_of(a) ^ p3_of(b)));
        }
}

TEST_CASE("bit pair determines the element", "[dict]") {
    for (DictElem a : all)
        for (DictElem b : all)
            if (a != b) CHECK((p2_of(a) != p2_of(b) || p3_of(a) != p3_of(b)));
    for (DictElem a : all) CHECK(dict_from_bits(p2_of(a), p3_of(a)) == a);
}

TEST_CASE("group laws", "[dict]") {
    for (DictElem a : all) {
        CHECK(a + a == g0);
        CHECK(a + g0 == a);
        for (DictElem b : all) {
            CHECK(a + b == b + a);
            for (DictElem c : all) CHECK((a + b) + c == a + (b + c));
        }
    }
}

TEST_CASE("conjugation swaps g2 and g3 only", "[dict]") {
    CHECK(g0.conjugated() == g0);
    CHECK(g1.conjugated() == g1);
    CHECK(g2.conjugated() == g3);
    CHECK(g3.conjugated() == g2);
}
