#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "hwcoho/enumerate.hpp"
#include "hwcoho/reconstruct.hpp"
#include "hwcoho/verify.hpp"

using namespace hwcoho;

namespace {

HWMatrix gamma1() {
    return HWMatrix::complete(5, {{1, 3, 2, 2, 2},
                                  {2, 1, 3, 2, 2},
                                  {2, 2, 1, 3, 2},
                                  {2, 2, 2, 1, 3}});
}

HWMatrix gamma2() {
    return HWMatrix::complete(5, {{1, 2, 3, 3, 2},
                                  {2, 1, 3, 3, 3},
                                  {3, 3, 1, 3, 3},
                                  {3, 2, 3, 1, 3}});
}

std::set<std::uint64_t> quad_bits(const std::vector<FactoredQuad>& xs) {
    std::set<std::uint64_t> out;
    for (const auto& x : xs) out.insert(x.quad.bits());
    return out;
}

} // namespace

TEST_CASE("invariant of a matrix", "[reconstruct]") {
    RingInvariant inv = invariant_of(gamma1());
    CHECK(inv.m == 4);
    Subspace w(10);
    for (const auto& q : inv.quads) w.insert(q.bits());
    CHECK(w.dim() == 5);

    RingInvariant inv3 = invariant_of(HWMatrix::validated(
        DictMatrix::from_indices({{1, 3, 2}, {2, 1, 3}, {3, 2, 1}})));
    CHECK(inv3.m == 2);
    Subspace w3(3);
    for (const auto& q : inv3.quads) w3.insert(q.bits());
    CHECK(w3.dim() == 3);
}

TEST_CASE("scramble is a seeded group action", "[reconstruct]") {
    RingInvariant inv = invariant_of(gamma1());
    CHECK(scramble(inv, F2Matrix::identity(4)).quads == inv.quads);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        F2Matrix g = gl_random(4, seed);
        RingInvariant moved = scramble(inv, g);
        Subspace w(10);
        for (const auto& q : moved.quads) w.insert(q.bits());
        CHECK(w.dim() == 5);
        auto gi = f2_inverse(g);
        REQUIRE(gi.has_value());
        CHECK(scramble(moved, *gi).quads == inv.quads);
    }

    F2Matrix singular(4, 4);
    CHECK_THROWS_AS(scramble(inv, singular), error);
}

TEST_CASE("basis recovery from the plain invariant", "[reconstruct]") {
    TransBasis tb = transgression(gamma1());
    auto rec = recover_T_basis(invariant_of(gamma1()));
    REQUIRE(rec.size() == 5);
    CHECK(quad_bits(rec) == quad_bits(tb.T));

    RingInvariant small;
    small.m = 2;
    CHECK_THROWS_AS(recover_T_basis(small), reconstruct_error);
}

TEST_CASE("basis recovery commutes with scrambling", "[reconstruct]") {
    RingInvariant inv = invariant_of(gamma1());
    TransBasis tb = transgression(gamma1());
    F2Matrix g = gl_random(4, 42);
    auto rec = recover_T_basis(scramble(inv, g));

    std::set<std::uint64_t> expect;
    for (const auto& t : tb.T) expect.insert(substitute(t.quad, g).bits());
    CHECK(quad_bits(rec) == expect);
}

TEST_CASE("dual-vector scan rebuilds the exact matrix", "[reconstruct]") {
    for (const HWMatrix& a : {gamma1(), gamma2()}) {
        TransBasis tb = transgression(a);
        CHECK(recover_matrix(tb) == a);
    }
}

TEST_CASE("dual-vector keep set", "[reconstruct]") {
    TransBasis tb = transgression(gamma1());
    // e1 is kept with the (1,1) pair in column 1
    std::uint32_t u = 1;
    int diag = -1;
    for (int i = 0; i < 5; ++i) {
        bool b1 = tb.T[i].f1.eval(u), b2 = tb.T[i].f2.eval(u);
        CHECK((b1 || b2));
        if (b1 && b2) diag = i;
    }
    CHECK(diag == 0);

    // e1 + e2 dies at column 4, whose factor pair vanishes there
    std::uint32_t u12 = 0b0011;
    CHECK(tb.T[3].f1.eval(u12) == false);
    CHECK(tb.T[3].f2.eval(u12) == false);

    // the all-ones dual vector recovers the last row
    std::uint32_t usum = 0b1111;
    for (int i = 0; i < 5; ++i)
        CHECK(dict_from_bits(tb.T[i].f1.eval(usum), tb.T[i].f2.eval(usum)) ==
              gamma1().at(4, i));

    // kept vectors are exactly the basis vectors and their sum
    std::set<std::uint32_t> kept;
    for (std::uint32_t v = 1; v < 16; ++v) {
        bool reject = false;
        int ones = 0;
        for (int i = 0; i < 5; ++i) {
            bool b1 = tb.T[i].f1.eval(v), b2 = tb.T[i].f2.eval(v);
            if (!b1 && !b2) { reject = true; break; }
            if (b1 && b2) ++ones;
        }
        if (!reject && ones == 1) kept.insert(v);
    }
    CHECK(kept == std::set<std::uint32_t>{0b0001, 0b0010, 0b0100, 0b1000, 0b1111});
}

TEST_CASE("rigidity decisions on the 5-dim classes", "[reconstruct]") {
    RingInvariant i1 = invariant_of(gamma1());
    RingInvariant i2 = invariant_of(gamma2());
    CHECK(rigidity_equal(i1, i1));
    CHECK(rigidity_equal(i2, i2));
    CHECK_FALSE(rigidity_equal(i1, i2));

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        F2Matrix g = gl_random(4, seed * 7919 + 3);
        CHECK(rigidity_equal(i1, scramble(i1, g)));
        CHECK_FALSE(rigidity_equal(scramble(i1, g), i2));
    }
}

TEST_CASE("round trip lands on the original canonical form", "[reconstruct]") {
    Catalog c5 = classify(5);
    for (const auto& cls : c5.classes) {
        HWMatrix rep = decode(5, cls.canonical);
        RingInvariant inv = invariant_of(rep);
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            F2Matrix g = gl_random(4, detail::mix_seed(1, seed, 0));
            HWMatrix back = recover_matrix(recover_T_basis(scramble(inv, g)));
            CHECK(canonical_encoding(back) == cls.canonical);
        }
    }
}

TEST_CASE("recovery rejects non-manifold inputs", "[reconstruct]") {
    // a full quadratic space of dimension 5 inside 4 variables that is
    // not spanned by transgression data: random spans rarely qualify
    RingInvariant bogus;
    bogus.m = 4;
    bogus.quads = {QuadPoly(4, 0b0000000001), QuadPoly(4, 0b0000000010),
                   QuadPoly(4, 0b0000000100), QuadPoly(4, 0b0000001000),
                   QuadPoly(4, 0b0000010000)};
    CHECK_THROWS_AS(recover_matrix(recover_T_basis(bogus)), reconstruct_error);

    RingInvariant degenerate;
    degenerate.m = 4;
    degenerate.quads = {QuadPoly(4, 1), QuadPoly(4, 1)};
    CHECK_THROWS_AS(recover_T_basis(degenerate), reconstruct_error);
}
