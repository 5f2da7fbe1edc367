#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hwcoho/f2.hpp"

using namespace hwcoho;

namespace {

LinForm lf(int m, std::initializer_list<int> vars) {
    std::uint64_t bits = 0;
    for (int v : vars) bits |= std::uint64_t(1) << (v - 1);
    return LinForm(m, bits);
}

QuadPoly qp(int m, std::initializer_list<std::pair<int, int>> monos) {
    QuadPoly q(m);
    for (auto [i, j] : monos) q.toggle(i, j);
    return q;
}

// Independent factorization oracle: scan every ordered pair of nonzero
// linear forms; assert at most one unordered pair multiplies back.
std::optional<std::pair<LinForm, LinForm>> factor_by_scan(const QuadPoly& q) {
    int m = q.vars();
    std::optional<std::pair<LinForm, LinForm>> found;
    for (std::uint64_t a = 1; a < (std::uint64_t(1) << m); ++a)
        for (std::uint64_t b = a; b < (std::uint64_t(1) << m); ++b) {
            LinForm fa(m, a), fb(m, b);
            if (lin_mul(fa, fb) == q) {
                if (found) {
                    bool same = (found->first == fa && found->second == fb) ||
                                (found->first == fb && found->second == fa);
                    REQUIRE(same);
                } else {
                    found = std::make_pair(fa, fb);
                }
            }
        }
    return found;
}

bool same_pair(const std::pair<LinForm, LinForm>& x, const std::pair<LinForm, LinForm>& y) {
    return (x.first == y.first && x.second == y.second) ||
           (x.first == y.second && x.second == y.first);
}

F2Matrix from_rows(int cols, std::initializer_list<std::uint64_t> rows) {
    F2Matrix m(static_cast<int>(rows.size()), cols);
    int i = 0;
    for (auto r : rows) m.set_row(i++, r);
    return m;
}

} // namespace

TEST_CASE("rank and defect on fixed matrices", "[f2core]") {
    CHECK(rank(F2Matrix::identity(3)) == 3);
    CHECK(defect(F2Matrix::identity(3)) == 0);

    // projection rows of the 3-dim matrix: (1,0,1),(1,1,0),(0,1,1)
    F2Matrix p = from_rows(3, {0b101, 0b011, 0b110});
    CHECK(rank(p) == 2);
    CHECK(defect(p) == 1);

    F2Matrix zero(2, 5);
    CHECK(rank(zero) == 0);
    CHECK(defect(zero) == 5);
}

TEST_CASE("column deletion never increases defect", "[f2core]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 8);
        F2Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i) m.set_row(i, rng() & ((1u << cols) - 1));
        std::uint32_t keep = std::uint32_t(rng()) & ((1u << cols) - 1);
        int kept_cols = std::popcount(keep);
        F2Matrix sub(rows, kept_cols);
        for (int i = 0; i < rows; ++i) {
            std::uint64_t packed = 0;
            int out = 0;
            for (int c = 0; c < cols; ++c)
                if ((keep >> c) & 1) {
                    if (m.at(i, c)) packed |= std::uint64_t(1) << out;
                    ++out;
                }
            sub.set_row(i, packed);
        }
        CHECK(defect(sub) <= defect(m));
    }
}

TEST_CASE("linear form products", "[f2core]") {
    CHECK(lin_mul(lf(2, {1}), lf(2, {2})) == qp(2, {{1, 2}}));
    CHECK(lin_mul(lf(2, {1}), lf(2, {1, 2})) == qp(2, {{1, 1}, {1, 2}}));
    CHECK(lin_mul(lf(4, {1, 2, 3, 4}), lf(4, {1})) ==
          qp(4, {{1, 1}, {1, 2}, {1, 3}, {1, 4}}));
    CHECK_THROWS_AS(lin_mul(lf(2, {1}), lf(3, {1})), error);
}

TEST_CASE("factorization fixed cases", "[f2core]") {
    auto f = quad_factor(qp(2, {{1, 2}}));
    REQUIRE(f.has_value());
    CHECK(same_pair(*f, {lf(2, {1}), lf(2, {2})}));

    CHECK_FALSE(quad_factor(qp(2, {{1, 1}, {2, 2}, {1, 2}})).has_value());

    auto g = quad_factor(qp(2, {{1, 1}, {1, 2}}));
    REQUIRE(g.has_value());
    CHECK(same_pair(*g, {lf(2, {1}), lf(2, {1, 2})}));

    CHECK_THROWS_AS(quad_factor(QuadPoly(2)), error);
}

TEST_CASE("factorization agrees with the scan oracle for m <= 4", "[f2core]") {
    for (int m = 1; m <= 4; ++m) {
        int monos = m * (m + 1) / 2;
        for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << monos); ++bits) {
            QuadPoly q(m, bits);
            auto fast = quad_factor(q);
            auto slow = factor_by_scan(q);
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) CHECK(same_pair(*fast, *slow));
        }
    }
}

TEST_CASE("factor round trip by exhaustion for m <= 5", "[f2core]") {
    for (int m = 2; m <= 5; ++m)
        for (std::uint64_t a = 1; a < (std::uint64_t(1) << m); ++a)
            for (std::uint64_t b = 1; b < (std::uint64_t(1) << m); ++b) {
                LinForm fa(m, a), fb(m, b);
                auto f = quad_factor(lin_mul(fa, fb));
                REQUIRE(f.has_value());
                CHECK(same_pair(*f, {fa, fb}));
            }
}

TEST_CASE("evaluation is additive and separates quadratics", "[f2core]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int m = 2 + int(rng() % 5);
        int monos = m * (m + 1) / 2;
        QuadPoly q1(m, rng() & ((std::uint64_t(1) << monos) - 1));
        QuadPoly q2(m, rng() & ((std::uint64_t(1) << monos) - 1));
        std::uint64_t x = rng() & ((std::uint64_t(1) << m) - 1);
        CHECK((q1 + q2).eval(x) == (q1.eval(x) ^ q2.eval(x)));
    }

    // distinct homogeneous quadratics are distinct as functions (m <= 4)
    for (int m = 1; m <= 4; ++m) {
        int monos = m * (m + 1) / 2;
        for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << monos); ++bits) {
            QuadPoly q(m, bits);
            bool somewhere_nonzero = false;
            for (std::uint64_t x = 0; x < (std::uint64_t(1) << m); ++x)
                if (q.eval(x)) somewhere_nonzero = true;
            CHECK(somewhere_nonzero);
        }
    }
}

TEST_CASE("subspace span and membership", "[f2core]") {
    Subspace empty(5);
    CHECK(empty.dim() == 0);
    CHECK(empty.contains(0));
    CHECK_FALSE(empty.contains(1));

    // T-basis coordinates of the 3-dim matrix: rank 3
    int m = 2;
    QuadPoly t1 = qp(m, {{1, 1}, {1, 2}});
    QuadPoly t2 = qp(m, {{2, 2}, {1, 2}});
    QuadPoly t3 = qp(m, {{1, 2}});
    Subspace s = Subspace::span(3, {t1.bits(), t2.bits(), t3.bits()});
    CHECK(s.dim() == 3);

    Subspace two = Subspace::span(4, {0b0011, 0b0101});
    auto elems = two.elements();
    CHECK(elems.size() == 4);
    std::set<std::uint64_t> members(elems.begin(), elems.end());
    CHECK(members == std::set<std::uint64_t>{0, 0b0011, 0b0101, 0b0110});
}

TEST_CASE("seeded invertible matrices", "[f2core]") {
    F2Matrix one = gl_random(1, 123);
    CHECK(one.at(0, 0));

    F2Matrix g = gl_random(4, 42);
    CHECK(rank(g) == 4);
    CHECK(gl_random(4, 42) == g);

    auto inv = f2_inverse(g);
    REQUIRE(inv.has_value());
    CHECK(g.mul(*inv) == F2Matrix::identity(4));
    CHECK(inv->mul(g) == F2Matrix::identity(4));
}

TEST_CASE("substitution is a ring action", "[f2core]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 3 + int(rng() % 4);
        F2Matrix g = gl_random(m, rng());
        std::uint64_t a = 1 + rng() % ((std::uint64_t(1) << m) - 1);
        std::uint64_t b = 1 + rng() % ((std::uint64_t(1) << m) - 1);
        LinForm fa(m, a), fb(m, b);
        // multiply then substitute == substitute then multiply
        CHECK(substitute(lin_mul(fa, fb), g) == lin_mul(substitute(fa, g), substitute(fb, g)));

        auto gi = f2_inverse(g);
        REQUIRE(gi.has_value());
        QuadPoly q = lin_mul(fa, fb);
        CHECK(substitute(substitute(q, g), *gi) == q);
    }
}
