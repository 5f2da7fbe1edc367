#pragma once

// The degree-2 mod-2 cohomology data of a matrix: the transgression
// basis T_1..T_n read off the columns, the embedding into one more
// variable, the set D of factorizable span elements, the s-function,
// the common-factor graph, and the structural checks on all of these.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwcoho/f2.hpp"
#include "hwcoho/hw_matrix.hpp"
#include "hwcoho/report.hpp"

namespace hwcoho {

struct FactoredQuad {
    QuadPoly quad;
    LinForm f1, f2; // unordered factor pair; f1*f2 == quad
};

inline LinForm s_of(const FactoredQuad& w) { return w.f1 + w.f2; }

// T_i = (p2 of column i) * (p3 of column i), read over the first n-1
// rows, in m = n-1 variables.  The span of the T_i must have rank n.
struct TransBasis {
    int n = 0, m = 0;
    std::vector<FactoredQuad> T;
};

inline TransBasis transgression(const HWMatrix& a) {
    int n = a.dim(), m = n - 1;
    TransBasis tb{n, m, {}};
    tb.T.reserve(n);
    for (int col = 0; col < n; ++col) {
        std::uint64_t b2 = 0, b3 = 0;
        for (int row = 0; row + 1 < n; ++row) {
            if (a.at(row, col).p2()) b2 |= std::uint64_t(1) << row;
            if (a.at(row, col).p3()) b3 |= std::uint64_t(1) << row;
        }
        LinForm l2(m, b2), l3(m, b3);
        tb.T.push_back({lin_mul(l2, l3), l2, l3});
    }
    Subspace span(m * (m + 1) / 2);
    for (const auto& t : tb.T) span.insert(t.quad.bits());
    if (span.dim() != n)
        throw error("transgression: span rank is not n; input is not a valid matrix");
    return tb;
}

// Split embedding into one more variable: x_i -> x_i + x_n.
inline LinForm embed_phi(const LinForm& l) {
    int n = l.vars() + 1;
    std::uint64_t bits = l.bits();
    if (l.support_size() & 1) bits |= std::uint64_t(1) << (n - 1);
    return LinForm(n, bits);
}

inline QuadPoly embed_phi(const QuadPoly& q) {
    int n = q.vars() + 1;
    QuadPoly out(n);
    std::uint64_t rest = q.bits();
    while (rest) {
        int slot = std::countr_zero(rest);
        rest &= rest - 1;
        auto [i, j] = q.slot_to_monomial(slot);
        // (x_i + x_n)(x_j + x_n)
        out.toggle(std::min(i, j), std::max(i, j));
        out.toggle(n, n);
        out.toggle(i, n);
        out.toggle(j, n); // i == j: the two x_i x_n terms cancel, leaving x_i^2 + x_n^2
    }
    return out;
}

// Componentwise value of the embedded basis at a point of F2^n.  The
// embedded T_i at x equals T_i at (x_1+x_n, ..., x_{n-1}+x_n).
inline std::uint32_t eval_T(const TransBasis& tb, std::uint32_t x) {
    std::uint32_t fold = ((x >> tb.m) & 1) ? ((std::uint32_t(1) << tb.m) - 1) : 0;
    std::uint64_t y = (x ^ fold) & ((std::uint32_t(1) << tb.m) - 1);
    std::uint32_t out = 0;
    for (int i = 0; i < tb.n; ++i)
        if (tb.T[i].quad.eval(y)) out |= std::uint32_t(1) << i;
    return out;
}

inline std::uint32_t eval_T(const HWMatrix& a, std::uint32_t x) {
    return eval_T(transgression(a), x);
}

// One factorizable element of span{T_i}: the index subset it sums from,
// the polynomial, and its factor pair.
struct FactorizableElem {
    std::uint32_t subset = 0; // bit i-1 <-> T_i
    QuadPoly quad;
    LinForm f1, f2;
};

inline LinForm s_of(const FactorizableElem& w) { return w.f1 + w.f2; }

struct FactorizableSet {
    int n = 0, m = 0;
    std::vector<FactorizableElem> elems;

    bool contains_quad(const QuadPoly& q) const {
        for (const auto& e : elems)
            if (e.quad == q) return true;
        return false;
    }
};

// Scans all 2^n - 1 nonzero span elements with quad_factor.
inline FactorizableSet factorizable_set(const TransBasis& tb) {
    FactorizableSet out{tb.n, tb.m, {}};
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << tb.n); ++s) {
        QuadPoly q(tb.m);
        for (int i = 0; i < tb.n; ++i)
            if ((s >> i) & 1) q += tb.T[i].quad;
        if (q.is_zero())
            throw error("factorizable_set: dependent basis");
        if (auto f = quad_factor(q))
            out.elems.push_back({s, q, f->first, f->second});
    }
    return out;
}

// Undirected graph on factorizable elements: an edge joins two vertices
// sharing a linear factor.
struct FactorGraph {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> components; // 0-based vertex ids, sorted
};

inline FactorGraph factor_graph(const std::vector<std::pair<LinForm, LinForm>>& factors) {
    int n = static_cast<int>(factors.size());
    FactorGraph g;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto share = [&](int a, int b) {
        const auto& [a1, a2] = factors[a];
        const auto& [b1, b2] = factors[b];
        return a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (share(i, j)) {
                g.edges.emplace_back(i, j);
                parent[find(i)] = find(j);
            }
    std::vector<std::vector<int>> buckets(n);
    for (int i = 0; i < n; ++i) buckets[find(i)].push_back(i);
    for (auto& b : buckets)
        if (!b.empty()) g.components.push_back(std::move(b));
    return g;
}

inline FactorGraph factor_graph(const std::vector<FactoredQuad>& xs) {
    std::vector<std::pair<LinForm, LinForm>> fs;
    fs.reserve(xs.size());
    for (const auto& x : xs) fs.emplace_back(x.f1, x.f2);
    return factor_graph(fs);
}

namespace detail {

inline std::string subset_str(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; mask >> i; ++i)
        if ((mask >> i) & 1) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

// Support of the embedded factor, as a subset of {1..n}.
inline std::uint32_t embedded_support(const LinForm& f) {
    LinForm e = embed_phi(f);
    return static_cast<std::uint32_t>(e.bits());
}

} // namespace detail

// Size bound on the set D of factorizable span elements: n <= #D <= n+1.
inline CheckReport check_dset_size(const HWMatrix& a) {
    CheckReport r;
    r.name = "lemmaB";
    int n = a.dim();
    if (n <= 3) {
        r.skipped = true;
        r.skip_reason = "hypothesis requires n > 3";
        return r;
    }
    auto d = factorizable_set(transgression(a));
    int size = static_cast<int>(d.elems.size());
    r.stats["max_D"] = size;
    r.require(size >= n && size <= n + 1,
              "#D = " + std::to_string(size) + " outside [n, n+1] for n = " + std::to_string(n));
    return r;
}

// Structure of D: either exactly the T_i, or the T_i plus a single
// two-term sum; the common-factor graph on the T_i has only point or
// edge components, at most one edge, and the edge matches the extra
// element.  Pair sums factor exactly when the pair shares a factor.
inline CheckReport check_dset_structure(const HWMatrix& a) {
    CheckReport r;
    r.name = "lemmaC";
    int n = a.dim();
    if (n <= 3) {
        r.skipped = true;
        r.skip_reason = "hypothesis requires n > 3";
        return r;
    }
    TransBasis tb = transgression(a);
    FactorizableSet d = factorizable_set(tb);

    std::vector<FactorizableElem> extras;
    bool all_T_present = true;
    for (int i = 0; i < n; ++i)
        if (!d.contains_quad(tb.T[i].quad)) all_T_present = false;
    for (const auto& e : d.elems)
        if (std::popcount(e.subset) != 1) extras.push_back(e);
    r.require(all_T_present, "some T_i is missing from D");
    r.require(extras.size() <= 1, "more than one non-basis element in D");
    if (extras.size() == 1)
        r.require(std::popcount(extras[0].subset) == 2,
                  "extra element is not a two-term sum: S = " + detail::subset_str(extras[0].subset));

    FactorGraph g = factor_graph(tb.T);
    for (const auto& comp : g.components)
        r.require(comp.size() <= 2, "component with more than two basis vertices");
    r.require(g.edges.size() <= 1, "more than one shared-factor edge among the T_i");
    bool has_edge = !g.edges.empty();
    r.require(has_edge == (extras.size() == 1),
              "edge count and #D disagree: edges = " + std::to_string(g.edges.size()) +
                  ", #D = " + std::to_string(d.elems.size()));
    if (has_edge && extras.size() == 1) {
        auto [i, j] = g.edges.front();
        std::uint32_t expect = (std::uint32_t(1) << i) | (std::uint32_t(1) << j);
        r.require(extras[0].subset == expect, "extra element does not match the shared-factor pair");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool shares = tb.T[i].f1 == tb.T[j].f1 || tb.T[i].f1 == tb.T[j].f2 ||
                          tb.T[i].f2 == tb.T[j].f1 || tb.T[i].f2 == tb.T[j].f2;
            bool sum_factors = quad_factor(tb.T[i].quad + tb.T[j].quad).has_value();
            r.require(shares == sum_factors,
                      "pair sum factorability mismatch at (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
        }
    return r;
}

// Case restrictions for every factorizable element w = sum_{i in S} T_i
// with embedded factors l_{Z1}, l_{Z2}:
//   S = Z1 n Z2 and #S is 1 or 2;
//   #S = 1: S differs from both supports, both even, Z1 u Z2 = {1..n};
//   #S = 2: exactly one support equals S, the other is even and covers S;
//   the span has no squares; and for all U in P_n the count identity
//   |J(U) n S| = |U n Z1| * |U n Z2| holds mod 2.
inline CheckReport check_factorization_cases(const HWMatrix& a) {
    CheckReport r;
    r.name = "cases";
    int n = a.dim();
    if (n <= 3) {
        r.skipped = true;
        r.skip_reason = "hypothesis requires n > 3";
        return r;
    }
    TransBasis tb = transgression(a);

    for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
        QuadPoly q(tb.m);
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1) q += tb.T[i].quad;
        r.require(!q.is_square(), "square span element at S = " + detail::subset_str(s));
    }

    FactorizableSet d = factorizable_set(tb);
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (const auto& w : d.elems) {
        std::uint32_t z1 = detail::embedded_support(w.f1);
        std::uint32_t z2 = detail::embedded_support(w.f2);
        std::string at = " at S = " + detail::subset_str(w.subset);
        r.require((z1 & z2) == w.subset, "S != Z1 n Z2" + at);
        int ssize = std::popcount(w.subset);
        r.require(ssize == 1 || ssize == 2, "#S outside {1,2}" + at);
        r.require((std::popcount(z1) & 1) == 0 && (std::popcount(z2) & 1) == 0,
                  "odd embedded factor support" + at);
        if (ssize == 1) {
            r.require(z1 != w.subset && z2 != w.subset, "factor support equals S" + at);
            r.require((z1 | z2) == full, "factor supports do not cover {1..n}" + at);
        } else if (ssize == 2) {
            bool eq1 = z1 == w.subset, eq2 = z2 == w.subset;
            r.require(eq1 != eq2, "exactly one factor support must equal S" + at);
            std::uint32_t other = eq1 ? z2 : z1;
            r.require((w.subset & ~other) == 0, "S not inside the other factor support" + at);
        }
        for (std::uint32_t u = 0; u <= full; ++u) {
            bool lhs = (std::popcount(J(a, SubsetN{n, u}).mask & w.subset) & 1) != 0;
            bool rhs = ((std::popcount(u & z1) & 1) != 0) && ((std::popcount(u & z2) & 1) != 0);
            if (lhs == rhs) r.ok();
            else
                r.fail("count identity fails" + at + ", U = " + detail::subset_str(u));
        }
    }
    return r;
}

} // namespace hwcoho
