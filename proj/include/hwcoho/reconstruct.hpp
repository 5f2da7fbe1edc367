#pragma once

// Recovery of a matrix from its basis-free degree-2 ring data: the
// factorizable elements of the quadratic subspace give back the basis
// (resolving the one possible extra element through the s-function),
// and a scan over dual vectors rebuilds the matrix rows.  Equality of
// canonical forms then decides homeomorphism.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hwcoho/canonical.hpp"
#include "hwcoho/cohomology.hpp"
#include "hwcoho/f2.hpp"
#include "hwcoho/hw_matrix.hpp"

namespace hwcoho {

struct reconstruct_error : error {
    using error::error;
};

// Dimension of degree 1 plus a spanning set of the distinguished
// quadratic subspace W; no basis or factorization is remembered.
struct RingInvariant {
    int m = 0;
    std::vector<QuadPoly> quads;
};

inline RingInvariant invariant_of(const HWMatrix& a) {
    TransBasis tb = transgression(a);
    RingInvariant inv{tb.m, {}};
    inv.quads.reserve(tb.n);
    for (const auto& t : tb.T) inv.quads.push_back(t.quad);
    return inv;
}

// Basis change on degree 1: substitute x -> g x through every quadratic.
inline RingInvariant scramble(const RingInvariant& inv, const F2Matrix& g) {
    if (g.rows() != inv.m || g.cols() != inv.m)
        throw error("scramble: matrix size does not match m");
    if (rank(g) != inv.m) throw error("scramble: singular matrix");
    RingInvariant out{inv.m, {}};
    out.quads.reserve(inv.quads.size());
    for (const auto& q : inv.quads) out.quads.push_back(substitute(q, g));
    return out;
}

// Recovers the unordered basis from the span alone.  The factorizable
// elements number n or n+1; with n+1 the unique zero-sum triple is the
// extra element together with the two basis vectors it came from, and
// the pair whose s-values complete the isolated ones to zero is kept.
inline std::vector<FactoredQuad> recover_T_basis(const RingInvariant& inv) {
    int m = inv.m;
    if (m < 4) throw reconstruct_error("recover: need m >= 4");
    int n = m + 1;
    int ambient = m * (m + 1) / 2;
    Subspace w(ambient);
    for (const auto& q : inv.quads) {
        if (q.vars() != m) throw reconstruct_error("recover: mixed variable counts");
        w.insert(q.bits());
    }
    if (w.dim() != n)
        throw reconstruct_error("recover: span dimension " + std::to_string(w.dim()) +
                                ", expected " + std::to_string(n));

    std::vector<FactoredQuad> dset;
    for (std::uint64_t bits : w.elements()) {
        if (!bits) continue;
        QuadPoly q(m, bits);
        if (auto f = quad_factor(q)) dset.push_back({q, f->first, f->second});
    }
    int dsize = static_cast<int>(dset.size());
    if (dsize != n && dsize != n + 1)
        throw reconstruct_error("recover: #D = " + std::to_string(dsize) +
                                " admits no basis (expected n or n+1)");

    std::vector<FactoredQuad> basis;
    if (dsize == n) {
        basis = dset;
    } else {
        int ti = -1, tj = -1, tk = -1, triples = 0;
        for (int i = 0; i < dsize; ++i)
            for (int j = i + 1; j < dsize; ++j)
                for (int k = j + 1; k < dsize; ++k)
                    if ((dset[i].quad.bits() ^ dset[j].quad.bits() ^ dset[k].quad.bits()) == 0) {
                        ++triples;
                        ti = i; tj = j; tk = k;
                    }
        if (triples == 0)
            throw reconstruct_error("recover: no triangle among n+1 factorizable elements");
        if (triples > 1) throw reconstruct_error("recover: zero-sum triple not unique");

        LinForm s_rest(m, 0);
        for (int i = 0; i < dsize; ++i)
            if (i != ti && i != tj && i != tk) {
                basis.push_back(dset[i]);
                s_rest = s_rest + s_of(dset[i]);
            }
        int tri[3] = {ti, tj, tk};
        int chosen = -1;
        for (int drop = 0; drop < 3; ++drop) {
            LinForm sum = s_rest;
            for (int t = 0; t < 3; ++t)
                if (t != drop) sum = sum + s_of(dset[tri[t]]);
            if (sum.is_zero()) {
                if (chosen >= 0) throw reconstruct_error("recover: resolving pair not unique");
                chosen = drop;
            }
        }
        if (chosen < 0) throw reconstruct_error("recover: no resolving pair in the triangle");
        for (int t = 0; t < 3; ++t)
            if (t != chosen) basis.push_back(dset[tri[t]]);
    }

    Subspace span(ambient);
    for (const auto& b : basis) span.insert(b.quad.bits());
    if (span.dim() != n) throw reconstruct_error("recover: recovered set does not span");
    std::sort(basis.begin(), basis.end(),
              [](const FactoredQuad& a, const FactoredQuad& b) { return a.quad < b.quad; });
    return basis;
}

// Dual-vector scan.  A nonzero u of F2^m is kept when no factor pair
// vanishes entirely at u and exactly one pair evaluates to (1,1); the
// kept vectors are the n matrix rows, indexed by their (1,1) column.
// Factor order inside a column only flips g2 and g3 there, which is a
// column conjugation and dissolves under the canonical form.
inline HWMatrix recover_matrix(const std::vector<FactoredQuad>& basis) {
    int n = static_cast<int>(basis.size());
    if (n < 3) throw reconstruct_error("recover_matrix: too few basis elements");
    int m = basis.front().quad.vars();
    if (n != m + 1) throw reconstruct_error("recover_matrix: basis size must be vars+1");

    DictMatrix out(n);
    std::vector<bool> row_seen(n, false);
    int kept = 0;
    for (std::uint32_t u = 1; u < (std::uint32_t(1) << m); ++u) {
        int diag_col = -1;
        bool reject = false;
        for (int i = 0; i < n; ++i) {
            bool b1 = basis[i].f1.eval(u);
            bool b2 = basis[i].f2.eval(u);
            if (!b1 && !b2) { reject = true; break; }
            if (b1 && b2) {
                if (diag_col >= 0) { reject = true; break; }
                diag_col = i;
            }
        }
        if (reject || diag_col < 0) continue;
        ++kept;
        if (kept > n)
            throw reconstruct_error("recover_matrix: more than n dual vectors kept");
        if (row_seen[diag_col])
            throw reconstruct_error("recover_matrix: duplicate diagonal column");
        row_seen[diag_col] = true;
        for (int i = 0; i < n; ++i)
            out.set(diag_col, i, dict_from_bits(basis[i].f1.eval(u), basis[i].f2.eval(u)));
    }
    if (kept != n)
        throw reconstruct_error("recover_matrix: kept " + std::to_string(kept) +
                                " dual vectors, expected " + std::to_string(n));
    try {
        return HWMatrix::validated(std::move(out));
    } catch (const validation_error& e) {
        throw reconstruct_error(std::string("recover_matrix: rebuilt matrix invalid: ") + e.what());
    }
}

inline HWMatrix recover_matrix(const TransBasis& tb) { return recover_matrix(tb.T); }

// The rigidity decision: equal canonical forms of the two recoveries.
inline bool rigidity_equal(const RingInvariant& a, const RingInvariant& b) {
    if (a.m != b.m) return false;
    HWMatrix ma = recover_matrix(recover_T_basis(a));
    HWMatrix mb = recover_matrix(recover_T_basis(b));
    return canonical_encoding(ma) == canonical_encoding(mb);
}

} // namespace hwcoho
