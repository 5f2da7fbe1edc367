#pragma once

// Matrices over the dictionary encoding oriented flat manifolds with
// diagonal (Z2)^(n-1) holonomy: validation, conversion to and from the
// affine generators, row-sum calculus, the fixed-position map J, signed
// projections, and the permutation / column-conjugation group actions.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hwcoho/dict.hpp"
#include "hwcoho/f2.hpp"

namespace hwcoho {

inline constexpr int kMaxDim = 9;

// Subset of {1..n} as a bit mask (bit i-1 <-> element i).
struct SubsetN {
    int n = 0;
    std::uint32_t mask = 0;

    static SubsetN full_set(int n) { return {n, (std::uint32_t(1) << n) - 1}; }
    static SubsetN singleton(int n, int i) { return {n, std::uint32_t(1) << (i - 1)}; }

    bool contains(int i) const { return ((mask >> (i - 1)) & 1) != 0; }
    int size() const { return std::popcount(mask); }
    bool odd() const { return (size() & 1) != 0; }
    SubsetN complement() const { return {n, ~mask & ((std::uint32_t(1) << n) - 1)}; }
    bool subset_of(SubsetN o) const { return (mask & ~o.mask) == 0; }

    friend bool operator==(SubsetN a, SubsetN b) { return a.n == b.n && a.mask == b.mask; }
    friend bool operator!=(SubsetN a, SubsetN b) { return !(a == b); }
};

struct validation_error : error {
    validation_error(const std::string& clause_, const std::string& msg)
        : error(msg), clause(clause_) {}
    std::string clause;
};

// Arbitrary square matrix over the dictionary; candidates and blocks.
class DictMatrix {
public:
    DictMatrix() = default;
    explicit DictMatrix(int n) : n_(n), e_(std::size_t(n) * n) {}

    int dim() const { return n_; }
    DictElem at(int i, int j) const { return e_[std::size_t(i) * n_ + j]; }
    void set(int i, int j, DictElem v) { e_[std::size_t(i) * n_ + j] = v; }

    static DictMatrix from_indices(const std::vector<std::vector<int>>& rows) {
        int n = static_cast<int>(rows.size());
        DictMatrix m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw validation_error("shape", "matrix is not square");
            for (int j = 0; j < n; ++j)
                m.set(i, j, DictElem::from_index(rows[i][j]));
        }
        return m;
    }

    bool symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    friend bool operator==(const DictMatrix& a, const DictMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    int n_ = 0;
    std::vector<DictElem> e_;
};

namespace detail {

// Row i as a (p2, p3) bit-mask pair over columns.
struct RowMasks {
    std::uint32_t p2 = 0, p3 = 0;
};

inline RowMasks row_masks(const DictMatrix& m, int i) {
    RowMasks r;
    for (int j = 0; j < m.dim(); ++j) {
        DictElem e = m.at(i, j);
        if (e.p2()) r.p2 |= std::uint32_t(1) << j;
        if (e.p3()) r.p3 |= std::uint32_t(1) << j;
    }
    return r;
}

} // namespace detail

// First violated clause of the defining conditions, or empty if valid.
// Clauses: "shape" (not square / dimension even or out of range),
// "entries" (diagonal not g1 or off-diagonal outside {g2,g3}),
// "row-sum" (last row differs from the sum of the others),
// "torsion-free subset {..}" (a partial row sum with no g1).
inline std::string check_hw(const DictMatrix& m) {
    int n = m.dim();
    if (n < 3 || n > kMaxDim || n % 2 == 0)
        return "shape";
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j < n; ++j) {
            DictElem e = m.at(i, j);
            if (i == j ? (e != g1) : (e != g2 && e != g3))
                return "entries";
        }
    // Subsets X of the first n-1 rows suffice: the last row is their sum,
    // so any X containing it reduces to a complement among the first n-1.
    std::vector<detail::RowMasks> rows(n - 1);
    for (int i = 0; i + 1 < n; ++i) rows[i] = detail::row_masks(m, i);
    for (std::uint32_t x = 1; x < (std::uint32_t(1) << (n - 1)); ++x) {
        std::uint32_t s2 = 0, s3 = 0;
        for (std::uint32_t rest = x; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            s2 ^= rows[i].p2;
            s3 ^= rows[i].p3;
        }
        if ((s2 & s3) == 0) {
            std::string clause = "torsion-free subset {";
            bool first = true;
            for (int i = 0; i < n - 1; ++i)
                if ((x >> i) & 1) {
                    if (!first) clause += ",";
                    clause += std::to_string(i + 1);
                    first = false;
                }
            return clause + "}";
        }
    }
    for (int j = 0; j < n; ++j) {
        DictElem sum = g0;
        for (int i = 0; i + 1 < n; ++i) sum += m.at(i, j);
        if (sum != m.at(n - 1, j)) return "row-sum";
    }
    return {};
}

// Validated matrix: g1 diagonal, {g2,g3} elsewhere, last row the sum of
// the first n-1, and every partial row sum meeting g1 somewhere.
class HWMatrix {
public:
    static HWMatrix validated(DictMatrix m) {
        std::string clause = check_hw(m);
        if (!clause.empty())
            throw validation_error(clause, "not a valid matrix: clause \"" + clause + "\"");
        return HWMatrix(std::move(m));
    }

    // Completes the last row as the sum of the given n-1 rows.
    static HWMatrix complete(int n, const std::vector<std::vector<int>>& first_rows) {
        if (static_cast<int>(first_rows.size()) != n - 1)
            throw validation_error("shape", "expected n-1 rows to complete");
        DictMatrix m(n);
        for (int i = 0; i + 1 < n; ++i) {
            if (static_cast<int>(first_rows[i].size()) != n)
                throw validation_error("shape", "row length differs from n");
            for (int j = 0; j < n; ++j)
                m.set(i, j, DictElem::from_index(first_rows[i][j]));
        }
        for (int j = 0; j < n; ++j) {
            DictElem sum = g0;
            for (int i = 0; i + 1 < n; ++i) sum += m.at(i, j);
            m.set(n - 1, j, sum);
        }
        return validated(std::move(m));
    }

    int dim() const { return m_.dim(); }
    DictElem at(int i, int j) const { return m_.at(i, j); }
    const DictMatrix& matrix() const { return m_; }

    friend bool operator==(const HWMatrix& a, const HWMatrix& b) { return a.m_ == b.m_; }
    friend bool operator!=(const HWMatrix& a, const HWMatrix& b) { return !(a == b); }

private:
    explicit HWMatrix(DictMatrix m) : m_(std::move(m)) {}
    DictMatrix m_;
};

// Generator (B_i, b_i): the rotation with +1 only at coordinate `index`
// and a translation vector over {0, 1/2} given by `shifts` bits.
struct AffineGen {
    int index = 1;               // 1-based coordinate carrying +1
    std::uint32_t shifts = 0;    // bit j-1 set <-> translation 1/2 at coordinate j
};

inline HWMatrix from_generators(int n, const std::vector<AffineGen>& gens) {
    if (static_cast<int>(gens.size()) != n - 1)
        throw validation_error("shape", "expected n-1 generators");
    DictMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) {
        if (gens[i].index != i + 1)
            throw validation_error("shape", "generator i must carry +1 at coordinate i");
        for (int j = 0; j < n; ++j) {
            int sign = (j == i) ? 1 : -1;
            bool half = ((gens[i].shifts >> j) & 1) != 0;
            m.set(i, j, dict_from_affine(sign, half));
        }
    }
    for (int j = 0; j < n; ++j) {
        DictElem sum = g0;
        for (int i = 0; i + 1 < n; ++i) sum += m.at(i, j);
        m.set(n - 1, j, sum);
    }
    return HWMatrix::validated(std::move(m));
}

// Shift bits read back off the rows: half shift exactly where the entry
// is g1 or g3.
inline std::vector<AffineGen> to_generators(const HWMatrix& a) {
    std::vector<AffineGen> gens(a.dim() - 1);
    for (int i = 0; i + 1 < a.dim(); ++i) {
        gens[i].index = i + 1;
        for (int j = 0; j < a.dim(); ++j)
            if (a.at(i, j).p3()) gens[i].shifts |= std::uint32_t(1) << j;
    }
    return gens;
}

inline std::vector<DictElem> row_sum(const HWMatrix& a, SubsetN x) {
    std::vector<DictElem> row(a.dim(), g0);
    for (int i = 1; i <= a.dim(); ++i)
        if (x.contains(i))
            for (int j = 0; j < a.dim(); ++j) row[j] += a.at(i - 1, j);
    return row;
}

// Positions where the rows of U sum to g1.
inline SubsetN J(const HWMatrix& a, SubsetN u) {
    std::uint32_t s2 = 0, s3 = 0;
    for (int i = 0; i < a.dim(); ++i)
        if ((u.mask >> i) & 1) {
            auto r = detail::row_masks(a.matrix(), i);
            s2 ^= r.p2;
            s3 ^= r.p3;
        }
    return {a.dim(), s2 & s3};
}

// Dictionary sum of row a over the columns in S.
inline DictElem sigma(const HWMatrix& m, SubsetN s, int a) {
    DictElem acc = g0;
    for (int j = 1; j <= m.dim(); ++j)
        if (s.contains(j)) acc += m.at(a - 1, j - 1);
    return acc;
}

// Signed projection: bit of alpha selects p3 over p2 per column.
inline F2Matrix p_alpha(const DictMatrix& m, std::uint32_t alpha) {
    int n = m.dim();
    F2Matrix out(n, n);
    for (int j = 0; j < n; ++j) {
        bool use3 = ((alpha >> j) & 1) != 0;
        for (int i = 0; i < n; ++i) {
            DictElem e = m.at(i, j);
            out.set(i, j, use3 ? e.p3() : e.p2());
        }
    }
    return out;
}

inline F2Matrix p_alpha(const HWMatrix& m, std::uint32_t alpha) {
    return p_alpha(m.matrix(), alpha);
}

// Rows of `m` restricted to `rows` (all columns kept), projected.
inline F2Matrix p_alpha_rows(const HWMatrix& m, const std::vector<int>& rows,
                             std::uint32_t alpha) {
    int n = m.dim();
    F2Matrix out(static_cast<int>(rows.size()), n);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (int j = 0; j < n; ++j) {
            DictElem e = m.at(rows[k], j);
            bool use3 = ((alpha >> j) & 1) != 0;
            out.set(static_cast<int>(k), j, use3 ? e.p3() : e.p2());
        }
    return out;
}

// Connected components of a symmetric block under one projection
// (proj = 2 or 3): vertices i, j joined when the projected entry is 1.
inline std::vector<std::vector<int>> connected_components(const DictMatrix& block, int proj) {
    if (proj != 2 && proj != 3) throw error("connected_components: projection must be 2 or 3");
    if (!block.symmetric()) throw error("connected_components: block is not symmetric");
    int n = block.dim();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v + 1);
            for (int w = 0; w < n; ++w) {
                if (w == v || comp[w] >= 0) continue;
                DictElem e = block.at(v, w);
                bool edge = (proj == 2) ? e.p2() : e.p3();
                if (edge) { comp[w] = id; stack.push_back(w); }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

// Simultaneous row/column relabeling: B[sigma(i)][sigma(j)] = A[i][j].
inline HWMatrix permute(const HWMatrix& a, const std::vector<int>& sigma) {
    int n = a.dim();
    if (static_cast<int>(sigma.size()) != n)
        throw error("permute: permutation length differs from n");
    DictMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b.set(sigma[i], sigma[j], a.at(i, j));
    return HWMatrix::validated(std::move(b));
}

// Swap g2 <-> g3 in every masked column.
inline HWMatrix conjugate_columns(const HWMatrix& a, SubsetN cols) {
    int n = a.dim();
    DictMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            DictElem e = a.at(i, j);
            b.set(i, j, cols.contains(j + 1) ? e.conjugated() : e);
        }
    return HWMatrix::validated(std::move(b));
}

} // namespace hwcoho
