#pragma once

// Canonical representatives under the equivalence group: simultaneous
// row/column permutation combined with per-column g2<->g3 conjugation.
// The canonical form is the row-major digit-wise minimum over the orbit.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hwcoho/hw_matrix.hpp"

namespace hwcoho {

using Encoding = std::vector<std::uint8_t>; // row-major dictionary indices

inline Encoding encode(const HWMatrix& a) {
    int n = a.dim();
    Encoding e(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[std::size_t(i) * n + j] = static_cast<std::uint8_t>(a.at(i, j).index());
    return e;
}

inline HWMatrix decode(int n, const Encoding& e) {
    DictMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, DictElem::from_index(e[std::size_t(i) * n + j]));
    return HWMatrix::validated(std::move(m));
}

inline std::uint64_t group_order(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f << n;
}

namespace detail {

// Image digit of cell (k, l) under the position map perm, with the
// column conjugations that force row 0 to (1,2,...,2) and cell (1,0)
// to 2.  Off-diagonal digits reduce to agreement with the anchor row.
inline std::uint8_t image_digit(const HWMatrix& a, const std::vector<int>& perm,
                                int k, int l) {
    if (k == l) return 1;
    if (k == 0) return 2;
    int anchor = (l == 0) ? perm[1] : perm[0];
    return a.at(perm[k], perm[l]) == a.at(anchor, perm[l]) ? 2 : 3;
}

// Fills `img` with the image encoding; compares against `best` on the
// fly and returns <0, 0, >0 like a three-way compare.  Aborts filling
// as soon as the image is known to be larger.
inline int image_compare_fill(const HWMatrix& a, const std::vector<int>& perm,
                              const Encoding& best, Encoding& img) {
    int n = a.dim();
    int verdict = 0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            std::uint8_t d = image_digit(a, perm, k, l);
            std::size_t pos = std::size_t(k) * n + l;
            if (verdict == 0) {
                if (d < best[pos]) verdict = -1;
                else if (d > best[pos]) return 1;
            }
            img[pos] = d;
        }
    return verdict;
}

} // namespace detail

// Lexicographically minimal encoding over all n! * 2^n group images.
// For a fixed permutation the optimal conjugation mask is forced (each
// column's first off-diagonal cell must become g2), so only the
// permutations are searched.
inline Encoding canonical_encoding(const HWMatrix& a) {
    int n = a.dim();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Encoding best(std::size_t(n) * n, 4); // larger than any digit
    Encoding img(std::size_t(n) * n);
    do {
        if (detail::image_compare_fill(a, perm, best, img) < 0) best.swap(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline HWMatrix canonical_form(const HWMatrix& a) {
    return decode(a.dim(), canonical_encoding(a));
}

// True when the matrix already equals its canonical form.  Cheap
// necessary conditions first; then the permutation scan with early exit.
inline bool is_canonical(const HWMatrix& a) {
    int n = a.dim();
    for (int l = 1; l < n; ++l)
        if (a.at(0, l) != g2) return false;
    if (a.at(1, 0) != g2) return false;
    Encoding own = encode(a);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int verdict = 0;
        for (int k = 1; k < n && verdict == 0; ++k)
            for (int l = 0; l < n; ++l) {
                std::uint8_t d = detail::image_digit(a, perm, k, l);
                std::uint8_t o = own[std::size_t(k) * n + l];
                if (d != o) { verdict = d < o ? -1 : 1; break; }
            }
        if (verdict < 0) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

// Number of group elements fixing a canonical representative; the orbit
// size follows by orbit-stabilizer.  Only valid on canonical matrices
// (their first row and cell (1,0) pin every conjugation mask).
inline std::uint64_t stabilizer_order(const HWMatrix& a) {
    int n = a.dim();
    Encoding own = encode(a);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        int verdict = 0;
        for (int k = 1; k < n && verdict == 0; ++k)
            for (int l = 0; l < n; ++l) {
                std::uint8_t d = detail::image_digit(a, perm, k, l);
                std::uint8_t o = own[std::size_t(k) * n + l];
                if (d != o) { verdict = d < o ? -1 : 1; break; }
            }
        if (verdict < 0) throw error("stabilizer_order: matrix is not canonical");
        if (verdict == 0) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline std::uint64_t orbit_size(const HWMatrix& canonical) {
    return group_order(canonical.dim()) / stabilizer_order(canonical);
}

} // namespace hwcoho
