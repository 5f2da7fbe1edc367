#pragma once

// Backtracking enumeration of all valid matrices of a given odd
// dimension, and their classification into equivalence classes.
//
// Search layout: off-diagonal cells of rows 1..n-1 are filled row by
// row; a partial assignment dies as soon as some subset of the filled
// rows sums without a g1.  The last row is the sum of the others, so it
// is derived, and the subset checks over the first n-1 rows are exactly
// the defining torsion-freeness condition.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "hwcoho/canonical.hpp"
#include "hwcoho/hw_matrix.hpp"

namespace hwcoho {

struct CatalogClass {
    Encoding canonical;
    std::uint64_t orbit_size = 0;
};

struct Catalog {
    int n = 0;
    std::uint64_t raw_count = 0;
    std::vector<CatalogClass> classes;
};

namespace detail {

// Choice c assigns {g2,g3} to the n-1 off-diagonal cells of row r in
// column order; bit t set means g3 at column (t < r ? t : t + 1).
struct RowTables {
    int n = 0;
    int choices = 0;
    // per row r, per choice c: p2/p3 masks over all n columns (diagonal g1 included)
    std::vector<std::vector<std::uint32_t>> p2, p3;
};

inline RowTables build_row_tables(int n) {
    RowTables t;
    t.n = n;
    t.choices = 1 << (n - 1);
    t.p2.assign(n - 1, std::vector<std::uint32_t>(t.choices));
    t.p3.assign(n - 1, std::vector<std::uint32_t>(t.choices));
    for (int r = 0; r + 1 < n; ++r)
        for (int c = 0; c < t.choices; ++c) {
            std::uint32_t m3 = 0;
            for (int bit = 0; bit + 1 < n; ++bit)
                if ((c >> bit) & 1) m3 |= std::uint32_t(1) << (bit < r ? bit : bit + 1);
            std::uint32_t diag = std::uint32_t(1) << r;
            std::uint32_t offdiag = ((std::uint32_t(1) << n) - 1) ^ diag;
            t.p3[r][c] = diag | m3;
            t.p2[r][c] = diag | (offdiag & ~m3);
        }
    return t;
}

inline HWMatrix materialize(int n, const std::uint32_t* rows2, const std::uint32_t* rows3,
                            std::uint32_t last2, std::uint32_t last3) {
    DictMatrix m(n);
    for (int i = 0; i < n; ++i) {
        std::uint32_t b2 = (i + 1 < n) ? rows2[i] : last2;
        std::uint32_t b3 = (i + 1 < n) ? rows3[i] : last3;
        for (int j = 0; j < n; ++j)
            m.set(i, j, dict_from_bits((b2 >> j) & 1, (b3 >> j) & 1));
    }
    return HWMatrix::validated(std::move(m));
}

// Depth-first scan.  Leaf callback receives the chosen choice indices
// and the per-row masks including the derived last row.
template <class Leaf>
void search(const RowTables& t, int first_choice_lo, int first_choice_hi, Leaf&& leaf) {
    const int n = t.n;
    const int rows = n - 1;
    std::vector<std::uint32_t> xs2(std::size_t(1) << rows), xs3(std::size_t(1) << rows);
    xs2[0] = xs3[0] = 0;
    std::vector<int> choice(rows, 0);
    std::vector<std::uint32_t> m2(rows), m3(rows);

    struct Frame { int c; };
    std::vector<Frame> stack(rows);
    int depth = 0;
    stack[0].c = first_choice_lo;
    while (depth >= 0) {
        if (stack[depth].c >= (depth == 0 ? first_choice_hi : t.choices)) {
            --depth;
            if (depth >= 0) ++stack[depth].c;
            continue;
        }
        int c = stack[depth].c;
        std::uint32_t r2 = t.p2[depth][c];
        std::uint32_t r3 = t.p3[depth][c];
        // every previously valid subset, now joined with this row
        bool ok = true;
        const std::uint32_t prefix = std::uint32_t(1) << depth;
        for (std::uint32_t s = 1; s < prefix; ++s)
            if (((xs2[s] ^ r2) & (xs3[s] ^ r3)) == 0) { ok = false; break; }
        if (!ok) {
            ++stack[depth].c;
            continue;
        }
        choice[depth] = c;
        m2[depth] = r2;
        m3[depth] = r3;
        if (depth + 1 == rows) {
            std::uint32_t last2 = xs2[prefix - 1] ^ r2;
            std::uint32_t last3 = xs3[prefix - 1] ^ r3;
            leaf(choice.data(), m2.data(), m3.data(), last2, last3);
            ++stack[depth].c;
            continue;
        }
        for (std::uint32_t s = 0; s < prefix; ++s) {
            xs2[s | prefix] = xs2[s] ^ r2;
            xs3[s | prefix] = xs3[s] ^ r3;
        }
        ++depth;
        stack[depth].c = 0;
    }
}

} // namespace detail

inline void require_enumerable_dim(int n) {
    if (n < 3 || n > kMaxDim || n % 2 == 0)
        throw error("dimension must be odd and within 3..9");
}

// Emits every valid matrix exactly once, in row-major lexicographic
// order of the free cells (g2 before g3).
template <class Visit>
void enumerate_hw(int n, Visit&& visit) {
    require_enumerable_dim(n);
    auto tables = detail::build_row_tables(n);
    detail::search(tables, 0, tables.choices,
                   [&](const int*, const std::uint32_t* r2, const std::uint32_t* r3,
                       std::uint32_t last2, std::uint32_t last3) {
                       visit(detail::materialize(n, r2, r3, last2, last3));
                   });
}

inline std::vector<HWMatrix> enumerate_all(int n) {
    std::vector<HWMatrix> out;
    enumerate_hw(n, [&](const HWMatrix& m) { out.push_back(m); });
    return out;
}

// Groups the full stream by canonical form.  Candidate representatives
// are matrices already in canonical position (first row all g2, cell
// (1,0) g2), which only the subtree with both leading choices zero can
// produce; everything else only contributes to the raw count.
inline Catalog classify(int n, int jobs = 1) {
    require_enumerable_dim(n);
    auto tables = detail::build_row_tables(n);

    struct Shard {
        std::uint64_t count = 0;
        std::vector<Encoding> reps;
    };
    auto run_shard = [&](int lo, int hi, Shard& out) {
        detail::search(tables, lo, hi,
                       [&](const int* choice, const std::uint32_t* r2, const std::uint32_t* r3,
                           std::uint32_t last2, std::uint32_t last3) {
                           ++out.count;
                           if (choice[0] != 0 || (choice[1] & 1) != 0) return;
                           HWMatrix m = detail::materialize(n, r2, r3, last2, last3);
                           if (is_canonical(m)) out.reps.push_back(encode(m));
                       });
    };

    std::vector<Shard> shards;
    if (jobs <= 1) {
        shards.resize(1);
        run_shard(0, tables.choices, shards[0]);
    } else {
        int workers = std::min(jobs, tables.choices);
        shards.resize(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            int lo = tables.choices * w / workers;
            int hi = tables.choices * (w + 1) / workers;
            pool.emplace_back([&, lo, hi, w] { run_shard(lo, hi, shards[w]); });
        }
        for (auto& th : pool) th.join();
    }

    Catalog cat;
    cat.n = n;
    for (auto& s : shards) {
        cat.raw_count += s.count;
        for (auto& r : s.reps) cat.classes.push_back({std::move(r), 0});
    }
    std::sort(cat.classes.begin(), cat.classes.end(),
              [](const CatalogClass& a, const CatalogClass& b) { return a.canonical < b.canonical; });

    std::uint64_t orbit_total = 0;
    for (auto& cls : cat.classes) {
        cls.orbit_size = orbit_size(decode(n, cls.canonical));
        orbit_total += cls.orbit_size;
    }
    if (orbit_total != cat.raw_count)
        throw error("classify: orbit sizes do not add up to the raw count");
    return cat;
}

} // namespace hwcoho
