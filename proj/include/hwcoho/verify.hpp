#pragma once

// Property suites for whole dimensions: each suite sweeps the class
// representatives (or, where stated, the full enumeration stream) and
// records failures with witnesses.  This is the engine behind the CLI
// verify command and the acceptance run.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hwcoho/cohomology.hpp"
#include "hwcoho/enumerate.hpp"
#include "hwcoho/reconstruct.hpp"
#include "hwcoho/report.hpp"

namespace hwcoho {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(master ^ 0x243f6a8885a308d3ULL) ^ splitmix64(a) ^ (b * 0x100000001b3ULL));
}

inline std::string rep_tag(int n, std::size_t idx) {
    return "n=" + std::to_string(n) + " class#" + std::to_string(idx);
}

} // namespace detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "jmap",  "sigma",  "defect",      "subrank",   "lemmaB",     "lemmaC",
        "cases", "bridge", "orientation", "roundtrip", "separation",
    };
    return names;
}

// Five clauses of the J-map calculus over every subset U, plus the
// all-ones-minus-identity shape of the combined projection.
inline CheckReport suite_jmap(const std::vector<HWMatrix>& reps, int n) {
    CheckReport r;
    r.name = "jmap";
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (std::size_t idx = 0; idx < reps.size(); ++idx) {
        const HWMatrix& a = reps[idx];
        std::string tag = detail::rep_tag(n, idx);
        for (std::uint32_t u = 0; u <= full; ++u) {
            SubsetN U{n, u};
            SubsetN ju = J(a, U);
            if (u != 0 && u != full)
                r.require(ju.mask != 0, tag + ": clause 1 at U = " + detail::subset_str(u));
            r.require(J(a, U.complement()) == ju, tag + ": clause 2 at U = " + detail::subset_str(u));
            if (std::popcount(u) == 1)
                r.require(ju.mask == u, tag + ": clause 3 at U = " + detail::subset_str(u));
            if (std::popcount(u) & 1)
                r.require((ju.mask & ~u) == 0, tag + ": clause 4 at U = " + detail::subset_str(u));
            else
                r.require((ju.mask & u) == 0, tag + ": clause 5 at U = " + detail::subset_str(u));
        }
        bool shape_ok = true;
        for (int i = 0; i < n && shape_ok; ++i)
            for (int j = 0; j < n; ++j) {
                DictElem e = a.at(i, j);
                bool val = e.p2() ^ e.p3();
                if (val != (i != j)) { shape_ok = false; break; }
            }
        r.require(shape_ok, tag + ": combined projection is not ones-minus-identity");
    }
    return r;
}

// Row-sum identities linking J to the sigma statistics, with parities
// embedded as g0/g1: the right side must land in {g0, g1} and match.
inline CheckReport suite_sigma(const std::vector<HWMatrix>& reps, int n) {
    CheckReport r;
    r.name = "sigma";
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (std::size_t idx = 0; idx < reps.size(); ++idx) {
        const HWMatrix& a = reps[idx];
        std::string tag = detail::rep_tag(n, idx);
        for (std::uint32_t s = 0; s <= full; ++s) {
            SubsetN S{n, s};
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y) {
                    if (x == y) continue;
                    SubsetN u{n, (std::uint32_t(1) << (x - 1)) | (std::uint32_t(1) << (y - 1))};
                    bool parity = (std::popcount(J(a, u).mask & s) & 1) != 0;
                    DictElem lhs = parity ? g1 : g0;
                    DictElem rhs = sigma(a, S, x) + sigma(a, S, y);
                    bool in_s_x = S.contains(x), in_s_y = S.contains(y);
                    if (!in_s_x && in_s_y)
                        rhs += a.at(x - 1, y - 1) + g1;
                    else if (in_s_x && !in_s_y)
                        rhs += a.at(y - 1, x - 1) + g1;
                    else if (in_s_x && in_s_y)
                        rhs += a.at(x - 1, y - 1) + a.at(y - 1, x - 1);
                    bool lands = rhs == g0 || rhs == g1;
                    if (lands && rhs == lhs) r.ok();
                    else
                        r.fail(tag + ": identity fails at S = " + detail::subset_str(s) + ", a = " +
                               std::to_string(x) + ", b = " + std::to_string(y));
                }
        }
    }
    return r;
}

// Defect of every signed projection is at most 1.
inline CheckReport suite_defect(const std::vector<HWMatrix>& reps, int n) {
    CheckReport r;
    r.name = "defect";
    for (std::size_t idx = 0; idx < reps.size(); ++idx) {
        for (std::uint32_t alpha = 0; alpha < (std::uint32_t(1) << n); ++alpha) {
            int d = defect(p_alpha(reps[idx], alpha));
            r.require(d <= 1, detail::rep_tag(n, idx) + ": defect " + std::to_string(d) +
                                  " at alpha mask " + std::to_string(alpha));
        }
    }
    return r;
}

// Every proper row submatrix has full row rank under every projection.
inline CheckReport suite_subrank(const std::vector<HWMatrix>& reps, int n) {
    CheckReport r;
    r.name = "subrank";
    for (std::size_t idx = 0; idx < reps.size(); ++idx) {
        for (std::uint32_t rows = 1; rows < ((std::uint32_t(1) << n) - 1); ++rows) {
            std::vector<int> picked;
            for (int i = 0; i < n; ++i)
                if ((rows >> i) & 1) picked.push_back(i);
            for (std::uint32_t alpha = 0; alpha < (std::uint32_t(1) << n); ++alpha) {
                int rk = rank(p_alpha_rows(reps[idx], picked, alpha));
                r.require(rk == static_cast<int>(picked.size()),
                          detail::rep_tag(n, idx) + ": rank " + std::to_string(rk) + " for rows " +
                              detail::subset_str(rows) + ", alpha mask " + std::to_string(alpha));
            }
        }
    }
    return r;
}

inline CheckReport suite_dset_size(const std::vector<HWMatrix>& reps, int n) {
    CheckReport r;
    r.name = "lemmaB";
    if (n <= 3) {
        r.skipped = true;
        r.skip_reason = "hypothesis requires n > 3";
        return r;
    }
    for (const auto& a : reps) r.absorb(check_dset_size(a));
    return r;
}

// Structure of D plus basis recovery from the forgotten invariant.
inline CheckReport suite_dset_structure(const std::vector<HWMatrix>& reps, int n) {
    CheckReport r;
    r.name = "lemmaC";
    if (n <= 3) {
        r.skipped = true;
        r.skip_reason = "hypothesis requires n > 3";
        return r;
    }
    for (std::size_t idx = 0; idx < reps.size(); ++idx) {
        r.absorb(check_dset_structure(reps[idx]));
        std::string tag = detail::rep_tag(n, idx);
        try {
            auto basis = recover_T_basis(invariant_of(reps[idx]));
            r.require(static_cast<int>(basis.size()) == n, tag + ": recovered set size != n");
            TransBasis tb = transgression(reps[idx]);
            Subspace w(tb.m * (tb.m + 1) / 2);
            for (const auto& t : tb.T) w.insert(t.quad.bits());
            bool spans = true;
            for (const auto& b : basis)
                if (!w.contains(b.quad.bits())) spans = false;
            Subspace rec(tb.m * (tb.m + 1) / 2);
            for (const auto& b : basis) rec.insert(b.quad.bits());
            r.require(spans && rec.dim() == n, tag + ": recovered set does not span the subspace");
            bool exact = true;
            for (const auto& t : tb.T) {
                bool found = false;
                for (const auto& b : basis)
                    if (b.quad == t.quad) found = true;
                if (!found) exact = false;
            }
            r.require(exact, tag + ": recovered set differs from the column basis");
        } catch (const reconstruct_error& e) {
            r.fail(tag + ": recovery failed: " + e.what());
        }
    }
    return r;
}

inline CheckReport suite_cases(const std::vector<HWMatrix>& reps, int n) {
    CheckReport r;
    r.name = "cases";
    if (n <= 3) {
        r.skipped = true;
        r.skip_reason = "hypothesis requires n > 3";
        return r;
    }
    for (const auto& a : reps) r.absorb(check_factorization_cases(a));
    return r;
}

// The indicator bridge: evaluating the embedded basis matches J.
inline CheckReport suite_bridge(const std::vector<HWMatrix>& reps, int n) {
    CheckReport r;
    r.name = "bridge";
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (std::size_t idx = 0; idx < reps.size(); ++idx) {
        TransBasis tb = transgression(reps[idx]);
        for (std::uint32_t u = 0; u <= full; ++u) {
            std::uint32_t lhs = eval_T(tb, u);
            std::uint32_t rhs = J(reps[idx], SubsetN{n, u}).mask;
            r.require(lhs == rhs, detail::rep_tag(n, idx) + ": bridge fails at U = " +
                                      detail::subset_str(u));
        }
    }
    return r;
}

// Orientation identity: the s-values of the basis sum to zero.  At
// n = 5 this sweeps every enumerated matrix, not only representatives.
inline CheckReport suite_orientation(const std::vector<HWMatrix>& reps, int n) {
    CheckReport r;
    r.name = "orientation";
    auto check_one = [&](const HWMatrix& a, const std::string& tag) {
        TransBasis tb = transgression(a);
        LinForm sum(tb.m, 0);
        for (const auto& t : tb.T) sum = sum + s_of(t);
        r.require(sum.is_zero(), tag + ": s-values do not sum to zero");
    };
    if (n == 5) {
        std::uint64_t i = 0;
        enumerate_hw(n, [&](const HWMatrix& a) {
            check_one(a, "n=5 enumerated#" + std::to_string(i++));
        });
        r.stats["matrices_checked"] = static_cast<std::int64_t>(i);
    } else {
        for (std::size_t idx = 0; idx < reps.size(); ++idx)
            check_one(reps[idx], detail::rep_tag(n, idx));
    }
    return r;
}

// The main round trip: scrambled invariants recover the original class.
inline CheckReport suite_roundtrip(const std::vector<HWMatrix>& reps, int n,
                                   std::uint64_t seed, int scrambles_per_rep = 100) {
    CheckReport r;
    r.name = "roundtrip";
    if (n <= 3) {
        r.skipped = true;
        r.skip_reason = "recovery requires n > 3";
        return r;
    }
    for (std::size_t idx = 0; idx < reps.size(); ++idx) {
        RingInvariant inv = invariant_of(reps[idx]);
        for (int k = 0; k < scrambles_per_rep; ++k) {
            F2Matrix g = gl_random(inv.m, detail::mix_seed(seed, idx, k));
            bool equal = false;
            std::string note;
            try {
                equal = rigidity_equal(inv, scramble(inv, g));
            } catch (const reconstruct_error& e) {
                note = std::string(": ") + e.what();
            }
            r.require(equal, detail::rep_tag(n, idx) + ": round trip failed at scramble " +
                                 std::to_string(k) + note);
        }
    }
    return r;
}

// Distinct representatives stay distinct through recovery.
inline CheckReport suite_separation(const std::vector<HWMatrix>& reps, int n,
                                    std::uint64_t seed, int max_pairs = 0) {
    CheckReport r;
    r.name = "separation";
    if (n <= 3) {
        r.skipped = true;
        r.skip_reason = "recovery requires n > 3";
        return r;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < static_cast<int>(reps.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(reps.size()); ++j)
            pairs.emplace_back(i, j);
    if (max_pairs > 0 && static_cast<int>(pairs.size()) > max_pairs) {
        // deterministic subsample
        std::vector<std::pair<int, int>> picked;
        picked.reserve(max_pairs);
        for (int k = 0; k < max_pairs; ++k)
            picked.push_back(pairs[detail::mix_seed(seed, 0xdead, k) % pairs.size()]);
        pairs.swap(picked);
    }
    std::vector<RingInvariant> invs;
    invs.reserve(reps.size());
    for (const auto& a : reps) invs.push_back(invariant_of(a));
    for (auto [i, j] : pairs) {
        bool equal = rigidity_equal(invs[i], invs[j]);
        r.require(!equal, "n=" + std::to_string(n) + ": classes " + std::to_string(i) + " and " +
                              std::to_string(j) + " merge under recovery");
    }
    r.stats["pairs_checked"] = static_cast<std::int64_t>(pairs.size());
    return r;
}

inline std::vector<HWMatrix> catalog_representatives(const Catalog& cat) {
    std::vector<HWMatrix> reps;
    reps.reserve(cat.classes.size());
    for (const auto& c : cat.classes) reps.push_back(decode(cat.n, c.canonical));
    return reps;
}

// Runs one named suite (or every suite for "all") over a catalog.
inline std::vector<CheckReport> run_suites(const Catalog& cat, const std::string& which,
                                           std::uint64_t seed) {
    auto reps = catalog_representatives(cat);
    int n = cat.n;
    std::vector<CheckReport> out;
    auto want = [&](const std::string& name) { return which == "all" || which == name; };
    if (want("jmap")) out.push_back(suite_jmap(reps, n));
    if (want("sigma")) out.push_back(suite_sigma(reps, n));
    if (want("defect")) out.push_back(suite_defect(reps, n));
    if (want("subrank")) out.push_back(suite_subrank(reps, n));
    if (want("lemmaB")) out.push_back(suite_dset_size(reps, n));
    if (want("lemmaC")) out.push_back(suite_dset_structure(reps, n));
    if (want("cases")) out.push_back(suite_cases(reps, n));
    if (want("bridge")) out.push_back(suite_bridge(reps, n));
    if (want("orientation")) out.push_back(suite_orientation(reps, n));
    if (want("roundtrip")) out.push_back(suite_roundtrip(reps, n, seed));
    if (want("separation")) out.push_back(suite_separation(reps, n, seed));
    if (out.empty()) throw error("unknown suite: " + which);
    return out;
}

} // namespace hwcoho
