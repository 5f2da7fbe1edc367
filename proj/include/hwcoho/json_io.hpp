#pragma once

// JSON wire formats, all versioned with "format": "hwcoho/1".
//   matrix     {"n":5, "rows":[[1,3,2,2,2], ...]}       n or n-1 rows
//   generators {"n":5, "generators":[{"index":1,"shifts":[1,1,0,0,0]}, ...]}
//   invariant  {"m":4, "quads":[[[1,1],[1,2]], ...]}    monomial index pairs
//   catalog    {"n":7, "class_count":62, "raw_count":..., "classes":[...]}
// Linear forms serialize as 1-based variable index lists, quadratics as
// [i, j] pairs with i <= j.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hwcoho/cohomology.hpp"
#include "hwcoho/enumerate.hpp"
#include "hwcoho/hw_matrix.hpp"
#include "hwcoho/reconstruct.hpp"
#include "hwcoho/report.hpp"

namespace hwcoho {

using json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "hwcoho/1";

struct io_error : error {
    using error::error;
};

inline void check_format(const json& j) {
    if (j.contains("format") && j.at("format") != kFormatTag)
        throw io_error("unsupported format tag: " + j.at("format").dump());
}

inline json matrix_to_json(const HWMatrix& a, bool with_format = true) {
    json j;
    if (with_format) j["format"] = kFormatTag;
    j["n"] = a.dim();
    json rows = json::array();
    for (int i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (int k = 0; k < a.dim(); ++k) row.push_back(a.at(i, k).index());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline json generators_to_json(int n, const std::vector<AffineGen>& gens) {
    json j;
    j["format"] = kFormatTag;
    j["n"] = n;
    json list = json::array();
    for (const auto& g : gens) {
        json shifts = json::array();
        for (int k = 0; k < n; ++k) shifts.push_back(int((g.shifts >> k) & 1));
        list.push_back(json{{"index", g.index}, {"shifts", std::move(shifts)}});
    }
    j["generators"] = std::move(list);
    return j;
}

// Accepts n rows (the last row is verified) or n-1 rows (completed).
inline HWMatrix matrix_from_json(const json& j) {
    check_format(j);
    int n = j.at("n").get<int>();
    const json& rows = j.at("rows");
    auto as_rows = [&](std::size_t count) {
        std::vector<std::vector<int>> out;
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(rows.at(i).get<std::vector<int>>());
        return out;
    };
    if (static_cast<int>(rows.size()) == n)
        return HWMatrix::validated(DictMatrix::from_indices(as_rows(rows.size())));
    if (static_cast<int>(rows.size()) == n - 1)
        return HWMatrix::complete(n, as_rows(rows.size()));
    throw io_error("matrix JSON must carry n or n-1 rows");
}

inline HWMatrix generators_from_json(const json& j) {
    check_format(j);
    int n = j.at("n").get<int>();
    std::vector<AffineGen> gens;
    for (const auto& gj : j.at("generators")) {
        AffineGen g;
        g.index = gj.at("index").get<int>();
        auto shifts = gj.at("shifts").get<std::vector<int>>();
        if (static_cast<int>(shifts.size()) != n)
            throw io_error("generator shift vector length differs from n");
        for (int k = 0; k < n; ++k)
            if (shifts[k]) g.shifts |= std::uint32_t(1) << k;
        gens.push_back(g);
    }
    return from_generators(n, gens);
}

inline json linform_to_json(const LinForm& l) {
    json out = json::array();
    for (int i = 1; i <= l.vars(); ++i)
        if (l.coeff(i)) out.push_back(i);
    return out;
}

inline LinForm linform_from_json(const json& j, int m) {
    std::uint64_t bits = 0;
    for (const auto& idx : j) {
        int i = idx.get<int>();
        if (i < 1 || i > m) throw io_error("variable index out of range");
        bits |= std::uint64_t(1) << (i - 1);
    }
    return LinForm(m, bits);
}

inline json quad_to_json(const QuadPoly& q) {
    json out = json::array();
    for (int i = 1; i <= q.vars(); ++i)
        for (int j = i; j <= q.vars(); ++j)
            if (q.coeff(i, j)) out.push_back(json::array({i, j}));
    return out;
}

inline QuadPoly quad_from_json(const json& j, int m) {
    QuadPoly q(m);
    for (const auto& pair : j) {
        int a = pair.at(0).get<int>();
        int b = pair.at(1).get<int>();
        if (a < 1 || b < a || b > m) throw io_error("bad monomial index pair");
        q.toggle(a, b);
    }
    return q;
}

inline json invariant_to_json(const RingInvariant& inv) {
    json j;
    j["format"] = kFormatTag;
    j["m"] = inv.m;
    json quads = json::array();
    for (const auto& q : inv.quads) quads.push_back(quad_to_json(q));
    j["quads"] = std::move(quads);
    return j;
}

inline RingInvariant invariant_from_json(const json& j) {
    check_format(j);
    RingInvariant inv;
    inv.m = j.at("m").get<int>();
    if (inv.m < 1 || inv.m > kMaxQuadVars) throw io_error("m out of supported range");
    for (const auto& qj : j.at("quads")) inv.quads.push_back(quad_from_json(qj, inv.m));
    return inv;
}

inline json catalog_to_json(const Catalog& cat) {
    json j;
    j["format"] = kFormatTag;
    j["n"] = cat.n;
    j["class_count"] = cat.classes.size();
    j["raw_count"] = cat.raw_count;
    json classes = json::array();
    for (const auto& c : cat.classes) {
        json cj;
        cj["canonical"] = matrix_to_json(decode(cat.n, c.canonical), false);
        cj["orbit_size"] = c.orbit_size;
        classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);
    return j;
}

inline Catalog catalog_from_json(const json& j) {
    check_format(j);
    Catalog cat;
    cat.n = j.at("n").get<int>();
    cat.raw_count = j.at("raw_count").get<std::uint64_t>();
    for (const auto& cj : j.at("classes")) {
        HWMatrix m = matrix_from_json(cj.at("canonical"));
        cat.classes.push_back({encode(m), cj.at("orbit_size").get<std::uint64_t>()});
    }
    if (j.contains("class_count") &&
        j.at("class_count").get<std::size_t>() != cat.classes.size())
        throw io_error("catalog class_count disagrees with the class list");
    return cat;
}

inline json report_to_json(const CheckReport& r) {
    json j;
    j["suite"] = r.name;
    if (r.skipped) {
        j["skipped"] = true;
        j["reason"] = r.skip_reason;
        return j;
    }
    j["pass"] = r.pass();
    j["checks"] = r.checks;
    j["failures"] = r.failure_count;
    j["witnesses"] = r.witnesses;
    if (!r.stats.empty()) {
        json st;
        for (const auto& [k, v] : r.stats) st[k] = v;
        j["stats"] = std::move(st);
    }
    return j;
}

// Sniffs matrix / generators / invariant payloads.
inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw io_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
    if (!out) throw io_error("write failed: " + path);
}

} // namespace hwcoho
