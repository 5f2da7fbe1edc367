// Command-line surface: enumeration, classification, invariants,
// canonical forms, reconstruction, scrambling, rigidity decisions, and
// the property suites, all over versioned JSON files.
//
// Exit codes: 0 success (rigidity: homeomorphic), 1 rigidity mismatch /
// failed property, 2 invalid configuration, 3 I/O failure, 4 invalid
// matrix or invariant input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hwcoho/hwcoho.hpp"

namespace {

using hwcoho::json;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        hwcoho::write_json_file(out_path, j);
}

// Matrix payloads arrive as entry rows or as generator lists.
hwcoho::HWMatrix matrix_from_file(const std::string& path) {
    json j = hwcoho::load_json_file(path);
    if (j.contains("rows")) return hwcoho::matrix_from_json(j);
    if (j.contains("generators")) return hwcoho::generators_from_json(j);
    throw hwcoho::io_error(path + ": expected a matrix or generators object");
}

hwcoho::RingInvariant invariant_from_file(const std::string& path) {
    json j = hwcoho::load_json_file(path);
    if (j.contains("quads")) return hwcoho::invariant_from_json(j);
    if (j.contains("rows") || j.contains("generators")) {
        hwcoho::HWMatrix m = j.contains("rows") ? hwcoho::matrix_from_json(j)
                                                : hwcoho::generators_from_json(j);
        return hwcoho::invariant_of(m);
    }
    throw hwcoho::io_error(path + ": expected a matrix, generators, or invariant object");
}

int cmd_enumerate(int dim, const std::string& out_path) {
    hwcoho::require_enumerable_dim(dim);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw hwcoho::io_error("cannot open " + out_path + " for writing");
        out = &file;
    }
    if (dim >= 7)
        std::cerr << "note: the full stream at dim " << dim
                  << " is large; classify is the compact form\n";
    *out << "{\n  \"format\": \"hwcoho/1\",\n  \"n\": " << dim << ",\n  \"matrices\": [";
    std::uint64_t count = 0;
    hwcoho::enumerate_hw(dim, [&](const hwcoho::HWMatrix& m) {
        if (count) *out << ",";
        *out << "\n    " << hwcoho::matrix_to_json(m, false).dump();
        ++count;
    });
    *out << "\n  ],\n  \"count\": " << count << "\n}\n";
    if (!*out) throw hwcoho::io_error("write failed");
    return 0;
}

int cmd_classify(int dim, const std::string& out_path, int jobs) {
    hwcoho::Catalog cat = hwcoho::classify(dim, jobs);
    emit(hwcoho::catalog_to_json(cat), out_path);
    return 0;
}

json factored_to_json(const hwcoho::QuadPoly& q, const hwcoho::LinForm& f1,
                      const hwcoho::LinForm& f2) {
    json j;
    j["quad"] = hwcoho::quad_to_json(q);
    j["factors"] = json::array({hwcoho::linform_to_json(f1), hwcoho::linform_to_json(f2)});
    j["s"] = hwcoho::linform_to_json(f1 + f2);
    return j;
}

int cmd_invariants(const std::string& in_path, const std::string& out_path) {
    hwcoho::HWMatrix a = matrix_from_file(in_path);
    hwcoho::TransBasis tb = hwcoho::transgression(a);
    hwcoho::FactorizableSet d = hwcoho::factorizable_set(tb);

    json j;
    j["format"] = hwcoho::kFormatTag;
    j["n"] = tb.n;
    j["m"] = tb.m;
    j["matrix"] = hwcoho::matrix_to_json(a, false);
    json basis = json::array();
    hwcoho::LinForm s_sum(tb.m, 0);
    for (const auto& t : tb.T) {
        basis.push_back(factored_to_json(t.quad, t.f1, t.f2));
        s_sum = s_sum + hwcoho::s_of(t);
    }
    j["T"] = std::move(basis);
    j["s_sum_zero"] = s_sum.is_zero();

    json elems = json::array();
    for (const auto& e : d.elems) {
        json ej = factored_to_json(e.quad, e.f1, e.f2);
        json subset = json::array();
        for (int i = 0; i < d.n; ++i)
            if ((e.subset >> i) & 1) subset.push_back(i + 1);
        ej["T_subset"] = std::move(subset);
        elems.push_back(std::move(ej));
    }
    j["D"] = json{{"size", d.elems.size()}, {"elements", std::move(elems)}};

    hwcoho::FactorGraph g = hwcoho::factor_graph(tb.T);
    json edges = json::array();
    for (auto [x, y] : g.edges) edges.push_back(json::array({x + 1, y + 1}));
    json comps = json::array();
    for (const auto& comp : g.components) {
        json c = json::array();
        for (int v : comp) c.push_back(v + 1);
        comps.push_back(std::move(c));
    }
    j["graph"] = json{{"edges", std::move(edges)}, {"components", std::move(comps)}};
    emit(j, out_path);
    return 0;
}

int cmd_canon(const std::string& in_path, const std::string& out_path) {
    hwcoho::HWMatrix a = matrix_from_file(in_path);
    emit(hwcoho::matrix_to_json(hwcoho::canonical_form(a)), out_path);
    return 0;
}

int cmd_scramble(const std::string& in_path, std::uint64_t seed, const std::string& out_path) {
    hwcoho::RingInvariant inv = invariant_from_file(in_path);
    hwcoho::F2Matrix g = hwcoho::gl_random(inv.m, seed);
    emit(hwcoho::invariant_to_json(hwcoho::scramble(inv, g)), out_path);
    return 0;
}

int cmd_reconstruct(const std::string& in_path, const std::string& out_path) {
    hwcoho::RingInvariant inv = invariant_from_file(in_path);
    hwcoho::HWMatrix rec = hwcoho::recover_matrix(hwcoho::recover_T_basis(inv));
    json j;
    j["format"] = hwcoho::kFormatTag;
    j["recovered"] = hwcoho::matrix_to_json(rec, false);
    j["canonical"] = hwcoho::matrix_to_json(hwcoho::canonical_form(rec), false);
    emit(j, out_path);
    return 0;
}

int cmd_rigidity(const std::string& a_path, const std::string& b_path,
                 const std::string& out_path) {
    hwcoho::RingInvariant a = invariant_from_file(a_path);
    hwcoho::RingInvariant b = invariant_from_file(b_path);
    if (a.m < 4 || b.m < 4) {
        std::cerr << "dimension 3 inputs are excluded from recovery: the classification "
                     "there has a single class, so rigidity holds trivially\n";
        return 2;
    }
    if (a.m != b.m) {
        emit(json{{"format", hwcoho::kFormatTag}, {"homeomorphic", false},
                  {"reason", "different dimensions"}},
             out_path);
        return 1;
    }
    hwcoho::HWMatrix ma = hwcoho::recover_matrix(hwcoho::recover_T_basis(a));
    hwcoho::HWMatrix mb = hwcoho::recover_matrix(hwcoho::recover_T_basis(b));
    hwcoho::HWMatrix ca = hwcoho::canonical_form(ma);
    hwcoho::HWMatrix cb = hwcoho::canonical_form(mb);
    bool equal = ca == cb;
    json j;
    j["format"] = hwcoho::kFormatTag;
    j["homeomorphic"] = equal;
    j["a_canonical"] = hwcoho::matrix_to_json(ca, false);
    j["b_canonical"] = hwcoho::matrix_to_json(cb, false);
    emit(j, out_path);
    return equal ? 0 : 1;
}

int cmd_verify(int dim, const std::string& suite, std::uint64_t seed, int jobs,
               const std::string& in_path, const std::string& out_path) {
    hwcoho::Catalog cat;
    if (!in_path.empty()) {
        cat = hwcoho::catalog_from_json(hwcoho::load_json_file(in_path));
        if (cat.n != dim) throw hwcoho::io_error("catalog dimension differs from --dim");
    } else {
        cat = hwcoho::classify(dim, jobs);
    }
    auto reports = hwcoho::run_suites(cat, suite, seed);
    bool all_pass = true;
    json suites = json::array();
    for (const auto& r : reports) {
        if (!r.pass()) all_pass = false;
        suites.push_back(hwcoho::report_to_json(r));
    }
    json j;
    j["format"] = hwcoho::kFormatTag;
    j["n"] = dim;
    j["seed"] = seed;
    j["class_count"] = cat.classes.size();
    j["suites"] = std::move(suites);
    j["pass"] = all_pass;
    emit(j, out_path);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix models of flat manifolds with diagonal Z2 holonomy: "
                 "enumeration, degree-2 cohomology invariants, and rigidity checks"};
    app.require_subcommand(1);

    int dim = 5;
    int jobs = 1;
    std::uint64_t seed = 0;
    std::string in_path, a_path, b_path, out_path;
    std::string suite = "all";

    auto add_dim = [&](CLI::App* c) {
        c->add_option("--dim", dim, "odd dimension, 3..9")->required();
    };
    auto add_out = [&](CLI::App* c) { c->add_option("--out", out_path, "output file (default stdout)"); };

    CLI::App* c_enum = app.add_subcommand("enumerate", "stream every valid matrix of a dimension");
    add_dim(c_enum);
    add_out(c_enum);

    CLI::App* c_cls = app.add_subcommand("classify", "catalog of equivalence classes");
    add_dim(c_cls);
    add_out(c_cls);
    c_cls->add_option("--jobs", jobs, "worker threads");

    CLI::App* c_inv = app.add_subcommand("invariants", "degree-2 invariant data of a matrix");
    c_inv->add_option("--in", in_path, "matrix or generators JSON")->required();
    add_out(c_inv);

    CLI::App* c_canon = app.add_subcommand("canon", "canonical form of a matrix");
    c_canon->add_option("--in", in_path, "matrix or generators JSON")->required();
    add_out(c_canon);

    CLI::App* c_scr = app.add_subcommand("scramble", "apply a seeded basis change to an invariant");
    c_scr->add_option("--in", in_path, "invariant (or matrix) JSON")->required();
    c_scr->add_option("--seed", seed, "basis-change seed");
    add_out(c_scr);

    CLI::App* c_rec = app.add_subcommand("reconstruct", "rebuild a matrix from an invariant");
    c_rec->add_option("--in", in_path, "invariant JSON")->required();
    add_out(c_rec);

    CLI::App* c_rig = app.add_subcommand("rigidity", "decide homeomorphism of two inputs");
    c_rig->add_option("--a", a_path, "first input")->required();
    c_rig->add_option("--b", b_path, "second input")->required();
    add_out(c_rig);

    CLI::App* c_ver = app.add_subcommand("verify", "run property suites over a dimension");
    add_dim(c_ver);
    c_ver->add_option("--suite", suite,
                      "suite name or 'all' (jmap sigma defect subrank lemmaB lemmaC cases "
                      "bridge orientation roundtrip separation)");
    c_ver->add_option("--seed", seed, "seed for scramble trials");
    c_ver->add_option("--jobs", jobs, "worker threads for classification");
    c_ver->add_option("--in", in_path, "reuse a catalog file instead of classifying");
    add_out(c_ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_enum)) return cmd_enumerate(dim, out_path);
        if (app.got_subcommand(c_cls)) return cmd_classify(dim, out_path, jobs);
        if (app.got_subcommand(c_inv)) return cmd_invariants(in_path, out_path);
        if (app.got_subcommand(c_canon)) return cmd_canon(in_path, out_path);
        if (app.got_subcommand(c_scr)) return cmd_scramble(in_path, seed, out_path);
        if (app.got_subcommand(c_rec)) return cmd_reconstruct(in_path, out_path);
        if (app.got_subcommand(c_rig)) return cmd_rigidity(a_path, b_path, out_path);
        if (app.got_subcommand(c_ver)) return cmd_verify(dim, suite, seed, jobs, in_path, out_path);
    } catch (const hwcoho::io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const hwcoho::validation_error& e) {
        std::cerr << "invalid matrix: " << e.what() << "\n";
        return 4;
    } catch (const hwcoho::reconstruct_error& e) {
        std::cerr << "invalid invariant: " << e.what() << "\n";
        return 4;
    } catch (const hwcoho::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
