#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "reasm/generators.hpp"
#include "reasm/json_io.hpp"
#include "reasm/ks_engine.hpp"
#include "reasm/layering.hpp"
#include "reasm/oracle.hpp"
#include "reasm/plane_graph.hpp"
#include "reasm/reassembly.hpp"

namespace {

using namespace reasm;

void write_or_print(const std::string& out, const std::string& text) {
    if (out.empty())
        std::cout << text;
    else
        save_text_file(out, text);
}

int cmd_decompose(const std::string& in, const std::string& out) {
    PlaneGraph g = build_plane_graph(load_graph_file(in));
    LayerDecomposition d = decompose(g);
    write_or_print(out, decomposition_to_json(d, g));
    return 0;
}

int cmd_ks(const std::string& in, const std::string& tree_path, const std::string& trace_path,
           const std::string& snapshots, bool lifted) {
    PlaneGraph g = build_plane_graph(load_graph_file(in));

    KsObserver observer = nullptr;
    int snap_idx = 0;
    if (!snapshots.empty()) {
        std::filesystem::create_directories(snapshots);
        observer = [&](const ContractionState& s, const KsTrace::Event& ev) {
            if (ev.kind != KsTrace::Event::Kind::round) return;
            char name[64];
            std::snprintf(name, sizeof(name), "/round_%03d.dot", ++snap_idx);
            save_text_file(snapshots + name, snapshot_to_dot(s, ev.collapse_round));
        };
    }
    KsResult res = lifted ? run_ks_lifted(g, observer) : run_ks(g, observer);
    AlphaReport rep = alpha_measure(g, res.tree);
    save_text_file(tree_path, tree_to_json(res.tree, rep.alpha));
    if (!trace_path.empty()) save_text_file(trace_path, trace_to_json(res.trace));
    std::cout << "alpha=" << rep.alpha << " k=" << res.k << " bound=" << 2 * res.k
              << (rep.alpha <= 2 * res.k ? " OK" : " VIOLATED") << "\n";
    return rep.alpha <= 2 * res.k ? 0 : 1;
}

int cmd_verify(const std::string& graph_path, const std::string& tree_path) {
    PlaneGraph g = build_plane_graph(load_graph_file(graph_path));
    ReassemblyTree t = tree_from_json(load_text_file(tree_path));
    auto vr = validate_tree(g, t);
    if (!vr.ok) {
        std::cout << "invalid tree";
        for (const auto& d : vr.diagnostics) std::cout << ": " << d;
        std::cout << "\n";
        return 1;
    }
    AlphaReport rep = alpha_measure(g, t);
    int k = decompose(g).k;
    bool ok = rep.alpha <= 2 * k;
    std::cout << "valid, alpha=" << rep.alpha << ", bound 2k=" << 2 * k << ": "
              << (ok ? "OK" : "VIOLATED") << "\n";
    return ok ? 0 : 1;
}

int cmd_oracle(const std::string& in, int max_n, const std::string& witness_path) {
    PlaneGraph g = build_plane_embedding(load_graph_file(in));
    OptimalAlphaResult res = optimal_alpha(g, max_n);
    std::cout << "alpha_opt=" << res.alpha_opt << " subsets=" << res.subset_count << "\n";
    if (!witness_path.empty()) save_text_file(witness_path, tree_to_json(res.witness, res.alpha_opt));
    return 0;
}

int cmd_gen(const std::string& family, int k, int f, int c, const std::string& out) {
    RawGraph raw;
    if (family == "hfk") {
        HFamilyParams p;
        p.k = k;
        p.f_of_k = f;
        HGraph h = gen_hfk(p);
        raw.coords = h.graph.coords();
        raw.edges = h.graph.edges();
    } else if (family == "constant") {
        HGraph h = gen_constant_density(k, c);
        raw.coords = h.graph.coords();
        raw.edges = h.graph.edges();
    } else if (family.rfind("corpus:", 0) == 0) {
        std::string name = family.substr(7);
        if (name == "fig-4reg-12v") {
            raw = fig_4reg_12v();
        } else {
            const CorpusEntry& e = corpus_entry(name);
            raw.coords = e.graph.coords();
            raw.edges = e.graph.edges();
        }
    } else {
        throw BadParams("unknown family: " + family);
    }
    write_or_print(out, graph_to_json(raw));
    return 0;
}

int cmd_convert(const std::string& to, const std::string& in, const std::string& out) {
    if (to == "carving") {
        ReassemblyTree t = tree_from_json(load_text_file(in));
        write_or_print(out, carving_to_json(tree_to_carving(t)));
    } else if (to == "tree") {
        RoutingTree T = carving_from_json(load_text_file(in));
        auto trees = carving_to_trees(T);
        // Deterministic choice: the re-rooting at the first branch.
        write_or_print(out, tree_to_json(trees.at(0)));
    } else {
        throw BadParams("convert target must be carving or tree");
    }
    return 0;
}

int cmd_expand(const std::string& in, const std::string& out) {
    PlaneGraph g = build_plane_embedding(load_graph_file(in));
    ExpandResult res = expand_to_three_regular(g);
    RawGraph raw;
    raw.coords = res.graph.coords();
    raw.edges = res.graph.edges();
    write_or_print(out, graph_to_json(raw));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reassembling of 3-regular plane graphs"};
    app.require_subcommand(1);

    std::string in, out, tree_path, trace_path, snapshots, graph_path, to, family, witness;
    int max_n = 16, k = 4, f = 7, c = 3;
    bool lifted = false;

    auto* dec = app.add_subcommand("decompose", "peel edge layers");
    dec->add_option("input", in)->required();
    dec->add_option("--out", out);

    auto* ks = app.add_subcommand("ks", "run the reassembling algorithm");
    ks->add_option("input", in)->required();
    ks->add_option("--tree", tree_path)->required();
    ks->add_option("--trace", trace_path);
    ks->add_option("--snapshots", snapshots);
    ks->add_flag("--lifted", lifted);

    auto* ver = app.add_subcommand("verify", "check a tree against its graph");
    ver->add_option("graph", graph_path)->required();
    ver->add_option("tree", tree_path)->required();

    auto* orc = app.add_subcommand("oracle", "exact optimum by subset DP");
    orc->add_option("input", in)->required();
    orc->add_option("--max-n", max_n);
    orc->add_option("--witness", witness);

    auto* gen = app.add_subcommand("gen", "generate instance graphs");
    gen->add_option("--family", family)->required();
    gen->add_option("--k", k);
    gen->add_option("--f", f);
    gen->add_option("--c", c);
    gen->add_option("--out", out)->required();

    auto* conv = app.add_subcommand("convert", "tree <-> carving");
    conv->add_option("--to", to)->required();
    conv->add_option("input", in)->required();
    conv->add_option("--out", out)->required();

    auto* exp = app.add_subcommand("expand", "vertex expansion to 3-regular");
    exp->add_option("input", in)->required();
    exp->add_option("--out", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) return cmd_decompose(in, out);
        if (ks->parsed()) return cmd_ks(in, tree_path, trace_path, snapshots, lifted);
        if (ver->parsed()) return cmd_verify(graph_path, tree_path);
        if (orc->parsed()) return cmd_oracle(in, max_n, witness);
        if (gen->parsed()) return cmd_gen(family, k, f, c, out);
        if (conv->parsed()) return cmd_convert(to, in, out);
        if (exp->parsed()) return cmd_expand(in, out);
    } catch (const reasm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
