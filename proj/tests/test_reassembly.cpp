#include "doctest.h"

#include <random>

#include "reasm/generators.hpp"
#include "reasm/ks_engine.hpp"
#include "reasm/reassembly.hpp"
#include "tree_gen.hpp"

using namespace reasm;
using reasm::testing::make_adversarial_tree;

TEST_CASE("validate and measure the cube run") {
    PlaneGraph g = build_plane_graph(cube_raw());
    KsResult res = run_ks(g);
    auto vr = validate_tree(g, res.tree);
    CHECK(vr.ok);
    AlphaReport rep = alpha_measure(g, res.tree);
    CHECK(rep.alpha == 4);
    // Leaves have boundary 3, the root 0.
    ReassemblyTree t = res.tree.postorder();
    for (int i = 0; i < t.node_count(); ++i)
        if (t.is_leaf(i)) CHECK(rep.per_node_boundary[i] == 3);
    CHECK(rep.per_node_boundary[t.root] == 0);
}

TEST_CASE("missing leaf is diagnosed") {
    PlaneGraph g = build_plane_graph(cube_raw());
    KsResult res = run_ks(g);
    ReassemblyTree t = res.tree;
    for (auto& nd : t.nodes)
        if (nd.leaf == 3) nd.leaf = 4;  // duplicate 4, drop 3
    auto vr = validate_tree(g, t);
    CHECK(!vr.ok);
    REQUIRE(!vr.diagnostics.empty());
    CHECK(vr.diagnostics[0].find("leaf") != std::string::npos);
    CHECK_THROWS_AS(alpha_measure(g, t), InvalidTree);
}

TEST_CASE("single vertex graph validates a single-node tree") {
    RawGraph raw;
    raw.coords = {{0, 0}};
    PlaneGraph g = build_plane_embedding(raw);
    ReassemblyTree t;
    t.nodes.emplace_back();
    t.nodes[0].leaf = 0;
    t.root = 0;
    CHECK(validate_tree(g, t).ok);
}

TEST_CASE("carving conversion round trip on the cube") {
    PlaneGraph g = build_plane_graph(cube_raw());
    KsResult res = run_ks(g);
    RoutingTree T = tree_to_carving(res.tree);
    CHECK(T.n == 8);
    CHECK(T.branches.size() == 13);
    CHECK(T.node_count() == 14);  // 8 leaves + 6 internal

    auto trees = carving_to_trees(T);
    CHECK(trees.size() == 13);
    bool found = false;
    for (const auto& t2 : trees) {
        CHECK(validate_tree(g, t2).ok);
        if (same_cluster_family(t2, res.tree)) found = true;
    }
    CHECK(found);

    int w = carving_width(g, T);
    for (const auto& t2 : trees) CHECK(w <= alpha_measure(g, t2).alpha);
    CHECK(w <= alpha_measure(g, res.tree).alpha);
}

TEST_CASE("carving of a two-leaf tree is rejected below n=2") {
    RawGraph raw;
    raw.coords = {{0, 0}};
    ReassemblyTree t;
    t.nodes.emplace_back();
    t.nodes[0].leaf = 0;
    t.root = 0;
    CHECK_THROWS_AS(tree_to_carving(t), TooSmall);
}

TEST_CASE("normalization removes forced zero merges without raising alpha") {
    PlaneGraph g = build_plane_graph(cube_raw());
    std::mt19937 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        ReassemblyTree bad = make_adversarial_tree(g, rng);
        REQUIRE(validate_tree(g, bad).ok);
        int zeros = count_zero_merges(g, bad);
        if (rep < 40) CHECK(zeros > 0);  // the construction forces them
        int alpha_in = alpha_measure(g, bad).alpha;
        ReassemblyTree fixed = normalize_no_zero_merges(g, bad);
        CHECK(validate_tree(g, fixed).ok);
        CHECK(count_zero_merges(g, fixed) == 0);
        CHECK(alpha_measure(g, fixed).alpha <= alpha_in);
    }
}

TEST_CASE("normalization is a fixpoint on engine output") {
    PlaneGraph g = build_plane_graph(cube_raw());
    KsResult res = run_ks(g);
    CHECK(count_zero_merges(g, res.tree) == 0);
    ReassemblyTree t = normalize_no_zero_merges(g, res.tree);
    CHECK(same_cluster_family(t, res.tree));
}

TEST_CASE("two-vertex graph normalizes unchanged") {
    RawGraph raw;
    raw.coords = {{0, 0}, {1, 0}};
    raw.edges = {{0, 1}};
    PlaneGraph g = build_plane_embedding(raw);
    ReassemblyTree t;
    t.nodes.resize(3);
    t.nodes[0].leaf = 0;
    t.nodes[1].leaf = 1;
    t.nodes[2].left = 0;
    t.nodes[2].right = 1;
    t.nodes[0].parent = t.nodes[1].parent = 2;
    t.root = 2;
    ReassemblyTree out = normalize_no_zero_merges(g, t);
    CHECK(same_cluster_family(out, t));
}

TEST_CASE("explicit antipodal-first tree on the cube") {
    PlaneGraph g = build_plane_graph(cube_raw());
    // Merge the antipodal pair {0, 6} first (no connecting edge), then attach
    // the rest in a comb.
    ReassemblyTree t;
    auto leaf = [&](VertexId v) {
        t.nodes.emplace_back();
        t.nodes.back().leaf = v;
        return static_cast<int>(t.nodes.size()) - 1;
    };
    auto join = [&](int a, int b) {
        t.nodes.emplace_back();
        int p = static_cast<int>(t.nodes.size()) - 1;
        t.nodes[p].left = a;
        t.nodes[p].right = b;
        t.nodes[a].parent = p;
        t.nodes[b].parent = p;
        return p;
    };
    int acc = join(leaf(0), leaf(6));
    for (VertexId v : {1, 2, 3, 4, 5, 7}) acc = join(acc, leaf(v));
    t.root = acc;
    REQUIRE(validate_tree(g, t).ok);
    CHECK(count_zero_merges(g, t) == 1);
    int alpha_in = alpha_measure(g, t).alpha;
    ReassemblyTree fixed = normalize_no_zero_merges(g, t);
    CHECK(count_zero_merges(g, fixed) == 0);
    CHECK(alpha_measure(g, fixed).alpha <= alpha_in);
}

TEST_CASE("normalization requires a connected graph") {
    RawGraph raw;
    raw.coords = {{0, 0}, {2, 0}, {1, 2}, {10, 0}, {12, 0}, {11, 2}};
    raw.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    PlaneGraph g = build_plane_embedding(raw);
    std::mt19937 rng(3);
    ReassemblyTree t = reasm::testing::make_random_tree(g.n(), rng);
    CHECK_THROWS_AS(normalize_no_zero_merges(g, t), Disconnected);
}

TEST_CASE("carving round trip preserves a cluster family across the corpus") {
    for (const auto& entry : load_corpus()) {
        KsResult res = is_biconnected(entry.graph) ? run_ks(entry.graph)
                                                   : run_ks_lifted(entry.graph);
        RoutingTree T = tree_to_carving(res.tree);
        CHECK(static_cast<int>(T.branches.size()) == 2 * entry.graph.n() - 3);
        bool found = false;
        for (const auto& t : carving_to_trees(T))
            if (same_cluster_family(t, res.tree)) found = true;
        CHECK(found);
        CHECK(carving_width(entry.graph, T) <= alpha_measure(entry.graph, res.tree).alpha);
    }
}

TEST_CASE("normalization takes at most n-1 repair steps on the corpus") {
    std::mt19937 rng(424242);
    for (const auto& entry : load_corpus()) {
        for (int i = 0; i < 25; ++i) {
            ReassemblyTree bad = reasm::testing::make_adversarial_tree(entry.graph, rng);
            int zeros_in = count_zero_merges(entry.graph, bad);
            int iters = 0;
            normalize_no_zero_merges(entry.graph, bad, &iters);
            CHECK(iters <= entry.graph.n() - 1);
            CHECK(iters >= (zeros_in > 0 ? 1 : 0));
        }
    }
}

TEST_CASE("a left comb converts to a path-shaped routing tree") {
    PlaneGraph g = build_plane_graph(cube_raw());
    ReassemblyTree comb;
    auto leaf = [&](int v) {
        comb.nodes.emplace_back();
        comb.nodes.back().leaf = v;
        return static_cast<int>(comb.nodes.size()) - 1;
    };
    int acc = leaf(0);
    for (int v = 1; v < 8; ++v) {
        int l = leaf(v);
        comb.nodes.emplace_back();
        int p = static_cast<int>(comb.nodes.size()) - 1;
        comb.nodes[p].left = acc;
        comb.nodes[p].right = l;
        comb.nodes[acc].parent = p;
        comb.nodes[l].parent = p;
        acc = p;
    }
    comb.root = acc;
    RoutingTree T = tree_to_carving(comb);
    // Internal nodes form a path: exactly two of them touch one other
    // internal node, the rest touch two.
    std::vector<int> internal_deg(T.node_count(), 0);
    for (auto [a, b] : T.branches)
        if (a >= T.n && b >= T.n) {
            internal_deg[a]++;
            internal_deg[b]++;
        }
    int ends = 0, mids = 0;
    for (int x = T.n; x < T.node_count(); ++x)
        (internal_deg[x] == 1 ? ends : mids)++;
    CHECK(ends == 2);
    CHECK(mids == T.n - 4);
}

TEST_CASE("round-one collapses respect the leaf-degree bounds") {
    for (const auto& entry : load_corpus()) {
        if (!is_biconnected(entry.graph)) continue;
        ContractionState s = make_initial_state(entry.graph);
        for (const auto& el : collapse_eligible(s)) {
            int max_leaf_deg = 0;
            for (VertexId w : el.consecutive_run)
                max_leaf_deg = std::max(max_leaf_deg, s.mg.degree(w));
            if (el.root >= 0) max_leaf_deg = std::max(max_leaf_deg, s.mg.degree(el.root));
            auto [super, edges] = collapse_tree(s, el);
            int cap = el.type_a ? max_leaf_deg : max_leaf_deg + 2;
            CHECK(s.mg.degree(super) <= cap);
        }
    }
}
