#include "doctest.h"

#include <set>

#include "reasm/generators.hpp"
#include "reasm/layering.hpp"

using namespace reasm;

namespace {

int count_edges(const LayerDecomposition& d) {
    int total = 0;
    for (const auto& l : d.layers)
        total += static_cast<int>(l.cycle_edges.size() + l.ict_edges.size());
    return total;
}

}  // namespace

TEST_CASE("cube decomposes into two layers") {
    PlaneGraph g = build_plane_graph(cube_raw());
    LayerDecomposition d = decompose(g);
    CHECK(d.k == 2);
    REQUIRE(d.layers.size() == 2);
    CHECK(d.layers[0].cycle_edges == std::vector<EdgeId>{0, 1, 2, 3});
    CHECK(d.layers[0].ict_edges.empty());  // biconnected: M_0 empty
    CHECK(d.layers[1].cycle_edges == std::vector<EdgeId>{4, 5, 6, 7});
    CHECK(d.layers[1].ict_edges == std::vector<EdgeId>{8, 9, 10, 11});
    CHECK(d.cycles.size() == 2);
    CHECK(d.icts.size() == 4);
    for (const auto& t : d.icts) CHECK(t.level == 1);
    CHECK(cacti_check(d, g));
    CHECK(edge_outerplanarity(g) == 2);
    // Outer-square vertices are inward, inner-square outward.
    for (int v = 0; v < 4; ++v) CHECK(d.vertex_class[v] == VClass::inward);
    for (int v = 4; v < 8; ++v) CHECK(d.vertex_class[v] == VClass::outward);
}

TEST_CASE("30-vertex figure: k=4, 6 cycles, 11 trees") {
    PlaneGraph g = build_plane_graph(fig_3reg_30v());
    LayerDecomposition d = decompose(g);
    CHECK(d.k == 4);
    CHECK(d.cycles.size() == 6);
    CHECK(d.icts.size() == 11);
    CHECK(count_edges(d) == g.m());
    CHECK(cacti_check(d, g));
    // The single level-0 tree is the three-bridge star.
    int level0 = 0;
    for (const auto& t : d.icts)
        if (t.level == 0) {
            ++level0;
            CHECK(t.edges.size() == 3);
        }
    CHECK(level0 == 1);
}

TEST_CASE("gadget 18v: k=3, 2 cycles, 6 trees") {
    PlaneGraph g = build_plane_graph(gadget_18v());
    LayerDecomposition d = decompose(g);
    CHECK(d.k == 3);
    CHECK(d.cycles.size() == 2);
    CHECK(d.icts.size() == 6);
    int single = 0, multi = 0;
    for (const auto& t : d.icts) (t.edges.size() == 1 ? single : multi)++;
    CHECK(single == 4);
    CHECK(multi == 2);
    CHECK(cacti_check(d, g));
}

TEST_CASE("H family outerplanarity equals k") {
    CHECK(edge_outerplanarity(gen_hfk({4, 7}).graph) == 4);
    CHECK(edge_outerplanarity(gen_hfk({2, 4}).graph) == 2);
    CHECK(edge_outerplanarity(gen_hfk({5, 3}).graph) == 5);
    CHECK(edge_outerplanarity(gen_hfk({3, 12}).graph) == 3);
}

TEST_CASE("empty graph has outerplanarity zero") {
    RawGraph raw;
    raw.coords = {{0, 0}, {1, 0}, {2, 5}};
    PlaneGraph g = build_plane_embedding(raw);
    LayerDecomposition d = decompose(g);
    CHECK(d.k == 0);
    CHECK(d.layers.empty());
    CHECK(cacti_check(d, g));
}

TEST_CASE("disconnected input rejects") {
    RawGraph raw;
    raw.coords = {{0, 0}, {2, 0}, {1, 2}, {10, 0}, {12, 0}, {11, 2}};
    raw.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    CHECK_THROWS_AS(decompose(build_plane_embedding(raw)), Disconnected);
}

TEST_CASE("vertex outerplanarity bounds") {
    LayerDecomposition d;
    d.k = 4;
    CHECK(vertex_outerplanarity_bounds(d) == std::pair<int, int>{3, 4});
    d.k = 2;
    CHECK(vertex_outerplanarity_bounds(d) == std::pair<int, int>{1, 2});
    d.k = 0;
    CHECK(vertex_outerplanarity_bounds(d) == std::pair<int, int>{0, 0});
}

TEST_CASE("cacti check rejects a forced violation") {
    PlaneGraph g = build_plane_graph(cube_raw());
    LayerDecomposition d = decompose(g);
    // Move one inner-cycle edge into the tree bucket.
    EdgeId moved = d.layers[1].cycle_edges.back();
    d.layers[1].cycle_edges.pop_back();
    d.layers[1].ict_edges.push_back(moved);
    CHECK(!cacti_check(d, g));
}

TEST_CASE("layer partition and telescoping on the corpus") {
    for (const auto& entry : load_corpus()) {
        LayerDecomposition d = decompose(entry.graph);
        CHECK(d.k == entry.expected.k);
        CHECK(static_cast<int>(d.cycles.size()) == entry.expected.cycles);
        CHECK(static_cast<int>(d.icts.size()) == entry.expected.icts);
        CHECK(count_edges(d) == entry.graph.m());
        CHECK(cacti_check(d, entry.graph));

        // Telescoping: dropping the first i layers leaves outerplanarity k - i.
        for (int i = 1; i < d.k; ++i) {
            std::set<EdgeId> dropped;
            for (int l = 0; l < i; ++l) {
                dropped.insert(d.layers[l].cycle_edges.begin(), d.layers[l].cycle_edges.end());
                dropped.insert(d.layers[l].ict_edges.begin(), d.layers[l].ict_edges.end());
            }
            PlaneMultigraph mg(entry.graph);
            std::vector<VertexId> all(entry.graph.n());
            for (int v = 0; v < entry.graph.n(); ++v) all[v] = v;
            auto ed = engine_decompose(mg, all,
                                       [&](EdgeId e) { return !dropped.count(e); });
            CHECK(ed.k == d.k - i);
        }

        // Vertex trichotomy: every vertex is on exactly one cycle or is an
        // internal tree vertex; cycle vertices carry a class.
        std::vector<int> role(entry.graph.n(), 0);
        for (const auto& c : d.cycles)
            for (auto [v, e] : c.ring) role[v] += 1;
        for (const auto& t : d.icts)
            for (VertexId v : t.internal) role[v] += 10;
        for (int v = 0; v < entry.graph.n(); ++v) {
            bool on_cycle = role[v] == 1;
            bool internal = role[v] == 10;
            CHECK((on_cycle || internal));
            if (on_cycle) CHECK(d.vertex_class[v] != VClass::none);
        }
    }
}

TEST_CASE("biconnected corpus levels span 1..k-1 with multiplicity") {
    for (const auto& entry : load_corpus()) {
        if (!is_biconnected(entry.graph)) continue;
        LayerDecomposition d = decompose(entry.graph);
        CHECK(d.layers[0].ict_edges.empty());
        std::map<int, int> per_level;
        for (const auto& t : d.icts) per_level[t.level]++;
        for (int lev = 1; lev <= d.k - 1; ++lev) CHECK(per_level[lev] >= 1);
        for (int lev = 1; lev <= d.k - 2; ++lev) CHECK(per_level[lev] >= 2);
    }
}
