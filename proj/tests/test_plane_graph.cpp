#include "doctest.h"

#include <algorithm>
#include <set>

#include "reasm/generators.hpp"
#include "reasm/json_io.hpp"
#include "reasm/multigraph.hpp"
#include "reasm/plane_graph.hpp"

using namespace reasm;

TEST_CASE("cube builds as a 3-regular simple plane graph") {
    PlaneGraph g = build_plane_graph(cube_raw());
    CHECK(g.n() == 8);
    CHECK(g.m() == 12);
    for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 3);
    CHECK(validate_planar_drawing(cube_raw()));
}

TEST_CASE("path rejects as not 3-regular") {
    RawGraph raw;
    raw.coords = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    raw.edges = {{0, 1}, {1, 2}, {2, 3}};
    CHECK_THROWS_AS(build_plane_graph(raw), NotThreeRegular);
}

TEST_CASE("duplicate edge rejects as not simple") {
    RawGraph raw = cube_raw();
    raw.edges.push_back({0, 1});
    CHECK_THROWS_AS(build_plane_graph(raw), NotSimple);
}

TEST_CASE("coincident neighbor directions reject") {
    RawGraph raw;
    raw.coords = {{0, 0}, {1, 0}, {2, 0}};
    raw.edges = {{0, 1}, {0, 2}};
    CHECK_THROWS_AS(build_plane_embedding(raw), DegenerateEmbedding);
}

TEST_CASE("ring order is clockwise from up") {
    PlaneGraph g = build_plane_graph(cube_raw());
    // Vertex 3 = (0,6): edges toward (6,6) [east], (2,4) [se spoke], (0,0) [south].
    const auto& ring = g.ring(3);
    REQUIRE(ring.size() == 3);
    CHECK(g.other(ring[0], 3) == 2);
    CHECK(g.other(ring[1], 3) == 7);
    CHECK(g.other(ring[2], 3) == 0);
}

TEST_CASE("outer face walk of the cube is the outer square") {
    PlaneGraph g = build_plane_graph(cube_raw());
    PlaneMultigraph mg(g);
    FaceWalk w = mg.outer_face_walk();
    CHECK(w.length() == 4);
    std::set<VertexId> visited;
    for (Dart d : w.darts) visited.insert(mg.dart_origin(d));
    CHECK(visited == std::set<VertexId>{0, 1, 2, 3});
    for (auto [e, side] : classify_walk_edges(w)) CHECK(side == EdgeSide::bounding);
}

TEST_CASE("outer face walk of a triangle has length 3") {
    RawGraph raw;
    raw.coords = {{0, 0}, {2, 0}, {1, 2}};
    raw.edges = {{0, 1}, {1, 2}, {2, 0}};
    PlaneMultigraph mg{build_plane_embedding(raw)};
    CHECK(mg.outer_face_walk().length() == 3);
}

TEST_CASE("outer walk of the pendant figure traverses outer pendants twice") {
    PlaneGraph g = build_plane_embedding(fig_nonregular_20v());
    CHECK(validate_planar_drawing(fig_nonregular_20v()));
    PlaneMultigraph mg(g);
    FaceWalk w = mg.outer_face_walk();
    auto cls = classify_walk_edges(w);
    // Pendant edges on the unbounded face: A-C, B-E, P-S, R-T.
    int pendant_twice = 0;
    for (auto [e, side] : cls) {
        auto [u, v] = g.edge(e);
        bool pendant = g.degree(u) == 1 || g.degree(v) == 1;
        if (pendant) {
            CHECK(side == EdgeSide::non_bounding);
            ++pendant_twice;
        }
    }
    CHECK(pendant_twice == 4);

    // All six pendant edges are non-bounding on some face; every pendant edge
    // that appears in any face walk appears twice there.
    std::set<EdgeId> nb;
    std::set<Dart> seen;
    for (VertexId v = 0; v < mg.id_count(); ++v)
        for (Dart d : mg.ring_of(v)) {
            if (seen.count(d)) continue;
            FaceWalk fw = mg.trace_face(d);
            for (Dart x : fw.darts) seen.insert(x);
            for (auto [e, side] : classify_walk_edges(fw))
                if (side == EdgeSide::non_bounding) nb.insert(e);
        }
    int pendants = 0;
    for (EdgeId e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        if (g.degree(u) == 1 || g.degree(v) == 1) {
            ++pendants;
            CHECK(nb.count(e) == 1);
        }
    }
    CHECK(pendants == 6);
}

TEST_CASE("euler consistency and ring length sums") {
    for (const auto& raw : {cube_raw(), fig_3reg_30v(), gadget_18v()}) {
        PlaneGraph g = build_plane_graph(raw);
        CHECK(validate_planar_drawing(raw));
        PlaneMultigraph mg(g);
        CHECK(euler_consistent(mg));
        int ring_total = 0;
        for (VertexId v = 0; v < mg.id_count(); ++v)
            ring_total += static_cast<int>(mg.ring_of(v).size());
        CHECK(ring_total == 2 * g.m());
    }
}

TEST_CASE("contracting one cube spoke gives a degree-4 super vertex") {
    PlaneGraph g = build_plane_graph(cube_raw());
    PlaneMultigraph mg(g);
    // Spoke 0-4 is edge 8 in cube_raw.
    VertexId s = mg.contract_edges({8});
    CHECK(mg.live_vertex_count() == 7);
    CHECK(mg.kind(s) == VertexKind::super);
    CHECK(mg.degree(s) == 4);
    CHECK(mg.bag(s) == std::vector<VertexId>{0, 4});
    CHECK(euler_consistent(mg));
}

TEST_CASE("contracting a whole triangle component isolates a super vertex") {
    RawGraph raw;
    raw.coords = {{0, 0}, {2, 0}, {1, 2}, {10, 0}, {12, 0}, {11, 2}};
    raw.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    PlaneMultigraph mg{build_plane_embedding(raw)};
    VertexId s = mg.contract_edges({0, 1, 2});
    CHECK(mg.degree(s) == 0);
    CHECK(mg.bag(s).size() == 3);
}

TEST_CASE("contraction of a disconnected edge set rejects") {
    PlaneGraph g = build_plane_graph(cube_raw());
    PlaneMultigraph mg(g);
    // Spokes 0-4 and 2-6 share no endpoint.
    CHECK_THROWS_AS(mg.contract_edges({8, 10}), DisconnectedContraction);
}

TEST_CASE("subtended cycle edges surface as self-loops") {
    // 6-cycle with a 2-edge path hanging between adjacent cycle vertices.
    RawGraph raw;
    raw.coords = {{0, 4}, {3, 2}, {3, -2}, {0, -4}, {-3, -2}, {-3, 2}, {0, 2.5}};
    raw.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 1}};
    PlaneMultigraph mg{build_plane_embedding(raw)};
    VertexId s = mg.contract_edges({6, 7});
    int loops = 0;
    for (EdgeId e = 0; e < mg.edge_count(); ++e)
        if (mg.edge_alive(e) && mg.is_loop(e)) ++loops;
    CHECK(loops == 1);
    CHECK(mg.degree(s) == 2);  // loop excluded from the degree
    CHECK(euler_consistent(mg));
}

TEST_CASE("bag union over contractions preserves the vertex multiset") {
    PlaneGraph g = build_plane_graph(cube_raw());
    PlaneMultigraph mg(g);
    mg.contract_edges({0, 1, 2, 3});  // outer square
    std::vector<int> seen(g.n(), 0);
    for (VertexId v = 0; v < mg.id_count(); ++v) {
        if (!mg.vertex_alive(v)) continue;
        for (VertexId o : mg.bag(v)) seen[o]++;
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

TEST_CASE("bridge finding on the 30-vertex figure") {
    PlaneGraph g = build_plane_graph(fig_3reg_30v());
    auto bridges = find_bridges(g);
    CHECK(bridges.size() == 4);
    CHECK(is_connected(g));
    CHECK(!is_biconnected(g));
    CHECK(is_biconnected(build_plane_graph(cube_raw())));
}

TEST_CASE("dot export pins positions") {
    std::string dot = graph_to_dot(cube_raw());
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("pos=\"0,0!\"") != std::string::npos);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
}

TEST_CASE("edgeless walks and empty contractions reject") {
    RawGraph raw;
    raw.coords = {{0, 0}, {1, 0}};
    PlaneMultigraph mg{build_plane_embedding(raw)};
    CHECK_THROWS_AS(mg.outer_face_walk(), NoEdges);
    CHECK_THROWS_AS(mg.contract_edges({}), DisconnectedContraction);
}

TEST_CASE("biconnected graphs have no non-bounding edges on any face") {
    for (const char* name : {"cube", "hfk-4-7", "gadget-18v", "gadget-16v"}) {
        const PlaneGraph& g = corpus_entry(name).graph;
        if (!is_biconnected(g)) continue;
        PlaneMultigraph mg(g);
        std::set<Dart> seen;
        for (VertexId v = 0; v < mg.id_count(); ++v)
            for (Dart d : mg.ring_of(v)) {
                if (seen.count(d)) continue;
                FaceWalk w = mg.trace_face(d);
                for (Dart x : w.darts) seen.insert(x);
                for (auto [e, side] : classify_walk_edges(w))
                    CHECK(side == EdgeSide::bounding);
            }
    }
}
