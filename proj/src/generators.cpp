#include "reasm/generators.hpp"

#include <cmath>
#include <map>

namespace reasm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Clockwise angular slot of inter-cycle edge e_{i,j}: consecutive levels are
// phase-shifted by half a slot so the drawing stays planar and the slot order
// around every cycle alternates y, x, y, x.
double ice_theta(int i, int j, int f) { return 2.0 * kPi * (j - 1 + 0.5 * (i - 1)) / f; }

Point ring_point(double radius, double theta_cw) {
    // theta grows clockwise starting at the top.
    return {radius * std::sin(theta_cw), radius * std::cos(theta_cw)};
}

}  // namespace

std::vector<VertexId> HGraph::cycle_ring(int level) const {
    std::vector<VertexId> out;
    if (level == 0) {
        for (int j = 1; j <= f; ++j) out.push_back(x(1, j));
    } else if (level == k - 1) {
        for (int j = 1; j <= f; ++j) out.push_back(y(k - 1, j));
    } else {
        for (int j = 1; j <= f; ++j) {
            out.push_back(y(level, j));
            out.push_back(x(level + 1, j));
        }
    }
    return out;
}

HGraph gen_hfk(const HFamilyParams& p) {
    if (p.k < 2) throw BadParams("k must be >= 2");
    if (p.f_of_k < 3) throw BadParams("f(k) must be >= 3");
    const int k = p.k, f = p.f_of_k;

    HGraph h;
    h.k = k;
    h.f = f;
    h.xs.assign(k - 1, std::vector<VertexId>(f, -1));
    h.ys.assign(k - 1, std::vector<VertexId>(f, -1));

    RawGraph raw;
    auto radius = [&](int level) { return 2.0 * (k + 1 - level); };
    auto add_vertex = [&](double r, double theta) {
        raw.coords.push_back(ring_point(r, theta));
        return static_cast<VertexId>(raw.coords.size() - 1);
    };

    // C_0 hosts x(1,j); middle C_i hosts y(i,j) and x(i+1,j); C_{k-1} hosts y(k-1,j).
    for (int j = 1; j <= f; ++j) h.xs[0][j - 1] = add_vertex(radius(0), ice_theta(1, j, f));
    for (int i = 1; i <= k - 2; ++i) {
        for (int j = 1; j <= f; ++j) {
            h.ys[i - 1][j - 1] = add_vertex(radius(i), ice_theta(i, j, f));
            h.xs[i][j - 1] = add_vertex(radius(i), ice_theta(i + 1, j, f));
        }
    }
    for (int j = 1; j <= f; ++j)
        h.ys[k - 2][j - 1] = add_vertex(radius(k - 1), ice_theta(k - 1, j, f));

    auto wrap = [&](int j) { return j == f ? 1 : j + 1; };
    // Cycle edges.
    for (int j = 1; j <= f; ++j) raw.edges.push_back({h.x(1, j), h.x(1, wrap(j))});
    for (int i = 1; i <= k - 2; ++i)
        for (int j = 1; j <= f; ++j) {
            raw.edges.push_back({h.y(i, j), h.x(i + 1, j)});
            raw.edges.push_back({h.x(i + 1, j), h.y(i, wrap(j))});
        }
    for (int j = 1; j <= f; ++j) raw.edges.push_back({h.y(k - 1, j), h.y(k - 1, wrap(j))});
    // Inter-cycle edges.
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= f; ++j) raw.edges.push_back({h.x(i, j), h.y(i, j)});

    h.graph = build_plane_graph(raw);
    return h;
}

HGraph gen_constant_density(int k, int c) {
    if (c < 3) throw BadParams("c must be >= 3");
    HFamilyParams p;
    p.k = k;
    p.f_of_k = c;
    return gen_hfk(p);
}

std::vector<VertexId> inside_out_order(const HGraph& h) {
    std::vector<VertexId> order;
    for (int j = 1; j <= h.f; ++j) order.push_back(h.y(h.k - 1, j));
    for (int i = h.k - 2; i >= 1; --i) {
        for (int j = 1; j <= h.f; ++j) {
            order.push_back(h.x(i + 1, j));
            if (j < h.f)
                order.push_back(h.y(i, j + 1));
            else
                order.push_back(h.y(i, 1));
        }
    }
    for (int j = 1; j <= h.f; ++j) order.push_back(h.x(1, j));
    return order;
}

ReassemblyTree inside_out_reassemble(const HGraph& h) {
    if (h.k < 2 || h.f < 3 || h.graph.n() != 2 * (h.k - 1) * h.f)
        throw WrongFamily("inside_out_reassemble needs an H-family labeling");
    std::vector<VertexId> order = inside_out_order(h);
    ReassemblyTree t;
    // Left comb: {{...{{a1,a2},a3}...}, a_last}.
    std::vector<int> leaf_node(h.graph.n(), -1);
    auto add_leaf = [&](VertexId v) {
        t.nodes.emplace_back();
        t.nodes.back().leaf = v;
        return static_cast<int>(t.nodes.size()) - 1;
    };
    int acc = add_leaf(order[0]);
    for (size_t i = 1; i < order.size(); ++i) {
        int leaf = add_leaf(order[i]);
        t.nodes.emplace_back();
        int join = static_cast<int>(t.nodes.size()) - 1;
        t.nodes[join].left = acc;
        t.nodes[join].right = leaf;
        t.nodes[acc].parent = join;
        t.nodes[leaf].parent = join;
        acc = join;
    }
    t.root = acc;
    return t.postorder();
}

ExpandResult expand_to_three_regular(const PlaneGraph& g, bool allow_stubs) {
    if (!allow_stubs)
        for (VertexId v = 0; v < g.n(); ++v)
            if (g.degree(v) <= 2) throw DegreeTooLow("expansion requires degrees >= 3");

    RawGraph raw;
    ExpandResult res;
    res.cycle_of.resize(g.n());

    // Replacement-vertex radius: small enough to stay clear of everything.
    double min_len = 1e300;
    for (EdgeId e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        double dx = g.coord(u).x - g.coord(v).x, dy = g.coord(u).y - g.coord(v).y;
        min_len = std::min(min_len, std::hypot(dx, dy));
    }
    const double r = min_len / 4.0;

    // Slot vertex per (vertex, incident edge).
    std::map<std::pair<VertexId, EdgeId>, VertexId> slot;
    for (VertexId v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 4) {
            raw.coords.push_back(g.coord(v));
            VertexId nv = static_cast<VertexId>(raw.coords.size() - 1);
            res.cycle_of[v] = {nv};
            for (EdgeId e : g.ring(v)) slot[{v, e}] = nv;
            continue;
        }
        std::vector<VertexId> cyc;
        for (EdgeId e : g.ring(v)) {
            VertexId w = g.other(e, v);
            double dx = g.coord(w).x - g.coord(v).x, dy = g.coord(w).y - g.coord(v).y;
            double len = std::hypot(dx, dy);
            raw.coords.push_back({g.coord(v).x + r * dx / len, g.coord(v).y + r * dy / len});
            VertexId nv = static_cast<VertexId>(raw.coords.size() - 1);
            slot[{v, e}] = nv;
            cyc.push_back(nv);
        }
        // Ring order is clockwise, so consecutive slots form the clockwise cycle.
        for (size_t i = 0; i < cyc.size(); ++i)
            raw.edges.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
        res.cycle_of[v] = cyc;
    }
    for (EdgeId e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        raw.edges.push_back({slot[{u, e}], slot[{v, e}]});
    }
    res.graph = allow_stubs ? build_plane_embedding(raw) : build_plane_graph(raw);
    return res;
}

RawGraph cube_raw() {
    RawGraph raw;
    raw.coords = {{0, 0}, {6, 0}, {6, 6}, {0, 6}, {2, 2}, {4, 2}, {4, 4}, {2, 4}};
    raw.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                 {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    return raw;
}

RawGraph fig_4reg_12v() {
    RawGraph raw;
    // Outer diamond pushed out so the straight-line drawing stays planar.
    raw.coords = {
        {6, -2},   // 0 B
        {14, 6},   // 1 D
        {6, 14},   // 2 F
        {-2, 6},   // 3 H
        {3, 3},    // 4 I
        {6, 3},    // 5 J
        {9, 3},    // 6 K
        {9, 6},    // 7 L
        {9, 9},    // 8 M
        {6, 9},    // 9 N
        {3, 9},    // 10 O
        {3, 6},    // 11 P
    };
    raw.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0},                    // outer ring
                 {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10},   // inner octagon
                 {10, 11}, {11, 4},
                 {0, 6}, {1, 8}, {2, 10}, {3, 4},                   // spokes
                 {4, 0}, {6, 1}, {8, 2}, {10, 3},                   // second spokes
                 {5, 7}, {7, 9}, {9, 11}, {11, 5}};                 // chords
    return raw;
}

RawGraph fig_nonregular_20v() {
    RawGraph raw;
    raw.coords = {
        {0, 0},   // 0 A
        {12, 0},  // 1 B
        {0, 2},   // 2 C
        {6, 2},   // 3 D
        {12, 2},  // 4 E
        {3, 5},   // 5 F
        {6, 5},   // 6 G
        {9, 5},   // 7 H
        {6, 7},   // 8 I
        {0, 8},   // 9 J
        {12, 8},  // 10 K
        {6, 9},   // 11 L
        {3, 11},  // 12 M
        {6, 11},  // 13 N
        {9, 11},  // 14 O
        {0, 14},  // 15 P
        {6, 14},  // 16 Q
        {12, 14}, // 17 R
        {0, 16},  // 18 S
        {12, 16}, // 19 T
    };
    raw.edges = {{0, 2},  {1, 4},  {2, 3},  {2, 9},  {3, 4},  {3, 5},  {3, 7},
                 {4, 10}, {5, 6},  {5, 9},  {5, 12}, {6, 7},  {6, 8},  {7, 10},
                 {7, 14}, {9, 12}, {9, 15}, {10, 14}, {10, 17}, {11, 13}, {12, 13},
                 {12, 16}, {13, 14}, {14, 16}, {15, 16}, {15, 18}, {16, 17}, {17, 19}};
    return raw;
}

RawGraph fig_3reg_30v() {
    RawGraph raw;
    raw.coords = {
        {0, 12},   // 0  A1
        {12, 12},  // 1  A2
        {12, 0},   // 2  A3
        {0, 0},    // 3  A4
        {17, 12},  // 4  A5
        {25, 12},  // 5  A6
        {25, 3},   // 6  A7
        {17, 3},   // 7  A8
        {15, 23},  // 8  A9
        {18, 20},  // 9  A10
        {15, 17},  // 10 A11
        {12, 20},  // 11 A12
        {15, 15},  // 12 A13
        {2, 10},   // 13 B1
        {10, 10},  // 14 B2
        {10, 2},   // 15 B3
        {2, 2},    // 16 B4
        {19, 10},  // 17 B5
        {23, 10},  // 18 B6
        {23, 5},   // 19 B7
        {19, 5},   // 20 B8
        {15, 20},  // 21 B9
        {4, 8},    // 22 C1
        {8, 8},    // 23 C2
        {8, 4},    // 24 C3
        {4, 4},    // 25 C4
        {21, 10},  // 26 C5
        {21, 7},   // 27 C6
        {19, 7},   // 28 C7
        {6, 6},    // 29 D
    };
    raw.edges = {
        {0, 1},  {1, 2},  {2, 3},  {3, 0},    // A square left
        {4, 5},  {5, 6},  {6, 7},  {7, 4},    // A square right
        {8, 9},  {9, 10}, {10, 11}, {11, 8},  // diamond
        {1, 12}, {4, 12}, {10, 12},           // A13 star (bridges)
        {13, 14}, {14, 15}, {15, 16}, {16, 13},  // B square
        {17, 26}, {26, 18}, {28, 17}, {18, 19}, {19, 20}, {20, 28},  // hexagon
        {22, 23}, {23, 24}, {24, 25}, {25, 22},  // C square
        {26, 27}, {27, 28},                      // C5-C6, C6-C7
        {0, 13}, {2, 15}, {3, 16},               // spokes left
        {5, 18}, {6, 19}, {7, 20},               // spokes right
        {11, 21}, {8, 21}, {9, 21},              // B9 star
        {14, 23},                                // B2-C2 (bridge)
        {17, 27},                                // B5-C6
        {22, 29}, {24, 29}, {25, 29},            // D star
    };
    return raw;
}

RawGraph gadget_18v() {
    RawGraph raw;
    auto at = [&](double radius, double deg) {
        return Point{radius * std::cos(deg * kPi / 180.0), radius * std::sin(deg * kPi / 180.0)};
    };
    // Outer cycle X: a1 a2 c1 c2 c3 a3 a4 (clockwise).
    const double xd[7] = {90, 38.57, -12.86, -64.29, -115.71, -167.14, -218.57};
    for (double d : xd) raw.coords.push_back(at(12.0, d));
    // Inner cycle Y: y1 y2 p1 r y3 y4 p2 p3 (clockwise).
    const double yd[8] = {90, 38, 10, -77, -167, -218, -240, -260};
    for (double d : yd) raw.coords.push_back(at(6.0, d));
    raw.coords.push_back(at(9.5, -38.6));  // 15 m1
    raw.coords.push_back(at(8.0, -77));    // 16 m2
    raw.coords.push_back({0.0, 0.5});      // 17 m
    raw.edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0},           // X
        {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 7},  // Y
        {0, 7}, {1, 8}, {5, 11}, {6, 12},                                 // ICEs
        {2, 15}, {3, 15}, {15, 16}, {4, 16}, {16, 10},                    // 5-edge tree
        {17, 9}, {17, 13}, {17, 14},                                      // inner star
    };
    return raw;
}

RawGraph gadget_16v() {
    RawGraph raw;
    raw.coords = {
        {0, 10},        // 0 o1
        {8.66, 5},      // 1 o2
        {8.66, -5},     // 2 o3
        {0, -10},       // 3 o4
        {-8.66, -5},    // 4 o5
        {-8.66, 5},     // 5 o6
        {2.1, 6.3},     // 6 x1a
        {4.2, 4.8},     // 7 x1b
        {2.2, 4.0},     // 8 w1
        {4.2, -4.8},    // 9 x2a
        {2.1, -6.3},    // 10 x2b
        {2.2, -4.0},    // 11 w2
        {-6.3, 1.5},    // 12 wa
        {-6.3, -1.5},   // 13 wb
        {-4.0, 0},      // 14 r
        {0, 0},         // 15 m
    };
    raw.edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},  // outer hexagon
        {6, 7}, {7, 8}, {8, 6},                          // triangle 1
        {9, 10}, {10, 11}, {11, 9},                      // triangle 2
        {12, 13}, {13, 14}, {14, 12},                    // triangle 3
        {0, 6}, {1, 7}, {2, 9}, {3, 10}, {4, 13}, {5, 12},  // spokes
        {15, 8}, {15, 11}, {15, 14},                     // center star
    };
    return raw;
}

namespace {

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> entries;
    auto add = [&](const std::string& name, const RawGraph& raw, int k, int cycles, int icts,
                   int alpha_ks, const std::string& prov) {
        CorpusEntry e;
        e.name = name;
        e.graph = build_plane_graph(raw);
        e.expected = {k, cycles, icts, alpha_ks, prov};
        entries.push_back(std::move(e));
    };
    add("cube", cube_raw(), 2, 2, 4, 4, "counts derived by decomposition; alpha = 2k");
    add("fig-3reg-30v", fig_3reg_30v(), 4, 6, 11, 6,
        "k and counts from the figure; alpha measured, meets the 2*3 component bound");
    {
        CorpusEntry e;
        e.name = "hfk-4-7";
        e.graph = gen_hfk({4, 7}).graph;
        e.expected = {4, 4, 21, 8, "n = 2(k-1)f = 42; alpha = 2k on the H family"};
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "constant-c3-k5";
        e.graph = gen_constant_density(5, 3).graph;
        e.expected = {5, 5, 12, 10, "constant density c=3; alpha = 2k"};
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "prism";
        e.graph = gen_constant_density(2, 3).graph;
        e.expected = {2, 2, 3, 4, "6-vertex prism; alpha = 2k"};
        entries.push_back(std::move(e));
    }
    add("gadget-16v", gadget_16v(), 2, 4, 7, 4,
        "hexagon with three inner triangles; the center star has three roots "
        "and waits for the root-absorbing merges");
    add("gadget-18v", gadget_18v(), 3, 2, 6, 5,
        "reconstruction: 2 cycles, 6 trees, one collapse delayed to round 3; alpha measured");
    return entries;
}

}  // namespace

std::vector<CorpusEntry> load_corpus() { return build_corpus(); }

const CorpusEntry& corpus_entry(const std::string& name) {
    static const std::vector<CorpusEntry> corpus = build_corpus();
    for (const auto& e : corpus)
        if (e.name == name) return e;
    throw BadParams("unknown corpus entry: " + name);
}

}  // namespace reasm
