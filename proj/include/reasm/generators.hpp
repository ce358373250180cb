#pragma once

#include <string>
#include <vector>

#include "reasm/plane_graph.hpp"
#include "reasm/reassembly.hpp"

namespace reasm {

struct HFamilyParams {
    int k = 2;        // number of concentric cycles, >= 2
    int f_of_k = 3;   // inter-cycle edges per level, >= 3
    /// True when f(k) clears the (16k-13)/6 density threshold.
    bool dense() const { return 6 * f_of_k > 16 * k - 13; }
};

/// H-family graph with its construction labeling: x(i,j) sits on cycle
/// C_{i-1}, y(i,j) on C_i, joined by the inter-cycle edge e_{i,j};
/// i in 1..k-1, j in 1..f (all 1-based).
struct HGraph {
    PlaneGraph graph;
    int k = 0;
    int f = 0;
    std::vector<std::vector<VertexId>> xs;  // xs[i-1][j-1] = x(i,j)
    std::vector<std::vector<VertexId>> ys;  // ys[i-1][j-1] = y(i,j)

    VertexId x(int i, int j) const { return xs[i - 1][j - 1]; }
    VertexId y(int i, int j) const { return ys[i - 1][j - 1]; }
    /// Vertices of cycle level i (0-based), clockwise.
    std::vector<VertexId> cycle_ring(int level) const;
    int n() const { return graph.n(); }
};

HGraph gen_hfk(const HFamilyParams& p);

/// H with the constant density function f(k) = c.
HGraph gen_constant_density(int k, int c);

/// The inside-out left-comb reassembling over the a_1..a_{2(k-1)c} labeling:
/// innermost cycle clockwise, then each outer cycle in turn.
ReassemblyTree inside_out_reassemble(const HGraph& h);
/// The labeling itself, for tests.
std::vector<VertexId> inside_out_order(const HGraph& h);

struct ExpandResult {
    PlaneGraph graph;
    /// Per original vertex: the replacement cycle (singleton if degree 3).
    std::vector<std::vector<VertexId>> cycle_of;
};

/// Replaces every vertex of degree >= 4 by a clockwise cycle of fresh
/// degree-3 vertices carrying the incident edges in rotation order. With
/// allow_stubs the input may contain low-degree vertices (edge stubs standing
/// in for the rest of a graph) and the 3-regularity check is skipped.
ExpandResult expand_to_three_regular(const PlaneGraph& g, bool allow_stubs = false);

/// 12-vertex 4-regular plane graph (two nested rings with chords).
RawGraph fig_4reg_12v();
/// 20-vertex non-regular plane graph with pendant edges.
RawGraph fig_nonregular_20v();
/// 30-vertex 3-regular plane graph with four biconnected components, k = 4.
RawGraph fig_3reg_30v();
/// Cube drawing: nested squares with corner spokes.
RawGraph cube_raw();
/// 18-vertex gadget: two nested cycles, six trees, one of them eligible for
/// collapse only after two rounds (and then rootless).
RawGraph gadget_18v();
/// 16-vertex gadget: a hexagon enclosing three triangles tied together by a
/// central star whose three leaves are all outward roots; the star becomes
/// collapsible only after each triangle cycle shrinks to its root.
RawGraph gadget_16v();

struct CorpusEntry {
    std::string name;
    PlaneGraph graph;
    struct Expected {
        int k = -1;
        int cycles = -1;
        int icts = -1;
        int alpha_ks = -1;
        std::string provenance;
    } expected;
};

std::vector<CorpusEntry> load_corpus();
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace reasm
