#pragma once

#include <vector>

#include "reasm/generators.hpp"
#include "reasm/plane_graph.hpp"
#include "reasm/reassembly.hpp"

namespace reasm {

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct OptimalAlphaResult {
    int alpha_opt = 0;
    ReassemblyTree witness;
    long long subset_count = 0;
};

/// Exact optimal alpha by subset dynamic programming over all bipartition
/// trees: F(S) = max(boundary(S), min over splits of max(F(A), F(S\A))).
/// Works for any simple graph given as (n, edges).
OptimalAlphaResult optimal_alpha_edges(int n,
                                       const std::vector<std::pair<VertexId, VertexId>>& edges,
                                       int max_n = 16);
OptimalAlphaResult optimal_alpha(const PlaneGraph& g, int max_n = 16);

struct ClusterStats {
    bool outer_bounded = true;  // bounded by C_0 (else by C_{k-1})
    int p = 0;                  // height
    int q = 0;                  // base along the far cycle
    int n_param = 0;            // base along the bounding cycle
    int boundary = 0;           // measured edge boundary
    int size = 0;               // measured |X|
    std::vector<VertexId> vertices;
};

/// Materializes strongly regular clusters of an H-family graph over all
/// admissible (p, q), anchored at angular slot 1, for both boundings, and
/// measures boundary and size directly on the graph.
std::vector<ClusterStats> enumerate_strongly_regular(const HGraph& h);

/// ceil((16k^2 - 32k + 13) / 12).
int max_cluster_bound(int k);
/// Parabola vertex position (2/3)(c-1) for the size-bound derivation.
Rational cluster_parabola_vertex(int c);
/// Parabola maximum value (4c^2 - 8c + 1)/12.
Rational cluster_parabola_value(int c);
/// Density threshold (16k - 13)/6.
Rational density_threshold(int k);

}  // namespace reasm
