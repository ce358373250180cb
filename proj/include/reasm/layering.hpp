#pragma once

#include <functional>
#include <vector>

#include "reasm/multigraph.hpp"
#include "reasm/plane_graph.hpp"

namespace reasm {

enum class VClass : uint8_t { none, inward, outward };

/// Peeling decomposition over a (possibly contracted) plane multigraph.
/// Vertex-indexed data is per current vertex id at decompose time.
struct EngineDecomposition {
    int k = 0;
    struct Layer {
        std::vector<EdgeId> L;  // bounding (cycle) edges of this layer
        std::vector<EdgeId> M;  // non-bounding (tree) edges
    };
    std::vector<Layer> layers;

    struct Cycle {
        int level = 0;
        std::vector<Dart> ring;  // clockwise darts, chained tail->head
        // C.1 bookkeeping, filled by the engine:
        int outside_total = 0;
        int outside_collapsed = 0;
    };
    std::vector<Cycle> cycles;

    struct Ict {
        int level = 0;
        std::vector<EdgeId> edges;
        std::vector<std::pair<VertexId, VertexId>> edge_ends;  // at decompose time
        std::vector<VertexId> leaves;     // vertices of tree-degree 1
        std::vector<VertexId> internal;   // vertices of tree-degree >= 2
        std::vector<int> gate_cycles;     // cycles carrying an inward leaf
        std::vector<int> outward_cycles;  // cycles carrying an outward leaf
        bool collapsed = false;
    };
    std::vector<Ict> icts;

    std::vector<int> edge_cycle;  // per edge id: owning cycle or -1
    std::vector<int> edge_ict;    // per edge id: owning ict or -1
    std::vector<VClass> vclass;   // per vertex id
    std::vector<int> cyc_of;      // per vertex id: cycle the vertex lies on, or -1
};

EngineDecomposition engine_decompose(const PlaneMultigraph& mg,
                                     const std::vector<VertexId>& vertices,
                                     const std::function<bool(EdgeId)>& keep = nullptr);

/// Public decomposition of a fresh plane graph (vertex ids == original ids).
struct LayerDecomposition {
    int k = 0;
    struct EdgeLayer {
        std::vector<EdgeId> cycle_edges;  // L_i
        std::vector<EdgeId> ict_edges;    // M_i
    };
    std::vector<EdgeLayer> layers;
    struct Cycle {
        int level = 0;
        std::vector<std::pair<VertexId, EdgeId>> ring;  // clockwise
    };
    std::vector<Cycle> cycles;
    struct Ict {
        int level = 0;
        std::vector<EdgeId> edges;
        std::vector<VertexId> leaves;
        std::vector<VertexId> internal;
    };
    std::vector<Ict> icts;
    std::vector<VClass> vertex_class;
};

/// Peels edge layers off the outer face until the graph is edgeless.
/// Requires a connected input.
LayerDecomposition decompose(const PlaneGraph& g);

/// k from decompose.
int edge_outerplanarity(const PlaneGraph& g);

/// (k-1, k) clamped at zero: the admissible standard-outerplanarity range.
std::pair<int, int> vertex_outerplanarity_bounds(const LayerDecomposition& d);

/// True iff each G[K_i] is a disjoint union of cacti, G[L_i] a union of
/// simple cycles and G[M_i] a union of trees.
bool cacti_check(const LayerDecomposition& d, const PlaneGraph& g);

}  // namespace reasm
