#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "reasm/layering.hpp"
#include "reasm/multigraph.hpp"
#include "reasm/plane_graph.hpp"
#include "reasm/reassembly.hpp"

namespace reasm {

struct KsTrace {
    struct Event {
        enum class Kind { round, collapse, merge, bridge };
        Kind kind = Kind::round;
        int component = 0;
        int round = 0;               // round number within the component
        bool collapse_round = false; // for Kind::round
        int ict = -1;                // for Kind::collapse
        int merge_case = 0;          // 1..5 for Kind::merge
        VertexId a = -1, b = -1;     // participants (a == b for case 5)
        VertexId result = -1;        // final vertex of the event (-1: none)
        std::vector<EdgeId> contracted;
    };
    std::vector<Event> events;

    int count(Event::Kind k) const {
        int c = 0;
        for (const auto& e : events)
            if (e.kind == k) ++c;
        return c;
    }
    int case5_count() const {
        int c = 0;
        for (const auto& e : events)
            if (e.kind == Event::Kind::merge && e.merge_case == 5) ++c;
        return c;
    }
    /// Collapse + merge + bridge events (round boundaries excluded).
    int action_count() const {
        return static_cast<int>(events.size()) - count(Event::Kind::round);
    }
};

struct CollapseEligibility {
    int ict = -1;
    bool type_a = true;
    VertexId root = -1;  // outward ordinary root (type-b only)
    int cycle = -1;      // cycle carrying the consecutive sibling run
    std::vector<VertexId> consecutive_run;
};

/// The evolving contraction state: the plane multigraph plus the frozen
/// decomposition bookkeeping of the active component run. Tree nodes are the
/// multigraph vertex ids themselves (ordinary = leaves, supers = merges).
struct ContractionState {
    PlaneMultigraph mg;
    EngineDecomposition dec;
    int dec_threshold = 0;  // ids below this count as ordinary for the run
    std::vector<char> scope;

    struct TNode {
        int left = -1, right = -1;
        VertexId leaf = -1;
        int boundary = 0;            // degree at creation-completion
        bool from_collapse = false;  // created during a collapse round
    };
    std::vector<TNode> nodes;

    bool in_scope(VertexId v) const { return v < static_cast<int>(scope.size()) && scope[v]; }
    bool acts_ordinary(VertexId v) const { return v < dec_threshold; }
    bool edge_in_scope(EdgeId e) const {
        auto [u, v] = mg.edge_ends(e);
        return in_scope(u) && in_scope(v);
    }

    /// Current clockwise ring of a cycle: tail vertices of its live edges.
    std::vector<VertexId> cycle_ring_current(int cycle) const;
    /// Live cycles the vertex lies on (by incident live in-scope cycle edges).
    std::vector<int> cycles_at(VertexId v) const;
    /// Innermost straddled cycle, or -1.
    int inmost(VertexId v) const;
    /// Leaf of some uncollapsed ICT?
    bool is_ict_leaf(VertexId v) const;
    /// Current leaves of an ICT (dedup, ascending).
    std::vector<VertexId> ict_current_leaves(int ict) const;
};

struct MergeAction {
    VertexId phi = -1;
    VertexId mu = -1;
    int merge_case = 0;             // 1..5
    std::vector<EdgeId> edges;      // cycle edges (or self-loops) to contract
};

struct KsResult {
    ReassemblyTree tree;
    KsTrace trace;
    int k = 0;  // edge-outerplanarity of the input (bound parameter)
};

using KsObserver = std::function<void(const ContractionState&, const KsTrace::Event&)>;

/// Initial contraction state over the whole graph, pre-processed.
ContractionState make_initial_state(const PlaneGraph& g);

/// ICTs currently eligible for collapse under conditions C.1 + C.2.
std::vector<CollapseEligibility> collapse_eligible(const ContractionState& s);

/// Merge actions currently applicable under conditions D.1 + D.2
/// (self-loop contractions listed first).
std::vector<MergeAction> merge_eligible(const ContractionState& s);

/// Collapse one eligible ICT via the rotation-ordered traversal; mutates the state and
/// returns the resulting vertex plus the edges contracted.
std::pair<VertexId, std::vector<EdgeId>> collapse_tree(ContractionState& s,
                                                       const CollapseEligibility& e);

/// Main algorithm on a biconnected 3-regular plane graph with k >= 2.
KsResult run_ks(const PlaneGraph& g, const KsObserver& observer = nullptr);

/// Lift to connected inputs: per-biconnected-component runs stitched with
/// bridge contractions.
KsResult run_ks_lifted(const PlaneGraph& g, const KsObserver& observer = nullptr);

}  // namespace reasm
