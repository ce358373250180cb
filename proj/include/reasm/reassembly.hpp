#pragma once

#include <string>
#include <vector>

#include "reasm/plane_graph.hpp"

namespace reasm {

/// Rooted binary tree over V(G): leaves are singleton vertex clusters, every
/// internal node the disjoint union of its two children, root = V. Clusters
/// are implicit (subtree leaf sets); nodes are indexed densely.
struct ReassemblyTree {
    struct Node {
        int left = -1;
        int right = -1;
        int parent = -1;
        VertexId leaf = -1;  // >= 0 iff this node is a leaf
    };
    std::vector<Node> nodes;
    int root = -1;

    int node_count() const { return static_cast<int>(nodes.size()); }
    bool is_leaf(int i) const { return nodes[i].leaf >= 0; }

    /// Leaves in postorder-consistent node numbering: returns a copy of this
    /// tree with nodes renumbered in postorder (left, right, node).
    ReassemblyTree postorder() const;
};

struct ValidationReport {
    bool ok = false;
    std::vector<std::string> diagnostics;
};

/// Checks the three reassembling-tree conditions against V(G).
ValidationReport validate_tree(const PlaneGraph& g, const ReassemblyTree& t);

struct AlphaReport {
    int alpha = 0;
    int argmax_node = -1;                 // postorder id, smallest among ties
    std::vector<int> per_node_boundary;   // postorder-indexed
};

/// Verifier-grade edge-boundary computation, independent of any engine
/// bookkeeping: small-to-large leaf-set merging.
AlphaReport alpha_measure(const PlaneGraph& g, const ReassemblyTree& t);

/// Unrooted tree with n leaves in bijection with V(G) and internal degree 3.
/// Node ids: 0..n-1 are the leaves (leaf i <-> vertex i), the rest internal.
struct RoutingTree {
    int n = 0;
    std::vector<std::pair<int, int>> branches;  // 2n-3 of them
    int node_count() const { return 2 * n - 2; }
};

/// Deletes the root and joins its two children by a new branch.
RoutingTree tree_to_carving(const ReassemblyTree& t);

/// One re-rooting per branch; 2n-3 trees.
std::vector<ReassemblyTree> carving_to_trees(const RoutingTree& T);

/// Max over branches of the induced cut size in g.
int carving_width(const PlaneGraph& g, const RoutingTree& T);

/// Rearranges the tree so that every sibling merge joins clusters connected
/// by at least one edge, without increasing alpha. iterations_out, when
/// given, receives the number of repairs that reduced the zero-merge count
/// (rootward relocations between them are internal sub-steps).
ReassemblyTree normalize_no_zero_merges(const PlaneGraph& g, const ReassemblyTree& t,
                                        int* iterations_out = nullptr);

/// Number of sibling merges with zero connecting edges.
int count_zero_merges(const PlaneGraph& g, const ReassemblyTree& t);

/// True iff the two trees induce the same family of leaf clusters.
bool same_cluster_family(const ReassemblyTree& a, const ReassemblyTree& b);

}  // namespace reasm
