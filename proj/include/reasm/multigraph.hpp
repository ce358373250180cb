#pragma once

#include <functional>
#include <map>
#include <vector>

#include "reasm/plane_graph.hpp"

namespace reasm {

/// Directed edge occurrence. Edge e owns darts 2e and 2e+1; twin(d) = d^1.
using Dart = int;

inline Dart twin(Dart d) { return d ^ 1; }
inline EdgeId dart_edge(Dart d) { return d >> 1; }

enum class VertexKind : uint8_t { ordinary, super };

/// One closed face boundary: the sequence of darts walked.
struct FaceWalk {
    std::vector<Dart> darts;
    int length() const { return static_cast<int>(darts.size()); }
};

enum class EdgeSide { bounding, non_bounding };

/// Plane multigraph under edge contraction. Vertices are never reused: every
/// contraction retires both endpoints and mints a fresh super id, so the ids
/// ever created line up with reassembling-tree nodes. Rotation rings are kept
/// as circular doubly-linked dart lists and spliced on contraction, which
/// keeps the embedding consistent; parallel edges and self-loops are allowed.
class PlaneMultigraph {
public:
    PlaneMultigraph() = default;
    explicit PlaneMultigraph(const PlaneGraph& g);

    // --- structure access -------------------------------------------------
    int original_n() const { return original_n_; }
    int id_count() const { return static_cast<int>(alive_.size()); }
    int live_edge_count() const { return live_edges_; }
    int live_vertex_count() const { return live_vertices_; }
    bool vertex_alive(VertexId v) const { return alive_[v]; }
    bool edge_alive(EdgeId e) const { return edge_alive_[e]; }
    VertexKind kind(VertexId v) const { return kind_[v]; }
    int edge_count() const { return static_cast<int>(edge_alive_.size()); }

    VertexId dart_origin(Dart d) const { return origin_[d]; }
    VertexId dart_head(Dart d) const { return origin_[twin(d)]; }
    std::pair<VertexId, VertexId> edge_ends(EdgeId e) const {
        return {origin_[2 * e], origin_[2 * e + 1]};
    }
    bool is_loop(EdgeId e) const { return origin_[2 * e] == origin_[2 * e + 1]; }
    /// Count of incident non-loop edge endpoints (loops excluded entirely).
    int degree(VertexId v) const { return degree_[v]; }

    /// Current vertex containing an original (or any retired) id.
    VertexId current(VertexId id) const;
    /// Ordinary vertices contained in v.
    const std::vector<VertexId>& bag(VertexId v) const { return bag_[v]; }
    /// Representative drawing position: upper-leftmost over the bag.
    Point rep_coord(VertexId v) const { return rep_[v]; }
    /// Construction-time endpoints of an edge; immutable under contraction.
    std::pair<VertexId, VertexId> orig_ends(EdgeId e) const { return orig_ends_[e]; }
    VertexId orig_tail(Dart d) const {
        return (d & 1) ? orig_ends_[dart_edge(d)].second : orig_ends_[dart_edge(d)].first;
    }
    VertexId orig_head(Dart d) const { return orig_tail(twin(d)); }
    Point orig_coord(VertexId original) const { return orig_coords_[original]; }

    /// Walks v's rotation ring clockwise; empty if isolated.
    std::vector<Dart> ring_of(VertexId v) const;
    /// Next dart strictly after d, clockwise, around d's origin.
    Dart ring_next(Dart d) const { return next_[d]; }
    Dart ring_prev(Dart d) const { return prev_[d]; }
    /// Some dart at v, or -1.
    Dart any_dart(VertexId v) const { return entry_[v]; }

    // --- face walks --------------------------------------------------------
    /// Face to the traversal side of start; each dart appears once per face.
    /// keep: optional dart filter (darts whose edge fails it are skipped in
    /// ring order, as if deleted).
    FaceWalk trace_face(Dart start, const std::function<bool(EdgeId)>& keep = nullptr) const;
    /// Successor dart of d in its face.
    Dart face_next(Dart d, const std::function<bool(EdgeId)>& keep = nullptr) const;

    /// Boundary walk of the unbounded face of the component containing the
    /// upper-leftmost vertex (among those with a kept live edge).
    /// Start rule: min x, then max y; first edge clockwise from up.
    FaceWalk outer_face_walk(const std::function<bool(EdgeId)>& keep = nullptr) const;
    /// As above but restricted to one component (any vertex of it given).
    FaceWalk outer_face_walk_from(const std::vector<VertexId>& component_vertices,
                                  const std::function<bool(EdgeId)>& keep = nullptr) const;

    /// Number of distinct faces (live edges only); isolated vertices ignored.
    int face_count() const;

    // --- contraction -------------------------------------------------------
    /// Contracts one non-loop live edge; retires both endpoints, returns the
    /// fresh super vertex. Other edges between the endpoints become loops.
    VertexId contract_edge(EdgeId e);
    /// Deletes a live loop.
    void delete_loop(EdgeId e);
    /// Deletes a live edge without contracting (layer peeling uses flags
    /// instead; this is for the KS' bridge bookkeeping only).
    void delete_edge(EdgeId e);

    /// Contracts a connected non-empty edge set into one super
    /// vertex (internal loops among them are deleted along the way).
    VertexId contract_edges(const std::vector<EdgeId>& edge_set);

    /// Fresh-node observer: called as make(super, child_a, child_b) for every
    /// pairwise contraction.
    std::function<void(VertexId, VertexId, VertexId)> on_contract;

private:
    VertexId fresh_vertex(VertexKind kind);
    void detach_dart(Dart d);
    void recompute_degree(VertexId v);

    int original_n_ = 0;
    int live_edges_ = 0;
    int live_vertices_ = 0;
    std::vector<VertexId> origin_;      // per dart
    std::vector<Dart> next_, prev_;     // circular ring links, per dart
    std::vector<char> edge_alive_;
    std::vector<char> alive_;           // per vertex id
    std::vector<VertexKind> kind_;
    std::vector<Dart> entry_;           // per vertex id, -1 if isolated
    std::vector<int> degree_;
    std::vector<std::vector<VertexId>> bag_;
    std::vector<Point> rep_;
    std::vector<std::pair<VertexId, VertexId>> orig_ends_;
    std::vector<Point> orig_coords_;
    mutable std::vector<VertexId> parent_;  // union-find over ids
};

/// Classification of the edges touched by one face walk: traversed once =
/// bounding on that face, twice = non-bounding.
std::map<EdgeId, EdgeSide> classify_walk_edges(const FaceWalk& w);

/// Euler check V - E + F = 2 for a connected plane multigraph.
bool euler_consistent(const PlaneMultigraph& mg);

}  // namespace reasm
