#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "reasm/errors.hpp"

namespace reasm {

using VertexId = int;
using EdgeId = int;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Raw input form of a graph drawing: straight-line coordinates plus an
/// undirected edge list. Ids must be dense 0..n-1.
struct RawGraph {
    std::vector<Point> coords;
    std::vector<std::pair<VertexId, VertexId>> edges;
};

/// A simple plane graph with the rotation system derived from the drawing.
/// Rings list incident edges in clockwise angular order around each vertex.
/// Immutable after build.
class PlaneGraph {
public:
    int n() const { return static_cast<int>(coords_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }

    const Point& coord(VertexId v) const { return coords_[v]; }
    const std::vector<Point>& coords() const { return coords_; }
    const std::pair<VertexId, VertexId>& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    VertexId other(EdgeId e, VertexId v) const {
        return edges_[e].first == v ? edges_[e].second : edges_[e].first;
    }
    /// Incident edges in clockwise order.
    const std::vector<EdgeId>& ring(VertexId v) const { return rings_[v]; }
    int degree(VertexId v) const { return static_cast<int>(rings_[v].size()); }
    bool three_regular() const { return three_regular_; }

    friend PlaneGraph build_plane_embedding(const RawGraph& raw);
    friend PlaneGraph build_plane_graph(const RawGraph& raw);

private:
    std::vector<Point> coords_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<EdgeId>> rings_;
    bool three_regular_ = false;
};

/// Builds the embedding for arbitrary vertex degrees. Validates simplicity,
/// finite distinct coordinates and distinct edge directions per vertex.
PlaneGraph build_plane_embedding(const RawGraph& raw);

/// As build_plane_embedding, plus the 3-regularity check.
PlaneGraph build_plane_graph(const RawGraph& raw);

/// Strict clockwise angular order: returns true when direction a comes before
/// direction b when sweeping clockwise from "straight up".
bool clockwise_less(const Point& origin, const Point& a, const Point& b);

/// O(E^2) straight-line drawing validator: true iff no two edges intersect
/// except at shared endpoints. Off the default build path.
bool validate_planar_drawing(const RawGraph& raw);

std::vector<EdgeId> find_bridges(const PlaneGraph& g);
bool is_connected(const PlaneGraph& g);
bool is_biconnected(const PlaneGraph& g);

}  // namespace reasm
