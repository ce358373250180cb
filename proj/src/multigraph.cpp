#include "reasm/multigraph.hpp"

#include <algorithm>
#include <set>

namespace reasm {

PlaneMultigraph::PlaneMultigraph(const PlaneGraph& g) {
    original_n_ = g.n();
    const int m = g.m();
    origin_.assign(2 * m, -1);
    next_.assign(2 * m, -1);
    prev_.assign(2 * m, -1);
    edge_alive_.assign(m, 1);
    alive_.assign(original_n_, 1);
    kind_.assign(original_n_, VertexKind::ordinary);
    entry_.assign(original_n_, -1);
    degree_.assign(original_n_, 0);
    bag_.resize(original_n_);
    rep_.resize(original_n_);
    parent_.resize(original_n_);
    live_edges_ = m;
    live_vertices_ = original_n_;

    orig_ends_.resize(m);
    orig_coords_ = g.coords();
    for (EdgeId e = 0; e < m; ++e) {
        origin_[2 * e] = g.edge(e).first;
        origin_[2 * e + 1] = g.edge(e).second;
        orig_ends_[e] = g.edge(e);
    }
    for (VertexId v = 0; v < original_n_; ++v) {
        parent_[v] = v;
        bag_[v] = {v};
        rep_[v] = g.coord(v);
        degree_[v] = g.degree(v);
        const auto& r = g.ring(v);
        if (r.empty()) continue;
        std::vector<Dart> darts;
        darts.reserve(r.size());
        for (EdgeId e : r) darts.push_back(g.edge(e).first == v ? 2 * e : 2 * e + 1);
        for (size_t i = 0; i < darts.size(); ++i) {
            next_[darts[i]] = darts[(i + 1) % darts.size()];
            prev_[darts[(i + 1) % darts.size()]] = darts[i];
        }
        entry_[v] = darts[0];
    }
}

VertexId PlaneMultigraph::current(VertexId id) const {
    VertexId r = id;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[id] != id) {
        VertexId nxt = parent_[id];
        parent_[id] = r;
        id = nxt;
    }
    return r;
}

std::vector<Dart> PlaneMultigraph::ring_of(VertexId v) const {
    std::vector<Dart> out;
    Dart d0 = entry_[v];
    if (d0 < 0) return out;
    Dart d = d0;
    do {
        out.push_back(d);
        d = next_[d];
    } while (d != d0);
    return out;
}

Dart PlaneMultigraph::face_next(Dart d, const std::function<bool(EdgeId)>& keep) const {
    Dart c = next_[twin(d)];
    while (keep && !keep(dart_edge(c))) c = next_[c];
    return c;
}

FaceWalk PlaneMultigraph::trace_face(Dart start, const std::function<bool(EdgeId)>& keep) const {
    FaceWalk w;
    Dart d = start;
    do {
        w.darts.push_back(d);
        d = face_next(d, keep);
    } while (d != start);
    return w;
}

namespace {

bool anchor_better(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y > b.y;
}

}  // namespace

FaceWalk PlaneMultigraph::outer_face_walk(const std::function<bool(EdgeId)>& keep) const {
    std::vector<VertexId> all;
    for (VertexId v = 0; v < id_count(); ++v)
        if (alive_[v]) all.push_back(v);
    return outer_face_walk_from(all, keep);
}

FaceWalk PlaneMultigraph::outer_face_walk_from(
    const std::vector<VertexId>& component_vertices,
    const std::function<bool(EdgeId)>& keep) const {
    // Pick the live kept dart with the upper-leftmost anchor (min x, max y);
    // the anchor of a dart is its original tail position, which stays exact
    // under contraction. Among same-anchor darts, first clockwise from up.
    Dart best = -1;
    Point best_anchor{0, 0};
    for (VertexId v : component_vertices) {
        if (!alive_[v]) continue;
        for (Dart d : ring_of(v)) {
            EdgeId e = dart_edge(d);
            if (!edge_alive_[e]) continue;
            if (keep && !keep(e)) continue;
            // Anchor: the original endpoint on d's side; exact under contraction.
            Point anchor = orig_coords_[orig_tail(d)];
            if (best < 0 || anchor_better(anchor, best_anchor)) {
                best = d;
                best_anchor = anchor;
            } else if (anchor.x == best_anchor.x && anchor.y == best_anchor.y) {
                Point od = orig_coords_[orig_head(d)], ob = orig_coords_[orig_head(best)];
                if (clockwise_less(best_anchor, od, ob)) best = d;
            }
        }
    }
    if (best < 0) throw NoEdges("no edges");
    return trace_face(best, keep);
}

int PlaneMultigraph::face_count() const {
    std::set<Dart> seen;
    int faces = 0;
    for (VertexId v = 0; v < id_count(); ++v) {
        if (!alive_[v]) continue;
        for (Dart d : ring_of(v)) {
            if (!edge_alive_[dart_edge(d)]) continue;
            if (seen.count(d)) continue;
            ++faces;
            for (Dart x : trace_face(d).darts) seen.insert(x);
        }
    }
    return faces;
}

void PlaneMultigraph::detach_dart(Dart d) {
    VertexId v = origin_[d];
    if (next_[d] == d) {
        entry_[v] = -1;
    } else {
        next_[prev_[d]] = next_[d];
        prev_[next_[d]] = prev_[d];
        if (entry_[v] == d) entry_[v] = next_[d];
    }
    next_[d] = prev_[d] = -1;
}

void PlaneMultigraph::recompute_degree(VertexId v) {
    int deg = 0;
    for (Dart d : ring_of(v))
        if (edge_alive_[dart_edge(d)] && !is_loop(dart_edge(d))) ++deg;
    degree_[v] = deg;
}

VertexId PlaneMultigraph::fresh_vertex(VertexKind kind) {
    VertexId c = id_count();
    alive_.push_back(1);
    kind_.push_back(kind);
    entry_.push_back(-1);
    degree_.push_back(0);
    bag_.emplace_back();
    rep_.push_back(Point{0, 0});
    parent_.push_back(c);
    ++live_vertices_;
    return c;
}

VertexId PlaneMultigraph::contract_edge(EdgeId e) {
    if (!edge_alive_[e]) throw InternalError("contract of dead edge");
    Dart da = 2 * e, db = 2 * e + 1;
    VertexId a = origin_[da], b = origin_[db];
    if (a == b) throw InternalError("contract of a self-loop");

    VertexId c = fresh_vertex(VertexKind::super);

    Dart aN = next_[da] == da ? -1 : next_[da];
    Dart aP = prev_[da];
    Dart bN = next_[db] == db ? -1 : next_[db];
    Dart bP = prev_[db];
    detach_dart(da);
    detach_dart(db);

    if (aN < 0 && bN < 0) {
        entry_[c] = -1;
    } else if (aN < 0) {
        entry_[c] = bN;
    } else if (bN < 0) {
        entry_[c] = aN;
    } else {
        // a's remaining ring (aN..aP) followed by b's (bN..bP), circular.
        next_[aP] = bN;
        prev_[bN] = aP;
        next_[bP] = aN;
        prev_[aN] = bP;
        entry_[c] = aN;
    }
    edge_alive_[e] = 0;
    --live_edges_;
    alive_[a] = alive_[b] = 0;
    live_vertices_ -= 2;
    parent_[a] = c;
    parent_[b] = c;

    bag_[c] = std::move(bag_[a]);
    bag_[c].insert(bag_[c].end(), bag_[b].begin(), bag_[b].end());
    bag_[a].clear();
    bag_[b].clear();
    rep_[c] = anchor_better(rep_[a], rep_[b]) ? rep_[a] : rep_[b];

    for (Dart d : ring_of(c)) origin_[d] = c;
    recompute_degree(c);

    if (on_contract) on_contract(c, a, b);
    return c;
}

void PlaneMultigraph::delete_loop(EdgeId e) {
    if (!edge_alive_[e] || !is_loop(e)) throw InternalError("delete_loop misuse");
    detach_dart(2 * e);
    detach_dart(2 * e + 1);
    edge_alive_[e] = 0;
    --live_edges_;
}

void PlaneMultigraph::delete_edge(EdgeId e) {
    if (!edge_alive_[e]) throw InternalError("delete of dead edge");
    VertexId a = origin_[2 * e], b = origin_[2 * e + 1];
    detach_dart(2 * e);
    detach_dart(2 * e + 1);
    edge_alive_[e] = 0;
    --live_edges_;
    recompute_degree(a);
    if (b != a) recompute_degree(b);
}

VertexId PlaneMultigraph::contract_edges(const std::vector<EdgeId>& edge_set) {
    if (edge_set.empty()) throw DisconnectedContraction("empty edge set");
    // Connectivity over the current endpoints of the set.
    std::map<VertexId, VertexId> uf;
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (EdgeId e : edge_set) {
        auto [u, v] = edge_ends(e);
        if (!uf.count(u)) uf[u] = u;
        if (!uf.count(v)) uf[v] = v;
        uf[find(u)] = find(v);
    }
    VertexId root = find(uf.begin()->first);
    for (auto& [v, p] : uf)
        if (find(v) != root) throw DisconnectedContraction();

    VertexId result = -1;
    bool progress = true;
    std::vector<EdgeId> pending(edge_set);
    while (progress) {
        progress = false;
        for (EdgeId e : pending) {
            if (!edge_alive_[e]) continue;
            if (is_loop(e)) {
                delete_loop(e);
            } else {
                result = contract_edge(e);
            }
            progress = true;
        }
    }
    if (result < 0) {
        // All input edges were already loops on a single vertex.
        result = current(uf.begin()->first);
    }
    return current(result);
}

std::map<EdgeId, EdgeSide> classify_walk_edges(const FaceWalk& w) {
    std::map<EdgeId, int> count;
    for (Dart d : w.darts) count[dart_edge(d)]++;
    std::map<EdgeId, EdgeSide> out;
    for (auto [e, c] : count)
        out[e] = c == 1 ? EdgeSide::bounding : EdgeSide::non_bounding;
    return out;
}

bool euler_consistent(const PlaneMultigraph& mg) {
    if (mg.live_edge_count() == 0) return mg.live_vertex_count() <= 1;
    return mg.live_vertex_count() - mg.live_edge_count() + mg.face_count() == 2;
}

}  // namespace reasm
