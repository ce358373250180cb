#include "reasm/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace reasm {

namespace {

// Quadrant index for the clockwise sweep starting at "up" (0,+1):
// up=0, right side=1, down=2, left side=3.
int cw_quadrant(double dx, double dy) {
    if (dx == 0.0 && dy > 0.0) return 0;
    if (dx > 0.0) return 1;
    if (dx == 0.0 && dy < 0.0) return 2;
    return 3;  // dx < 0
}

}  // namespace

bool clockwise_less(const Point& origin, const Point& a, const Point& b) {
    const double ax = a.x - origin.x, ay = a.y - origin.y;
    const double bx = b.x - origin.x, by = b.y - origin.y;
    const int qa = cw_quadrant(ax, ay), qb = cw_quadrant(bx, by);
    if (qa != qb) return qa < qb;
    // Same quadrant: a precedes b in the clockwise sweep iff a x b < 0.
    const double cross = ax * by - ay * bx;
    return cross < 0.0;
}

PlaneGraph build_plane_embedding(const RawGraph& raw) {
    PlaneGraph g;
    g.coords_ = raw.coords;
    g.edges_ = raw.edges;
    const int n = g.n();

    for (const auto& p : g.coords_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw DegenerateEmbedding("non-finite coordinate");
    }

    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto& [u, v] : g.edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range");
        if (u == v) throw NotSimple("self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw NotSimple("duplicate edge");
    }

    g.rings_.assign(n, {});
    for (EdgeId e = 0; e < g.m(); ++e) {
        g.rings_[g.edges_[e].first].push_back(e);
        g.rings_[g.edges_[e].second].push_back(e);
    }
    for (VertexId v = 0; v < n; ++v) {
        auto& ring = g.rings_[v];
        std::sort(ring.begin(), ring.end(), [&](EdgeId a, EdgeId b) {
            return clockwise_less(g.coords_[v], g.coords_[g.other(a, v)],
                                  g.coords_[g.other(b, v)]);
        });
        for (size_t i = 0; i + 1 < ring.size(); ++i) {
            const Point& pa = g.coords_[g.other(ring[i], v)];
            const Point& pb = g.coords_[g.other(ring[i + 1], v)];
            const double ax = pa.x - g.coords_[v].x, ay = pa.y - g.coords_[v].y;
            const double bx = pb.x - g.coords_[v].x, by = pb.y - g.coords_[v].y;
            if (ax * by - ay * bx == 0.0 && ax * bx + ay * by > 0.0)
                throw DegenerateEmbedding("two neighbors at identical angle");
        }
    }
    return g;
}

PlaneGraph build_plane_graph(const RawGraph& raw) {
    PlaneGraph g = build_plane_embedding(raw);
    for (VertexId v = 0; v < g.n(); ++v)
        if (g.degree(v) != 3) throw NotThreeRegular("vertex degree != 3");
    g.three_regular_ = true;
    return g;
}

namespace {

int orient(const Point& a, const Point& b, const Point& c) {
    const double d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool validate_planar_drawing(const RawGraph& raw) {
    const auto& es = raw.edges;
    for (size_t i = 0; i < es.size(); ++i) {
        for (size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) continue;
            const Point &pa = raw.coords[a], &pb = raw.coords[b];
            const Point &pc = raw.coords[c], &pd = raw.coords[d];
            const int o1 = orient(pa, pb, pc), o2 = orient(pa, pb, pd);
            const int o3 = orient(pc, pd, pa), o4 = orient(pc, pd, pb);
            if (o1 != o2 && o3 != o4) return false;
            if (o1 == 0 && on_segment(pa, pb, pc)) return false;
            if (o2 == 0 && on_segment(pa, pb, pd)) return false;
            if (o3 == 0 && on_segment(pc, pd, pa)) return false;
            if (o4 == 0 && on_segment(pc, pd, pb)) return false;
        }
    }
    return true;
}

namespace {

struct BridgeDfs {
    const PlaneGraph& g;
    std::vector<int> disc, low;
    std::vector<EdgeId> bridges;
    int timer = 0;

    explicit BridgeDfs(const PlaneGraph& gr) : g(gr), disc(gr.n(), -1), low(gr.n(), 0) {}

    void run(VertexId root) {
        // Iterative DFS; parent edge tracked to avoid treating it as a back edge.
        struct Frame { VertexId v; EdgeId pe; size_t i; };
        std::vector<Frame> st{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!st.empty()) {
            auto& f = st.back();
            if (f.i < g.ring(f.v).size()) {
                EdgeId e = g.ring(f.v)[f.i++];
                if (e == f.pe) continue;
                VertexId w = g.other(e, f.v);
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    st.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                VertexId v = f.v;
                EdgeId pe = f.pe;
                st.pop_back();
                if (!st.empty()) {
                    VertexId p = st.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) bridges.push_back(pe);
                }
            }
        }
    }
};

}  // namespace

std::vector<EdgeId> find_bridges(const PlaneGraph& g) {
    BridgeDfs dfs(g);
    for (VertexId v = 0; v < g.n(); ++v)
        if (dfs.disc[v] < 0) dfs.run(v);
    std::sort(dfs.bridges.begin(), dfs.bridges.end());
    return dfs.bridges;
}

bool is_connected(const PlaneGraph& g) {
    if (g.n() == 0) return true;
    std::vector<char> vis(g.n(), 0);
    std::vector<VertexId> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.ring(v)) {
            VertexId w = g.other(e, v);
            if (!vis[w]) {
                vis[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.n();
}

bool is_biconnected(const PlaneGraph& g) {
    if (g.n() < 3) return false;
    if (!is_connected(g)) return false;
    // Articulation check via lowlink (recursive over explicit stack).
    std::vector<int> disc(g.n(), -1), low(g.n(), 0);
    int timer = 0;
    struct Frame { VertexId v; EdgeId pe; size_t i; int children; };
    std::vector<Frame> st{{0, -1, 0, 0}};
    disc[0] = low[0] = timer++;
    bool ok = true;
    while (!st.empty() && ok) {
        auto& f = st.back();
        if (f.i < g.ring(f.v).size()) {
            EdgeId e = g.ring(f.v)[f.i++];
            if (e == f.pe) continue;
            VertexId w = g.other(e, f.v);
            if (disc[w] < 0) {
                disc[w] = low[w] = timer++;
                ++f.children;
                st.push_back({w, e, 0, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            Frame f2 = st.back();
            st.pop_back();
            if (!st.empty()) {
                VertexId p = st.back().v;
                low[p] = std::min(low[p], low[f2.v]);
                bool p_is_root = st.size() == 1;
                if (!p_is_root && low[f2.v] >= disc[p]) ok = false;
            } else if (f2.children > 1) {
                ok = false;  // root with >1 DFS child
            }
        }
    }
    return ok;
}

}  // namespace reasm
