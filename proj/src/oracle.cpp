#include "reasm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace reasm {

namespace {

int popcount64(uint64_t x) { return __builtin_popcountll(x); }

}  // namespace

OptimalAlphaResult optimal_alpha_edges(int n,
                                       const std::vector<std::pair<VertexId, VertexId>>& edges,
                                       int max_n) {
    if (n > max_n || n > 22) throw TooLarge("subset DP limited to max_n vertices");
    if (n < 1) throw BadParams("empty graph");
    const uint32_t full = (1u << n) - 1;
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    std::vector<int> boundary(full + 1, 0);
    for (uint32_t S = 1; S <= full; ++S) {
        int v = __builtin_ctz(S);
        uint32_t rest = S & (S - 1);
        boundary[S] = boundary[rest] + popcount64(adj[v]) - 2 * popcount64(adj[v] & rest);
    }

    std::vector<int> F(full + 1, 0);
    std::vector<uint32_t> choice(full + 1, 0);
    long long visited = 0;
    for (uint32_t S = 1; S <= full; ++S) {
        if ((S & (S - 1)) == 0) {
            F[S] = boundary[S];
            continue;
        }
        // Canonical halving: the sub-cluster containing S's lowest vertex.
        uint32_t low = S & (~S + 1);
        uint32_t rest = S ^ low;
        int best = INT32_MAX;
        uint32_t best_sub = 0;
        for (uint32_t sub = rest;; sub = (sub - 1) & rest) {
            uint32_t A = sub | low;
            uint32_t B = S ^ A;
            ++visited;
            if (B != 0) {
                int m = std::max(F[A], F[B]);
                if (m < best) {
                    best = m;
                    best_sub = A;
                }
            }
            if (sub == 0) break;
        }
        F[S] = std::max(boundary[S], best);
        choice[S] = best_sub;
    }

    OptimalAlphaResult res;
    res.alpha_opt = F[full];
    res.subset_count = visited;

    // Witness reconstruction.
    std::function<int(uint32_t)> build = [&](uint32_t S) -> int {
        int idx = static_cast<int>(res.witness.nodes.size());
        res.witness.nodes.emplace_back();
        if ((S & (S - 1)) == 0) {
            res.witness.nodes[idx].leaf = __builtin_ctz(S);
            return idx;
        }
        int l = build(choice[S]);
        int r = build(S ^ choice[S]);
        res.witness.nodes[idx].left = l;
        res.witness.nodes[idx].right = r;
        res.witness.nodes[l].parent = idx;
        res.witness.nodes[r].parent = idx;
        return idx;
    };
    res.witness.root = build(full);
    res.witness = res.witness.postorder();
    return res;
}

OptimalAlphaResult optimal_alpha(const PlaneGraph& g, int max_n) {
    return optimal_alpha_edges(g.n(), g.edges(), max_n);
}

namespace {

// Measures boundary and size of an explicit vertex set.
ClusterStats measure(const HGraph& h, std::vector<VertexId> vs, bool outer, int p, int q, int n) {
    ClusterStats cs;
    cs.outer_bounded = outer;
    cs.p = p;
    cs.q = q;
    cs.n_param = n;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    cs.vertices = vs;
    cs.size = static_cast<int>(vs.size());
    std::vector<char> in(h.graph.n(), 0);
    for (VertexId v : vs) in[v] = 1;
    int b = 0;
    for (EdgeId e = 0; e < h.graph.m(); ++e) {
        auto [u, v] = h.graph.edge(e);
        if (in[u] != in[v]) ++b;
    }
    cs.boundary = b;
    return cs;
}

int wrap_j(int j, int f) { return ((j - 1) % f + f) % f + 1; }

// Vertices of the small face between C_{i-1} and C_i at angular slot j.
void face_vertices(const HGraph& h, int i, int j, std::vector<VertexId>& out) {
    const int f = h.f;
    const int js = wrap_j(j, f), jn = wrap_j(j + 1, f);
    out.push_back(h.x(i, js));
    out.push_back(h.x(i, jn));
    if (i - 1 >= 1) out.push_back(h.y(i - 1, jn));
    out.push_back(h.y(i, js));
    out.push_back(h.y(i, jn));
    if (i <= h.k - 2) out.push_back(h.x(i + 1, js));
}

}  // namespace

std::vector<ClusterStats> enumerate_strongly_regular(const HGraph& h) {
    if (h.k < 2 || h.f < 3) throw WrongFamily();
    const int k = h.k, f = h.f;
    std::vector<ClusterStats> out;

    // Both bounding modes are unions of face piles of height p that narrow by
    // one angular slot per level away from the bounding cycle: one frontier
    // sequence keeps its slot, the other drifts, and the far base spans
    // q edges of the last cycle crossed.
    for (bool outer : {true, false}) {
        for (int p = 1; p <= k - 1; ++p) {
            const bool deep = (p == k - 1);  // pile touches the opposite cycle
            const int qmax = f - p;
            for (int qi = 1; qi <= qmax; ++qi) {
                const int q = deep ? qi : 2 * qi;
                const int n = deep ? p + q - 1 : p + q / 2 - 1;
                if (n > f - 2) continue;  // arcs must not close a full cycle
                std::vector<VertexId> vs;
                for (int t = 1; t <= p; ++t) {
                    const int span = n - t + 1;  // faces at depth t
                    for (int j = 0; j < span; ++j) {
                        if (outer)
                            face_vertices(h, t, 1 + j, vs);
                        else
                            face_vertices(h, k - t, t + j, vs);
                    }
                }
                out.push_back(measure(h, vs, outer, p, q, n));
            }
        }
    }
    return out;
}

int max_cluster_bound(int k) {
    if (k < 2) throw BadParams("k must be >= 2");
    const int num = 16 * k * k - 32 * k + 13;
    return (num + 11) / 12;
}

namespace {

Rational reduce(long long num, long long den) {
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

}  // namespace

Rational cluster_parabola_vertex(int c) { return reduce(2LL * (c - 1), 3); }

Rational cluster_parabola_value(int c) { return reduce(4LL * c * c - 8 * c + 1, 12); }

Rational density_threshold(int k) { return reduce(16LL * k - 13, 6); }

}  // namespace reasm
