#include "reasm/layering.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace reasm {

EngineDecomposition engine_decompose(const PlaneMultigraph& mg,
                                     const std::vector<VertexId>& vertices,
                                     const std::function<bool(EdgeId)>& keep) {
    EngineDecomposition d;
    d.edge_cycle.assign(mg.edge_count(), -1);
    d.edge_ict.assign(mg.edge_count(), -1);
    d.vclass.assign(mg.id_count(), VClass::none);
    d.cyc_of.assign(mg.id_count(), -1);

    std::vector<char> peeled(mg.edge_count(), 0);
    std::vector<char> in_scope(mg.id_count(), 0);
    for (VertexId v : vertices) in_scope[v] = 1;

    auto live = [&](EdgeId e) {
        if (!mg.edge_alive(e) || peeled[e]) return false;
        if (keep && !keep(e)) return false;
        auto [u, v] = mg.edge_ends(e);
        return in_scope[u] && in_scope[v];
    };

    // Dart the peel walk used, per bounding edge; defines clockwise direction.
    std::vector<Dart> walk_dart(mg.edge_count(), -1);
    std::vector<int> edge_layer(mg.edge_count(), -1);

    while (true) {
        // Components of the residual graph, deterministic by smallest vertex id.
        std::vector<char> seen(mg.id_count(), 0);
        std::vector<std::vector<VertexId>> comps;
        for (VertexId v : vertices) {
            if (seen[v] || !mg.vertex_alive(v)) continue;
            bool has_edge = false;
            for (Dart dd : mg.ring_of(v))
                if (live(dart_edge(dd))) { has_edge = true; break; }
            if (!has_edge) continue;
            std::vector<VertexId> comp{v};
            seen[v] = 1;
            for (size_t i = 0; i < comp.size(); ++i) {
                for (Dart dd : mg.ring_of(comp[i])) {
                    if (!live(dart_edge(dd))) continue;
                    VertexId w = mg.dart_head(dd);
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
                }
            }
            comps.push_back(std::move(comp));
        }
        if (comps.empty()) break;

        EngineDecomposition::Layer layer;
        for (const auto& comp : comps) {
            FaceWalk w = mg.outer_face_walk_from(comp, live);
            std::map<EdgeId, int> count;
            for (Dart dd : w.darts) count[dart_edge(dd)]++;
            for (Dart dd : w.darts) {
                EdgeId e = dart_edge(dd);
                if (edge_layer[e] >= 0) continue;  // second traversal of same edge
                edge_layer[e] = d.k;
                if (count[e] == 1) {
                    layer.L.push_back(e);
                    walk_dart[e] = dd;
                } else {
                    layer.M.push_back(e);
                }
            }
        }
        for (EdgeId e : layer.L) peeled[e] = 1;
        for (EdgeId e : layer.M) peeled[e] = 1;
        std::sort(layer.L.begin(), layer.L.end());
        std::sort(layer.M.begin(), layer.M.end());
        d.layers.push_back(std::move(layer));
        ++d.k;
    }

    // Cycles: chain the walk darts of each layer's bounding edges.
    for (int lev = 0; lev < d.k; ++lev) {
        std::map<VertexId, Dart> out_at;  // tail vertex -> walk dart
        for (EdgeId e : d.layers[lev].L) out_at[mg.dart_origin(walk_dart[e])] = walk_dart[e];
        std::set<EdgeId> used;
        for (EdgeId e0 : d.layers[lev].L) {
            if (used.count(e0)) continue;
            EngineDecomposition::Cycle cyc;
            cyc.level = lev;
            Dart dd = walk_dart[e0];
            do {
                cyc.ring.push_back(dd);
                used.insert(dart_edge(dd));
                auto it = out_at.find(mg.dart_head(dd));
                if (it == out_at.end()) throw InternalError("broken cycle chain in layer");
                dd = it->second;
            } while (dd != walk_dart[e0]);
            int id = static_cast<int>(d.cycles.size());
            for (Dart x : cyc.ring) {
                d.edge_cycle[dart_edge(x)] = id;
                if (d.cyc_of[mg.dart_origin(x)] != -1 && d.cyc_of[mg.dart_origin(x)] != id)
                    throw InternalError("vertex on two cycles");
                d.cyc_of[mg.dart_origin(x)] = id;
            }
            d.cycles.push_back(std::move(cyc));
        }
    }

    // ICTs: components of each layer's non-bounding edges.
    for (int lev = 0; lev < d.k; ++lev) {
        std::set<EdgeId> pool(d.layers[lev].M.begin(), d.layers[lev].M.end());
        while (!pool.empty()) {
            EdgeId e0 = *pool.begin();
            EngineDecomposition::Ict t;
            t.level = lev;
            std::vector<EdgeId> stack{e0};
            pool.erase(e0);
            std::set<VertexId> verts;
            while (!stack.empty()) {
                EdgeId e = stack.back();
                stack.pop_back();
                t.edges.push_back(e);
                auto [u, v] = mg.edge_ends(e);
                for (VertexId x : {u, v}) {
                    if (verts.count(x)) continue;
                    verts.insert(x);
                    for (Dart dd : mg.ring_of(x)) {
                        EdgeId f = dart_edge(dd);
                        if (pool.count(f)) {
                            pool.erase(f);
                            stack.push_back(f);
                        }
                    }
                }
            }
            std::sort(t.edges.begin(), t.edges.end());
            std::map<VertexId, int> tdeg;
            for (EdgeId e : t.edges) {
                auto [u, v] = mg.edge_ends(e);
                t.edge_ends.push_back({u, v});
                tdeg[u]++;
                tdeg[v]++;
            }
            if (t.edges.size() + 1 != tdeg.size()) throw InternalError("ICT component is not a tree");
            for (auto [v, deg] : tdeg)
                (deg == 1 ? t.leaves : t.internal).push_back(v);
            int id = static_cast<int>(d.icts.size());
            for (EdgeId e : t.edges) d.edge_ict[e] = id;
            d.icts.push_back(std::move(t));
        }
    }

    // Vertex classes and the C.1 incidence lists.
    for (size_t ti = 0; ti < d.icts.size(); ++ti) {
        auto& t = d.icts[ti];
        std::set<int> gates, outward;
        for (VertexId leaf : t.leaves) {
            int cyc = d.cyc_of[leaf];
            if (cyc < 0) continue;  // leaf not on a cycle (degree-2 corner case)
            int clevel = d.cycles[cyc].level;
            if (t.level == clevel) {
                d.vclass[leaf] = VClass::outward;
                outward.insert(cyc);
            } else if (t.level == clevel + 1) {
                d.vclass[leaf] = VClass::inward;
                gates.insert(cyc);
            } else {
                throw InternalError("ICT leaf level mismatch");
            }
        }
        t.gate_cycles.assign(gates.begin(), gates.end());
        t.outward_cycles.assign(outward.begin(), outward.end());
        for (int c : outward) d.cycles[c].outside_total++;
    }
    return d;
}

LayerDecomposition decompose(const PlaneGraph& g) {
    if (g.m() > 0 && !is_connected(g)) throw Disconnected("decompose requires a connected graph");
    PlaneMultigraph mg(g);
    std::vector<VertexId> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    EngineDecomposition ed;
    if (g.m() == 0) {
        ed.vclass.assign(g.n(), VClass::none);
    } else {
        ed = engine_decompose(mg, all);
    }

    LayerDecomposition d;
    d.k = ed.k;
    d.layers.resize(ed.layers.size());
    for (size_t i = 0; i < ed.layers.size(); ++i) {
        d.layers[i].cycle_edges = ed.layers[i].L;
        d.layers[i].ict_edges = ed.layers[i].M;
    }
    for (const auto& c : ed.cycles) {
        LayerDecomposition::Cycle cc;
        cc.level = c.level;
        for (Dart dd : c.ring) cc.ring.emplace_back(mg.dart_origin(dd), dart_edge(dd));
        d.cycles.push_back(std::move(cc));
    }
    for (const auto& t : ed.icts) {
        LayerDecomposition::Ict tt;
        tt.level = t.level;
        tt.edges = t.edges;
        tt.leaves = t.leaves;
        tt.internal = t.internal;
        std::sort(tt.leaves.begin(), tt.leaves.end());
        std::sort(tt.internal.begin(), tt.internal.end());
        d.icts.push_back(std::move(tt));
    }
    d.vertex_class.assign(ed.vclass.begin(), ed.vclass.begin() + g.n());
    return d;
}

int edge_outerplanarity(const PlaneGraph& g) { return decompose(g).k; }

std::pair<int, int> vertex_outerplanarity_bounds(const LayerDecomposition& d) {
    return {std::max(0, d.k - 1), d.k};
}

namespace {

struct SubgraphView {
    std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
    void add(const PlaneGraph& g, EdgeId e) {
        adj[g.edge(e).first].push_back({g.edge(e).second, e});
        adj[g.edge(e).second].push_back({g.edge(e).first, e});
    }
};

bool components_are_cycles(const SubgraphView& s) {
    for (const auto& [v, nb] : s.adj)
        if (nb.size() != 2) return false;
    return true;  // finite and 2-regular => disjoint simple cycles
}

bool components_are_forests(const SubgraphView& s) {
    std::set<VertexId> seen;
    for (const auto& [v0, unused] : s.adj) {
        if (seen.count(v0)) continue;
        std::vector<VertexId> comp{v0};
        seen.insert(v0);
        int deg_sum = 0;
        for (size_t i = 0; i < comp.size(); ++i) {
            deg_sum += static_cast<int>(s.adj.at(comp[i]).size());
            for (auto [w, e] : s.adj.at(comp[i]))
                if (!seen.count(w)) {
                    seen.insert(w);
                    comp.push_back(w);
                }
        }
        if (deg_sum / 2 != static_cast<int>(comp.size()) - 1) return false;
    }
    return true;
}

// Block decomposition with an edge stack; a graph is a cactus iff every block
// is a single edge or a simple cycle (|E| == |V| within the block).
struct BlockDfs {
    const SubgraphView& s;
    std::map<VertexId, int> disc, low;
    std::vector<EdgeId> estack;
    std::set<EdgeId> on_stack;
    int timer = 0;
    bool ok = true;

    explicit BlockDfs(const SubgraphView& sv) : s(sv) {}

    void check_block(const std::vector<EdgeId>& block) {
        if (block.size() <= 1) return;
        std::set<VertexId> vs;
        for (EdgeId e : block)
            for (const auto& [v, nb] : s.adj)
                for (auto [w, ee] : nb)
                    if (ee == e) vs.insert(v);
        if (vs.size() != block.size()) ok = false;
    }

    void dfs(VertexId v, EdgeId parent_edge) {
        disc[v] = low[v] = timer++;
        for (auto [w, e] : s.adj.at(v)) {
            if (e == parent_edge) continue;
            if (!disc.count(w)) {
                estack.push_back(e);
                on_stack.insert(e);
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<EdgeId> block;
                    while (!estack.empty()) {
                        EdgeId top = estack.back();
                        estack.pop_back();
                        on_stack.erase(top);
                        block.push_back(top);
                        if (top == e) break;
                    }
                    check_block(block);
                }
            } else if (disc[w] < disc[v] && on_stack.insert(e).second) {
                estack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

bool components_are_cacti(const SubgraphView& s) {
    BlockDfs dfs(s);
    for (const auto& [v, nb] : s.adj)
        if (!dfs.disc.count(v)) dfs.dfs(v, -1);
    return dfs.ok;
}

}  // namespace

bool cacti_check(const LayerDecomposition& d, const PlaneGraph& g) {
    std::vector<int> owner(g.m(), 0);
    for (const auto& layer : d.layers) {
        for (EdgeId e : layer.cycle_edges) owner[e]++;
        for (EdgeId e : layer.ict_edges) owner[e]++;
    }
    for (EdgeId e = 0; e < g.m(); ++e)
        if (owner[e] != 1) return false;

    for (const auto& layer : d.layers) {
        SubgraphView l, m, k;
        for (EdgeId e : layer.cycle_edges) {
            l.add(g, e);
            k.add(g, e);
        }
        for (EdgeId e : layer.ict_edges) {
            m.add(g, e);
            k.add(g, e);
        }
        if (!layer.cycle_edges.empty() && !components_are_cycles(l)) return false;
        if (!layer.ict_edges.empty() && !components_are_forests(m)) return false;
        if (!k.adj.empty() && !components_are_cacti(k)) return false;
    }
    return true;
}

}  // namespace reasm
