#include "reasm/reassembly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace reasm {

namespace {

void postorder_visit(const ReassemblyTree& t, int node, std::vector<int>& order) {
    if (!t.is_leaf(node)) {
        postorder_visit(t, t.nodes[node].left, order);
        postorder_visit(t, t.nodes[node].right, order);
    }
    order.push_back(node);
}

}  // namespace

ReassemblyTree ReassemblyTree::postorder() const {
    std::vector<int> order;
    postorder_visit(*this, root, order);
    std::vector<int> newid(nodes.size(), -1);
    for (size_t i = 0; i < order.size(); ++i) newid[order[i]] = static_cast<int>(i);
    ReassemblyTree out;
    out.nodes.resize(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        const Node& src = nodes[order[i]];
        Node& dst = out.nodes[i];
        dst.leaf = src.leaf;
        dst.left = src.left < 0 ? -1 : newid[src.left];
        dst.right = src.right < 0 ? -1 : newid[src.right];
        dst.parent = src.parent < 0 ? -1 : newid[src.parent];
    }
    out.root = newid[root];
    return out;
}

ValidationReport validate_tree(const PlaneGraph& g, const ReassemblyTree& t) {
    ValidationReport r;
    const int n = g.n();
    if (t.root < 0 || t.root >= t.node_count()) {
        r.diagnostics.push_back("missing root");
        return r;
    }
    if (t.node_count() != 2 * n - 1) {
        r.diagnostics.push_back("node count != 2n-1");
    }
    // Structural pass from the root.
    std::vector<char> seen(t.node_count(), 0);
    std::vector<int> stack{t.root};
    std::vector<char> leaf_seen(n, 0);
    int visited = 0, leaves = 0;
    bool shape_ok = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x < 0 || x >= t.node_count() || seen[x]) {
            shape_ok = false;
            break;
        }
        seen[x] = 1;
        ++visited;
        const auto& nd = t.nodes[x];
        if (nd.leaf >= 0) {
            ++leaves;
            if (nd.left != -1 || nd.right != -1) shape_ok = false;
            if (nd.leaf >= n || leaf_seen[nd.leaf]) {
                r.diagnostics.push_back("leaf vertex invalid or repeated");
                shape_ok = false;
                break;
            }
            leaf_seen[nd.leaf] = 1;
        } else {
            if (nd.left < 0 || nd.right < 0) {
                r.diagnostics.push_back("internal node without two children");
                shape_ok = false;
                break;
            }
            stack.push_back(nd.left);
            stack.push_back(nd.right);
        }
    }
    if (!shape_ok) {
        if (r.diagnostics.empty()) r.diagnostics.push_back("malformed tree shape");
        return r;
    }
    if (visited != t.node_count()) r.diagnostics.push_back("unreachable nodes");
    if (leaves != n) r.diagnostics.push_back("leaf cover incomplete");
    for (int v = 0; v < n; ++v)
        if (!leaf_seen[v]) {
            r.diagnostics.push_back("leaf cover incomplete");
            break;
        }
    r.ok = r.diagnostics.empty();
    return r;
}

AlphaReport alpha_measure(const PlaneGraph& g, const ReassemblyTree& t0) {
    auto vr = validate_tree(g, t0);
    if (!vr.ok) throw InvalidTree(vr.diagnostics.empty() ? "InvalidTree" : vr.diagnostics[0]);
    ReassemblyTree t = t0.postorder();
    const int nn = t.node_count();
    AlphaReport rep;
    rep.per_node_boundary.assign(nn, 0);

    // Small-to-large: per node, the leaf set as a hash set; boundary via
    // boundary(parent) = boundary(l) + boundary(r) - 2 * e(l, r).
    std::vector<std::unordered_set<VertexId>*> sets(nn, nullptr);
    std::vector<std::unordered_set<VertexId>> storage(nn);
    for (int i = 0; i < nn; ++i) {
        const auto& nd = t.nodes[i];
        if (t.is_leaf(i)) {
            storage[i].insert(nd.leaf);
            sets[i] = &storage[i];
            rep.per_node_boundary[i] = g.degree(nd.leaf);
        } else {
            auto* a = sets[nd.left];
            auto* b = sets[nd.right];
            if (a->size() < b->size()) std::swap(a, b);
            int cross = 0;
            for (VertexId v : *b)
                for (EdgeId e : g.ring(v))
                    if (a->count(g.other(e, v))) ++cross;
            rep.per_node_boundary[i] = rep.per_node_boundary[t.nodes[i].left] +
                                       rep.per_node_boundary[t.nodes[i].right] - 2 * cross;
            for (VertexId v : *b) a->insert(v);
            sets[i] = a;
        }
        if (rep.per_node_boundary[i] > rep.alpha) {
            rep.alpha = rep.per_node_boundary[i];
            rep.argmax_node = i;
        }
    }
    if (rep.argmax_node < 0) rep.argmax_node = 0;
    return rep;
}

RoutingTree tree_to_carving(const ReassemblyTree& t0) {
    ReassemblyTree t = t0.postorder();
    int n = 0;
    for (int i = 0; i < t.node_count(); ++i)
        if (t.is_leaf(i)) ++n;
    if (n < 2) throw TooSmall("carving needs n >= 2");
    RoutingTree T;
    T.n = n;
    // Map: leaves -> their vertex id; internal non-root nodes -> n, n+1, ...
    std::vector<int> id(t.node_count(), -1);
    int next = n;
    for (int i = 0; i < t.node_count(); ++i) {
        if (t.is_leaf(i))
            id[i] = t.nodes[i].leaf;
        else if (i != t.root)
            id[i] = next++;
    }
    for (int i = 0; i < t.node_count(); ++i) {
        if (i == t.root || t.is_leaf(i)) continue;
        // branch to each child
        T.branches.push_back({id[i], id[t.nodes[i].left]});
        T.branches.push_back({id[i], id[t.nodes[i].right]});
    }
    // Join the root's children directly.
    T.branches.push_back({id[t.nodes[t.root].left], id[t.nodes[t.root].right]});
    return T;
}

namespace {

// Side of branch b not containing `from`; returns leaf vertex ids.
std::vector<VertexId> branch_side_leaves(const RoutingTree& T, int node, int avoid,
                                         const std::vector<std::vector<int>>& adj) {
    std::vector<VertexId> out;
    std::vector<int> stack{node};
    std::set<int> seen{node, avoid};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x < T.n) out.push_back(x);
        for (int y : adj[x])
            if (!seen.count(y)) {
                seen.insert(y);
                stack.push_back(y);
            }
    }
    return out;
}

std::vector<std::vector<int>> routing_adj(const RoutingTree& T) {
    std::vector<std::vector<int>> adj(T.node_count());
    for (auto [a, b] : T.branches) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// Builds the subtree hanging from `node`, entered from `from`.
int build_subtree(const RoutingTree& T, const std::vector<std::vector<int>>& adj, int node,
                  int from, ReassemblyTree& t) {
    int idx = static_cast<int>(t.nodes.size());
    t.nodes.emplace_back();
    if (node < T.n) {
        t.nodes[idx].leaf = node;
        return idx;
    }
    std::vector<int> kids;
    for (int y : adj[node])
        if (y != from) kids.push_back(y);
    if (kids.size() != 2) throw InternalError("routing tree internal degree != 3");
    int l = build_subtree(T, adj, kids[0], node, t);
    int r = build_subtree(T, adj, kids[1], node, t);
    t.nodes[idx].left = l;
    t.nodes[idx].right = r;
    t.nodes[l].parent = idx;
    t.nodes[r].parent = idx;
    return idx;
}

}  // namespace

std::vector<ReassemblyTree> carving_to_trees(const RoutingTree& T) {
    auto adj = routing_adj(T);
    std::vector<ReassemblyTree> out;
    for (auto [a, b] : T.branches) {
        ReassemblyTree t;
        t.nodes.emplace_back();  // fresh root above the branch
        t.root = 0;
        int l = build_subtree(T, adj, a, b, t);
        int r = build_subtree(T, adj, b, a, t);
        t.nodes[0].left = l;
        t.nodes[0].right = r;
        t.nodes[l].parent = 0;
        t.nodes[r].parent = 0;
        out.push_back(t.postorder());
    }
    return out;
}

int carving_width(const PlaneGraph& g, const RoutingTree& T) {
    auto adj = routing_adj(T);
    int width = 0;
    for (auto [a, b] : T.branches) {
        auto side = branch_side_leaves(T, a, b, adj);
        std::set<VertexId> in(side.begin(), side.end());
        int cut = 0;
        for (VertexId v : side)
            for (EdgeId e : g.ring(v))
                if (!in.count(g.other(e, v))) ++cut;
        width = std::max(width, cut);
    }
    return width;
}

namespace {

// Working form for normalization: explicit leaf sets per node.
struct WorkTree {
    struct N {
        int left = -1, right = -1, parent = -1;
        VertexId leaf = -1;
        std::vector<uint64_t> bits;  // leaf set bitmask
    };
    std::vector<N> nodes;
    int root = -1;
    int words = 0;

    static WorkTree from(const ReassemblyTree& t, int n) {
        WorkTree w;
        w.words = (n + 63) / 64;
        w.nodes.resize(t.node_count());
        for (int i = 0; i < t.node_count(); ++i) {
            w.nodes[i].left = t.nodes[i].left;
            w.nodes[i].right = t.nodes[i].right;
            w.nodes[i].parent = t.nodes[i].parent;
            w.nodes[i].leaf = t.nodes[i].leaf;
            w.nodes[i].bits.assign(w.words, 0);
        }
        w.root = t.root;
        w.fill(w.root);
        return w;
    }

    void fill(int x) {
        auto& nd = nodes[x];
        if (nd.leaf >= 0) {
            nd.bits[nd.leaf / 64] |= 1ull << (nd.leaf % 64);
            return;
        }
        fill(nd.left);
        fill(nd.right);
        for (int w = 0; w < words; ++w)
            nd.bits[w] = nodes[nd.left].bits[w] | nodes[nd.right].bits[w];
    }

    ReassemblyTree to_tree() const {
        ReassemblyTree t;
        t.nodes.resize(nodes.size());
        for (size_t i = 0; i < nodes.size(); ++i) {
            t.nodes[i].left = nodes[i].left;
            t.nodes[i].right = nodes[i].right;
            t.nodes[i].parent = nodes[i].parent;
            t.nodes[i].leaf = nodes[i].leaf;
        }
        t.root = root;
        return t;
    }
};

int cross_edges(const PlaneGraph& g, const std::vector<uint64_t>& a,
                const std::vector<uint64_t>& b) {
    int cnt = 0;
    for (EdgeId e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        bool ua = a[u / 64] >> (u % 64) & 1, ub = b[u / 64] >> (u % 64) & 1;
        bool va = a[v / 64] >> (v % 64) & 1, vb = b[v / 64] >> (v % 64) & 1;
        if ((ua && vb) || (va && ub)) ++cnt;
    }
    return cnt;
}

}  // namespace

namespace {

std::set<std::vector<VertexId>> cluster_family(const ReassemblyTree& t) {
    std::set<std::vector<VertexId>> fam;
    std::function<std::vector<VertexId>(int)> collect = [&](int x) {
        std::vector<VertexId> vs;
        if (t.is_leaf(x)) {
            vs.push_back(t.nodes[x].leaf);
        } else {
            vs = collect(t.nodes[x].left);
            auto r = collect(t.nodes[x].right);
            vs.insert(vs.end(), r.begin(), r.end());
            std::sort(vs.begin(), vs.end());
        }
        fam.insert(vs);
        return vs;
    };
    collect(t.root);
    return fam;
}

}  // namespace

bool same_cluster_family(const ReassemblyTree& a, const ReassemblyTree& b) {
    return cluster_family(a) == cluster_family(b);
}

int count_zero_merges(const PlaneGraph& g, const ReassemblyTree& t) {
    WorkTree w = WorkTree::from(t, g.n());
    int zeros = 0;
    for (size_t i = 0; i < w.nodes.size(); ++i) {
        const auto& nd = w.nodes[i];
        if (nd.leaf >= 0) continue;
        if (cross_edges(g, w.nodes[nd.left].bits, w.nodes[nd.right].bits) == 0) ++zeros;
    }
    return zeros;
}

ReassemblyTree normalize_no_zero_merges(const PlaneGraph& g, const ReassemblyTree& t0,
                                        int* iterations_out) {
    if (!is_connected(g)) throw Disconnected();
    auto vr = validate_tree(g, t0);
    if (!vr.ok) throw InvalidTree();
    WorkTree w = WorkTree::from(t0, g.n());

    auto refresh = [&](WorkTree& wt) {
        for (auto& nd : wt.nodes)
            std::fill(nd.bits.begin(), nd.bits.end(), 0ull);
        wt.fill(wt.root);
    };
    auto zero_count = [&](const WorkTree& wt) {
        int z = 0;
        for (const auto& nd : wt.nodes)
            if (nd.leaf < 0 &&
                cross_edges(g, wt.nodes[nd.left].bits, wt.nodes[nd.right].bits) == 0)
                ++z;
        return z;
    };
    auto alpha_of = [&](const WorkTree& wt) {
        int a = 0;
        for (const auto& nd : wt.nodes) {
            int b = 0;
            for (EdgeId e = 0; e < g.m(); ++e) {
                auto [u, v] = g.edge(e);
                bool ui = nd.bits[u / 64] >> (u % 64) & 1;
                bool vi = nd.bits[v / 64] >> (v % 64) & 1;
                if (ui != vi) ++b;
            }
            a = std::max(a, b);
        }
        return a;
    };
    auto depth_of = [&](const WorkTree& wt, int x) {
        int d = 0;
        while (wt.nodes[x].parent >= 0) {
            x = wt.nodes[x].parent;
            ++d;
        }
        return d;
    };
    auto set_children = [](WorkTree& wt, int p, int a, int b) {
        wt.nodes[p].left = a;
        wt.nodes[p].right = b;
        wt.nodes[a].parent = p;
        wt.nodes[b].parent = p;
    };

    // Detach `moved` (child of `pivot`), splice its sibling into pivot's
    // place, then re-graft: pivot becomes the new parent of (target, moved)
    // sitting where `target` was.
    auto graft = [&](WorkTree& wt, int pivot, int moved, int target) {
        int stay = wt.nodes[pivot].left == moved ? wt.nodes[pivot].right : wt.nodes[pivot].left;
        int gp = wt.nodes[pivot].parent;
        wt.nodes[stay].parent = gp;
        if (gp >= 0) {
            (wt.nodes[gp].left == pivot ? wt.nodes[gp].left : wt.nodes[gp].right) = stay;
        } else {
            wt.root = stay;
        }
        int tp = wt.nodes[target].parent;
        if (tp >= 0) {
            (wt.nodes[tp].left == target ? wt.nodes[tp].left : wt.nodes[tp].right) = pivot;
        } else {
            wt.root = pivot;
        }
        wt.nodes[pivot].parent = tp;
        set_children(wt, pivot, target, moved);
        refresh(wt);
    };

    // Spine re-threading at a zero merge: the displaced child re-attaches at the
    // first spine cluster it connects to.
    auto rethread = [&](WorkTree& wt, int pivot, int x1, int x2) -> bool {
        std::vector<int> spine, ancestors;
        int cur = pivot;
        while (wt.nodes[cur].parent >= 0) {
            int p = wt.nodes[cur].parent;
            spine.push_back(wt.nodes[p].left == cur ? wt.nodes[p].right : wt.nodes[p].left);
            ancestors.push_back(p);
            cur = p;
        }
        if (spine.empty()) return false;
        if (cross_edges(g, wt.nodes[x1].bits, wt.nodes[spine[0]].bits) == 0) return false;
        int kidx = -1;
        for (size_t j = 0; j < spine.size(); ++j)
            if (cross_edges(g, wt.nodes[x2].bits, wt.nodes[spine[j]].bits) >= 1) {
                kidx = static_cast<int>(j);
                break;
            }
        if (kidx < 0) return false;
        int left_acc;
        if (kidx == 0) {
            left_acc = x1;
        } else {
            set_children(wt, ancestors[0], x1, spine[0]);
            for (int j = 1; j < kidx; ++j) set_children(wt, ancestors[j], ancestors[j - 1], spine[j]);
            left_acc = ancestors[kidx - 1];
        }
        set_children(wt, pivot, x2, spine[kidx]);
        set_children(wt, ancestors[kidx], left_acc, pivot);
        refresh(wt);
        return true;
    };

    const int alpha_in = alpha_of(w);
    int zeros = zero_count(w);
    auto highest_zero_depth = [&](const WorkTree& wt) {
        int best = INT32_MAX;
        for (size_t i = 0; i < wt.nodes.size(); ++i) {
            const auto& nd = wt.nodes[i];
            if (nd.leaf >= 0) continue;
            if (cross_edges(g, wt.nodes[nd.left].bits, wt.nodes[nd.right].bits) == 0)
                best = std::min(best, depth_of(wt, static_cast<int>(i)));
        }
        return best;
    };

    const int n = g.n();
    const int cap = 8 * n * n + 16;
    int reductions = 0;  // count-decreasing repairs; relocations are sub-steps
    for (int step = 0; step < cap && zeros > 0; ++step) {
        std::vector<int> zs;
        for (size_t i = 0; i < w.nodes.size(); ++i) {
            const auto& nd = w.nodes[i];
            if (nd.leaf >= 0) continue;
            if (cross_edges(g, w.nodes[nd.left].bits, w.nodes[nd.right].bits) == 0)
                zs.push_back(static_cast<int>(i));
        }
        std::sort(zs.begin(), zs.end(),
                  [&](int a, int b) { return depth_of(w, a) < depth_of(w, b); });
        const int cur_depth = depth_of(w, zs[0]);

        // Tier 1: strictly fewer zero merges. Tier 2: same count, but the
        // highest zero merge moves strictly closer to the root (where it is
        // always resolvable). Both respect alpha_in.
        WorkTree best;
        std::pair<int, int> best_key{INT32_MAX, INT32_MAX};
        bool have_tier1 = false, have_tier2 = false;
        auto consider = [&](WorkTree&& cand) {
            int cz = zero_count(cand), ca = alpha_of(cand);
            if (ca > alpha_in) return;
            if (cz < zeros) {
                std::pair<int, int> key{cz, ca};
                if (!have_tier1 || key < best_key) {
                    best_key = key;
                    best = std::move(cand);
                    have_tier1 = true;
                }
            } else if (!have_tier1 && cz == zeros && highest_zero_depth(cand) < cur_depth) {
                std::pair<int, int> key{cz, ca};
                if (!have_tier2 || key < best_key) {
                    best_key = key;
                    best = std::move(cand);
                    have_tier2 = true;
                }
            }
        };

        // Descendant test via bitmask containment of leaf sets.
        auto inside = [&](const WorkTree& wt, int node, int anc) {
            for (int ww = 0; ww < wt.words; ++ww)
                if (wt.nodes[node].bits[ww] & ~wt.nodes[anc].bits[ww]) return false;
            return true;
        };

        for (int pivot : zs) {
            for (int moved : {w.nodes[pivot].right, w.nodes[pivot].left}) {
                int stay = w.nodes[pivot].left == moved ? w.nodes[pivot].right
                                                        : w.nodes[pivot].left;
                // Grafts onto any cluster connected to `moved` and disjoint
                // from it (not a descendant, not pivot itself).
                for (size_t i = 0; i < w.nodes.size(); ++i) {
                    int tgt = static_cast<int>(i);
                    if (tgt == pivot || tgt == moved || tgt == w.root) continue;
                    bool overlap = false;
                    for (int ww = 0; ww < w.words; ++ww)
                        if (w.nodes[tgt].bits[ww] & w.nodes[moved].bits[ww]) overlap = true;
                    if (overlap) continue;
                    if (inside(w, tgt, moved)) continue;
                    if (cross_edges(g, w.nodes[tgt].bits, w.nodes[moved].bits) == 0) continue;
                    WorkTree cand = w;
                    graft(cand, pivot, moved, tgt);
                    consider(std::move(cand));
                }
                // Spine re-thread.
                WorkTree cand = w;
                if (rethread(cand, pivot, stay, moved)) consider(std::move(cand));
            }
            if (have_tier1) break;
        }
        if (!have_tier1 && !have_tier2) {
            // Carving re-rootings preserve width and can unlock the search.
            RoutingTree T = tree_to_carving(w.to_tree());
            for (auto& t2 : carving_to_trees(T)) consider(WorkTree::from(t2, n));
        }
        if (!have_tier1 && !have_tier2)
            throw InternalError("no admissible zero-merge repair move");
        w = std::move(best);
        if (best_key.first < zeros) ++reductions;
        zeros = best_key.first;
    }
    if (zeros > 0) throw InternalError("normalization failed to terminate");
    if (iterations_out) *iterations_out = reductions;
    return w.to_tree();
}

}  // namespace reasm
