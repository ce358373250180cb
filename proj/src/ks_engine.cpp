#include "reasm/ks_engine.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace reasm {

// ---------------------------------------------------------------------------
// ContractionState queries
// ---------------------------------------------------------------------------

std::vector<VertexId> ContractionState::cycle_ring_current(int cycle) const {
    std::vector<VertexId> seq;
    for (Dart d : dec.cycles[cycle].ring) {
        EdgeId e = dart_edge(d);
        if (!mg.edge_alive(e) || !edge_in_scope(e)) continue;
        seq.push_back(mg.dart_origin(d));
    }
    std::vector<VertexId> out;
    for (VertexId v : seq)
        if (out.empty() || out.back() != v) out.push_back(v);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

std::vector<int> ContractionState::cycles_at(VertexId v) const {
    std::set<int> ids;
    for (Dart d : mg.ring_of(v)) {
        EdgeId e = dart_edge(d);
        if (!mg.edge_alive(e) || !edge_in_scope(e)) continue;
        if (dec.edge_cycle[e] >= 0) ids.insert(dec.edge_cycle[e]);
    }
    return {ids.begin(), ids.end()};
}

int ContractionState::inmost(VertexId v) const {
    int best = -1;
    for (int c : cycles_at(v)) {
        if (best < 0 || dec.cycles[c].level > dec.cycles[best].level)
            best = c;
        else if (dec.cycles[c].level == dec.cycles[best].level)
            throw InternalError("two straddled cycles at the same level");
    }
    return best;
}

bool ContractionState::is_ict_leaf(VertexId v) const {
    for (Dart d : mg.ring_of(v)) {
        EdgeId e = dart_edge(d);
        if (!mg.edge_alive(e) || !edge_in_scope(e)) continue;
        if (dec.edge_ict[e] >= 0) return true;
    }
    return false;
}

std::vector<VertexId> ContractionState::ict_current_leaves(int ict) const {
    const auto& t = dec.icts[ict];
    std::set<VertexId> internal(t.internal.begin(), t.internal.end());
    std::set<VertexId> out;
    for (const auto& [u, v] : t.edge_ends) {
        if (!internal.count(u)) out.insert(mg.current(u));
        if (!internal.count(v)) out.insert(mg.current(v));
    }
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Eligibility
// ---------------------------------------------------------------------------

namespace {

std::optional<CollapseEligibility> check_collapse(const ContractionState& s, int ti) {
    const auto& t = s.dec.icts[ti];
    if (t.collapsed) return std::nullopt;
    // C.1: outside-in gating on every cycle this tree hangs inside of.
    for (int c : t.gate_cycles) {
        const auto& cyc = s.dec.cycles[c];
        if (cyc.outside_collapsed < cyc.outside_total - 1) return std::nullopt;
    }
    // C.2: all leaves but at most one outward ordinary are consecutive
    // siblings, each a super vertex or an inward ordinary vertex.
    std::vector<VertexId> leaves = s.ict_current_leaves(ti);
    std::vector<VertexId> outward_ord, siblings;
    for (VertexId w : leaves) {
        if (s.acts_ordinary(w) && s.dec.vclass[w] == VClass::outward)
            outward_ord.push_back(w);
        else
            siblings.push_back(w);
    }
    if (outward_ord.size() > 1 || siblings.empty()) return std::nullopt;
    int X = -1;
    for (VertexId w : siblings) {
        int im = s.inmost(w);
        if (im < 0) return std::nullopt;
        if (X < 0) X = im;
        if (im != X) return std::nullopt;
    }
    // Consecutive run on X's current ring; vertices of no tree may interleave.
    std::vector<VertexId> ring = s.cycle_ring_current(X);
    std::set<VertexId> sibs(siblings.begin(), siblings.end());
    int present = 0;
    for (VertexId v : ring)
        if (sibs.count(v)) ++present;
    if (present < static_cast<int>(siblings.size())) return std::nullopt;
    std::vector<size_t> pos;
    for (size_t i = 0; i < ring.size(); ++i)
        if (sibs.count(ring[i])) pos.push_back(i);
    int breaking = 0;
    const size_t r = ring.size();
    for (size_t pi = 0; pi < pos.size(); ++pi) {
        size_t from = pos[pi], to = pos[(pi + 1) % pos.size()];
        for (size_t q = (from + 1) % r; q != to; q = (q + 1) % r) {
            VertexId v = ring[q];
            bool skippable = s.acts_ordinary(v) && s.dec.vclass[v] == VClass::none &&
                             !s.is_ict_leaf(v);
            if (!skippable) {
                ++breaking;
                break;
            }
        }
        if (pos.size() == 1) break;
    }
    if (breaking > 1) return std::nullopt;

    CollapseEligibility el;
    el.ict = ti;
    el.type_a = outward_ord.empty();
    el.root = el.type_a ? -1 : outward_ord[0];
    el.cycle = X;
    for (size_t i : pos) el.consecutive_run.push_back(ring[i]);
    return el;
}

}  // namespace

std::vector<CollapseEligibility> collapse_eligible(const ContractionState& s) {
    std::vector<int> order;
    for (size_t i = 0; i < s.dec.icts.size(); ++i) order.push_back(static_cast<int>(i));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return s.dec.icts[a].level > s.dec.icts[b].level;
    });
    std::vector<CollapseEligibility> out;
    for (int ti : order)
        if (auto el = check_collapse(s, ti)) out.push_back(*el);
    return out;
}

namespace {

// Clockwise neighbor of v on cycle X: head of the first live outgoing ring
// dart in the cycle's canonical order; -1 if none.
VertexId clockwise_head(const ContractionState& s, VertexId v, int X) {
    for (Dart d : s.dec.cycles[X].ring) {
        EdgeId e = dart_edge(d);
        if (!s.mg.edge_alive(e) || !s.edge_in_scope(e)) continue;
        if (s.mg.dart_origin(d) == v) return s.mg.dart_head(d);
    }
    return -1;
}

std::optional<MergeAction> find_merge(const ContractionState& s, VertexId phi) {
    if (phi >= s.mg.id_count() || !s.mg.vertex_alive(phi) || !s.in_scope(phi)) return std::nullopt;
    if (s.acts_ordinary(phi)) return std::nullopt;

    // Case 5 first: a vertex with self-loops is its own clockwise neighbor;
    // contracting them never waits on the leaf restriction.
    std::vector<EdgeId> loops;
    for (Dart d : s.mg.ring_of(phi)) {
        EdgeId e = dart_edge(d);
        if ((d & 1) == 1) continue;  // count each loop once
        if (s.mg.edge_alive(e) && s.edge_in_scope(e) && s.mg.is_loop(e)) loops.push_back(e);
    }
    if (!loops.empty()) {
        std::sort(loops.begin(), loops.end());
        return MergeAction{phi, phi, 5, loops};
    }

    if (s.is_ict_leaf(phi)) return std::nullopt;
    int X = s.inmost(phi);
    if (X < 0) return std::nullopt;

    std::vector<VertexId> heads;
    for (Dart d : s.dec.cycles[X].ring) {
        EdgeId e = dart_edge(d);
        if (!s.mg.edge_alive(e) || !s.edge_in_scope(e)) continue;
        if (s.mg.dart_origin(d) != phi) continue;
        VertexId h = s.mg.dart_head(d);
        if (std::find(heads.begin(), heads.end(), h) == heads.end()) heads.push_back(h);
    }
    for (VertexId mu : heads) {
        if (mu == phi) continue;  // loop already handled
        int mcase;
        if (s.acts_ordinary(mu)) {
            if (s.dec.vclass[mu] == VClass::outward) {
                int Y = s.dec.cyc_of[mu];
                if (Y < 0 || clockwise_head(s, mu, Y) != phi) continue;  // D.2 fails
                mcase = 2;
            } else {
                mcase = 1;
            }
        } else {
            int Ym = s.inmost(mu);
            mcase = (Ym >= 0 && clockwise_head(s, mu, Ym) == phi) ? 4 : 3;
        }
        MergeAction act;
        act.phi = phi;
        act.mu = mu;
        act.merge_case = mcase;
        for (Dart d : s.mg.ring_of(phi)) {
            EdgeId e = dart_edge(d);
            if (!s.mg.edge_alive(e) || !s.edge_in_scope(e)) continue;
            if (s.mg.dart_head(d) != mu) continue;
            if (s.dec.edge_ict[e] >= 0) throw InternalError("ICT edge between merge pair");
            if (std::find(act.edges.begin(), act.edges.end(), e) == act.edges.end())
                act.edges.push_back(e);
        }
        std::sort(act.edges.begin(), act.edges.end());
        if (act.edges.empty()) throw InternalError("merge without connecting edges");
        return act;
    }
    return std::nullopt;
}

}  // namespace

std::vector<MergeAction> merge_eligible(const ContractionState& s) {
    std::vector<MergeAction> out;
    for (VertexId v = s.dec_threshold; v < s.mg.id_count(); ++v)
        if (auto act = find_merge(s, v)) out.push_back(*act);
    return out;
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

namespace {

struct Engine {
    const PlaneGraph& g;
    ContractionState st;
    KsTrace trace;
    KsObserver observer;
    int comp_index = 0;
    int round = 0;
    bool round_emitted = false;

    explicit Engine(const PlaneGraph& gr) : g(gr) {
        st.mg = PlaneMultigraph(g);
        st.nodes.resize(g.n());
        st.scope.assign(g.n(), 0);
        for (VertexId v = 0; v < g.n(); ++v) {
            st.nodes[v].leaf = v;
            st.nodes[v].boundary = g.degree(v);
        }
        st.mg.on_contract = [this](VertexId c, VertexId a, VertexId b) {
            if (static_cast<int>(st.nodes.size()) <= c) st.nodes.resize(c + 1);
            st.nodes[c].left = a;
            st.nodes[c].right = b;
            st.nodes[c].boundary = st.mg.degree(c);
            st.nodes[c].from_collapse = pending_round_collapse;
            if (static_cast<int>(st.scope.size()) <= c) st.scope.resize(c + 1, 0);
            st.scope[c] = st.in_scope(a) || st.in_scope(b);
        };
    }

    void emit(KsTrace::Event ev) {
        ev.component = comp_index;
        trace.events.push_back(std::move(ev));
        if (observer) observer(st, trace.events.back());
    }

    void begin_round(bool collapse) {
        ++round;
        round_emitted = false;
        pending_round_collapse = collapse;
    }
    bool pending_round_collapse = false;
    void note_action() {
        if (round_emitted) return;
        round_emitted = true;
        KsTrace::Event ev;
        ev.kind = KsTrace::Event::Kind::round;
        ev.round = round;
        ev.collapse_round = pending_round_collapse;
        emit(std::move(ev));
    }

    void start_run(const std::vector<VertexId>& verts) {
        st.scope.assign(st.mg.id_count(), 0);
        for (VertexId v : verts) st.scope[v] = 1;
        st.dec_threshold = st.mg.id_count();
        st.dec = engine_decompose(st.mg, verts);
        round = 0;
    }

    std::pair<int, int> scope_live() const {
        int lv = 0, le = 0;
        for (VertexId v = 0; v < st.mg.id_count(); ++v)
            if (st.mg.vertex_alive(v) && st.in_scope(v)) ++lv;
        for (EdgeId e = 0; e < st.mg.edge_count(); ++e)
            if (st.mg.edge_alive(e) && st.edge_in_scope(e)) ++le;
        return {lv, le};
    }

    void do_collapse(int ti, const CollapseEligibility& el) {
        auto [result, contracted] = collapse_tree(st, el);
        KsTrace::Event ev;
        ev.kind = KsTrace::Event::Kind::collapse;
        ev.round = round;
        ev.ict = ti;
        ev.result = result;
        ev.contracted = std::move(contracted);
        emit(std::move(ev));
    }

    bool collapse_round_exec() {
        // Round-start eligibility snapshot, deepest level first, id ascending.
        std::vector<int> snapshot;
        {
            std::vector<int> order;
            for (size_t i = 0; i < st.dec.icts.size(); ++i) order.push_back(static_cast<int>(i));
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return st.dec.icts[a].level > st.dec.icts[b].level;
            });
            for (int ti : order)
                if (check_collapse(st, ti)) snapshot.push_back(ti);
        }
        bool any = false;
        for (int ti : snapshot) {
            auto el = check_collapse(st, ti);
            if (!el) continue;  // invalidated within the round
            note_action();
            do_collapse(ti, *el);
            any = true;
        }
        return any;
    }

    VertexId do_merge(const MergeAction& act) {
        KsTrace::Event ev;
        ev.kind = KsTrace::Event::Kind::merge;
        ev.round = round;
        ev.merge_case = act.merge_case;
        ev.a = act.phi;
        ev.b = act.mu;
        ev.contracted = act.edges;
        VertexId result;
        if (act.merge_case == 5) {
            for (EdgeId e : act.edges) st.mg.delete_loop(e);
            result = act.phi;
            ev.result = -1;
        } else {
            result = st.mg.contract_edge(act.edges[0]);
            for (size_t i = 1; i < act.edges.size(); ++i) st.mg.delete_loop(act.edges[i]);
            st.nodes[result].boundary = st.mg.degree(result);
            ev.result = result;
        }
        emit(std::move(ev));
        return result;
    }

    bool merge_round_exec() {
        bool any = false;
        bool progress = true;
        while (progress) {
            progress = false;
            std::vector<VertexId> cands;
            for (VertexId v = st.dec_threshold; v < st.mg.id_count(); ++v)
                if (st.mg.vertex_alive(v) && st.in_scope(v)) cands.push_back(v);
            for (VertexId phi : cands) {
                VertexId cur = phi;
                while (cur >= 0 && st.mg.vertex_alive(cur)) {
                    auto act = find_merge(st, cur);
                    if (!act) break;
                    note_action();
                    cur = do_merge(*act);
                    any = progress = true;
                }
            }
        }
        return any;
    }

    VertexId run_component(const std::vector<VertexId>& verts) {
        start_run(verts);
        while (true) {
            auto [lv, le] = scope_live();
            if (le == 0) {
                if (lv != 1) throw InternalError("component did not contract to one vertex");
                break;
            }
            begin_round(true);
            bool a = collapse_round_exec();
            begin_round(false);
            bool b = merge_round_exec();
            if (!a && !b) throw InternalError("KS made no progress in a round pair");
        }
        for (VertexId v : verts)
            return st.mg.current(v);
        throw InternalError("empty component");
    }

    ReassemblyTree build_tree(VertexId root) const {
        ReassemblyTree t;
        t.nodes.resize(st.nodes.size());
        for (size_t i = 0; i < st.nodes.size(); ++i) {
            t.nodes[i].left = st.nodes[i].left;
            t.nodes[i].right = st.nodes[i].right;
            t.nodes[i].leaf = st.nodes[i].leaf;
            if (st.nodes[i].left >= 0) {
                t.nodes[st.nodes[i].left].parent = static_cast<int>(i);
                t.nodes[st.nodes[i].right].parent = static_cast<int>(i);
            }
        }
        t.root = root;
        return t;
    }
};

}  // namespace

ContractionState make_initial_state(const PlaneGraph& g) {
    Engine eng(g);
    std::vector<VertexId> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    eng.start_run(all);
    eng.st.mg.on_contract = nullptr;  // inspection state does not build nodes
    return std::move(eng.st);
}

std::pair<VertexId, std::vector<EdgeId>> collapse_tree(ContractionState& s,
                                                       const CollapseEligibility& el) {
    auto check = check_collapse(s, el.ict);
    if (!check) throw NotEligible();
    auto& t = s.dec.icts[el.ict];
    std::set<VertexId> internal(t.internal.begin(), t.internal.end());
    std::vector<EdgeId> contracted;
    auto contract_tree_edge = [&](EdgeId e) {
        auto [a, b] = s.mg.edge_ends(e);
        if (a == b)
            s.mg.delete_loop(e);
        else
            s.mg.contract_edge(e);
        contracted.push_back(e);
    };
    auto dec_other = [&](size_t idx, VertexId v) {
        const auto& [u, w] = t.edge_ends[idx];
        return u == v ? w : u;
    };

    // Start at the upper-leftmost non-root sibling's leaf anchor.
    VertexId start = -1;
    size_t start_edge_idx = 0;
    for (size_t idx = 0; idx < t.edges.size(); ++idx) {
        for (VertexId cand : {t.edge_ends[idx].first, t.edge_ends[idx].second}) {
            if (internal.count(cand)) continue;
            VertexId cur = s.mg.current(cand);
            if (!el.type_a && cur == el.root) continue;
            if (start < 0) {
                start = cand;
                start_edge_idx = idx;
                continue;
            }
            Point a = s.mg.rep_coord(cur), b = s.mg.rep_coord(s.mg.current(start));
            bool better = a.x < b.x || (a.x == b.x && a.y > b.y) ||
                          (a.x == b.x && a.y == b.y && cand < start);
            if (better) {
                start = cand;
                start_edge_idx = idx;
            }
        }
    }
    if (start < 0) throw NotEligible("collapse without a sibling start leaf");

    // Postorder traversal: left subtree, right subtree, then contract the
    // child edges at each internal vertex; left/right from the rotation ring
    // clockwise after the arrival edge.
    std::function<void(VertexId, EdgeId)> walk = [&](VertexId v, EdgeId arrival) {
        auto ring = s.mg.ring_of(v);
        int pos = -1;
        for (size_t i = 0; i < ring.size(); ++i)
            if (dart_edge(ring[i]) == arrival) {
                pos = static_cast<int>(i);
                break;
            }
        if (pos < 0) throw InternalError("arrival edge missing from ring");
        std::vector<EdgeId> kids;
        for (size_t off = 1; off < ring.size(); ++off) {
            EdgeId e = dart_edge(ring[(pos + off) % ring.size()]);
            if (e != arrival && s.dec.edge_ict[e] == el.ict &&
                std::find(kids.begin(), kids.end(), e) == kids.end())
                kids.push_back(e);
        }
        for (EdgeId e : kids) {
            size_t idx = std::find(t.edges.begin(), t.edges.end(), e) - t.edges.begin();
            VertexId w = dec_other(idx, v);
            if (internal.count(w)) walk(w, e);
        }
        for (EdgeId e : kids) contract_tree_edge(e);
    };

    if (t.edges.size() == 1) {
        contract_tree_edge(t.edges[0]);
    } else {
        EdgeId e1 = t.edges[start_edge_idx];
        VertexId v1 = dec_other(start_edge_idx, start);
        if (internal.count(v1)) walk(v1, e1);
        contract_tree_edge(e1);
    }

    t.collapsed = true;
    for (int c : t.outward_cycles) s.dec.cycles[c].outside_collapsed++;
    // Fresh supers stay in scope (the engine path also sets this via its hook).
    if (static_cast<int>(s.scope.size()) < s.mg.id_count())
        s.scope.resize(s.mg.id_count(), 1);
    return {s.mg.current(t.edge_ends[0].first), contracted};
}

KsResult run_ks(const PlaneGraph& g, const KsObserver& observer) {
    if (!g.three_regular()) throw NotThreeRegular();
    if (!is_biconnected(g)) throw NotBiconnected();
    Engine eng(g);
    eng.observer = observer;
    std::vector<VertexId> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    eng.start_run(all);
    if (eng.st.dec.k < 2) throw BadOuterplanarity();
    int k = eng.st.dec.k;
    VertexId root = eng.run_component(all);
    KsResult res;
    res.tree = eng.build_tree(root).postorder();
    res.trace = std::move(eng.trace);
    res.k = k;
    return res;
}

KsResult run_ks_lifted(const PlaneGraph& g, const KsObserver& observer) {
    if (!g.three_regular()) throw NotThreeRegular();
    if (!is_connected(g)) throw Disconnected();
    std::vector<EdgeId> bridges = find_bridges(g);
    if (bridges.empty()) return run_ks(g, observer);

    const int k_global = edge_outerplanarity(g);

    // Components of E minus bridges with >= 2 vertices; the rest are
    // junction vertices absorbed during bridge contraction.
    std::vector<char> is_bridge(g.m(), 0);
    for (EdgeId e : bridges) is_bridge[e] = 1;
    std::vector<int> comp_of(g.n(), -1);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId v0 = 0; v0 < g.n(); ++v0) {
        if (comp_of[v0] >= 0) continue;
        std::vector<VertexId> comp{v0};
        comp_of[v0] = static_cast<int>(comps.size());
        for (size_t i = 0; i < comp.size(); ++i)
            for (EdgeId e : g.ring(comp[i])) {
                if (is_bridge[e]) continue;
                VertexId w = g.other(e, comp[i]);
                if (comp_of[w] < 0) {
                    comp_of[w] = static_cast<int>(comps.size());
                    comp.push_back(w);
                }
            }
        if (comp.size() >= 2) {
            comps.push_back(std::move(comp));
        } else {
            comp_of[v0] = -1;  // junction vertex
        }
    }

    Engine eng(g);
    eng.observer = observer;
    std::vector<char> done(comps.size(), 0);
    VertexId last_root = -1;

    auto current_set = [&](int c) {
        std::set<VertexId> cur;
        for (VertexId v : comps[c]) cur.insert(eng.st.mg.current(v));
        return std::vector<VertexId>(cur.begin(), cur.end());
    };
    auto boundary_of = [&](const std::vector<VertexId>& verts) {
        std::set<VertexId> in(verts.begin(), verts.end());
        std::set<EdgeId> out_edges;
        for (VertexId v : verts)
            for (Dart d : eng.st.mg.ring_of(v)) {
                EdgeId e = dart_edge(d);
                if (!eng.st.mg.edge_alive(e)) continue;
                if (!in.count(eng.st.mg.dart_head(d))) out_edges.insert(e);
            }
        return std::vector<EdgeId>(out_edges.begin(), out_edges.end());
    };

    for (size_t step = 0; step < comps.size(); ++step) {
        int pick = -1;
        std::vector<VertexId> verts;
        std::vector<EdgeId> out;
        for (size_t c = 0; c < comps.size(); ++c) {
            if (done[c]) continue;
            auto vs = current_set(static_cast<int>(c));
            auto oe = boundary_of(vs);
            if (oe.size() <= 1) {
                pick = static_cast<int>(c);
                verts = std::move(vs);
                out = std::move(oe);
                break;
            }
        }
        if (pick < 0) throw InternalError("no component with boundary <= 1");
        eng.comp_index = pick;
        VertexId phi = eng.run_component(verts);
        done[pick] = 1;
        last_root = phi;

        if (!out.empty()) {
            // Contract the dangling bridge, then one more incident edge to
            // restore a degree-3 vertex.
            EdgeId be = out[0];
            if (!eng.st.mg.edge_alive(be)) throw InternalError("stale bridge");
            auto [u, v] = eng.st.mg.edge_ends(be);
            VertexId mu = (u == phi) ? v : u;
            VertexId c1 = eng.st.mg.contract_edge(be);
            {
                KsTrace::Event ev;
                ev.kind = KsTrace::Event::Kind::bridge;
                ev.a = phi;
                ev.b = mu;
                ev.result = c1;
                ev.contracted = {be};
                eng.emit(std::move(ev));
            }
            if (eng.st.mg.degree(c1) != 2) throw InternalError("bridge endpoint degree != 3");
            EdgeId e2 = -1;
            VertexId best_xi = -1;
            for (Dart d : eng.st.mg.ring_of(c1)) {
                EdgeId e = dart_edge(d);
                if (!eng.st.mg.edge_alive(e) || eng.st.mg.is_loop(e)) continue;
                VertexId xi = eng.st.mg.dart_head(d);
                if (e2 < 0 || xi < best_xi || (xi == best_xi && e < e2)) {
                    e2 = e;
                    best_xi = xi;
                }
            }
            VertexId c2 = eng.st.mg.contract_edge(e2);
            {
                KsTrace::Event ev;
                ev.kind = KsTrace::Event::Kind::bridge;
                ev.a = c1;
                ev.b = best_xi;
                ev.result = c2;
                ev.contracted = {e2};
                eng.emit(std::move(ev));
            }
            if (eng.st.mg.degree(c2) != 3) throw InternalError("fixup vertex degree != 3");
            last_root = c2;
        }
    }
    if (eng.st.mg.live_vertex_count() != 1) throw InternalError("leftover vertices after lifting");

    KsResult res;
    res.tree = eng.build_tree(last_root).postorder();
    res.trace = std::move(eng.trace);
    res.k = k_global;
    return res;
}

}  // namespace reasm
