#pragma once

#include <set>
#include <string>
#include <vector>

#include "reasm/ks_engine.hpp"

namespace reasm::testing {

/// Trace-time invariant checker: round parity, loop elimination after merge
/// rounds, nesting chains, sibling-chain comparability for eligible trees,
/// designation invariance and the 2k degree cap.
struct KsInvariantChecker {
    int two_k = 0;  // 2 * edge outerplanarity of the input
    std::vector<std::string> problems;
    int last_component = -1;
    int last_round = 0;
    bool last_round_collapse = false;
    bool saw_round = false;

    void fail(const std::string& msg) { problems.push_back(msg); }

    void check_no_scope_loops(const ContractionState& s) {
        for (EdgeId e = 0; e < s.mg.edge_count(); ++e)
            if (s.mg.edge_alive(e) && s.edge_in_scope(e) && s.mg.is_loop(e))
                fail("self-loop survived a merge round");
    }

    void check_ring_lengths(const ContractionState& s) {
        int slots = 0, live = 0;
        for (VertexId v = 0; v < s.mg.id_count(); ++v) {
            if (!s.mg.vertex_alive(v)) continue;
            for (Dart d : s.mg.ring_of(v))
                if (s.mg.edge_alive(dart_edge(d))) ++slots;
        }
        for (EdgeId e = 0; e < s.mg.edge_count(); ++e)
            if (s.mg.edge_alive(e)) ++live;
        if (slots != 2 * live) fail("rotation ring slots != twice the live edges");
    }

    void check_chains(const ContractionState& s) {
        for (VertexId v = 0; v < s.mg.id_count(); ++v) {
            if (!s.mg.vertex_alive(v) || !s.in_scope(v)) continue;
            auto cycles = s.cycles_at(v);
            std::set<int> levels;
            for (int c : cycles) levels.insert(s.dec.cycles[c].level);
            if (levels.size() != cycles.size()) fail("two straddled cycles at one level");
            if (!levels.empty()) {
                int lo = *levels.begin(), hi = *levels.rbegin();
                if (hi - lo + 1 != static_cast<int>(levels.size()))
                    fail("straddled cycle levels are not consecutive");
            }
        }
    }

    void check_eligible_comparability(const ContractionState& s) {
        for (const auto& el : collapse_eligible(s)) {
            std::vector<std::set<int>> sets;
            for (VertexId w : el.consecutive_run) {
                auto cy = s.cycles_at(w);
                sets.emplace_back(cy.begin(), cy.end());
            }
            for (size_t i = 0; i < sets.size(); ++i)
                for (size_t j = i + 1; j < sets.size(); ++j) {
                    bool ij = std::includes(sets[i].begin(), sets[i].end(), sets[j].begin(),
                                            sets[j].end());
                    bool ji = std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(),
                                            sets[i].end());
                    if (!ij && !ji) fail("sibling cycle chains incomparable");
                }
        }
    }

    void operator()(const ContractionState& s, const KsTrace::Event& ev) {
        using Kind = KsTrace::Event::Kind;
        switch (ev.kind) {
            case Kind::round: {
                if (ev.component != last_component) {
                    last_component = ev.component;
                    last_round = 0;
                    last_round_collapse = false;
                    saw_round = false;
                }
                if (ev.round <= last_round) fail("round numbers must increase");
                if (ev.collapse_round != (ev.round % 2 == 1))
                    fail("round parity: odd rounds collapse, even rounds merge");
                if (saw_round && !last_round_collapse) check_no_scope_loops(s);
                if (ev.collapse_round) check_eligible_comparability(s);
                last_round = ev.round;
                last_round_collapse = ev.collapse_round;
                saw_round = true;
                break;
            }
            case Kind::collapse: {
                if (!last_round_collapse) fail("collapse event outside a collapse round");
                for (EdgeId e : ev.contracted)
                    if (s.dec.edge_ict[e] != ev.ict) fail("collapse contracted a non-tree edge");
                if (ev.result >= 0 && s.mg.degree(ev.result) > two_k)
                    fail("super vertex degree above 2k after a collapse");
                check_chains(s);
                check_ring_lengths(s);
                break;
            }
            case Kind::merge: {
                if (last_round_collapse) fail("merge event inside a collapse round");
                for (EdgeId e : ev.contracted)
                    if (s.dec.edge_cycle[e] < 0) fail("merge contracted a non-cycle edge");
                if (ev.result >= 0 && s.mg.degree(ev.result) > two_k)
                    fail("super vertex degree above 2k after a merge");
                check_chains(s);
                check_ring_lengths(s);
                break;
            }
            case Kind::bridge:
                if (ev.result >= 0 && s.mg.degree(ev.result) > 3)
                    fail("bridge contraction left degree above 3");
                break;
        }
    }
};

}  // namespace reasm::testing
