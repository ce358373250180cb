#pragma once

#include <random>
#include <vector>

#include "reasm/plane_graph.hpp"
#include "reasm/reassembly.hpp"

namespace reasm::testing {

/// Random reassembling tree that merges non-adjacent leaf pairs first, to
/// force degree-0 merges.
inline ReassemblyTree make_adversarial_tree(const PlaneGraph& g, std::mt19937& rng) {
    ReassemblyTree t;
    struct Cluster {
        int node;
        std::vector<VertexId> vs;
    };
    std::vector<Cluster> cl;
    for (VertexId v = 0; v < g.n(); ++v) {
        t.nodes.emplace_back();
        t.nodes.back().leaf = v;
        cl.push_back({v, {v}});
    }
    auto adjacent = [&](VertexId a, VertexId b) {
        for (EdgeId e : g.ring(a))
            if (g.other(e, a) == b) return true;
        return false;
    };
    auto join = [&](size_t i, size_t j) {
        t.nodes.emplace_back();
        int p = static_cast<int>(t.nodes.size()) - 1;
        t.nodes[p].left = cl[i].node;
        t.nodes[p].right = cl[j].node;
        t.nodes[cl[i].node].parent = p;
        t.nodes[cl[j].node].parent = p;
        cl[i].node = p;
        cl[i].vs.insert(cl[i].vs.end(), cl[j].vs.begin(), cl[j].vs.end());
        cl.erase(cl.begin() + static_cast<long>(j));
    };
    // Phase 1: pair up non-adjacent singletons while any such pair exists.
    bool found = true;
    while (found) {
        found = false;
        std::vector<std::pair<size_t, size_t>> options;
        for (size_t i = 0; i < cl.size(); ++i)
            for (size_t j = i + 1; j < cl.size(); ++j)
                if (cl[i].vs.size() == 1 && cl[j].vs.size() == 1 &&
                    !adjacent(cl[i].vs[0], cl[j].vs[0]))
                    options.push_back({i, j});
        if (!options.empty()) {
            auto [i, j] = options[rng() % options.size()];
            join(i, j);
            found = true;
        }
    }
    // Phase 2: merge random clusters until one remains.
    while (cl.size() > 1) {
        size_t i = rng() % cl.size();
        size_t j = rng() % cl.size();
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        join(i, j);
    }
    t.root = cl[0].node;
    return t.postorder();
}

/// Uniform-ish random tree: repeatedly merges two random clusters.
inline ReassemblyTree make_random_tree(int n, std::mt19937& rng) {
    ReassemblyTree t;
    std::vector<int> roots;
    for (int v = 0; v < n; ++v) {
        t.nodes.emplace_back();
        t.nodes.back().leaf = v;
        roots.push_back(v);
    }
    while (roots.size() > 1) {
        size_t i = rng() % roots.size();
        size_t j = rng() % roots.size();
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        t.nodes.emplace_back();
        int p = static_cast<int>(t.nodes.size()) - 1;
        t.nodes[p].left = roots[i];
        t.nodes[p].right = roots[j];
        t.nodes[roots[i]].parent = p;
        t.nodes[roots[j]].parent = p;
        roots[i] = p;
        roots.erase(roots.begin() + static_cast<long>(j));
    }
    t.root = roots[0];
    return t;
}

}  // namespace reasm::testing
