#pragma once

#include <string>

#include "reasm/ks_engine.hpp"
#include "reasm/layering.hpp"
#include "reasm/plane_graph.hpp"
#include "reasm/reassembly.hpp"

namespace reasm {

// Graph JSON: {"vertices":[{"id":0,"x":0.0,"y":0.0},...],"edges":[[0,1],...]}
std::string graph_to_json(const RawGraph& g);
RawGraph graph_from_json(const std::string& text);
RawGraph load_graph_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);
std::string load_text_file(const std::string& path);

// Tree JSON: {"n":8,"nodes":[{"id":0,"leaf":5},...,{"id":14,"children":[12,13]}],"alpha":4}
std::string tree_to_json(const ReassemblyTree& t, int alpha = -1);
ReassemblyTree tree_from_json(const std::string& text);

// Decomposition JSON per the layering interface.
std::string decomposition_to_json(const LayerDecomposition& d, const PlaneGraph& g);

// Routing tree JSON: {"n":8,"branches":[[0,9],...]}
std::string carving_to_json(const RoutingTree& T);
RoutingTree carving_from_json(const std::string& text);

// Trace JSON: ordered event list with round boundaries.
std::string trace_to_json(const KsTrace& trace);

// DOT export: undirected, positions pinned.
std::string graph_to_dot(const RawGraph& g);
// Snapshot of a contraction state: live super vertices as clusters around
// their contained ordinary vertices (red for collapse rounds, green for
// merge rounds).
std::string snapshot_to_dot(const ContractionState& s, bool collapse_round);

}  // namespace reasm
