#include "reasm/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace reasm {

using nlohmann::ordered_json;

std::string graph_to_json(const RawGraph& g) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (size_t v = 0; v < g.coords.size(); ++v) {
        ordered_json jv;
        jv["id"] = v;
        jv["x"] = g.coords[v].x;
        jv["y"] = g.coords[v].y;
        j["vertices"].push_back(jv);
    }
    j["edges"] = ordered_json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    return j.dump(2) + "\n";
}

RawGraph graph_from_json(const std::string& text) {
    RawGraph g;
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges")) throw ParseError("missing keys");
    g.coords.resize(j["vertices"].size());
    for (const auto& jv : j["vertices"]) {
        int id = jv.at("id").get<int>();
        if (id < 0 || id >= static_cast<int>(g.coords.size()))
            throw ParseError("vertex ids must be dense 0..n-1");
        g.coords[id] = {jv.at("x").get<double>(), jv.at("y").get<double>()};
    }
    for (const auto& je : j["edges"]) {
        if (je.size() != 2) throw ParseError("edge entries must be pairs");
        g.edges.push_back({je[0].get<int>(), je[1].get<int>()});
    }
    return g;
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

RawGraph load_graph_file(const std::string& path) { return graph_from_json(load_text_file(path)); }

std::string tree_to_json(const ReassemblyTree& t0, int alpha) {
    ReassemblyTree t = t0.postorder();
    int n = 0;
    for (int i = 0; i < t.node_count(); ++i)
        if (t.is_leaf(i)) ++n;
    ordered_json j;
    j["n"] = n;
    j["nodes"] = ordered_json::array();
    for (int i = 0; i < t.node_count(); ++i) {
        ordered_json jn;
        jn["id"] = i;
        if (t.is_leaf(i))
            jn["leaf"] = t.nodes[i].leaf;
        else
            jn["children"] = {t.nodes[i].left, t.nodes[i].right};
        j["nodes"].push_back(jn);
    }
    if (alpha >= 0) j["alpha"] = alpha;
    return j.dump(2) + "\n";
}

ReassemblyTree tree_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("tree JSON: ") + e.what());
    }
    if (!j.contains("nodes")) throw ParseError("missing nodes");
    ReassemblyTree t;
    t.nodes.resize(j["nodes"].size());
    std::vector<char> has_parent(t.nodes.size(), 0);
    for (const auto& jn : j["nodes"]) {
        int id = jn.at("id").get<int>();
        if (id < 0 || id >= t.node_count()) throw ParseError("node id out of range");
        if (jn.contains("leaf")) {
            t.nodes[id].leaf = jn["leaf"].get<int>();
        } else {
            auto ch = jn.at("children");
            if (ch.size() != 2) throw ParseError("internal nodes need two children");
            int l = ch[0].get<int>(), r = ch[1].get<int>();
            if (l < 0 || r < 0 || l >= t.node_count() || r >= t.node_count())
                throw ParseError("child id out of range");
            t.nodes[id].left = l;
            t.nodes[id].right = r;
            t.nodes[l].parent = id;
            t.nodes[r].parent = id;
            has_parent[l] = has_parent[r] = 1;
        }
    }
    t.root = -1;
    for (int i = 0; i < t.node_count(); ++i)
        if (!has_parent[i]) {
            if (t.root >= 0) throw ParseError("multiple roots");
            t.root = i;
        }
    if (t.root < 0) throw ParseError("no root");
    return t;
}

std::string decomposition_to_json(const LayerDecomposition& d, const PlaneGraph& g) {
    auto pair_of = [&](EdgeId e) {
        return ordered_json{g.edge(e).first, g.edge(e).second};
    };
    ordered_json j;
    j["k"] = d.k;
    j["layers"] = ordered_json::array();
    for (const auto& layer : d.layers) {
        ordered_json jl;
        jl["L"] = ordered_json::array();
        jl["M"] = ordered_json::array();
        for (EdgeId e : layer.cycle_edges) jl["L"].push_back(pair_of(e));
        for (EdgeId e : layer.ict_edges) jl["M"].push_back(pair_of(e));
        j["layers"].push_back(jl);
    }
    j["cycles"] = ordered_json::array();
    for (const auto& c : d.cycles) {
        ordered_json jc;
        jc["level"] = c.level;
        jc["ring"] = ordered_json::array();
        for (auto [v, e] : c.ring) jc["ring"].push_back(v);
        j["cycles"].push_back(jc);
    }
    j["icts"] = ordered_json::array();
    for (const auto& t : d.icts) {
        ordered_json jt;
        jt["level"] = t.level;
        jt["edges"] = ordered_json::array();
        for (EdgeId e : t.edges) jt["edges"].push_back(pair_of(e));
        j["icts"].push_back(jt);
    }
    j["inward"] = ordered_json::array();
    j["outward"] = ordered_json::array();
    for (size_t v = 0; v < d.vertex_class.size(); ++v) {
        if (d.vertex_class[v] == VClass::inward) j["inward"].push_back(v);
        if (d.vertex_class[v] == VClass::outward) j["outward"].push_back(v);
    }
    return j.dump(2) + "\n";
}

std::string carving_to_json(const RoutingTree& T) {
    ordered_json j;
    j["n"] = T.n;
    j["branches"] = ordered_json::array();
    for (auto [a, b] : T.branches) j["branches"].push_back({a, b});
    return j.dump(2) + "\n";
}

RoutingTree carving_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("carving JSON: ") + e.what());
    }
    RoutingTree T;
    T.n = j.at("n").get<int>();
    for (const auto& jb : j.at("branches")) T.branches.push_back({jb[0].get<int>(), jb[1].get<int>()});
    if (static_cast<int>(T.branches.size()) != 2 * T.n - 3)
        throw ParseError("routing tree needs 2n-3 branches");
    return T;
}

std::string trace_to_json(const KsTrace& trace) {
    ordered_json j;
    j["events"] = ordered_json::array();
    for (const auto& ev : trace.events) {
        ordered_json je;
        switch (ev.kind) {
            case KsTrace::Event::Kind::round:
                je["type"] = "round";
                je["component"] = ev.component;
                je["round"] = ev.round;
                je["kind"] = ev.collapse_round ? "collapse" : "merge";
                break;
            case KsTrace::Event::Kind::collapse:
                je["type"] = "collapse";
                je["component"] = ev.component;
                je["round"] = ev.round;
                je["ict"] = ev.ict;
                je["super"] = ev.result;
                je["edges"] = ev.contracted;
                break;
            case KsTrace::Event::Kind::merge:
                je["type"] = "merge";
                je["component"] = ev.component;
                je["round"] = ev.round;
                je["case"] = ev.merge_case;
                je["a"] = ev.a;
                je["b"] = ev.b;
                je["super"] = ev.result;
                je["edges"] = ev.contracted;
                break;
            case KsTrace::Event::Kind::bridge:
                je["type"] = "bridge";
                je["a"] = ev.a;
                je["b"] = ev.b;
                je["super"] = ev.result;
                je["edges"] = ev.contracted;
                break;
        }
        j["events"].push_back(je);
    }
    return j.dump(2) + "\n";
}

std::string graph_to_dot(const RawGraph& g) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=point, width=0.08];\n";
    for (size_t v = 0; v < g.coords.size(); ++v)
        out << "  v" << v << " [pos=\"" << g.coords[v].x << "," << g.coords[v].y << "!\"];\n";
    for (auto [u, v] : g.edges) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string snapshot_to_dot(const ContractionState& s, bool collapse_round) {
    (void)collapse_round;
    std::ostringstream out;
    out << "graph snapshot {\n  node [shape=point, width=0.08];\n";
    int cluster = 0;
    for (VertexId v = 0; v < s.mg.id_count(); ++v) {
        if (!s.mg.vertex_alive(v)) continue;
        const auto& bag = s.mg.bag(v);
        if (bag.size() == 1) {
            Point p = s.mg.rep_coord(v);
            out << "  v" << bag[0] << " [pos=\"" << p.x << "," << p.y << "!\"];\n";
            continue;
        }
        const char* color = (v < static_cast<int>(s.nodes.size()) && s.nodes[v].from_collapse)
                                ? "red"
                                : "green";
        out << "  subgraph cluster_" << cluster++ << " {\n    color=" << color << ";\n";
        for (VertexId o : bag) {
            Point p = s.mg.orig_coord(o);
            out << "    v" << o << " [pos=\"" << p.x << "," << p.y << "!\"];\n";
        }
        out << "  }\n";
    }
    for (EdgeId e = 0; e < s.mg.edge_count(); ++e) {
        if (!s.mg.edge_alive(e)) continue;
        auto [u, v] = s.mg.orig_ends(e);
        out << "  v" << u << " -- v" << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace reasm
