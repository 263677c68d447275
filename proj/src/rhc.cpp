#include "cnf2tsp/rhc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace cnf2tsp {

RhcInstance build_rhc(const ReductionArtifact& art) {
    RhcInstance inst;
    inst.graph = art.tripled.graph;
    const auto [pu, pv] = art.tripled.penalty_edge;
    inst.graph.remove_edge(pu, pv);
    inst.endpoints = {pu, pv};

    GadgetLayout layout = art.gadget.layout;
    inst.labels.reserve(static_cast<size_t>(inst.graph.num_nodes));
    for (int u = 0; u < inst.graph.num_nodes; ++u) {
        inst.labels.push_back(tripled_label(layout, u));
    }

    // Cut the canonical tour at the penalty edge: it crosses pu -> pv exactly
    // once, and dropping that step leaves a Hamiltonian path from pv to pu.
    std::vector<int> nodes;
    nodes.reserve(art.canonical.cities.size());
    for (int city : art.canonical.cities) nodes.push_back(city - 1);
    size_t cut = nodes.size();
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] == pu && nodes[(i + 1) % nodes.size()] == pv) {
            cut = (i + 1) % nodes.size();
            break;
        }
    }
    if (cut == nodes.size()) {
        throw std::logic_error("canonical tour does not cross the penalty edge");
    }
    std::rotate(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(cut), nodes.end());
    inst.ham_path = std::move(nodes);
    return inst;
}

bool verify_ham_path(const RhcInstance& inst) {
    const int n = inst.graph.num_nodes;
    if (static_cast<int>(inst.ham_path.size()) != n || n < 2) return false;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int node : inst.ham_path) {
        if (node < 0 || node >= n || seen[static_cast<size_t>(node)]) return false;
        seen[static_cast<size_t>(node)] = true;
    }
    for (size_t i = 0; i + 1 < inst.ham_path.size(); ++i) {
        if (!inst.graph.has_edge(inst.ham_path[i], inst.ham_path[i + 1])) return false;
    }
    int first = inst.ham_path.front();
    int last = inst.ham_path.back();
    return (first == inst.endpoints.first && last == inst.endpoints.second) ||
           (first == inst.endpoints.second && last == inst.endpoints.first);
}

std::string emit_rhc_graph_json(const RhcInstance& inst) {
    nlohmann::json doc;
    doc["nodes"] = inst.labels;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : inst.graph.edges()) {
        edges.push_back({u, v});
    }
    doc["edges"] = std::move(edges);
    doc["endpoints"] = {inst.endpoints.first, inst.endpoints.second};
    return doc.dump(2) + "\n";
}

std::string emit_rhc_path_file(const RhcInstance& inst) {
    std::ostringstream out;
    for (int node : inst.ham_path) {
        out << inst.labels[static_cast<size_t>(node)] << '\n';
    }
    return out.str();
}

RhcInstance parse_rhc(const std::string& graph_json, const std::string& path_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(graph_json);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }

    RhcInstance inst;
    try {
        inst.labels = doc.at("nodes").get<std::vector<std::string>>();
        const int n = static_cast<int>(inst.labels.size());
        inst.graph = UndirectedGraph(n);
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge is not a pair");
            inst.graph.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        }
        inst.graph.finalize();
        const auto& ep = doc.at("endpoints");
        if (!ep.is_array() || ep.size() != 2) throw ParseError("endpoints is not a pair");
        inst.endpoints = {ep.at(0).get<int>(), ep.at(1).get<int>()};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    if (inst.endpoints.first < 0 || inst.endpoints.first >= inst.graph.num_nodes ||
        inst.endpoints.second < 0 || inst.endpoints.second >= inst.graph.num_nodes) {
        throw ParseError("endpoint out of range");
    }

    std::unordered_map<std::string, int> by_label;
    for (size_t i = 0; i < inst.labels.size(); ++i) {
        if (!by_label.emplace(inst.labels[i], static_cast<int>(i)).second) {
            throw ParseError("duplicate node label '" + inst.labels[i] + "'");
        }
    }
    std::istringstream in(path_text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string label = line;
        while (!label.empty() && (label.back() == '\r' || label.back() == ' ')) label.pop_back();
        if (label.empty()) continue;
        auto it = by_label.find(label);
        if (it == by_label.end()) {
            throw ParseError(line_no, "unknown node label '" + label + "'");
        }
        inst.ham_path.push_back(it->second);
    }
    return inst;
}

}  // namespace cnf2tsp
