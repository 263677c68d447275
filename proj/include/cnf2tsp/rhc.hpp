// Restricted-Hamiltonicity instances: the tripled graph with the penalty edge
// removed, shipped together with a Hamiltonian path between the removed
// edge's endpoints.  The path always exists: cut the canonical tour at the
// penalty edge.  A Hamiltonian *cycle* of this graph, on the other hand,
// exists exactly when the source formula is satisfiable.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cnf2tsp/certificates.hpp"
#include "cnf2tsp/graph.hpp"

namespace cnf2tsp {

struct RhcInstance {
    UndirectedGraph graph;            // tripled graph minus the penalty edge
    std::vector<std::string> labels;  // node id -> label
    std::pair<int, int> endpoints;    // the removed edge's endpoints
    std::vector<int> ham_path;        // visits every node once, endpoint to endpoint
};

RhcInstance build_rhc(const ReductionArtifact& art);

// Total check: path covers every node exactly once, every step is an edge of
// the graph, and the two ends are exactly the endpoints (either order).
bool verify_ham_path(const RhcInstance& inst);

// {"nodes": [labels...], "edges": [[a,b],...], "endpoints": [a,b]} with node
// ids indexing into "nodes"; deterministic output.
std::string emit_rhc_graph_json(const RhcInstance& inst);
// One node label per line, in path order.
std::string emit_rhc_path_file(const RhcInstance& inst);

// Inverse of the two emitters; throws ParseError on malformed input or on
// path labels that are not nodes of the graph.
RhcInstance parse_rhc(const std::string& graph_json, const std::string& path_text);

}  // namespace cnf2tsp
