// Small adjacency-list graph containers shared by the reduction stages.
#pragma once

#include <utility>
#include <vector>

namespace cnf2tsp {

// Directed graph over nodes 0..num_nodes-1.  Build with add_edge, then call
// finalize() once: it sorts each adjacency list and drops parallel edges, which
// keeps traversals deterministic and makes has_edge a binary search.
struct Digraph {
    int num_nodes = 0;
    std::vector<std::vector<int>> out;

    Digraph() = default;
    explicit Digraph(int n) : num_nodes(n), out(static_cast<size_t>(n)) {}

    void add_edge(int u, int v);
    void finalize();
    bool has_edge(int u, int v) const;
    long edge_count() const;
};

struct UndirectedGraph {
    int num_nodes = 0;
    std::vector<std::vector<int>> adj;

    UndirectedGraph() = default;
    explicit UndirectedGraph(int n) : num_nodes(n), adj(static_cast<size_t>(n)) {}

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void finalize();
    bool has_edge(int u, int v) const;
    long edge_count() const;
    // All edges with the lower endpoint first, sorted; the serialization order.
    std::vector<std::pair<int, int>> edges() const;
};

// Cycle validation used by orientation readout, collapse and the oracles.
// A cycle is given as a node sequence; the closing edge back to the front is
// implied.  Returns false for anything that is not a permutation of all nodes
// or skips a missing edge.
bool is_hamiltonian_cycle(const Digraph& g, const std::vector<int>& cycle);
bool is_hamiltonian_cycle(const UndirectedGraph& g, const std::vector<int>& cycle);

}  // namespace cnf2tsp
