#include "cnf2tsp/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnf2tsp {

namespace {

void sort_unique(std::vector<std::vector<int>>& lists) {
    for (auto& list : lists) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

bool sorted_contains(const std::vector<int>& list, int v) {
    return std::binary_search(list.begin(), list.end(), v);
}

void check_node(int node, int num_nodes) {
    if (node < 0 || node >= num_nodes) {
        throw std::out_of_range("graph node " + std::to_string(node) + " out of range");
    }
}

}  // namespace

void Digraph::add_edge(int u, int v) {
    check_node(u, num_nodes);
    check_node(v, num_nodes);
    out[static_cast<size_t>(u)].push_back(v);
}

void Digraph::finalize() { sort_unique(out); }

bool Digraph::has_edge(int u, int v) const {
    check_node(u, num_nodes);
    check_node(v, num_nodes);
    return sorted_contains(out[static_cast<size_t>(u)], v);
}

long Digraph::edge_count() const {
    long total = 0;
    for (const auto& list : out) total += static_cast<long>(list.size());
    return total;
}

void UndirectedGraph::add_edge(int u, int v) {
    check_node(u, num_nodes);
    check_node(v, num_nodes);
    if (u == v) throw std::invalid_argument("undirected self-loop");
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
}

void UndirectedGraph::remove_edge(int u, int v) {
    check_node(u, num_nodes);
    check_node(v, num_nodes);
    auto drop = [](std::vector<int>& list, int x) {
        list.erase(std::remove(list.begin(), list.end(), x), list.end());
    };
    drop(adj[static_cast<size_t>(u)], v);
    drop(adj[static_cast<size_t>(v)], u);
}

void UndirectedGraph::finalize() { sort_unique(adj); }

bool UndirectedGraph::has_edge(int u, int v) const {
    check_node(u, num_nodes);
    check_node(v, num_nodes);
    return sorted_contains(adj[static_cast<size_t>(u)], v);
}

long UndirectedGraph::edge_count() const {
    long total = 0;
    for (const auto& list : adj) total += static_cast<long>(list.size());
    return total / 2;
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < num_nodes; ++u) {
        for (int v : adj[static_cast<size_t>(u)]) {
            if (u < v) result.emplace_back(u, v);
        }
    }
    return result;  // already sorted: u ascending, adjacency sorted
}

namespace {

// Shared permutation check for both cycle validators.
bool is_permutation_of_nodes(int num_nodes, const std::vector<int>& cycle) {
    if (static_cast<int>(cycle.size()) != num_nodes || num_nodes == 0) return false;
    std::vector<bool> seen(static_cast<size_t>(num_nodes), false);
    for (int node : cycle) {
        if (node < 0 || node >= num_nodes || seen[static_cast<size_t>(node)]) return false;
        seen[static_cast<size_t>(node)] = true;
    }
    return true;
}

}  // namespace

bool is_hamiltonian_cycle(const Digraph& g, const std::vector<int>& cycle) {
    if (!is_permutation_of_nodes(g.num_nodes, cycle)) return false;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i];
        int v = cycle[(i + 1) % cycle.size()];
        if (!g.has_edge(u, v)) return false;
    }
    return true;
}

bool is_hamiltonian_cycle(const UndirectedGraph& g, const std::vector<int>& cycle) {
    if (!is_permutation_of_nodes(g.num_nodes, cycle)) return false;
    if (g.num_nodes < 3) return false;  // an undirected cycle needs 3 distinct edges
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i];
        int v = cycle[(i + 1) % cycle.size()];
        if (!g.has_edge(u, v)) return false;
    }
    return true;
}

}  // namespace cnf2tsp
