#include "cnf2tsp/tripled.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cnf2tsp {

TripledGraph triple(const Digraph& g) {
    TripledGraph t;
    t.base_count = g.num_nodes;
    t.graph = UndirectedGraph(3 * g.num_nodes);
    for (int u = 0; u < g.num_nodes; ++u) {
        t.graph.add_edge(TripledGraph::part_node(u, 1), TripledGraph::part_node(u, 2));
        t.graph.add_edge(TripledGraph::part_node(u, 2), TripledGraph::part_node(u, 3));
    }
    for (int u = 0; u < g.num_nodes; ++u) {
        for (int v : g.out[static_cast<size_t>(u)]) {
            t.graph.add_edge(TripledGraph::part_node(u, 3), TripledGraph::part_node(v, 1));
        }
    }
    t.graph.finalize();
    return t;
}

TripledGraph triple(const GadgetGraph& g) {
    TripledGraph t = triple(g.graph);
    // part 3 of the tail, part 1 of the head; tail comes first in the diamond
    // numbering so the pair is already lower-id-first
    t.penalty_edge = {TripledGraph::part_node(g.penalty_edge.first, 3),
                      TripledGraph::part_node(g.penalty_edge.second, 1)};
    t.source_variables = g.layout.num_variables;
    t.source_clauses = g.layout.num_clauses;
    return t;
}

std::vector<int> expand_cycle(const std::vector<int>& base_cycle) {
    std::vector<int> out;
    out.reserve(base_cycle.size() * 3);
    for (int u : base_cycle) {
        out.push_back(TripledGraph::part_node(u, 1));
        out.push_back(TripledGraph::part_node(u, 2));
        out.push_back(TripledGraph::part_node(u, 3));
    }
    return out;
}

std::vector<int> collapse_cycle(const TripledGraph& g, const std::vector<int>& cycle) {
    if (!is_hamiltonian_cycle(g.graph, cycle)) {
        throw std::invalid_argument("not a Hamiltonian cycle of the tripled graph");
    }
    const size_t n = cycle.size();

    // Rotate to start at node 0 (part 1 of base 0).
    std::vector<int> c(cycle);
    size_t start = static_cast<size_t>(std::find(c.begin(), c.end(), 0) - c.begin());
    std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(start), c.end());

    // Node 1 (the middle of base 0) has degree 2, so it neighbors node 0 in
    // every Hamiltonian cycle; reflect if it sits on the other side.
    if (c[1] != 1) {
        if (c[n - 1] != 1) {
            throw std::logic_error("tripled cycle does not run through a middle node");
        }
        std::reverse(c.begin() + 1, c.end());
    }

    // Middle nodes force each triple to appear as part1, part2, part3; after
    // the normalization above every chunk of three must be one base's parts in
    // ascending order.
    std::vector<int> bases;
    bases.reserve(n / 3);
    for (size_t i = 0; i < n; i += 3) {
        int base = TripledGraph::base_of(c[i]);
        if (c[i] != TripledGraph::part_node(base, 1) ||
            c[i + 1] != TripledGraph::part_node(base, 2) ||
            c[i + 2] != TripledGraph::part_node(base, 3)) {
            throw std::logic_error("tripled cycle has a non-consecutive triple");
        }
        bases.push_back(base);
    }
    return bases;
}

std::string tripled_label(const GadgetLayout& layout, int node) {
    return layout.label(TripledGraph::base_of(node)) + "_" +
           std::to_string(TripledGraph::part_of(node));
}

void write_dot(const TripledGraph& g, std::ostream& out) {
    if (g.source_variables < 0 || g.source_clauses < 0) {
        throw std::invalid_argument("tripled graph carries no formula provenance");
    }
    GadgetLayout layout{g.source_variables, g.source_clauses};
    out << "graph tripled {\n";
    out << "  node [shape=point];\n";
    for (int u = 0; u < g.graph.num_nodes; ++u) {
        out << "  " << tripled_label(layout, u) << ";\n";
    }
    for (const auto& [u, v] : g.graph.edges()) {
        out << "  " << tripled_label(layout, u) << " -- " << tripled_label(layout, v);
        if (std::pair<int, int>{u, v} == g.penalty_edge) {
            out << " [color=red, penwidth=2]";
        }
        out << ";\n";
    }
    out << "}\n";
}

}  // namespace cnf2tsp
