// Directed-to-undirected lowering by node tripling.
//
// Every directed node u becomes the path u1 - u2 - u3; u1 takes u's incoming
// edges, u3 its outgoing ones, so a directed edge (u,v) becomes the undirected
// edge {u3, v1}.  The middle node u2 has degree exactly 2, which forces any
// Hamiltonian cycle of the tripled graph to run straight through each triple;
// that is why directed and undirected Hamiltonicity coincide.
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cnf2tsp/gadget.hpp"
#include "cnf2tsp/graph.hpp"

namespace cnf2tsp {

// Tripled node numbering: base u, parts 1..3 -> node 3u + part - 1.
struct TripledGraph {
    UndirectedGraph graph;  // 3 * base_count nodes
    int base_count = 0;
    // Image of the directed penalty edge, lower node id first; {-1,-1} when the
    // source was a plain digraph rather than a gadget graph.
    std::pair<int, int> penalty_edge{-1, -1};
    // Formula provenance, -1 when not lowered from a gadget graph.
    int source_variables = -1;
    int source_clauses = -1;

    static int part_node(int base, int part) { return 3 * base + part - 1; }
    static int base_of(int node) { return node / 3; }
    static int part_of(int node) { return node % 3 + 1; }
};

TripledGraph triple(const Digraph& g);
TripledGraph triple(const GadgetGraph& g);

// Canonical undirected image of a directed cycle: each base node u expands to
// u1, u2, u3 in traversal order.
std::vector<int> expand_cycle(const std::vector<int>& base_cycle);

// Inverse direction: validates that `cycle` is a Hamiltonian cycle of the
// tripled graph (any rotation/reflection), normalizes it to start at node 0
// heading toward node 1, and reads the base sequence in the part-1 -> part-3
// direction.  Throws std::invalid_argument on a non-Hamiltonian sequence; a
// Hamiltonian input can always be collapsed (middle nodes force the triples),
// so a failure past validation is reported as std::logic_error.
std::vector<int> collapse_cycle(const TripledGraph& g, const std::vector<int>& cycle);

// "x1_top_2" and friends.  Requires formula provenance (for the base labels).
std::string tripled_label(const GadgetLayout& layout, int node);

// Graphviz rendering; requires provenance, penalty edge highlighted.
void write_dot(const TripledGraph& g, std::ostream& out);

}  // namespace cnf2tsp
