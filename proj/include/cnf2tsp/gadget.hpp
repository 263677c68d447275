// Diamond-gadget compiler: lowers an augmented formula to a directed graph
// whose Hamiltonian cycles are exactly the satisfying assignments.
//
// Layout per variable v (one diamond each, the dummy's diamond last):
//   Top(v) -> Row(v,0) and Top(v) -> Row(v,3m)     (entry picks a direction)
//   Row(v,p) <-> Row(v,p+1) for 0 <= p < 3m        (both directions)
//   Row(v,0) -> Bottom(v) and Row(v,3m) -> Bottom(v)
//   Bottom(v) -> Top(next diamond), wrapping around.
// Traversing a row left to right (entering via Row(v,0)) encodes v = true.
// Clause j owns contact cells in every diamond: a_j = Row(v,3j-2),
// b_j = Row(v,3j-1), with Row(v,3j) separating it from clause j+1.  A positive
// occurrence of v in clause j wires a_j -> ClauseNode(j) -> b_j (a detour that
// only fits a left-to-right sweep); a negative occurrence wires
// b_j -> ClauseNode(j) -> a_j.  With m = 0 a row degenerates to the single
// node Row(v,0) and the diamond has exactly one traversal.
//
// The penalty edge is Top(dummy) -> Row(dummy,0): the entry edge every
// dummy-true cycle must use.  It later becomes the unique weight-2 city pair.
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cnf2tsp/cnf.hpp"
#include "cnf2tsp/graph.hpp"

namespace cnf2tsp {

struct NodeRole {
    enum class Kind { DiamondTop, DiamondRow, DiamondBottom, ClauseNode };
    Kind kind = Kind::DiamondTop;
    int variable = 0;  // 1..n+1 for diamond roles; n+1 is the dummy
    int position = 0;  // row position 0..3m, DiamondRow only
    int clause = 0;    // 1..m, ClauseNode only
};

// Deterministic node numbering: diamonds in variable order (x1..xn, dummy),
// within a diamond Top, Row 0..3m, Bottom; clause nodes last, by clause index.
// Everything is arithmetic on (num_variables, num_clauses), so the numbering
// can be reproduced from those two ints alone.
struct GadgetLayout {
    int num_variables = 0;  // n, variables of the source formula
    int num_clauses = 0;    // m

    int diamonds() const { return num_variables + 1; }
    int dummy_variable() const { return num_variables + 1; }
    int row_top() const { return 3 * num_clauses; }  // highest row position
    int nodes_per_diamond() const { return 3 * num_clauses + 3; }
    int num_nodes() const { return diamonds() * nodes_per_diamond() + num_clauses; }

    int top(int variable) const;
    int row(int variable, int position) const;
    int bottom(int variable) const;
    int clause_node(int clause) const;

    NodeRole role_of(int node) const;
    // "x1_top", "x2_row3", "dummy_bot", "c1", ...
    std::string label(int node) const;
};

struct GadgetGraph {
    GadgetLayout layout;
    Digraph graph;
    std::pair<int, int> penalty_edge{-1, -1};
};

GadgetGraph build_gadget_graph(const AugmentedFormula& aug);

// Reads the traversal direction of every diamond off a Hamiltonian cycle.
// Returns an assignment over 1..n+1 (dummy included).  Throws
// std::invalid_argument when the sequence is not a Hamiltonian cycle of g.
Assignment ham_cycle_orientation(const GadgetGraph& g, const std::vector<int>& cycle);

// Which diamond absorbs a clause node, and with which occurrence polarity.
// positive=true means the detour sits in a left-to-right (true) sweep.
struct DetourChoice {
    int variable = 0;
    bool positive = true;
};

// Builds the Hamiltonian cycle that traverses each diamond in the direction
// given by values (over 1..n+1) and detours through ClauseNode(j) from
// schedule[j-1]'s diamond.  Each choice must be consistent: a positive detour
// requires values[var] == true, a negative one values[var] == false.
std::vector<int> cycle_for_assignment(const GadgetLayout& layout,
                                      const std::vector<bool>& values,
                                      const std::vector<DetourChoice>& schedule);

// All-true traversal with every clause detour taken in the dummy diamond.
// This is the one cycle that is guaranteed to exist for every input formula;
// it uses the penalty edge.
std::vector<int> canonical_cycle(const GadgetLayout& layout);

// Graphviz rendering with role names as node ids; the penalty edge is
// highlighted.  Deterministic output.
void write_dot(const GadgetGraph& g, std::ostream& out);

}  // namespace cnf2tsp
