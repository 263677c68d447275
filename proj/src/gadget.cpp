#include "cnf2tsp/gadget.hpp"

#include <ostream>
#include <stdexcept>

namespace cnf2tsp {

int GadgetLayout::top(int variable) const {
    return (variable - 1) * nodes_per_diamond();
}

int GadgetLayout::row(int variable, int position) const {
    return top(variable) + 1 + position;
}

int GadgetLayout::bottom(int variable) const {
    return top(variable) + nodes_per_diamond() - 1;
}

int GadgetLayout::clause_node(int clause) const {
    return diamonds() * nodes_per_diamond() + (clause - 1);
}

NodeRole GadgetLayout::role_of(int node) const {
    if (node < 0 || node >= num_nodes()) {
        throw std::out_of_range("gadget node " + std::to_string(node) + " out of range");
    }
    int diamond_nodes = diamonds() * nodes_per_diamond();
    if (node >= diamond_nodes) {
        NodeRole role;
        role.kind = NodeRole::Kind::ClauseNode;
        role.clause = node - diamond_nodes + 1;
        return role;
    }
    NodeRole role;
    role.variable = node / nodes_per_diamond() + 1;
    int offset = node % nodes_per_diamond();
    if (offset == 0) {
        role.kind = NodeRole::Kind::DiamondTop;
    } else if (offset == nodes_per_diamond() - 1) {
        role.kind = NodeRole::Kind::DiamondBottom;
    } else {
        role.kind = NodeRole::Kind::DiamondRow;
        role.position = offset - 1;
    }
    return role;
}

std::string GadgetLayout::label(int node) const {
    NodeRole role = role_of(node);
    if (role.kind == NodeRole::Kind::ClauseNode) {
        return "c" + std::to_string(role.clause);
    }
    std::string var = role.variable == dummy_variable() ? std::string("dummy")
                                                        : "x" + std::to_string(role.variable);
    switch (role.kind) {
        case NodeRole::Kind::DiamondTop:
            return var + "_top";
        case NodeRole::Kind::DiamondBottom:
            return var + "_bot";
        default:
            return var + "_row" + std::to_string(role.position);
    }
}

GadgetGraph build_gadget_graph(const AugmentedFormula& aug) {
    GadgetGraph g;
    g.layout.num_variables = aug.base.num_variables;
    g.layout.num_clauses = aug.base.num_clauses();
    const GadgetLayout& L = g.layout;
    g.graph = Digraph(L.num_nodes());

    for (int v = 1; v <= L.diamonds(); ++v) {
        // Entry and exit edges coincide when m = 0 (row_top == 0); finalize()
        // drops the duplicates.
        g.graph.add_edge(L.top(v), L.row(v, 0));
        g.graph.add_edge(L.top(v), L.row(v, L.row_top()));
        g.graph.add_edge(L.row(v, 0), L.bottom(v));
        g.graph.add_edge(L.row(v, L.row_top()), L.bottom(v));
        for (int p = 0; p < L.row_top(); ++p) {
            g.graph.add_edge(L.row(v, p), L.row(v, p + 1));
            g.graph.add_edge(L.row(v, p + 1), L.row(v, p));
        }
        int next = v == L.diamonds() ? 1 : v + 1;
        g.graph.add_edge(L.bottom(v), L.top(next));
    }

    for (int j = 1; j <= L.num_clauses; ++j) {
        const Clause& clause = aug.augmented.clauses[static_cast<size_t>(j - 1)];
        for (const Literal& lit : clause.literals) {
            int a = L.row(lit.variable, 3 * j - 2);
            int b = L.row(lit.variable, 3 * j - 1);
            int c = L.clause_node(j);
            if (lit.positive) {
                g.graph.add_edge(a, c);
                g.graph.add_edge(c, b);
            } else {
                g.graph.add_edge(b, c);
                g.graph.add_edge(c, a);
            }
        }
    }

    g.graph.finalize();
    g.penalty_edge = {L.top(L.dummy_variable()), L.row(L.dummy_variable(), 0)};
    return g;
}

Assignment ham_cycle_orientation(const GadgetGraph& g, const std::vector<int>& cycle) {
    if (!is_hamiltonian_cycle(g.graph, cycle)) {
        throw std::invalid_argument("not a Hamiltonian cycle of the gadget graph");
    }
    const GadgetLayout& L = g.layout;
    std::vector<int> index(static_cast<size_t>(g.graph.num_nodes));
    for (size_t i = 0; i < cycle.size(); ++i) index[static_cast<size_t>(cycle[i])] = static_cast<int>(i);

    Assignment a(L.diamonds());
    for (int v = 1; v <= L.diamonds(); ++v) {
        int at = index[static_cast<size_t>(L.top(v))];
        int next = cycle[(static_cast<size_t>(at) + 1) % cycle.size()];
        if (next == L.row(v, 0)) {
            a.set(v, true);  // when m = 0 both entry edges are this one: reads true
        } else if (next == L.row(v, L.row_top())) {
            a.set(v, false);
        } else {
            // A diamond top has no other outgoing edges, so a validated cycle
            // can never get here.
            throw std::logic_error("cycle leaves a diamond top by an unexpected edge");
        }
    }
    return a;
}

std::vector<int> cycle_for_assignment(const GadgetLayout& layout,
                                      const std::vector<bool>& values,
                                      const std::vector<DetourChoice>& schedule) {
    if (static_cast<int>(values.size()) != layout.diamonds()) {
        throw std::invalid_argument("traversal values must cover every diamond");
    }
    if (static_cast<int>(schedule.size()) != layout.num_clauses) {
        throw std::invalid_argument("detour schedule must cover every clause");
    }
    for (const DetourChoice& choice : schedule) {
        if (choice.variable < 1 || choice.variable > layout.diamonds()) {
            throw std::invalid_argument("detour choice names an unknown diamond");
        }
        if (values[static_cast<size_t>(choice.variable - 1)] != choice.positive) {
            throw std::invalid_argument(
                "detour choice inconsistent with the diamond's traversal direction");
        }
    }

    std::vector<int> cycle;
    cycle.reserve(static_cast<size_t>(layout.num_nodes()));
    for (int v = 1; v <= layout.diamonds(); ++v) {
        cycle.push_back(layout.top(v));
        if (values[static_cast<size_t>(v - 1)]) {
            for (int p = 0; p <= layout.row_top(); ++p) {
                cycle.push_back(layout.row(v, p));
                if (p % 3 == 1) {  // p == 3j-2, the left contact of clause j
                    int j = (p + 2) / 3;
                    const DetourChoice& choice = schedule[static_cast<size_t>(j - 1)];
                    if (choice.variable == v && choice.positive) {
                        cycle.push_back(layout.clause_node(j));
                        ++p;
                        cycle.push_back(layout.row(v, p));
                    }
                }
            }
        } else {
            for (int p = layout.row_top(); p >= 0; --p) {
                cycle.push_back(layout.row(v, p));
                if (p % 3 == 2) {  // p == 3j-1, the right contact of clause j
                    int j = (p + 1) / 3;
                    const DetourChoice& choice = schedule[static_cast<size_t>(j - 1)];
                    if (choice.variable == v && !choice.positive) {
                        cycle.push_back(layout.clause_node(j));
                        --p;
                        cycle.push_back(layout.row(v, p));
                    }
                }
            }
        }
        cycle.push_back(layout.bottom(v));
    }

    if (static_cast<int>(cycle.size()) != layout.num_nodes()) {
        throw std::logic_error("traversal missed nodes; detour schedule must name each clause once");
    }
    return cycle;
}

std::vector<int> canonical_cycle(const GadgetLayout& layout) {
    std::vector<bool> values(static_cast<size_t>(layout.diamonds()), true);
    std::vector<DetourChoice> schedule(static_cast<size_t>(layout.num_clauses),
                                       DetourChoice{layout.dummy_variable(), true});
    return cycle_for_assignment(layout, values, schedule);
}

void write_dot(const GadgetGraph& g, std::ostream& out) {
    const GadgetLayout& L = g.layout;
    out << "digraph gadget {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, fontsize=10];\n";
    for (int u = 0; u < g.graph.num_nodes; ++u) {
        out << "  " << L.label(u) << ";\n";
    }
    for (int u = 0; u < g.graph.num_nodes; ++u) {
        for (int v : g.graph.out[static_cast<size_t>(u)]) {
            out << "  " << L.label(u) << " -> " << L.label(v);
            if (std::pair<int, int>{u, v} == g.penalty_edge) {
                out << " [color=red, penwidth=2]";
            }
            out << ";\n";
        }
    }
    out << "}\n";
}

}  // namespace cnf2tsp
