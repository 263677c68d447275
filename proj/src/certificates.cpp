#include "cnf2tsp/certificates.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace cnf2tsp {

ReductionArtifact reduce_formula(const CnfFormula& formula) {
    for (size_t i = 0; i < formula.clauses.size(); ++i) {
        for (const Literal& lit : formula.clauses[i].literals) {
            if (lit.variable < 1 || lit.variable > formula.num_variables) {
                throw std::invalid_argument("clause " + std::to_string(i + 1) +
                                            " references variable " +
                                            std::to_string(lit.variable) + " outside 1.." +
                                            std::to_string(formula.num_variables));
            }
        }
        if (formula.clauses[i].literals.empty()) {
            throw std::invalid_argument("clause " + std::to_string(i + 1) + " is empty");
        }
    }

    ReductionArtifact art;
    art.formula = formula;
    art.aug = augment_with_dummy(formula);
    art.gadget = build_gadget_graph(art.aug);
    art.tripled = triple(art.gadget);
    art.instance = build_instance(art.tripled);
    art.canonical = canonical_tour(art.instance);
    return art;
}

namespace {

// Per clause: the smallest-index variable whose occurrence polarity matches
// the assignment.  Exists for every clause of a satisfied formula; when a
// variable occurs with both polarities, the matching occurrence is the one
// considered, so the choice is automatically consistent with its traversal
// direction.
std::vector<DetourChoice> detour_schedule(const CnfFormula& f, const Assignment& a) {
    std::vector<DetourChoice> schedule;
    schedule.reserve(f.clauses.size());
    for (const Clause& clause : f.clauses) {
        int best = std::numeric_limits<int>::max();
        for (const Literal& lit : clause.literals) {
            if (a.value(lit.variable) == lit.positive && lit.variable < best) {
                best = lit.variable;
            }
        }
        if (best == std::numeric_limits<int>::max()) {
            throw std::logic_error("no satisfying literal in a clause of a satisfied formula");
        }
        schedule.push_back(DetourChoice{best, a.value(best)});
    }
    return schedule;
}

}  // namespace

Tour assignment_to_tour(const ReductionArtifact& art, const Assignment& a) {
    if (!evaluate(art.formula, a)) {
        throw std::invalid_argument("assignment does not satisfy formula");
    }
    if (art.formula.num_clauses() == 0) {
        // Degenerate corner: with no clauses every diamond has a single
        // traversal, so every Hamiltonian tour uses the penalty edge and no
        // tour of length `dimension` exists.
        throw std::invalid_argument(
            "formula has no clauses: the baseline tour is already minimal, "
            "no strictly shorter tour exists");
    }

    const GadgetLayout& layout = art.gadget.layout;
    std::vector<bool> values(a.values);
    values.push_back(false);  // the dummy diamond runs right to left
    std::vector<int> cycle =
        cycle_for_assignment(layout, values, detour_schedule(art.formula, a));

    // Self-check: the construction must yield a penalty-free Hamiltonian cycle.
    if (!is_hamiltonian_cycle(art.gadget.graph, cycle)) {
        throw std::logic_error("constructed traversal is not a Hamiltonian cycle");
    }

    std::vector<int> nodes = expand_cycle(cycle);
    Tour t;
    t.cities.reserve(nodes.size());
    for (int node : nodes) t.cities.push_back(node + 1);
    if (tour_length(art.instance, t) != art.instance.dimension) {
        throw std::logic_error("witness tour does not have the expected length");
    }
    return t;
}

Assignment tour_to_assignment(const ReductionArtifact& art, const Tour& d) {
    long length = tour_length(art.instance, d);  // throws on non-permutations
    if (length >= art.instance.baseline_length) {
        throw std::invalid_argument("tour length " + std::to_string(length) +
                                    " is not strictly shorter than the baseline " +
                                    std::to_string(art.instance.baseline_length));
    }

    // length < dimension + 1 forces every step onto a weight-1 edge, so the
    // tour is a Hamiltonian cycle of the tripled graph avoiding the penalty
    // pair; collapse it and read the diamond orientations.
    std::vector<int> cycle;
    cycle.reserve(d.cities.size());
    for (int city : d.cities) cycle.push_back(city - 1);
    std::vector<int> bases = collapse_cycle(art.tripled, cycle);
    Assignment full = ham_cycle_orientation(art.gadget, bases);

    if (full.value(art.gadget.layout.dummy_variable())) {
        throw std::logic_error("penalty-free tour read the dummy diamond as true");
    }
    Assignment result(art.formula.num_variables);
    for (int v = 1; v <= art.formula.num_variables; ++v) result.set(v, full.value(v));
    if (!evaluate(art.formula, result)) {
        throw std::logic_error("extracted assignment does not satisfy the formula");
    }
    return result;
}

TourReport verify_tour(const TspInstance& instance, const Tour& t) {
    TourReport report;
    if (static_cast<int>(t.cities.size()) != instance.dimension) return report;
    std::vector<bool> seen(static_cast<size_t>(instance.dimension), false);
    for (int city : t.cities) {
        if (city < 1 || city > instance.dimension || seen[static_cast<size_t>(city - 1)]) {
            return report;
        }
        seen[static_cast<size_t>(city - 1)] = true;
    }
    report.valid = true;
    for (size_t i = 0; i < t.cities.size(); ++i) {
        int w = instance.weight(t.cities[i], t.cities[(i + 1) % t.cities.size()]);
        report.length += w;
        if (w == 2) report.uses_penalty_edge = true;
        if (w == 3) report.uses_nonedge = true;
    }
    return report;
}

}  // namespace cnf2tsp
