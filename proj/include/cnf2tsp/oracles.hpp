// Independent brute-force oracles.  These deliberately share no code with the
// reduction pipeline: they are the ground truth the pipeline is tested
// against.  All of them are deterministic, and exhaustion limits are explicit
// results rather than errors.
#pragma once

#include <utility>
#include <vector>

#include "cnf2tsp/certificates.hpp"
#include "cnf2tsp/cnf.hpp"
#include "cnf2tsp/graph.hpp"
#include "cnf2tsp/tsp.hpp"

namespace cnf2tsp {

struct OracleBudget {
    long max_nodes_explored = 50'000'000;
};

enum class OracleStatus {
    Found,           // witness produced
    Exhausted,       // full search space covered, no witness exists
    BudgetExceeded,  // gave up; says nothing about existence
};

struct SatResult {
    OracleStatus status = OracleStatus::Exhausted;
    Assignment assignment;  // meaningful only when Found
};

// Enumerates assignments in binary counting order (variable 1 is the least
// significant bit, false = 0) and returns the first satisfying one.  Each
// evaluated assignment counts against the budget.
SatResult sat_brute(const CnfFormula& f, const OracleBudget& budget = {});

struct CycleResult {
    OracleStatus status = OracleStatus::Exhausted;
    std::vector<int> cycle;  // meaningful only when Found
};

// Exhaustive backtracking from node 0, neighbors in ascending id order,
// never taking a forbidden directed edge.  Returns the first cycle found
// (deterministic).  Every node pushed onto the search path counts against the
// budget.
CycleResult ham_cycle_search(const Digraph& g,
                             const std::vector<std::pair<int, int>>& forbidden = {},
                             const OracleBudget& budget = {});

// Same idea on an undirected graph (at least 3 nodes for a cycle to exist).
CycleResult ham_cycle_search_undirected(const UndirectedGraph& g,
                                        const OracleBudget& budget = {});

struct TspOptimum {
    OracleStatus status = OracleStatus::Found;
    long length = 0;
    Tour tour;  // lexicographically smallest optimal tour starting at city 1
};

// Held-Karp dynamic program.  Reconstruction greedily picks the smallest next
// city that still completes optimally, so ties break to the lexicographically
// smallest tour starting at city 1 — the same rule tsp_brute uses.  Throws
// std::invalid_argument above the dimension cap (18).  DP transitions count
// against the budget.
TspOptimum tsp_exact_held_karp(const TspInstance& instance, const OracleBudget& budget = {});

// Fixes city 1 and tries every permutation of the rest in lexicographic
// order, keeping the first strict improvement.  Cap: dimension <= 10.
TspOptimum tsp_brute(const TspInstance& instance);

struct AnotherTourResult {
    OracleStatus status = OracleStatus::Exhausted;
    Tour tour;  // length == dimension, meaningful only when Found
};

// Decides whether a tour strictly shorter than the baseline exists, by
// searching the directed gadget graph (3x smaller than the tripled one) for a
// Hamiltonian cycle that avoids the penalty edge, then expanding the find
// through the tripling into a full tour.
AnotherTourResult decide_another_tour(const ReductionArtifact& art,
                                      const OracleBudget& budget = {});

}  // namespace cnf2tsp
