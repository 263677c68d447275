// Symmetric TSP instances over the tripled graph, plus TSPLIB-style I/O.
//
// Weights: 1 on tripled-graph edges, 2 on the single penalty pair, 3 on every
// non-edge.  Any tour therefore has length >= dimension; length == dimension
// means a weight-1-only Hamiltonian cycle, dimension + 1 means the penalty
// edge plus weight-1 edges (the canonical tour), and any weight-3 step pushes
// the length to dimension + 2 or more.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cnf2tsp/tripled.hpp"

namespace cnf2tsp {

// Cities are 1-based; city c corresponds to tripled node c - 1.
struct Tour {
    std::vector<int> cities;

    friend bool operator==(const Tour&, const Tour&) = default;
};

struct TspInstance {
    int dimension = 0;
    std::vector<int> weights;  // row-major dimension x dimension

    // Provenance stamped by build_instance; absent (defaults) after parse_tsplib.
    int source_variables = -1;
    int source_clauses = -1;
    std::pair<int, int> penalty_cities{0, 0};  // 1-based, {0,0} when unknown
    long baseline_length = 0;                  // dimension + 1, 0 when unknown

    int weight(int city_a, int city_b) const {
        return weights[static_cast<size_t>(city_a - 1) * static_cast<size_t>(dimension) +
                       static_cast<size_t>(city_b - 1)];
    }
    bool has_formula_metadata() const { return source_variables >= 0 && source_clauses >= 0; }
};

// Requires g.penalty_edge to be set (and to be an edge of g).
TspInstance build_instance(const TripledGraph& g);

// The always-valid baseline tour: all-true traversal, clause detours in the
// dummy diamond, expanded through the tripling.  Length is dimension + 1 and
// the penalty pair is used.  Requires formula provenance on the instance.
Tour canonical_tour(const TspInstance& instance);

// Throws std::invalid_argument when t is not a permutation of 1..dimension.
long tour_length(const TspInstance& instance, const Tour& t);

// EXPLICIT/FULL_MATRIX TSPLIB writer.  When the instance carries provenance, a
// comment line records the penalty city pair and the baseline length.
std::string emit_tsplib(const TspInstance& instance);

// Accepts only TYPE TSP, EDGE_WEIGHT_TYPE EXPLICIT, EDGE_WEIGHT_FORMAT
// FULL_MATRIX; anything else (EUC_2D, ...) is a ParseError.  Validates that
// the matrix is complete, symmetric, nonnegative and zero on the diagonal.
// Provenance fields are left unset.
TspInstance parse_tsplib(const std::string& text);

// Tour files: one 1-based city id per line, terminated by -1.
std::string emit_tour_file(const Tour& t);
Tour parse_tour_file(const std::string& text);

}  // namespace cnf2tsp
