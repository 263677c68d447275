// The full reduction pipeline and the witness translation in both directions:
// satisfying assignments <-> tours strictly shorter than the baseline.
#pragma once

#include <string>
#include <vector>

#include "cnf2tsp/cnf.hpp"
#include "cnf2tsp/gadget.hpp"
#include "cnf2tsp/tripled.hpp"
#include "cnf2tsp/tsp.hpp"

namespace cnf2tsp {

// Every stage of one reduction, kept together so translations never have to
// re-derive structure.  All fields are deterministic functions of `formula`.
struct ReductionArtifact {
    CnfFormula formula;
    AugmentedFormula aug;
    GadgetGraph gadget;
    TripledGraph tripled;
    TspInstance instance;
    Tour canonical;
};

// Runs augment -> gadget -> triple -> instance -> canonical tour.
// Validates the formula (literals within 1..num_variables) up front.
ReductionArtifact reduce_formula(const CnfFormula& formula);

// Satisfying assignment of the source formula -> tour of length dimension that
// avoids the penalty pair.  The dummy diamond is traversed right to left
// (dummy = false); each clause detours from the smallest-index variable whose
// occurrence polarity matches the assignment.  Throws std::invalid_argument
// when the assignment does not satisfy the formula, or when the formula has no
// clauses (then every Hamiltonian tour uses the penalty edge and no tour of
// length dimension exists at all).
Tour assignment_to_tour(const ReductionArtifact& art, const Assignment& a);

// Tour strictly shorter than the baseline -> satisfying assignment of the
// source formula.  Such a tour has length exactly dimension, so it is a
// weight-1-only Hamiltonian cycle of the tripled graph; it is collapsed, its
// diamond orientations are read off, the dummy must come out false, and the
// remaining values satisfy the formula.  Accepts any rotation/reflection.
// Throws std::invalid_argument when the tour is no permutation or not
// strictly shorter than the baseline.
Assignment tour_to_assignment(const ReductionArtifact& art, const Tour& d);

struct TourReport {
    bool valid = false;           // permutation of 1..dimension
    long length = 0;              // 0 when invalid
    bool uses_penalty_edge = false;  // some step has weight 2
    bool uses_nonedge = false;       // some step has weight 3
};

// Total: never throws on bad tours, reports valid=false instead.
TourReport verify_tour(const TspInstance& instance, const Tour& t);

}  // namespace cnf2tsp
