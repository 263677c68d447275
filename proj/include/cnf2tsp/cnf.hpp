// CNF formulas: DIMACS parsing/emission, dummy-variable augmentation, evaluation.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cnf2tsp {

// Error for malformed input files.  line() is 1-based, 0 when the problem is
// not tied to a specific line (e.g. a count mismatch detected at end of file).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    explicit ParseError(const std::string& message);
    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

struct Literal {
    int variable = 0;  // 1-based
    bool positive = true;

    static Literal from_dimacs(int encoded);
    int to_dimacs() const { return positive ? variable : -variable; }

    friend bool operator==(const Literal&, const Literal&) = default;
};

// Literals keep first-occurrence order; duplicate (variable, polarity) pairs
// are dropped at construction.  A clause may contain both polarities of the
// same variable (it is then tautological, but kept as written).
struct Clause {
    std::vector<Literal> literals;

    Clause() = default;
    explicit Clause(std::vector<Literal> lits);

    friend bool operator==(const Clause&, const Clause&) = default;
};

struct CnfFormula {
    int num_variables = 0;
    std::vector<Clause> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Result of appending a fresh, always-positive dummy variable to every clause.
// The augmented formula is satisfiable no matter what the base was: setting
// every variable (in particular the dummy) to true satisfies each clause.
struct AugmentedFormula {
    CnfFormula base;         // untouched input
    int dummy_variable = 0;  // base.num_variables + 1
    CnfFormula augmented;    // base clauses, each extended with the positive dummy
};

// Total truth assignment over variables 1..size().
struct Assignment {
    std::vector<bool> values;

    Assignment() = default;
    explicit Assignment(int num_variables, bool initial = false)
        : values(static_cast<size_t>(num_variables), initial) {}

    int size() const { return static_cast<int>(values.size()); }
    bool value(int variable) const { return values.at(static_cast<size_t>(variable - 1)); }
    void set(int variable, bool v) { values.at(static_cast<size_t>(variable - 1)) = v; }

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

// DIMACS CNF reader.  Accepts comment lines ('c ...'), a single 'p cnf <n> <m>'
// header, clauses as whitespace-separated nonzero integers terminated by 0
// (clauses may span lines), and tolerates a trailing '%' end marker.  Throws
// ParseError with a line number on malformed input; an empty clause (a bare 0)
// is an error.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

// Canonical DIMACS writer; parse_dimacs(emit_dimacs(f)) == f.
std::string emit_dimacs(const CnfFormula& f);

AugmentedFormula augment_with_dummy(const CnfFormula& f);

// True iff every clause has a literal matching the assignment.  A formula with
// no clauses evaluates to true.  Throws std::invalid_argument when the
// assignment domain does not match f.num_variables.
bool evaluate(const CnfFormula& f, const Assignment& a);

// Text form "1=T,2=F" (empty string for zero variables).
std::string format_assignment(const Assignment& a);
Assignment parse_assignment(const std::string& text, int num_variables);

}  // namespace cnf2tsp
