#include "cnf2tsp/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cnf2tsp {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

ParseError::ParseError(const std::string& message) : std::runtime_error(message) {}

Literal Literal::from_dimacs(int encoded) {
    return Literal{std::abs(encoded), encoded > 0};
}

Clause::Clause(std::vector<Literal> lits) {
    for (const Literal& lit : lits) {
        if (std::find(literals.begin(), literals.end(), lit) == literals.end()) {
            literals.push_back(lit);
        }
    }
}

namespace {

// Strict integer token; stoi would accept trailing garbage like "3x".
bool parse_int_token(const std::string& tok, long& out) {
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stol(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula formula;
    bool header_seen = false;
    long declared_clauses = 0;
    std::vector<Literal> pending;
    int pending_line = 0;
    bool stopped = false;  // '%' end marker seen

    std::string line;
    int line_no = 0;
    while (!stopped && std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue;  // blank line
        if (tok[0] == 'c') continue;     // comment line
        if (tok == "%") break;           // SATLIB end marker: ignore the rest

        if (tok[0] == 'p') {
            if (header_seen) throw ParseError(line_no, "duplicate 'p' header");
            std::string kind;
            long n = -1;
            long m = -1;
            if (tok != "p" || !(tokens >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0) {
                throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            }
            std::string extra;
            if (tokens >> extra) {
                throw ParseError(line_no, "malformed header, trailing token '" + extra + "'");
            }
            formula.num_variables = static_cast<int>(n);
            declared_clauses = m;
            header_seen = true;
            continue;
        }

        if (!header_seen) throw ParseError(line_no, "clause data before 'p cnf' header");

        while (true) {
            if (tok == "%") {
                stopped = true;
                break;
            }
            long value = 0;
            if (!parse_int_token(tok, value)) {
                throw ParseError(line_no, "invalid token '" + tok + "'");
            }
            if (value == 0) {
                if (pending.empty()) throw ParseError(line_no, "empty clause");
                formula.clauses.emplace_back(std::move(pending));
                pending.clear();
            } else {
                long var = value < 0 ? -value : value;
                if (var > formula.num_variables) {
                    throw ParseError(line_no, "literal " + tok + " out of range, formula declares " +
                                                  std::to_string(formula.num_variables) +
                                                  " variables");
                }
                if (pending.empty()) pending_line = line_no;
                pending.push_back(Literal{static_cast<int>(var), value > 0});
            }
            if (!(tokens >> tok)) break;
        }
    }

    if (!header_seen) throw ParseError("missing 'p cnf' header");
    if (!pending.empty()) {
        throw ParseError(pending_line, "unterminated clause, missing trailing 0");
    }
    if (static_cast<long>(formula.clauses.size()) != declared_clauses) {
        throw ParseError("clause count mismatch, header declares " +
                         std::to_string(declared_clauses) + " but file contains " +
                         std::to_string(formula.clauses.size()));
    }
    return formula;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string emit_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_variables << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& lit : c.literals) out << lit.to_dimacs() << ' ';
        out << "0\n";
    }
    return out.str();
}

AugmentedFormula augment_with_dummy(const CnfFormula& f) {
    AugmentedFormula out;
    out.base = f;
    out.dummy_variable = f.num_variables + 1;
    out.augmented.num_variables = f.num_variables + 1;
    out.augmented.clauses.reserve(f.clauses.size());
    for (const Clause& c : f.clauses) {
        std::vector<Literal> lits = c.literals;
        lits.push_back(Literal{out.dummy_variable, true});
        out.augmented.clauses.emplace_back(std::move(lits));
    }
    return out;
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
    if (a.size() != f.num_variables) {
        throw std::invalid_argument("assignment domain mismatch: formula has " +
                                    std::to_string(f.num_variables) + " variables, assignment " +
                                    std::to_string(a.size()));
    }
    for (const Clause& c : f.clauses) {
        bool satisfied = false;
        for (const Literal& lit : c.literals) {
            if (a.value(lit.variable) == lit.positive) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) return false;
    }
    return true;
}

std::string format_assignment(const Assignment& a) {
    std::ostringstream out;
    for (int v = 1; v <= a.size(); ++v) {
        if (v > 1) out << ',';
        out << v << '=' << (a.value(v) ? 'T' : 'F');
    }
    return out.str();
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Assignment parse_assignment(const std::string& text, int num_variables) {
    Assignment a(num_variables);
    std::vector<bool> seen(static_cast<size_t>(num_variables), false);
    std::string body = trim(text);
    if (!body.empty()) {
        std::istringstream in(body);
        std::string item;
        while (std::getline(in, item, ',')) {
            item = trim(item);
            size_t eq = item.find('=');
            if (eq == std::string::npos) {
                throw ParseError("malformed assignment item '" + item + "', expected <var>=T|F");
            }
            long var = 0;
            if (!parse_int_token(trim(item.substr(0, eq)), var) || var < 1 ||
                var > num_variables) {
                throw ParseError("assignment variable out of range in '" + item + "'");
            }
            std::string val = trim(item.substr(eq + 1));
            if (val != "T" && val != "F") {
                throw ParseError("assignment value in '" + item + "' must be T or F");
            }
            if (seen[static_cast<size_t>(var - 1)]) {
                throw ParseError("variable " + std::to_string(var) + " assigned twice");
            }
            seen[static_cast<size_t>(var - 1)] = true;
            a.set(static_cast<int>(var), val == "T");
        }
    }
    for (int v = 1; v <= num_variables; ++v) {
        if (!seen[static_cast<size_t>(v - 1)]) {
            throw ParseError("assignment is missing variable " + std::to_string(v));
        }
    }
    return a;
}

}  // namespace cnf2tsp
