#include "cnf2tsp/tsp.hpp"

#include <sstream>
#include <stdexcept>

#include "cnf2tsp/cnf.hpp"  // ParseError

namespace cnf2tsp {

TspInstance build_instance(const TripledGraph& g) {
    if (g.penalty_edge.first < 0) {
        throw std::invalid_argument("tripled graph carries no penalty edge");
    }
    if (!g.graph.has_edge(g.penalty_edge.first, g.penalty_edge.second)) {
        throw std::invalid_argument("penalty edge is not an edge of the tripled graph");
    }

    TspInstance inst;
    inst.dimension = g.graph.num_nodes;
    const size_t dim = static_cast<size_t>(inst.dimension);
    inst.weights.assign(dim * dim, 3);
    for (size_t i = 0; i < dim; ++i) inst.weights[i * dim + i] = 0;
    for (const auto& [u, v] : g.graph.edges()) {
        int w = (std::pair<int, int>{u, v} == g.penalty_edge) ? 2 : 1;
        inst.weights[static_cast<size_t>(u) * dim + static_cast<size_t>(v)] = w;
        inst.weights[static_cast<size_t>(v) * dim + static_cast<size_t>(u)] = w;
    }

    inst.source_variables = g.source_variables;
    inst.source_clauses = g.source_clauses;
    inst.penalty_cities = {g.penalty_edge.first + 1, g.penalty_edge.second + 1};
    inst.baseline_length = inst.dimension + 1;
    return inst;
}

Tour canonical_tour(const TspInstance& instance) {
    if (!instance.has_formula_metadata()) {
        throw std::invalid_argument("instance carries no formula metadata");
    }
    GadgetLayout layout{instance.source_variables, instance.source_clauses};
    std::vector<int> nodes = expand_cycle(canonical_cycle(layout));
    Tour t;
    t.cities.reserve(nodes.size());
    for (int node : nodes) t.cities.push_back(node + 1);
    return t;
}

namespace {

void check_permutation(int dimension, const Tour& t) {
    if (static_cast<int>(t.cities.size()) != dimension) {
        throw std::invalid_argument("tour visits " + std::to_string(t.cities.size()) +
                                    " cities, instance has " + std::to_string(dimension));
    }
    std::vector<bool> seen(static_cast<size_t>(dimension), false);
    for (int city : t.cities) {
        if (city < 1 || city > dimension || seen[static_cast<size_t>(city - 1)]) {
            throw std::invalid_argument("tour is not a permutation of 1.." +
                                        std::to_string(dimension));
        }
        seen[static_cast<size_t>(city - 1)] = true;
    }
}

}  // namespace

long tour_length(const TspInstance& instance, const Tour& t) {
    check_permutation(instance.dimension, t);
    long total = 0;
    for (size_t i = 0; i < t.cities.size(); ++i) {
        int a = t.cities[i];
        int b = t.cities[(i + 1) % t.cities.size()];
        total += instance.weight(a, b);
    }
    return total;
}

std::string emit_tsplib(const TspInstance& instance) {
    std::ostringstream out;
    out << "NAME: cnf2tsp\n";
    out << "TYPE: TSP\n";
    if (instance.penalty_cities.first > 0) {
        out << "COMMENT: penalty_cities=" << instance.penalty_cities.first << ','
            << instance.penalty_cities.second << " baseline=" << instance.baseline_length
            << '\n';
    }
    out << "DIMENSION: " << instance.dimension << '\n';
    out << "EDGE_WEIGHT_TYPE: EXPLICIT\n";
    out << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
    out << "EDGE_WEIGHT_SECTION\n";
    for (int i = 0; i < instance.dimension; ++i) {
        for (int j = 0; j < instance.dimension; ++j) {
            if (j > 0) out << ' ';
            out << instance.weights[static_cast<size_t>(i) * static_cast<size_t>(instance.dimension) +
                                    static_cast<size_t>(j)];
        }
        out << '\n';
    }
    out << "EOF\n";
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

TspInstance parse_tsplib(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long dimension = -1;
    bool type_ok = false;
    bool weight_type_ok = false;
    bool format_ok = false;
    bool in_section = false;

    while (!in_section && std::getline(in, line)) {
        ++line_no;
        std::string flat = trim(line);
        if (flat.empty()) continue;
        if (flat == "EDGE_WEIGHT_SECTION") {
            in_section = true;
            break;
        }
        size_t colon = flat.find(':');
        if (colon == std::string::npos) {
            throw ParseError(line_no, "expected 'KEY: VALUE' or EDGE_WEIGHT_SECTION, got '" +
                                          flat + "'");
        }
        std::string key = trim(flat.substr(0, colon));
        std::string value = trim(flat.substr(colon + 1));
        if (key == "TYPE") {
            if (value != "TSP") {
                throw ParseError(line_no, "unsupported TYPE '" + value + "', only TSP is supported");
            }
            type_ok = true;
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value != "EXPLICIT") {
                throw ParseError(line_no, "unsupported EDGE_WEIGHT_TYPE '" + value +
                                              "', only EXPLICIT is supported");
            }
            weight_type_ok = true;
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            if (value != "FULL_MATRIX") {
                throw ParseError(line_no, "unsupported EDGE_WEIGHT_FORMAT '" + value +
                                              "', only FULL_MATRIX is supported");
            }
            format_ok = true;
        } else if (key == "DIMENSION") {
            try {
                dimension = std::stol(value);
            } catch (const std::exception&) {
                dimension = -1;
            }
            if (dimension < 1) throw ParseError(line_no, "bad DIMENSION '" + value + "'");
        }
        // NAME, COMMENT and other scalar keys are ignored.
    }

    if (!in_section) throw ParseError("missing EDGE_WEIGHT_SECTION");
    if (!type_ok) throw ParseError("missing 'TYPE: TSP'");
    if (!weight_type_ok) throw ParseError("missing 'EDGE_WEIGHT_TYPE: EXPLICIT'");
    if (!format_ok) throw ParseError("missing 'EDGE_WEIGHT_FORMAT: FULL_MATRIX'");
    if (dimension < 1) throw ParseError("missing DIMENSION");

    TspInstance inst;
    inst.dimension = static_cast<int>(dimension);
    const size_t dim = static_cast<size_t>(dimension);
    inst.weights.reserve(dim * dim);
    std::string tok;
    while (inst.weights.size() < dim * dim && in >> tok) {
        long w = 0;
        try {
            size_t pos = 0;
            w = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("bad weight token '" + tok + "' in EDGE_WEIGHT_SECTION");
        }
        if (w < 0) throw ParseError("negative weight " + std::to_string(w));
        inst.weights.push_back(static_cast<int>(w));
    }
    if (inst.weights.size() != dim * dim) {
        throw ParseError("EDGE_WEIGHT_SECTION ended after " +
                         std::to_string(inst.weights.size()) + " of " +
                         std::to_string(dim * dim) + " entries");
    }
    if (in >> tok && tok != "EOF") {
        throw ParseError("unexpected trailing token '" + tok + "'");
    }

    for (size_t i = 0; i < dim; ++i) {
        if (inst.weights[i * dim + i] != 0) {
            throw ParseError("nonzero diagonal entry at city " + std::to_string(i + 1));
        }
        for (size_t j = i + 1; j < dim; ++j) {
            if (inst.weights[i * dim + j] != inst.weights[j * dim + i]) {
                throw ParseError("matrix not symmetric at cities " + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1));
            }
        }
    }
    return inst;
}

std::string emit_tour_file(const Tour& t) {
    std::ostringstream out;
    for (int city : t.cities) out << city << '\n';
    out << "-1\n";
    return out.str();
}

Tour parse_tour_file(const std::string& text) {
    std::istringstream in(text);
    Tour t;
    std::string tok;
    bool terminated = false;
    while (in >> tok) {
        long value = 0;
        try {
            size_t pos = 0;
            value = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("bad tour token '" + tok + "'");
        }
        if (value == -1) {
            terminated = true;
            break;
        }
        if (value < 1) throw ParseError("bad city id " + std::to_string(value));
        t.cities.push_back(static_cast<int>(value));
    }
    if (!terminated) throw ParseError("tour file missing the -1 terminator");
    return t;
}

}  // namespace cnf2tsp
