// cnf2tsp: compiles CNF formulas into symmetric TSP instances whose
// tour-minimality question mirrors the formula's (un)satisfiability, and
// translates witnesses in both directions.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cnf2tsp/certificates.hpp"
#include "cnf2tsp/meta.hpp"
#include "cnf2tsp/oracles.hpp"
#include "cnf2tsp/rhc.hpp"

namespace {

using namespace cnf2tsp;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file '" + path + "'");
    out << content;
    if (!out) throw ParseError("write to '" + path + "' failed");
}

CnfFormula load_formula(const std::string& path) {
    std::string text = read_file(path);
    std::istringstream in(text);
    return parse_dimacs(in);
}

int run_reduce(const std::string& cnf_path, const std::string& tsp_path,
               const std::string& meta_path, const std::string& dot_path,
               const std::string& dot_gadget_path) {
    ReductionArtifact art = reduce_formula(load_formula(cnf_path));
    write_file(tsp_path, emit_tsplib(art.instance));
    write_file(meta_path, emit_meta(art));
    if (!dot_path.empty()) {
        std::ostringstream dot;
        write_dot(art.tripled, dot);
        write_file(dot_path, dot.str());
    }
    if (!dot_gadget_path.empty()) {
        std::ostringstream dot;
        write_dot(art.gadget, dot);
        write_file(dot_gadget_path, dot.str());
    }
    std::cout << "V=" << art.gadget.graph.num_nodes << " V'=" << art.instance.dimension
              << " baseline=" << art.instance.baseline_length << "\n";
    return 0;
}

int run_tour(const std::string& meta_path, const std::string& mode,
             const std::string& assignment_text) {
    ReductionArtifact art = parse_meta(read_file(meta_path));
    Tour tour;
    if (mode == "canonical") {
        tour = art.canonical;
    } else if (mode == "from-assignment") {
        Assignment a = parse_assignment(assignment_text, art.formula.num_variables);
        tour = assignment_to_tour(art, a);
    } else {
        throw ParseError("unknown tour mode '" + mode + "', expected canonical or from-assignment");
    }
    std::cout << emit_tour_file(tour);
    return 0;
}

int run_verify(const std::string& tsp_path, const std::string& tour_path,
               const std::string& meta_path) {
    TspInstance instance = parse_tsplib(read_file(tsp_path));
    Tour tour = parse_tour_file(read_file(tour_path));
    TourReport report = verify_tour(instance, tour);
    std::cout << "valid: " << (report.valid ? "yes" : "no") << "\n";
    std::cout << "length: " << report.length << "\n";
    std::cout << "uses_penalty_edge: " << (report.uses_penalty_edge ? "yes" : "no") << "\n";
    std::cout << "uses_nonedge: " << (report.uses_nonedge ? "yes" : "no") << "\n";
    if (!meta_path.empty()) {
        ReductionArtifact art = parse_meta(read_file(meta_path));
        std::cout << "baseline: " << art.instance.baseline_length << "\n";
        std::cout << "shorter_than_baseline: "
                  << (report.valid && report.length < art.instance.baseline_length ? "yes" : "no")
                  << "\n";
    }
    return report.valid ? 0 : 1;
}

int run_extract(const std::string& meta_path, const std::string& tour_path) {
    ReductionArtifact art = parse_meta(read_file(meta_path));
    Tour tour = parse_tour_file(read_file(tour_path));
    Assignment a = tour_to_assignment(art, tour);
    std::cout << format_assignment(a) << "\n";
    return 0;
}

int run_rhc(const std::string& cnf_path, const std::string& graph_path,
            const std::string& path_path) {
    ReductionArtifact art = reduce_formula(load_formula(cnf_path));
    RhcInstance inst = build_rhc(art);
    write_file(graph_path, emit_rhc_graph_json(inst));
    write_file(path_path, emit_rhc_path_file(inst));
    return 0;
}

int run_decide(const std::string& cnf_path, long budget_nodes) {
    ReductionArtifact art = reduce_formula(load_formula(cnf_path));
    OracleBudget budget;
    if (budget_nodes > 0) budget.max_nodes_explored = budget_nodes;

    SatResult sat = sat_brute(art.formula, budget);
    if (sat.status == OracleStatus::BudgetExceeded) {
        std::cout << "budget-exceeded\n";
        return 3;
    }
    AnotherTourResult another = decide_another_tour(art, budget);
    if (another.status == OracleStatus::BudgetExceeded) {
        std::cout << "budget-exceeded\n";
        return 3;
    }

    const bool satisfiable = sat.status == OracleStatus::Found;
    const bool shorter = another.status == OracleStatus::Found;
    const bool agree = satisfiable == shorter;
    std::cout << (satisfiable ? "SAT" : "UNSAT") << "; ";
    if (shorter) {
        std::cout << "shorter tour found (" << tour_length(art.instance, another.tour) << " < "
                  << art.instance.baseline_length << ")";
    } else {
        std::cout << "canonical tour minimal";
    }
    std::cout << "; " << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CNF-to-TSP reduction toolkit"};
    app.require_subcommand(1);

    std::string cnf_path;
    std::string tsp_path;
    std::string meta_path;
    std::string dot_path;
    std::string dot_gadget_path;
    std::string tour_path;
    std::string mode;
    std::string assignment_text;
    std::string graph_path;
    std::string path_path;
    long budget_nodes = 0;

    CLI::App* reduce = app.add_subcommand("reduce", "Compile a DIMACS CNF file to a TSP instance");
    reduce->add_option("cnf", cnf_path, "input DIMACS CNF file")->required();
    reduce->add_option("--out-tsp", tsp_path, "output TSPLIB file")->required();
    reduce->add_option("--out-meta", meta_path, "output metadata JSON")->required();
    reduce->add_option("--dot", dot_path, "optional Graphviz rendering of the tripled graph");
    reduce->add_option("--dot-gadget", dot_gadget_path,
                       "optional Graphviz rendering of the directed gadget graph");

    CLI::App* tour = app.add_subcommand("tour", "Print a tour for a reduced instance");
    tour->add_option("meta", meta_path, "metadata JSON from reduce")->required();
    tour->add_option("mode", mode, "canonical | from-assignment")->required();
    tour->add_option("assignment", assignment_text, "assignment like 1=T,2=F (from-assignment)");

    CLI::App* verify = app.add_subcommand("verify", "Check a tour against an instance");
    verify->add_option("tsp", tsp_path, "TSPLIB instance file")->required();
    verify->add_option("--tour", tour_path, "tour file (city per line, -1 terminated)")->required();
    verify->add_option("--meta", meta_path, "optional metadata JSON for baseline context");

    CLI::App* extract = app.add_subcommand("extract", "Recover a satisfying assignment from a tour");
    extract->add_option("meta", meta_path, "metadata JSON from reduce")->required();
    extract->add_option("--tour", tour_path, "tour file strictly shorter than the baseline")
        ->required();

    CLI::App* rhc = app.add_subcommand(
        "rhc", "Emit the penalty-free graph together with its Hamiltonian path");
    rhc->add_option("cnf", cnf_path, "input DIMACS CNF file")->required();
    rhc->add_option("--out-graph", graph_path, "output graph JSON")->required();
    rhc->add_option("--out-path", path_path, "output path file (label per line)")->required();

    CLI::App* decide = app.add_subcommand(
        "decide", "Compare the SAT oracle with the shorter-tour search");
    decide->add_option("cnf", cnf_path, "input DIMACS CNF file")->required();
    decide->add_option("--budget", budget_nodes, "search budget in explored nodes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*reduce) return run_reduce(cnf_path, tsp_path, meta_path, dot_path, dot_gadget_path);
        if (*tour) return run_tour(meta_path, mode, assignment_text);
        if (*verify) return run_verify(tsp_path, tour_path, meta_path);
        if (*extract) return run_extract(meta_path, tour_path);
        if (*rhc) return run_rhc(cnf_path, graph_path, path_path);
        if (*decide) return run_decide(cnf_path, budget_nodes);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
