// End-to-end tests that drive the cnf2tsp binary the way a user would.
// The binary path arrives via the CNF2TSP_BIN environment variable (set by
// CMake); outputs land in a scratch directory next to the test's cwd.
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "cnf2tsp/certificates.hpp"
#include "cnf2tsp/cnf.hpp"
#include "cnf2tsp/meta.hpp"
#include "cnf2tsp/rhc.hpp"
#include "cnf2tsp/tsp.hpp"

using namespace cnf2tsp;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string binary_path() {
    const char* env = std::getenv("CNF2TSP_BIN");
    REQUIRE_MESSAGE(env != nullptr, "CNF2TSP_BIN must point at the cnf2tsp binary");
    return env;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot read " << p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

// Scratch directory, fresh per test case.
struct Scratch {
    std::filesystem::path dir;

    Scratch() {
        static int counter = 0;
        dir = std::filesystem::path("cli_scratch") / std::to_string(counter++);
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
    }

    std::filesystem::path file(const std::string& name) const { return dir / name; }

    RunResult run(const std::string& args) const {
        std::filesystem::path out_file = dir / "stdout.txt";
        std::filesystem::path err_file = dir / "stderr.txt";
        std::string cmd = "\"" + binary_path() + "\" " + args + " > \"" + out_file.string() +
                          "\" 2> \"" + err_file.string() + "\"";
        int status = std::system(cmd.c_str());
        RunResult r;
        r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out_file);
        r.err = slurp(err_file);
        return r;
    }
};

const char* kSatCnf = "p cnf 1 1\n1 0\n";            // satisfiable: (x1)
const char* kUnsatCnf = "p cnf 1 2\n1 0\n-1 0\n";    // unsatisfiable: (x1) and (not x1)

}  // namespace

TEST_CASE("cli: reduce emits instance, meta and the summary line") {
    Scratch s;
    spit(s.file("f.cnf"), kSatCnf);
    RunResult r = s.run("reduce \"" + s.file("f.cnf").string() + "\" --out-tsp \"" +
                        s.file("f.tsp").string() + "\" --out-meta \"" +
                        s.file("f.json").string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "V=13 V'=39 baseline=40\n");
    CHECK(r.err.empty());

    // both artifacts load back through the library
    TspInstance inst = parse_tsplib(slurp(s.file("f.tsp")));
    CHECK(inst.dimension == 39);
    ReductionArtifact art = parse_meta(slurp(s.file("f.json")));
    CHECK(art.instance.baseline_length == 40);

    // reruns are byte-identical
    RunResult again = s.run("reduce \"" + s.file("f.cnf").string() + "\" --out-tsp \"" +
                            s.file("g.tsp").string() + "\" --out-meta \"" +
                            s.file("g.json").string() + "\"");
    CHECK(again.exit_code == 0);
    CHECK(slurp(s.file("g.tsp")) == slurp(s.file("f.tsp")));
    CHECK(slurp(s.file("g.json")) == slurp(s.file("f.json")));
}

TEST_CASE("cli: reduce writes optional dot renderings") {
    Scratch s;
    spit(s.file("f.cnf"), kSatCnf);
    RunResult r = s.run("reduce \"" + s.file("f.cnf").string() + "\" --out-tsp \"" +
                        s.file("f.tsp").string() + "\" --out-meta \"" +
                        s.file("f.json").string() + "\" --dot \"" + s.file("t.dot").string() +
                        "\" --dot-gadget \"" + s.file("g.dot").string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(slurp(s.file("t.dot")).rfind("graph tripled {", 0) == 0);
    CHECK(slurp(s.file("g.dot")).rfind("digraph gadget {", 0) == 0);
}

TEST_CASE("cli: reduce fails cleanly on bad input") {
    Scratch s;
    SUBCASE("missing file") {
        RunResult r = s.run("reduce \"" + s.file("nope.cnf").string() + "\" --out-tsp \"" +
                            s.file("f.tsp").string() + "\" --out-meta \"" +
                            s.file("f.json").string() + "\"");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("error:") != std::string::npos);
        CHECK(r.err.find("cannot open") != std::string::npos);
    }
    SUBCASE("malformed dimacs") {
        spit(s.file("bad.cnf"), "p cnf 1 1\n2 0\n");  // literal out of range
        RunResult r = s.run("reduce \"" + s.file("bad.cnf").string() + "\" --out-tsp \"" +
                            s.file("f.tsp").string() + "\" --out-meta \"" +
                            s.file("f.json").string() + "\"");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("error: line 2") != std::string::npos);
    }
    SUBCASE("missing required option") {
        spit(s.file("f.cnf"), kSatCnf);
        RunResult r = s.run("reduce \"" + s.file("f.cnf").string() + "\"");
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("cli: tour prints canonical and witness tours") {
    Scratch s;
    spit(s.file("f.cnf"), kSatCnf);
    REQUIRE(s.run("reduce \"" + s.file("f.cnf").string() + "\" --out-tsp \"" +
                  s.file("f.tsp").string() + "\" --out-meta \"" + s.file("f.json").string() +
                  "\"").exit_code == 0);

    ReductionArtifact art = reduce_formula(parse_dimacs(kSatCnf));

    RunResult canonical = s.run("tour \"" + s.file("f.json").string() + "\" canonical");
    CHECK(canonical.exit_code == 0);
    CHECK(canonical.out == emit_tour_file(art.canonical));

    RunResult witness = s.run("tour \"" + s.file("f.json").string() + "\" from-assignment 1=T");
    CHECK(witness.exit_code == 0);
    Assignment a(1);
    a.set(1, true);
    CHECK(witness.out == emit_tour_file(assignment_to_tour(art, a)));

    SUBCASE("unsatisfying assignment is an input error") {
        RunResult r = s.run("tour \"" + s.file("f.json").string() + "\" from-assignment 1=F");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("does not satisfy") != std::string::npos);
    }
    SUBCASE("unknown mode") {
        RunResult r = s.run("tour \"" + s.file("f.json").string() + "\" sideways");
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("cli: verify reports tour structure and exits 1 on invalid tours") {
    Scratch s;
    spit(s.file("f.cnf"), kSatCnf);
    REQUIRE(s.run("reduce \"" + s.file("f.cnf").string() + "\" --out-tsp \"" +
                  s.file("f.tsp").string() + "\" --out-meta \"" + s.file("f.json").string() +
                  "\"").exit_code == 0);
    ReductionArtifact art = reduce_formula(parse_dimacs(kSatCnf));

    SUBCASE("canonical tour, with baseline context") {
        spit(s.file("t.tour"), emit_tour_file(art.canonical));
        RunResult r = s.run("verify \"" + s.file("f.tsp").string() + "\" --tour \"" +
                            s.file("t.tour").string() + "\" --meta \"" +
                            s.file("f.json").string() + "\"");
        CHECK(r.exit_code == 0);
        CHECK(r.out ==
              "valid: yes\nlength: 40\nuses_penalty_edge: yes\nuses_nonedge: no\n"
              "baseline: 40\nshorter_than_baseline: no\n");
    }
    SUBCASE("witness tour beats the baseline") {
        Assignment a(1);
        a.set(1, true);
        spit(s.file("w.tour"), emit_tour_file(assignment_to_tour(art, a)));
        RunResult r = s.run("verify \"" + s.file("f.tsp").string() + "\" --tour \"" +
                            s.file("w.tour").string() + "\" --meta \"" +
                            s.file("f.json").string() + "\"");
        CHECK(r.exit_code == 0);
        CHECK(r.out ==
              "valid: yes\nlength: 39\nuses_penalty_edge: no\nuses_nonedge: no\n"
              "baseline: 40\nshorter_than_baseline: yes\n");
    }
    SUBCASE("invalid tour exits 1") {
        spit(s.file("bad.tour"), "1\n2\n3\n-1\n");
        RunResult r = s.run("verify \"" + s.file("f.tsp").string() + "\" --tour \"" +
                            s.file("bad.tour").string() + "\"");
        CHECK(r.exit_code == 1);
        CHECK(r.out == "valid: no\nlength: 0\nuses_penalty_edge: no\nuses_nonedge: no\n");
    }
    SUBCASE("works without meta") {
        spit(s.file("t.tour"), emit_tour_file(art.canonical));
        RunResult r = s.run("verify \"" + s.file("f.tsp").string() + "\" --tour \"" +
                            s.file("t.tour").string() + "\"");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "valid: yes\nlength: 40\nuses_penalty_edge: yes\nuses_nonedge: no\n");
    }
}

TEST_CASE("cli: extract recovers the assignment from a short tour") {
    Scratch s;
    spit(s.file("f.cnf"), kSatCnf);
    REQUIRE(s.run("reduce \"" + s.file("f.cnf").string() + "\" --out-tsp \"" +
                  s.file("f.tsp").string() + "\" --out-meta \"" + s.file("f.json").string() +
                  "\"").exit_code == 0);
    ReductionArtifact art = reduce_formula(parse_dimacs(kSatCnf));
    Assignment a(1);
    a.set(1, true);
    spit(s.file("w.tour"), emit_tour_file(assignment_to_tour(art, a)));
    spit(s.file("c.tour"), emit_tour_file(art.canonical));

    RunResult r = s.run("extract \"" + s.file("f.json").string() + "\" --tour \"" +
                        s.file("w.tour").string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1=T\n");

    // the canonical tour is not strictly shorter than the baseline
    RunResult bad = s.run("extract \"" + s.file("f.json").string() + "\" --tour \"" +
                          s.file("c.tour").string() + "\"");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("not strictly shorter") != std::string::npos);
}

TEST_CASE("cli: rhc emits the graph and path files") {
    Scratch s;
    spit(s.file("f.cnf"), kSatCnf);
    RunResult r = s.run("rhc \"" + s.file("f.cnf").string() + "\" --out-graph \"" +
                        s.file("g.json").string() + "\" --out-path \"" +
                        s.file("p.txt").string() + "\"");
    CHECK(r.exit_code == 0);

    RhcInstance inst = parse_rhc(slurp(s.file("g.json")), slurp(s.file("p.txt")));
    CHECK(inst.graph.num_nodes == 39);
    CHECK(verify_ham_path(inst));

    // deterministic across runs
    RunResult again = s.run("rhc \"" + s.file("f.cnf").string() + "\" --out-graph \"" +
                            s.file("g2.json").string() + "\" --out-path \"" +
                            s.file("p2.txt").string() + "\"");
    CHECK(again.exit_code == 0);
    CHECK(slurp(s.file("g2.json")) == slurp(s.file("g.json")));
    CHECK(slurp(s.file("p2.txt")) == slurp(s.file("p.txt")));
}

TEST_CASE("cli: decide agrees with the SAT oracle in both directions") {
    Scratch s;
    SUBCASE("satisfiable") {
        spit(s.file("f.cnf"), kSatCnf);
        RunResult r = s.run("decide \"" + s.file("f.cnf").string() + "\"");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "SAT; shorter tour found (39 < 40); AGREE\n");
    }
    SUBCASE("unsatisfiable") {
        spit(s.file("f.cnf"), kUnsatCnf);
        RunResult r = s.run("decide \"" + s.file("f.cnf").string() + "\"");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "UNSAT; canonical tour minimal; AGREE\n");
    }
    SUBCASE("tiny budget trips the limit") {
        // x20 forces half a million assignment evaluations before the first
        // witness; 5 explored nodes cannot cover that
        spit(s.file("f.cnf"), "p cnf 20 1\n20 0\n");
        RunResult r = s.run("decide \"" + s.file("f.cnf").string() + "\" --budget 5");
        CHECK(r.exit_code == 3);
        CHECK(r.out == "budget-exceeded\n");
    }
}

TEST_CASE("cli: argument errors exit 2, help exits 0") {
    Scratch s;
    CHECK(s.run("").exit_code == 2);                 // a subcommand is required
    CHECK(s.run("frobnicate").exit_code == 2);       // unknown subcommand
    CHECK(s.run("--help").exit_code == 0);
    CHECK(s.run("reduce --help").exit_code == 0);
}
