#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "cnf2tsp/cnf.hpp"
#include "cnf2tsp/gadget.hpp"
#include "cnf2tsp/tripled.hpp"

using namespace cnf2tsp;

namespace {

TripledGraph tripled_for(const std::string& dimacs) {
    return triple(build_gadget_graph(augment_with_dummy(parse_dimacs(dimacs))));
}

}  // namespace

TEST_CASE("part arithmetic") {
    CHECK(TripledGraph::part_node(0, 1) == 0);
    CHECK(TripledGraph::part_node(0, 3) == 2);
    CHECK(TripledGraph::part_node(4, 2) == 13);
    CHECK(TripledGraph::base_of(13) == 4);
    CHECK(TripledGraph::part_of(13) == 2);
    CHECK(TripledGraph::part_of(14) == 3);
}

TEST_CASE("tripling a single directed edge") {
    Digraph g(2);
    g.add_edge(0, 1);
    g.finalize();
    TripledGraph t = triple(g);
    CHECK(t.base_count == 2);
    CHECK(t.graph.num_nodes == 6);
    CHECK(t.graph.edge_count() == 5);  // two spines of 2 edges plus the crossing edge
    CHECK(t.graph.has_edge(0, 1));     // spine of base 0
    CHECK(t.graph.has_edge(1, 2));
    CHECK(t.graph.has_edge(2, 3));     // the directed edge became {0_3, 1_1}
    CHECK_FALSE(t.graph.has_edge(5, 0));  // no edge for the missing direction
    CHECK(t.penalty_edge == std::pair<int, int>{-1, -1});  // plain digraph: no provenance
    CHECK(t.source_variables == -1);
}

TEST_CASE("middle nodes always have degree exactly 2") {
    TripledGraph t = tripled_for("p cnf 2 2\n1 -2 0\n-1 2 0\n");
    for (int u = 0; u < t.graph.num_nodes; ++u) {
        if (TripledGraph::part_of(u) == 2) {
            CHECK(t.graph.adj[static_cast<size_t>(u)].size() == 2);
        }
    }
}

TEST_CASE("tripled size is 3|V| and edge count is 2|V| + |E|") {
    struct Case { const char* dimacs; int v; };
    for (Case c : {Case{"p cnf 1 1\n1 0\n", 13}, Case{"p cnf 1 2\n1 0\n-1 0\n", 20}}) {
        GadgetGraph g = build_gadget_graph(augment_with_dummy(parse_dimacs(c.dimacs)));
        TripledGraph t = triple(g);
        CHECK(g.graph.num_nodes == c.v);
        CHECK(t.graph.num_nodes == 3 * c.v);
        CHECK(t.graph.edge_count() == 2 * g.graph.num_nodes + g.graph.edge_count());
    }

    // zero clauses: 6 base nodes -> 18
    CnfFormula f;
    f.num_variables = 1;
    TripledGraph t = triple(build_gadget_graph(augment_with_dummy(f)));
    CHECK(t.graph.num_nodes == 18);
}

TEST_CASE("gadget tripling records the penalty pair and provenance") {
    TripledGraph t = tripled_for("p cnf 1 1\n1 0\n");
    // directed penalty edge (6, 7) -> {part 3 of 6, part 1 of 7} = {20, 21}
    CHECK(t.penalty_edge == std::pair<int, int>{20, 21});
    CHECK(t.graph.has_edge(20, 21));
    CHECK(t.source_variables == 1);
    CHECK(t.source_clauses == 1);
}

TEST_CASE("expand_cycle lays each base out as part1, part2, part3") {
    CHECK(expand_cycle({0, 2, 1}) == std::vector<int>{0, 1, 2, 6, 7, 8, 3, 4, 5});
}

TEST_CASE("collapse inverts expand, up to rotation and reflection") {
    TripledGraph t = tripled_for("p cnf 1 1\n1 0\n");
    GadgetLayout layout{1, 1};
    std::vector<int> base = canonical_cycle(layout);
    std::vector<int> cycle = expand_cycle(base);
    REQUIRE(is_hamiltonian_cycle(t.graph, cycle));

    CHECK(collapse_cycle(t, cycle) == base);

    SUBCASE("rotated") {
        std::vector<int> rotated(cycle);
        std::rotate(rotated.begin(), rotated.begin() + 7, rotated.end());
        CHECK(collapse_cycle(t, rotated) == base);
    }
    SUBCASE("reflected") {
        std::vector<int> reflected(cycle);
        std::reverse(reflected.begin(), reflected.end());
        CHECK(collapse_cycle(t, reflected) == base);
    }
    SUBCASE("rotated and reflected") {
        std::vector<int> mangled(cycle);
        std::reverse(mangled.begin(), mangled.end());
        std::rotate(mangled.begin(), mangled.begin() + 11, mangled.end());
        CHECK(collapse_cycle(t, mangled) == base);
    }
}

TEST_CASE("collapse rejects sequences that are not Hamiltonian cycles") {
    TripledGraph t = tripled_for("p cnf 1 1\n1 0\n");
    std::vector<int> cycle = expand_cycle(canonical_cycle(GadgetLayout{1, 1}));

    SUBCASE("too short") {
        cycle.pop_back();
        CHECK_THROWS_AS(collapse_cycle(t, cycle), std::invalid_argument);
    }
    SUBCASE("repeated node") {
        cycle[0] = cycle[1];
        CHECK_THROWS_AS(collapse_cycle(t, cycle), std::invalid_argument);
    }
    SUBCASE("skips a non-edge") {
        std::swap(cycle[4], cycle[10]);
        CHECK_THROWS_AS(collapse_cycle(t, cycle), std::invalid_argument);
    }
}

TEST_CASE("tripled labels") {
    GadgetLayout layout{1, 1};
    CHECK(tripled_label(layout, 0) == "x1_top_1");
    CHECK(tripled_label(layout, 1) == "x1_top_2");
    CHECK(tripled_label(layout, 2) == "x1_top_3");
    CHECK(tripled_label(layout, 20) == "dummy_top_3");
    CHECK(tripled_label(layout, 21) == "dummy_row0_1");
    CHECK(tripled_label(layout, 38) == "c1_3");
}

TEST_CASE("dot rendering requires provenance") {
    Digraph g(2);
    g.add_edge(0, 1);
    g.finalize();
    TripledGraph t = triple(g);
    std::ostringstream out;
    CHECK_THROWS_AS(write_dot(t, out), std::invalid_argument);

    TripledGraph t2 = tripled_for("p cnf 1 1\n1 0\n");
    write_dot(t2, out);
    std::string dot = out.str();
    CHECK(dot.find("graph tripled {") == 0);
    CHECK(dot.find("dummy_top_3 -- dummy_row0_1 [color=red, penwidth=2]") != std::string::npos);
}
