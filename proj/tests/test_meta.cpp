#include <doctest.h>

#include <algorithm>
#include <string>

#include <json.hpp>

#include "cnf2tsp/certificates.hpp"
#include "cnf2tsp/cnf.hpp"
#include "cnf2tsp/meta.hpp"

using namespace cnf2tsp;

TEST_CASE("meta round-trips through emit and parse") {
    ReductionArtifact art = reduce_formula(parse_dimacs("p cnf 2 2\n1 -2 0\n2 0\n"));
    std::string text = emit_meta(art);
    CHECK(text == emit_meta(art));  // deterministic bytes
    CHECK(text.back() == '\n');

    ReductionArtifact back = parse_meta(text);
    CHECK(back.formula == art.formula);
    CHECK(back.instance.dimension == art.instance.dimension);
    CHECK(back.instance.weights == art.instance.weights);
    CHECK(back.canonical == art.canonical);
    CHECK(back.tripled.penalty_edge == art.tripled.penalty_edge);

    // a parsed artifact must serialize to the identical document
    CHECK(emit_meta(back) == text);
}

TEST_CASE("meta carries the expected fields for the single-clause formula") {
    ReductionArtifact art = reduce_formula(parse_dimacs("p cnf 1 1\n1 0\n"));
    nlohmann::json doc = nlohmann::json::parse(emit_meta(art));
    CHECK(doc["schema_version"] == kMetaSchemaVersion);
    CHECK(doc["num_variables"] == 1);
    CHECK(doc["num_clauses"] == 1);
    CHECK(doc["clauses"] == nlohmann::json::parse("[[1]]"));
    CHECK(doc["variable_order"] == nlohmann::json::parse(R"(["x1","dummy"])"));
    CHECK(doc["penalty_edge"] == nlohmann::json::parse(R"(["dummy_top","dummy_row0"])"));
    CHECK(doc["penalty_cities"] == nlohmann::json::parse("[21,22]"));
    CHECK(doc["dimension"] == 39);
    CHECK(doc["baseline_length"] == 40);
    CHECK(doc["node_labels"].size() == 13);
    CHECK(doc["node_labels"][0] == "x1_top");
    CHECK(doc["node_labels"][12] == "c1");
    CHECK(doc["canonical_tour"].size() == 39);
}

TEST_CASE("meta works for a zero-clause formula") {
    CnfFormula f;
    f.num_variables = 1;
    ReductionArtifact art = reduce_formula(f);
    ReductionArtifact back = parse_meta(emit_meta(art));
    CHECK(back.instance.dimension == 18);
    CHECK(back.formula.num_clauses() == 0);
}

TEST_CASE("parse_meta rejects damage") {
    ReductionArtifact art = reduce_formula(parse_dimacs("p cnf 1 1\n1 0\n"));
    std::string text = emit_meta(art);

    SUBCASE("not json") {
        CHECK_THROWS_AS(parse_meta("][ nope"), ParseError);
    }
    SUBCASE("missing fields") {
        CHECK_THROWS_AS(parse_meta("{}"), ParseError);
    }
    SUBCASE("future major version") {
        nlohmann::json doc = nlohmann::json::parse(text);
        doc["schema_version"] = "2.0";
        try {
            parse_meta(doc.dump());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("schema version") != std::string::npos);
        }
    }
    SUBCASE("same major, newer minor is accepted") {
        nlohmann::json doc = nlohmann::json::parse(text);
        doc["schema_version"] = "1.7";
        CHECK(parse_meta(doc.dump()).instance.dimension == 39);
    }
    SUBCASE("tampered baseline") {
        nlohmann::json doc = nlohmann::json::parse(text);
        doc["baseline_length"] = 41;
        try {
            parse_meta(doc.dump());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("baseline_length") != std::string::npos);
        }
    }
    SUBCASE("tampered penalty cities") {
        nlohmann::json doc = nlohmann::json::parse(text);
        doc["penalty_cities"] = {1, 2};
        CHECK_THROWS_AS(parse_meta(doc.dump()), ParseError);
    }
    SUBCASE("tampered canonical tour") {
        nlohmann::json doc = nlohmann::json::parse(text);
        std::swap(doc["canonical_tour"][0], doc["canonical_tour"][1]);
        CHECK_THROWS_AS(parse_meta(doc.dump()), ParseError);
    }
    SUBCASE("tampered node label") {
        nlohmann::json doc = nlohmann::json::parse(text);
        doc["node_labels"][3] = "surprise";
        CHECK_THROWS_AS(parse_meta(doc.dump()), ParseError);
    }
    SUBCASE("clause referencing a variable out of range") {
        nlohmann::json doc = nlohmann::json::parse(text);
        doc["clauses"] = nlohmann::json::parse("[[5]]");
        CHECK_THROWS_AS(parse_meta(doc.dump()), ParseError);
    }
    SUBCASE("wrong clause count") {
        nlohmann::json doc = nlohmann::json::parse(text);
        doc["num_clauses"] = 3;
        CHECK_THROWS_AS(parse_meta(doc.dump()), ParseError);
    }
}
