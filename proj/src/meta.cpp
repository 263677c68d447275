#include "cnf2tsp/meta.hpp"

#include <string>
#include <vector>

#include <json.hpp>

#include "cnf2tsp/cnf.hpp"

namespace cnf2tsp {

std::string emit_meta(const ReductionArtifact& art) {
    nlohmann::json doc;
    doc["schema_version"] = kMetaSchemaVersion;
    doc["num_variables"] = art.formula.num_variables;
    doc["num_clauses"] = art.formula.num_clauses();

    nlohmann::json clauses = nlohmann::json::array();
    for (const Clause& c : art.formula.clauses) {
        nlohmann::json lits = nlohmann::json::array();
        for (const Literal& lit : c.literals) lits.push_back(lit.to_dimacs());
        clauses.push_back(std::move(lits));
    }
    doc["clauses"] = std::move(clauses);

    const GadgetLayout& layout = art.gadget.layout;
    nlohmann::json order = nlohmann::json::array();
    for (int v = 1; v <= layout.num_variables; ++v) order.push_back("x" + std::to_string(v));
    order.push_back("dummy");
    doc["variable_order"] = std::move(order);

    nlohmann::json labels = nlohmann::json::array();
    for (int u = 0; u < layout.num_nodes(); ++u) labels.push_back(layout.label(u));
    doc["node_labels"] = std::move(labels);

    doc["penalty_edge"] = {layout.label(art.gadget.penalty_edge.first),
                           layout.label(art.gadget.penalty_edge.second)};
    doc["penalty_cities"] = {art.instance.penalty_cities.first,
                             art.instance.penalty_cities.second};
    doc["dimension"] = art.instance.dimension;
    doc["baseline_length"] = art.instance.baseline_length;
    doc["canonical_tour"] = art.canonical.cities;
    return doc.dump(2) + "\n";
}

ReductionArtifact parse_meta(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad meta JSON: ") + e.what());
    }

    std::string version;
    CnfFormula formula;
    try {
        version = doc.at("schema_version").get<std::string>();
        formula.num_variables = doc.at("num_variables").get<int>();
        for (const auto& clause : doc.at("clauses")) {
            std::vector<Literal> lits;
            for (const auto& encoded : clause) {
                lits.push_back(Literal::from_dimacs(encoded.get<int>()));
            }
            formula.clauses.emplace_back(std::move(lits));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad meta JSON: ") + e.what());
    }

    const std::string wanted(kMetaSchemaVersion);
    const std::string major = version.substr(0, version.find('.'));
    if (major != wanted.substr(0, wanted.find('.'))) {
        throw ParseError("unsupported meta schema version '" + version + "', this reader handles " +
                         wanted);
    }

    ReductionArtifact art;
    try {
        art = reduce_formula(formula);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("meta formula is invalid: ") + e.what());
    }

    // Everything below is redundant with the rebuild; mismatches mean the
    // document was corrupted or edited.
    auto inconsistent = [](const std::string& field) -> ParseError {
        return ParseError("meta field '" + field + "' is inconsistent with its formula");
    };
    try {
        if (doc.at("num_clauses").get<int>() != art.formula.num_clauses()) {
            throw inconsistent("num_clauses");
        }
        if (doc.at("dimension").get<int>() != art.instance.dimension) {
            throw inconsistent("dimension");
        }
        if (doc.at("baseline_length").get<long>() != art.instance.baseline_length) {
            throw inconsistent("baseline_length");
        }
        const auto& cities = doc.at("penalty_cities");
        if (cities.at(0).get<int>() != art.instance.penalty_cities.first ||
            cities.at(1).get<int>() != art.instance.penalty_cities.second) {
            throw inconsistent("penalty_cities");
        }
        if (doc.at("canonical_tour").get<std::vector<int>>() != art.canonical.cities) {
            throw inconsistent("canonical_tour");
        }
        const auto& labels = doc.at("node_labels");
        if (static_cast<int>(labels.size()) != art.gadget.layout.num_nodes()) {
            throw inconsistent("node_labels");
        }
        for (int u = 0; u < art.gadget.layout.num_nodes(); ++u) {
            if (labels.at(static_cast<size_t>(u)).get<std::string>() !=
                art.gadget.layout.label(u)) {
                throw inconsistent("node_labels");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad meta JSON: ") + e.what());
    }
    return art;
}

}  // namespace cnf2tsp
