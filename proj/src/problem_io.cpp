#include "gibbslab/cli/problem_io.hpp"

#include <fstream>

#include <json.hpp>

#include "gibbslab/errors.hpp"

namespace gibbslab::cli {

namespace {

using nlohmann::json;

json require_field(const json& doc, const std::string& key, const std::string& path) {
    if (!doc.contains(key)) {
        throw ArgumentError(path + ": missing required field '" + key + "'");
    }
    return doc.at(key);
}

}  // namespace

DiscreteProblem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("load_problem: cannot open '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ArgumentError("load_problem: " + path + ": " + e.what());
    }
    try {
        auto hypotheses = require_field(doc, "hypotheses", path).get<std::vector<std::string>>();
        auto instances = require_field(doc, "instances", path).get<std::vector<std::string>>();
        auto loss = require_field(doc, "loss", path).get<std::vector<std::vector<double>>>();
        auto prior = require_field(doc, "prior", path).get<std::vector<double>>();
        auto mu = require_field(doc, "mu", path).get<std::vector<double>>();
        return DiscreteProblem(std::move(hypotheses), std::move(instances), std::move(loss),
                               std::move(prior), std::move(mu));
    } catch (const json::exception& e) {
        throw ArgumentError("load_problem: " + path + ": malformed field: " + e.what());
    }
}

void save_problem(const std::string& path, const DiscreteProblem& problem) {
    nlohmann::ordered_json doc;
    doc["hypotheses"] = problem.hypothesis_labels();
    doc["instances"] = problem.instance_labels();
    doc["loss"] = problem.loss_matrix();
    doc["prior"] = problem.prior();
    doc["mu"] = problem.mu();
    std::ofstream out(path);
    if (!out) {
        throw ArgumentError("save_problem: cannot write '" + path + "'");
    }
    out << doc.dump(2) << "\n";
}

}  // namespace gibbslab::cli
