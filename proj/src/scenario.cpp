#include "pms/scenario.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pms {

namespace {

using nlohmann::ordered_json;

bool known_suite(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

Scenario::Scenario() : suites(suite_names()), axioms(default_axioms()) {}

Scenario parse_scenario(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("scenario must be a JSON object");

    Scenario sc;
    for (const auto& [key, value] : doc.items()) {
        if (key == "suites") {
            if (!value.is_array()) throw ParseError("field 'suites' must be an array of names");
            std::vector<std::string> picked;
            for (const auto& v : value) {
                if (!v.is_string()) throw ParseError("field 'suites' must contain strings");
                std::string name = v.get<std::string>();
                if (!known_suite(name)) throw UnknownSuite("unknown suite: " + name);
                if (std::find(picked.begin(), picked.end(), name) == picked.end())
                    picked.push_back(name);
            }
            if (picked.empty()) throw ParseError("field 'suites' must not be empty");
            /* Keep the canonical suite order regardless of listing order. */
            std::vector<std::string> ordered;
            for (const auto& name : suite_names())
                if (std::find(picked.begin(), picked.end(), name) != picked.end())
                    ordered.push_back(name);
            sc.suites = std::move(ordered);
        } else if (key == "truncation_bound") {
            if (!value.is_number_integer())
                throw ParseError("field 'truncation_bound' must be an integer");
            sc.truncation_bound = value.get<int>();
        } else if (key == "axioms") {
            if (!value.is_array()) throw ParseError("field 'axioms' must be an array");
            AxiomRegistry reg;
            for (const auto& row : value) {
                if (!row.is_object()) throw ParseError("axiom rows must be objects");
                AxiomStatement st;
                if (!row.contains("id") || !row["id"].is_string())
                    throw ParseError("axiom rows need a string 'id'");
                if (!row.contains("group") || !row["group"].is_string())
                    throw ParseError("axiom rows need a string 'group'");
                if (!row.contains("citation") || !row["citation"].is_string())
                    throw ParseError("axiom rows need a string 'citation'");
                st.id = row["id"].get<std::string>();
                st.group = row["group"].get<std::string>();
                st.citation = row["citation"].get<std::string>();
                if (row.contains("h0")) {
                    if (!row["h0"].is_number_integer())
                        throw ParseError("axiom field 'h0' must be an integer");
                    st.h0 = row["h0"].get<int>();
                }
                if (row.contains("h1")) {
                    if (!row["h1"].is_number_integer())
                        throw ParseError("axiom field 'h1' must be an integer");
                    st.h1 = row["h1"].get<int>();
                }
                for (const auto& [rk, rv] : row.items()) {
                    (void)rv;
                    if (rk != "id" && rk != "group" && rk != "h0" && rk != "h1" &&
                        rk != "citation")
                        throw ParseError("unknown axiom field: " + rk);
                }
                reg.add(std::move(st));
            }
            sc.axioms = std::move(reg);
        } else if (key == "out") {
            if (!value.is_string()) throw ParseError("field 'out' must be a string");
            sc.out = value.get<std::string>();
        } else {
            throw ParseError("unknown scenario field: " + key);
        }
    }
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

RunResult run_scenario(const Scenario& sc, const std::string& selection) {
    std::vector<std::string> chosen;
    if (selection == "all") {
        chosen = sc.suites;
    } else {
        if (!known_suite(selection)) throw UnknownSuite("unknown suite: " + selection);
        chosen = {selection};
    }
    SuiteConfig cfg;
    cfg.truncation = sc.truncation_bound;
    cfg.axioms = sc.axioms;

    RunResult rr;
    for (const auto& name : chosen) {
        SuiteReport sr;
        sr.name = name;
        sr.checks = run_suite(name, cfg);
        for (const auto& c : sr.checks) {
            switch (c.status) {
                case CheckStatus::Pass: ++rr.pass; break;
                case CheckStatus::Fail: ++rr.fail; break;
                case CheckStatus::Bounded: ++rr.bounded; break;
            }
        }
        rr.suites.push_back(std::move(sr));
    }
    return rr;
}

std::string render_report(const Scenario& sc, const RunResult& rr) {
    ordered_json doc;
    doc["tool"] = "pmsverify";
    doc["truncation_bound"] = sc.truncation_bound;
    ordered_json suites = ordered_json::array();
    for (const auto& sr : rr.suites) {
        ordered_json sj;
        sj["name"] = sr.name;
        ordered_json checks = ordered_json::array();
        for (const auto& c : sr.checks) {
            ordered_json cj;
            cj["id"] = c.id;
            cj["status"] = status_str(c.status);
            cj["claim"] = c.claim;
            cj["citation"] = c.citation;
            ordered_json wit = ordered_json::array();
            for (const auto& [k, v] : c.witness) {
                ordered_json row = ordered_json::array();
                row.push_back(k);
                row.push_back(v);
                wit.push_back(std::move(row));
            }
            cj["witness"] = std::move(wit);
            cj["axioms_used"] = c.axioms_used;
            checks.push_back(std::move(cj));
        }
        sj["checks"] = std::move(checks);
        suites.push_back(std::move(sj));
    }
    doc["suites"] = std::move(suites);
    ordered_json summary;
    summary["pass"] = rr.pass;
    summary["fail"] = rr.fail;
    summary["bounded"] = rr.bounded;
    summary["total"] = rr.pass + rr.fail + rr.bounded;
    doc["summary"] = std::move(summary);
    return doc.dump(2) + "\n";
}

}  // namespace pms
