#include "wgreedy/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace wgreedy {

Json number_json(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

Json to_json(const Index& n) { return n.to_string(); }

Json to_json(const IndexSet& s) {
    Json a = Json::array();
    for (const auto& n : s) a.push_back(n.to_string());
    return a;
}

Json to_json(const SparseVector& x) {
    Json entries = Json::array();
    for (const auto& e : x.entries()) entries.push_back(Json::array({e.index.to_string(), e.value}));
    return Json{{"entries", entries}};
}

SparseVector vector_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries")) throw std::invalid_argument("vector JSON needs an object with \"entries\"");
    const Json& es = j.at("entries");
    if (!es.is_array()) throw std::invalid_argument("\"entries\" must be an array");
    std::vector<SparseVector::Entry> out;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const Json& e = es[i];
        const std::string where = "entry " + std::to_string(i);
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument(where + ": expected [index, coefficient]");
        if (!e[0].is_string()) throw std::invalid_argument(where + ": index must be a decimal string");
        if (!e[1].is_number()) throw std::invalid_argument(where + ": coefficient must be a number");
        Index n = Index::parse(e[0].get<std::string>());
        const double c = e[1].get<double>();
        if (!std::isfinite(c)) throw std::invalid_argument(where + ": coefficient must be finite");
        if (!out.empty() && !(out.back().index < n))
            throw std::invalid_argument(where + ": indices must be strictly increasing");
        out.push_back({std::move(n), c});
    }
    return SparseVector(std::move(out));
}

SparseVector parse_vector(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    return vector_from_json(j);
}

Json to_json(const GreedySelection& g) {
    return Json{{"set", to_json(g.set)},
                {"threshold_in", number_json(g.threshold_in)},
                {"threshold_out", number_json(g.threshold_out)},
                {"tie_class", to_json(g.tie_class)}};
}

Json to_json(const ChebyshevResult& c) {
    return Json{{"coefficients", to_json(c.coefficients)}, {"residual_norm", number_json(c.residual_norm)},
                {"certified_gap", number_json(c.certified_gap)}, {"converged", c.converged},
                {"exact", c.exact}, {"sweeps", c.sweeps}};
}

Json to_json(const OracleResult& r) {
    Json w{{"set", to_json(r.witness.set)}};
    if (r.witness.coefficients) w["coefficients"] = to_json(*r.witness.coefficients);
    if (r.witness.k) w["k"] = r.witness.k->str();
    return Json{{"value", number_json(r.value)}, {"witness", w}, {"universe", to_json(r.universe)},
                {"exact", r.exact}, {"approximant", r.approximant}};
}

Json to_json(const CertifiedValue& v) {
    return Json{{"value", number_json(v.value)}, {"kind", v.kind}, {"basis", v.basis}};
}

Json to_json(const ConstantEstimate& e) {
    return Json{{"name", e.name},
                {"lower_bound", number_json(e.lower_bound)},
                {"certified", e.certified ? to_json(*e.certified) : Json(nullptr)},
                {"witness",
                 {{"numerator", to_json(e.witness.numerator)},
                  {"denominator", to_json(e.witness.denominator)},
                  {"description", e.witness.description}}},
                {"family", e.family},
                {"seed", e.seed},
                {"instances", e.instances}};
}

Json to_json(const SuiteReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(Json{{"step", v.step}, {"instance", v.instance}, {"lhs", number_json(v.lhs)},
                                  {"rhs", number_json(v.rhs)}, {"detail", v.detail}});
    Json constants = Json::array();
    for (const auto& c : r.constants_used)
        constants.push_back(Json{{"name", c.name}, {"value", number_json(c.value)}, {"kind", c.kind}});
    Json controls = Json::array();
    for (const auto& c : r.negative_controls)
        controls.push_back(Json{{"name", c.name}, {"instances", c.instances}, {"violations", c.violations},
                                {"fired", c.fired()}, {"detail", c.detail}});
    Json tables = Json::array();
    for (const auto& t : r.tables) {
        Json rows = Json::array();
        for (const auto& row : t.rows) {
            Json jr = Json::array();
            for (double v : row) jr.push_back(number_json(v));
            rows.push_back(jr);
        }
        tables.push_back(Json{{"name", t.name}, {"columns", t.columns}, {"rows", rows}});
    }
    return Json{{"suite", r.suite},
                {"theorem", r.theorem},
                {"space", r.space},
                {"weight", r.weight},
                {"status", to_string(r.status)},
                {"instances", r.instances},
                {"checks", r.checks},
                {"violation_count", r.violation_count},
                {"violations", violations},
                {"constants_used", constants},
                {"seed", r.seed},
                {"tol", r.tol},
                {"negative_controls", controls},
                {"tables", tables},
                {"notes", r.notes}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace wgreedy
