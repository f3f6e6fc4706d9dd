#include "periodlab/report.hpp"

#include <json.hpp>

namespace periodlab::report {

using json = nlohmann::ordered_json;

namespace {
constexpr int kSchemaVersion = 1;

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json config_json(const Configuration& cfg) {
    json points = json::array();
    for (auto& p : cfg.points) points.push_back(complex_json(p));
    return json{{"points", points},
                {"detour_radius", cfg.detour_radius()},
                {"half_plane", cfg.path.upper_half_plane ? "upper" : "lower"},
                {"tolerance", cfg.tolerance}};
}

const char* realization_name(lauricella::Realization r) {
    switch (r) {
        case lauricella::Realization::ordinary: return "ordinary";
        case lauricella::Realization::single_valued: return "single-valued";
        case lauricella::Realization::formal_motivic: return "formal-motivic";
        case lauricella::Realization::formal_de_rham: return "formal-deRham";
    }
    return "?";
}

json series_terms(const lauricella::CMulti& series) {
    json terms = json::array();
    for (auto& [e, c] : series.coeffs()) {
        json expo = json::array();
        for (int x : e) expo.push_back(x);
        terms.push_back(json{{"exponents", expo}, {"re", c.real()}, {"im", c.imag()}});
    }
    return terms;
}
} // namespace

std::string matrix_json(const std::string& command, const Configuration& cfg,
                        const std::vector<cplx>& s, const lauricella::SquareMatrix<cplx>& m,
                        lauricella::Realization realization) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["config"] = config_json(cfg);
    json sv = json::array();
    for (auto& v : s) sv.push_back(complex_json(v));
    doc["s"] = sv;
    doc["realization"] = realization_name(realization);
    json entries = json::array();
    for (int i = 1; i <= m.n; ++i)
        for (int j = 1; j <= m.n; ++j)
            entries.push_back(json{{"i", i}, {"j", j}, {"value", complex_json(m.at(i, j))}});
    doc["entries"] = entries;
    return doc.dump(2);
}

std::string series_matrix_json(const std::string& command, const Configuration& cfg,
                               const std::vector<lauricella::CMulti>& entries, int n, int max_degree,
                               lauricella::Realization realization) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["config"] = config_json(cfg);
    doc["realization"] = realization_name(realization);
    doc["max_degree"] = max_degree;
    json es = json::array();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            es.push_back(json{{"i", i},
                              {"j", j},
                              {"terms", series_terms(entries[size_t(i - 1) * size_t(n) + size_t(j - 1)])}});
    doc["entries"] = es;
    return doc.dump(2);
}

std::string series_json(const std::string& command, const lauricella::CMulti& series,
                        const std::vector<std::string>& var_names) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    json vars = json::array();
    for (auto& v : var_names) vars.push_back(v);
    doc["variables"] = vars;
    doc["max_degree"] = series.max_degree();
    doc["terms"] = series_terms(series);
    return doc.dump(2);
}

std::string verify_json(const std::string& suite, const std::vector<suites::CriterionResult>& results) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    doc["suite"] = suite;
    bool all = true;
    json rs = json::array();
    for (auto& r : results) {
        all = all && r.pass;
        rs.push_back(json{{"id", r.id},
                          {"description", r.description},
                          {"pass", r.pass},
                          {"metric", r.metric},
                          {"tolerance", r.tolerance}});
    }
    doc["results"] = rs;
    doc["pass"] = all;
    return doc.dump(2);
}

std::string hyp2f1_json(const std::string& command, const hyp2f1::HypParams& p,
                        const std::vector<std::pair<std::string, cplx>>& values,
                        const std::vector<std::pair<std::string, double>>& residuals) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["params"] = json{{"a", complex_json(p.a)},
                         {"b", complex_json(p.b)},
                         {"c", complex_json(p.c)},
                         {"y", complex_json(p.y)},
                         {"log_y", complex_json(p.log_y)},
                         {"log_minus_one", complex_json(p.log_minus_one)}};
    json vs;
    for (auto& [k, v] : values) vs[k] = complex_json(v);
    doc["values"] = vs;
    json rs;
    for (auto& [k, v] : residuals) rs[k] = v;
    doc["residuals"] = rs;
    return doc.dump(2);
}

std::string error_json(const std::string& command, const std::string& message) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["error"] = message;
    return doc.dump(2);
}

} // namespace periodlab::report
