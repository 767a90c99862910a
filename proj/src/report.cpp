#include "minann/report.hpp"

namespace minann {

json rational_json(const Rational& r) { return rat_str(r); }

json vec_json(const Vec& v) {
    json a = json::array();
    for (const Rational& x : v) a.push_back(rat_str(x));
    return a;
}

Vec vec_from_json(const json& j) {
    Vec v;
    for (const auto& x : j) v.push_back(rat_parse(x.get<std::string>()));
    return v;
}

json matrix_json(const Matrix& m) {
    json entries = json::array();
    for (const Rational& x : m.a) entries.push_back(rat_str(x));
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
    Matrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const json& entries = j.at("entries");
    if ((int)entries.size() != m.rows * m.cols) throw error("matrix_from_json: entry count");
    size_t i = 0;
    for (const auto& x : entries) m.a[i++] = rat_parse(x.get<std::string>());
    return m;
}

json subspace_json(const Subspace& s) {
    json basis = json::array();
    for (int r = 0; r < s.basis.rows; r++) basis.push_back(vec_json(s.basis.row(r)));
    return json{{"ambient_dim", s.ambient}, {"dim", s.dim()}, {"basis", basis}};
}

json model_to_json(const HomologyModel& model) {
    json j;
    j["family"] = family_name(model.params.family);
    j["p"] = model.params.p;
    j["q"] = model.params.q;
    j["m"] = model.params.m;
    j["n"] = model.params.n;
    j["rank"] = model.rank;
    j["generator_names"] = model.generator_names;
    j["basis_names"] = model.basis_names;
    json rels = json::array();
    for (const Vec& r : model.relations) rels.push_back(vec_json(r));
    j["relations"] = rels;
    j["iota"] = model.has_iota() ? vec_json(model.iota) : json(nullptr);
    j["mon0"] = matrix_json(model.mon0);
    j["monc"] = model.monc ? matrix_json(*model.monc) : json(nullptr);
    j["critical_value"] = model.critical_value ? rational_json(*model.critical_value) : json(nullptr);
    j["gamma_index"] = model.gamma_index;
    return j;
}

HomologyModel model_from_json(const json& j) {
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw error("model_from_json: unknown family");
    HomologyModel m;
    m.params.family = *fam;
    m.params.p = j.at("p").get<int>();
    m.params.q = j.at("q").get<int>();
    m.params.m = j.at("m").get<long>();
    m.params.n = j.at("n").get<long>();
    m.rank = j.at("rank").get<int>();
    m.generator_names = j.at("generator_names").get<std::vector<std::string>>();
    m.basis_names = j.at("basis_names").get<std::vector<std::string>>();
    for (const auto& r : j.at("relations")) m.relations.push_back(vec_from_json(r));
    if (!j.at("iota").is_null()) m.iota = vec_from_json(j.at("iota"));
    m.mon0 = matrix_from_json(j.at("mon0"));
    if (!j.at("monc").is_null()) m.monc = matrix_from_json(j.at("monc"));
    if (!j.at("critical_value").is_null())
        m.critical_value = rat_parse(j.at("critical_value").get<std::string>());
    m.gamma_index = j.at("gamma_index").get<int>();
    attach_generator_action(m);
    return m;
}

json checks_json(const std::vector<Check>& checks) {
    json a = json::array();
    for (const Check& c : checks) {
        json e{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) e["witness"] = c.witness;
        a.push_back(e);
    }
    return a;
}

}  // namespace minann
