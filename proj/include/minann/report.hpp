#pragma once

#include <json.hpp>

#include "minann/homology.hpp"
#include "minann/subspace.hpp"

namespace minann {

// Reports and model dumps are insertion-ordered JSON with rationals held as
// exact "num/den" strings, so identical inputs produce identical bytes.
using json = nlohmann::ordered_json;

json rational_json(const Rational& r);
json vec_json(const Vec& v);
Vec vec_from_json(const json& j);
json matrix_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
json subspace_json(const Subspace& s);

// Model dump format consumed by the CLI (fields family, p, q, m, n, rank,
// basis_names, relations, iota, mon0, monc plus descriptive extras).
json model_to_json(const HomologyModel& model);
HomologyModel model_from_json(const json& j);

json checks_json(const std::vector<Check>& checks);

}  // namespace minann
