#pragma once

// JSON documents for matrices, algebras, representations and finite
// Hom-groups. Rationals travel as strings ("p/q" or "p"); floats are only
// accepted in documents that declare "mode":"approx".

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "homlie/algebra.hpp"
#include "homlie/cohom.hpp"
#include "homlie/exactnum.hpp"
#include "homlie/fhg.hpp"

namespace homlie::io {

using json = nlohmann::json;

/// Wraps nlohmann parse errors as ErrorCode::parse_error.
json parse(const std::string& text);

Mode parse_mode(const json& doc, Mode fallback);

/// {"rows","cols","entries"} in the given mode. A "mode" key on the matrix
/// itself overrides `mode`.
Matrix matrix_from_json(const json& j, Mode mode = Mode::exact);
QMatrix exact_matrix_from_json(const json& j);
json to_json(const QMatrix& m);
json to_json(const RMatrix& m);
json to_json(const Matrix& m);

using AnyAlgebra = std::variant<QAlgebra, RAlgebra>;
AnyAlgebra algebra_from_json(const json& j);
json to_json(const QAlgebra& alg);
json to_json(const RAlgebra& alg);

/// Exact representations only (mode_error otherwise).
QRepresentation representation_from_json(const json& j);

FiniteHomGroup group_from_json(const json& j);
json to_json(const FiniteHomGroup& g);
std::vector<std::size_t> map_from_json(const json& j);

/// True when the document looks like a finite Hom-group rather than an algebra.
bool is_group_document(const json& j);

}  // namespace homlie::io
