#include "homlie/io.hpp"

namespace homlie::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(ErrorCode::parse_error, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::parse_error, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_index(const json& v, const std::string& what) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<long long>() < 0))
    fail(ErrorCode::parse_error, what + " must be a non-negative integer");
  return v.get<std::size_t>();
}

std::size_t index_field(const json& j, const char* key) {
  return as_index(field(j, key), std::string("field \"") + key + "\"");
}

Rational exact_entry(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_number_float()) fail(ErrorCode::mode_error, "float entry in an exact-mode document");
  fail(ErrorCode::parse_error, "matrix entry must be a rational string or number");
}

double approx_entry(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
  fail(ErrorCode::parse_error, "matrix entry must be a number or rational string");
}

template <class F>
F entry(const json& v) {
  if constexpr (std::is_same_v<F, Rational>)
    return exact_entry(v);
  else
    return approx_entry(v);
}

template <class F>
DenseMatrix<F> dense_from_json(const json& j) {
  const std::size_t rows = index_field(j, "rows");
  const std::size_t cols = index_field(j, "cols");
  const json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows) fail(ErrorCode::parse_error, "entries must have one array per row");
  DenseMatrix<F> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!e[r].is_array() || e[r].size() != cols) fail(ErrorCode::parse_error, "matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry<F>(e[r][c]);
  }
  return m;
}

template <class F>
HomLieAlgebra<F> algebra_in_mode(const json& j) {
  const std::size_t n = index_field(j, "dim");
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array() || it->size() != n) fail(ErrorCode::parse_error, "labels must list one name per basis vector");
    for (const auto& l : *it) {
      if (!l.is_string()) fail(ErrorCode::parse_error, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  std::vector<BracketEntry<F>> entries;
  const json& brackets = field(j, "brackets");
  if (!brackets.is_array()) fail(ErrorCode::parse_error, "brackets must be an array");
  for (const auto& b : brackets) {
    const std::size_t i = index_field(b, "i");
    const std::size_t jj = index_field(b, "j");
    const json& coeffs = field(b, "coeffs");
    if (!coeffs.is_object()) fail(ErrorCode::parse_error, "coeffs must be an object keyed by output index");
    for (const auto& [key, value] : coeffs.items()) {
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::logic_error&) {
        fail(ErrorCode::parse_error, "coeffs key \"" + key + "\" is not an index");
      }
      entries.push_back({i, jj, k, entry<F>(value)});
    }
  }
  DenseMatrix<F> phi = dense_from_json<F>(field(j, "phi"));
  return HomLieAlgebra<F>(n, entries, std::move(phi), std::move(labels));
}

template <class F>
json algebra_json(const HomLieAlgebra<F>& alg, const char* mode) {
  json brackets = json::array();
  const auto entries = alg.brackets();
  for (std::size_t p = 0; p < entries.size();) {
    const std::size_t i = entries[p].i, jj = entries[p].j;
    json coeffs = json::object();
    for (; p < entries.size() && entries[p].i == i && entries[p].j == jj; ++p) {
      if constexpr (std::is_same_v<F, Rational>)
        coeffs[std::to_string(entries[p].k)] = format_rational(entries[p].value);
      else
        coeffs[std::to_string(entries[p].k)] = entries[p].value;
    }
    brackets.push_back({{"i", i}, {"j", jj}, {"coeffs", coeffs}});
  }
  json out = {{"dim", alg.dim()}, {"mode", mode}, {"brackets", brackets}, {"phi", to_json(alg.phi())}};
  if (!alg.labels().empty()) out["labels"] = alg.labels();
  return out;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

Mode parse_mode(const json& doc, Mode fallback) {
  if (!doc.is_object()) return fallback;
  auto it = doc.find("mode");
  if (it == doc.end()) return fallback;
  if (*it == "exact") return Mode::exact;
  if (*it == "approx") return Mode::approx;
  fail(ErrorCode::parse_error, "mode must be \"exact\" or \"approx\"");
}

Matrix matrix_from_json(const json& j, Mode mode) {
  mode = parse_mode(j, mode);
  if (mode == Mode::exact) return Matrix(dense_from_json<Rational>(j));
  return Matrix(dense_from_json<double>(j));
}

QMatrix exact_matrix_from_json(const json& j) {
  if (parse_mode(j, Mode::exact) != Mode::exact) fail(ErrorCode::mode_error, "expected an exact matrix");
  return dense_from_json<Rational>(j);
}

json to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json(const RMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"mode", "approx"}, {"entries", rows}};
}

json to_json(const Matrix& m) { return m.mode() == Mode::exact ? to_json(m.exact()) : to_json(m.approx()); }

AnyAlgebra algebra_from_json(const json& j) {
  if (parse_mode(j, Mode::exact) == Mode::exact) return algebra_in_mode<Rational>(j);
  return algebra_in_mode<double>(j);
}

json to_json(const QAlgebra& alg) { return algebra_json(alg, "exact"); }
json to_json(const RAlgebra& alg) { return algebra_json(alg, "approx"); }

QRepresentation representation_from_json(const json& j) {
  const json& a = field(j, "algebra");
  if (parse_mode(a, Mode::exact) != Mode::exact || parse_mode(j, Mode::exact) != Mode::exact)
    fail(ErrorCode::mode_error, "representations must be exact");
  QRepresentation rep{algebra_in_mode<Rational>(a), index_field(j, "vdim"), {}, exact_matrix_from_json(field(j, "beta"))};
  const json& rho = field(j, "rho");
  if (!rho.is_array()) fail(ErrorCode::parse_error, "rho must be an array of matrices");
  for (const auto& m : rho) rep.rho.push_back(exact_matrix_from_json(m));
  return rep;
}

FiniteHomGroup group_from_json(const json& j) {
  const std::size_t m = index_field(j, "order");
  const json& t = field(j, "table");
  if (!t.is_array() || t.size() != m) fail(ErrorCode::parse_error, "table must have one row per element");
  Table table;
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != m) fail(ErrorCode::parse_error, "table row has the wrong length");
    std::vector<std::size_t> r;
    for (const auto& v : row) r.push_back(as_index(v, "table entry"));
    table.push_back(std::move(r));
  }
  const json& tw = field(j, "twist");
  if (!tw.is_array()) fail(ErrorCode::parse_error, "twist must be an array");
  Permutation twist;
  for (const auto& v : tw) twist.push_back(as_index(v, "twist entry"));
  return FiniteHomGroup(std::move(table), std::move(twist), index_field(j, "unit"));
}

json to_json(const FiniteHomGroup& g) {
  return {{"order", g.order()}, {"table", g.table()}, {"twist", g.twist()}, {"unit", g.unit()}};
}

std::vector<std::size_t> map_from_json(const json& j) {
  const json& m = field(j, "map");
  if (!m.is_array()) fail(ErrorCode::parse_error, "map must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : m) out.push_back(as_index(v, "map entry"));
  return out;
}

bool is_group_document(const json& j) { return j.is_object() && j.contains("table"); }

}  // namespace homlie::io
