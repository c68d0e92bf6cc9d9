#include "homlie/homlie.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "homlie/algebra.hpp"
#include "homlie/cohom.hpp"
#include "homlie/deraut.hpp"
#include "homlie/fhg.hpp"
#include "homlie/io.hpp"
#include "homlie/matgrp.hpp"

struct hl_algebra {
  homlie::io::AnyAlgebra value;
};

struct hl_group {
  homlie::FiniteHomGroup value;
};

namespace {

using homlie::ErrorCode;
using homlie::io::json;

thread_local std::string last_error;

hl_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::singular_matrix: return HL_ERR_SINGULAR;
    case ErrorCode::mode_error: return HL_ERR_MODE;
    case ErrorCode::dimension_mismatch: return HL_ERR_DIMENSION;
    case ErrorCode::not_regular: return HL_ERR_NOT_REGULAR;
    case ErrorCode::not_multiplicative: return HL_ERR_NOT_MULTIPLICATIVE;
    case ErrorCode::not_automorphism: return HL_ERR_NOT_AUTOMORPHISM;
    case ErrorCode::not_derivation: return HL_ERR_NOT_DERIVATION;
    case ErrorCode::bad_parameter: return HL_ERR_BAD_PARAMETER;
    case ErrorCode::not_a_group: return HL_ERR_NOT_A_GROUP;
    case ErrorCode::complex_not_closed: return HL_ERR_COMPLEX_NOT_CLOSED;
    case ErrorCode::parse_error: return HL_ERR_PARSE;
  }
  return HL_ERR_INTERNAL;
}

template <class Fn>
hl_status guarded(Fn fn) {
  try {
    last_error.clear();
    fn();
    return HL_OK;
  } catch (const homlie::Error& e) {
    last_error = std::string(homlie::to_string(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return HL_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p) {
  if (!p) throw homlie::Error(ErrorCode::bad_parameter, "null argument");
}

json report(const char* command, json verdicts, json payload) {
  const bool pass = std::all_of(verdicts.begin(), verdicts.end(), [](const json& v) { return v.at("pass").get<bool>(); });
  return {{"command", command}, {"pass", pass}, {"verdicts", std::move(verdicts)}, {"payload", std::move(payload)}};
}

void emit(const json& r, char** out) { *out = dup_string(r.dump(2)); }

json scalar_json(const homlie::Rational& q) { return homlie::format_rational(q); }
json scalar_json(double x) { return x; }

template <class F>
json vector_json(const homlie::Vec<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

template <class F>
json verdict_json(const char* name, const homlie::Verdict<F>& v, const homlie::HomLieAlgebra<F>& alg) {
  json out = {{"name", name}, {"pass", v.pass}, {"residual", v.residual}};
  if (v.witness) {
    json labels = json::array();
    for (std::size_t i : v.witness->indices) labels.push_back(alg.label(i));
    out["witness"] = {{"indices", v.witness->indices},
                      {"basis", labels},
                      {"lhs", vector_json(v.witness->lhs)},
                      {"rhs", vector_json(v.witness->rhs)}};
  }
  return out;
}

json group_verdict_json(const homlie::GroupVerdict& v) {
  json out = {{"name", v.name}, {"pass", v.pass}};
  if (!v.pass) out["witness"] = v.witness;
  return out;
}

template <class F>
json algebra_check_report(const homlie::HomLieAlgebra<F>& alg) {
  const auto r = homlie::check_axioms(alg);
  json verdicts = json::array({verdict_json("skew", r.skew, alg), verdict_json("multiplicative", r.multiplicative, alg),
                               verdict_json("hom_jacobi", r.hom_jacobi, alg), verdict_json("regular", r.regular, alg)});
  json payload = {{"dim", alg.dim()}, {"mode", homlie::to_string(homlie::FieldTraits<F>::mode)}};
  return report("check", std::move(verdicts), std::move(payload));
}

json group_check_report(const homlie::FiniteHomGroup& g) {
  const auto r = homlie::check_axioms(g);
  json verdicts = json::array();
  for (const auto* v : r.all()) verdicts.push_back(group_verdict_json(*v));
  return report("group check", std::move(verdicts), {{"order", g.order()}, {"unit", g.unit()}});
}

const homlie::QAlgebra& exact_algebra(const hl_algebra* alg) {
  require(alg);
  if (const auto* q = std::get_if<homlie::QAlgebra>(&alg->value)) return *q;
  throw homlie::Error(ErrorCode::mode_error, "operation needs an exact-mode algebra");
}

homlie::TwistedMatrixSpace space_from_json(const char* beta_json) {
  require(beta_json);
  return homlie::TwistedMatrixSpace(homlie::io::matrix_from_json(homlie::io::parse(beta_json)));
}

homlie::RMatrix approx_matrix(const char* text) {
  require(text);
  return homlie::io::matrix_from_json(homlie::io::parse(text)).to_approx();
}

}  // namespace

extern "C" {

const char* hl_status_name(hl_status status) {
  switch (status) {
    case HL_OK: return "ok";
    case HL_ERR_PARSE: return "parse_error";
    case HL_ERR_MODE: return "mode_error";
    case HL_ERR_DIMENSION: return "dimension_mismatch";
    case HL_ERR_SINGULAR: return "singular_matrix";
    case HL_ERR_NOT_REGULAR: return "not_regular";
    case HL_ERR_NOT_MULTIPLICATIVE: return "not_multiplicative";
    case HL_ERR_NOT_AUTOMORPHISM: return "not_automorphism";
    case HL_ERR_NOT_DERIVATION: return "not_derivation";
    case HL_ERR_BAD_PARAMETER: return "bad_parameter";
    case HL_ERR_NOT_A_GROUP: return "not_a_group";
    case HL_ERR_COMPLEX_NOT_CLOSED: return "complex_not_closed";
    case HL_ERR_NULL_ARGUMENT: return "null_argument";
    case HL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* hl_last_error(void) { return last_error.c_str(); }

void hl_string_free(char* s) { delete[] s; }

hl_status hl_algebra_from_json(const char* text, hl_algebra** out) {
  if (!text || !out) return HL_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new hl_algebra{homlie::io::algebra_from_json(homlie::io::parse(text))}; });
}

void hl_algebra_free(hl_algebra* alg) { delete alg; }

hl_status hl_algebra_check(const hl_algebra* alg, char** out) {
  if (!alg || !out) return HL_ERR_NULL_ARGUMENT;
  return guarded([&] { emit(std::visit([](const auto& a) { return algebra_check_report(a); }, alg->value), out); });
}

hl_status hl_cohomology(const hl_algebra* alg, const char* rep, const char* rep_json, int max_degree, char** out) {
  if (!out || (!alg && !rep_json)) return HL_ERR_NULL_ARGUMENT;
  return guarded([&] {
    homlie::QRepresentation r;
    std::string kind;
    if (rep_json) {
      r = homlie::io::representation_from_json(homlie::io::parse(rep_json));
      if (alg && !(exact_algebra(alg) == r.alg))
        throw homlie::Error(ErrorCode::bad_parameter, "representation is over a different algebra");
      kind = "file";
    } else {
      const auto& a = exact_algebra(alg);
      kind = rep ? rep : "adjoint";
      if (kind == "adjoint")
        r = homlie::adjoint_rep(a);
      else if (kind == "trivial")
        r = homlie::trivial_rep(a);
      else
        throw homlie::Error(ErrorCode::bad_parameter, "rep must be adjoint or trivial");
    }
    if (!homlie::check_representation(r).all_pass())
      throw homlie::Error(ErrorCode::bad_parameter, "rho, beta do not form a representation");
    const std::size_t kmax = max_degree < 0 ? r.alg.dim() : static_cast<std::size_t>(max_degree);
    if (kmax > r.alg.dim()) throw homlie::Error(ErrorCode::bad_parameter, "max degree exceeds the algebra dimension");

    json verdicts = json::array();
    bool closed = true;
    for (std::size_t k = 0; k + 1 <= kmax; ++k) {
      const auto d2 = homlie::d_squared_check(r, k);
      closed = closed && d2.pass;
      verdicts.push_back({{"name", "d" + std::to_string(k + 1) + "_d" + std::to_string(k) + "_zero"},
                          {"pass", d2.pass},
                          {"nonzero_entries", d2.nonzero_entries}});
    }
    json dims = json::array();
    if (closed)
      for (const auto& row : homlie::cohomology_dims(r, kmax))
        dims.push_back({{"k", row.k}, {"Z", row.cocycles}, {"B", row.coboundaries}, {"H", row.cohomology}});
    emit(report("cohomology", std::move(verdicts), {{"rep", kind}, {"max_degree", kmax}, {"dims", dims}}), out);
  });
}

hl_status hl_derivations(const hl_algebra* alg, char** out) {
  if (!alg || !out) return HL_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto& a = exact_algebra(alg);
    const auto space = homlie::derivation_space(a);
    json basis = json::array();
    bool all_der = true;
    for (const auto& d : space.basis) {
      basis.push_back(homlie::io::to_json(d));
      all_der = all_der && homlie::is_derivation(a, d).pass;
    }
    json verdicts = json::array({{{"name", "basis_are_derivations"}, {"pass", all_der}}});
    json payload = {{"dim", space.dim}, {"inner", space.inner_dim}, {"outer", space.outer_dim}, {"basis", basis}};
    emit(report("derivations", std::move(verdicts), std::move(payload)), out);
  });
}

hl_status hl_hexp(const char* beta_json, const char* a_json, double t, char** out) {
  if (!beta_json || !a_json || !out) return HL_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto s = space_from_json(beta_json);
    const auto a = approx_matrix(a_json);
    if (a.rows() != s.dim() || a.cols() != s.dim())
      throw homlie::Error(ErrorCode::dimension_mismatch, "matrix and beta differ in size");
    if (!std::isfinite(t)) throw homlie::Error(ErrorCode::bad_parameter, "t must be finite");
    const auto result = homlie::hexp(s, a * t);
    emit(report("hexp", json::array(), {{"t", t}, {"result", homlie::io::to_json(result)}}), out);
  });
}

hl_status hl_verify_commutator(const char* beta_json, const char* a_json, const char* b_json, double step,
                               char** out) {
  if (!beta_json || !a_json || !b_json || !out) return HL_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto s = space_from_json(beta_json);
    const auto a = approx_matrix(a_json);
    const auto b = approx_matrix(b_json);
    if (a.rows() != s.dim() || a.cols() != s.dim() || b.rows() != s.dim() || b.cols() != s.dim())
      throw homlie::Error(ErrorCode::dimension_mismatch, "matrices and beta differ in size");
    const auto check = homlie::commutator_fd_verify(s, a, b, step);
    const double tolerance = std::max(1e-5, 100.0 * step * step);
    json verdicts = json::array(
        {{{"name", "commutator"}, {"pass", check.residual <= tolerance}, {"residual", check.residual}, {"tolerance", tolerance}}});
    json payload = {{"residual", check.residual},
                    {"step", check.step},
                    {"fd", homlie::io::to_json(check.fd_estimate)},
                    {"closed", homlie::io::to_json(check.closed_form)},
                    {"form_residual", check.form_residual}};
    emit(report("verify-commutator", std::move(verdicts), std::move(payload)), out);
  });
}

hl_status hl_group_from_json(const char* text, hl_group** out) {
  if (!text || !out) return HL_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new hl_group{homlie::io::group_from_json(homlie::io::parse(text))}; });
}

void hl_group_free(hl_group* g) { delete g; }

hl_status hl_group_check(const hl_group* g, char** out) {
  if (!g || !out) return HL_ERR_NULL_ARGUMENT;
  return guarded([&] { emit(group_check_report(g->value), out); });
}

hl_status hl_group_weakhom(const hl_group* g, const hl_group* h, const char* map_json, char** out) {
  if (!g || !h || !map_json || !out) return HL_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto f = homlie::io::map_from_json(homlie::io::parse(map_json));
    const auto r = homlie::check_weak_hom(f, g->value, h->value);
    // Only the weak-homomorphism property decides the outcome; the stronger
    // verdicts are reported alongside.
    json verdicts = json::array({group_verdict_json(r.weak)});
    json payload = {{"unit_preserving", group_verdict_json(r.unit_preserving)},
                    {"hom", group_verdict_json(r.hom)},
                    {"commutes", group_verdict_json(r.commutes)}};
    emit(report("group weakhom", std::move(verdicts), std::move(payload)), out);
  });
}

hl_status hl_group_adaction(const hl_group* g, char** out) {
  if (!g || !out) return HL_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto r = homlie::tilde_ad_check(g->value);
    json verdicts = json::array({group_verdict_json(r.unit_action), group_verdict_json(r.composition)});
    emit(report("group adaction", std::move(verdicts), {{"order", g->value.order()}}), out);
  });
}

hl_status hl_check_document(const char* text, char** out) {
  if (!text || !out) return HL_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const json doc = homlie::io::parse(text);
    if (homlie::io::is_group_document(doc)) {
      emit(group_check_report(homlie::io::group_from_json(doc)), out);
      return;
    }
    emit(std::visit([](const auto& a) { return algebra_check_report(a); }, homlie::io::algebra_from_json(doc)), out);
  });
}

}  // extern "C"
