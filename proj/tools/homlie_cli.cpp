// homlie: command-line front end over the C API.
//
// Exit codes: 0 all verdicts pass, 1 some verdict fails, 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "homlie/homlie.h"

namespace {

using json = nlohmann::json;

struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_status(hl_status st) {
  if (st != HL_OK) throw InputError{hl_last_error()};
}

json take_report(char* raw) {
  std::unique_ptr<char, void (*)(char*)> owned(raw, hl_string_free);
  return json::parse(owned.get());
}

using AlgebraPtr = std::unique_ptr<hl_algebra, void (*)(hl_algebra*)>;
using GroupPtr = std::unique_ptr<hl_group, void (*)(hl_group*)>;

AlgebraPtr load_algebra(const std::string& path) {
  hl_algebra* a = nullptr;
  check_status(hl_algebra_from_json(read_file(path).c_str(), &a));
  return AlgebraPtr(a, hl_algebra_free);
}

GroupPtr load_group(const std::string& path) {
  hl_group* g = nullptr;
  check_status(hl_group_from_json(read_file(path).c_str(), &g));
  return GroupPtr(g, hl_group_free);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::ostringstream ss;
  ss.precision(12);
  ss << v.get<double>();
  return ss.str();
}

void print_vector(std::ostream& os, const json& v) {
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
  os << ")";
}

void print_matrix(std::ostream& os, const json& m, const std::string& indent) {
  for (const auto& row : m.at("entries")) {
    os << indent << "[";
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "  " : "") << scalar_text(row[c]);
    os << "]\n";
  }
}

void print_verdict(std::ostream& os, const json& v) {
  os << "  [" << (v.at("pass").get<bool>() ? "PASS" : "FAIL") << "] " << v.at("name").get<std::string>();
  if (v.contains("residual")) os << "  residual=" << scalar_text(v["residual"]);
  if (v.contains("tolerance")) os << "  tolerance=" << scalar_text(v["tolerance"]);
  if (v.contains("nonzero_entries")) os << "  nonzero=" << v["nonzero_entries"].get<std::size_t>();
  os << "\n";
  if (!v.contains("witness")) return;
  const json& w = v["witness"];
  if (w.is_array()) {
    os << "      witness " << w.dump() << "\n";
    return;
  }
  os << "      witness";
  for (const auto& b : w.at("basis")) os << " " << b.get<std::string>();
  os << "\n      lhs ";
  print_vector(os, w.at("lhs"));
  os << "\n      rhs ";
  print_vector(os, w.at("rhs"));
  os << "\n";
}

void print_payload(std::ostream& os, const std::string& command, const json& p) {
  if (command == "cohomology") {
    os << "  rep " << p.at("rep").get<std::string>() << "\n";
    for (const auto& row : p.at("dims"))
      os << "  k=" << row.at("k") << "  Z=" << row.at("Z") << "  B=" << row.at("B") << "  H=" << row.at("H") << "\n";
  } else if (command == "derivations") {
    os << "  dim " << p.at("dim") << ", inner " << p.at("inner") << ", outer " << p.at("outer") << "\n";
    std::size_t i = 0;
    for (const auto& m : p.at("basis")) {
      os << "  D" << i++ << ":\n";
      print_matrix(os, m, "    ");
    }
  } else if (command == "hexp") {
    os << "  hexp(t A), t = " << scalar_text(p.at("t")) << ":\n";
    print_matrix(os, p.at("result"), "    ");
  } else if (command == "verify-commutator") {
    os << "  step " << scalar_text(p.at("step")) << ", residual " << scalar_text(p.at("residual"))
       << ", form residual " << scalar_text(p.at("form_residual")) << "\n  finite difference:\n";
    print_matrix(os, p.at("fd"), "    ");
    os << "  [A,B]_beta:\n";
    print_matrix(os, p.at("closed"), "    ");
  } else if (command == "group weakhom") {
    for (const char* key : {"unit_preserving", "hom", "commutes"}) print_verdict(os, p.at(key));
  }
}

struct Output {
  bool as_json = false;
  bool timing = false;
};

int finish(const json& report, const Output& out, std::chrono::steady_clock::time_point start) {
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const bool pass = report.at("pass").get<bool>();
  if (out.as_json) {
    json r = report;
    if (out.timing) r["elapsed_ms"] = elapsed;
    std::cout << r.dump(2) << "\n";
  } else {
    const std::string command = report.at("command").get<std::string>();
    std::cout << command << ": " << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& v : report.at("verdicts")) print_verdict(std::cout, v);
    print_payload(std::cout, command, report.at("payload"));
    std::cout << "elapsed_ms: " << elapsed << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom-Lie algebras, matrix Hom-Lie groups and finite Hom-groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.as_json, "Emit the report as JSON");
  app.add_flag("--timing", out.timing, "Include elapsed_ms in JSON output");

  std::string path, rep = "adjoint", rep_file, beta, mat_a, mat_b, map_file, other;
  int max_degree = -1;
  double t = 1.0, step = 1e-4;

  auto* check = app.add_subcommand("check", "Axiom report for an algebra or group document");
  check->add_option("path", path, "Algebra or group JSON")->required();

  auto* cohomology = app.add_subcommand("cohomology", "Cohomology dimensions (Z, B, H) per degree");
  cohomology->add_option("path", path, "Algebra JSON");
  cohomology->add_option("--rep", rep, "adjoint or trivial")->check(CLI::IsMember({"adjoint", "trivial"}));
  cohomology->add_option("--rep-file", rep_file, "Representation JSON");
  cohomology->add_option("--max-degree", max_degree, "Highest degree (default: dim g)");

  auto* derivations = app.add_subcommand("derivations", "Derivation space with inner/outer split");
  derivations->add_option("path", path, "Algebra JSON")->required();

  auto* hexp = app.add_subcommand("hexp", "Hom-exponential beta e^{t A beta^-1}");
  hexp->add_option("--beta", beta, "Matrix JSON for beta")->required();
  hexp->add_option("--matrix", mat_a, "Matrix JSON for A")->required();
  hexp->add_option("--t", t, "Parameter t");

  auto* commutator = app.add_subcommand("verify-commutator", "Finite-difference check of the commutator formula");
  commutator->add_option("--beta", beta, "Matrix JSON for beta")->required();
  commutator->add_option("--A", mat_a, "Matrix JSON for A")->required();
  commutator->add_option("--B", mat_b, "Matrix JSON for B")->required();
  commutator->add_option("--step", step, "Finite-difference step h");

  auto* group = app.add_subcommand("group", "Finite Hom-group checks");
  group->require_subcommand(1);
  group->fallthrough();
  auto* gcheck = group->add_subcommand("check", "Hom-group axioms and derived properties");
  gcheck->add_option("path", path, "Group JSON")->required();
  auto* gweak = group->add_subcommand("weakhom", "Weak homomorphism test for a map G -> H");
  gweak->add_option("path", path, "Group JSON for G")->required();
  gweak->add_option("target", other, "Group JSON for H (default: G)");
  gweak->add_option("--map", map_file, "Map JSON {\"map\": [...]}")->required();
  auto* gad = group->add_subcommand("adaction", "Action axioms of the twisted conjugation");
  gad->add_option("path", path, "Group JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    char* raw = nullptr;
    if (*check) {
      check_status(hl_check_document(read_file(path).c_str(), &raw));
    } else if (*cohomology) {
      if (path.empty() && rep_file.empty()) throw InputError{"cohomology needs an algebra path or --rep-file"};
      std::optional<AlgebraPtr> alg;
      if (!path.empty()) alg.emplace(load_algebra(path));
      const std::string rep_text = rep_file.empty() ? std::string() : read_file(rep_file);
      check_status(hl_cohomology(alg ? alg->get() : nullptr, rep.c_str(), rep_file.empty() ? nullptr : rep_text.c_str(),
                                 max_degree, &raw));
    } else if (*derivations) {
      auto alg = load_algebra(path);
      check_status(hl_derivations(alg.get(), &raw));
    } else if (*hexp) {
      check_status(hl_hexp(read_file(beta).c_str(), read_file(mat_a).c_str(), t, &raw));
    } else if (*commutator) {
      check_status(hl_verify_commutator(read_file(beta).c_str(), read_file(mat_a).c_str(), read_file(mat_b).c_str(),
                                        step, &raw));
    } else if (*gcheck) {
      auto g = load_group(path);
      check_status(hl_group_check(g.get(), &raw));
    } else if (*gweak) {
      auto g = load_group(path);
      auto h = other.empty() ? GroupPtr(nullptr, hl_group_free) : load_group(other);
      check_status(hl_group_weakhom(g.get(), h ? h.get() : g.get(), read_file(map_file).c_str(), &raw));
    } else if (*gad) {
      auto g = load_group(path);
      check_status(hl_group_adaction(g.get(), &raw));
    }
    return finish(take_report(raw), out, start);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  }
}
