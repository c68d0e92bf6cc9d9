#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <gtest/gtest.h>

#include "homlie/io.hpp"
#include "support.hpp"

using namespace homlie;
using io::json;

namespace {

json load(const std::string& name) {
  std::ifstream in(std::string(HOMLIE_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse(ss.str());
}

std::optional<ErrorCode> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST(IoMatrix, ExactAndApprox) {
  const Matrix d = io::matrix_from_json(load("diag12.json"));
  EXPECT_EQ(d.mode(), Mode::exact);
  EXPECT_EQ(d.exact(), QMatrix::diagonal({Rational(1), Rational(2)}));
  const json j = json::parse(R"({"rows": 1, "cols": 2, "entries": [["1/3", 2]]})");
  EXPECT_EQ(io::exact_matrix_from_json(j), (QMatrix{{Rational(1, 3), 2}}));
  const Matrix a = io::matrix_from_json(j, Mode::approx);
  EXPECT_EQ(a.mode(), Mode::approx);
  EXPECT_DOUBLE_EQ(a.approx()(0, 0), 1.0 / 3.0);
  const json f = json::parse(R"({"rows": 1, "cols": 1, "entries": [[0.5]]})");
  EXPECT_EQ(code_of([&] { io::exact_matrix_from_json(f); }), ErrorCode::mode_error);
  const json ragged = json::parse(R"({"rows": 2, "cols": 1, "entries": [[1]]})");
  EXPECT_EQ(code_of([&] { io::exact_matrix_from_json(ragged); }), ErrorCode::parse_error);
}

TEST(IoMatrix, RoundTrip) {
  auto g = testing_support::rng(60);
  for (int trial = 0; trial < 10; ++trial) {
    const QMatrix m = testing_support::random_rational_matrix(3, 2, g);
    EXPECT_EQ(io::exact_matrix_from_json(io::to_json(m)), m);
    const RMatrix r = m.cast<double>();
    EXPECT_EQ(io::matrix_from_json(io::to_json(r)).approx(), r);
  }
}

TEST(IoAlgebra, LoadsCorpus) {
  const auto s = std::get<QAlgebra>(io::algebra_from_json(load("sl2.json")));
  EXPECT_EQ(s, sl2());
  EXPECT_EQ(s.label(1), "e");
  const auto q = std::get<QAlgebra>(io::algebra_from_json(load("qsl2_q2.json")));
  EXPECT_EQ(q, q_sl2(Rational(2)));
  const auto y = std::get<QAlgebra>(io::algebra_from_json(load("yau_sl2.json")));
  EXPECT_EQ(y, yau_twisted_sl2(Rational(2)));
  EXPECT_EQ(code_of([] { io::parse("{not json"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([&] { io::algebra_from_json(load("garbage.json")); }), ErrorCode::parse_error);
}

TEST(IoAlgebra, RoundTrip) {
  for (const QAlgebra& a : {sl2(), q_sl2(Rational(3)), yau_twisted_sl2(Rational(1, 2)), abelian(2)}) {
    const auto back = std::get<QAlgebra>(io::algebra_from_json(io::to_json(a)));
    EXPECT_EQ(back, a);
    EXPECT_EQ(io::to_json(back).dump(), io::to_json(a).dump());
  }
  const RAlgebra r = sl2().cast<double>();
  const auto back = io::algebra_from_json(io::to_json(r));
  ASSERT_TRUE(std::holds_alternative<RAlgebra>(back));
  EXPECT_EQ(std::get<RAlgebra>(back), r);
}

TEST(IoAlgebra, RejectsBadBrackets) {
  json j = io::to_json(sl2());
  j["brackets"][0]["i"] = 1;  // i = j
  EXPECT_EQ(code_of([&] { io::algebra_from_json(j); }), ErrorCode::bad_parameter);
  json k = io::to_json(sl2());
  k["phi"] = io::to_json(QMatrix::identity(2));
  EXPECT_EQ(code_of([&] { io::algebra_from_json(k); }), ErrorCode::dimension_mismatch);
}

TEST(IoRepresentation, Trivial) {
  const QRepresentation rep = io::representation_from_json(load("sl2_trivial_rep.json"));
  EXPECT_EQ(rep.vdim, 1u);
  EXPECT_EQ(rep.alg, sl2());
  EXPECT_TRUE(check_representation(rep).all_pass());
}

TEST(IoGroup, RoundTrip) {
  const json doc = load("z4_hom.json");
  EXPECT_TRUE(io::is_group_document(doc));
  EXPECT_FALSE(io::is_group_document(load("sl2.json")));
  const FiniteHomGroup g = io::group_from_json(doc);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(io::to_json(g), doc);
  EXPECT_EQ(io::map_from_json(load("z4_shift_map.json")), (std::vector<std::size_t>{1, 2, 3, 0}));
  json bad = doc;
  bad["unit"] = 1;
  EXPECT_EQ(code_of([&] { io::group_from_json(bad); }), ErrorCode::not_a_group);
}
