#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "homlie/homlie.h"

using json = nlohmann::json;

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(HOMLIE_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json take(char* raw) {
  std::unique_ptr<char, void (*)(char*)> owned(raw, hl_string_free);
  return json::parse(owned.get());
}

struct Alg {
  hl_algebra* p = nullptr;
  ~Alg() { hl_algebra_free(p); }
};
struct Grp {
  hl_group* p = nullptr;
  ~Grp() { hl_group_free(p); }
};

}  // namespace

TEST(CApi, StatusNames) {
  EXPECT_STREQ(hl_status_name(HL_OK), "ok");
  EXPECT_STRNE(hl_status_name(HL_ERR_NOT_MULTIPLICATIVE), hl_status_name(HL_ERR_PARSE));
}

TEST(CApi, NullArguments) {
  hl_algebra* a = nullptr;
  EXPECT_EQ(hl_algebra_from_json(nullptr, &a), HL_ERR_NULL_ARGUMENT);
  EXPECT_EQ(hl_algebra_from_json("{}", nullptr), HL_ERR_NULL_ARGUMENT);
  char* out = nullptr;
  EXPECT_EQ(hl_algebra_check(nullptr, &out), HL_ERR_NULL_ARGUMENT);
  hl_algebra_free(nullptr);
  hl_group_free(nullptr);
  hl_string_free(nullptr);
}

TEST(CApi, AlgebraCheck) {
  Alg s;
  ASSERT_EQ(hl_algebra_from_json(data("sl2.json").c_str(), &s.p), HL_OK);
  char* raw = nullptr;
  ASSERT_EQ(hl_algebra_check(s.p, &raw), HL_OK);
  const json r = take(raw);
  EXPECT_TRUE(r["pass"].get<bool>());
  EXPECT_EQ(r["command"], "check");

  Alg q;
  ASSERT_EQ(hl_algebra_from_json(data("qsl2_q2.json").c_str(), &q.p), HL_OK);
  ASSERT_EQ(hl_algebra_check(q.p, &raw), HL_OK);
  const json rq = take(raw);
  EXPECT_FALSE(rq["pass"].get<bool>());
  bool seen = false;
  for (const auto& v : rq["verdicts"])
    if (v["name"] == "multiplicative") {
      seen = true;
      EXPECT_FALSE(v["pass"].get<bool>());
      EXPECT_EQ(v["witness"]["lhs"], json::parse(R"(["0","3/2","0"])"));
      EXPECT_EQ(v["witness"]["rhs"], json::parse(R"(["0","27/16","0"])"));
    }
  EXPECT_TRUE(seen);
  EXPECT_EQ(hl_cohomology(q.p, "adjoint", nullptr, -1, &raw), HL_ERR_NOT_MULTIPLICATIVE);
  EXPECT_NE(std::string(hl_last_error()).size(), 0u);
  EXPECT_EQ(hl_derivations(q.p, &raw), HL_ERR_NOT_MULTIPLICATIVE);
}

TEST(CApi, ParseErrors) {
  hl_algebra* a = nullptr;
  EXPECT_EQ(hl_algebra_from_json("{oops", &a), HL_ERR_PARSE);
  EXPECT_EQ(a, nullptr);
  EXPECT_EQ(hl_algebra_from_json(data("garbage.json").c_str(), &a), HL_ERR_PARSE);
  hl_group* g = nullptr;
  EXPECT_EQ(hl_group_from_json(data("sl2.json").c_str(), &g), HL_ERR_PARSE);
  char* raw = nullptr;
  EXPECT_EQ(hl_hexp(R"({"rows":1,"cols":1,"entries":[[1]]})", R"({"rows":2,"cols":2,"entries":[[0,0],[0,0]]})", 1.0,
                   &raw),
            HL_ERR_DIMENSION);
  EXPECT_EQ(hl_hexp(R"({"rows":2,"cols":2,"entries":[[1,2],[2,4]]})", data("N.json").c_str(), 1.0, &raw),
            HL_ERR_SINGULAR);
}

TEST(CApi, Cohomology) {
  Alg s;
  ASSERT_EQ(hl_algebra_from_json(data("sl2.json").c_str(), &s.p), HL_OK);
  char* raw = nullptr;
  ASSERT_EQ(hl_cohomology(s.p, "adjoint", nullptr, 2, &raw), HL_OK);
  const json r = take(raw);
  EXPECT_TRUE(r["pass"].get<bool>());
  const json& dims = r["payload"]["dims"];
  ASSERT_EQ(dims.size(), 3u);
  EXPECT_EQ(dims[0]["H"], 0);
  EXPECT_EQ(dims[1]["H"], 0);
  EXPECT_EQ(dims[1]["Z"], 3);
  EXPECT_EQ(hl_cohomology(s.p, "adjoint", nullptr, 9, &raw), HL_ERR_BAD_PARAMETER);
  EXPECT_EQ(hl_cohomology(s.p, "nonsense", nullptr, 1, &raw), HL_ERR_BAD_PARAMETER);

  ASSERT_EQ(hl_cohomology(nullptr, "adjoint", data("sl2_trivial_rep.json").c_str(), -1, &raw), HL_OK);
  const json t = take(raw);
  ASSERT_EQ(t["payload"]["dims"].size(), 4u);
  EXPECT_EQ(t["payload"]["dims"][3]["H"], 1);
}

TEST(CApi, DerivationsAndMatrices) {
  Alg s;
  ASSERT_EQ(hl_algebra_from_json(data("sl2.json").c_str(), &s.p), HL_OK);
  char* raw = nullptr;
  ASSERT_EQ(hl_derivations(s.p, &raw), HL_OK);
  const json d = take(raw);
  EXPECT_EQ(d["payload"]["dim"], 3);
  EXPECT_EQ(d["payload"]["outer"], 0);

  ASSERT_EQ(hl_hexp(data("I2.json").c_str(), data("N.json").c_str(), 1.0, &raw), HL_OK);
  const json h = take(raw);
  EXPECT_DOUBLE_EQ(h["payload"]["result"]["entries"][0][1].get<double>(), 1.0);

  ASSERT_EQ(hl_verify_commutator(data("diag12.json").c_str(), data("E12.json").c_str(), data("E21.json").c_str(), 1e-4,
                                 &raw),
            HL_OK);
  const json c = take(raw);
  EXPECT_TRUE(c["pass"].get<bool>());
  EXPECT_LE(c["payload"]["residual"].get<double>(), 1e-6);
}

TEST(CApi, Groups) {
  Grp g;
  ASSERT_EQ(hl_group_from_json(data("z4_hom.json").c_str(), &g.p), HL_OK);
  char* raw = nullptr;
  ASSERT_EQ(hl_group_check(g.p, &raw), HL_OK);
  EXPECT_TRUE(take(raw)["pass"].get<bool>());
  ASSERT_EQ(hl_group_adaction(g.p, &raw), HL_OK);
  EXPECT_TRUE(take(raw)["pass"].get<bool>());
  ASSERT_EQ(hl_group_weakhom(g.p, g.p, data("z4_twist_map.json").c_str(), &raw), HL_OK);
  EXPECT_TRUE(take(raw)["pass"].get<bool>());
  ASSERT_EQ(hl_group_weakhom(g.p, g.p, data("z4_shift_map.json").c_str(), &raw), HL_OK);
  EXPECT_FALSE(take(raw)["pass"].get<bool>());
  EXPECT_EQ(hl_group_weakhom(g.p, g.p, R"({"map":[0,1]})", &raw), HL_ERR_DIMENSION);

  Grp bad;
  ASSERT_EQ(hl_group_from_json(data("z4_bad_twist.json").c_str(), &bad.p), HL_OK);
  ASSERT_EQ(hl_group_check(bad.p, &raw), HL_OK);
  const json r = take(raw);
  EXPECT_FALSE(r["pass"].get<bool>());
  EXPECT_EQ(hl_group_adaction(bad.p, &raw), HL_ERR_NOT_A_GROUP);
}

TEST(CApi, CheckDocumentIsDeterministic) {
  char* a = nullptr;
  char* b = nullptr;
  ASSERT_EQ(hl_check_document(data("yau_sl2.json").c_str(), &a), HL_OK);
  ASSERT_EQ(hl_check_document(data("yau_sl2.json").c_str(), &b), HL_OK);
  EXPECT_STREQ(a, b);
  hl_string_free(a);
  hl_string_free(b);
  ASSERT_EQ(hl_check_document(data("z4_hom.json").c_str(), &a), HL_OK);
  EXPECT_EQ(take(a)["command"], "group check");
}
