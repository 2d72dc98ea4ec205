#include <gtest/gtest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "skewbrace/skewbrace.h"

namespace {

using Json = nlohmann::json;

std::string data(const char* name) { return std::string(SB_DATA_DIR) + "/" + name; }

std::string take(char* s) {
  std::string out = s ? s : "";
  sb_string_free(s);
  return out;
}

struct Brace {
  sb_brace* h = nullptr;
  ~Brace() { sb_brace_free(h); }
};

struct Group {
  sb_group* h = nullptr;
  ~Group() { sb_group_free(h); }
};

}  // namespace

TEST(CApi, StatusNamesAndVersion) {
  EXPECT_STREQ(sb_status_name(SB_OK), "Ok");
  EXPECT_STREQ(sb_status_name(SB_E_BUDGET_EXCEEDED), "BudgetExceeded");
  EXPECT_NE(std::string(sb_status_name(SB_E_PARSE)), sb_status_name(SB_E_IO));
  EXPECT_FALSE(std::string(sb_version()).empty());
  sb_string_free(nullptr);
  sb_brace_free(nullptr);
}

TEST(CApi, LoadAndQuery) {
  Brace d8;
  ASSERT_EQ(sb_brace_load(data("triv_d8.brace").c_str(), &d8.h), SB_OK) << sb_last_error();
  EXPECT_EQ(sb_brace_order(d8.h), 8u);
  for (uint32_t x = 0; x < 8; ++x)
    for (uint32_t y = 0; y < 8; ++y) EXPECT_EQ(sb_brace_dot(d8.h, x, y), sb_brace_circ(d8.h, x, y));
  char* text = nullptr;
  ASSERT_EQ(sb_brace_to_text(d8.h, &text), SB_OK);
  Brace again;
  std::string t = take(text);
  ASSERT_EQ(sb_brace_parse(t.c_str(), &again.h), SB_OK);
  char* text2 = nullptr;
  ASSERT_EQ(sb_brace_to_text(again.h, &text2), SB_OK);
  EXPECT_EQ(take(text2), t);

  char* info = nullptr;
  ASSERT_EQ(sb_brace_info_json(d8.h, "all", 2, &info), SB_OK) << sb_last_error();
  auto j = Json::parse(take(info));
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["symmetric"], true);
}

TEST(CApi, ErrorsSetLastError) {
  Brace b;
  EXPECT_EQ(sb_brace_load(data("bad_identity.brace").c_str(), &b.h), SB_E_NO_IDENTITY_AT_ZERO);
  EXPECT_EQ(b.h, nullptr);
  EXPECT_NE(std::string(sb_last_error()).find("identity"), std::string::npos);
  EXPECT_EQ(sb_brace_load("/nonexistent/file.brace", &b.h), SB_E_IO);
  EXPECT_EQ(sb_brace_parse("skewbrace v1 order=2\n0 1\n", &b.h), SB_E_PARSE);
  EXPECT_NE(std::string(sb_last_error()).find("line"), std::string::npos);
  EXPECT_EQ(sb_brace_parse(nullptr, &b.h), SB_E_INVALID_ARGUMENT);
  // a group table that is not associative
  uint32_t dot[9] = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  uint32_t bad[9] = {0, 1, 2, 1, 0, 2, 2, 2, 0};
  EXPECT_NE(sb_brace_from_tables(3, dot, bad, &b.h), SB_OK);
  ASSERT_EQ(sb_brace_from_tables(3, dot, dot, &b.h), SB_OK);
  EXPECT_EQ(sb_brace_order(b.h), 3u);
}

TEST(CApi, Words) {
  Brace d8;
  ASSERT_EQ(sb_brace_load(data("triv_d8.brace").c_str(), &d8.h), SB_OK);
  uint32_t args[2] = {1, 4}, out = 99;
  ASSERT_EQ(sb_word_eval(d8.h, "g", args, 2, &out), SB_OK);
  // [r, s] in D8 with r = 1, s = 4 is r^2 = 2
  EXPECT_EQ(out, 2u);
  EXPECT_EQ(sb_word_eval(d8.h, "gg", args, 2, &out), SB_E_ARITY_MISMATCH);
  EXPECT_EQ(sb_word_eval(d8.h, "x", args, 2, &out), SB_E_PARSE);
}

TEST(CApi, IsoclinismFiberAndEmbed) {
  Brace d8, q8, c8;
  ASSERT_EQ(sb_brace_load(data("triv_d8.brace").c_str(), &d8.h), SB_OK);
  ASSERT_EQ(sb_brace_load(data("triv_q8.brace").c_str(), &q8.h), SB_OK);
  ASSERT_EQ(sb_brace_load(data("triv_c8.brace").c_str(), &c8.h), SB_OK);
  int found = -1;
  char* w = nullptr;
  ASSERT_EQ(sb_isoclinic(d8.h, c8.h, 1, &found, &w), SB_OK);
  EXPECT_EQ(found, 0);
  EXPECT_EQ(w, nullptr);
  ASSERT_EQ(sb_isoclinic(d8.h, q8.h, 1, &found, &w), SB_OK);
  ASSERT_EQ(found, 1);
  std::string witness = take(w);
  EXPECT_EQ(sb_verify_isoclinism(d8.h, q8.h, witness.c_str()), SB_OK) << sb_last_error();
  auto j = Json::parse(witness);
  j["theta"][0] = 5;
  EXPECT_EQ(sb_verify_isoclinism(d8.h, q8.h, j.dump().c_str()), SB_E_WITNESS_INVALID);

  Brace c;
  ASSERT_EQ(sb_fiber_product(d8.h, q8.h, witness.c_str(), &c.h), SB_OK) << sb_last_error();
  EXPECT_EQ(sb_brace_order(c.h), 16u);  // |A| |Ann B|
  Brace wb;
  char* report = nullptr;
  ASSERT_EQ(sb_embed(d8.h, q8.h, witness.c_str(), &wb.h, &report), SB_OK) << sb_last_error();
  auto r = Json::parse(take(report));
  EXPECT_TRUE(r.is_object());
  EXPECT_EQ(sb_brace_order(wb.h) % 8, 0u);
}

TEST(CApi, CohomologyAndTransgression) {
  Brace k;
  ASSERT_EQ(sb_brace_parse("skewbrace v1 order=2\n0 1\n1 0\n\n0 1\n1 0\n", &k.h), SB_OK);
  char* out = nullptr;
  ASSERT_EQ(sb_h2_json(k.h, "Z/2", &out), SB_OK) << sb_last_error();
  auto h = Json::parse(take(out));
  EXPECT_GE(h["order"].get<int>(), 1);
  EXPECT_EQ(sb_h2_json(k.h, "Z2", &out), SB_E_PARSE);

  const char* cocycle = R"({"coeff":[2],"alpha":[[0,0],[0,1]],"mu":[[0,0],[0,1]]})";
  Brace g;
  ASSERT_EQ(sb_extend(k.h, cocycle, &g.h), SB_OK) << sb_last_error();
  EXPECT_EQ(sb_brace_order(g.h), 4u);
  const char* broken = R"({"coeff":[2],"alpha":[[0,1],[0,1]],"mu":[[0,0],[0,1]]})";
  Brace bad;
  EXPECT_EQ(sb_extend(k.h, broken, &bad.h), SB_E_IDENTITY_FAILS);

  uint32_t ideal[2] = {0, 1};
  ASSERT_EQ(sb_transgress_json(g.h, ideal, 2, 0, &out), SB_OK) << sb_last_error();
  auto t = Json::parse(take(out));
  EXPECT_EQ(t["kernel_order"].get<int>() * t["meet_order"].get<int>(), 2);
  EXPECT_EQ(sb_transgress_json(g.h, ideal, 2, 3, &out), SB_E_MODULUS_TOO_SMALL);
}

TEST(CApi, LambdaGroup) {
  Brace d8;
  ASSERT_EQ(sb_brace_load(data("triv_d8.brace").c_str(), &d8.h), SB_OK);
  Group g;
  ASSERT_EQ(sb_lambda_group(d8.h, &g.h), SB_OK);
  EXPECT_EQ(sb_group_order(g.h), 64u);
  char* text = nullptr;
  ASSERT_EQ(sb_group_to_text(g.h, &text), SB_OK);
  Group back;
  ASSERT_EQ(sb_group_parse(take(text).c_str(), &back.h), SB_OK);
  EXPECT_EQ(sb_group_order(back.h), 64u);
}

TEST(CApi, Census) {
  char* summary = nullptr;
  char* rows = nullptr;
  ASSERT_EQ(sb_census(8, 0, 2, &summary, &rows), SB_OK);
  auto s = Json::parse(take(summary));
  EXPECT_EQ(s["total"], 47);
  std::string lines = take(rows);
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 47);
  EXPECT_EQ(sb_census(16, 0, 1, &summary, nullptr), SB_E_BUDGET_EXCEEDED);
  EXPECT_EQ(sb_census(17, 1, 1, &summary, nullptr), SB_E_INVALID_ARGUMENT);
}
