#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <string>

#include "schurlat.h"

namespace {

struct Context {
  schurlat_context* ctx = nullptr;
  Context() { EXPECT_EQ(schurlat_context_create(&ctx), SCHURLAT_OK); }
  ~Context() { schurlat_context_destroy(ctx); }
};

nlohmann::json run(schurlat_context* ctx, const char* command, const std::string& request, schurlat_status expect) {
  char* out = nullptr;
  EXPECT_EQ(schurlat_run(ctx, command, request.c_str(), &out), expect) << schurlat_last_error(ctx);
  if (!out) return nullptr;
  auto j = nlohmann::json::parse(out);
  schurlat_string_free(out);
  return j;
}

}  // namespace

TEST(CApi, Version) { EXPECT_STREQ(schurlat_version(), "0.1.0"); }

TEST(CApi, RunDimAndFix) {
  Context c;
  auto dim = run(c.ctx, "dim", R"({"n": 3, "lambda": [2, 1]})", SCHURLAT_OK);
  EXPECT_EQ(dim["dim"], 8);
  auto fix = run(c.ctx, "fix", R"({"n": 2, "lambda": [2], "field": {"backend": "p-adic", "p": 3}})", SCHURLAT_OK);
  EXPECT_EQ(fix["status"], "ok");
  EXPECT_EQ(fix["fix"]["bfs"]["classes"], 1);
  EXPECT_STREQ(schurlat_last_error(c.ctx), "");
}

TEST(CApi, ErrorsMapToStatus) {
  Context c;
  run(c.ctx, "dim", "{not json", SCHURLAT_INVALID_INPUT);
  EXPECT_STRNE(schurlat_last_error(c.ctx), "");
  run(c.ctx, "fix", R"({"n": 2, "lambda": [3, 2, 1]})", SCHURLAT_INVALID_INPUT);
  run(c.ctx, "nonsense", "{}", SCHURLAT_INVALID_INPUT);
  run(c.ctx, "fix", R"({"n": 3, "lambda": [2], "caps": {"N": 4}})", SCHURLAT_CAP_EXCEEDED);
  char* out = nullptr;
  EXPECT_EQ(schurlat_run(c.ctx, nullptr, "{}", &out), SCHURLAT_INVALID_INPUT);
  EXPECT_EQ(schurlat_run(c.ctx, "dim", "{}", nullptr), SCHURLAT_INVALID_INPUT);
}

TEST(CApi, ProgressCallback) {
  Context c;
  int calls = 0;
  schurlat_set_progress(
      c.ctx, [](const char*, void* user) { ++*static_cast<int*>(user); }, &calls);
  auto scan = run(c.ctx, "scan", R"({"cases": [{"n": 2, "lambda": [1]}, {"n": 2, "lambda": [2]}]})", SCHURLAT_OK);
  EXPECT_EQ(scan["summary"]["cases"], 2);
  EXPECT_EQ(calls, 2);
}

TEST(CApi, PartitionHelpers) {
  Context c;
  const int two[] = {2};
  const int two_one[] = {2, 1};
  int core = -1;
  EXPECT_EQ(schurlat_is_core(c.ctx, two, 1, 2, &core), SCHURLAT_OK);
  EXPECT_EQ(core, 0);
  EXPECT_EQ(schurlat_is_core(c.ctx, two_one, 2, 2, &core), SCHURLAT_OK);
  EXPECT_EQ(core, 1);
  std::uint64_t dim = 0;
  EXPECT_EQ(schurlat_dimension(c.ctx, 3, two_one, 2, &dim), SCHURLAT_OK);
  EXPECT_EQ(dim, 8u);
  const int bad[] = {1, 2};
  EXPECT_EQ(schurlat_dimension(c.ctx, 3, bad, 2, &dim), SCHURLAT_INVALID_INPUT);
}

TEST(CApi, ModuleHandle) {
  Context c;
  const int parts[] = {2, 1};
  schurlat_module* m = nullptr;
  ASSERT_EQ(schurlat_module_create(c.ctx, 2, parts, 2, "quotient", &m), SCHURLAT_OK);
  EXPECT_EQ(schurlat_module_dim(m), 2u);
  int letters[3] = {0, 0, 0};
  EXPECT_EQ(schurlat_module_basis_word(m, 1, letters, 3), 3u);
  EXPECT_EQ(letters[0], 1);
  EXPECT_EQ(letters[1], 2);
  EXPECT_EQ(letters[2], 2);
  schurlat_module_destroy(m);
  EXPECT_EQ(schurlat_module_create(c.ctx, 2, parts, 2, "other", &m), SCHURLAT_INVALID_INPUT);
}
