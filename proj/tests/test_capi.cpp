// Exercises the shared-library surface only: freelip.h, opaque handles,
// status codes and JSON payloads.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "freelip.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Ctx {
  flp_ctx* p = flp_ctx_new();
  ~Ctx() { flp_ctx_free(p); }
};

struct Str {
  char* p = nullptr;
  ~Str() { flp_string_free(p); }
  std::string str() const { return p ? p : "null"; }
  json parsed() const { return json::parse(str()); }
};

struct Space {
  flp_space* p = nullptr;
  ~Space() { flp_space_free(p); }
};

void generate_space(Ctx& ctx, const json& params, Space& out) {
  Str doc;
  REQUIRE(flp_generate(ctx.p, params.dump().c_str(), &doc.p) == FLP_OK);
  REQUIRE(flp_space_parse(ctx.p, doc.p, &out.p) == FLP_OK);
}

}  // namespace

TEST_CASE("argument and format errors") {
  Ctx ctx;
  Space space;
  CHECK(flp_space_parse(ctx.p, "{not json", &space.p) == FLP_ERROR_FORMAT);
  CHECK(std::string(flp_last_error(ctx.p)).size() > 0);
  CHECK(flp_space_parse(ctx.p, R"({"mode":"exact"})", &space.p) ==
        FLP_ERROR_FORMAT);
  CHECK(flp_space_parse(nullptr, "{}", &space.p) == FLP_ERROR_ARGUMENT);
  CHECK(flp_space_parse(ctx.p, "{}", nullptr) == FLP_ERROR_ARGUMENT);
}

TEST_CASE("domain errors carry their structured payload") {
  Ctx ctx;
  Space space;
  const char* bad =
      R"({"mode":"exact","base":0,"dist":[[0,1,3],[1,0,1],[3,1,0]]})";
  CHECK(flp_space_parse(ctx.p, bad, &space.p) == FLP_ERROR_DOMAIN);
  json payload = json::parse(flp_last_error_json(ctx.p));
  CHECK(payload.at("error") == "TriangleViolation");
  CHECK(payload.at("details").at("b") == 1);
}

TEST_CASE("norm with certificate through the C surface") {
  Ctx ctx;
  Space space;
  generate_space(ctx, {{"name", "ejenega"}, {"k", 4}}, space);
  CHECK(flp_space_size(space.p) == 6);
  CHECK(flp_space_base(space.p) == 0);
  CHECK(flp_space_point(space.p, "z") == 5);
  CHECK(flp_space_point(space.p, "nope") == -1);

  Str out;
  const char* mu = R"({"coeffs":{"5":"1/2","1":1,"2":-1}})";
  REQUIRE(flp_norm(ctx.p, space.p, mu, 1, &out.p) == FLP_OK);
  json cert = out.parsed();
  CHECK(cert.at("value") == "3/2");
  CHECK(cert.at("plan").size() == 3);

  Str empty;
  REQUIRE(flp_norm(ctx.p, space.p, R"({"coeffs":{}})", 0, &empty.p) == FLP_OK);
  CHECK(empty.parsed().at("value") == "0");
}

TEST_CASE("ltp and chain through the C surface") {
  Ctx ctx;
  Space space;
  generate_space(ctx, {{"name", "ejenega"}, {"k", 4}}, space);
  int subset[] = {0, 5};
  Str ltp;
  REQUIRE(flp_ltp(ctx.p, space.p, subset, 2, &ltp.p) == FLP_OK);
  CHECK(ltp.parsed().at("modulus") == "1/3");

  Str chain;
  REQUIRE(flp_chain(ctx.p, space.p, subset, 2, &chain.p) == FLP_OK);
  CHECK(chain.parsed().at("oct") == "3/2");
  CHECK(chain.parsed().at("holds") == true);

  Str profile;
  REQUIRE(flp_profile(ctx.p, space.p, &profile.p) == FLP_OK);
  CHECK(profile.parsed().at("pairs").size() == 15);
}

TEST_CASE("oct frechet ramsey extend distortion") {
  Ctx ctx;
  Space ej;
  generate_space(ctx, {{"name", "ejenega"}, {"k", 4}}, ej);

  Str oct;
  json family = json::array(
      {{{"coeffs", {{"5", "1/2"}}}}, {{"coeffs", {{"5", "-1/2"}}}}});
  REQUIRE(flp_oct(ctx.p, ej.p, family.dump().c_str(), &oct.p) == FLP_OK);
  CHECK(oct.parsed().at("index") == "3/2");
  CHECK(oct.parsed().at("molecule") == json::array({1, 2}));

  Str fre;
  REQUIRE(flp_frechet(ctx.p, ej.p, R"({"coeffs":{"5":"1/2"}})", &fre.p) ==
          FLP_OK);
  CHECK(fre.parsed().at("differentiable") == true);

  Space fb;
  generate_space(ctx, {{"name", "4branch"}, {"k", 5}}, fb);
  Str fre2;
  REQUIRE(flp_frechet(ctx.p, fb.p, R"({"coeffs":{"3":"1/2"}})", &fre2.p) ==
          FLP_OK);
  CHECK(fre2.parsed().at("differentiable") == false);
  CHECK(fre2.parsed().at("witnessPoint") == 0);

  Space ej20;
  generate_space(ctx, {{"name", "ejenega"}, {"k", 20}}, ej20);
  int nz[] = {0, 21};
  Str ram;
  REQUIRE(flp_ramsey(ctx.p, ej20.p, nz, 2, "1/5", &ram.p) == FLP_OK);
  CHECK(ram.parsed().at("A").size() == 22);

  Space line;
  generate_space(ctx, {{"name", "line"}, {"k", 4}}, line);
  int n01[] = {0, 1};
  Str ext;
  REQUIRE(flp_extend(ctx.p, line.p, n01, 2,
                     R"({"values":{"0":0,"1":1}})", 5, 2, "1/4",
                     &ext.p) == FLP_OK);
  CHECK(ext.parsed().at("uMinusV") == "35/2");

  Space graph, equi;
  generate_space(ctx, {{"name", "graph-m"}, {"k", 8}}, graph);
  generate_space(ctx, {{"name", "equilateral"}, {"n", 10}, {"c", "1"}}, equi);
  Str dist;
  REQUIRE(flp_distortion(ctx.p, graph.p, equi.p, nullptr, 0, &dist.p) ==
          FLP_OK);
  CHECK(dist.parsed().at("distortion") == "2");
}

TEST_CASE("scale restrict l1sum handles") {
  Ctx ctx;
  Space ej;
  generate_space(ctx, {{"name", "ejenega"}, {"k", 3}}, ej);

  Space scaled;
  REQUIRE(flp_space_scale(ctx.p, ej.p, "3/2", &scaled.p) == FLP_OK);
  int nz[] = {0, 4};
  Str a, b;
  REQUIRE(flp_ltp(ctx.p, ej.p, nz, 2, &a.p) == FLP_OK);
  REQUIRE(flp_ltp(ctx.p, scaled.p, nz, 2, &b.p) == FLP_OK);
  CHECK(a.parsed().at("modulus") == b.parsed().at("modulus"));

  Space restricted;
  int keep[] = {0, 4, 1};
  REQUIRE(flp_space_restrict(ctx.p, ej.p, keep, 3, &restricted.p) == FLP_OK);
  CHECK(flp_space_size(restricted.p) == 3);

  Space glued;
  REQUIRE(flp_space_l1_sum(ctx.p, ej.p, restricted.p, &glued.p) == FLP_OK);
  CHECK(flp_space_size(glued.p) == 7);

  CHECK(flp_space_scale(ctx.p, ej.p, "0", &scaled.p) == FLP_ERROR_DOMAIN);
}

TEST_CASE("jobs do not change results") {
  Ctx ctx;
  Space fb;
  generate_space(ctx, {{"name", "4branch"}, {"k", 6}}, fb);
  int subset[] = {2, 3, 0, 1};
  Str one;
  flp_set_jobs(ctx.p, 1);
  REQUIRE(flp_chain(ctx.p, fb.p, subset, 4, &one.p) == FLP_OK);
  Str four;
  flp_set_jobs(ctx.p, 4);
  REQUIRE(flp_chain(ctx.p, fb.p, subset, 4, &four.p) == FLP_OK);
  CHECK(one.str() == four.str());
}

TEST_CASE("replication rows all pass") {
  Ctx ctx;
  Str out;
  REQUIRE(flp_replicate(ctx.p, &out.p) == FLP_OK);
  json rows = out.parsed();
  CHECK(rows.size() >= 15);
  for (const json& row : rows) {
    INFO(row.dump());
    CHECK(row.at("pass") == true);
  }
}

TEST_CASE("version string") {
  CHECK(std::string(flp_version()).find('.') != std::string::npos);
}
