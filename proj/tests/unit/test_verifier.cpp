#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "claims.hpp"

using namespace simpcx::verifier;

TEST_CASE("the registry holds every claim id once") {
  const std::vector<std::string> ids{"thm1.1",      "cor1.2",          "thm1.4",          "thm1.5",
                                     "lem5.2",      "lem5.3",          "rem5.5",          "sec3.joins",
                                     "sec3.quadruples", "sec4.census", "props.s2xs2_12", "manifold.all"};
  REQUIRE(registry().size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(registry()[i].id == ids[i]);
  CHECK(find_claim("thm1.5") != nullptr);
  CHECK(find_claim("thm9.9") == nullptr);
}

TEST_CASE("unknown ids are rejected before anything runs") {
  CHECK_THROWS_AS(run_claims({"sec4.census", "bogus"}, {}), std::invalid_argument);
}

TEST_CASE("reports are deterministic and machine readable") {
  RunOptions opts;
  opts.jobs = 2;
  const auto a = run_claims({"sec4.census", "sec3.quadruples"}, opts);
  const auto b = run_claims({"sec4.census", "sec3.quadruples"}, opts);
  CHECK(render_text(a, false) == render_text(b, false));
  CHECK(render_json(a, opts, false) == render_json(b, opts, false));
  CHECK(overall(a) == Status::pass);

  const auto j = nlohmann::json::parse(render_json(a, opts, false));
  REQUIRE(j["claims"].size() == 2);
  CHECK(j["claims"][0]["id"] == "sec4.census");
  CHECK(j["claims"][0]["status"] == "pass");
  CHECK_FALSE(j["claims"][0].contains("elapsed_ms"));
  CHECK(nlohmann::json::parse(render_json(a, opts, true))["claims"][0].contains("elapsed_ms"));
}

TEST_CASE("overall status") {
  ClaimResult p{"a", "", Status::pass, {}, 0};
  ClaimResult u{"b", "", Status::undetermined, {}, 0};
  ClaimResult f{"c", "", Status::fail, {}, 0};
  CHECK(overall({p, u}) == Status::undetermined);
  CHECK(overall({p, u, f}) == Status::fail);
  CHECK(overall({p}) == Status::pass);
  CHECK(to_string(Status::undetermined) == "undetermined");
}
