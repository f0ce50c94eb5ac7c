#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wedge/verify.hpp"

#include <filesystem>

using namespace wedge;

namespace {

VerifyConfig small_config() {
  VerifyConfig cfg;
  cfg.max_n = 3;
  cfg.max_weight = 2;
  cfg.max_power = 2;
  return cfg;
}

}  // namespace

TEST_CASE("engine cache memoizes by canonical form") {
  EngineCache cache(EngineOptions{});
  const auto ctx = VariableContext::standard(3);
  const auto I = parse_ideal(ctx, "(x1*x2, x2*x3)");
  const auto J = parse_ideal(ctx, "(x2*x3, x1*x2, x1*x2^2)");  // same ideal
  const auto a = cache.invariants_of(I);
  CHECK(cache.size() == 1);
  const auto b = cache.invariants_of(J);
  CHECK(cache.size() == 1);
  CHECK(a.reg == b.reg);
  CHECK(a.depth == b.depth);
}

TEST_CASE("disk cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "wedge-cache-test";
  std::filesystem::remove_all(dir);
  const auto I = parse_ideal(VariableContext::standard(3), "(x1*x2, x2*x3)");
  HomologicalInvariants first;
  {
    EngineCache cache(EngineOptions{}, dir.string());
    first = cache.invariants_of(I);
  }
  CHECK(std::filesystem::exists(dir));
  CHECK_FALSE(std::filesystem::is_empty(dir));
  {
    EngineCache cache(EngineOptions{}, dir.string());
    const auto again = cache.invariants_of(I);
    CHECK(again.reg == first.reg);
    CHECK(again.pd == first.pd);
    CHECK(again.depth == first.depth);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("star suite at small caps is all matches") {
  const VerifyConfig cfg = small_config();
  EngineCache cache(engine_options(cfg));
  const Report rep = verify_star_suite(cfg, cache);
  CHECK(rep.ok());
  CHECK(rep.mismatches == 0);
  CHECK(rep.matches > 0);
  CHECK(rep.suite == "star");
}

TEST_CASE("path suite at small caps is all matches") {
  const VerifyConfig cfg = small_config();
  EngineCache cache(engine_options(cfg));
  const Report rep = verify_path_suite(cfg, cache);
  CHECK(rep.ok());
  CHECK(rep.matches > 0);
  // the non-closed pattern (2,2) does not exist at n=3; closed cases only
  for (const auto& c : rep.cases)
    if (c.verdict == Verdict::skipped)
      CHECK((c.reason == "not-integrally-closed" || c.reason == "not-applicable" ||
             c.reason == "resource-cap"));
}

TEST_CASE("path suite records skipped non-closed vectors with a reason") {
  VerifyConfig cfg;
  cfg.max_n = 4;
  cfg.max_weight = 2;
  cfg.max_power = 1;
  EngineCache cache(engine_options(cfg));
  const Report rep = verify_path_suite(cfg, cache);
  CHECK(rep.ok());
  bool saw_skip = false;
  for (const auto& c : rep.cases)
    if (c.verdict == Verdict::skipped && c.reason == "not-integrally-closed") saw_skip = true;
  CHECK(saw_skip);  // (2,2) and friends
}

TEST_CASE("colon suite at small caps") {
  VerifyConfig cfg;
  cfg.max_weight = 2;
  cfg.max_power = 2;
  const Report rep = verify_colon_identities(cfg);
  CHECK(rep.ok());
  CHECK(rep.matches > 0);
}

TEST_CASE("splitting checker on known cases") {
  EngineCache cache(EngineOptions{});
  SUBCASE("the path proof's splitting") {
    const auto I = edge_ideal(build_path({2, 1, 1, 1}));
    const auto c = check_betti_splitting(I, 1, cache);
    CHECK(c.verdict == Verdict::match);
  }
  SUBCASE("triangle ideal with pivot x1") {
    const auto I = parse_ideal(VariableContext::standard(3), "(x1*x2, x1*x3, x2*x3)");
    const auto c = check_betti_splitting(I, 1, cache);
    CHECK(c.verdict == Verdict::match);
  }
  SUBCASE("principal ideals have no splitting") {
    const auto I = parse_ideal(VariableContext::standard(2), "(x1*x2)");
    const auto c = check_betti_splitting(I, 1, cache);
    CHECK(c.verdict == Verdict::skipped);
    CHECK(c.reason == "not-applicable");
  }
}

TEST_CASE("linear resolution detector") {
  EngineCache cache(EngineOptions{});
  const auto ctx = VariableContext::standard(3);
  const auto principal = parse_ideal(ctx, "(x1^2*x2^2)");
  CHECK(has_linear_resolution(cache.quotient_table(principal).to_ideal(), principal));
  // two generators in different degrees can never be linear
  const auto mixed = parse_ideal(ctx, "(x1^2, x2*x3)");
  CHECK_FALSE(has_linear_resolution(cache.quotient_table(mixed).to_ideal(), mixed));
}

TEST_CASE("example reproduction runs on the small members") {
  // only the two cheapest entries here; the full list is acceptance work
  VerifyConfig cfg;
  EngineCache cache(engine_options(cfg));
  const auto I = edge_ideal(build_path({2, 1, 1, 1}));
  CHECK(cache.invariants_of(power(I, 2)).depth == 2);  // Example 1, I_1
  const auto J = edge_ideal(build_path({1, 2, 1, 1}));
  CHECK(cache.invariants_of(power(J, 2)).depth == 1);  // Example 3, I_1
}

TEST_CASE("random corpus is deterministic") {
  const auto a = random_ideal_corpus(10, 42, 4, 6, 3);
  const auto b = random_ideal_corpus(10, 42, 4, 6, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(equals(a[i], b[i]));
  for (const auto& I : a) {
    CHECK_FALSE(I.is_zero());
    CHECK_FALSE(I.is_unit());
    CHECK(I.num_gens() <= 6);
    CHECK(I.context()->count() <= 4);
  }
}

TEST_CASE("exact-sequence suite holds on its corpus") {
  VerifyConfig cfg;
  EngineCache cache(engine_options(cfg));
  const Report rep = verify_exact_sequence_bounds(cfg, cache);
  CHECK(rep.ok());
  CHECK(rep.bounds_satisfied >= 200);  // two bound cases per instance
}

TEST_CASE("report json is deterministic and machine readable") {
  const VerifyConfig cfg = small_config();
  EngineCache cache1(engine_options(cfg));
  EngineCache cache2(engine_options(cfg));
  const Report a = verify_star_suite(cfg, cache1);
  const Report b = verify_star_suite(cfg, cache2);
  CHECK(a.to_json() == b.to_json());

  const std::string json = a.to_json();
  CHECK(json.find("\"suite\"") != std::string::npos);
  CHECK(json.find("\"config\"") != std::string::npos);
  CHECK(json.find("\"cases\"") != std::string::npos);
  CHECK(json.find("\"summary\"") != std::string::npos);
  CHECK(json.find("\"predicted\"") != std::string::npos);
  CHECK(json.find("\"computed\"") != std::string::npos);
  CHECK(json.find("\"verdict\"") != std::string::npos);
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 9);
  VerifyConfig cfg = small_config();
  EngineCache cache(engine_options(cfg));
  CHECK_THROWS_AS(run_suite("nope", cfg, cache), std::invalid_argument);
  const Report rep = run_suite("star", cfg, cache);
  CHECK(rep.suite == "star");
}
