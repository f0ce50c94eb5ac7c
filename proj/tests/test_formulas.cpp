#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wedge/betti.hpp"
#include "wedge/formulas.hpp"
#include "wedge/graph.hpp"

#include <random>

using namespace wedge;

TEST_CASE("floor and ceiling on negatives") {
  CHECK(floor_div3(-1) == -1);
  CHECK(ceil_div3(-1) == 0);
  CHECK(floor_div3(4) == 1);
  CHECK(ceil_div3(4) == 2);
  CHECK(floor_div3(0) == 0);
  CHECK(ceil_div3(0) == 0);
  CHECK(floor_div3(-4) == -2);
  CHECK(ceil_div3(-4) == -1);
}

TEST_CASE("star invariants") {
  const auto p1 = star_invariants({2, 1}, 1);
  CHECK(p1.reg.value == 3);
  CHECK(p1.depth.value == 1);
  const auto p2 = star_invariants({2, 1}, 2);
  CHECK(p2.reg.value == 7);  // 2(t-1)w + base = 4 + 3
  CHECK(p2.depth.value == 1);
  const auto p3 = star_invariants({1, 1}, 1);
  CHECK(p3.reg.value == 1);
  CHECK(p3.depth.value == 1);
  // the formula is symmetric in the weights
  CHECK(star_invariants({1, 3, 2}, 2).reg.value == star_invariants({3, 2, 1}, 2).reg.value);
}

TEST_CASE("trivially weighted paths") {
  CHECK(trivial_path_invariants(5, 1).reg.value == 2);
  CHECK(trivial_path_invariants(5, 1).depth.value == 2);
  CHECK(trivial_path_invariants(5, 2).reg.value == 4);
  CHECK(trivial_path_invariants(5, 2).depth.value == 2);
  CHECK(trivial_path_invariants(3, 1).reg.value == 1);
  CHECK(trivial_path_invariants(3, 1).depth.value == 1);
  CHECK(trivial_path_invariants(8, 2).depth.value == 3);  // max{ceil(7/3),1}
}

TEST_CASE("small paths") {
  SUBCASE("(2,1,2) squared") {
    const auto p = small_path_invariants({2, 1, 2}, 2);
    CHECK(p.reg.value == 7);
    CHECK(p.depth.value == 2);
    CHECK(p.depth.kind == PredictionKind::equality);
  }
  SUBCASE("(1,3,1) at t=1") {
    const auto p = small_path_invariants({1, 3, 1}, 1);
    CHECK(p.reg.value == 5);
    CHECK(p.depth.value == 1);
  }
  SUBCASE("mixed (2,1,1) squared only has the depth bound") {
    const auto p = small_path_invariants({2, 1, 1}, 2);
    CHECK(p.reg.value == 7);
    CHECK(p.depth.kind == PredictionKind::lower_bound);
    CHECK(p.depth.value == 1);
    CHECK(p.depth.source == "path power5");
  }
  SUBCASE("(1,2) and (3,) behave like the statement") {
    CHECK(small_path_invariants({3}, 2).reg.value == 11);
    CHECK(small_path_invariants({3}, 2).depth.value == 1);
    CHECK(small_path_invariants({1, 2}, 3).reg.value == 11);
    CHECK(small_path_invariants({1, 2}, 3).depth.value == 1);
  }
  SUBCASE("non-closed patterns are flagged") {
    CHECK_FALSE(small_path_invariants({2, 2, 1}, 1).reg.applicable);
    CHECK(small_path_invariants({2, 2, 1}, 1).reg.reason == "not integrally closed");
  }
}

TEST_CASE("general paths at t = 1") {
  SUBCASE("(2,1,1,1) on five vertices") {
    const auto p = path_invariants({2, 1, 1, 1});
    CHECK(p.reg.value == 4);
    CHECK(p.depth.value == 2);
  }
  SUBCASE("(1,2,1,3,1) on six vertices normalizes by reversal") {
    const auto p = path_invariants({1, 2, 1, 3, 1});
    CHECK(p.reg.value == 6);
    CHECK(p.depth.value == 2);
  }
  SUBCASE("trivial weights are routed elsewhere") {
    CHECK_FALSE(path_invariants({1, 1, 1, 1}).reg.applicable);
  }
}

TEST_CASE("regularity of powers of paths") {
  CHECK(path_power_reg({2, 1, 1, 1}, 2).value == 8);       // 4 + 4
  CHECK(path_power_reg({2, 1, 2}, 3).value == 11);          // 2tw - 1
  CHECK(path_power_reg({1, 2, 1, 3, 1}, 2).value == 12);    // 6 + 2*3
  CHECK_FALSE(path_power_reg({2, 2, 1, 1}, 2).applicable);
}

TEST_CASE("depth lower bounds for powers of paths") {
  SUBCASE("(2,1,1,1) t=2 via the endpoint theorem") {
    const auto p = path_power_depth_bound({2, 1, 1, 1}, 2);
    CHECK(p.applicable);
    CHECK(p.kind == PredictionKind::lower_bound);
    CHECK(p.value == 2);
  }
  SUBCASE("interior weight on eight vertices hits the special congruence case") {
    const auto p = path_power_depth_bound({1, 1, 1, 2, 1, 1, 1}, 2);
    CHECK(p.value == 3);  // ceil((n-1)/3) for t=2, i=4, n=8
    CHECK(p.source == "tdepth2");
  }
  SUBCASE("two non-trivial weights on six vertices") {
    const auto p = path_power_depth_bound({1, 2, 1, 3, 1}, 2);
    CHECK(p.value == 2);
    CHECK(p.source == "tdepth2");
  }
  SUBCASE("equal non-trivial weights are not covered") {
    const auto p = path_power_depth_bound({2, 1, 2, 1, 1}, 2);
    CHECK_FALSE(p.applicable);
  }
}

TEST_CASE("path closedness pattern") {
  CHECK(path_weights_integrally_closed({1, 1, 1}));
  CHECK(path_weights_integrally_closed({2, 1, 1}));
  CHECK(path_weights_integrally_closed({2, 1, 2, 1}));
  CHECK_FALSE(path_weights_integrally_closed({2, 2, 1}));
  CHECK_FALSE(path_weights_integrally_closed({2, 1, 1, 2}));
  CHECK_FALSE(path_weights_integrally_closed({2, 1, 2, 1, 2}));
}

TEST_CASE("router totality") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<Exponent> w(static_cast<std::size_t>(n - 1));
    for (auto& x : w) x = 1 + static_cast<Exponent>(rng() % 3);
    const int t = 1 + static_cast<int>(rng() % 3);
    const PredictionPair p = predict_path(w, t);
    // every case yields either a value or an explicit reason
    CHECK((p.reg.applicable || !p.reg.reason.empty()));
    CHECK((p.depth.applicable || !p.depth.reason.empty()));
    if (!path_weights_integrally_closed(w)) {
      CHECK_FALSE(p.reg.applicable);
    } else {
      CHECK(p.reg.applicable);  // closed paths always get a reg prediction
    }
  }
}

TEST_CASE("reversal invariance") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<Exponent> w(static_cast<std::size_t>(n - 1));
    for (auto& x : w) x = 1 + static_cast<Exponent>(rng() % 3);
    std::vector<Exponent> r(w.rbegin(), w.rend());
    const int t = 1 + static_cast<int>(rng() % 3);
    const PredictionPair a = predict_path(w, t);
    const PredictionPair b = predict_path(r, t);
    CHECK(a.reg.applicable == b.reg.applicable);
    CHECK(a.depth.applicable == b.depth.applicable);
    if (a.reg.applicable) CHECK(a.reg.value == b.reg.value);
    if (a.depth.applicable) {
      CHECK(a.depth.value == b.depth.value);
      CHECK(a.depth.kind == b.depth.kind);
    }
  }
}

TEST_CASE("small-path powers agree with the general power formula") {
  for (Exponent w1 = 1; w1 <= 3; ++w1)
    for (Exponent w2 = 1; w2 <= 3; ++w2)
      for (Exponent w3 = 1; w3 <= 3; ++w3)
        for (int t = 1; t <= 3; ++t) {
          const std::vector<Exponent> w{w1, w2, w3};
          if (!path_weights_integrally_closed(w)) continue;
          if (w1 == 1 && w2 == 1 && w3 == 1) continue;
          CHECK(small_path_invariants(w, t).reg.value == path_power_reg(w, t).value);
        }
}

TEST_CASE("formula predictions match the engine on spot checks") {
  EngineOptions opts;
  const auto engine = [&](const std::vector<Exponent>& w, int t) {
    return invariants(betti_upper_koszul(power(edge_ideal(build_path(w)), t), opts));
  };

  const auto a = engine({2, 1, 1, 1}, 1);
  CHECK(a.reg == path_invariants({2, 1, 1, 1}).reg.value);
  CHECK(a.depth == path_invariants({2, 1, 1, 1}).depth.value);

  const auto b = engine({1, 2, 1, 3, 1}, 1);
  CHECK(b.reg == path_invariants({1, 2, 1, 3, 1}).reg.value);
  CHECK(b.depth == path_invariants({1, 2, 1, 3, 1}).depth.value);

  const auto c = engine({2, 1, 1, 1}, 2);
  CHECK(c.reg == path_power_reg({2, 1, 1, 1}, 2).value);
  CHECK(c.depth >= path_power_depth_bound({2, 1, 1, 1}, 2).value);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(star_invariants({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(star_invariants({0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(trivial_path_invariants(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(small_path_invariants({2, 1, 1, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(path_invariants({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(path_power_depth_bound({2, 1, 1, 1}, 1), std::invalid_argument);
}
