#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wedge/betti.hpp"
#include "wedge/graph.hpp"

#include <random>
#include <set>

using namespace wedge;

namespace {

const ContextPtr ctx3 = VariableContext::standard(3);

ExponentVec vec(std::initializer_list<Exponent> exps) {
  ExponentVec v(static_cast<Eigen::Index>(exps.size()));
  Eigen::Index i = 0;
  for (const Exponent e : exps) v(i++) = e;
  return v;
}

std::vector<Exponent> key(std::initializer_list<Exponent> exps) { return {exps}; }

MonomialIdeal random_ideal(std::mt19937_64& rng, int max_vars, int max_gens, Exponent max_exp) {
  while (true) {
    const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_vars - 1));
    const ContextPtr ctx = VariableContext::standard(n);
    std::vector<Monomial> gens;
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_gens));
    for (int g = 0; g < m; ++g) {
      ExponentVec e(n);
      for (int j = 0; j < n; ++j) e(j) = static_cast<Exponent>(rng() % (max_exp + 1));
      if ((e == 0).all()) e(0) = 1;
      gens.push_back(Monomial(ctx, std::move(e)));
    }
    auto I = MonomialIdeal::make(ctx, std::move(gens));
    if (!I.is_unit()) return I;
  }
}

}  // namespace

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("gf:32003").p == 32003);
  CHECK(FieldSpec::parse("gf:2").p == 2);
  CHECK(FieldSpec::parse("rational").kind == FieldSpec::Kind::rational);
  CHECK(FieldSpec::parse("gf:32003").to_string() == "gf:32003");
  CHECK_THROWS_AS(FieldSpec::parse("gf:32004"), std::invalid_argument);  // composite
  CHECK_THROWS_AS(FieldSpec::parse("float"), std::invalid_argument);
}

TEST_CASE("lcm lattice") {
  const auto I = parse_ideal(ctx3, "(x1*x2, x2*x3)");
  const auto L = lcm_lattice(I);
  CHECK(L.size() == 3);  // the two generators and x1x2x3
  CHECK(lattice_contains(I, vec({1, 1, 1})));
  CHECK_FALSE(lattice_contains(I, vec({1, 0, 1})));

  CHECK(lcm_lattice(parse_ideal(ctx3, "(x1^2*x2)")).size() == 1);

  const auto P = parse_ideal(VariableContext::standard(4), "(x1*x2, x2*x3, x3*x4)");
  CHECK(lcm_lattice(P).size() == 6);  // 3 generators + x1x2x3, x2x3x4, x1x2x3x4

  CHECK_THROWS_AS(lcm_lattice(I, 2), ResourceLimitError);
}

TEST_CASE("upper Koszul complexes") {
  SUBCASE("principal ideal at its generator degree") {
    const auto I = parse_ideal(ctx3, "(x1*x2)");
    const auto C = upper_koszul_complex(I, vec({1, 1, 0}));
    REQUIRE(C.faces().size() == 1);
    CHECK(C.has_empty_face());
  }

  SUBCASE("two disjoint vertices at the top degree") {
    const auto I = parse_ideal(ctx3, "(x1*x2, x2*x3)");
    const auto C = upper_koszul_complex(I, vec({1, 1, 1}));
    const std::vector<SimplicialComplex::Face> expected{0u, 1u, 4u};  // {}, {1}, {3}
    CHECK(C.faces() == expected);
  }

  SUBCASE("star(2,1) at the lattice top") {
    const auto I = parse_ideal(ctx3, "(x1^2*x3^2, x2*x3)");
    const auto C = upper_koszul_complex(I, vec({2, 1, 2}));
    const std::vector<SimplicialComplex::Face> expected{0u, 1u, 2u, 4u, 5u};  // {},{1},{2},{3},{1,3}
    CHECK(C.faces() == expected);
  }

  CHECK_THROWS_AS(upper_koszul_complex(parse_ideal(ctx3, "(x1*x2)"), vec({1, 0, 1})),
                  std::invalid_argument);
}

TEST_CASE("reduced homology conventions") {
  const FieldSpec F;
  SUBCASE("the complex {empty} has H~_{-1} = 1") {
    const SimplicialComplex C(3, {0u});
    const auto dims = reduced_homology_dims(C, F);
    CHECK(dims[0] == 1);
    for (std::size_t i = 1; i < dims.size(); ++i) CHECK(dims[i] == 0);
  }
  SUBCASE("the void complex has no homology at all") {
    const auto dims = reduced_homology_dims(SimplicialComplex::void_complex(3), F);
    for (const long d : dims) CHECK(d == 0);
  }
  SUBCASE("two isolated vertices") {
    const SimplicialComplex C(2, {0u, 1u, 2u});
    const auto dims = reduced_homology_dims(C, F);
    CHECK(dims[0] == 0);
    CHECK(dims[1] == 1);
  }
  SUBCASE("hollow triangle") {
    const SimplicialComplex C(3, {0u, 1u, 2u, 4u, 3u, 5u, 6u});
    const auto dims = reduced_homology_dims(C, F);
    CHECK(dims[0] == 0);
    CHECK(dims[1] == 0);
    CHECK(dims[2] == 1);
  }
  SUBCASE("filled triangle is acyclic") {
    const SimplicialComplex C(3, {0u, 1u, 2u, 4u, 3u, 5u, 6u, 7u});
    for (const long d : reduced_homology_dims(C, F)) CHECK(d == 0);
  }
  SUBCASE("rational coefficients agree on the hollow triangle") {
    const SimplicialComplex C(3, {0u, 1u, 2u, 4u, 3u, 5u, 6u});
    CHECK(reduced_homology_dims(C, FieldSpec::rationals()) == reduced_homology_dims(C, F));
  }
}

TEST_CASE("complex validation") {
  CHECK_THROWS_AS(SimplicialComplex(3, {3u}), std::invalid_argument);  // {1,2} without subsets
  CHECK_THROWS_AS(SimplicialComplex(2, {4u, 0u}), std::invalid_argument);  // outside ground set
}

TEST_CASE("Betti tables of the two-edge path") {
  const auto I = parse_ideal(ctx3, "(x1*x2, x2*x3)");
  const BettiTable table = betti_upper_koszul(I);
  CHECK(table.convention() == TableConvention::quotient);
  CHECK(table.coarse_entry(0, 0) == 1);
  CHECK(table.coarse_entry(1, 2) == 2);
  CHECK(table.coarse_entry(2, 3) == 1);
  const auto inv = invariants(table);
  CHECK(inv.reg == 1);
  CHECK(inv.pd == 2);
  CHECK(inv.depth == 1);
}

TEST_CASE("Betti table of star(2,1)") {
  const auto I = parse_ideal(ctx3, "(x1^2*x3^2, x2*x3)");
  const BettiTable table = betti_upper_koszul(I).to_ideal();
  CHECK(table.coarse_entry(0, 4) == 1);
  CHECK(table.coarse_entry(0, 2) == 1);
  CHECK(table.coarse_entry(1, 5) == 1);
  const auto inv = invariants(table.to_quotient());
  CHECK(inv.reg == 3);  // 2*w1 + w2 - 2 with w = (2,1)
  CHECK(inv.pd == 2);
  CHECK(inv.depth == 1);
}

TEST_CASE("principal ideals resolve by one Koszul step") {
  const auto I = parse_ideal(ctx3, "(x1*x2)");
  const auto inv = invariants(betti_upper_koszul(I));
  CHECK(inv.reg == 1);
  CHECK(inv.pd == 1);
  CHECK(inv.depth == 2);

  const BettiTable taylor = betti_taylor_strand(I);
  CHECK(taylor.multigraded().size() == 2);  // beta_{0,0} and beta_{1,(1,1,0)}
  CHECK(taylor.multigraded().at({1, key({1, 1, 0})}) == 1);
}

TEST_CASE("Taylor strand of the two-edge path") {
  const auto I = parse_ideal(ctx3, "(x1*x2, x2*x3)");
  const BettiTable table = betti_taylor_strand(I);
  CHECK(table.multigraded().at({2, key({1, 1, 1})}) == 1);
  CHECK(table.multigraded() == betti_upper_koszul(I).multigraded());
}

TEST_CASE("oracle cross-validation on random ideals") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const auto I = random_ideal(rng, 5, 8, 3);
    const BettiTable koszul = betti_upper_koszul(I);
    const BettiTable taylor = betti_taylor_strand(I);
    REQUIRE(koszul.multigraded() == taylor.multigraded());
  }
}

TEST_CASE("characteristic can matter but desk-scale inputs agree across fields") {
  std::mt19937_64 rng(99);
  EngineOptions gf2;
  gf2.field = FieldSpec::gf(2);
  EngineOptions rat;
  rat.field = FieldSpec::rationals();
  for (int trial = 0; trial < 10; ++trial) {
    const auto I = random_ideal(rng, 4, 6, 2);
    CHECK(betti_upper_koszul(I, gf2).multigraded() == betti_taylor_strand(I, gf2).multigraded());
    CHECK(betti_upper_koszul(I, rat).multigraded() == betti_taylor_strand(I, rat).multigraded());
  }
}

TEST_CASE("alternating sums match the Hilbert numerator") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 25; ++trial) {
    const auto I = random_ideal(rng, 5, 8, 3);
    const BettiTable table = betti_upper_koszul(I);
    const auto numerator = hilbert_numerator(I);

    std::map<BettiTable::Multidegree, long> alternating;
    for (const auto& [ia, count] : table.multigraded())
      alternating[ia.second] += (ia.first % 2 == 0 ? count : -count);
    for (auto it = alternating.begin(); it != alternating.end();)
      it = it->second == 0 ? alternating.erase(it) : std::next(it);
    REQUIRE(alternating == numerator);
  }
}

TEST_CASE("table conventions convert both ways") {
  const auto I = parse_ideal(ctx3, "(x1*x2, x2*x3)");
  const BettiTable q = betti_upper_koszul(I);
  CHECK(q.to_ideal().to_quotient() == q);
  CHECK(q.to_ideal().coarse_entry(0, 2) == 2);
  CHECK_THROWS_AS(invariants(q.to_ideal()), std::invalid_argument);
}

TEST_CASE("engine guard rails") {
  CHECK_THROWS_AS(betti_upper_koszul(MonomialIdeal::zero(ctx3)), std::invalid_argument);
  EngineOptions tiny;
  tiny.taylor_generator_cap = 1;
  CHECK_THROWS_AS(betti_taylor_strand(parse_ideal(ctx3, "(x1*x2, x2*x3)"), tiny),
                  ResourceLimitError);
  EngineOptions small_lattice;
  small_lattice.lattice_cap = 2;
  CHECK_THROWS_AS(betti_upper_koszul(parse_ideal(ctx3, "(x1*x2, x2*x3)"), small_lattice),
                  ResourceLimitError);
}

TEST_CASE("oracles agree on a power of a weighted path ideal") {
  const auto I = power(edge_ideal(build_path({2, 1, 1, 1})), 2);
  REQUIRE(I.num_gens() <= 15);
  CHECK(betti_upper_koszul(I).multigraded() == betti_taylor_strand(I).multigraded());
}

TEST_CASE("disjoint union of graphs adds reg and depth") {
  // P3 with a heavy edge, disjoint from a heavy single edge
  const WeightedGraph g(5, {{1, 2, 2}, {2, 3, 1}, {4, 5, 3}});
  const auto inv = invariants(betti_upper_koszul(edge_ideal(g)));
  const auto left =
      invariants(betti_upper_koszul(parse_ideal(ctx3, "(x1^2*x2^2, x2*x3)")));
  const auto right =
      invariants(betti_upper_koszul(parse_ideal(VariableContext::standard(2), "(x1^3*x2^3)")));
  CHECK(inv.reg == left.reg + right.reg);
  CHECK(inv.depth == left.depth + right.depth);
}

TEST_CASE("additivity over disjoint variable blocks") {
  // reg and depth add over a disjoint union; the engine sees the union as one
  // ideal in the joined ring.
  const auto ctx5 = VariableContext::standard(5);
  const auto I = parse_ideal(ctx5, "(x1^2*x2^2, x4*x5)");
  const auto inv = invariants(betti_upper_koszul(I));

  const auto left = invariants(betti_upper_koszul(parse_ideal(VariableContext::standard(2), "(x1^2*x2^2)")));
  const auto right = invariants(betti_upper_koszul(parse_ideal(VariableContext::standard(2), "(x1*x2)")));
  CHECK(inv.reg == left.reg + right.reg);
  // x3 is a free variable of the joined ring: depth gains one beyond the sum
  CHECK(inv.depth == left.depth + right.depth + 1);
}
