#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wedge/monomial.hpp"

#include <limits>
#include <random>
#include <stdexcept>

using namespace wedge;

namespace {

Monomial m(const ContextPtr& ctx, std::initializer_list<Exponent> exps) {
  ExponentVec v(static_cast<Eigen::Index>(exps.size()));
  Eigen::Index i = 0;
  for (const Exponent e : exps) v(i++) = e;
  return Monomial(ctx, std::move(v));
}

}  // namespace

TEST_CASE("context invariants") {
  CHECK_THROWS_AS(VariableContext::standard(0), std::invalid_argument);
  CHECK_THROWS_AS(VariableContext::named({"x", "x"}), std::invalid_argument);
  const auto ctx = VariableContext::standard(3);
  CHECK(ctx->count() == 3);
  CHECK(ctx->name(0) == "x1");
  CHECK(ctx->name(2) == "x3");
}

TEST_CASE("mul") {
  const auto ctx = VariableContext::standard(3);
  CHECK(mul(m(ctx, {1, 1, 0}), m(ctx, {0, 1, 0})) == m(ctx, {1, 2, 0}));
  CHECK(mul(Monomial::one(ctx), m(ctx, {0, 1, 1})) == m(ctx, {0, 1, 1}));
  CHECK(mul(m(ctx, {2, 0, 0}), m(ctx, {3, 0, 0})) == m(ctx, {5, 0, 0}));

  const auto other = VariableContext::standard(2);
  CHECK_THROWS_AS(mul(m(ctx, {1, 0, 0}), m(other, {1, 0})), std::invalid_argument);

  const Exponent big = std::numeric_limits<Exponent>::max();
  CHECK_THROWS_AS(mul(m(ctx, {big, 0, 0}), m(ctx, {1, 0, 0})), std::overflow_error);
}

TEST_CASE("divides") {
  const auto ctx = VariableContext::standard(3);
  CHECK(divides(m(ctx, {0, 1, 1}), m(ctx, {1, 2, 1})));
  CHECK_FALSE(divides(m(ctx, {2, 0, 0}), m(ctx, {1, 0, 0})));
  CHECK(divides(Monomial::one(ctx), m(ctx, {3, 1, 2})));
}

TEST_CASE("lcm gcd quotient") {
  const auto ctx = VariableContext::standard(3);
  CHECK(lcm(m(ctx, {2, 2, 0}), m(ctx, {0, 1, 1})) == m(ctx, {2, 2, 1}));
  CHECK(gcd(m(ctx, {2, 2, 0}), m(ctx, {0, 1, 1})) == m(ctx, {0, 1, 0}));
  // colon quotient from the small-path proof: (x1^2x2^2) : x2 = x1^2x2
  CHECK(quotient(m(ctx, {2, 2, 0}), m(ctx, {0, 1, 0})) == m(ctx, {2, 1, 0}));
}

TEST_CASE("total degree") {
  const auto ctx = VariableContext::standard(3);
  CHECK(m(ctx, {2, 2, 0}).total_degree() == 4);
  CHECK(Monomial::one(ctx).total_degree() == 0);
  CHECK(m(ctx, {1, 1, 1}).total_degree() == 3);
}

TEST_CASE("algebraic properties on random monomials") {
  const auto ctx = VariableContext::standard(4);
  std::mt19937_64 rng(7);
  const auto random_monomial = [&] {
    ExponentVec v(4);
    for (int i = 0; i < 4; ++i) v(i) = static_cast<Exponent>(rng() % 5);
    return Monomial(ctx, std::move(v));
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
    CHECK(divides(a, mul(a, b)));
    CHECK(mul(quotient(a, b), b) == lcm(a, b));
    CHECK(lcm(a, b) == lcm(b, a));
    CHECK(gcd(a, b) == gcd(b, a));
    CHECK(lcm(a, lcm(b, c)) == lcm(lcm(a, b), c));
    CHECK(gcd(a, gcd(b, c)) == gcd(gcd(a, b), c));
    CHECK(lcm(a, a) == a);
    CHECK(gcd(a, a) == a);
    CHECK(mul(a, b).total_degree() == a.total_degree() + b.total_degree());
    CHECK(divides(a, b) == (quotient(a, b).total_degree() == 0));
  }
}

TEST_CASE("display and parse") {
  const auto ctx = VariableContext::standard(3);
  CHECK(to_string(m(ctx, {2, 2, 0})) == "x1^2*x2^2");
  CHECK(to_string(m(ctx, {1, 0, 1})) == "x1*x3");
  CHECK(to_string(Monomial::one(ctx)) == "1");

  CHECK(parse_monomial(ctx, "x1^2*x2^2") == m(ctx, {2, 2, 0}));
  CHECK(parse_monomial(ctx, "x2*x3") == m(ctx, {0, 1, 1}));
  CHECK(parse_monomial(ctx, " x1 * x2^3 ") == m(ctx, {1, 3, 0}));
  CHECK(parse_monomial(ctx, "1") == Monomial::one(ctx));
  CHECK_THROWS_AS(parse_monomial(ctx, "x9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial(ctx, "x1^"), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    ExponentVec v(3);
    for (int i = 0; i < 3; ++i) v(i) = static_cast<Exponent>(rng() % 4);
    const Monomial a(ctx, std::move(v));
    CHECK(parse_monomial(ctx, to_string(a)) == a);
  }
}

TEST_CASE("graded-lex comparison") {
  const auto ctx = VariableContext::standard(3);
  CHECK(compare_grlex(m(ctx, {2, 2, 0}), m(ctx, {0, 1, 1})) > 0);   // higher degree
  CHECK(compare_grlex(m(ctx, {1, 1, 0}), m(ctx, {0, 1, 1})) > 0);   // same degree, x1 wins
  CHECK(compare_grlex(m(ctx, {0, 1, 1}), m(ctx, {0, 1, 1})) == 0);
  CHECK(canonical_before(m(ctx, {2, 2, 0}), m(ctx, {0, 1, 1})));
}
