#pragma once

#include "wedge/monomial.hpp"

#include <string>
#include <vector>

namespace wedge {

/// A monomial ideal held by its unique minimal generating set, sorted in
/// graded-lex order (largest first). An empty generator list is the zero
/// ideal. The unit ideal (single constant generator) can arise from colon
/// operations and is representable, but constructors used for modelling
/// (edge ideals, powers) never produce it.
class MonomialIdeal {
public:
  static MonomialIdeal zero(ContextPtr ctx);
  /// Reduces an arbitrary generating set to the minimal one.
  static MonomialIdeal make(ContextPtr ctx, std::vector<Monomial> gens);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  /// Componentwise max over generator exponents; zero vector for the zero ideal.
  ExponentVec max_exponents() const;

private:
  MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens)
      : ctx_(std::move(ctx)), gens_(std::move(gens)) {}

  ContextPtr ctx_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(ContextPtr ctx, std::vector<Monomial> gens);
MonomialIdeal minimalize(std::vector<Monomial> gens);

bool contains(const MonomialIdeal& I, const Monomial& m);
bool contains(const MonomialIdeal& I, const ExponentVec& exponents);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

/// t-th power via multiset products of generators; t >= 1.
MonomialIdeal power(const MonomialIdeal& I, int t);

/// I : m = ({ g : gcd-free quotient of g by m }).
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);
/// I : J, the intersection of I : g over the generators of J. J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

bool equals(const MonomialIdeal& I, const MonomialIdeal& J);
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);

/// `(x1^2*x2^2, x2*x3)`; the zero ideal prints as `(0)`.
std::string to_string(const MonomialIdeal& I);
MonomialIdeal parse_ideal(const ContextPtr& ctx, const std::string& text);

}  // namespace wedge
