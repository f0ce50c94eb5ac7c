#pragma once

#include <Eigen/Core>

#include <memory>
#include <string>
#include <vector>

namespace wedge {

using Exponent = long long;
using ExponentVec = Eigen::Array<Exponent, Eigen::Dynamic, 1>;

/// Names and arity of the ambient polynomial ring. Immutable; shared by
/// every monomial built over it.
class VariableContext {
public:
  explicit VariableContext(std::vector<std::string> names);

  /// Context with variables x1..xn.
  static std::shared_ptr<const VariableContext> standard(int n);
  static std::shared_ptr<const VariableContext> named(std::vector<std::string> names);

  int count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  bool same_as(const VariableContext& other) const;

private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

/// A monomial is an exponent vector over a fixed context. Values are
/// immutable once constructed; all entries are >= 0.
class Monomial {
public:
  Monomial(ContextPtr ctx, ExponentVec exponents);

  static Monomial one(ContextPtr ctx);
  /// x_{index}^e with 0-based index.
  static Monomial variable(ContextPtr ctx, int index, Exponent e = 1);

  const ContextPtr& context() const { return ctx_; }
  const ExponentVec& exponents() const { return exp_; }
  Exponent exponent(int i) const { return exp_(i); }
  int var_count() const { return static_cast<int>(exp_.size()); }

  bool is_one() const { return (exp_ == 0).all(); }
  Exponent total_degree() const { return exp_.sum(); }

private:
  ContextPtr ctx_;
  ExponentVec exp_;
};

// Componentwise arithmetic. All binary operations require matching
// contexts and throw std::invalid_argument otherwise.
Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// Colon quotient a : b, componentwise max(a-b, 0).
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& a, Exponent k);
Exponent total_degree(const Monomial& a);

bool operator==(const Monomial& a, const Monomial& b);
bool operator!=(const Monomial& a, const Monomial& b);

/// Graded-lex comparison with x1 > x2 > ...: degree first, ties by
/// lexicographic order on the exponent vector. Returns <0, 0, >0.
int compare_grlex(const Monomial& a, const Monomial& b);

/// True when a should precede b in the canonical generator order
/// (graded-lex, largest first).
bool canonical_before(const Monomial& a, const Monomial& b);

/// Display form: `x1^2*x2` style, `1` for the constant monomial.
std::string to_string(const Monomial& m);

/// Parses the display form; accepts omitted `^1` and surrounding spaces.
Monomial parse_monomial(const ContextPtr& ctx, const std::string& text);

void require_same_context(const Monomial& a, const Monomial& b, const char* op);

std::size_t hash_exponents(const ExponentVec& e);

}  // namespace wedge
