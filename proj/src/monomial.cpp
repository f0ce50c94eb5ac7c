#include "wedge/monomial.hpp"

#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wedge {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("VariableContext: need at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("VariableContext: empty variable name");
    if (!seen.insert(n).second)
      throw std::invalid_argument("VariableContext: duplicate variable name '" + n + "'");
  }
}

ContextPtr VariableContext::standard(int n) {
  if (n < 1) throw std::invalid_argument("VariableContext: count must be >= 1");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return std::make_shared<const VariableContext>(std::move(names));
}

ContextPtr VariableContext::named(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

bool VariableContext::same_as(const VariableContext& other) const {
  return this == &other || names_ == other.names_;
}

Monomial::Monomial(ContextPtr ctx, ExponentVec exponents)
    : ctx_(std::move(ctx)), exp_(std::move(exponents)) {
  if (!ctx_) throw std::invalid_argument("Monomial: null context");
  if (exp_.size() != ctx_->count())
    throw std::invalid_argument("Monomial: exponent vector length does not match context");
  if ((exp_ < 0).any()) throw std::invalid_argument("Monomial: negative exponent");
}

Monomial Monomial::one(ContextPtr ctx) {
  if (!ctx) throw std::invalid_argument("Monomial: null context");
  return Monomial(ctx, ExponentVec::Zero(ctx->count()));
}

Monomial Monomial::variable(ContextPtr ctx, int index, Exponent e) {
  if (!ctx) throw std::invalid_argument("Monomial: null context");
  if (index < 0 || index >= ctx->count()) throw std::invalid_argument("Monomial: variable index out of range");
  if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
  ExponentVec v = ExponentVec::Zero(ctx->count());
  v(index) = e;
  return Monomial(ctx, std::move(v));
}

void require_same_context(const Monomial& a, const Monomial& b, const char* op) {
  if (!a.context()->same_as(*b.context()))
    throw std::invalid_argument(std::string(op) + ": context mismatch");
}

Monomial mul(const Monomial& a, const Monomial& b) {
  require_same_context(a, b, "mul");
  constexpr Exponent kMax = std::numeric_limits<Exponent>::max();
  for (int i = 0; i < a.var_count(); ++i)
    if (a.exponent(i) > kMax - b.exponent(i)) throw std::overflow_error("mul: exponent overflow");
  return Monomial(a.context(), a.exponents() + b.exponents());
}

Monomial pow(const Monomial& a, Exponent k) {
  if (k < 0) throw std::invalid_argument("pow: negative power");
  constexpr Exponent kMax = std::numeric_limits<Exponent>::max();
  for (int i = 0; i < a.var_count(); ++i)
    if (k != 0 && a.exponent(i) > kMax / k) throw std::overflow_error("pow: exponent overflow");
  return Monomial(a.context(), ExponentVec(a.exponents() * k));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_context(a, b, "divides");
  return (a.exponents() <= b.exponents()).all();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_context(a, b, "lcm");
  return Monomial(a.context(), a.exponents().max(b.exponents()));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_context(a, b, "gcd");
  return Monomial(a.context(), a.exponents().min(b.exponents()));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  require_same_context(a, b, "quotient");
  return Monomial(a.context(), (a.exponents() - b.exponents()).max(Exponent{0}));
}

Exponent total_degree(const Monomial& a) { return a.total_degree(); }

bool operator==(const Monomial& a, const Monomial& b) {
  return a.context()->same_as(*b.context()) && (a.exponents() == b.exponents()).all();
}

bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

int compare_grlex(const Monomial& a, const Monomial& b) {
  require_same_context(a, b, "compare_grlex");
  const Exponent da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < a.var_count(); ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
  }
  return 0;
}

bool canonical_before(const Monomial& a, const Monomial& b) { return compare_grlex(a, b) > 0; }

std::string to_string(const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.var_count(); ++i) {
    const Exponent e = m.exponent(i);
    if (e == 0) continue;
    if (!first) out << '*';
    out << m.context()->name(i);
    if (e != 1) out << '^' << e;
    first = false;
  }
  if (first) return "1";
  return out.str();
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Monomial parse_monomial(const ContextPtr& ctx, const std::string& text) {
  if (!ctx) throw std::invalid_argument("parse_monomial: null context");
  const std::string body = strip(text);
  if (body.empty()) throw std::invalid_argument("parse_monomial: empty input");
  if (body == "1") return Monomial::one(ctx);

  ExponentVec exps = ExponentVec::Zero(ctx->count());
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t next = body.find('*', pos);
    std::string factor = strip(next == std::string::npos ? body.substr(pos) : body.substr(pos, next - pos));
    if (factor.empty()) throw std::invalid_argument("parse_monomial: empty factor in '" + text + "'");

    std::string name = factor;
    Exponent e = 1;
    const std::size_t caret = factor.find('^');
    if (caret != std::string::npos) {
      name = strip(factor.substr(0, caret));
      const std::string etext = strip(factor.substr(caret + 1));
      try {
        std::size_t used = 0;
        e = std::stoll(etext, &used);
        if (used != etext.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_monomial: bad exponent '" + etext + "'");
      }
      if (e < 0) throw std::invalid_argument("parse_monomial: negative exponent");
    }

    int index = -1;
    for (int i = 0; i < ctx->count(); ++i)
      if (ctx->name(i) == name) {
        index = i;
        break;
      }
    if (index < 0) throw std::invalid_argument("parse_monomial: unknown variable '" + name + "'");
    exps(index) += e;

    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return Monomial(ctx, std::move(exps));
}

std::size_t hash_exponents(const ExponentVec& e) {
  std::size_t h = 1469598103934665603ull;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    h ^= static_cast<std::size_t>(e(i)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace wedge
