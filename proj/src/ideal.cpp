#include "wedge/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wedge {

namespace {

void require_same_context(const MonomialIdeal& I, const MonomialIdeal& J, const char* op) {
  if (!I.context()->same_as(*J.context()))
    throw std::invalid_argument(std::string(op) + ": context mismatch");
}

std::vector<Monomial> reduce_to_minimal(const ContextPtr& ctx, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (!g.context()->same_as(*ctx))
      throw std::invalid_argument("minimalize: mixed contexts in generating set");

  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return compare_grlex(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Scanning in increasing graded-lex order, a generator can only be divided
  // by one that came before it.
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (divides(kept, g)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  std::sort(minimal.begin(), minimal.end(), canonical_before);
  return minimal;
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(ContextPtr ctx) {
  if (!ctx) throw std::invalid_argument("MonomialIdeal: null context");
  return MonomialIdeal(std::move(ctx), {});
}

MonomialIdeal MonomialIdeal::make(ContextPtr ctx, std::vector<Monomial> gens) {
  if (!ctx) throw std::invalid_argument("MonomialIdeal: null context");
  auto minimal = reduce_to_minimal(ctx, std::move(gens));
  return MonomialIdeal(std::move(ctx), std::move(minimal));
}

ExponentVec MonomialIdeal::max_exponents() const {
  ExponentVec m = ExponentVec::Zero(ctx_->count());
  for (const auto& g : gens_) m = m.max(g.exponents());
  return m;
}

MonomialIdeal minimalize(ContextPtr ctx, std::vector<Monomial> gens) {
  return MonomialIdeal::make(std::move(ctx), std::move(gens));
}

MonomialIdeal minimalize(std::vector<Monomial> gens) {
  if (gens.empty())
    throw std::invalid_argument("minimalize: cannot infer context from an empty set; pass one");
  ContextPtr ctx = gens.front().context();
  return MonomialIdeal::make(std::move(ctx), std::move(gens));
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
  if (!I.context()->same_as(*m.context()))
    throw std::invalid_argument("contains: context mismatch");
  return contains(I, m.exponents());
}

bool contains(const MonomialIdeal& I, const ExponentVec& exponents) {
  for (const auto& g : I.gens())
    if ((g.exponents() <= exponents).all()) return true;
  return false;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I, J, "sum");
  std::vector<Monomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal::make(I.context(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I, J, "product");
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) gens.push_back(mul(a, b));
  return MonomialIdeal::make(I.context(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int t) {
  if (t < 1) throw std::invalid_argument("power: exponent must be >= 1 (unit ideal is out of model)");
  if (I.is_zero() || t == 1) return I;

  // Multiset products of t generators, enumerated as combinations with
  // repetition so non-minimal intermediates never appear twice.
  const auto& gens = I.gens();
  std::vector<Monomial> products;
  std::vector<int> pick(static_cast<std::size_t>(t), 0);
  while (true) {
    Monomial m = gens[static_cast<std::size_t>(pick[0])];
    for (int k = 1; k < t; ++k) m = mul(m, gens[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])]);
    products.push_back(std::move(m));

    int pos = t - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == I.num_gens() - 1) --pos;
    if (pos < 0) break;
    const int next = pick[static_cast<std::size_t>(pos)] + 1;
    for (int k = pos; k < t; ++k) pick[static_cast<std::size_t>(k)] = next;
  }
  return MonomialIdeal::make(I.context(), std::move(products));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  if (!I.context()->same_as(*m.context()))
    throw std::invalid_argument("colon: context mismatch");
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(quotient(g, m));
  return MonomialIdeal::make(I.context(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I, J, "colon");
  if (J.is_zero()) throw std::invalid_argument("colon: divisor ideal is zero");
  MonomialIdeal result = colon(I, J.gens().front());
  for (std::size_t k = 1; k < J.gens().size(); ++k)
    result = intersect(result, colon(I, J.gens()[k]));
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I, J, "intersect");
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) gens.push_back(lcm(a, b));
  return MonomialIdeal::make(I.context(), std::move(gens));
}

bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!I.context()->same_as(*J.context())) return false;
  if (I.num_gens() != J.num_gens()) return false;
  for (int k = 0; k < I.num_gens(); ++k)
    if (I.gens()[static_cast<std::size_t>(k)] != J.gens()[static_cast<std::size_t>(k)]) return false;
  return true;
}

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I, J, "is_subset");
  for (const auto& g : I.gens())
    if (!contains(J, g)) return false;
  return true;
}

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::ostringstream out;
  out << '(';
  for (int k = 0; k < I.num_gens(); ++k) {
    if (k) out << ", ";
    out << to_string(I.gens()[static_cast<std::size_t>(k)]);
  }
  out << ')';
  return out.str();
}

MonomialIdeal parse_ideal(const ContextPtr& ctx, const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos || text[b] != '(' || text[e] != ')')
    throw std::invalid_argument("parse_ideal: expected parenthesized generator list");
  const std::string body = text.substr(b + 1, e - b - 1);

  if (body.find_first_not_of(" \t") == std::string::npos)
    throw std::invalid_argument("parse_ideal: empty generator list (use `(0)` for the zero ideal)");

  std::vector<Monomial> gens;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t next = body.find(',', pos);
    const std::string piece = next == std::string::npos ? body.substr(pos) : body.substr(pos, next - pos);
    if (piece.find_first_not_of(" \t") != std::string::npos) {
      if (piece.find_first_not_of(" \t0") == std::string::npos) {
        // `(0)` denotes the zero ideal
        if (next != std::string::npos || !gens.empty())
          throw std::invalid_argument("parse_ideal: `0` must be the only entry");
        return MonomialIdeal::zero(ctx);
      }
      gens.push_back(parse_monomial(ctx, piece));
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (gens.empty()) throw std::invalid_argument("parse_ideal: no generators");
  return MonomialIdeal::make(ctx, std::move(gens));
}

}  // namespace wedge
