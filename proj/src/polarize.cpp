#include "wedge/polarize.hpp"

#include <stdexcept>

namespace wedge {

PolarizationMap::PolarizationMap(ContextPtr source, std::vector<int> widths)
    : source_(std::move(source)), widths_(std::move(widths)) {
  if (!source_) throw std::invalid_argument("PolarizationMap: null context");
  if (static_cast<int>(widths_.size()) != source_->count())
    throw std::invalid_argument("PolarizationMap: one width per source variable required");

  std::vector<std::string> names;
  padded_.resize(widths_.size(), false);
  offsets_.resize(widths_.size(), 0);
  for (std::size_t j = 0; j < widths_.size(); ++j) {
    if (widths_[j] < 0) throw std::invalid_argument("PolarizationMap: negative width");
    if (widths_[j] == 0) {
      widths_[j] = 1;
      padded_[j] = true;
    }
    offsets_[j] = static_cast<int>(names.size());
    for (int k = 1; k <= widths_[j]; ++k)
      names.push_back("x" + std::to_string(j + 1) + "_" + std::to_string(k));
  }
  target_ = VariableContext::named(std::move(names));
}

int PolarizationMap::target_index(int j, int k) const {
  if (j < 0 || j >= source_->count() || k < 0 || k >= width(j))
    throw std::invalid_argument("PolarizationMap: index out of range");
  return offsets_[static_cast<std::size_t>(j)] + k;
}

Monomial PolarizationMap::apply(const Monomial& m) const {
  if (!m.context()->same_as(*source_))
    throw std::invalid_argument("PolarizationMap: context mismatch");
  ExponentVec out = ExponentVec::Zero(target_->count());
  for (int j = 0; j < source_->count(); ++j) {
    const Exponent e = m.exponent(j);
    if (e > width(j))
      throw std::invalid_argument("PolarizationMap: exponent exceeds the expansion width");
    for (Exponent k = 0; k < e; ++k) out(target_index(j, static_cast<int>(k))) = 1;
  }
  return Monomial(target_, std::move(out));
}

std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("polarize: zero ideal");
  const ExponentVec maxes = I.max_exponents();
  std::vector<int> widths(static_cast<std::size_t>(maxes.size()));
  for (Eigen::Index j = 0; j < maxes.size(); ++j)
    widths[static_cast<std::size_t>(j)] = static_cast<int>(maxes(j));
  PolarizationMap map(I.context(), std::move(widths));

  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(map.apply(g));
  MonomialIdeal polarized = MonomialIdeal::make(map.target_context(), std::move(gens));
  if (polarized.num_gens() != I.num_gens())
    throw std::logic_error("polarize: polarization of a minimal set must stay minimal");
  return {std::move(polarized), std::move(map)};
}

bool is_squarefree(const MonomialIdeal& I) {
  for (const auto& g : I.gens())
    if ((g.exponents() > 1).any()) return false;
  return true;
}

}  // namespace wedge
