#pragma once

#include "wedge/ideal.hpp"

#include <utility>
#include <vector>

namespace wedge {

/// Bookkeeping for the polarization S -> S^P. Source variable j expands into
/// target variables x{j}_{1..width(j)}; a variable unused by the ideal keeps
/// one padded target variable so ambient counts stay comparable for depth.
class PolarizationMap {
public:
  PolarizationMap(ContextPtr source, std::vector<int> widths);

  const ContextPtr& source_context() const { return source_; }
  const ContextPtr& target_context() const { return target_; }
  int width(int j) const { return widths_.at(static_cast<std::size_t>(j)); }
  bool padded(int j) const { return padded_.at(static_cast<std::size_t>(j)); }
  /// 0-based target index of x{j+1}_{k+1}.
  int target_index(int j, int k) const;
  int added_variables() const { return target_->count() - source_->count(); }

  Monomial apply(const Monomial& m) const;

private:
  ContextPtr source_;
  ContextPtr target_;
  std::vector<int> widths_;
  std::vector<bool> padded_;
  std::vector<int> offsets_;
};

/// Squarefree polarization I^P together with its variable map. I must be nonzero.
std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& I);

bool is_squarefree(const MonomialIdeal& I);

}  // namespace wedge
