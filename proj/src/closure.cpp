#include "wedge/closure.hpp"

#include "wedge/linalg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace wedge {

namespace {

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Phase-1 simplex (Bland's rule) for: exists lambda >= 0 with
/// sum(lambda) = 1 and sum_g lambda_g * exp(g) <= a componentwise.
bool convex_combination_below(const std::vector<ExponentVec>& gens, const ExponentVec& a) {
  const int m = static_cast<int>(gens.size());
  const int n = static_cast<int>(a.size());
  const int cols = m + n + 1;  // lambda, slacks, artificial
  const int art = m + n;
  const int rows = n + 1;

  RMatrix T = RMatrix::Constant(rows, cols + 1, Rational(0));
  std::vector<int> basis(static_cast<std::size_t>(rows));

  // Row 0: sum(lambda) + art = 1.
  for (int g = 0; g < m; ++g) T(0, g) = Rational(1);
  T(0, art) = Rational(1);
  T(0, cols) = Rational(1);
  basis[0] = art;
  // Rows 1..n: sum_g lambda_g * v_gj + s_j = a_j.
  for (int j = 0; j < n; ++j) {
    for (int g = 0; g < m; ++g) T(j + 1, g) = Rational(gens[static_cast<std::size_t>(g)](j));
    T(j + 1, m + j) = Rational(1);
    T(j + 1, cols) = Rational(a(j));
    basis[static_cast<std::size_t>(j + 1)] = m + j;
  }

  // Minimize the artificial. Reduced costs start as c - (row of the basic
  // artificial); obj(cols) holds minus the current objective value.
  Eigen::Matrix<Rational, 1, Eigen::Dynamic> obj =
      Eigen::Matrix<Rational, 1, Eigen::Dynamic>::Constant(cols + 1, Rational(0));
  for (int c = 0; c <= cols; ++c) obj(c) = -T(0, c);
  obj(art) += Rational(1);

  while (true) {
    int entering = -1;
    for (int c = 0; c < cols; ++c)
      if (obj(c).sign() < 0) {
        entering = c;
        break;
      }
    if (entering < 0) break;

    int leaving = -1;
    Rational best_ratio;
    for (int r = 0; r < rows; ++r) {
      if (T(r, entering).sign() <= 0) continue;
      const Rational ratio = T(r, cols) / T(r, entering);
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(r)] <
                                      basis[static_cast<std::size_t>(leaving)])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) throw std::logic_error("simplex: phase-1 objective unbounded");

    const Rational pivot = T(leaving, entering);
    for (int c = 0; c <= cols; ++c) T(leaving, c) /= pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == leaving || T(r, entering).is_zero()) continue;
      const Rational f = T(r, entering);
      for (int c = 0; c <= cols; ++c) T(r, c) -= f * T(leaving, c);
    }
    if (!obj(entering).is_zero()) {
      const Rational f = obj(entering);
      for (int c = 0; c <= cols; ++c) obj(c) -= f * T(leaving, c);
    }
    basis[static_cast<std::size_t>(leaving)] = entering;
  }
  return obj(cols).is_zero();
}

std::vector<ExponentVec> generator_exponents(const MonomialIdeal& I) {
  std::vector<ExponentVec> v;
  v.reserve(I.gens().size());
  for (const auto& g : I.gens()) v.push_back(g.exponents());
  return v;
}

/// Flat scan over 0 <= a <= bound with memoized Newton-polyhedron membership.
/// Membership is upward closed, so a point whose lower neighbor is inside
/// needs no linear program.
class BoxScan {
public:
  BoxScan(const MonomialIdeal& I, const ClosureOptions& opts)
      : ideal_(I), gens_(generator_exponents(I)), bound_(I.max_exponents()) {
    std::size_t size = 1;
    for (Eigen::Index j = 0; j < bound_.size(); ++j) {
      const auto width = static_cast<std::size_t>(bound_(j)) + 1;
      if (size > opts.box_cap / width)
        throw std::runtime_error("closure: bounding box exceeds the configured point cap");
      size *= width;
    }
    in_np_.assign(size, false);
  }

  template <class Visitor>
  void run(Visitor&& visit) {
    const int n = static_cast<int>(bound_.size());
    ExponentVec a = ExponentVec::Zero(n);
    std::size_t index = 0;
    while (true) {
      const bool member = contains(ideal_, a);
      bool np = member;
      if (!np) {
        for (int j = 0; j < n && !np; ++j)
          if (a(j) > 0 && in_np_[index - stride(j)]) np = true;
        if (!np) np = convex_combination_below(gens_, a);
      }
      in_np_[index] = np;
      if (!visit(a, np, member)) return;

      int j = n - 1;
      while (j >= 0 && a(j) == bound_(j)) {
        a(j) = 0;
        --j;
      }
      if (j < 0) return;
      ++a(j);
      index = flat_index(a);
    }
  }

private:
  std::size_t stride(int j) const {
    std::size_t s = 1;
    for (Eigen::Index k = j + 1; k < bound_.size(); ++k)
      s *= static_cast<std::size_t>(bound_(k)) + 1;
    return s;
  }

  std::size_t flat_index(const ExponentVec& a) const {
    std::size_t idx = 0;
    for (Eigen::Index j = 0; j < a.size(); ++j)
      idx = idx * (static_cast<std::size_t>(bound_(j)) + 1) + static_cast<std::size_t>(a(j));
    return idx;
  }

  const MonomialIdeal& ideal_;
  std::vector<ExponentVec> gens_;
  ExponentVec bound_;
  std::vector<bool> in_np_;
};

}  // namespace

bool in_newton_polyhedron(const ExponentVec& point, const MonomialIdeal& I) {
  if (point.size() != I.context()->count())
    throw std::invalid_argument("in_newton_polyhedron: point length does not match the context");
  if ((point < 0).any()) throw std::invalid_argument("in_newton_polyhedron: negative coordinate");
  if (I.is_zero()) return false;
  if (contains(I, point)) return true;
  return convex_combination_below(generator_exponents(I), point);
}

std::optional<Monomial> closure_witness(const MonomialIdeal& I, const ClosureOptions& opts) {
  if (I.is_zero()) throw std::invalid_argument("closure_witness: zero ideal");
  std::optional<Monomial> witness;
  BoxScan scan(I, opts);
  scan.run([&](const ExponentVec& a, bool np, bool member) {
    if (np && !member) {
      witness = Monomial(I.context(), a);
      return false;
    }
    return true;
  });
  return witness;
}

bool is_integrally_closed(const MonomialIdeal& I, const ClosureOptions& opts) {
  return !closure_witness(I, opts).has_value();
}

MonomialIdeal closure_generators(const MonomialIdeal& I, const ClosureOptions& opts) {
  if (I.is_zero()) throw std::invalid_argument("closure_generators: zero ideal");
  std::vector<Monomial> gens;
  BoxScan scan(I, opts);
  scan.run([&](const ExponentVec& a, bool np, bool) {
    if (np) gens.push_back(Monomial(I.context(), a));
    return true;
  });
  return MonomialIdeal::make(I.context(), std::move(gens));
}

namespace {

bool nontrivial_edge(const WeightedGraph& g, int u, int v) {
  return g.has_edge(u, v) && g.weight(u, v) >= 2;
}

/// Triples (u, v, w) inducing a 2-edge path through v with both weights >= 2.
std::vector<std::array<int, 3>> nontrivial_induced_p3s(const WeightedGraph& g) {
  std::vector<std::array<int, 3>> out;
  const int n = g.vertex_count();
  for (int v = 1; v <= n; ++v)
    for (int u = 1; u <= n; ++u) {
      if (u == v || !nontrivial_edge(g, u, v)) continue;
      for (int w = u + 1; w <= n; ++w) {
        if (w == v || !nontrivial_edge(g, v, w)) continue;
        if (g.has_edge(u, w)) continue;  // that is a triangle, handled separately
        out.push_back({u, v, w});
      }
    }
  return out;
}

bool any_edge_between(const WeightedGraph& g, const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    for (int y : b)
      if (x != y && g.has_edge(x, y)) return true;
  return false;
}

}  // namespace

ForbiddenVerdict forbidden_subgraph_verdict(const WeightedGraph& g, ForbiddenReading reading) {
  ForbiddenVerdict verdict;
  if (!is_nontrivially_weighted(g)) return verdict;  // trivially weighted: always closed
  verdict.applicable = true;

  const int n = g.vertex_count();

  // (1) induced 2-edge path, both weights non-trivial
  const auto p3s = nontrivial_induced_p3s(g);
  if (!p3s.empty()) {
    verdict.closed = false;
    return verdict;
  }

  // (3) triangle with all three weights non-trivial
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      for (int w = v + 1; w <= n; ++w)
        if (nontrivial_edge(g, u, v) && nontrivial_edge(g, v, w) && nontrivial_edge(g, u, w)) {
          verdict.closed = false;
          return verdict;
        }

  // (2) disjoint union of two such paths, no edges between the six vertices.
  // Unreachable when (1) already failed, kept for the literal reading.
  for (std::size_t i = 0; i < p3s.size(); ++i)
    for (std::size_t j = i + 1; j < p3s.size(); ++j) {
      std::vector<int> a(p3s[i].begin(), p3s[i].end()), b(p3s[j].begin(), p3s[j].end());
      std::vector<int> both = a;
      both.insert(both.end(), b.begin(), b.end());
      std::sort(both.begin(), both.end());
      if (std::adjacent_find(both.begin(), both.end()) != both.end()) continue;
      if (!any_edge_between(g, a, b)) {
        verdict.closed = false;
        return verdict;
      }
    }

  if (reading == ForbiddenReading::B) {
    // (2') induced 2K2 with both weights non-trivial
    for (const auto& e : g.edges()) {
      if (e.w < 2) continue;
      for (const auto& f : g.edges()) {
        if (f.w < 2) continue;
        if (e.u == f.u && e.v == f.v) continue;
        std::vector<int> a{e.u, e.v}, b{f.u, f.v};
        std::vector<int> both{e.u, e.v, f.u, f.v};
        std::sort(both.begin(), both.end());
        if (std::adjacent_find(both.begin(), both.end()) != both.end()) continue;
        if (!any_edge_between(g, a, b)) {
          verdict.closed = false;
          return verdict;
        }
      }
    }
  }
  return verdict;
}

}  // namespace wedge
