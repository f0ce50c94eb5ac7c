#include "wedge/formulas.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace wedge {

Prediction Prediction::equality(Quantity q, long v, std::string source) {
  Prediction p;
  p.quantity = q;
  p.kind = PredictionKind::equality;
  p.value = v;
  p.applicable = true;
  p.source = std::move(source);
  return p;
}

Prediction Prediction::lower_bound(Quantity q, long v, std::string source) {
  Prediction p = equality(q, v, std::move(source));
  p.kind = PredictionKind::lower_bound;
  return p;
}

Prediction Prediction::not_applicable(Quantity q, std::string reason, std::string source) {
  Prediction p;
  p.quantity = q;
  p.applicable = false;
  p.reason = std::move(reason);
  p.source = std::move(source);
  return p;
}

long floor_div3(long x) { return x >= 0 ? x / 3 : -((-x + 2) / 3); }
long ceil_div3(long x) { return x >= 0 ? (x + 2) / 3 : -((-x) / 3); }

namespace {

void require_weights(const std::vector<Exponent>& weights, int t) {
  if (weights.empty()) throw std::invalid_argument("predictor: empty weight list");
  for (const Exponent w : weights)
    if (w < 1) throw std::invalid_argument("predictor: weights must be >= 1");
  if (t < 1) throw std::invalid_argument("predictor: power must be >= 1");
}

Exponent max_weight(const std::vector<Exponent>& weights) {
  return *std::max_element(weights.begin(), weights.end());
}

bool trivially_weighted(const std::vector<Exponent>& weights) {
  return max_weight(weights) == 1;
}

std::vector<int> nontrivial_positions(const std::vector<Exponent>& weights) {
  std::vector<int> pos;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] >= 2) pos.push_back(static_cast<int>(i) + 1);
  return pos;
}

}  // namespace

bool path_weights_integrally_closed(const std::vector<Exponent>& weights) {
  const auto pos = nontrivial_positions(weights);
  if (pos.size() <= 1) return true;
  if (pos.size() == 2) return pos[1] - pos[0] == 2;
  return false;
}

PredictionPair star_invariants(const std::vector<Exponent>& weights, int t) {
  require_weights(weights, t);
  const Exponent w = max_weight(weights);
  long reg = 2 * static_cast<long>(t - 1) * w + w;
  for (const Exponent wi : weights) reg += wi - 1;
  const char* source = t == 1 ? "star" : "starpower";
  return {Prediction::equality(Quantity::reg_quotient, reg, source),
          Prediction::equality(Quantity::depth_quotient, 1, source)};
}

PredictionPair trivial_path_invariants(int n, int t) {
  if (n < 2) throw std::invalid_argument("trivial_path_invariants: need n >= 2");
  if (t < 1) throw std::invalid_argument("trivial_path_invariants: power must be >= 1");
  const long reg = floor_div3(n + 1) + 2 * (t - 1);
  const long depth = std::max(ceil_div3(n - t + 1), 1L);
  return {Prediction::equality(Quantity::reg_quotient, reg, "trivialpath"),
          Prediction::equality(Quantity::depth_quotient, depth, "trivialpath")};
}

PredictionPair small_path_invariants(const std::vector<Exponent>& weights, int t) {
  require_weights(weights, t);
  const int n = static_cast<int>(weights.size()) + 1;
  if (n > 4) throw std::invalid_argument("small_path_invariants: need n <= 4");
  const char* source = t == 1 ? "smalln" : "small2";

  if (trivially_weighted(weights))
    return {Prediction::not_applicable(Quantity::reg_quotient, "trivially weighted", source),
            Prediction::not_applicable(Quantity::depth_quotient, "trivially weighted", source)};
  if (!path_weights_integrally_closed(weights))
    return {Prediction::not_applicable(Quantity::reg_quotient, "not integrally closed", source),
            Prediction::not_applicable(Quantity::depth_quotient, "not integrally closed", source)};

  const Exponent w = max_weight(weights);
  Prediction reg = Prediction::equality(Quantity::reg_quotient, 2 * static_cast<long>(t) * w - 1, source);

  if (n <= 3)
    return {reg, Prediction::equality(Quantity::depth_quotient, 1, source)};

  const Exponent w1 = weights[0], w2 = weights[1], w3 = weights[2];
  if (t == 1) {
    const long a = w2 == 1 ? 0 : 1;
    return {reg, Prediction::equality(Quantity::depth_quotient, 2 - a, source)};
  }
  if (w1 == 1 && w3 == 1 && w2 > 1)
    return {reg, Prediction::equality(Quantity::depth_quotient, 1, source)};
  if (w1 > 1 && w3 > 1 && w2 == 1)
    return {reg, Prediction::equality(Quantity::depth_quotient, 2, source)};
  // Mixed case (one end non-trivial, rest trivial): only the depth >= 1
  // bound is stated for powers.
  return {reg, Prediction::lower_bound(Quantity::depth_quotient, 1, "path power5")};
}

namespace {

struct PathCandidate {
  int i = 0;          // distinguished index, 1-based
  Exponent wi = 0;    // weight at i
  Exponent wi2 = 0;   // weight at i + 2
};

/// Positions i in [n-3] with w_i >= 2, w_i >= w_{i+2} and every other
/// weight 1, collected over the given orientation.
std::vector<PathCandidate> theorem_candidates(const std::vector<Exponent>& weights) {
  std::vector<PathCandidate> out;
  const int edge_count = static_cast<int>(weights.size());
  const int n = edge_count + 1;
  for (int i = 1; i <= n - 3; ++i) {
    const Exponent wi = weights[static_cast<std::size_t>(i - 1)];
    const Exponent wi2 = weights[static_cast<std::size_t>(i + 1)];
    if (wi < 2 || wi < wi2) continue;
    bool others_trivial = true;
    for (int j = 1; j <= edge_count && others_trivial; ++j)
      if (j != i && j != i + 2 && weights[static_cast<std::size_t>(j - 1)] != 1) others_trivial = false;
    if (others_trivial) out.push_back({i, wi, wi2});
  }
  return out;
}

std::vector<Exponent> reversed(const std::vector<Exponent>& weights) {
  return std::vector<Exponent>(weights.rbegin(), weights.rend());
}

long path_reg_formula(int n, const PathCandidate& c) {
  const long first = 2 * c.wi + floor_div3(c.i - 1) + floor_div3(n - c.i - 1);
  const long second = 2 * c.wi2 + floor_div3(c.i - 2) + floor_div3(n - c.i);
  return std::max(first, second) - 1;
}

long path_depth_formula(int n, const PathCandidate& c) {
  const long a = c.wi2 == 1 ? 0 : 1;
  const long first = ceil_div3(c.i) + ceil_div3(n - c.i - a);
  const long second = ceil_div3(c.i - 2) + ceil_div3(n - c.i - 2) + 1;
  return std::min(first, second);
}

}  // namespace

PredictionPair path_invariants(const std::vector<Exponent>& weights) {
  require_weights(weights, 1);
  const int n = static_cast<int>(weights.size()) + 1;
  if (n < 5) throw std::invalid_argument("path_invariants: need n >= 5");

  if (trivially_weighted(weights))
    return {Prediction::not_applicable(Quantity::reg_quotient, "trivially weighted", "path"),
            Prediction::not_applicable(Quantity::depth_quotient, "trivially weighted", "path")};
  if (!path_weights_integrally_closed(weights))
    return {Prediction::not_applicable(Quantity::reg_quotient, "not integrally closed", "path"),
            Prediction::not_applicable(Quantity::depth_quotient, "not integrally closed", "path")};

  // Evaluate every admissible (orientation, i); the results must agree, which
  // makes the predictions literally reversal-invariant.
  std::set<long> regs, depths;
  for (const auto& w : {weights, reversed(weights)})
    for (const auto& c : theorem_candidates(w)) {
      regs.insert(path_reg_formula(n, c));
      depths.insert(path_depth_formula(n, c));
    }
  if (regs.empty())
    return {Prediction::not_applicable(Quantity::reg_quotient, "no admissible index", "path"),
            Prediction::not_applicable(Quantity::depth_quotient, "no admissible index", "path")};
  if (regs.size() > 1 || depths.size() > 1)
    return {Prediction::not_applicable(Quantity::reg_quotient, "ambiguous index", "path"),
            Prediction::not_applicable(Quantity::depth_quotient, "ambiguous index", "path")};
  return {Prediction::equality(Quantity::reg_quotient, *regs.begin(), "path"),
          Prediction::equality(Quantity::depth_quotient, *depths.begin(), "path")};
}

Prediction path_power_reg(const std::vector<Exponent>& weights, int t) {
  require_weights(weights, t);
  const int n = static_cast<int>(weights.size()) + 1;
  if (trivially_weighted(weights))
    return Prediction::not_applicable(Quantity::reg_quotient, "trivially weighted", "path power");
  if (!path_weights_integrally_closed(weights))
    return Prediction::not_applicable(Quantity::reg_quotient, "not integrally closed", "path power");

  const Exponent w = max_weight(weights);
  long base;
  if (n <= 4) {
    base = 2 * static_cast<long>(w) - 1;
  } else {
    const Prediction reg1 = path_invariants(weights).reg;
    if (!reg1.applicable)
      return Prediction::not_applicable(Quantity::reg_quotient, reg1.reason, "path power");
    base = reg1.value;
  }
  return Prediction::equality(Quantity::reg_quotient, base + 2 * static_cast<long>(t - 1) * w,
                              t == 1 ? (n <= 4 ? "smalln" : "path") : "path power");
}

Prediction path_power_depth_bound(const std::vector<Exponent>& weights, int t) {
  require_weights(weights, t);
  const int n = static_cast<int>(weights.size()) + 1;
  if (n < 5) throw std::invalid_argument("path_power_depth_bound: need n >= 5");
  if (t < 2)
    throw std::invalid_argument("path_power_depth_bound: need t >= 2 (use path_invariants)");
  if (trivially_weighted(weights))
    return Prediction::not_applicable(Quantity::depth_quotient, "trivially weighted", "tdepth");
  if (!path_weights_integrally_closed(weights))
    return Prediction::not_applicable(Quantity::depth_quotient, "not integrally closed", "tdepth");

  std::optional<long> best;
  std::string source;
  const auto consider = [&](long bound, const char* tag) {
    if (!best || bound > *best) {
      best = bound;
      source = tag;
    }
  };

  for (const auto& w : {weights, reversed(weights)}) {
    const int edges = static_cast<int>(w.size());
    // tdepth1: w_1 > w_3 and every other weight 1
    if (edges >= 3 && w[0] > w[2]) {
      bool others = true;
      for (int j = 1; j <= edges; ++j)
        if (j != 1 && j != 3 && w[static_cast<std::size_t>(j - 1)] != 1) others = false;
      if (others) {
        const long floor2 = w[2] == 1 ? 1 : 2;
        consider(std::max(ceil_div3(n - t + 1), floor2), "tdepth1");
      }
    }
    // tdepth2: w_i > w_{i+2} for some i, every other weight 1
    for (int i = 1; i + 2 <= edges; ++i) {
      const Exponent wi = w[static_cast<std::size_t>(i - 1)];
      const Exponent wi2 = w[static_cast<std::size_t>(i + 1)];
      if (wi <= wi2) continue;
      bool others = true;
      for (int j = 1; j <= edges; ++j)
        if (j != i && j != i + 2 && w[static_cast<std::size_t>(j - 1)] != 1) others = false;
      if (!others) continue;
      if (wi2 == 1) {
        if (t == 2 && i % 3 == 1 && n % 3 == 2)
          consider(ceil_div3(n - 1), "tdepth2");
        else
          consider(std::max(ceil_div3(n - t), 1L), "tdepth2");
      } else {
        consider(std::max(ceil_div3(n - t), 2L), "tdepth2");
      }
    }
  }

  if (!best)
    return Prediction::not_applicable(
        Quantity::depth_quotient, "equal non-trivial weights are not covered", "tdepth");
  return Prediction::lower_bound(Quantity::depth_quotient, *best, source);
}

PredictionPair predict_path(const std::vector<Exponent>& weights, int t) {
  require_weights(weights, t);
  const int n = static_cast<int>(weights.size()) + 1;

  if (trivially_weighted(weights)) return trivial_path_invariants(n, t);
  if (!path_weights_integrally_closed(weights))
    return {Prediction::not_applicable(Quantity::reg_quotient, "not integrally closed"),
            Prediction::not_applicable(Quantity::depth_quotient, "not integrally closed")};
  if (n <= 4) return small_path_invariants(weights, t);
  if (t == 1) return path_invariants(weights);
  return {path_power_reg(weights, t), path_power_depth_bound(weights, t)};
}

std::string to_string(const Prediction& p) {
  if (!p.applicable) return "n/a (" + p.reason + ")";
  switch (p.kind) {
    case PredictionKind::equality:
      return std::to_string(p.value);
    case PredictionKind::lower_bound:
      return ">=" + std::to_string(p.value);
    case PredictionKind::upper_bound:
      return "<=" + std::to_string(p.value);
  }
  return "";
}

}  // namespace wedge
