#pragma once

#include "wedge/monomial.hpp"

#include <string>
#include <vector>

namespace wedge {

enum class Quantity { reg_quotient, depth_quotient };
enum class PredictionKind { equality, lower_bound, upper_bound };

/// A theorem-evaluated invariant value. `value` is only meaningful when
/// `applicable` is set; inapplicable predictions carry the reason instead.
struct Prediction {
  Quantity quantity = Quantity::reg_quotient;
  PredictionKind kind = PredictionKind::equality;
  long value = 0;
  bool applicable = false;
  std::string reason;
  std::string source;

  static Prediction equality(Quantity q, long v, std::string source);
  static Prediction lower_bound(Quantity q, long v, std::string source);
  static Prediction not_applicable(Quantity q, std::string reason, std::string source = "");
};

struct PredictionPair {
  Prediction reg;
  Prediction depth;
};

/// Floor/ceil of x/3 with the mathematical convention on negatives
/// (floor(-1/3) = -1, ceil(-1/3) = 0).
long floor_div3(long x);
long ceil_div3(long x);

/// Star with weights w_1..w_{n-1}: reg(S/I^t) = 2(t-1)w + w + sum(w_i - 1)
/// with w the maximum weight, depth(S/I^t) = 1. Always applicable.
PredictionPair star_invariants(const std::vector<Exponent>& weights, int t);

/// Trivially weighted path on n vertices.
PredictionPair trivial_path_invariants(int n, int t);

/// Non-trivial integrally closed path on n <= 4 vertices. reg = 2tw - 1;
/// depth as stated for the covered weight patterns, otherwise only the
/// depth >= 1 bound for powers.
PredictionPair small_path_invariants(const std::vector<Exponent>& weights, int t);

/// Non-trivial integrally closed path on n >= 5 vertices, t = 1.
PredictionPair path_invariants(const std::vector<Exponent>& weights);

/// reg(S/I^t) = reg(S/I) + 2(t-1)w for integrally closed non-trivial paths
/// of any size (the n <= 4 regime agrees with 2tw - 1).
Prediction path_power_reg(const std::vector<Exponent>& weights, int t);

/// Strongest applicable depth lower bound for powers of an integrally closed
/// non-trivial path on n >= 5 vertices, t >= 2. Not applicable when the two
/// non-trivial weights are equal.
Prediction path_power_depth_bound(const std::vector<Exponent>& weights, int t);

/// Forbidden-pattern test specialized to paths: closed iff at most one
/// non-trivial weight, or exactly two that sit at distance two.
bool path_weights_integrally_closed(const std::vector<Exponent>& weights);

/// Routes a path weight vector to the matching predictor; inapplicable cases
/// come back flagged with a reason, never silently dropped.
PredictionPair predict_path(const std::vector<Exponent>& weights, int t);

std::string to_string(const Prediction& p);

}  // namespace wedge
