#pragma once

#include "wedge/graph.hpp"
#include "wedge/ideal.hpp"

#include <cstddef>
#include <optional>

namespace wedge {

struct ClosureOptions {
  /// Upper bound on the number of integer points scanned in the bounding box.
  std::size_t box_cap = std::size_t{1} << 22;
};

/// Whether `point` lies in conv(exponents of G(I)) + R^n_{>=0}, decided by an
/// exact rational linear program. False for the zero ideal.
bool in_newton_polyhedron(const ExponentVec& point, const MonomialIdeal& I);

/// I is integrally closed iff no integer point of the Newton polyhedron is
/// missing from I. The scan is confined to 0 <= a <= max_exponents(I), which
/// is sound: a counterexample above the box stays one after reducing any
/// oversized coordinate.
bool is_integrally_closed(const MonomialIdeal& I, const ClosureOptions& opts = {});

/// A monomial of the integral closure that is missing from I, if any;
/// deterministic first hit of the box scan.
std::optional<Monomial> closure_witness(const MonomialIdeal& I, const ClosureOptions& opts = {});

/// Minimal generators of the integral closure of I.
MonomialIdeal closure_generators(const MonomialIdeal& I, const ClosureOptions& opts = {});

/// The combinatorial criterion reads "P^2_w of length 2" either as written
/// (reading A: a 2-edge path) or with the disjoint-pair case downgraded to a
/// pair of disjoint non-trivial edges (reading B: also forbids an induced
/// 2K2). The verify harness selects whichever matches the LP oracle.
enum class ForbiddenReading { A, B };

struct ForbiddenVerdict {
  /// False for trivially weighted graphs (those are unconditionally closed).
  bool applicable = false;
  bool closed = true;
};

ForbiddenVerdict forbidden_subgraph_verdict(const WeightedGraph& g, ForbiddenReading reading);

}  // namespace wedge
