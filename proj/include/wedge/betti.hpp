#pragma once

#include "wedge/ideal.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wedge {

/// Raised when an input exceeds a configured size cap (lattice size, oracle
/// generator count, box volume).
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field for homology ranks. Betti numbers of monomial ideals can
/// depend on the characteristic; GF(32003) is the default working field.
struct FieldSpec {
  enum class Kind { prime, rational };

  Kind kind = Kind::prime;
  std::uint32_t p = 32003;

  static FieldSpec gf(std::uint32_t prime);
  static FieldSpec rationals();
  /// Accepts `gf:<prime>` or `rational`.
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && (a.kind == Kind::rational || a.p == b.p);
  }
};

/// All lcms of nonempty generator subsets, ordered graded-lex ascending.
/// The bottom element (empty lcm, the zero vector) is kept implicit.
struct LcmLattice {
  ContextPtr context;
  std::vector<ExponentVec> elements;

  ExponentVec bottom() const { return ExponentVec::Zero(context->count()); }
  std::size_t size() const { return elements.size(); }
};

LcmLattice lcm_lattice(const MonomialIdeal& I, std::size_t cap = 50000);

bool lattice_contains(const MonomialIdeal& I, const ExponentVec& a);

/// Faces as vertex bitmasks over a ground set of at most 31 vertices.
/// Downward closed; bit k is vertex k (0-based). The void complex (no faces
/// at all) is distinct from the complex whose only face is empty.
class SimplicialComplex {
public:
  using Face = std::uint32_t;

  SimplicialComplex(int ground_size, std::vector<Face> faces);
  static SimplicialComplex void_complex(int ground_size);

  int ground_size() const { return ground_; }
  bool is_void() const { return faces_.empty(); }
  bool has_empty_face() const { return !faces_.empty() && faces_.front() == 0; }
  /// Sorted, deduplicated masks.
  const std::vector<Face>& faces() const { return faces_; }
  /// count of faces of dimension d (|face| = d + 1), d from -1 up.
  long face_count(int dim) const;
  int top_dimension() const;

private:
  int ground_;
  std::vector<Face> faces_;
};

/// dims[k] = dim H~_{k-1}(C; F), k = 0 .. ground. All zeros for the void
/// complex; the complex {empty} has H~_{-1} = 1.
std::vector<long> reduced_homology_dims(const SimplicialComplex& C, const FieldSpec& F);

/// K^a(I): squarefree b <= a with x^{a-b} in I; faces are the supports of b.
/// a must lie in the lcm lattice of I.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const ExponentVec& a);

enum class TableConvention { ideal, quotient };

/// Multigraded Betti numbers with the coarse (i, j) table derived from them.
class BettiTable {
public:
  using Multidegree = std::vector<Exponent>;

  BettiTable(TableConvention convention, int ambient_vars, FieldSpec field)
      : convention_(convention), ambient_(ambient_vars), field_(field) {}

  TableConvention convention() const { return convention_; }
  int ambient_vars() const { return ambient_; }
  const FieldSpec& field() const { return field_; }

  void add(int i, const ExponentVec& degree, long count);
  void add(int i, const Multidegree& degree, long count);

  const std::map<std::pair<int, Multidegree>, long>& multigraded() const { return entries_; }
  std::map<std::pair<int, long>, long> coarse() const;
  long coarse_entry(int i, long j) const;

  /// beta_{i,a}(S/I) = beta_{i-1,a}(I) for i >= 1 plus beta_{0,0}(S/I) = 1.
  BettiTable to_quotient() const;
  BettiTable to_ideal() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.convention_ == b.convention_ && a.ambient_ == b.ambient_ && a.entries_ == b.entries_;
  }

private:
  TableConvention convention_;
  int ambient_;
  FieldSpec field_;
  std::map<std::pair<int, Multidegree>, long> entries_;
};

struct EngineOptions {
  FieldSpec field{};
  std::size_t lattice_cap = 50000;
  int taylor_generator_cap = 15;
  /// 0 picks the hardware thread count.
  int threads = 0;
};

/// Multigraded Betti numbers via reduced homology of upper Koszul complexes,
/// one per lcm-lattice element. Returns the S/I-convention table.
BettiTable betti_upper_koszul(const MonomialIdeal& I, const EngineOptions& opts = {});

/// Independent oracle: homology of the multigraded strands of the Taylor
/// complex tensored with the residue field. Must agree with the upper-Koszul
/// route entrywise. Capped by taylor_generator_cap.
BettiTable betti_taylor_strand(const MonomialIdeal& I, const EngineOptions& opts = {});

struct HomologicalInvariants {
  long reg = 0;
  long pd = 0;
  long depth = 0;
};

/// reg/pd/depth of S/I from a quotient-convention table; depth by
/// Auslander-Buchsbaum.
HomologicalInvariants invariants(const BettiTable& table);

/// Numerator coefficients of the multigraded Hilbert series by
/// inclusion-exclusion over generator subsets; zero coefficients dropped.
/// Independent of the homology route (Euler characteristic oracle).
std::map<BettiTable::Multidegree, long> hilbert_numerator(const MonomialIdeal& I,
                                                          int generator_cap = 20);

}  // namespace wedge
