#pragma once

#include "wedge/betti.hpp"
#include "wedge/closure.hpp"
#include "wedge/formulas.hpp"
#include "wedge/graph.hpp"
#include "wedge/polarize.hpp"

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace wedge {

enum class Verdict { match, bound_satisfied, mismatch, skipped };
std::string to_string(Verdict v);

struct VerificationCase {
  std::string params;
  std::string quantity;
  std::string predicted;
  std::string computed;
  Verdict verdict = Verdict::skipped;
  /// machine-readable skip reason: not-applicable | resource-cap | not-integrally-closed
  std::string reason;
  std::string source;
};

struct Report {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<VerificationCase> cases;
  long matches = 0;
  long bounds_satisfied = 0;
  long mismatches = 0;
  long skipped = 0;
  /// informational only; never serialized, reports stay byte-identical
  double wall_seconds = 0.0;

  void add(VerificationCase c);
  bool ok() const { return mismatches == 0; }
  std::string summary_line() const;
  /// `{suite, config, cases:[{params, quantity, predicted, computed, verdict}], summary}`
  std::string to_json(bool pretty = true) const;
};

struct VerifyConfig {
  FieldSpec field{};
  /// sweep caps; 0 keeps the suite default
  int max_n = 0;
  int max_weight = 0;
  int max_power = 0;
  std::size_t lattice_cap = 50000;
  int taylor_cap = 15;
  int threads = 0;
  /// optional on-disk result cache
  std::string cache_dir;
};

EngineOptions engine_options(const VerifyConfig& cfg);

/// Memoizes quotient-convention Betti tables by canonical ideal form and
/// field, optionally persisted as JSON files. Sweeps revisit colon and
/// deletion sub-ideals constantly.
class EngineCache {
public:
  explicit EngineCache(EngineOptions opts, std::string dir = "");

  BettiTable quotient_table(const MonomialIdeal& I);
  HomologicalInvariants invariants_of(const MonomialIdeal& I);
  const EngineOptions& options() const { return opts_; }
  std::size_t size() const;

private:
  std::string key_of(const MonomialIdeal& I) const;
  void disk_store(const std::string& key, const BettiTable& table) const;
  bool disk_load(const std::string& key, int ambient, BettiTable& out) const;

  EngineOptions opts_;
  std::string dir_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, BettiTable> tables_;
};

/// Which weight classes the path suite asserts; the acceptance criteria
/// exercise the three classes separately.
enum class PathClass { all, trivial, small_nontrivial, general_nontrivial };

struct PathSuiteOptions {
  PathClass path_class = PathClass::all;
  /// powers t >= 2 of non-trivial paths are swept only up to this n
  int nontrivial_power_max_n = 7;
};

Report verify_star_suite(const VerifyConfig& cfg, EngineCache& cache);
Report verify_path_suite(const VerifyConfig& cfg, EngineCache& cache,
                         const PathSuiteOptions& options = {});
Report verify_colon_identities(const VerifyConfig& cfg);
Report verify_betti_splitting_suite(const VerifyConfig& cfg, EngineCache& cache);
Report reproduce_examples(const VerifyConfig& cfg, EngineCache& cache);
Report verify_closure_sweep(const VerifyConfig& cfg);
Report verify_oracle_equivalence(const VerifyConfig& cfg);
Report verify_polarization_invariance(const VerifyConfig& cfg);
Report verify_exact_sequence_bounds(const VerifyConfig& cfg, EngineCache& cache);

/// One Betti-splitting check: J takes the generators divisible by the pivot
/// variable (1-based), K the rest; J must be principal or have a linear
/// resolution, otherwise the case comes back skipped.
VerificationCase check_betti_splitting(const MonomialIdeal& I, int pivot_var, EngineCache& cache);

bool has_linear_resolution(const BettiTable& ideal_table, const MonomialIdeal& I);

/// Deterministic corpus of small monomial ideals (fixed seed per suite).
std::vector<MonomialIdeal> random_ideal_corpus(int count, unsigned long long seed, int max_vars,
                                               int max_gens, Exponent max_exp);

std::vector<std::string> suite_names();
Report run_suite(const std::string& name, const VerifyConfig& cfg, EngineCache& cache);

}  // namespace wedge
