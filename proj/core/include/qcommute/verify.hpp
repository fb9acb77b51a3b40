#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcommute/field.hpp"
#include "qcommute/oracle.hpp"
#include "qcommute/partition.hpp"
#include "qcommute/series.hpp"

namespace qcommute {

// Outcome of one verification check.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::uint64_t cases_checked = 0;
  std::string detail;  // first counterexample or a short summary
  double seconds = 0.0;
};

enum class VerifyLevel { fast, full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::fast;
  unsigned threads = 1;
  std::uint64_t seed = 0;  // drives the sampled (beyond-exhaustive) modes
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  // Overrides for the series factor constructions.  Production runs leave
  // these empty; tests inject corrupted factors here to prove the suite
  // catches a bad series pipeline.
  FactorFactory nonsingular_factor;
  FactorFactory nilpotent_factor;  // the m argument is ignored
};

struct VerifySummary {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::uint64_t total_cases() const;
};

// Runs the fixed battery of checks for the requested level.  Check order
// and names are stable; outcomes are deterministic for a fixed seed and
// independent of the thread count.
VerifySummary run_verification(const VerifyOptions& options);

// ---- individual cross-checks (also used directly by tests) ----

// The block matrix built from a nilpotent Jordan type has twisted solution
// dimension sum min(i,j) a_i a_j, independent of the scaling element.
CheckResult verify_block_structure(const Partition& pi, const FieldPtr& field,
                                   const FieldElement& zeta);

// The twisted commutation equation holds iff both stable subspaces are
// preserved and both restricted equations hold.  Exhaustive over (A, B)
// when q^(2n^2) fits the naive budget, otherwise `samples` seeded random
// pairs.
CheckResult verify_fitting(const FieldPtr& field, unsigned n,
                           const FieldElement& zeta,
                           std::uint64_t samples = 2000, std::uint64_t seed = 0);

// Route agreement of similar_to_scaled for every matrix, plus agreement of
// the three class-count routes (formula, chain enumeration, distinct chains
// of enumerated fixed matrices).
CheckResult verify_similarity_lemma(const FieldPtr& field, unsigned n,
                                    const FieldElement& zeta, unsigned threads = 1);

// Oracle-only convolution: the pair count at each size n <= n_max equals
// the convolution of oracle nilpotent and nonsingular counts weighted by
// subspace_pair_count.
CheckResult verify_convolution(const FieldPtr& field, const FieldElement& zeta,
                               unsigned n_max, unsigned workers = 1,
                               std::uint64_t budget = kDefaultOracleBudget);

}  // namespace qcommute
