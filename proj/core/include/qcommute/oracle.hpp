#pragma once

#include <cstdint>

#include "qcommute/bigint.hpp"
#include "qcommute/canonical_form.hpp"
#include "qcommute/count_set.hpp"
#include "qcommute/field.hpp"

namespace qcommute {

// Enumeration ceilings.  The main oracle counts enumerated A matrices
// against its budget; the naive verifier counts (A, B) pairs.  Exceeding a
// budget throws BudgetError before any work is done.
inline constexpr std::uint64_t kDefaultOracleBudget = 1ull << 34;
inline constexpr std::uint64_t kDefaultNaiveBudget = 1ull << 26;

// Brute-force count of pairs (A, B) with A*B = zeta*B*A by enumerating each
// A once and reading off the number of compatible B as q^dim of the solution
// space.  Work is sharded deterministically by the code of A's first row;
// worker w processes the shards congruent to w.  The result is independent
// of the worker count.
struct OracleJob {
  FieldPtr field;
  unsigned n = 0;
  FieldElement zeta;
  CountSet set = CountSet::pairs;  // classes is rejected (see chain route)
  unsigned workers = 1;
  std::uint64_t budget = kDefaultOracleBudget;
};

BigInt oracle_count(const OracleJob& job);

// One enumeration pass yielding all three pair families at once.
struct OracleBreakdown {
  BigInt pairs;
  BigInt nonsingular;
  BigInt nilpotent;
};
OracleBreakdown oracle_count_all(const FieldPtr& field, unsigned n,
                                 const FieldElement& zeta, unsigned workers = 1,
                                 std::uint64_t budget = kDefaultOracleBudget);

// Fully independent double loop over (A, B) comparing A*B with zeta*B*A
// entrywise.  Exists to check the main oracle's linear-algebra shortcut; it
// shares no code path with it beyond field arithmetic.
BigInt oracle_naive(CountSet set, const FieldPtr& field, unsigned n,
                    const FieldElement& zeta,
                    std::uint64_t budget = kDefaultNaiveBudget);

// Every invariant-factor chain of total degree n all of whose factors are
// twist invariant for order m: these index exactly the similarity classes
// fixed by scaling, so their number is an enumeration route to
// count_classes.
std::vector<InvariantFactors> twist_stable_chains(const FieldPtr& field,
                                                  unsigned n, unsigned m);
BigInt count_classes_by_enumeration(const FieldPtr& field, unsigned n, unsigned m);

}  // namespace qcommute
