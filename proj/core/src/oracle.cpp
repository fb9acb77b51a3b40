#include "qcommute/oracle.hpp"

#include <stdexcept>
#include <thread>

#include "gf_kernels.hpp"
#include "qcommute/counting.hpp"
#include "qcommute/errors.hpp"
#include "qcommute/fieldpoly.hpp"
#include "qcommute/matrix.hpp"

namespace qcommute {

namespace {

void require_job_field(const FieldPtr& field, const FieldElement& zeta) {
  if (!field) throw std::invalid_argument("oracle needs a field");
  if (!zeta.field() || !same_field(*field, *zeta.field())) {
    throw std::invalid_argument("scaling element is not from the oracle's field");
  }
  if (zeta.is_zero()) throw std::invalid_argument("scaling element must be nonzero");
}

// Number of A matrices to enumerate: q^(n^2), or nullopt on uint64 overflow.
std::optional<std::uint64_t> enumeration_size(std::uint64_t q, unsigned n) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n * n; ++i) {
    if (total > UINT64_MAX / q) return std::nullopt;
    total *= q;
  }
  return total;
}

void check_budget(std::uint64_t q, unsigned n, unsigned entries_exponent,
                  std::uint64_t budget, const char* what) {
  BigInt total = big_pow(BigInt(q), std::uint64_t(n) * n * entries_exponent);
  if (total > budget) {
    throw BudgetError(std::string(what) + " would enumerate " + total.str() +
                      " states, exceeding the budget of " +
                      std::to_string(budget));
  }
}

// Histograms over solution-space dimension (0..n^2), one per family.
struct DimHistograms {
  std::vector<std::uint64_t> pairs;
  std::vector<std::uint64_t> nonsingular;
  std::vector<std::uint64_t> nilpotent;

  explicit DimHistograms(unsigned n)
      : pairs(std::size_t(n) * n + 1, 0),
        nonsingular(pairs.size(), 0),
        nilpotent(pairs.size(), 0) {}

  void merge(const DimHistograms& other) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      pairs[i] += other.pairs[i];
      nonsingular[i] += other.nonsingular[i];
      nilpotent[i] += other.nilpotent[i];
    }
  }
};

// Enumerates every A with first-row code congruent to `worker` modulo
// `stride`, classifying each and recording q^dim contributions by histogram
// slot.
void scan_shards(const Field& f, unsigned n, std::uint32_t zeta, unsigned worker,
                 unsigned stride, DimHistograms& hist) {
  const std::uint64_t q = f.size();
  const unsigned nn = n * n;
  std::uint64_t row_states = 1;
  for (unsigned i = 0; i < n; ++i) row_states *= q;
  std::uint64_t rest_states = 1;
  for (unsigned i = 0; i < nn - n; ++i) rest_states *= q;

  std::vector<std::uint32_t> a(nn, 0);
  std::vector<std::uint32_t> op(std::size_t(nn) * nn);
  std::vector<std::uint32_t> scratch, s1, s2;

  for (std::uint64_t shard = worker; shard < row_states; shard += stride) {
    // First row fixed by the shard code.
    std::uint64_t s = shard;
    for (unsigned j = 0; j < n; ++j) {
      a[j] = static_cast<std::uint32_t>(s % q);
      s /= q;
    }
    std::fill(a.begin() + n, a.end(), 0);

    for (std::uint64_t state = 0;; ++state) {
      detail::twist_operator(f, a.data(), n, zeta, op.data());
      const unsigned rank = detail::rank_inplace(f, op.data(), nn, nn);
      const unsigned dim = nn - rank;

      hist.pairs[dim] += 1;
      if (detail::rank_copy(f, a.data(), n, n, scratch) == n) {
        hist.nonsingular[dim] += 1;
      } else if (detail::is_nilpotent_codes(f, a.data(), n, s1, s2)) {
        hist.nilpotent[dim] += 1;
      }

      if (state + 1 == rest_states) break;
      // Odometer over the trailing n^2 - n entries.
      for (unsigned pos = n;; ++pos) {
        if (++a[pos] < q) break;
        a[pos] = 0;
      }
    }
  }
}

BigInt histogram_total(const std::vector<std::uint64_t>& hist, const BigInt& q) {
  BigInt total = 0;
  for (std::size_t dim = 0; dim < hist.size(); ++dim) {
    if (hist[dim] == 0) continue;
    total += BigInt(hist[dim]) * big_pow(q, dim);
  }
  return total;
}

DimHistograms run_enumeration(const FieldPtr& field, unsigned n,
                              const FieldElement& zeta, unsigned workers,
                              std::uint64_t budget) {
  require_job_field(field, zeta);
  check_budget(field->size(), n, 1, budget, "matrix enumeration");
  if (workers == 0) throw std::invalid_argument("worker count must be positive");

  DimHistograms result(n);
  if (n == 0) {
    // The empty matrix is a single A that is (vacuously) both invertible
    // and nilpotent; all three families count exactly the empty pair.
    result.pairs[0] = 1;
    result.nonsingular[0] = 1;
    result.nilpotent[0] = 1;
    return result;
  }

  const auto size = enumeration_size(field->size(), n);
  if (!size) throw BudgetError("matrix enumeration exceeds addressable range");

  if (workers == 1) {
    scan_shards(*field, n, zeta.code(), 0, 1, result);
    return result;
  }

  std::vector<DimHistograms> parts(workers, DimHistograms(n));
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      scan_shards(*field, n, zeta.code(), w, workers, parts[w]);
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& part : parts) result.merge(part);
  return result;
}

}  // namespace

BigInt oracle_count(const OracleJob& job) {
  if (job.set == CountSet::classes) {
    throw std::invalid_argument(
        "class counts are enumerated by chain, not by the matrix oracle");
  }
  const OracleBreakdown all =
      oracle_count_all(job.field, job.n, job.zeta, job.workers, job.budget);
  switch (job.set) {
    case CountSet::pairs: return all.pairs;
    case CountSet::nonsingular: return all.nonsingular;
    case CountSet::nilpotent: return all.nilpotent;
    default: break;
  }
  throw std::invalid_argument("unknown count set");
}

OracleBreakdown oracle_count_all(const FieldPtr& field, unsigned n,
                                 const FieldElement& zeta, unsigned workers,
                                 std::uint64_t budget) {
  const DimHistograms hist = run_enumeration(field, n, zeta, workers, budget);
  const BigInt q(field->size());
  return OracleBreakdown{histogram_total(hist.pairs, q),
                         histogram_total(hist.nonsingular, q),
                         histogram_total(hist.nilpotent, q)};
}

BigInt oracle_naive(CountSet set, const FieldPtr& field, unsigned n,
                    const FieldElement& zeta, std::uint64_t budget) {
  require_job_field(field, zeta);
  if (set == CountSet::classes) {
    throw std::invalid_argument(
        "class counts are enumerated by chain, not by the matrix oracle");
  }
  check_budget(field->size(), n, 2, budget, "pair enumeration");
  if (n == 0) return 1;

  const Field& f = *field;
  const std::uint64_t q = f.size();
  const unsigned nn = n * n;
  const std::uint64_t states = *enumeration_size(q, n);

  std::vector<std::uint32_t> a(nn, 0), b(nn, 0), ab(nn), ba(nn);
  std::vector<std::uint32_t> scratch, s1, s2;
  const std::uint32_t z = zeta.code();

  BigInt total = 0;
  for (std::uint64_t ai = 0; ai < states; ++ai) {
    std::uint64_t v = ai;
    for (unsigned i = 0; i < nn; ++i) {
      a[i] = static_cast<std::uint32_t>(v % q);
      v /= q;
    }
    bool eligible = true;
    if (set == CountSet::nonsingular) {
      eligible = detail::rank_copy(f, a.data(), n, n, scratch) == n;
    } else if (set == CountSet::nilpotent) {
      eligible = detail::is_nilpotent_codes(f, a.data(), n, s1, s2);
    }
    if (!eligible) continue;

    for (std::uint64_t bi = 0; bi < states; ++bi) {
      v = bi;
      for (unsigned i = 0; i < nn; ++i) {
        b[i] = static_cast<std::uint32_t>(v % q);
        v /= q;
      }
      detail::mat_mul(f, a.data(), b.data(), n, ab.data());
      detail::mat_mul(f, b.data(), a.data(), n, ba.data());
      bool match = true;
      for (unsigned i = 0; i < nn && match; ++i) {
        match = ab[i] == f.mul(z, ba[i]);
      }
      if (match) total += 1;
    }
  }
  return total;
}

namespace {

// Extends a divisibility chain whose factors are all twist invariant,
// appending factors of non-decreasing degree until the remaining degree is
// exhausted.
void extend_chains(const FieldPtr& field, unsigned m, unsigned remaining,
                   std::vector<FieldPoly>& chain,
                   std::vector<InvariantFactors>& out) {
  if (remaining == 0) {
    out.push_back(InvariantFactors{chain});
    return;
  }
  const unsigned min_deg =
      chain.empty() ? 1 : chain.back().degree().value_or(1);
  for (unsigned d = min_deg; d <= remaining; ++d) {
    // The factors after this one all have degree >= d, so at most
    // remaining / d more slots exist; no extra pruning needed beyond the
    // degree bound itself.
    for (const FieldPoly& g : monic_polys_of_degree(field, d)) {
      if (!is_twist_invariant(g, m)) continue;
      if (!chain.empty() && !chain.back().divides(g)) continue;
      chain.push_back(g);
      extend_chains(field, m, remaining - d, chain, out);
      chain.pop_back();
    }
  }
}

}  // namespace

std::vector<InvariantFactors> twist_stable_chains(const FieldPtr& field,
                                                  unsigned n, unsigned m) {
  if (!field) throw std::invalid_argument("null field");
  if (m == 0) throw std::invalid_argument("scaling order must be positive");
  if (n > 6 || big_pow(BigInt(field->size()), n) > (1 << 22)) {
    throw std::invalid_argument("chain enumeration limited to small n and q");
  }
  std::vector<InvariantFactors> out;
  std::vector<FieldPoly> chain;
  extend_chains(field, m, n, chain, out);
  return out;
}

BigInt count_classes_by_enumeration(const FieldPtr& field, unsigned n, unsigned m) {
  return BigInt(twist_stable_chains(field, n, m).size());
}

}  // namespace qcommute
