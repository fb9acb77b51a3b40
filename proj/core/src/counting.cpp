#include "qcommute/counting.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "qcommute/errors.hpp"
#include "qcommute/partition.hpp"

namespace qcommute {

BigInt gl_order(unsigned n, const BigInt& q) {
  if (q < 2) throw std::invalid_argument("field size must be at least 2");
  BigInt qn = big_pow(q, n);
  BigInt result = 1;
  BigInt qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    result *= qn - qi;
    qi *= q;
  }
  return result;
}

QPoly gl_order_poly(unsigned n) {
  // q^{n(n-1)/2} * prod_{i=1}^{n} (q^i - 1)
  QPoly result = QPoly::q_power(n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) {
    result = result * (QPoly::q_power(i) - QPoly(BigInt(1)));
  }
  return result;
}

QPoly gaussian_binomial_poly(unsigned n, unsigned k) {
  if (k > n) return QPoly();
  // Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]; row-by-row table.
  std::vector<QPoly> row{QPoly(BigInt(1))};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<QPoly> next(i + 1);
    next[0] = QPoly(BigInt(1));
    next[i] = QPoly(BigInt(1));
    for (unsigned j = 1; j < i; ++j) {
      next[j] = row[j - 1] + QPoly::q_power(j) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

BigInt gaussian_binomial(unsigned n, unsigned k, const BigInt& q) {
  return gaussian_binomial_poly(n, k).eval(q);
}

QPoly subspace_pair_poly(unsigned s, unsigned t) {
  return QPoly::q_power(s * t) * gaussian_binomial_poly(s + t, s);
}

BigInt subspace_pair_count(unsigned s, unsigned t, const BigInt& q) {
  return subspace_pair_poly(s, t).eval(q);
}

namespace {

void require_order(unsigned m) {
  if (m == 0) throw std::invalid_argument("scaling order must be positive");
}

// Shared memo store.  Counts for a given (set, n, m, q) never change, and the
// convolution for pairs re-requests smaller sizes heavily.
struct Memo {
  std::mutex mu;
  std::map<std::tuple<unsigned, unsigned, BigInt>, BigInt> classes;     // (n, m, q)
  std::map<std::tuple<unsigned, BigInt>, BigInt> nilpotent;             // (n, q)
  std::map<std::tuple<unsigned, unsigned, BigInt>, BigInt> pairs;       // (n, m, q)
};

Memo& memo() {
  static Memo m;
  return m;
}

template <typename Key, typename Fn>
BigInt memoized(std::map<Key, BigInt>& cache, const Key& key, const Fn& compute) {
  {
    std::lock_guard<std::mutex> lock(memo().mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  BigInt value = compute();
  std::lock_guard<std::mutex> lock(memo().mu);
  return cache.emplace(key, std::move(value)).first->second;
}

// d(lambda) = sum_{i,j} min(i,j) a_i a_j: the dimension of
// {B : A B = zeta B A} for any nilpotent A of Jordan type lambda (the value
// does not depend on zeta).
unsigned long long solution_dim(const std::vector<unsigned>& mult) {
  unsigned long long d = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    for (std::size_t j = 0; j < mult.size(); ++j) {
      d += static_cast<unsigned long long>(std::min(i, j) + 1) * mult[i] * mult[j];
    }
  }
  return d;
}

BigInt nilpotent_centralizer_order(const std::vector<unsigned>& mult, const BigInt& q) {
  unsigned long long sum_sq = 0;
  for (unsigned a : mult) sum_sq += static_cast<unsigned long long>(a) * a;
  BigInt result = big_pow(q, solution_dim(mult) - sum_sq);
  for (unsigned a : mult) {
    if (a > 0) result *= gl_order(a, q);
  }
  return result;
}

}  // namespace

BigInt count_classes(unsigned n, unsigned m, const BigInt& q) {
  require_order(m);
  if (q < 2) throw std::invalid_argument("field size must be at least 2");
  return memoized(memo().classes, std::make_tuple(n, m, q), [&] {
    BigInt total = 0;
    for_each_partition(n, [&](const Partition& p) {
      unsigned long long e = 0;
      for (unsigned b : p.multiplicities()) e += b / m;
      total += big_pow(q, e);
    });
    return total;
  });
}

BigInt count_nonsingular(unsigned n, unsigned m, const BigInt& q) {
  return gl_order(n, q) * count_classes(n, m, q);
}

BigInt count_nilpotent(unsigned n, const BigInt& q) {
  if (q < 2) throw std::invalid_argument("field size must be at least 2");
  return memoized(memo().nilpotent, std::make_tuple(n, q), [&] {
    const BigInt group = gl_order(n, q);
    BigInt total = 0;
    for_each_partition(n, [&](const Partition& p) {
      const auto& mult = p.multiplicities();
      const BigInt centralizer = nilpotent_centralizer_order(mult, q);
      const BigInt class_size = group / centralizer;
      if (class_size * centralizer != group) {
        throw InternalError("nilpotent class size is not integral");
      }
      total += class_size * big_pow(q, solution_dim(mult));
    });
    return total;
  });
}

BigInt count_pairs(unsigned n, unsigned m, const BigInt& q) {
  require_order(m);
  if (q < 2) throw std::invalid_argument("field size must be at least 2");
  return memoized(memo().pairs, std::make_tuple(n, m, q), [&] {
    BigInt total = 0;
    for (unsigned s = 0; s <= n; ++s) {
      const unsigned t = n - s;
      total += subspace_pair_count(s, t, q) * count_nilpotent(s, q) *
               count_nonsingular(t, m, q);
    }
    return total;
  });
}

BigInt count_closed_form(CountSet set, unsigned n, unsigned m, const BigInt& q) {
  switch (set) {
    case CountSet::pairs: return count_pairs(n, m, q);
    case CountSet::nonsingular: return count_nonsingular(n, m, q);
    case CountSet::nilpotent: return count_nilpotent(n, q);
    case CountSet::classes: return count_classes(n, m, q);
  }
  throw std::invalid_argument("unknown count set");
}

}  // namespace qcommute
