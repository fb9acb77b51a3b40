#pragma once

#include <string>

#include "qcommute/bigint.hpp"
#include "qcommute/count_set.hpp"
#include "qcommute/qpoly.hpp"

namespace qcommute {

// |GL_n| over a field with q elements: prod_{i=0}^{n-1} (q^n - q^i).
BigInt gl_order(unsigned n, const BigInt& q);
QPoly gl_order_poly(unsigned n);

// Gaussian binomial [n choose k]_q: number of k-dimensional subspaces of an
// n-dimensional space.
QPoly gaussian_binomial_poly(unsigned n, unsigned k);
BigInt gaussian_binomial(unsigned n, unsigned k, const BigInt& q);

// Number of ordered direct-sum decompositions of an (s+t)-space into an
// s-part and a t-part: |GL_{s+t}| / (|GL_s| * |GL_t|) = q^{s*t} * [s+t, s]_q.
QPoly subspace_pair_poly(unsigned s, unsigned t);
BigInt subspace_pair_count(unsigned s, unsigned t, const BigInt& q);

// Closed-form counts for the families of pairs (A, B) with A*B = zeta*B*A
// over a field with q elements, where m is the multiplicative order of zeta
// (m must divide q - 1 for such a zeta to exist; these formulas take m
// directly and never construct the field):
//
//   count_classes      similarity classes of A fixed by scaling with zeta:
//                      sum over multiplicity vectors (b_1, b_2, ...) with
//                      sum i*b_i = n of q^{sum_i floor(b_i / m)}
//   count_nonsingular  pairs with A invertible: |GL_n| * count_classes
//   count_nilpotent    pairs with A nilpotent (independent of m): sum over
//                      Jordan types lambda of n of class_size(lambda) *
//                      q^{d(lambda)}, where d(lambda) = sum min(i,j) a_i a_j
//                      is the solution-space dimension for that type and
//                      class_size = |GL_n| / |centralizer(lambda)| divides
//                      exactly
//   count_pairs        all pairs: convolution over stable-kernel/stable-image
//                      splits n = s + t of subspace_pair_count(s,t) *
//                      count_nilpotent(s) * count_nonsingular(t)
//
// All four memoize internally and are safe to call concurrently.
BigInt count_classes(unsigned n, unsigned m, const BigInt& q);
BigInt count_nonsingular(unsigned n, unsigned m, const BigInt& q);
BigInt count_nilpotent(unsigned n, const BigInt& q);
BigInt count_pairs(unsigned n, unsigned m, const BigInt& q);

// Uniform entry point (m is ignored for the nilpotent family).
BigInt count_closed_form(CountSet set, unsigned n, unsigned m, const BigInt& q);

enum class CountMethod { closed_form, series, oracle };

constexpr const char* to_token(CountMethod m) {
  switch (m) {
    case CountMethod::closed_form: return "closed";
    case CountMethod::series: return "series";
    case CountMethod::oracle: return "oracle";
  }
  return "?";
}

// One computed count, as reported by the command-line tools.
struct CountReport {
  CountSet set;
  unsigned n;
  BigInt q;
  unsigned m;          // order of the scaling factor
  std::string zeta;    // element literal, empty when only m is relevant
  CountMethod method;
  BigInt value;
};

}  // namespace qcommute
