// Internal allocation-light routines shared by the matrix layer and the
// brute-force enumerators.  Not installed.
#pragma once

#include <cstdint>
#include <cstring>
#include <vector>

#include "qcommute/field.hpp"

namespace qcommute::detail {

// Row echelon rank of a row-major rows x cols buffer; destroys the buffer.
inline unsigned rank_inplace(const Field& f, std::uint32_t* m, unsigned rows,
                             unsigned cols) {
  unsigned r = 0;
  for (unsigned c = 0; c < cols && r < rows; ++c) {
    unsigned pivot = rows;
    for (unsigned i = r; i < rows; ++i) {
      if (m[std::size_t(i) * cols + c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r) {
      for (unsigned j = c; j < cols; ++j) {
        std::swap(m[std::size_t(pivot) * cols + j], m[std::size_t(r) * cols + j]);
      }
    }
    const std::uint32_t inv = f.inv(m[std::size_t(r) * cols + c]);
    for (unsigned j = c; j < cols; ++j) {
      m[std::size_t(r) * cols + j] = f.mul(m[std::size_t(r) * cols + j], inv);
    }
    for (unsigned i = r + 1; i < rows; ++i) {
      const std::uint32_t factor = m[std::size_t(i) * cols + c];
      if (factor == 0) continue;
      for (unsigned j = c; j < cols; ++j) {
        m[std::size_t(i) * cols + j] =
            f.sub(m[std::size_t(i) * cols + j],
                  f.mul(factor, m[std::size_t(r) * cols + j]));
      }
    }
    ++r;
  }
  return r;
}

// Fills out (n^2 x n^2, row-major) with the operator B -> A*B - zeta*B*A in
// the basis of matrix units, rows indexed by (i,j), columns by (k,l).
inline void twist_operator(const Field& f, const std::uint32_t* a, unsigned n,
                           std::uint32_t zeta, std::uint32_t* out) {
  const unsigned nn = n * n;
  std::memset(out, 0, sizeof(std::uint32_t) * std::size_t(nn) * nn);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      std::uint32_t* row = out + std::size_t(i * n + j) * nn;
      // A*B term: entry (i,j) of A*B pulls B(k,j) with coefficient A(i,k).
      for (unsigned k = 0; k < n; ++k) {
        row[k * n + j] = f.add(row[k * n + j], a[std::size_t(i) * n + k]);
      }
      // -zeta*B*A term: entry (i,j) pulls B(i,l) with coefficient A(l,j).
      for (unsigned l = 0; l < n; ++l) {
        row[i * n + l] =
            f.sub(row[i * n + l], f.mul(zeta, a[std::size_t(l) * n + j]));
      }
    }
  }
}

// C = A*B for square n x n code buffers.
inline void mat_mul(const Field& f, const std::uint32_t* a, const std::uint32_t* b,
                    unsigned n, std::uint32_t* c) {
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      std::uint32_t acc = 0;
      for (unsigned k = 0; k < n; ++k) {
        acc = f.add(acc, f.mul(a[std::size_t(i) * n + k], b[std::size_t(k) * n + j]));
      }
      c[std::size_t(i) * n + j] = acc;
    }
  }
}

// Rank of square A without clobbering it (copies into scratch).
inline unsigned rank_copy(const Field& f, const std::uint32_t* a, unsigned rows,
                          unsigned cols, std::vector<std::uint32_t>& scratch) {
  scratch.assign(a, a + std::size_t(rows) * cols);
  return rank_inplace(f, scratch.data(), rows, cols);
}

// Is A (n x n) nilpotent?  Checks A^n == 0 by repeated multiplication.
inline bool is_nilpotent_codes(const Field& f, const std::uint32_t* a, unsigned n,
                               std::vector<std::uint32_t>& s1,
                               std::vector<std::uint32_t>& s2) {
  const std::size_t nn = std::size_t(n) * n;
  s1.assign(a, a + nn);
  s2.resize(nn);
  // Square up to cover exponent n, then one final comparison with zero.
  unsigned covered = 1;
  while (covered < n) {
    mat_mul(f, s1.data(), s1.data(), n, s2.data());
    s1.swap(s2);
    covered *= 2;
  }
  for (std::size_t i = 0; i < nn; ++i) {
    if (s1[i] != 0) return false;
  }
  return true;
}

}  // namespace qcommute::detail
