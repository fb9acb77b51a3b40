#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcommute/field.hpp"

namespace qcommute {

enum class MatrixKind { nonsingular, nilpotent, mixed };

// Dense matrix over a finite field, entries stored as element codes in
// row-major order.  Rectangular matrices appear only as basis bundles
// (columns spanning a subspace); all spectral operations require square.
class FieldMatrix {
 public:
  FieldMatrix(FieldPtr field, unsigned rows, unsigned cols);  // zero matrix
  FieldMatrix(FieldPtr field, unsigned rows, unsigned cols,
              std::vector<std::uint32_t> entries);

  static FieldMatrix identity(FieldPtr field, unsigned n);
  static FieldMatrix from_rows(FieldPtr field,
                               const std::vector<std::vector<std::uint32_t>>& rows);

  const FieldPtr& field() const { return field_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::uint32_t at(unsigned i, unsigned j) const { return e_[std::size_t(i) * cols_ + j]; }
  void set(unsigned i, unsigned j, std::uint32_t code);
  FieldElement elem(unsigned i, unsigned j) const;
  const std::vector<std::uint32_t>& entries() const { return e_; }

  FieldMatrix transpose() const;
  FieldMatrix scaled(std::uint32_t c) const;
  FieldMatrix pow(unsigned e) const;  // square only; pow(0) = identity

  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

  bool is_zero() const;
  unsigned rank() const;
  unsigned nullity() const { return cols_ - rank(); }
  bool is_nonsingular() const;  // square only
  bool is_nilpotent() const;    // square only
  MatrixKind classify() const;  // square only

  // Columns form the reduced column echelon basis of the right kernel
  // {v : Av = 0}; shape rows = cols(), cols = nullity.
  FieldMatrix kernel_basis() const;
  // Columns form the reduced column echelon basis of the column space;
  // shape rows = rows(), cols = rank.
  FieldMatrix image_basis() const;

  std::string to_string() const;  // "[[1,0],[2,1]]" entry codes

 private:
  FieldPtr field_;
  unsigned rows_, cols_;
  std::vector<std::uint32_t> e_;
};

// Stable kernel and stable image of a square A: kernel and image of A^n.
// These are complementary A-invariant subspaces; A is nilpotent on the
// kernel part and invertible on the image part.
struct FittingDecomposition {
  FieldMatrix stable_kernel;  // n x s column basis
  FieldMatrix stable_image;   // n x (n-s) column basis
};
FittingDecomposition fitting_decompose(const FieldMatrix& a);

// Given square A and an n x s basis U of an A-invariant subspace, returns
// the s x s matrix R of the restricted map in that basis: A*U = U*R.
// Throws std::invalid_argument if the span is not A-invariant or U does not
// have full column rank.
FieldMatrix restrict_to_invariant(const FieldMatrix& a, const FieldMatrix& basis);

// Dimension (over the base field) of {B : A*B = zeta * B*A}, computed as the
// nullity of the n^2 x n^2 operator B -> A*B - zeta*B*A.  The number of such
// B is q^dim.
unsigned twisted_centralizer_dim(const FieldMatrix& a, const FieldElement& zeta);

// Kronecker product (a_ij * B block layout).
FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b);

// Upper-shift nilpotent Jordan block of the given size (ones on the
// superdiagonal).
FieldMatrix jordan_nilpotent(FieldPtr field, unsigned size);

// Block-diagonal nilpotent matrix determined by part multiplicities:
// multiplicities[i-1] = number of parts of size i; the block for size i is
// jordan_nilpotent(i) tensored with an identity of that multiplicity.
FieldMatrix nilpotent_block_matrix(FieldPtr field,
                                   const std::vector<unsigned>& multiplicities);

}  // namespace qcommute
