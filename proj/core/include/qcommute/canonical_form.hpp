#pragma once

#include <string>
#include <vector>

#include "qcommute/fieldpoly.hpp"
#include "qcommute/matrix.hpp"

namespace qcommute {

// The invariant factor chain of a square matrix A: monic nonconstant
// polynomials g_1 | g_2 | ... | g_r with product equal to the
// characteristic polynomial (so degrees sum to n).  Two matrices are
// similar iff their chains coincide.
struct InvariantFactors {
  std::vector<FieldPoly> chain;

  unsigned total_degree() const;
  std::string to_string() const;
};

bool operator==(const InvariantFactors& a, const InvariantFactors& b);

// Computes the chain by diagonalizing t*I - A over the polynomial ring
// (Smith normal form).  Pivot selection is deterministic: the entry of
// minimal degree in the remaining submatrix, ties broken row-major.
InvariantFactors invariant_factors(const FieldMatrix& a);

// det(t*I - A) by cofactor expansion over the polynomial ring; monic of
// degree n.  Intended for cross-checks at small n, not performance.
FieldPoly characteristic_polynomial(const FieldMatrix& a);

bool is_similar(const FieldMatrix& a, const FieldMatrix& b);

// Companion matrix of a monic nonconstant polynomial, and the block-diagonal
// canonical representative of an invariant factor chain.
FieldMatrix companion_matrix(const FieldPoly& g);
FieldMatrix from_invariant_factors(const InvariantFactors& inv);

// Is A similar to zeta*A?  Two independent routes:
//   - by direct similarity of A and zeta*A (chain comparison), and
//   - by twist invariance of each invariant factor of A
//     (every g_i must satisfy g(t) = t^e * G(t^m) for m = ord(zeta)).
// similar_to_scaled runs both and throws InternalError if they ever
// disagree; that agreement is part of the library's contract.
bool similar_to_scaled_by_similarity(const FieldMatrix& a, const FieldElement& zeta);
bool similar_to_scaled_by_form(const FieldMatrix& a, const FieldElement& zeta);
bool similar_to_scaled(const FieldMatrix& a, const FieldElement& zeta);

}  // namespace qcommute
