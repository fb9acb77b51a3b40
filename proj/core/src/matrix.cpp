#include "qcommute/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "gf_kernels.hpp"

namespace qcommute {

namespace {

const FieldPtr& require_same(const FieldMatrix& a, const FieldMatrix& b) {
  if (!same_field(*a.field(), *b.field())) {
    throw std::invalid_argument("matrices over different fields");
  }
  return a.field();
}

void require_square(const FieldMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw std::invalid_argument(std::string(op) + " requires a square matrix");
  }
}

// Full reduced row echelon form in place; returns pivot column indices.
std::vector<unsigned> rref_inplace(const Field& f, std::vector<std::uint32_t>& m,
                                   unsigned rows, unsigned cols) {
  std::vector<unsigned> pivots;
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
      for (unsigned j = 0; j < cols; ++j) {
        std::swap(m[std::size_t(pivot) * cols + j], m[std::size_t(r) * cols + j]);
      }
    }
    const std::uint32_t inv = f.inv(m[std::size_t(r) * cols + c]);
    for (unsigned j = 0; j < cols; ++j) {
      m[std::size_t(r) * cols + j] = f.mul(m[std::size_t(r) * cols + j], inv);
    }
    for (unsigned i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint32_t factor = m[std::size_t(i) * cols + c];
      if (factor == 0) continue;
      for (unsigned j = 0; j < cols; ++j) {
        m[std::size_t(i) * cols + j] =
            f.sub(m[std::size_t(i) * cols + j],
                  f.mul(factor, m[std::size_t(r) * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FieldMatrix::FieldMatrix(FieldPtr field, unsigned rows, unsigned cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      e_(std::size_t(rows) * cols, 0) {
  if (!field_) throw std::invalid_argument("null field");
}

FieldMatrix::FieldMatrix(FieldPtr field, unsigned rows, unsigned cols,
                         std::vector<std::uint32_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (!field_) throw std::invalid_argument("null field");
  if (e_.size() != std::size_t(rows) * cols) {
    throw std::invalid_argument("entry count does not match matrix shape");
  }
  for (std::uint32_t c : e_) {
    if (c >= field_->size()) throw std::invalid_argument("entry code out of range");
  }
}

FieldMatrix FieldMatrix::identity(FieldPtr field, unsigned n) {
  FieldMatrix m(std::move(field), n, n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::from_rows(FieldPtr field,
                                   const std::vector<std::vector<std::uint32_t>>& rows) {
  const unsigned r = static_cast<unsigned>(rows.size());
  const unsigned c = r == 0 ? 0 : static_cast<unsigned>(rows[0].size());
  std::vector<std::uint32_t> e;
  e.reserve(std::size_t(r) * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged row lengths");
    e.insert(e.end(), row.begin(), row.end());
  }
  return FieldMatrix(std::move(field), r, c, std::move(e));
}

void FieldMatrix::set(unsigned i, unsigned j, std::uint32_t code) {
  if (i >= rows_ || j >= cols_) throw std::invalid_argument("matrix index out of range");
  if (code >= field_->size()) throw std::invalid_argument("entry code out of range");
  e_[std::size_t(i) * cols_ + j] = code;
}

FieldElement FieldMatrix::elem(unsigned i, unsigned j) const {
  return field_->element(at(i, j));
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix out(field_, cols_, rows_);
  for (unsigned i = 0; i < rows_; ++i) {
    for (unsigned j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  }
  return out;
}

FieldMatrix FieldMatrix::scaled(std::uint32_t c) const {
  FieldMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_->mul(e_[i], c);
  return out;
}

FieldMatrix FieldMatrix::pow(unsigned e) const {
  require_square(*this, "pow");
  FieldMatrix result = identity(field_, rows_);
  FieldMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  const FieldPtr& f = require_same(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch in addition");
  }
  FieldMatrix out(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = f->add(a.e_[i], b.e_[i]);
  return out;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  const FieldPtr& f = require_same(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch in subtraction");
  }
  FieldMatrix out(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = f->sub(a.e_[i], b.e_[i]);
  return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  const FieldPtr& f = require_same(a, b);
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix shape mismatch in multiplication");
  }
  FieldMatrix out(f, a.rows(), b.cols());
  for (unsigned i = 0; i < a.rows(); ++i) {
    for (unsigned k = 0; k < a.cols(); ++k) {
      const std::uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (unsigned j = 0; j < b.cols(); ++j) {
        out.e_[std::size_t(i) * b.cols() + j] =
            f->add(out.e_[std::size_t(i) * b.cols() + j], f->mul(aik, b.at(k, j)));
      }
    }
  }
  return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return same_field(*a.field(), *b.field()) && a.rows() == b.rows() &&
         a.cols() == b.cols() && a.e_ == b.e_;
}

bool FieldMatrix::is_zero() const {
  for (std::uint32_t c : e_) {
    if (c != 0) return false;
  }
  return true;
}

unsigned FieldMatrix::rank() const {
  std::vector<std::uint32_t> scratch = e_;
  return detail::rank_inplace(*field_, scratch.data(), rows_, cols_);
}

bool FieldMatrix::is_nonsingular() const {
  require_square(*this, "nonsingularity");
  return rank() == rows_;
}

bool FieldMatrix::is_nilpotent() const {
  require_square(*this, "nilpotency");
  if (rows_ == 0) return true;
  std::vector<std::uint32_t> s1, s2;
  return detail::is_nilpotent_codes(*field_, e_.data(), rows_, s1, s2);
}

MatrixKind FieldMatrix::classify() const {
  require_square(*this, "classify");
  if (rank() == rows_) return MatrixKind::nonsingular;
  if (is_nilpotent()) return MatrixKind::nilpotent;
  return MatrixKind::mixed;
}

FieldMatrix FieldMatrix::kernel_basis() const {
  std::vector<std::uint32_t> m = e_;
  const std::vector<unsigned> pivots = rref_inplace(*field_, m, rows_, cols_);

  std::vector<bool> is_pivot(cols_, false);
  for (unsigned p : pivots) is_pivot[p] = true;

  const unsigned dim = cols_ - static_cast<unsigned>(pivots.size());
  FieldMatrix basis(field_, cols_, dim);
  unsigned col = 0;
  for (unsigned j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    basis.set(j, col, 1);
    for (unsigned i = 0; i < pivots.size(); ++i) {
      basis.set(pivots[i], col, field_->neg(m[std::size_t(i) * cols_ + j]));
    }
    ++col;
  }
  return basis;
}

FieldMatrix FieldMatrix::image_basis() const {
  // Column space basis = nonzero rows of the transposed RREF.
  FieldMatrix t = transpose();
  std::vector<std::uint32_t> m = t.e_;
  const std::vector<unsigned> pivots = rref_inplace(*field_, m, t.rows_, t.cols_);
  const unsigned rk = static_cast<unsigned>(pivots.size());
  FieldMatrix basis(field_, rows_, rk);
  for (unsigned i = 0; i < rk; ++i) {
    for (unsigned j = 0; j < rows_; ++j) {
      basis.set(j, i, m[std::size_t(i) * t.cols_ + j]);
    }
  }
  return basis;
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (unsigned i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (unsigned j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

FittingDecomposition fitting_decompose(const FieldMatrix& a) {
  require_square(a, "fitting decomposition");
  const FieldMatrix an = a.pow(a.rows());
  return FittingDecomposition{an.kernel_basis(), an.image_basis()};
}

FieldMatrix restrict_to_invariant(const FieldMatrix& a, const FieldMatrix& basis) {
  require_square(a, "restriction");
  if (!same_field(*a.field(), *basis.field())) {
    throw std::invalid_argument("matrix and basis over different fields");
  }
  if (basis.rows() != a.rows()) {
    throw std::invalid_argument("basis row count does not match matrix size");
  }
  const FieldPtr& f = a.field();
  const unsigned n = a.rows();
  const unsigned s = basis.cols();

  const FieldMatrix au = a * basis;
  // Solve basis * R = au column by column via RREF of [basis | au].
  const unsigned cols = 2 * s;
  std::vector<std::uint32_t> aug(std::size_t(n) * cols, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < s; ++j) {
      aug[std::size_t(i) * cols + j] = basis.at(i, j);
      aug[std::size_t(i) * cols + s + j] = au.at(i, j);
    }
  }
  const std::vector<unsigned> pivots = rref_inplace(*f, aug, n, cols);
  unsigned left_pivots = 0;
  for (unsigned p : pivots) {
    if (p < s) ++left_pivots;
    else throw std::invalid_argument("subspace is not invariant under the matrix");
  }
  if (left_pivots != s) {
    throw std::invalid_argument("basis does not have full column rank");
  }
  FieldMatrix r(f, s, s);
  for (unsigned i = 0; i < s; ++i) {
    for (unsigned j = 0; j < s; ++j) {
      r.set(i, j, aug[std::size_t(i) * cols + s + j]);
    }
  }
  return r;
}

unsigned twisted_centralizer_dim(const FieldMatrix& a, const FieldElement& zeta) {
  require_square(a, "twisted centralizer");
  if (!same_field(*a.field(), *zeta.field())) {
    throw std::invalid_argument("scalar from a different field");
  }
  if (zeta.code() == 0) {
    throw std::invalid_argument("twist scalar must be nonzero");
  }
  const unsigned n = a.rows();
  const unsigned nn = n * n;
  if (nn == 0) return 0;
  std::vector<std::uint32_t> op(std::size_t(nn) * nn);
  detail::twist_operator(*a.field(), a.entries().data(), n, zeta.code(), op.data());
  const unsigned rk = detail::rank_inplace(*a.field(), op.data(), nn, nn);
  return nn - rk;
}

FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b) {
  const FieldPtr& f = require_same(a, b);
  FieldMatrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (unsigned i = 0; i < a.rows(); ++i) {
    for (unsigned j = 0; j < a.cols(); ++j) {
      const std::uint32_t aij = a.at(i, j);
      if (aij == 0) continue;
      for (unsigned k = 0; k < b.rows(); ++k) {
        for (unsigned l = 0; l < b.cols(); ++l) {
          out.set(i * b.rows() + k, j * b.cols() + l, f->mul(aij, b.at(k, l)));
        }
      }
    }
  }
  return out;
}

FieldMatrix jordan_nilpotent(FieldPtr field, unsigned size) {
  FieldMatrix j(std::move(field), size, size);
  for (unsigned i = 0; i + 1 < size; ++i) j.set(i, i + 1, 1);
  return j;
}

FieldMatrix nilpotent_block_matrix(FieldPtr field,
                                   const std::vector<unsigned>& multiplicities) {
  unsigned n = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    n += static_cast<unsigned>(i + 1) * multiplicities[i];
  }
  FieldMatrix out(field, n, n);
  unsigned offset = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    const unsigned part = static_cast<unsigned>(i + 1);
    const unsigned mult = multiplicities[i];
    if (mult == 0) continue;
    const FieldMatrix block =
        kronecker(jordan_nilpotent(field, part), FieldMatrix::identity(field, mult));
    for (unsigned r = 0; r < block.rows(); ++r) {
      for (unsigned c = 0; c < block.cols(); ++c) {
        if (block.at(r, c) != 0) out.set(offset + r, offset + c, block.at(r, c));
      }
    }
    offset += part * mult;
  }
  return out;
}

}  // namespace qcommute
