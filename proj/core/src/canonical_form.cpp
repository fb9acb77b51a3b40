#include "qcommute/canonical_form.hpp"

#include <sstream>
#include <stdexcept>

#include "qcommute/errors.hpp"

namespace qcommute {

unsigned InvariantFactors::total_degree() const {
  unsigned d = 0;
  for (const FieldPoly& g : chain) d += g.degree().value_or(0);
  return d;
}

std::string InvariantFactors::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) os << "; ";
    os << chain[i].to_string();
  }
  os << "]";
  return os.str();
}

bool operator==(const InvariantFactors& a, const InvariantFactors& b) {
  if (a.chain.size() != b.chain.size()) return false;
  for (std::size_t i = 0; i < a.chain.size(); ++i) {
    if (!(a.chain[i] == b.chain[i])) return false;
  }
  return true;
}

namespace {

// Polynomial-entry matrix workspace for the Smith reduction.
struct PolyGrid {
  std::vector<FieldPoly> e;
  unsigned n;

  FieldPoly& at(unsigned i, unsigned j) { return e[std::size_t(i) * n + j]; }
  const FieldPoly& at(unsigned i, unsigned j) const { return e[std::size_t(i) * n + j]; }
};

unsigned poly_deg(const FieldPoly& p) { return p.degree().value_or(0); }

}  // namespace

InvariantFactors invariant_factors(const FieldMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("invariant factors require a square matrix");
  }
  const FieldPtr& f = a.field();
  const unsigned n = a.rows();

  PolyGrid g{{}, n};
  g.e.reserve(std::size_t(n) * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      // Entry of t*I - A.
      std::vector<std::uint32_t> c;
      if (i == j) {
        c = {f->neg(a.at(i, j)), 1};
      } else {
        c = {f->neg(a.at(i, j))};
      }
      g.e.emplace_back(f, std::move(c));
    }
  }

  for (unsigned d = 0; d < n; ++d) {
    for (;;) {
      // Deterministic pivot: minimal degree in the trailing submatrix,
      // ties row-major.
      unsigned pi = n, pj = n;
      unsigned best = ~0u;
      for (unsigned i = d; i < n; ++i) {
        for (unsigned j = d; j < n; ++j) {
          if (g.at(i, j).is_zero()) continue;
          const unsigned deg = poly_deg(g.at(i, j));
          if (deg < best) {
            best = deg;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == n) {
        throw InternalError("characteristic matrix lost full rank during reduction");
      }
      if (pi != d) {
        for (unsigned j = d; j < n; ++j) std::swap(g.at(pi, j), g.at(d, j));
      }
      if (pj != d) {
        for (unsigned i = d; i < n; ++i) std::swap(g.at(i, pj), g.at(i, d));
      }

      const FieldPoly pivot = g.at(d, d);
      bool reduced = true;

      // Clear the pivot column.
      for (unsigned i = d + 1; i < n; ++i) {
        if (g.at(i, d).is_zero()) continue;
        auto [quot, rem] = FieldPoly::divmod(g.at(i, d), pivot);
        for (unsigned j = d; j < n; ++j) {
          g.at(i, j) = g.at(i, j) - quot * g.at(d, j);
        }
        if (!rem.is_zero()) reduced = false;
      }
      if (!reduced) continue;  // a smaller-degree entry appeared; re-pivot

      // Clear the pivot row.
      for (unsigned j = d + 1; j < n; ++j) {
        if (g.at(d, j).is_zero()) continue;
        auto [quot, rem] = FieldPoly::divmod(g.at(d, j), pivot);
        for (unsigned i = d; i < n; ++i) {
          g.at(i, j) = g.at(i, j) - quot * g.at(i, d);
        }
        if (!rem.is_zero()) reduced = false;
      }
      if (!reduced) continue;

      // Row and column are clear.  Enforce divisibility into the rest: if
      // the pivot fails to divide some trailing entry, fold that row in and
      // restart this position.
      bool divides_all = true;
      for (unsigned i = d + 1; i < n && divides_all; ++i) {
        for (unsigned j = d + 1; j < n; ++j) {
          if (!FieldPoly::divmod(g.at(i, j), pivot).second.is_zero()) {
            for (unsigned jj = d; jj < n; ++jj) {
              g.at(d, jj) = g.at(d, jj) + g.at(i, jj);
            }
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
  }

  InvariantFactors out;
  for (unsigned d = 0; d < n; ++d) {
    FieldPoly p = g.at(d, d);
    if (p.is_zero()) throw InternalError("zero diagonal entry in reduced form");
    if (poly_deg(p) == 0) continue;  // unit factor
    out.chain.push_back(p.monic());
  }
  if (out.total_degree() != n) {
    throw InternalError("invariant factor degrees do not sum to the matrix size");
  }
  // Divisibility sanity along the chain.
  for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
    if (!out.chain[i].divides(out.chain[i + 1])) {
      throw InternalError("invariant factor chain violates divisibility");
    }
  }
  return out;
}

FieldPoly characteristic_polynomial(const FieldMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("characteristic polynomial requires a square matrix");
  }
  const FieldPtr& f = a.field();
  const unsigned n = a.rows();
  if (n > 8) {
    throw std::invalid_argument(
        "cofactor characteristic polynomial limited to n <= 8");
  }

  // Entries of t*I - A.
  std::vector<FieldPoly> m;
  m.reserve(std::size_t(n) * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      std::vector<std::uint32_t> c;
      if (i == j) c = {f->neg(a.at(i, j)), 1};
      else c = {f->neg(a.at(i, j))};
      m.emplace_back(f, std::move(c));
    }
  }

  // Recursive cofactor expansion over live column set.
  std::vector<unsigned> cols(n);
  for (unsigned i = 0; i < n; ++i) cols[i] = i;

  struct Expander {
    const std::vector<FieldPoly>& m;
    unsigned n;
    const FieldPtr& f;

    FieldPoly det(unsigned row, std::vector<unsigned>& live) {
      if (live.empty()) return FieldPoly::one(f);
      FieldPoly acc(f);
      for (std::size_t ci = 0; ci < live.size(); ++ci) {
        const unsigned col = live[ci];
        const FieldPoly& entry = m[std::size_t(row) * n + col];
        if (entry.is_zero()) continue;
        std::vector<unsigned> rest;
        rest.reserve(live.size() - 1);
        for (std::size_t k = 0; k < live.size(); ++k) {
          if (k != ci) rest.push_back(live[k]);
        }
        FieldPoly sub = det(row + 1, rest);
        FieldPoly term = entry * sub;
        if (ci % 2 == 0) acc = acc + term;
        else acc = acc - term;
      }
      return acc;
    }
  } expander{m, n, f};

  // Monic by construction when the expansion is correct; returned raw so
  // cross-checks can detect sign errors instead of having them normalized
  // away.
  return expander.det(0, cols);
}

bool is_similar(const FieldMatrix& a, const FieldMatrix& b) {
  if (!same_field(*a.field(), *b.field())) {
    throw std::invalid_argument("matrices over different fields");
  }
  if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square()) {
    throw std::invalid_argument("similarity requires equal-size square matrices");
  }
  return invariant_factors(a) == invariant_factors(b);
}

FieldMatrix companion_matrix(const FieldPoly& g) {
  if (!g.is_monic()) throw std::invalid_argument("companion matrix needs a monic polynomial");
  const unsigned d = *g.degree();
  if (d == 0) throw std::invalid_argument("companion matrix needs degree >= 1");
  const FieldPtr& f = g.field();
  FieldMatrix c(f, d, d);
  for (unsigned i = 0; i + 1 < d; ++i) c.set(i + 1, i, 1);
  for (unsigned i = 0; i < d; ++i) c.set(i, d - 1, f->neg(g.coeff(i)));
  return c;
}

FieldMatrix from_invariant_factors(const InvariantFactors& inv) {
  if (inv.chain.empty()) {
    throw std::invalid_argument("empty invariant factor chain");
  }
  const FieldPtr& f = inv.chain.front().field();
  const unsigned n = inv.total_degree();
  FieldMatrix out(f, n, n);
  unsigned offset = 0;
  for (const FieldPoly& g : inv.chain) {
    const FieldMatrix c = companion_matrix(g);
    for (unsigned i = 0; i < c.rows(); ++i) {
      for (unsigned j = 0; j < c.cols(); ++j) {
        if (c.at(i, j) != 0) out.set(offset + i, offset + j, c.at(i, j));
      }
    }
    offset += c.rows();
  }
  return out;
}

bool similar_to_scaled_by_similarity(const FieldMatrix& a, const FieldElement& zeta) {
  if (zeta.is_zero()) throw std::invalid_argument("scale factor must be nonzero");
  return is_similar(a, a.scaled(zeta.code()));
}

bool similar_to_scaled_by_form(const FieldMatrix& a, const FieldElement& zeta) {
  if (zeta.is_zero()) throw std::invalid_argument("scale factor must be nonzero");
  const unsigned m = multiplicative_order(zeta);
  const InvariantFactors inv = invariant_factors(a);
  for (const FieldPoly& g : inv.chain) {
    if (!is_twist_invariant(g, m)) return false;
  }
  return true;
}

bool similar_to_scaled(const FieldMatrix& a, const FieldElement& zeta) {
  const bool by_sim = similar_to_scaled_by_similarity(a, zeta);
  const bool by_form = similar_to_scaled_by_form(a, zeta);
  if (by_sim != by_form) {
    throw InternalError("scaled-similarity routes disagree on " + a.to_string());
  }
  return by_sim;
}

}  // namespace qcommute
