#include "qcommute/fieldpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qcommute {

namespace {

const FieldPtr& require_same(const FieldPoly& a, const FieldPoly& b) {
  if (!same_field(*a.field(), *b.field())) {
    throw std::invalid_argument("polynomials over different fields");
  }
  return a.field();
}

}  // namespace

FieldPoly::FieldPoly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("null field");
}

FieldPoly::FieldPoly(FieldPtr field, std::vector<std::uint32_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("null field");
  for (std::uint32_t c : coeffs_) {
    if (c >= field_->size()) {
      throw std::invalid_argument("coefficient code out of range");
    }
  }
  normalize();
}

void FieldPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldPoly FieldPoly::one(FieldPtr field) { return FieldPoly(std::move(field), {1}); }

FieldPoly FieldPoly::t(FieldPtr field) { return FieldPoly(std::move(field), {0, 1}); }

FieldPoly FieldPoly::monomial(FieldPtr field, unsigned deg, std::uint32_t coeff) {
  std::vector<std::uint32_t> c(deg + 1, 0);
  c[deg] = coeff;
  return FieldPoly(std::move(field), std::move(c));
}

FieldPoly FieldPoly::constant(FieldPtr field, std::uint32_t coeff) {
  return FieldPoly(std::move(field), {coeff});
}

std::optional<unsigned> FieldPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

std::uint32_t FieldPoly::coeff(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : 0;
}

std::uint32_t FieldPoly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool FieldPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

FieldPoly FieldPoly::monic() const {
  const std::uint32_t lead = leading();
  if (lead == 1) return *this;
  return scaled(field_->inv(lead));
}

FieldPoly FieldPoly::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return FieldPoly(field_, std::move(out));
}

FieldElement FieldPoly::eval(const FieldElement& x) const {
  if (!same_field(*field_, *x.field())) {
    throw std::invalid_argument("evaluation point from a different field");
  }
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = field_->add(field_->mul(acc, x.code()), coeffs_[i]);
  }
  return field_->element(acc);
}

FieldPoly FieldPoly::compose_scaled_arg(const FieldElement& c) const {
  if (!same_field(*field_, *c.field())) {
    throw std::invalid_argument("scale factor from a different field");
  }
  std::vector<std::uint32_t> out(coeffs_.size());
  std::uint32_t cp = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = field_->mul(coeffs_[i], cp);
    cp = field_->mul(cp, c.code());
  }
  return FieldPoly(field_, std::move(out));
}

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
  const FieldPtr& f = require_same(a, b);
  std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f->add(a.coeff(static_cast<unsigned>(i)), b.coeff(static_cast<unsigned>(i)));
  }
  return FieldPoly(f, std::move(out));
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
  const FieldPtr& f = require_same(a, b);
  std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f->sub(a.coeff(static_cast<unsigned>(i)), b.coeff(static_cast<unsigned>(i)));
  }
  return FieldPoly(f, std::move(out));
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  const FieldPtr& f = require_same(a, b);
  if (a.is_zero() || b.is_zero()) return FieldPoly(f);
  std::vector<std::uint32_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f->add(out[i + j], f->mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return FieldPoly(f, std::move(out));
}

bool operator==(const FieldPoly& a, const FieldPoly& b) {
  return same_field(*a.field(), *b.field()) && a.coeffs_ == b.coeffs_;
}

std::pair<FieldPoly, FieldPoly> FieldPoly::divmod(const FieldPoly& num,
                                                  const FieldPoly& den) {
  const FieldPtr& f = require_same(num, den);
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (num.coeffs_.size() < den.coeffs_.size()) return {FieldPoly(f), num};

  std::vector<std::uint32_t> rem = num.coeffs_;
  const std::size_t dd = den.coeffs_.size() - 1;
  const std::uint32_t lead_inv = f->inv(den.coeffs_.back());
  std::vector<std::uint32_t> quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const std::uint32_t c = f->mul(rem[i], lead_inv);
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] = f->sub(rem[i - dd + j], f->mul(c, den.coeffs_[j]));
    }
  }
  return {FieldPoly(f, std::move(quot)), FieldPoly(f, std::move(rem))};
}

FieldPoly FieldPoly::gcd(FieldPoly a, FieldPoly b) {
  require_same(a, b);
  while (!b.is_zero()) {
    FieldPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

bool FieldPoly::divides(const FieldPoly& other) const {
  if (is_zero()) return other.is_zero();
  return divmod(other, *this).second.is_zero();
}

std::string FieldPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool ext = field_->degree() > 1;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = ext ? qcommute::to_string(field_->element(coeffs_[i]))
                        : std::to_string(coeffs_[i]);
    const bool needs_parens = ext && c.find(' ') != std::string::npos;
    if (i == 0) {
      if (needs_parens) os << "(" << c << ")";
      else os << c;
    } else {
      if (coeffs_[i] != 1) {
        if (needs_parens) os << "(" << c << ")*";
        else os << c << "*";
      }
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool is_twist_invariant(const FieldPoly& g, unsigned m) {
  if (m == 0) throw std::invalid_argument("order must be positive");
  if (g.is_zero()) return true;
  if (m == 1) return true;
  const unsigned d = *g.degree();
  for (unsigned j = 0; j < d; ++j) {
    if (g.coeff(j) != 0 && (d - j) % m != 0) return false;
  }
  return true;
}

std::vector<FieldPoly> monic_polys_of_degree(const FieldPtr& field, unsigned deg) {
  if (!field) throw std::invalid_argument("null field");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < deg; ++i) {
    count *= field->size();
    if (count > (1ull << 28)) {
      throw std::invalid_argument("too many monic polynomials to enumerate");
    }
  }
  std::vector<FieldPoly> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> c(deg + 1, 0);
    std::uint64_t v = code;
    for (unsigned i = 0; i < deg; ++i) {
      c[i] = static_cast<std::uint32_t>(v % field->size());
      v /= field->size();
    }
    c[deg] = 1;
    out.emplace_back(field, std::move(c));
  }
  return out;
}

}  // namespace qcommute
