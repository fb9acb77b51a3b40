#include "qcommute/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qcommute {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Dense polynomial arithmetic over GF(p) on small coefficient vectors
// (constant term first), used only for modulus search and reduction.
using Digits = std::vector<std::uint32_t>;

Digits poly_mul_mod_p(const Digits& a, const Digits& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return r;
}

void poly_trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a (any degree) modulo monic m, in place.
void poly_reduce(Digits& a, const Digits& m, std::uint64_t p) {
  const std::size_t k = m.size() - 1;  // deg m
  while (a.size() > k) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - k;
    if (lead != 0) {
      for (std::size_t i = 0; i <= k; ++i) {
        std::uint64_t sub = (lead * m[i]) % p;
        std::uint64_t cur = a[shift + i];
        a[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
      }
    }
    a.pop_back();
  }
  poly_trim(a);
}

// Is the monic polynomial m (degree >= 2) irreducible over GF(p)?  Trial
// division by every monic polynomial of degree 1..deg/2 is plenty at the
// sizes this library supports.
bool is_irreducible(const Digits& m, std::uint64_t p) {
  const std::size_t k = m.size() - 1;
  if (m[0] == 0) return false;  // divisible by t
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    // Enumerate monic divisor candidates of degree d by code.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits div(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      div[d] = 1;
      Digits rem = m;
      poly_reduce(rem, div, p);
      if (rem.empty()) return false;
    }
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field::Field(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) q_ *= p;

  if (k_ == 1) {
    modulus_ = {0, 1};  // t
  } else {
    // Scan monic degree-k polynomials in lexicographic order on
    // (c0, c1, ..., c_{k-1}) with the constant term compared first, so the
    // constant coefficient is the most significant digit of the scan index.
    for (std::uint64_t code = 0; code < q_; ++code) {
      Digits m(k_ + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < k_; ++i) {
        m[k_ - 1 - i] = static_cast<std::uint32_t>(c % p_);
        c /= p_;
      }
      m[k_] = 1;
      if (is_irreducible(m, p_)) {
        modulus_ = std::move(m);
        break;
      }
    }
  }

  if (q_ <= kTableCap) {
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t s;
        if (k_ == 1) {
          s = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % p_);
        } else {
          std::uint32_t carrya = a, carryb = b, out = 0, mult = 1;
          for (unsigned i = 0; i < k_; ++i) {
            out += ((carrya % p_ + carryb % p_) % p_) * mult;
            carrya /= static_cast<std::uint32_t>(p_);
            carryb /= static_cast<std::uint32_t>(p_);
            mult *= static_cast<std::uint32_t>(p_);
          }
          s = out;
        }
        add_table_[static_cast<std::size_t>(a) * q_ + b] = s;
        const std::uint32_t m = mul_nocache(a, b);
        mul_table_[static_cast<std::size_t>(a) * q_ + b] = m;
        if (m == 1) inv_table_[a] = b;
      }
    }
  }
}

FieldPtr Field::make(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic must be prime, got " +
                                std::to_string(p));
  }
  if (k < 1) throw std::invalid_argument("field degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxSize) {
      throw std::invalid_argument("field size exceeds supported bound 2^20");
    }
  }
  return FieldPtr(new Field(p, k));
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  if (k_ == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % p_);
  std::uint32_t out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= static_cast<std::uint32_t>(p_);
    b /= static_cast<std::uint32_t>(p_);
    mult *= static_cast<std::uint32_t>(p_);
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (k_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
  std::uint32_t out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint32_t d = a % static_cast<std::uint32_t>(p_);
    out += (d == 0 ? 0 : static_cast<std::uint32_t>(p_) - d) * mult;
    a /= static_cast<std::uint32_t>(p_);
    mult *= static_cast<std::uint32_t>(p_);
  }
  return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const {
  return add(a, neg(b));
}

std::uint32_t Field::mul_nocache(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Digits da = code_to_coeffs(a), db = code_to_coeffs(b);
  Digits prod = poly_mul_mod_p(da, db, p_);
  poly_reduce(prod, modulus_, p_);
  std::uint32_t out = 0, mult = 1;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    out += prod[i] * mult;
    mult *= static_cast<std::uint32_t>(p_);
  }
  return out;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_nocache(a, b);
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("division by zero field element");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1, b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FieldElement Field::element(std::uint32_t code) const {
  if (code >= q_) {
    throw std::invalid_argument("element code " + std::to_string(code) +
                                " out of range for field of size " +
                                std::to_string(q_));
  }
  return FieldElement(shared_from_this(), code);
}

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  return element(coeffs_to_code(coeffs));
}

std::vector<std::uint32_t> Field::code_to_coeffs(std::uint32_t code) const {
  std::vector<std::uint32_t> out(k_);
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = code % static_cast<std::uint32_t>(p_);
    code /= static_cast<std::uint32_t>(p_);
  }
  return out;
}

std::uint32_t Field::coeffs_to_code(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > k_) {
    for (std::size_t i = k_; i < coeffs.size(); ++i) {
      if (coeffs[i] % p_ != 0) {
        throw std::invalid_argument("coefficient vector longer than field degree");
      }
    }
  }
  std::uint32_t out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint32_t c = i < coeffs.size()
                                ? coeffs[i] % static_cast<std::uint32_t>(p_)
                                : 0;
    out += c * mult;
    mult *= static_cast<std::uint32_t>(p_);
  }
  return out;
}

bool same_field(const Field& a, const Field& b) {
  if (&a == &b) return true;
  return a.characteristic() == b.characteristic() && a.degree() == b.degree();
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

const FieldPtr& require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field() || !b.field()) {
    throw std::invalid_argument("arithmetic on detached field element");
  }
  if (!same_field(*a.field(), *b.field())) {
    throw std::invalid_argument("field elements from different fields");
  }
  return a.field();
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, std::uint32_t code)
    : field_(std::move(field)), code_(code) {
  if (!field_) throw std::invalid_argument("null field");
  if (code_ >= field_->size()) {
    throw std::invalid_argument("element code out of range");
  }
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
  if (!field_) throw std::invalid_argument("detached field element");
  return field_->code_to_coeffs(code_);
}

FieldElement FieldElement::operator-() const {
  if (!field_) throw std::invalid_argument("detached field element");
  return FieldElement(field_, field_->neg(code_));
}

FieldElement FieldElement::inverse() const {
  if (!field_) throw std::invalid_argument("detached field element");
  return FieldElement(field_, field_->inv(code_));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (!field_) throw std::invalid_argument("detached field element");
  return FieldElement(field_, field_->pow(code_, e));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = require_same(a, b);
  return FieldElement(f, f->add(a.code(), b.code()));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = require_same(a, b);
  return FieldElement(f, f->sub(a.code(), b.code()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = require_same(a, b);
  return FieldElement(f, f->mul(a.code(), b.code()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = require_same(a, b);
  return FieldElement(f, f->mul(a.code(), f->inv(b.code())));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!a.field() && !b.field()) return true;
  if (!a.field() || !b.field()) return false;
  return same_field(*a.field(), *b.field()) && a.code() == b.code();
}

// ---------------------------------------------------------------------------
// Order utilities

unsigned multiplicative_order(const FieldElement& a) {
  if (!a.field()) throw std::invalid_argument("detached field element");
  if (a.is_zero()) {
    throw std::invalid_argument("zero has no multiplicative order");
  }
  const Field& f = *a.field();
  std::uint32_t x = a.code();
  unsigned ord = 1;
  while (x != 1) {
    x = f.mul(x, a.code());
    ++ord;
  }
  return ord;
}

std::vector<FieldElement> elements_of_order(const FieldPtr& field, unsigned m) {
  if (!field) throw std::invalid_argument("null field");
  std::vector<FieldElement> out;
  if (m == 0 || (field->size() - 1) % m != 0) return out;
  for (std::uint32_t code = 1; code < field->size(); ++code) {
    FieldElement e = field->element(code);
    if (multiplicative_order(e) == m) out.push_back(e);
  }
  return out;
}

std::optional<FieldElement> element_of_order(const FieldPtr& field, unsigned m) {
  auto all = elements_of_order(field, m);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const FieldElement& a) {
  if (!a.field()) return "0";
  const auto cs = a.coeffs();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << cs[i];
    } else {
      if (cs[i] != 1) os << cs[i] << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

FieldElement parse_element(const FieldPtr& field, const std::string& text) {
  if (!field) throw std::invalid_argument("null field");
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty field element literal");

  std::vector<std::uint32_t> coeffs(field->degree(), 0);
  const std::uint64_t p = field->characteristic();

  std::size_t pos = 0;
  bool neg_term = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg_term = s[pos] == '-';
    ++pos;
  }
  while (pos < s.size()) {
    // One term: [number][*][t[^exp]]
    std::uint64_t coeff = 1;
    bool saw_digits = false;
    std::uint64_t value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (value > (1ull << 40)) throw std::invalid_argument("coefficient too large");
      saw_digits = true;
      ++pos;
    }
    if (saw_digits) coeff = value;
    std::size_t exp = 0;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 't')) {
      if (s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 't') {
          throw std::invalid_argument("malformed field element literal: " + text);
        }
      }
      // now s[pos] == 't'
      ++pos;
      exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
          throw std::invalid_argument("malformed exponent in: " + text);
        }
        exp = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          exp = exp * 10 + static_cast<std::size_t>(s[pos] - '0');
          if (exp > 64) throw std::invalid_argument("exponent too large in: " + text);
          ++pos;
        }
      }
    } else if (!saw_digits) {
      throw std::invalid_argument("malformed field element literal: " + text);
    }
    if (exp >= field->degree()) {
      // Reduce t^exp properly only for in-range exponents; larger powers in a
      // literal are almost certainly a typo, so reject them.
      if (coeff % p != 0) {
        throw std::invalid_argument("term degree " + std::to_string(exp) +
                                    " too large for field of degree " +
                                    std::to_string(field->degree()));
      }
    } else {
      std::uint64_t c = coeff % p;
      if (neg_term && c != 0) c = p - c;
      coeffs[exp] = static_cast<std::uint32_t>((coeffs[exp] + c) % p);
    }
    if (pos == s.size()) break;
    if (s[pos] == '+' || s[pos] == '-') {
      neg_term = s[pos] == '-';
      ++pos;
      if (pos == s.size()) {
        throw std::invalid_argument("dangling sign in field element literal");
      }
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, s[pos]) +
                                  "' in field element literal");
    }
  }
  return field->from_coeffs(coeffs);
}

}  // namespace qcommute
