#include "qcommute/qpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "qcommute/errors.hpp"

namespace qcommute {

namespace {

const BigInt kZero = 0;

BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

QPoly::QPoly(BigInt constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

QPoly::QPoly(long constant) : QPoly(BigInt(constant)) {}

QPoly::QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::variable() { return q_power(1); }

QPoly QPoly::q_power(unsigned e, BigInt coeff) {
  if (coeff == 0) return QPoly();
  std::vector<BigInt> c(e + 1, BigInt(0));
  c[e] = std::move(coeff);
  return QPoly(std::move(c));
}

std::optional<unsigned> QPoly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<unsigned>(c_.size() - 1);
}

const BigInt& QPoly::coeff(unsigned i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const BigInt& QPoly::leading() const {
  if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return c_.back();
}

BigInt QPoly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * q + c_[i];
  }
  return acc;
}

BigRat QPoly::eval(const BigRat& q) const {
  BigRat acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * q + BigRat(c_[i]);
  }
  return acc;
}

QPoly QPoly::operator-() const {
  std::vector<BigInt> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return QPoly(std::move(out));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(static_cast<unsigned>(i)) + b.coeff(static_cast<unsigned>(i));
  }
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(static_cast<unsigned>(i)) - b.coeff(static_cast<unsigned>(i));
  }
  return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return QPoly(std::move(out));
}

bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

QPoly QPoly::scaled(const BigInt& c) const {
  if (c == 0) return QPoly();
  std::vector<BigInt> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * c;
  return QPoly(std::move(out));
}

BigInt QPoly::content() const {
  BigInt g = 0;
  for (const BigInt& c : c_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (num.is_zero()) return QPoly();
  if (num.c_.size() < den.c_.size()) return std::nullopt;

  std::vector<BigInt> rem = num.c_;
  const std::size_t dd = den.c_.size() - 1;
  const BigInt& lead = den.c_.back();
  std::vector<BigInt> quot(rem.size() - dd, BigInt(0));
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0) return std::nullopt;
    BigInt qc = rem[i] / lead;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] -= qc * den.c_[j];
    }
    quot[i - dd] = std::move(qc);
  }
  for (const BigInt& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return QPoly(std::move(quot));
}

namespace {

// Pseudo-remainder: lead(d)^k * a mod d computed without rationals.
QPoly pseudo_rem(QPoly a, const QPoly& d) {
  const unsigned dd = *d.degree();
  const BigInt& lead = d.leading();
  while (!a.is_zero() && *a.degree() >= dd) {
    const unsigned shift = *a.degree() - dd;
    const BigInt top = a.leading();
    a = a.scaled(lead) - (QPoly::q_power(shift, top) * d);
  }
  return a;
}

QPoly primitive_part(const QPoly& a) {
  if (a.is_zero()) return a;
  BigInt c = a.content();
  if (a.leading() < 0) c = -c;
  auto q = QPoly::divide_exact(a, QPoly(c));
  if (!q) throw InternalError("content division failed");
  return *q;
}

}  // namespace

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  QPoly x = primitive_part(a);
  QPoly y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (*x.degree() < *y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    QPoly r = primitive_part(pseudo_rem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    const bool negative = c_[i] < 0;
    BigInt mag = negative ? BigInt(-c_[i]) : c_[i];
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// QRat

QRat::QRat(QPoly num) : num_(std::move(num)), den_(BigInt(1)) {}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

void QRat::reduce() {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly(BigInt(1));
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (!g.is_one()) {
    auto n = QPoly::divide_exact(num_, g);
    auto d = QPoly::divide_exact(den_, g);
    if (!n || !d) throw InternalError("gcd does not divide its arguments");
    num_ = std::move(*n);
    den_ = std::move(*d);
  }
  BigInt c = int_gcd(num_.content(), den_.content());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    auto n = QPoly::divide_exact(num_, QPoly(c));
    auto d = QPoly::divide_exact(den_, QPoly(c));
    if (!n || !d) throw InternalError("content does not divide its polynomial");
    num_ = std::move(*n);
    den_ = std::move(*d);
  }
}

std::optional<QPoly> QRat::as_polynomial() const {
  if (den_.is_one()) return num_;
  return std::nullopt;
}

BigRat QRat::eval(const BigRat& q) const {
  const BigRat d = den_.eval(q);
  if (d == 0) throw std::invalid_argument("rational function has a pole at the evaluation point");
  return num_.eval(q) / d;
}

QRat QRat::operator-() const {
  QRat out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

QRat operator+(const QRat& a, const QRat& b) {
  return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) {
  return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) {
  return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero rational function");
  return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const QRat& a, const QRat& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string QRat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const QPoly& p) {
    std::size_t terms = 0;
    for (const BigInt& c : p.coeffs()) {
      if (c != 0) ++terms;
    }
    const std::string s = p.to_string();
    return terms > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + " / " + wrap(den_);
}

}  // namespace qcommute
