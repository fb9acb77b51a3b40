#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qcommute {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// One element of a finite field, identified by its integer code.  For
// GF(p^k) with elements written as polynomials c0 + c1*t + ... + c_{k-1}*t^{k-1}
// over GF(p), the code is sum(c_i * p^i).  Codes 0 and 1 are always the
// additive and multiplicative identities.
class FieldElement {
 public:
  FieldElement() = default;  // detached zero; usable only for reassignment
  FieldElement(FieldPtr field, std::uint32_t code);

  const FieldPtr& field() const { return field_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  // Coefficients of the polynomial representative, constant term first,
  // always exactly k entries.
  std::vector<std::uint32_t> coeffs() const;

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  std::uint32_t code_ = 0;
};

// Immutable finite field GF(p^k).  Construction picks the modulus
// deterministically: the lexicographically smallest monic irreducible of
// degree k over GF(p), comparing coefficients from the constant term upward
// (for k = 1 the modulus is just t, i.e. the prime field).  Two Field
// instances with the same (p, k) are therefore interchangeable.
//
// All arithmetic is exposed twice: on raw codes (hot paths, no allocation)
// and on FieldElement values (convenient, field-checked).
class Field : public std::enable_shared_from_this<Field> {
 public:
  // Largest supported field size.  Codes must stay comfortably inside
  // uint32_t and modulus search must stay trivial.
  static constexpr std::uint64_t kMaxSize = 1u << 20;
  // Fields up to this size get dense multiplication/addition tables.
  static constexpr std::uint64_t kTableCap = 256;

  // p must be prime, k >= 1, p^k <= kMaxSize; throws std::invalid_argument
  // otherwise.
  static FieldPtr make(std::uint64_t p, unsigned k = 1);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t size() const { return q_; }

  // Modulus coefficients, constant term first, k+1 entries, leading 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // ---- code-level arithmetic ----
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws on a == 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // ---- element factories ----
  FieldElement element(std::uint32_t code) const;
  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;

  std::vector<std::uint32_t> code_to_coeffs(std::uint32_t code) const;
  std::uint32_t coeffs_to_code(const std::vector<std::uint32_t>& coeffs) const;

 private:
  Field(std::uint64_t p, unsigned k);

  std::uint32_t mul_nocache(std::uint32_t a, std::uint32_t b) const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  // Dense tables, only for q <= kTableCap.
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> inv_table_;
};

// True iff the two elements live in the same field (same p and k; the
// modulus is determined by those).  Mixed-field arithmetic throws.
bool same_field(const Field& a, const Field& b);

// Order of a in the multiplicative group; throws std::invalid_argument on 0.
unsigned multiplicative_order(const FieldElement& a);

// All elements of exact multiplicative order m, sorted by code.  Empty iff
// m does not divide q - 1.
std::vector<FieldElement> elements_of_order(const FieldPtr& field, unsigned m);

// Smallest-code element of exact order m, if any.
std::optional<FieldElement> element_of_order(const FieldPtr& field, unsigned m);

// Renders an element as a polynomial in t over GF(p): "0", "1", "t",
// "2 + t^2", ...  parse_element accepts the same syntax (whitespace
// optional, terms in any order, coefficients reduced mod p).
std::string to_string(const FieldElement& a);
FieldElement parse_element(const FieldPtr& field, const std::string& text);

}  // namespace qcommute
