#pragma once

// Exact arithmetic in GF(p^n).
//
// Elements are encoded as integers: the element c_0 + c_1 z + ... + c_{n-1} z^{n-1}
// has code c_0 + c_1 p + ... + c_{n-1} p^{n-1}. Code 0 is zero and code 1 is one.
// Here z denotes the residue class of x modulo the defining polynomial; the
// designated primitive element is stored separately and need not be z.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orthokit {

using Code = std::uint32_t;

class FieldElement;
class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

class FieldDescriptor : public std::enable_shared_from_this<FieldDescriptor> {
 public:
  /// Largest supported field order.
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  /// Builds GF(p^n). `modulus` lists c_0..c_n of a monic degree-n polynomial
  /// (entries are reduced mod p, so -1 is accepted); nullopt selects the
  /// lexicographically least primitive monic polynomial.
  static FieldPtr create(std::uint32_t p, std::uint32_t n,
                         std::optional<std::vector<std::int64_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint32_t order() const noexcept { return order_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Code primitive() const noexcept { return primitive_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::int64_t e) const;
  Code frobenius(Code a) const { return pow(a, p_); }

  /// Discrete logarithm to the base of primitive().
  std::uint32_t log(Code a) const;
  /// primitive()^e for any integer e.
  Code exp(std::int64_t e) const;

  /// Coefficients c_0..c_{n-1} of an element.
  std::vector<std::uint32_t> coeffs(Code a) const;
  Code from_coeffs(std::span<const std::int64_t> c) const;
  Code from_coeffs(std::span<const std::uint32_t> c) const;

  FieldElement element(Code a) const;
  FieldElement z() const;

  /// Structural identity: same p, n, modulus and primitive element.
  bool same_as(const FieldDescriptor& other) const noexcept;

  /// e.g. "GF(3^4) mod x^4+2x^3+2".
  std::string describe() const;

  struct Token {};
  FieldDescriptor(Token, std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);

 private:
  void build_tables();

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  Code primitive_ = 1;
  std::vector<Code> antilog_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> add_table_;  // order^2 entries for small fields
  std::vector<std::uint32_t> digit_weight_;
};

/// A field value that remembers its field. Mixing fields throws MIXED_FIELDS.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, Code code);

  Code code() const noexcept { return code_; }
  const FieldPtr& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return code_ == 0; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(code_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {field_, field_->neg(code_)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Code code_ = 0;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldElement& a);
FieldElement field_inv(const FieldElement& a);
FieldElement field_pow(const FieldElement& a, std::int64_t e);
FieldElement frobenius(const FieldElement& a);
std::uint32_t discrete_log(const FieldElement& a);

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// GF(q) with the default modulus; NOT_PRIME unless q is a prime power.
FieldPtr field_of_order(std::uint32_t q);

/// Polynomial helpers over GF(p); coefficient vectors are low-to-high.
namespace poly {
std::vector<std::uint32_t> trim(std::vector<std::uint32_t> a);
std::vector<std::uint32_t> mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                               std::uint32_t p);
std::vector<std::uint32_t> mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                  const std::vector<std::uint32_t>& m, std::uint32_t p);
bool is_irreducible(const std::vector<std::uint32_t>& m, std::uint32_t p);
}  // namespace poly

}  // namespace orthokit
