#include "orthokit/gf.hpp"

#include <algorithm>
#include <sstream>

#include "orthokit/error.hpp"

namespace orthokit {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

FieldPtr field_of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    std::uint32_t n = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++n;
    }
    if (r != 1) break;
    return FieldDescriptor::create(p, n);
  }
  throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
}

namespace poly {

std::vector<std::uint32_t> trim(std::vector<std::uint32_t> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

static std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                               std::uint32_t p) {
  a = trim(std::move(a));
  const auto mt = trim(m);
  const std::size_t dm = mt.size() - 1;
  const std::uint32_t lead_inv = inv_mod(mt.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = factor * mt[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    a = trim(std::move(a));
  }
  return a;
}

std::vector<std::uint32_t> mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                  const std::vector<std::uint32_t>& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return mod(std::move(r), m, p);
}

static std::vector<std::uint32_t> powmod(std::vector<std::uint32_t> base, std::uint64_t e,
                                         const std::vector<std::uint32_t>& m, std::uint32_t p) {
  std::vector<std::uint32_t> r{1};
  base = mod(std::move(base), m, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mulmod(r, base, m, p);
    base = mulmod(base, base, m, p);
  }
  return trim(std::move(r));
}

static std::vector<std::uint32_t> digits(std::uint64_t code, std::uint32_t p, std::size_t n) {
  std::vector<std::uint32_t> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return d;
}

bool is_irreducible(const std::vector<std::uint32_t>& m, std::uint32_t p) {
  const auto mt = trim(m);
  if (mt.size() < 2) return false;
  const std::size_t n = mt.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      auto divisor = digits(code, p, d);
      divisor.push_back(1);
      if (mod(mt, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly

namespace {

bool has_full_order(const std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& m, std::uint32_t p,
                    std::uint64_t group_order) {
  if (poly::trim(g).empty()) return false;
  if (poly::powmod(g, group_order, m, p) != std::vector<std::uint32_t>{1}) return false;
  for (auto l : prime_factors(group_order))
    if (poly::powmod(g, group_order / l, m, p) == std::vector<std::uint32_t>{1}) return false;
  return true;
}

}  // namespace

FieldPtr FieldDescriptor::create(std::uint32_t p, std::uint32_t n,
                                 std::optional<std::vector<std::int64_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::BadModulus, "extension degree must be at least 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    order *= p;
    if (order > kMaxOrder) throw Error(ErrorCode::TooLarge, "field order exceeds supported maximum");
  }

  std::vector<std::uint32_t> m;
  if (modulus) {
    if (modulus->size() != n + 1)
      throw Error(ErrorCode::BadModulus, "modulus must have degree " + std::to_string(n));
    for (auto c : *modulus) {
      const std::int64_t r = ((c % static_cast<std::int64_t>(p)) + p) % p;
      m.push_back(static_cast<std::uint32_t>(r));
    }
    if (m.back() != 1) throw Error(ErrorCode::BadModulus, "modulus must be monic");
    if (!poly::is_irreducible(m, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(p)");
  } else {
    const std::vector<std::uint32_t> x{0, 1};
    for (std::uint64_t code = 0; code < order; ++code) {
      auto cand = poly::digits(code, p, n);
      cand.push_back(1);
      if (!poly::is_irreducible(cand, p)) continue;
      if (!has_full_order(poly::mod(x, cand, p), cand, p, order - 1)) continue;
      m = std::move(cand);
      break;
    }
  }
  auto field = std::make_shared<FieldDescriptor>(Token{}, p, n, std::move(m));
  field->build_tables();
  return field;
}

FieldDescriptor::FieldDescriptor(Token, std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), order_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < n; ++i) {
    digit_weight_.push_back(order_);
    order_ *= p;
  }
}

void FieldDescriptor::build_tables() {
  // Smallest code of full multiplicative order.
  const std::uint64_t group = order_ - 1;
  for (Code c = 1; c < order_; ++c) {
    if (has_full_order(poly::digits(c, p_, n_), modulus_, p_, group)) {
      primitive_ = c;
      break;
    }
  }
  const auto g = poly::digits(primitive_, p_, n_);
  antilog_.assign(group, 0);
  log_.assign(order_, 0);
  std::vector<std::uint32_t> cur{1};
  for (std::uint64_t i = 0; i < group; ++i) {
    Code code = 0;
    for (std::size_t j = 0; j < cur.size(); ++j) code += cur[j] * digit_weight_[j];
    antilog_[i] = code;
    log_[code] = static_cast<std::uint32_t>(i);
    cur = poly::mulmod(cur, g, modulus_, p_);
  }
  if (order_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(order_) * order_);
    for (Code a = 0; a < order_; ++a)
      for (Code b = 0; b < order_; ++b) {
        Code r = 0, x = a, y = b;
        for (std::uint32_t i = 0; i < n_; ++i) {
          r += ((x % p_ + y % p_) % p_) * digit_weight_[i];
          x /= p_;
          y /= p_;
        }
        add_table_[a * order_ + b] = static_cast<std::uint16_t>(r);
      }
  }
}

Code FieldDescriptor::add(Code a, Code b) const {
  if (!add_table_.empty()) return add_table_[a * order_ + b];
  if (p_ == 2) return a ^ b;
  Code r = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * digit_weight_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Code FieldDescriptor::neg(Code a) const {
  if (p_ == 2) return a;
  Code r = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    r += ((p_ - a % p_) % p_) * digit_weight_[i];
    a /= p_;
  }
  return r;
}

Code FieldDescriptor::sub(Code a, Code b) const { return add(a, neg(b)); }

Code FieldDescriptor::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t s = log_[a] + log_[b];
  const std::uint32_t group = order_ - 1;
  return antilog_[s >= group ? s - group : s];
}

Code FieldDescriptor::inv(Code a) const {
  if (a == 0) throw Error(ErrorCode::DivideByZero, "inverse of zero");
  const std::uint32_t group = order_ - 1;
  return antilog_[(group - log_[a]) % group];
}

Code FieldDescriptor::pow(Code a, std::int64_t e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw Error(ErrorCode::DivideByZero, "negative power of zero");
  }
  const std::int64_t group = order_ - 1;
  const std::int64_t em = ((e % group) + group) % group;
  return antilog_[(static_cast<std::int64_t>(log_[a]) * em) % group];
}

std::uint32_t FieldDescriptor::log(Code a) const {
  if (a == 0) throw Error(ErrorCode::LogOfZero, "logarithm of zero");
  return log_[a];
}

Code FieldDescriptor::exp(std::int64_t e) const {
  const std::int64_t group = order_ - 1;
  return antilog_[((e % group) + group) % group];
}

std::vector<std::uint32_t> FieldDescriptor::coeffs(Code a) const { return poly::digits(a, p_, n_); }

Code FieldDescriptor::from_coeffs(std::span<const std::int64_t> c) const {
  if (c.size() > n_) throw Error(ErrorCode::InvalidArgument, "too many coefficients");
  Code r = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    r += static_cast<Code>(((c[i] % static_cast<std::int64_t>(p_)) + p_) % p_) * digit_weight_[i];
  return r;
}

Code FieldDescriptor::from_coeffs(std::span<const std::uint32_t> c) const {
  std::vector<std::int64_t> tmp(c.begin(), c.end());
  return from_coeffs(std::span<const std::int64_t>(tmp));
}

FieldElement FieldDescriptor::element(Code a) const {
  if (a >= order_) throw Error(ErrorCode::InvalidArgument, "element code out of range");
  return {shared_from_this(), a};
}

FieldElement FieldDescriptor::z() const { return element(primitive_); }

bool FieldDescriptor::same_as(const FieldDescriptor& other) const noexcept {
  return this == &other || (p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_ &&
                            primitive_ == other.primitive_);
}

std::string FieldDescriptor::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (n_ > 1) os << '^' << n_;
  os << ") mod ";
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const auto c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {}

static const FieldPtr& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field() || !b.field() || !a.field()->same_as(*b.field()))
    throw Error(ErrorCode::MixedFields, "operands belong to different fields");
  return a.field();
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->add(a.code(), b.code())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->sub(a.code(), b.code())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->mul(a.code(), b.code())};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->div(a.code(), b.code())};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  common_field(a, b);
  return a.code() == b.code();
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement field_neg(const FieldElement& a) { return -a; }
FieldElement field_inv(const FieldElement& a) { return {a.field(), a.field()->inv(a.code())}; }
FieldElement field_pow(const FieldElement& a, std::int64_t e) { return {a.field(), a.field()->pow(a.code(), e)}; }
FieldElement frobenius(const FieldElement& a) { return {a.field(), a.field()->frobenius(a.code())}; }
std::uint32_t discrete_log(const FieldElement& a) { return a.field()->log(a.code()); }

// ---------------------------------------------------------------------------

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NOT_PRIME";
    case ErrorCode::ReducibleModulus: return "REDUCIBLE_MODULUS";
    case ErrorCode::BadModulus: return "BAD_MODULUS";
    case ErrorCode::DivideByZero: return "DIVIDE_BY_ZERO";
    case ErrorCode::MixedFields: return "MIXED_FIELDS";
    case ErrorCode::LogOfZero: return "LOG_OF_ZERO";
    case ErrorCode::EqualPoints: return "EQUAL_POINTS";
    case ErrorCode::EmptySet: return "EMPTY_SET";
    case ErrorCode::BadDimension: return "BAD_DIMENSION";
    case ErrorCode::GeometryMismatch: return "GEOMETRY_MISMATCH";
    case ErrorCode::OddDimension: return "ODD_DIMENSION";
    case ErrorCode::NotCoprime: return "NOT_COPRIME";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::UnknownName: return "UNKNOWN_NAME";
    case ErrorCode::KPlus1NotPrime: return "KPLUS1_NOT_PRIME";
    case ErrorCode::AffineQ2Undefined: return "AFFINE_Q2_UNDEFINED";
    case ErrorCode::UnverifiedCertificate: return "UNVERIFIED_CERTIFICATE";
    case ErrorCode::NotPermutation: return "NOT_PERMUTATION";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::MalformedBundle: return "MALFORMED_BUNDLE";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace orthokit
