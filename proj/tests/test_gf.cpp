#include "doctest.h"
#include "oracles.hpp"
#include "orthokit/error.hpp"
#include "orthokit/gf.hpp"

using namespace orthokit;

namespace {

// Residue of x modulo a monic polynomial of degree n, as a code.
Code x_residue(const oracle::Field& f) {
  if (f.n > 1) return f.p;
  return (f.p - f.modulus[0]) % f.p;
}

// Multiplicative order of a in the quotient ring, or 0 if it never reaches 1.
std::uint64_t ring_order(const oracle::Field& f, Code a) {
  Code cur = a;
  for (std::uint64_t k = 1; k <= f.q; ++k) {
    if (cur == 1) return k;
    cur = f.mul(cur, a);
  }
  return 0;
}

std::vector<std::uint32_t> least_primitive(std::uint32_t p, std::uint32_t n) {
  oracle::Field f;
  f.p = p;
  f.n = n;
  f.q = 1;
  for (std::uint32_t i = 0; i < n; ++i) f.q *= p;
  for (Code low = 0; low < f.q; ++low) {
    f.modulus = f.digits(low);
    f.modulus.push_back(1);
    if (ring_order(f, x_residue(f)) == f.q - 1) return f.modulus;
  }
  return {};
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields{
    {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {13, 1}};

}  // namespace

TEST_SUITE("gf") {
  TEST_CASE("default modulus is the least primitive polynomial") {
    for (auto [p, n] : kSmallFields) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(FieldDescriptor::create(p, n)->modulus() == least_primitive(p, n));
    }
  }

  TEST_CASE("known moduli") {
    CHECK(FieldDescriptor::create(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(FieldDescriptor::create(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(FieldDescriptor::create(2, 4)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(FieldDescriptor::create(3, 4, std::vector<std::int64_t>{-1, 0, 0, -1, 1})->describe() ==
          "GF(3^4) mod x^4+2x^3+2");
  }

  TEST_CASE("arithmetic agrees with schoolbook polynomials") {
    for (auto [p, n] : kSmallFields) {
      const auto f = FieldDescriptor::create(p, n);
      const auto o = oracle::Field::of(*f);
      for (Code a = 0; a < f->order(); ++a)
        for (Code b = 0; b < f->order(); ++b) {
          REQUIRE(f->add(a, b) == o.add(a, b));
          REQUIRE(f->mul(a, b) == o.mul(a, b));
          REQUIRE(f->sub(a, b) == o.sub(a, b));
        }
    }
  }

  TEST_CASE("field axioms on GF(27) and GF(25)") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 3}, {5, 2}}) {
      const auto f = FieldDescriptor::create(p, n);
      const Code q = f->order();
      for (Code a = 0; a < q; ++a) {
        CHECK(f->add(a, f->neg(a)) == 0);
        if (a) {
          CHECK(f->mul(a, f->inv(a)) == 1);
          CHECK(f->exp(f->log(a)) == a);
          CHECK(f->pow(a, q - 1) == 1);
        }
        for (Code b = 0; b < q; b += 3)
          for (Code c = 0; c < q; c += 5) {
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
          }
      }
    }
  }

  TEST_CASE("frobenius is additive and multiplicative") {
    const auto f = FieldDescriptor::create(2, 5);
    for (Code a = 0; a < 32; ++a)
      for (Code b = 0; b < 32; ++b) {
        CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
        CHECK(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
      }
  }

  TEST_CASE("primitive element is the least code of full order") {
    for (auto [p, n] : kSmallFields) {
      const auto f = FieldDescriptor::create(p, n);
      const auto o = oracle::Field::of(*f);
      Code expect = 0;
      for (Code c = 1; c < o.q && !expect; ++c)
        if (ring_order(o, c) == o.q - 1) expect = c;
      CHECK(f->primitive() == expect);
    }
  }

  TEST_CASE("element wrapper") {
    const auto f = FieldDescriptor::create(3, 2);
    const auto g = FieldDescriptor::create(3, 2);
    const auto h = FieldDescriptor::create(2, 3);
    const FieldElement a(f, 4), b(f, 7);
    CHECK((a * b).code() == f->mul(4, 7));
    CHECK((a / b * b) == a);
    CHECK(field_pow(a, -1) == field_inv(a));
    CHECK(discrete_log(f->z()) == 1);
    CHECK(FieldElement(f, 4) == FieldElement(g, 4));
    CHECK_THROWS_AS((void)(a + FieldElement(h, 1)), Error);
    CHECK_THROWS_AS(field_inv(FieldElement(f, 0)), Error);
  }

  TEST_CASE("precondition errors") {
    auto code_of = [](auto fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::InvalidArgument;
    };
    CHECK(code_of([] { FieldDescriptor::create(4, 1); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { FieldDescriptor::create(2, 2, std::vector<std::int64_t>{1, 0, 1}); }) ==
          ErrorCode::ReducibleModulus);
    CHECK(code_of([] { FieldDescriptor::create(2, 2, std::vector<std::int64_t>{1, 1}); }) == ErrorCode::BadModulus);
    CHECK(code_of([] { field_of_order(6); }) == ErrorCode::NotPrime);
    CHECK(field_of_order(9)->degree() == 2);
  }

  TEST_CASE("prime helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(8191));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  }
}
