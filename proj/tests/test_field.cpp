#include "oracles.hpp"
#include "rankcode/field.hpp"
#include "rankcode/error.hpp"

#include <doctest.h>

#include <random>

using namespace rankcode;

TEST_CASE("default moduli are irreducible of the right degree") {
  for (unsigned N = 1; N <= 16; ++N) {
    const auto m = default_modulus(N);
    CHECK((m >> N) == 1u);
    CHECK(is_irreducible_gf2(m));
    CHECK(FieldContext::make(N)->modulus() == m);
  }
  CHECK(default_modulus(8) == 0x11b);
  CHECK(default_modulus(3) == 0xb);
}

TEST_CASE("irreducibility test matches brute-force factor search") {
  for (std::uint32_t p = 2; p < 1024; ++p) {
    const unsigned deg = 31 - __builtin_clz(p);
    bool reducible = false;
    for (std::uint32_t a = 2; a < p && !reducible; ++a) {
      const unsigned da = 31 - __builtin_clz(a);
      if (da == 0 || da >= deg) continue;
      for (std::uint32_t b = 2; b < p; ++b) {
        if ((31 - __builtin_clz(b)) + da != deg) continue;
        if (clmul(a, b) == p) {
          reducible = true;
          break;
        }
      }
    }
    CHECK_MESSAGE(is_irreducible_gf2(p) == (!reducible && deg >= 1), "poly " << p);
  }
}

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS_AS(FieldContext::make(0), InvalidArgument);
  CHECK_THROWS_AS(FieldContext::make(17), InvalidArgument);
  CHECK_THROWS_AS(FieldContext::make(4, 0x15), InvalidArgument);  // x^4+x^2+1 = (x^2+x+1)^2
  CHECK_THROWS_AS(FieldContext::make(4, 0xb), InvalidArgument);   // degree 3
  CHECK_NOTHROW(FieldContext::make(4, 0x19));                     // x^4+x^3+1
}

TEST_CASE("table multiplication agrees with shift-and-add for small fields") {
  for (unsigned N = 1; N <= 8; ++N) {
    auto F = FieldContext::make(N);
    for (std::uint32_t a = 0; a < F->size(); ++a)
      for (std::uint32_t b = 0; b < F->size(); ++b) {
        const auto want = oracle::field_mul(a, b, F->modulus(), N);
        REQUIRE(F->mul(a, b) == want);
        REQUIRE(F->mul_slow(a, b) == want);
      }
  }
}

TEST_CASE("table multiplication agrees with shift-and-add for large fields") {
  std::mt19937_64 rng(7);
  for (unsigned N = 9; N <= 16; ++N) {
    auto F = FieldContext::make(N);
    for (int i = 0; i < 5000; ++i) {
      const std::uint16_t a = rng() & F->mask(), b = rng() & F->mask();
      REQUIRE(F->mul(a, b) == oracle::field_mul(a, b, F->modulus(), N));
    }
  }
}

TEST_CASE("inverse, powers, Frobenius and generator order") {
  for (unsigned N : {1u, 2u, 3u, 5u, 8u, 11u, 16u}) {
    auto F = FieldContext::make(N);
    const std::uint64_t order = F->size() - 1;
    std::mt19937_64 rng(N);
    for (int i = 0; i < 300; ++i) {
      const std::uint16_t a = 1 + rng() % order;
      CHECK(F->mul(a, F->inv(a)) == 1);
      CHECK(F->pow(a, order) == 1);
      CHECK(F->frobenius(a, 1) == F->mul(a, a));
      CHECK(F->frobenius(a, N) == a);
      // Frobenius is additive.
      const std::uint16_t b = rng() & F->mask();
      CHECK(F->frobenius(a ^ b, 2) == (F->frobenius(a, 2) ^ F->frobenius(b, 2)));
    }
    CHECK_THROWS_AS(F->inv(0), InvalidArgument);
    // The generator is primitive: its powers reach 1 only at the full order.
    std::uint64_t k = 1;
    for (std::uint16_t x = F->generator(); x != 1; x = F->mul(x, F->generator())) ++k;
    CHECK(k == order);
  }
}

TEST_CASE("FieldElement arithmetic, hex round trip and context checks") {
  auto F = FieldContext::make(4);
  auto G = FieldContext::make(4, 0x19);
  FieldElement a(F, 0x7), b(F, 0xc);
  CHECK((a + b).bits() == (0x7 ^ 0xc));
  CHECK((a - b) == (a + b));
  CHECK((a * b).bits() == oracle::field_mul(0x7, 0xc, 0x13, 4));
  CHECK((a * a.inverse()).bits() == 1);
  CHECK(FieldElement::from_hex(F, a.to_hex()) == a);
  CHECK(FieldElement::from_hex(F, "0xc") == b);
  CHECK_THROWS_AS(FieldElement(F, 0x10), InvalidArgument);
  CHECK_THROWS_AS(a + FieldElement(G, 1), InvalidArgument);
  CHECK(F->modulus_string() == "x^4+x+1");
  CHECK_THROWS(parse_hex("zz"));
}

TEST_CASE("linear independence over GF(2)") {
  auto F = FieldContext::make(4);
  std::vector<FieldElement> basis{FieldElement(F, 1), FieldElement(F, 2), FieldElement(F, 4), FieldElement(F, 8)};
  CHECK(linearly_independent(basis));
  basis[3] = FieldElement(F, 7);
  CHECK_FALSE(linearly_independent(basis));
}
