#include "oracles.hpp"
#include "rankcode/circulant.hpp"
#include "rankcode/error.hpp"

#include <doctest.h>

#include <random>

using namespace rankcode;

namespace {

unsigned deg(std::uint64_t p) { return 63 - __builtin_clzll(p); }

// Euclid on explicit polynomials.
std::uint64_t slow_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    while (a && deg(a) >= deg(b)) a ^= b << (deg(a) - deg(b));
    std::swap(a, b);
  }
  return a;
}

}  // namespace

TEST_CASE("parsing circulant words") {
  CHECK(CirculantWord::parse(5, "1+x+x^3").poly() == 0b1011);
  CHECK(CirculantWord::parse(5, "0xb").poly() == 0xb);
  CHECK(CirculantWord::parse(5, "b").poly() == 0xb);
  CHECK(CirculantWord::parse(5, "x^4 + 1").poly() == 0b10001);
  CHECK(CirculantWord::parse(4, "x").poly() == 2);
  CHECK_THROWS_AS(CirculantWord::parse(4, "x^4"), InvalidArgument);
  CHECK_THROWS_AS(CirculantWord::parse(4, "1+y"), InvalidArgument);
  CHECK_THROWS_AS(CirculantWord(4, 0x10), InvalidArgument);
  CHECK(CirculantWord(6, 0x2d).to_hex() == "2d");
}

TEST_CASE("circulant matrix columns are cyclic shifts") {
  for (unsigned N = 2; N <= 8; ++N)
    for (std::uint32_t a = 0; a < (1u << N); a += 3) {
      auto M = circulant_matrix(CirculantWord(N, a));
      for (unsigned c = 0; c < N; ++c)
        for (unsigned r = 0; r < N; ++r) CHECK(M.get(r, c) == ((a >> ((r + N - c) % N)) & 1));
    }
}

TEST_CASE("ring product matches the circulant matrix product") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const unsigned N = 2 + rng() % 10;
    CirculantWord a(N, rng() & ((1u << N) - 1)), b(N, rng() & ((1u << N) - 1));
    CHECK(a * b == b * a);
    // (a*b)(x) as a vector equals C(a) applied to b's coefficient vector.
    auto M = circulant_matrix(a);
    std::uint32_t prod = 0;
    for (unsigned r = 0; r < N; ++r) {
      unsigned bit = 0;
      for (unsigned c = 0; c < N; ++c) bit ^= M.get(r, c) & ((b.poly() >> c) & 1);
      prod |= bit << r;
    }
    CHECK((a * b).poly() == prod);
    CHECK(a.shifted() == a * CirculantWord(N, 2));
  }
}

TEST_CASE("norm equals N - deg gcd with x^N + 1") {
  for (unsigned N = 1; N <= 10; ++N) {
    const std::uint64_t mod = (std::uint64_t{1} << N) | 1;
    for (std::uint32_t a = 1; a < (1u << N); ++a) {
      CirculantWord w(N, a);
      CHECK(poly_gcd_gf2(a, mod) == slow_gcd(a, mod));
      CHECK(circulant_norm(w) == N - deg(slow_gcd(a, mod)));
      CHECK(circulant_norm_by_rank(w) == circulant_norm(w));
    }
    CHECK(circulant_norm(CirculantWord(N, 0)) == 0);
    const auto& table = circulant_norm_table(N);
    CHECK(table.size() == (1u << N));
    CHECK(table[1] == N);
  }
  CHECK_THROWS_AS(poly_gcd_gf2(0, 0), InvalidArgument);
}

TEST_CASE("circulant distance is a metric") {
  const unsigned N = 5;
  for (std::uint32_t a = 0; a < 32; ++a)
    for (std::uint32_t b = 0; b < 32; ++b)
      for (std::uint32_t c = 0; c < 32; ++c) {
        CirculantWord x(N, a), y(N, b), z(N, c);
        REQUIRE(circulant_distance(x, z) <= circulant_distance(x, y) + circulant_distance(y, z));
      }
}

TEST_CASE("circulant rank codes") {
  // Ideal generated by a divisor of x^7 + 1 is closed under shifts.
  const unsigned N = 7;
  CirculantWord g(N, 0b1011);  // x^3 + x + 1 divides x^7 + 1
  std::vector<CirculantWord> basis;
  for (unsigned i = 0; i < 4; ++i) {
    basis.push_back(g);
    g = g.shifted();
  }
  CirculantRankCode ideal(N, basis);
  CHECK(ideal.is_cyclic());
  CHECK(ideal.dimension() == 4);
  CHECK(ideal.words().size() == 16);
  const auto dist = ideal.norm_distribution();
  std::uint64_t total = 0;
  for (auto c : dist) total += c;
  CHECK(total == 16);
  // Every nonzero word a*g has gcd with x^7+1 divisible by g, so norm <= 4.
  for (std::size_t s = 5; s < dist.size(); ++s) CHECK(dist[s] == 0);

  CirculantRankCode single(N, {CirculantWord(N, 0b11)});
  CHECK_FALSE(single.is_cyclic());
  CHECK(single.min_distance() == 6);
  CHECK(single.divisor() == 6);
  CHECK(single.is_subcode_of(CirculantRankCode(N, {CirculantWord(N, 0b11), CirculantWord(N, 0b101)})));
  CHECK_FALSE(ideal.is_subcode_of(single));
  CHECK_THROWS_AS(CirculantRankCode(N, {CirculantWord(N, 3), CirculantWord(N, 5), CirculantWord(N, 6)}), InvalidArgument);

  // Brute force: min norm over the span equals min_distance.
  unsigned lo = ~0u;
  for (auto w : ideal.words())
    if (w) lo = std::min(lo, circulant_norm_by_rank(CirculantWord(N, w)));
  CHECK(ideal.min_distance() == lo);
}
