#include "oracles.hpp"
#include "rankcode/amrd.hpp"
#include "rankcode/field_matrix.hpp"
#include "rankcode/error.hpp"

#include <doctest.h>

#include <random>

using namespace rankcode;

namespace {

FieldMatrix random_H(const FieldRef& F, unsigned n, std::mt19937_64& rng) {
  while (true) {
    FieldMatrix H(F, 3, n);
    for (unsigned r = 0; r < 3; ++r)
      for (unsigned c = 0; c < n; ++c) H.set(r, c, rng() & F->mask());
    if (field_rank(H) == 3) return H;
  }
}

// Least rank of a nonzero x with x H^T = 0, by enumerating the null space.
unsigned kernel_min_rank(const FieldMatrix& H) {
  LinearRdCode C(null_space(H));
  unsigned lo = ~0u;
  for (const auto& w : C.codewords())
    if (!w.is_zero()) lo = std::min(lo, oracle::rank(w));
  return lo;
}

}  // namespace

TEST_CASE("distinct-subset condition is equivalent to minimum rank >= 3") {
  std::mt19937_64 rng(31);
  unsigned holds = 0, fails = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const unsigned N = 4 + rng() % 2, n = 4 + rng() % (N - 3);
    auto F = FieldContext::make(N);
    auto H = random_H(F, n, rng);
    if (trial % 3 == 0)
      for (unsigned r = 0; r < 3; ++r) H.set(r, 1, F->mul(H(r, 0), 1 + rng() % F->mask()));
    if (field_rank(H) < 3) continue;
    const auto rep = theorem14_condition(H, SubsetMode::kDistinct);
    const unsigned d = kernel_min_rank(H);
    CHECK(rep.holds == (d >= 3));
    if (rep.holds) {
      ++holds;
      auto C = build_amrd_from_H(H);
      CHECK(C.k() == n - 3);
      CHECK(C.min_distance() >= 3);
      CHECK(C.is_amrd());
    } else {
      ++fails;
      auto [P1, P2] = *rep.violating_pair;
      CHECK(P1 != 0);
      CHECK(P2 != 0);
      CHECK(P1 != P2);
      auto x = low_rank_witness(H, P1, P2);
      CHECK_FALSE(x.is_zero());
      CHECK(times_transpose(x, H) == std::vector<std::uint16_t>(3, 0));
      CHECK(oracle::rank(x) <= 2);
      CHECK_THROWS_AS(build_amrd_from_H(H), InvalidArgument);
    }
  }
  CHECK(holds > 0);
  CHECK(fails > 0);
}

TEST_CASE("disjoint-subset condition is weaker than the distinct one") {
  // Pairs of disjoint subsets miss rank-2 codewords whose two coordinate
  // classes cannot be separated, so passing the disjoint test is not enough.
  std::mt19937_64 rng(32);
  unsigned gaps = 0;
  for (int trial = 0; trial < 3000 && gaps < 3; ++trial) {
    auto F = FieldContext::make(4);
    auto H = random_H(F, 4, rng);
    const bool disjoint = theorem14_condition(H, SubsetMode::kDisjoint).holds;
    const bool distinct = theorem14_condition(H, SubsetMode::kDistinct).holds;
    if (distinct) CHECK(disjoint);
    if (disjoint && !distinct) {
      ++gaps;
      CHECK(kernel_min_rank(H) <= 2);
    }
  }
  CHECK(gaps > 0);
}

TEST_CASE("parity-check search and argument checks") {
  std::mt19937_64 rng(33);
  auto F = FieldContext::make(5);
  auto H = search_parity_check(F, 5, rng, 5000);
  REQUIRE(H.has_value());
  CHECK(theorem14_condition(*H).holds);
  CHECK(build_amrd_from_H(*H).min_distance() >= 3);
  CHECK_THROWS_AS(theorem14_condition(FieldMatrix(F, 2, 4)), InvalidArgument);
  CHECK_THROWS_AS(theorem14_condition(FieldMatrix(F, 3, 4)), InvalidArgument);  // rank 0
  CHECK_THROWS_AS(theorem14_condition(FieldMatrix(F, 3, 6)), InvalidArgument);  // n > N
}

TEST_CASE("rank ball versus Hamming ball") {
  const auto b = rank_vs_hamming_counts(4, 1, 4);
  CHECK(b.r == 1);
  CHECK(b.rank_ball == 226);
  CHECK(b.hamming_ball == 61);
  for (unsigned N = 3; N <= 8; ++N)
    for (unsigned n = 3; n <= N; ++n)
      for (unsigned k = 1; k < n; ++k) {
        if ((n - k) % 2 == 0) continue;
        const auto c = rank_vs_hamming_counts(n, k, N);
        CHECK(c.rank_ball >= c.hamming_ball);
        if (c.r >= 1) CHECK(c.rank_ball > c.hamming_ball);
      }
  CHECK_THROWS_AS(rank_vs_hamming_counts(4, 2, 4), InvalidArgument);
}
