#include "oracles.hpp"
#include "rankcode/field_matrix.hpp"
#include "rankcode/rank_metric.hpp"
#include "rankcode/error.hpp"

#include <doctest.h>

#include <random>

using namespace rankcode;

TEST_CASE("Gaussian binomials") {
  CHECK(gaussian_binomial(4, 2) == 35);
  CHECK(gaussian_binomial(5, 0) == 1);
  CHECK(gaussian_binomial(5, 5) == 1);
  CHECK(gaussian_binomial(3, 4) == 0);
  CHECK(gaussian_binomial(3, -1) == 0);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
  // Symmetry and q-Pascal.
  for (long n = 1; n <= 10; ++n)
    for (long m = 1; m < n; ++m) {
      CHECK(gaussian_binomial(n, m) == gaussian_binomial(n, n - m));
      CHECK(gaussian_binomial(n, m) == gaussian_binomial(n - 1, m - 1) + pow2(m) * gaussian_binomial(n - 1, m));
    }
}

TEST_CASE("rank-exactly counts match exhaustive enumeration") {
  for (auto [N, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {2, 1}, {5, 2}}) {
    auto F = FieldContext::make(N);
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (const auto& v : oracle::space(F, n)) ++counts[oracle::rank(v)];
    BigInt total = 0;
    for (unsigned i = 0; i <= n; ++i) {
      CHECK_MESSAGE(count_rank_exactly(n, i, N) == counts[i], "N=" << N << " n=" << n << " i=" << i);
      total += count_rank_exactly(n, i, N);
    }
    CHECK(total == pow2(N * n));
    CHECK(count_rank_exactly(n, n + 1, N) == 0);
    CHECK(sphere_volume(n, n, N) == pow2(N * n));
  }
}

TEST_CASE("counting identities at larger parameters") {
  for (unsigned N = 2; N <= 12; ++N)
    for (unsigned n = 1; n <= N; ++n) {
      BigInt total = 0;
      for (unsigned i = 0; i <= n; ++i) total += count_rank_exactly(n, i, N);
      CHECK(total == pow2(N * n));
      // Rank-1 vectors: a nonzero column space of dimension 1 times a nonzero row pattern.
      CHECK(count_rank_exactly(n, 1, N) == (pow2(N) - 1) * (pow2(n) - 1));
    }
}

TEST_CASE("Hamming ball counts") {
  CHECK(hamming_ball_count(4, 1, 4) == 61);
  CHECK(hamming_ball_count(4, 0, 4) == 1);
  CHECK(hamming_ball_count(3, 3, 2) == 64);
  CHECK(sphere_volume(4, 1, 4) == 226);
  CHECK(binomial(BigInt(10), 3) == 120);
  CHECK(binomial(BigInt(3), 5) == 0);
}

TEST_CASE("field matrices: echelon form, rank and null space") {
  std::mt19937_64 rng(3);
  auto F = FieldContext::make(5);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned r = 1 + rng() % 4, c = 1 + rng() % 6;
    FieldMatrix M(F, r, c);
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < c; ++j) M.set(i, j, rng() & F->mask());
    if (r > 1 && trial % 2) {
      // Make the last row a combination of the others.
      const std::uint16_t a = rng() & F->mask();
      for (unsigned j = 0; j < c; ++j) M.set(r - 1, j, F->mul(a, M(0, j)));
    }
    const auto e = row_reduce(M);
    const unsigned rank = field_rank(M);
    CHECK(e.reduced.rows() == rank);
    CHECK(e.pivots.size() == rank);
    for (unsigned i = 0; i < rank; ++i) CHECK(e.reduced(i, e.pivots[i]) == 1);
    const auto K = null_space(M);
    CHECK(K.rows() == c - rank);
    if (K.rows()) {
      CHECK((M * K.transpose()).is_zero());
      CHECK(field_rank(K) == K.rows());
    }
  }
}

TEST_CASE("field matrix product is associative and the identity is neutral") {
  std::mt19937_64 rng(4);
  auto F = FieldContext::make(4);
  auto rnd = [&](unsigned r, unsigned c) {
    FieldMatrix M(F, r, c);
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < c; ++j) M.set(i, j, rng() & F->mask());
    return M;
  };
  for (int i = 0; i < 50; ++i) {
    auto A = rnd(2, 3), B = rnd(3, 4), C = rnd(4, 2);
    CHECK((A * B) * C == A * (B * C));
    CHECK(A * FieldMatrix::identity(F, 3) == A);
    CHECK(A.transpose().transpose() == A);
  }
  CHECK_THROWS_AS(rnd(2, 3) * rnd(2, 3), InvalidArgument);
}
