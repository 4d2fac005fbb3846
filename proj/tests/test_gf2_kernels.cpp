#include "oracles.hpp"
#include "rankcode/kernels.hpp"
#include "rankcode/rank_metric.hpp"
#include "rankcode/error.hpp"

#include <doctest.h>

#include <random>

using namespace rankcode;

TEST_CASE("column rank agrees with explicit row elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const unsigned N = 1 + rng() % 16;
    const unsigned n = 1 + rng() % 16;
    auto F = FieldContext::make(N);
    Packed p{};
    for (unsigned j = 0; j < n; ++j) p[j] = rng() & F->mask();
    // Mix in dependent columns so low ranks occur.
    if (n > 2 && trial % 3 == 0) p[n - 1] = p[0] ^ p[1];
    RankVector x(F, n, p);
    const unsigned want = oracle::rank(x);
    REQUIRE(rank_norm(x) == want);
    REQUIRE(gf2_rank(expand(x)) == want);
    REQUIRE(want <= std::min(N, n));
  }
}

TEST_CASE("rank distance is a metric") {
  std::mt19937_64 rng(5);
  auto F = FieldContext::make(5);
  auto rnd = [&] { return oracle::vector_at(F, 4, rng() & ((1u << 20) - 1)); };
  for (int i = 0; i < 2000; ++i) {
    auto x = rnd(), y = rnd(), z = rnd();
    CHECK(rank_distance(x, y) == rank_distance(y, x));
    CHECK(rank_distance(x, z) <= rank_distance(x, y) + rank_distance(y, z));
    CHECK((rank_distance(x, y) == 0) == (x == y));
  }
}

TEST_CASE("scaling by a nonzero field element preserves rank") {
  // Multiplication by a nonzero element is an invertible GF(2)-linear map on each column.
  std::mt19937_64 rng(9);
  auto F = FieldContext::make(6);
  for (int i = 0; i < 500; ++i) {
    auto x = oracle::vector_at(F, 5, rng() & ((std::uint64_t{1} << 30) - 1));
    const std::uint16_t a = 1 + rng() % F->mask();
    CHECK(rank_norm(x.scaled(a)) == rank_norm(x));
  }
}

TEST_CASE("Gf2Matrix basics") {
  Gf2Matrix m(3, 5);
  m.set(0, 4, true);
  m.set(2, 1, true);
  auto t = m.transpose();
  CHECK(t.rows() == 5);
  CHECK(t.get(4, 0));
  CHECK(t.get(1, 2));
  CHECK(t.transpose() == m);
  CHECK(gf2_rank(Gf2Matrix::identity(7)) == 7);
  CHECK(gf2_rank(m) == 2);
}

TEST_CASE("RankVector rejects lengths and out-of-field coordinates") {
  auto F = FieldContext::make(3);
  std::vector<std::uint16_t> ok{1, 2, 3};
  CHECK_NOTHROW(RankVector(F, ok));
  std::vector<std::uint16_t> wide{1, 9};
  CHECK_THROWS_AS(RankVector(F, wide), InvalidArgument);
  std::vector<std::uint16_t> too_long(17, 1);
  CHECK_THROWS_AS(RankVector(FieldContext::make(16), too_long), InvalidArgument);
  CHECK(RankVector(F, ok).to_string() == "1 2 3");
}

TEST_CASE("scalar and AVX2 batch rank kernels agree") {
  if (!kernels::avx2_supported()) {
    MESSAGE("AVX2 not available; only the scalar kernel is exercised");
    return;
  }
  std::mt19937_64 rng(21);
  for (unsigned n = 1; n <= 16; ++n)
    for (unsigned bits = 1; bits <= 16; ++bits) {
      const std::size_t count = 1 + rng() % 77;  // includes partial tail blocks
      std::vector<std::vector<std::uint16_t>> cols(n, std::vector<std::uint16_t>(count));
      const std::uint16_t mask = static_cast<std::uint16_t>((1u << bits) - 1);
      for (auto& c : cols)
        for (auto& w : c) w = rng() & mask;
      // Low-rank rows.
      for (std::size_t i = 0; i < count; i += 3)
        for (unsigned j = 1; j < n; ++j) cols[j][i] = cols[0][i] & static_cast<std::uint16_t>(rng());
      std::vector<const std::uint16_t*> ptrs;
      for (auto& c : cols) ptrs.push_back(c.data());
      std::vector<std::uint16_t> offset(n);
      for (auto& o : offset) o = rng() & mask;
      std::vector<std::uint8_t> a(count), b(count);
      kernels::batch_rank_scalar(ptrs.data(), n, bits, offset.data(), count, a.data());
      kernels::batch_rank_avx2(ptrs.data(), n, bits, offset.data(), count, b.data());
      REQUIRE(a == b);
      for (std::size_t i = 0; i < count; ++i) {
        Packed p{};
        for (unsigned j = 0; j < n; ++j) p[j] = cols[j][i] ^ offset[j];
        REQUIRE(a[i] == rank_of(p, n));
      }
    }
}

TEST_CASE("backend override and word table queries") {
  const auto before = kernels::active_backend();
  kernels::force_backend(kernels::Backend::kScalar);
  CHECK(kernels::active_backend() == kernels::Backend::kScalar);
  kernels::WordTable t(3, 4);
  auto F = FieldContext::make(4);
  for (std::uint64_t i = 0; i < 4096; i += 37) t.push(oracle::vector_at(F, 3, i).packed());
  Packed off{};
  off[0] = 5;
  auto scalar = t.ranks_against(off);
  if (kernels::avx2_supported()) {
    kernels::force_backend(kernels::Backend::kAvx2);
    CHECK(t.ranks_against(off) == scalar);
  }
  unsigned lo = 99;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Packed p = t.get(i);
    for (unsigned j = 0; j < 3; ++j) p[j] ^= off[j];
    lo = std::min(lo, rank_of(p, 3));
  }
  CHECK(t.min_rank_against(off) == lo);
  kernels::force_backend(before);
}
