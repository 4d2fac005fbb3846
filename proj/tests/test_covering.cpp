#include "oracles.hpp"
#include "rankcode/covering.hpp"
#include "rankcode/mrd.hpp"
#include "rankcode/rank_metric.hpp"
#include "rankcode/error.hpp"

#include <doctest.h>

#include <random>

using namespace rankcode;

TEST_CASE("cov of a point set") {
  auto F = FieldContext::make(3);
  auto x = oracle::vector_at(F, 2, 0x0b);
  std::vector<RankVector> S{oracle::vector_at(F, 2, 0x0b), oracle::vector_at(F, 2, 0x3f), oracle::vector_at(F, 2, 0x08)};
  unsigned far = 0;
  for (const auto& s : S) far = std::max(far, oracle::rank(x + s));
  CHECK(cov(x, S) == far);
  std::vector<RankVector> C{oracle::vector_at(F, 2, 0), x};
  CHECK(cov_code(C, S) == std::min(cov(C[0], S), cov(C[1], S)));
}

TEST_CASE("coset and generic covering radius agree with the definition") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned N = 2 + rng() % 2, n = 1 + rng() % N, k = 1 + rng() % n;
    auto F = FieldContext::make(N);
    auto C = random_linear_code(F, n, k, rng);
    const auto pts = oracle::space(F, n);
    const unsigned want = oracle::t_m(pts, C.codewords(), 1);
    CHECK(covering_radius(C) == want);
    CHECK(covering_radius(CoveringSpace::of(C)) == want);
    CHECK(want <= n - k);
  }
}

TEST_CASE("exact multi-covering radius matches m-set enumeration") {
  std::mt19937_64 rng(42);
  for (auto [N, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    auto F = FieldContext::make(N);
    const auto pts = oracle::space(F, n);
    for (unsigned k = 1; k <= n; ++k) {
      auto C = random_linear_code(F, n, k, rng);
      auto space = CoveringSpace::of(C);
      for (unsigned m = 1; m <= 3; ++m) {
        if (m == 3 && pts.size() > 16) continue;  // keep the oracle quick
        const auto rep = multi_covering_exact(space, m);
        CHECK_MESSAGE(rep.t == oracle::t_m(pts, C.codewords(), m), "N=" << N << " n=" << n << " k=" << k << " m=" << m);
        CHECK(rep.exact);
        // The witness is m distinct points that really need t.
        REQUIRE(rep.witness.size() == m);
        std::vector<RankVector> S;
        for (auto p : rep.witness) S.push_back(space.to_vector(p));
        CHECK(cov_code(C.codewords(), S) == rep.t);
        const auto sampled = multi_covering_sampled(space, m, 200, 7);
        CHECK_FALSE(sampled.exact);
        CHECK(sampled.t <= rep.t);
      }
    }
  }
}

TEST_CASE("multi-covering on nonlinear and circulant codes") {
  auto F = FieldContext::make(2);
  std::vector<RankVector> code{oracle::vector_at(F, 2, 0), oracle::vector_at(F, 2, 5), oracle::vector_at(F, 2, 10)};
  const auto pts = oracle::space(F, 2);
  auto space = CoveringSpace::of(code);
  for (unsigned m = 1; m <= 3; ++m) CHECK(multi_covering_exact(space, m).t == oracle::t_m(pts, code, m));

  CirculantRankCode circ(5, {CirculantWord(5, 0b11)});
  auto cs = CoveringSpace::of(circ);
  CHECK(cs.space_size() == 32);
  CHECK(cs.code_size() == 2);
  // t(C) straight from norms: every word is within the smaller distance to 0 or 1+x.
  unsigned t = 0;
  for (std::uint32_t a = 0; a < 32; ++a)
    t = std::max(t, std::min(circulant_norm(CirculantWord(5, a)), circulant_norm(CirculantWord(5, a ^ 3))));
  CHECK(covering_radius(circ) == t);
}

TEST_CASE("sphere-covering lower bound and repetition upper bound") {
  // m = 1: ceil(2^{Nn} / V(n,t)).
  auto b = sphere_bound_min_K(3, 1, 1, 3);
  REQUIRE(b.has_value());
  const BigInt V = sphere_volume(3, 1, 3);
  CHECK(*b == (pow2(9) + V - 1) / V);
  CHECK(*sphere_bound_min_K(2, 2, 1, 2) == 1);
  CHECK(*sphere_bound_min_K(2, 2, 3, 2) == 1);
  // m >= 2 needs t >= ceil(n/2).
  CHECK_FALSE(sphere_bound_min_K(4, 1, 2, 4).has_value());
  CHECK(rep_upper_bound_K(2, 1, 2) == count_rank_exactly(2, 2, 2) + 1);
}

TEST_CASE("exact minimum covering-code size against subset enumeration") {
  const unsigned N = 2, n = 2;
  auto F = FieldContext::make(N);
  const auto pts = oracle::space(F, n);
  for (unsigned m = 1; m <= 2; ++m)
    for (unsigned t = 0; t <= 2; ++t) {
      std::optional<std::uint64_t> best;
      for (std::uint32_t S = 1; S < (1u << 16); ++S) {
        if (best && static_cast<unsigned>(__builtin_popcount(S)) >= *best) continue;
        std::vector<RankVector> code;
        for (unsigned i = 0; i < 16; ++i)
          if (S >> i & 1) code.push_back(pts[i]);
        if (oracle::t_m(pts, code, m) <= t) best = code.size();
      }
      const auto res = exact_min_K(n, t, m, N);
      CHECK_MESSAGE(res.K == best, "m=" << m << " t=" << t);
      if (res.K) {
        std::vector<RankVector> code;
        for (auto p : res.witness) code.push_back(oracle::vector_at(F, n, p));
        CHECK(code.size() == *res.K);
        CHECK(oracle::t_m(pts, code, m) <= t);
        const auto bound = sphere_bound_min_K(n, t, m, N);
        REQUIRE(bound.has_value());
        CHECK(BigInt(*res.K) >= *bound);
      }
    }
  CHECK_THROWS_AS(exact_min_K(3, 1, 1, 2), InvalidArgument);
}

TEST_CASE("least linear dimension for a covering radius") {
  auto F = FieldContext::make(2);
  CHECK(min_linear_dimension(2, 2, 1, F) == 0u + 1);  // a single line covers when t = n
  CHECK(min_linear_dimension(2, 0, 1, F) == 2u);
  const auto k = min_linear_dimension(2, 1, 1, F);
  REQUIRE(k.has_value());
  CHECK(*k >= 1);
}
