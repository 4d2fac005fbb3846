#include "oracles.hpp"
#include "rankcode/mrd.hpp"
#include "rankcode/rank_metric.hpp"
#include "rankcode/error.hpp"

#include <doctest.h>

using namespace rankcode;

TEST_CASE("Gabidulin codes are MRD") {
  for (unsigned N = 2; N <= 5; ++N) {
    auto F = FieldContext::make(N);
    for (unsigned n = 1; n <= N; ++n)
      for (unsigned k = 1; k <= n; ++k) {
        if (N * k > 16) continue;
        auto C = gabidulin_code(F, n, k);
        CHECK_MESSAGE(C.min_distance() == n - k + 1, "N=" << N << " [" << n << "," << k << "]");
        CHECK(C.is_mrd());
      }
  }
}

TEST_CASE("Gabidulin generator rows are Frobenius powers") {
  auto F = FieldContext::make(5);
  std::vector<FieldElement> g{FieldElement(F, 3), FieldElement(F, 5), FieldElement(F, 0x10)};
  auto C = gabidulin_code(g, 3);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) CHECK(C.generator()(i, j) == F->frobenius(g[j].bits(), i));
  CHECK(C.min_distance() == 1);
  std::vector<FieldElement> dependent{FieldElement(F, 3), FieldElement(F, 5), FieldElement(F, 6)};
  CHECK_THROWS_AS(gabidulin_code(dependent, 2), InvalidArgument);
}

TEST_CASE("MRD spectrum equals brute-force rank distributions") {
  for (unsigned N = 2; N <= 5; ++N) {
    auto F = FieldContext::make(N);
    for (unsigned n = 1; n <= N; ++n)
      for (unsigned k = 1; k <= n; ++k) {
        if (N * k > 16) continue;
        auto C = gabidulin_code(F, n, k);
        std::vector<BigInt> brute(n + 1, 0);
        for (const auto& w : C.codewords()) brute[oracle::rank(w)] += 1;
        const auto t = mrd_spectrum(n, k, 2, N);
        CHECK(t.d == n - k + 1);
        for (unsigned s = 0; s <= n; ++s) CHECK_MESSAGE(t.A[s] == brute[s], "N=" << N << " [" << n << "," << k << "] s=" << s);
      }
  }
}

TEST_CASE("spectrum totals and support at larger parameters") {
  for (unsigned N = 2; N <= 12; ++N)
    for (unsigned n = 1; n <= N; ++n)
      for (unsigned k = 1; k <= n; ++k) {
        const auto t = mrd_spectrum(n, k, 2, N);
        CHECK(t.total() == big_pow(t.Q, k));
        CHECK(t.A[0] == 1);
        for (unsigned s = 1; s < t.d; ++s) CHECK(t.A[s] == 0);
        for (unsigned s = t.d; s <= n; ++s) CHECK(t.A[s] > 0);
        // No codeword rank exceeds what V^n holds.
        for (unsigned s = 0; s <= n; ++s) CHECK(t.A[s] <= count_rank_exactly(n, s, N));
      }
}

TEST_CASE("non-divisibility witness") {
  auto [ad, ad1] = nondivisibility_witness(4, 2, 2, 4);
  CHECK(ad == 225);
  CHECK(ad1 == 30);
  CHECK_THROWS_AS(nondivisibility_witness(4, 1, 2, 4), InvalidArgument);
  for (unsigned n = 2; n <= 4; ++n) CHECK(gabidulin_code(FieldContext::make(4), n, 1).divisor() == n);
}
