#include "oracles.hpp"
#include "rankcode/extremal.hpp"
#include "rankcode/error.hpp"

#include <doctest.h>

using namespace rankcode;

namespace {

// Maximum clique by exhaustive branching, pruned only by the candidate count.
void brute_clique(const std::vector<std::vector<char>>& adj, std::vector<unsigned> cand, std::uint64_t size,
                  std::uint64_t& best) {
  best = std::max(best, size);
  while (!cand.empty() && size + cand.size() > best) {
    const unsigned v = cand.back();
    cand.pop_back();
    std::vector<unsigned> next;
    for (auto u : cand)
      if (adj[v][u]) next.push_back(u);
    brute_clique(adj, next, size + 1, best);
  }
}

std::uint64_t brute_A(const FieldRef& F, unsigned n, unsigned r, unsigned d) {
  std::vector<RankVector> verts;
  for (const auto& x : oracle::space(F, n))
    if (oracle::rank(x) == r) verts.push_back(x);
  std::vector<std::vector<char>> adj(verts.size(), std::vector<char>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j) adj[i][j] = i != j && oracle::rank(verts[i] + verts[j]) >= d;
  std::vector<unsigned> all(verts.size());
  for (unsigned i = 0; i < all.size(); ++i) all[i] = i;
  std::uint64_t best = 0;
  brute_clique(adj, all, 0, best);
  return best;
}

}  // namespace

TEST_CASE("exact A(n,r,d) against plain clique enumeration") {
  for (unsigned N = 2; N <= 3; ++N) {
    auto F = FieldContext::make(N);
    for (unsigned n = 1; n <= N && N * n <= 6; ++n)
      for (unsigned r = 1; r <= n; ++r)
        for (unsigned d = 1; d <= 2 * r + 1; ++d) {
          const auto got = a_search(F, n, r, d, SearchMode::kExact);
          CHECK_MESSAGE(got.size == brute_A(F, n, r, d), "N=" << N << " n=" << n << " r=" << r << " d=" << d);
          CHECK(got.exact);
          CHECK(got.witness.members.size() == got.size);
          CHECK(is_constant_rank_set(got.witness));
          const auto greedy = a_search(F, n, r, d, SearchMode::kGreedy);
          CHECK(greedy.size <= got.size);
          CHECK(is_constant_rank_set(greedy.witness));
        }
  }
}

TEST_CASE("A(4,2,4) at N = 4") {
  auto F = FieldContext::make(4);
  const auto res = a_search(F, 4, 2, 4, SearchMode::kExact);
  CHECK(res.size == 5);
  CHECK(is_constant_rank_set(res.witness));
}

TEST_CASE("full-rank sets respect the product bound") {
  for (unsigned N = 2; N <= 3; ++N) {
    auto F = FieldContext::make(N);
    for (unsigned n = 1; n <= N; ++n)
      for (unsigned d = 1; d <= n; ++d)
        CHECK(BigInt(a_search(F, n, n, d, SearchMode::kExact).size) <= a_upper_bound(n, d, N));
  }
  // prod_{i=0}^{0} (2^3 - 2^i) = 7.
  CHECK(a_upper_bound(2, 2, 3) == 7);
}

TEST_CASE("constant-rank set checker") {
  auto F = FieldContext::make(3);
  const auto a = oracle::vector_at(F, 2, 0x01);  // rank 1
  const auto b = oracle::vector_at(F, 2, 0x02);  // rank 1, distance 1 from a
  const auto c = oracle::vector_at(F, 2, 0x0a);  // rank 2
  CHECK(is_constant_rank_set({2, 1, 1, {a, b}}));
  CHECK_FALSE(is_constant_rank_set({2, 1, 2, {a, b}}));
  CHECK_FALSE(is_constant_rank_set({2, 1, 1, {a, c}}));
  CHECK_FALSE(is_constant_rank_set({2, 1, 1, {a, a}}));
}

TEST_CASE("search argument checks") {
  auto F = FieldContext::make(3);
  CHECK(a_search(F, 2, 3, 1, SearchMode::kExact).size == 0);
  CHECK_THROWS_AS(a_search(F, 4, 1, 1, SearchMode::kExact), InvalidArgument);
}
