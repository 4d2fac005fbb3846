#pragma once

#include "rankcode/bigint.hpp"
#include "rankcode/error.hpp"
#include "rankcode/gf2.hpp"

#include <cstdint>
#include <vector>

namespace rankcode {

enum class SearchMode { kExact, kGreedy };

// A set of rank-r vectors with pairwise rank distance >= d.
struct ConstantRankSet {
  unsigned n = 0, r = 0, d = 0;
  std::vector<RankVector> members;
};

struct ASearchResult {
  std::uint64_t size = 0;
  ConstantRankSet witness;
  bool exact = false;
  std::uint64_t nodes = 0;  // branch-and-bound nodes visited
};

// Exact: maximum clique in the graph on rank-r vectors of V^n joined when their
// distance is >= d. The automorphisms (GL(N,2) x GL(n,2)) act transitively on
// the vertices, so one vertex is fixed and the search runs in its neighbourhood.
ASearchResult a_search(FieldRef ctx, unsigned n, unsigned r, unsigned d, SearchMode mode,
                       const Budget& budget = {});

// prod_{i=0}^{n-d} (2^N - 2^i), an upper bound on A(n,n,d).
BigInt a_upper_bound(unsigned n, unsigned d, unsigned N);

// Check that a set really is an (n,r,d) set.
bool is_constant_rank_set(const ConstantRankSet& s);

}  // namespace rankcode
