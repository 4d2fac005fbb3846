#pragma once

#include "rankcode/bigint.hpp"
#include "rankcode/linear_code.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

namespace rankcode {

// Which pairs of nonempty column subsets (P1, P2) the parity-check test visits.
enum class SubsetMode { kDisjoint, kDistinct };

struct ConditionReport {
  bool holds = true;
  // Subsets as bitmasks over the columns of H (bit j = column j).
  std::optional<std::pair<std::uint32_t, std::uint32_t>> violating_pair;
  BigInt pairs_checked = 0;
};

// For every unordered admissible pair, the 2 x 3 matrix of column sums of H over
// P1 and P2 must have rank 2. The first failing pair in (P1, P2) numeric order is reported.
ConditionReport theorem14_condition(const FieldMatrix& H, SubsetMode mode = SubsetMode::kDistinct);

// Solution space {x : x H^T = 0} of a 3 x n parity-check matrix passing the condition.
LinearRdCode build_amrd_from_H(const FieldMatrix& H, SubsetMode mode = SubsetMode::kDistinct);

// For a failing pair, a nonzero y with y1*s1 + y2*s2 = 0 gives the codeword
// y1*1_{P1} + y2*1_{P2}, whose rank is at most 2.
RankVector low_rank_witness(const FieldMatrix& H, std::uint32_t P1, std::uint32_t P2);

// Random rank-3 3 x n matrices until one passes; nullopt after max_tries.
std::optional<FieldMatrix> search_parity_check(FieldRef ctx, unsigned n, std::mt19937_64& rng,
                                               unsigned max_tries, SubsetMode mode = SubsetMode::kDistinct);

struct BallComparison {
  unsigned r = 0;
  BigInt rank_ball, hamming_ball;
};

// Balls of radius r = (n-k-1)/2; n-k must be odd.
BallComparison rank_vs_hamming_counts(unsigned n, unsigned k, unsigned N);

}  // namespace rankcode
