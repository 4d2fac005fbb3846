#pragma once

#include "rankcode/bigint.hpp"
#include "rankcode/circulant.hpp"
#include "rankcode/linear_code.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rankcode {

unsigned cov(const RankVector& x, const std::vector<RankVector>& S);
unsigned cov_code(const std::vector<RankVector>& C, const std::vector<RankVector>& S);

// A finite metric space (all of V^n, or all circulant words of length N) together
// with a code inside it. Points are indexed by integers: for V^n, coordinate j
// occupies bits [jN, (j+1)N) of the index.
class CoveringSpace {
 public:
  static CoveringSpace rank_space(FieldRef ctx, unsigned n, const std::vector<Packed>& code);
  static CoveringSpace of(const std::vector<RankVector>& code);
  static CoveringSpace of(const LinearRdCode& code, const Budget& budget = {});
  static CoveringSpace of(const CirculantRankCode& code, const Budget& budget = {});

  bool is_rank_space() const { return !circulant_; }
  double log2_space() const { return bits_; }
  std::uint64_t space_size() const { return std::uint64_t{1} << bits_; }
  std::size_t code_size() const { return code_size_; }
  unsigned max_distance() const { return max_dist_; }

  // out[j] = distance from point to codeword j.
  void distances(std::uint64_t point, std::uint8_t* out) const;
  unsigned distance_to_code(std::uint64_t point) const;

  Packed to_packed(std::uint64_t point) const;
  std::uint64_t to_point(const Packed& p) const;
  RankVector to_vector(std::uint64_t point) const;
  std::string describe(std::uint64_t point) const;

 private:
  CoveringSpace() = default;
  bool circulant_ = false;
  unsigned bits_ = 0, max_dist_ = 0, N_ = 0, n_ = 0;
  std::size_t code_size_ = 0;
  FieldRef field_;
  std::shared_ptr<kernels::WordTable> table_;
  std::vector<std::uint32_t> words_;
};

unsigned covering_radius(const CoveringSpace& space, const Budget& budget = {});
// Coset route: t(C) = max over syndromes of the least rank in the coset.
unsigned covering_radius(const LinearRdCode& code, const Budget& budget = {});
unsigned covering_radius(const CirculantRankCode& code, const Budget& budget = {});

struct CoveringReport {
  std::uint64_t code_size = 0;
  unsigned m = 1;
  unsigned t = 0;
  bool exact = true;  // false: t is a lower bound from sampling
  std::vector<std::uint64_t> witness;  // an m-set attaining t
};

// Exact t_m(C): the least t such that every m-set of distinct points lies within
// distance t of one codeword.
CoveringReport multi_covering_exact(const CoveringSpace& space, unsigned m, const Budget& budget = {});
// max cov(C, S) over random m-sets S; a lower bound on t_m(C).
CoveringReport multi_covering_sampled(const CoveringSpace& space, unsigned m, std::uint64_t samples,
                                      std::uint64_t seed);

// Lower bound ceil(C(2^{Nn}, m) / C(V(n,t), m)) on codes with t_m <= t; nullopt stands for infinity.
std::optional<BigInt> sphere_bound_min_K(unsigned n, unsigned t, unsigned m, unsigned N);
// m * L_n(n) + 1, valid when it does not exceed 2^{Nn}.
BigInt rep_upper_bound_K(unsigned n, unsigned m, unsigned N);

struct MinKResult {
  std::optional<std::uint64_t> K;  // nullopt: no subset achieves t_m <= t
  std::vector<std::uint64_t> witness;
};

// Least |C| over arbitrary subsets C of V^n with t_m(C) <= t; requires 2^{Nn} <= 16.
MinKResult exact_min_K(unsigned n, unsigned t, unsigned m, unsigned N);

// Least dimension k of a linear [n,k] code with t_m <= t, over all k-dimensional
// subspaces; requires Nn <= 8. nullopt when even V^n fails.
std::optional<unsigned> min_linear_dimension(unsigned n, unsigned t, unsigned m, FieldRef ctx);

}  // namespace rankcode
