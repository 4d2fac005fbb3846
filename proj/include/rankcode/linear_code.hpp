#pragma once

#include "rankcode/error.hpp"
#include "rankcode/field_matrix.hpp"
#include "rankcode/kernels.hpp"

#include <bit>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

namespace rankcode {

struct CodeReport {
  unsigned n = 0, k = 0, d = 0;
  bool is_mrd = false;
  bool is_amrd = false;
  unsigned divisor = 0;
  unsigned t = 0;  // floor((d-1)/2)
};

struct StandardForm {
  FieldMatrix generator;          // [I_k | A]
  std::vector<unsigned> perm;     // column i of generator is column perm[i] of the original
};

// Linear [n,k] code over GF(2^N) given by a full-rank generator matrix, k <= n <= N.
// Immutable; derived data (parity check, weight distribution, codeword table)
// is computed once on demand and shared between copies.
class LinearRdCode {
 public:
  explicit LinearRdCode(FieldMatrix generator);

  const FieldRef& field() const { return G_.field(); }
  unsigned n() const { return G_.cols(); }
  unsigned k() const { return G_.rows(); }
  const FieldMatrix& generator() const { return G_; }

  // GF(2)-basis of the code: x^t * row_i for t < N, i < k (index i*N + t).
  const std::vector<Packed>& gf2_basis() const { return basis_; }
  double log2_size() const { return static_cast<double>(field()->degree()) * k(); }

  RankVector encode(std::span<const std::uint16_t> message) const;
  bool contains(const RankVector& x) const;

  // Calls f(const Packed&) once per codeword, zero first, in Gray-code order.
  template <class F>
  void for_each_codeword(F&& f, const Budget& budget = {}) const {
    budget.require(log2_size(), "codeword enumeration");
    const std::size_t dim = basis_.size();
    Packed cur{};
    f(static_cast<const Packed&>(cur));
    const std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      const Packed& b = basis_[std::countr_zero(idx)];
      for (unsigned j = 0; j < n(); ++j) cur[j] ^= b[j];
      f(static_cast<const Packed&>(cur));
    }
  }

  std::vector<RankVector> codewords(const Budget& budget = {}) const;
  // Column-sliced table of all codewords for batched distance queries.
  const kernels::WordTable& table(const Budget& budget = {}) const;

  // A[s] = number of codewords of rank s, s = 0..n.
  const std::vector<std::uint64_t>& rank_distribution(const Budget& budget = {}) const;
  unsigned min_distance(const Budget& budget = {}) const;
  unsigned divisor(const Budget& budget = {}) const;
  bool is_mrd(const Budget& budget = {}) const { return min_distance(budget) == n() - k() + 1; }
  bool is_amrd(const Budget& budget = {}) const { return min_distance(budget) + k() >= n(); }
  CodeReport classify(const Budget& budget = {}) const;

  StandardForm standard_form() const;
  const FieldMatrix& parity_check() const;

  // Row space of this code lies inside other's.
  bool is_subcode_of(const LinearRdCode& other) const;
  bool same_code(const LinearRdCode& other) const;

 private:
  struct Cache;
  FieldMatrix G_;
  std::vector<Packed> basis_;
  std::shared_ptr<Cache> cache_;
};

LinearRdCode repetition_code(FieldRef ctx, unsigned n);
LinearRdCode cartesian_product(const LinearRdCode& c1, const LinearRdCode& c2);
LinearRdCode fold_repetition(const LinearRdCode& code, unsigned r);
// Uniformly random full-rank k x n generator.
LinearRdCode random_linear_code(FieldRef ctx, unsigned n, unsigned k, std::mt19937_64& rng);

struct DecodeResult {
  RankVector codeword;
  unsigned distance;
  bool unique;
};

// Brute-force nearest codeword; ties resolved to the first codeword in enumeration order.
DecodeResult decode_nearest(const LinearRdCode& code, const RankVector& y, const Budget& budget = {});
// All codewords at minimum rank distance from y.
std::vector<RankVector> nearest_codewords(const LinearRdCode& code, const RankVector& y,
                                          const Budget& budget = {});

}  // namespace rankcode
