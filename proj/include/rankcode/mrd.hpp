#pragma once

#include "rankcode/bigint.hpp"
#include "rankcode/linear_code.hpp"

#include <span>
#include <utility>
#include <vector>

namespace rankcode {

// Frobenius-matrix generator: row i is (g_1^(2^i), ..., g_n^(2^i)), i < k.
// g must be linearly independent over GF(2).
LinearRdCode gabidulin_code(std::span<const FieldElement> g, unsigned k);
// Same with g = (1, x, ..., x^(n-1)).
LinearRdCode gabidulin_code(FieldRef ctx, unsigned n, unsigned k);

struct SpectrumTable {
  unsigned n = 0, k = 0, d = 0, q = 2, N = 0;
  BigInt Q;
  std::vector<BigInt> A;  // A[s] for s = 0..n
  BigInt total() const;
};

SpectrumTable mrd_spectrum(unsigned n, unsigned k, unsigned q, unsigned N);

// (A_d, A_{d+1}) for an MRD code with k >= 2.
std::pair<BigInt, BigInt> nondivisibility_witness(unsigned n, unsigned k, unsigned q, unsigned N);

}  // namespace rankcode
