#pragma once

#include "rankcode/bigint.hpp"
#include "rankcode/gf2.hpp"

namespace rankcode {

inline unsigned rank_of(const Packed& w, unsigned n) {
  return column_rank(std::span<const std::uint16_t>(w.data(), n));
}

unsigned rank_norm(const RankVector& x);
unsigned rank_distance(const RankVector& x, const RankVector& y);

// Gaussian binomial [n m]_q; 0 when m > n or m < 0.
BigInt gaussian_binomial(long n, long m, unsigned q = 2);

// L_i(n): number of vectors of V^n over GF(q^N) with rank exactly i.
BigInt count_rank_exactly(unsigned n, unsigned i, unsigned N, unsigned q = 2);

// V(n,t) = sum_{i<=t} L_i(n).
BigInt sphere_volume(unsigned n, unsigned t, unsigned N, unsigned q = 2);

// sum_{i<=r} C(n,i)(2^N-1)^i.
BigInt hamming_ball_count(unsigned n, unsigned r, unsigned N);

BigInt binomial(const BigInt& n, unsigned k);

}  // namespace rankcode
