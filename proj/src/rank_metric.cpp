#include "rankcode/rank_metric.hpp"

#include "rankcode/error.hpp"

#include <algorithm>

namespace rankcode {

unsigned rank_norm(const RankVector& x) { return rank_of(x.packed(), x.length()); }

unsigned rank_distance(const RankVector& x, const RankVector& y) { return rank_norm(x + y); }

BigInt gaussian_binomial(long n, long m, unsigned q) {
  if (m < 0 || n < 0 || m > n) return 0;
  if (q < 2) throw InvalidArgument("gaussian binomial needs q >= 2");
  BigInt num = 1, den = 1;
  const BigInt Q = q;
  for (long i = 0; i < m; ++i) {
    num *= big_pow(Q, static_cast<unsigned>(n - i)) - 1;
    den *= big_pow(Q, static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

BigInt count_rank_exactly(unsigned n, unsigned i, unsigned N, unsigned q) {
  if (i > std::min(n, N)) return 0;
  BigInt r = gaussian_binomial(n, i, q);
  const BigInt qN = big_pow(BigInt(q), N);
  for (unsigned j = 0; j < i; ++j) r *= qN - big_pow(BigInt(q), j);
  return r;
}

BigInt sphere_volume(unsigned n, unsigned t, unsigned N, unsigned q) {
  BigInt v = 0;
  for (unsigned i = 0; i <= std::min({t, n, N}); ++i) v += count_rank_exactly(n, i, N, q);
  return v;
}

BigInt binomial(const BigInt& n, unsigned k) {
  if (n < k) return 0;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

BigInt hamming_ball_count(unsigned n, unsigned r, unsigned N) {
  if (r > n) throw InvalidArgument("hamming radius exceeds length");
  BigInt v = 0;
  const BigInt s = pow2(N) - 1;
  for (unsigned i = 0; i <= r; ++i) v += binomial(BigInt(n), i) * big_pow(s, i);
  return v;
}

}  // namespace rankcode
