#include "rankcode/mrd.hpp"

#include "rankcode/rank_metric.hpp"

namespace rankcode {

LinearRdCode gabidulin_code(std::span<const FieldElement> g, unsigned k) {
  if (g.empty()) throw InvalidArgument("empty generating vector");
  if (!linearly_independent(g)) throw InvalidArgument("generating vector is not linearly independent over GF(2)");
  const unsigned n = static_cast<unsigned>(g.size());
  if (k < 1 || k > n) throw InvalidArgument("need 1 <= k <= n");
  const FieldRef& ctx = g[0].context();
  FieldMatrix G(ctx, k, n);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < n; ++j) G.set(i, j, ctx->frobenius(g[j].bits(), i));
  return LinearRdCode(std::move(G));
}

LinearRdCode gabidulin_code(FieldRef ctx, unsigned n, unsigned k) {
  if (n > ctx->degree()) throw InvalidArgument("n exceeds N");
  std::vector<FieldElement> g;
  for (unsigned j = 0; j < n; ++j) g.emplace_back(ctx, static_cast<std::uint16_t>(1u << j));
  return gabidulin_code(g, k);
}

BigInt SpectrumTable::total() const {
  BigInt s = 0;
  for (const auto& a : A) s += a;
  return s;
}

SpectrumTable mrd_spectrum(unsigned n, unsigned k, unsigned q, unsigned N) {
  if (k < 1 || k > n || n > N) throw InvalidArgument("spectrum needs 1 <= k <= n <= N");
  if (q < 2) throw InvalidArgument("spectrum needs q >= 2");
  SpectrumTable t;
  t.n = n;
  t.k = k;
  t.d = n - k + 1;
  t.q = q;
  t.N = N;
  t.Q = big_pow(BigInt(q), N);
  t.A.assign(n + 1, 0);
  t.A[0] = 1;
  const unsigned d = t.d;
  for (unsigned m = 0; d + m <= n; ++m) {
    BigInt sum = 0;  // signed
    for (unsigned j = 0; j <= m; ++j) {
      const unsigned u = m - j;
      const unsigned e = u == 0 ? 0 : u * (u - 1) / 2;
      BigInt term = gaussian_binomial(d + m, d + j, q) * big_pow(BigInt(q), e) * (big_pow(t.Q, j + 1) - 1);
      if ((j + m) % 2) sum -= term;
      else sum += term;
    }
    t.A[d + m] = gaussian_binomial(n, d + m, q) * sum;
  }
  return t;
}

std::pair<BigInt, BigInt> nondivisibility_witness(unsigned n, unsigned k, unsigned q, unsigned N) {
  if (k < 2) throw InvalidArgument("non-divisibility needs k >= 2; [n,1,n] codes are divisible by n");
  const SpectrumTable t = mrd_spectrum(n, k, q, N);
  return {t.A[t.d], t.A[t.d + 1]};
}

}  // namespace rankcode
