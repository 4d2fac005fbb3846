#include "rankcode/verify.hpp"

#include "rankcode/amrd.hpp"
#include "rankcode/circulant.hpp"
#include "rankcode/covering.hpp"
#include "rankcode/extremal.hpp"
#include "rankcode/fuzzy.hpp"
#include "rankcode/mcode.hpp"
#include "rankcode/mrd.hpp"
#include "rankcode/rank_metric.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace rankcode {
namespace {

// The checks below recompute ranks through the N x n bit-matrix expansion and
// row elimination, independently of the column-basis kernels the library uses.
unsigned oracle_rank(const RankVector& x) { return gf2_rank(expand(x)); }

RankVector vector_at(const FieldRef& ctx, unsigned n, std::uint64_t index) {
  Packed p{};
  const unsigned N = ctx->degree();
  for (unsigned j = 0; j < n; ++j) p[j] = static_cast<std::uint16_t>((index >> (j * N)) & ctx->mask());
  return RankVector(ctx, n, p);
}

std::vector<RankVector> all_vectors(const FieldRef& ctx, unsigned n) {
  std::vector<RankVector> out;
  const std::uint64_t total = std::uint64_t{1} << (ctx->degree() * n);
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(vector_at(ctx, n, i));
  return out;
}

// Distance table D[p][c] over an explicit point list and code list.
struct DistanceTable {
  std::size_t points = 0, codewords = 0;
  std::vector<std::uint8_t> d;
  unsigned at(std::size_t p, std::size_t c) const { return d[p * codewords + c]; }
};

DistanceTable rank_table(const std::vector<RankVector>& space, const std::vector<RankVector>& code) {
  DistanceTable t{space.size(), code.size(), {}};
  t.d.resize(space.size() * code.size());
  for (std::size_t p = 0; p < space.size(); ++p)
    for (std::size_t c = 0; c < code.size(); ++c) t.d[p * code.size() + c] = static_cast<std::uint8_t>(oracle_rank(space[p] + code[c]));
  return t;
}

DistanceTable circulant_table(const CirculantRankCode& code) {
  const unsigned N = code.length();
  std::vector<std::uint32_t> words;
  {
    // Span by plain subset sums of the basis.
    const auto& b = code.basis();
    for (std::uint32_t s = 0; s < (1u << b.size()); ++s) {
      std::uint32_t w = 0;
      for (std::size_t i = 0; i < b.size(); ++i)
        if (s >> i & 1) w ^= b[i].poly();
      words.push_back(w);
    }
  }
  const std::size_t points = std::size_t{1} << N;
  DistanceTable t{points, words.size(), {}};
  t.d.resize(points * words.size());
  for (std::size_t p = 0; p < points; ++p)
    for (std::size_t c = 0; c < words.size(); ++c)
      t.d[p * words.size() + c] =
          static_cast<std::uint8_t>(gf2_rank(circulant_matrix(CirculantWord(N, static_cast<std::uint32_t>(p) ^ words[c]))));
  return t;
}

// Direct t_1 / t_2 from the definition: max over m-sets of distinct points of
// the least farthest-member distance to a codeword.
unsigned brute_t1(const DistanceTable& t) {
  unsigned best = 0;
  for (std::size_t p = 0; p < t.points; ++p) {
    unsigned lo = ~0u;
    for (std::size_t c = 0; c < t.codewords; ++c) lo = std::min(lo, t.at(p, c));
    best = std::max(best, lo);
  }
  return best;
}

unsigned brute_t2(const DistanceTable& t) {
  unsigned best = 0;
  for (std::size_t p = 0; p < t.points; ++p)
    for (std::size_t q = p + 1; q < t.points; ++q) {
      unsigned lo = ~0u;
      for (std::size_t c = 0; c < t.codewords && lo > best; ++c) lo = std::min(lo, std::max(t.at(p, c), t.at(q, c)));
      best = std::max(best, lo);
    }
  return best;
}

unsigned brute_tm(const DistanceTable& t, unsigned m) {
  if (m == 1) return brute_t1(t);
  if (m == 2) return brute_t2(t);
  throw InvalidArgument("oracle supports m <= 2");
}

std::string join(const std::vector<unsigned>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Ctx {
  Check& check;
  const VerifyOptions& opts;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      check.details.push_back("mismatch: " + what);
    }
  }
  void note(const std::string& s) { check.details.push_back(s); }
};

using CheckFn = std::function<void(Ctx&)>;

struct CriterionDef {
  const char* name;
  double limit_seconds;
  CheckFn run;
};

ASearchResult check_a_value(Ctx& c, unsigned N, unsigned n, unsigned r, unsigned d, std::uint64_t expected,
                            bool print_witness, std::vector<std::string>& observed) {
  auto ctx = FieldContext::make(N);
  auto res = a_search(ctx, n, r, d, SearchMode::kExact, c.opts.budget);
  const std::string label = "A(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(d) + ") N=" + std::to_string(N);
  observed.push_back(label + "=" + std::to_string(res.size));
  c.expect(res.exact, label + " search not exact");
  c.expect(res.size == expected, label + " = " + std::to_string(res.size) + ", expected " + std::to_string(expected));
  c.expect(res.witness.members.size() == res.size, label + " witness size");
  // Witness recheck with the independent rank.
  const auto& W = res.witness.members;
  for (std::size_t i = 0; i < W.size(); ++i) {
    c.expect(oracle_rank(W[i]) == r, label + " witness member " + W[i].to_string() + " has wrong rank");
    for (std::size_t j = i + 1; j < W.size(); ++j)
      c.expect(oracle_rank(W[i] + W[j]) >= d, label + " witness pair too close");
  }
  if (print_witness)
    for (const auto& w : W) c.note(label + " witness: " + w.to_string());
  return res;
}

void crit1(Ctx& c) {
  std::vector<std::string> obs;
  c.check.observed = std::to_string(check_a_value(c, 3, 3, 1, 2, 7, true, obs).size);
}

void crit2(Ctx& c) {
  std::vector<std::string> obs;
  auto res = check_a_value(c, 4, 4, 2, 4, 5, true, obs);
  // All pairwise distances exactly 4.
  const auto& W = res.witness.members;
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = i + 1; j < W.size(); ++j) c.expect(oracle_rank(W[i] + W[j]) == 4, "witness distance != 4");
  c.check.observed = std::to_string(res.size);
}

void crit3(Ctx& c) {
  std::vector<std::string> obs;
  for (unsigned N = 2; N <= 4; ++N)
    for (unsigned n = 2; n <= N; ++n) {
      check_a_value(c, N, n, 1, 2, (std::uint64_t{1} << n) - 1, false, obs);
      check_a_value(c, N, n, n, n, (std::uint64_t{1} << N) - 1, false, obs);
    }
  std::string s;
  for (const auto& o : obs) s += (s.empty() ? "" : " ") + o;
  c.check.observed = s;
}

void crit4(Ctx& c) {
  auto ctx = FieldContext::make(4);
  auto code = gabidulin_code(ctx, 4, 2);
  unsigned brute = ~0u;
  std::size_t count = 0;
  for (const auto& w : code.codewords(c.opts.budget)) {
    ++count;
    if (!w.is_zero()) brute = std::min(brute, oracle_rank(w));
  }
  const unsigned d = code.min_distance(c.opts.budget);
  c.expect(count == 256, "codeword count " + std::to_string(count));
  c.expect(brute == 3, "exhaustive minimum " + std::to_string(brute));
  c.expect(d == 3, "library min_distance " + std::to_string(d));
  c.expect(code.is_mrd(c.opts.budget), "MRD flag not set");
  c.check.observed = "d=" + std::to_string(brute) + " mrd=" + (code.is_mrd(c.opts.budget) ? "yes" : "no");
}

void crit5(Ctx& c) {
  auto ctx = FieldContext::make(4);
  std::string obs;
  for (auto [n, k] : std::vector<std::pair<unsigned, unsigned>>{{4, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 3}}) {
    auto code = gabidulin_code(ctx, n, k);
    std::vector<BigInt> brute(n + 1, 0);
    for (const auto& w : code.codewords(c.opts.budget)) brute[oracle_rank(w)] += 1;
    auto spec = mrd_spectrum(n, k, 2, 4);
    const std::string tag = "[" + std::to_string(n) + "," + std::to_string(k) + "]";
    for (unsigned s = 0; s <= n; ++s)
      c.expect(spec.A[s] == brute[s], tag + " A_" + std::to_string(s) + " formula " + to_string(spec.A[s]) +
                                          " vs brute " + to_string(brute[s]));
    c.expect(spec.total() == big_pow(16, k), tag + " total " + to_string(spec.total()));
    std::string row;
    for (unsigned s = 0; s <= n; ++s) row += (s ? "," : "") + to_string(spec.A[s]);
    obs += (obs.empty() ? "" : " ") + tag + ":" + row;
  }
  c.check.observed = obs;
}

void crit6(Ctx& c) {
  auto ctx = FieldContext::make(4);
  std::string obs;
  for (unsigned n = 2; n <= 4; ++n)
    for (unsigned k = 1; k < n; ++k) {
      auto code = gabidulin_code(ctx, n, k);
      const unsigned div = code.divisor(c.opts.budget);
      // gcd of the exhaustively computed nonzero ranks.
      unsigned g = 0;
      for (const auto& w : code.codewords(c.opts.budget))
        if (!w.is_zero()) g = std::gcd(g, oracle_rank(w));
      const std::string tag = "[" + std::to_string(n) + "," + std::to_string(k) + "]";
      c.expect(div == g, tag + " divisor " + std::to_string(div) + " vs gcd " + std::to_string(g));
      if (k == 1) {
        c.expect(div == n, tag + " divisor " + std::to_string(div) + ", expected " + std::to_string(n));
      } else {
        c.expect(div == 1, tag + " divisor " + std::to_string(div) + ", expected 1");
        auto [ad, ad1] = nondivisibility_witness(n, k, 2, 4);
        c.expect(ad > 0 && ad1 > 0, tag + " A_d or A_{d+1} is zero");
      }
      obs += (obs.empty() ? "" : " ") + tag + ":" + std::to_string(div);
    }
  c.check.observed = obs;
}

void crit7(Ctx& c) {
  std::uint64_t words = 0;
  for (unsigned N = 2; N <= 8; ++N) {
    const std::uint64_t modulus = (std::uint64_t{1} << N) | 1;
    for (std::uint32_t a = 0; a < (1u << N); ++a) {
      CirculantWord w(N, a);
      const unsigned by_rank = gf2_rank(circulant_matrix(w));
      // deg gcd(0, x^N+1) = N, so the zero word has norm 0.
      const std::uint64_t g = a == 0 ? modulus : poly_gcd_gf2(a, modulus);
      const unsigned deg = 63 - static_cast<unsigned>(__builtin_clzll(g));
      c.expect(by_rank == N - deg, "N=" + std::to_string(N) + " a=" + w.to_hex());
      c.expect(circulant_norm(w) == by_rank, "circulant_norm N=" + std::to_string(N) + " a=" + w.to_hex());
      ++words;
    }
    c.expect(circulant_norm(CirculantWord(N, 0b11)) == N - 1, "norm(1+x) N=" + std::to_string(N));
    c.expect(circulant_norm(CirculantWord(N, (1u << N) - 1)) == 1, "norm(all-ones) N=" + std::to_string(N));
  }
  c.check.observed = std::to_string(words) + " words checked";
}

void crit8(Ctx& c) {
  std::string obs;
  for (auto [N, n] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {3, 3}, {4, 3}, {4, 4}}) {
    auto code = repetition_code(FieldContext::make(N), n);
    const unsigned t = covering_radius(CoveringSpace::of(code, c.opts.budget), c.opts.budget);
    const unsigned t_coset = covering_radius(code, c.opts.budget);
    const std::string tag = "(N=" + std::to_string(N) + ",n=" + std::to_string(n) + ")";
    c.expect(t == n - 1, tag + " t=" + std::to_string(t));
    c.expect(t_coset == t, tag + " coset route " + std::to_string(t_coset));
    obs += (obs.empty() ? "" : " ") + tag + ":" + std::to_string(t);
  }
  c.check.observed = obs;
}

void crit9(Ctx& c) {
  std::mt19937_64 rng(c.opts.seed);
  unsigned random_ok = 0;
  for (unsigned i = 0; i < 50; ++i) {
    const unsigned N = 2 + static_cast<unsigned>(rng() % 3);  // 2..4, so Nn <= 16
    const unsigned n = 1 + static_cast<unsigned>(rng() % N);
    const unsigned k = 1 + static_cast<unsigned>(rng() % n);
    auto code = random_linear_code(FieldContext::make(N), n, k, rng);
    const unsigned t = covering_radius(code, c.opts.budget);
    const bool fine = t <= n - k;
    c.expect(fine, "random [" + std::to_string(n) + "," + std::to_string(k) + "] over N=" + std::to_string(N) +
                       " has t=" + std::to_string(t));
    if (i < 10 && c.opts.budget.allows(static_cast<double>(N) * (n + k) - 4)) {
      const unsigned tg = covering_radius(CoveringSpace::of(code, c.opts.budget), c.opts.budget);
      c.expect(tg == t, "coset and generic covering radius disagree");
    }
    random_ok += fine;
  }

  std::string obs = "t<=n-k on " + std::to_string(random_ok) + "/50";
  for (auto [N, n] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {2, 2}}) {
    auto ctx = FieldContext::make(N);
    const auto space = all_vectors(ctx, n);
    const std::string tag = "(N=" + std::to_string(N) + ",n=" + std::to_string(n) + ")";

    // Whole space as a code.
    auto full = CoveringSpace::of(space);
    const unsigned t2_full = multi_covering_exact(full, 2, c.opts.budget).t;
    c.expect(t2_full <= n - 1, tag + " t2(V^n)=" + std::to_string(t2_full));
    c.expect(t2_full == brute_t2(rank_table(space, space)), tag + " t2(V^n) oracle disagreement");
    obs += " " + tag + " t2(V^n)=" + std::to_string(t2_full);

    // A chain of codes C0 ⊂ C1 ⊂ C2 = V^n with t_m for m = 1, 2, 3.
    auto big = random_linear_code(ctx, n, n, rng);
    std::vector<LinearRdCode> chain;
    for (unsigned k = 1; k <= n; ++k) {
      std::vector<RankVector> rows;
      for (unsigned r = 0; r < k; ++r) rows.push_back(big.generator().row_vector(r));
      chain.emplace_back(FieldMatrix::from_rows(rows));
    }
    chain.push_back(repetition_code(ctx, n));
    std::vector<std::vector<unsigned>> tm;
    for (const auto& code : chain) {
      auto cs = CoveringSpace::of(code, c.opts.budget);
      std::vector<unsigned> row;
      for (unsigned m = 1; m <= 3; ++m) row.push_back(multi_covering_exact(cs, m, c.opts.budget).t);
      const auto table = rank_table(space, code.codewords(c.opts.budget));
      c.expect(row[0] == brute_t1(table) && row[1] == brute_t2(table), tag + " t_m oracle disagreement");
      c.expect(row[0] <= row[1] && row[1] <= row[2], tag + " t_m not monotone in m: " + join(row));
      c.expect(row[1] >= (n + 1) / 2 && row[2] >= (n + 1) / 2, tag + " t_m below ceil(n/2): " + join(row));
      tm.push_back(row);
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (unsigned m = 0; m < 3; ++m)
        c.expect(tm[i + 1][m] <= tm[i][m], tag + " t_m grew under code inclusion");
    obs += " chain t_1..3 " + join(tm[0]) + join(tm[n - 1]);
  }
  c.check.observed = obs;
}

void crit10(Ctx& c) {
  auto ctx = FieldContext::make(4);
  std::mt19937_64 rng(c.opts.seed + 10);
  std::string obs;
  std::vector<LinearRdCode> codes{repetition_code(ctx, 2), gabidulin_code(ctx, 2, 1), random_linear_code(ctx, 2, 1, rng)};
  const auto base_space = all_vectors(ctx, 2);
  std::vector<RankVector> doubled_space;
  for (const auto& v : base_space) {
    const std::uint16_t coords[4] = {v[0], v[1], v[0], v[1]};
    doubled_space.emplace_back(ctx, std::span<const std::uint16_t>(coords, 4));
  }
  for (std::size_t i = 0; i < codes.size(); ++i) {
    auto folded = fold_repetition(codes[i], 2);
    auto s1 = CoveringSpace::of(codes[i], c.opts.budget);
    auto s2 = CoveringSpace::of(folded, c.opts.budget);
    // Covering only the repeated vectors (v|v), the set the invariance argument ranges over.
    const auto restricted = rank_table(doubled_space, folded.codewords(c.opts.budget));
    for (unsigned m = 1; m <= 2; ++m) {
      const unsigned a = multi_covering_exact(s1, m, c.opts.budget).t;
      const unsigned b = multi_covering_exact(s2, m, c.opts.budget).t;
      const unsigned b_rep = brute_tm(restricted, m);
      c.expect(a == b, "fold changed t_" + std::to_string(m) + " over V^4: " + std::to_string(a) + " -> " + std::to_string(b));
      if (a != b)
        c.note("over repeated vectors only t_" + std::to_string(m) + " = " + std::to_string(b_rep) +
               (b_rep == a ? " (matches the base code)" : " (differs from the base code)"));
      obs += (obs.empty() ? "" : " ") + std::string("t") + std::to_string(m) + "=" + std::to_string(a) + "/" + std::to_string(b);
    }
  }
  for (unsigned i = 0; i < 6; ++i) {
    auto C = random_linear_code(ctx, 2, 1 + static_cast<unsigned>(rng() % 2), rng);
    auto D = random_linear_code(ctx, 2, 1 + static_cast<unsigned>(rng() % 2), rng);
    auto P = cartesian_product(C, D);
    const unsigned tc = covering_radius(C, c.opts.budget), td = covering_radius(D, c.opts.budget);
    const unsigned tp = covering_radius(P, c.opts.budget);
    c.expect(tp <= tc + td, "t(CxD)=" + std::to_string(tp) + " > " + std::to_string(tc) + "+" + std::to_string(td));
    obs += " prod " + std::to_string(tp) + "<=" + std::to_string(tc) + "+" + std::to_string(td);
  }
  c.check.observed = obs;
}

void crit11(Ctx& c) {
  const unsigned N = 2, n = 2;
  auto ctx = FieldContext::make(N);
  const auto space = all_vectors(ctx, n);
  const std::size_t P = space.size();  // 16
  const auto D = rank_table(space, space);
  std::string obs;
  for (unsigned m = 1; m <= 2; ++m)
    for (unsigned t = 1; t <= 2; ++t) {
      // Every subset: t_m(S) <= t iff S meets each m-set's common ball.
      std::vector<std::uint32_t> need;
      for (std::size_t p = 0; p < P; ++p)
        for (std::size_t q = (m == 1 ? p : p + 1); q < P; ++q) {
          std::uint32_t mask = 0;
          for (std::size_t x = 0; x < P; ++x)
            if (D.at(p, x) <= t && D.at(q, x) <= t) mask |= 1u << x;
          need.push_back(mask);
          if (m == 1) break;
        }
      std::optional<unsigned> brute_min;
      for (std::uint32_t S = 1; S < (1u << P); ++S) {
        bool covers = true;
        for (auto b : need)
          if (!(S & b)) {
            covers = false;
            break;
          }
        if (covers) {
          const unsigned size = static_cast<unsigned>(__builtin_popcount(S));
          if (!brute_min || size < *brute_min) brute_min = size;
        }
      }
      auto bound = sphere_bound_min_K(n, t, m, N);
      auto exact = exact_min_K(n, t, m, N);
      const std::string tag = "m=" + std::to_string(m) + ",t=" + std::to_string(t);
      c.expect(exact.K == (brute_min ? std::optional<std::uint64_t>(*brute_min) : std::nullopt),
               tag + " exact_min_K disagrees with subset oracle");
      if (brute_min) {
        c.expect(bound.has_value() && BigInt(*brute_min) >= *bound,
                 tag + " |C|=" + std::to_string(*brute_min) + " below the sphere bound");
      }
      obs += (obs.empty() ? "" : " ") + tag + " K=" + (brute_min ? std::to_string(*brute_min) : "inf") +
             " bound=" + (bound ? to_string(*bound) : "inf");
    }
  c.check.observed = obs;
}

void crit12(Ctx& c) {
  auto ctx = FieldContext::make(5);
  std::mt19937_64 rng(c.opts.seed + 12);
  auto H = search_parity_check(ctx, 4, rng, 10000);
  c.expect(H.has_value(), "no parity-check matrix found");
  std::string obs;
  if (H) {
    c.expect(theorem14_condition(*H).holds, "found H does not pass");
    auto code = build_amrd_from_H(*H);
    c.expect(code.n() == 4 && code.k() == 1, "built code is not [4,1]");
    unsigned lo = ~0u, count = 0;
    for (const auto& w : code.codewords(c.opts.budget)) {
      ++count;
      c.expect(times_transpose(w, *H) == std::vector<std::uint16_t>(3, 0), "codeword outside the kernel of H");
      if (!w.is_zero()) lo = std::min(lo, oracle_rank(w));
    }
    c.expect(count == 32, "codeword count " + std::to_string(count));
    c.expect(lo >= 3, "a nonzero codeword has rank " + std::to_string(lo));
    obs = "[4,1] min rank " + std::to_string(lo) + " over " + std::to_string(count) + " codewords";
  }

  // Failing matrices: random ones, plus ones with a repeated column.
  unsigned failing = 0;
  for (unsigned i = 0; i < 400; ++i) {
    FieldMatrix M(ctx, 3, 4);
    for (unsigned r = 0; r < 3; ++r)
      for (unsigned col = 0; col < 4; ++col) M.set(r, col, static_cast<std::uint16_t>(rng() & ctx->mask()));
    if (i % 4 == 0)
      for (unsigned r = 0; r < 3; ++r) M.set(r, 3, M(r, 0));
    if (field_rank(M) < 3) continue;
    auto rep = theorem14_condition(M);
    if (rep.holds) continue;
    ++failing;
    auto [P1, P2] = *rep.violating_pair;
    auto x = low_rank_witness(M, P1, P2);
    c.expect(!x.is_zero(), "zero witness");
    c.expect(times_transpose(x, M) == std::vector<std::uint16_t>(3, 0), "witness outside the code");
    c.expect(oracle_rank(x) <= 2, "witness rank " + std::to_string(oracle_rank(x)));
  }
  c.expect(failing > 0, "no failing matrices generated");
  c.check.observed = obs + "; " + std::to_string(failing) + " failing H each gave a rank<=2 codeword";
}

void crit13(Ctx& c) {
  auto cmp = rank_vs_hamming_counts(4, 1, 4);
  auto ctx = FieldContext::make(4);
  std::uint64_t rank_ball = 0, hamming_ball = 0;
  for (const auto& v : all_vectors(ctx, 4)) {
    rank_ball += oracle_rank(v) <= 1;
    unsigned weight = 0;
    for (unsigned j = 0; j < 4; ++j) weight += v[j] != 0;
    hamming_ball += weight <= 1;
  }
  c.expect(cmp.r == 1, "radius " + std::to_string(cmp.r));
  c.expect(cmp.rank_ball == 226 && cmp.hamming_ball == 61, "formula " + to_string(cmp.rank_ball) + " vs " + to_string(cmp.hamming_ball));
  c.expect(BigInt(rank_ball) == cmp.rank_ball && BigInt(hamming_ball) == cmp.hamming_ball, "enumeration disagrees");
  c.expect(cmp.rank_ball > cmp.hamming_ball, "rank ball not larger");
  c.check.observed = std::to_string(rank_ball) + " vs " + std::to_string(hamming_ball);
}

void crit14(Ctx& c) {
  auto ctx = FieldContext::make(2);
  const unsigned n = 2;
  const auto space = all_vectors(ctx, n);
  std::mt19937_64 rng(c.opts.seed + 14);
  std::vector<LinearRdCode> codes{repetition_code(ctx, n), gabidulin_code(ctx, n, 1)};
  for (int i = 0; i < 4; ++i) codes.push_back(random_linear_code(ctx, n, 1, rng));
  unsigned decodes = 0;
  for (double p : {0.6, 0.75, 0.9}) {
    ErrorModel model(ModelKind::kSymmetric, p);
    std::map<unsigned, std::set<double>> by_rank;
    for (const auto& u : space) {
      c.expect(membership(u, u, model) == std::pow(p, n), "f_u(u) != p^n");
      for (const auto& v : space) {
        const double f = membership(u, v, model);
        by_rank[oracle_rank(u + v)].insert(f);
        for (const auto& w : space)
          if (membership(u + w, v + w, model) != f) {
            c.expect(false, "translation invariance");
            break;
          }
      }
    }
    for (const auto& [r, vals] : by_rank) {
      c.expect(vals.size() == 1, "membership not a function of rank " + std::to_string(r));
      const double want = std::pow(p, n - r) * std::pow(1 - p, r);
      c.expect(std::abs(*vals.begin() - want) <= 1e-15, "membership at rank " + std::to_string(r));
    }
    for (const auto& code : codes) {
      const auto words = code.codewords(c.opts.budget);
      for (const auto& u : space) {
        unsigned best = ~0u;
        for (const auto& w : words) best = std::min(best, oracle_rank(u + w));
        std::set<std::string> nearest, theta;
        for (const auto& w : words)
          if (oracle_rank(u + w) == best) nearest.insert(w.to_string());
        for (const auto& w : theta_decode(u, code, model, c.opts.budget)) theta.insert(w.to_string());
        c.expect(nearest == theta, "theta_decode differs from nearest codewords at u=" + u.to_string());
        ++decodes;
      }
    }
  }
  c.check.observed = std::to_string(decodes) + " theta decodes matched";
}

Component random_component(std::mt19937_64& rng) {
  if (rng() % 2) {
    const unsigned N = 2 + static_cast<unsigned>(rng() % 2);
    const unsigned n = 1 + static_cast<unsigned>(rng() % 2);
    const unsigned k = 1 + static_cast<unsigned>(rng() % n);
    return Component(random_linear_code(FieldContext::make(N), n, k, rng));
  }
  const unsigned N = 2 + static_cast<unsigned>(rng() % 5);
  while (true) {
    const unsigned dim = 1 + static_cast<unsigned>(rng() % std::min(3u, N));
    std::vector<CirculantWord> basis;
    for (unsigned i = 0; i < dim; ++i) basis.emplace_back(N, static_cast<std::uint32_t>(rng() & ((1u << N) - 1)));
    try {
      return Component(CirculantRankCode(N, basis));
    } catch (const InvalidArgument&) {
    }
  }
}

MWord random_word(const Component& c, std::mt19937_64& rng) {
  if (c.is_linear()) {
    const auto& ctx = c.linear().field();
    return vector_at(ctx, c.linear().n(), rng() & ((std::uint64_t{1} << (ctx->degree() * c.linear().n())) - 1));
  }
  const unsigned N = c.circulant().length();
  return CirculantWord(N, static_cast<std::uint32_t>(rng() & ((1u << N) - 1)));
}

unsigned oracle_norm(const MWord& w) {
  if (const auto* v = std::get_if<RankVector>(&w)) return oracle_rank(*v);
  return gf2_rank(circulant_matrix(std::get<CirculantWord>(w)));
}

MWord oracle_sum(const MWord& a, const MWord& b) {
  if (const auto* v = std::get_if<RankVector>(&a)) return *v + std::get<RankVector>(b);
  const auto& x = std::get<CirculantWord>(a);
  return CirculantWord(x.length(), x.poly() ^ std::get<CirculantWord>(b).poly());
}

DistanceTable component_table(const Component& c, const Budget& budget) {
  if (c.is_linear()) return rank_table(all_vectors(c.linear().field(), c.linear().n()), c.linear().codewords(budget));
  return circulant_table(c.circulant());
}

void crit15(Ctx& c) {
  std::mt19937_64 rng(c.opts.seed + 15);
  unsigned built = 0, attempts = 0;
  while (built < 100) {
    if (++attempts > 10000) {
      c.expect(false, "could not build 100 ensembles");
      break;
    }
    const unsigned m = 1 + static_cast<unsigned>(rng() % 4);
    std::vector<Component> comps;
    for (unsigned i = 0; i < m; ++i) comps.push_back(random_component(rng));
    std::optional<Ensemble> E;
    try {
      E.emplace(comps);
    } catch (const InvalidArgument&) {
      continue;
    }
    ++built;

    std::vector<MWord> xs, ys;
    std::vector<unsigned> mult;
    for (const auto& comp : comps) {
      xs.push_back(random_word(comp, rng));
      ys.push_back(random_word(comp, rng));
      mult.push_back(1 + static_cast<unsigned>(rng() % 2));
    }
    std::vector<unsigned> want_rank, want_dist, want_min, want_div, want_cov;
    for (unsigned i = 0; i < m; ++i) {
      want_rank.push_back(oracle_norm(xs[i]));
      want_dist.push_back(oracle_norm(oracle_sum(xs[i], ys[i])));
      const auto table = component_table(comps[i], c.opts.budget);
      // Zero is codeword 0 in both tables; column 0 of row p is the norm of point p.
      unsigned lo = ~0u, g = 0;
      for (std::size_t p = 1; p < table.points; ++p) {
        bool in_code = false;
        for (std::size_t w = 0; w < table.codewords && !in_code; ++w) in_code = table.at(p, w) == 0;
        if (!in_code) continue;
        lo = std::min(lo, table.at(p, 0));
        g = std::gcd(g, table.at(p, 0));
      }
      want_min.push_back(lo);
      want_div.push_back(g);
      want_cov.push_back(brute_tm(table, mult[i]));
    }
    const std::string tag = "ensemble " + std::to_string(built);
    c.expect(m_rank(*E, xs) == want_rank, tag + " m_rank " + join(m_rank(*E, xs)) + " vs " + join(want_rank));
    c.expect(m_distance(*E, xs, ys) == want_dist, tag + " m_distance");
    c.expect(m_min_distance(*E, c.opts.budget) == want_min, tag + " m_min_distance " + join(m_min_distance(*E, c.opts.budget)) + " vs " + join(want_min));
    c.expect(m_divisor(*E, c.opts.budget) == want_div, tag + " m_divisor");
    c.expect(m_covering_radius(*E, mult, c.opts.budget) == want_cov, tag + " m_covering_radius");
    auto labels = classify_ensemble(*E, c.opts.budget);
    c.expect(!labels.count("mrd-m-code") || labels.count("amrd-m-code"), tag + " mrd label without amrd");
  }

  // Named taxonomy examples.
  auto F16 = FieldContext::make(4);
  Component mrd(gabidulin_code(F16, 4, 2));
  Component plain(repetition_code(F16, 3));
  Component circ(CirculantRankCode(4, {CirculantWord(4, 0b0011)}));
  Component cyclic(CirculantRankCode(4, {CirculantWord(4, 0b1111)}));
  const std::vector<std::pair<std::vector<Component>, std::string>> examples{
      {{mrd, plain}, "semi-mrd-bicode"},
      {{plain, circ}, "semi-circulant-type-I"},
      {{mrd, circ}, "semi-circulant-type-II"},
      {{circ, cyclic}, "semicyclic-circulant"},
      {{plain, mrd, cyclic, circ}, "mixed-quasi-circulant"},
  };
  unsigned matched = 0;
  for (const auto& [comps, label] : examples) {
    auto labels = classify_ensemble(Ensemble(comps), c.opts.budget);
    const bool hit = labels.count(label) > 0;
    c.expect(hit, "taxonomy example missing " + label);
    matched += hit;
  }
  c.check.observed = std::to_string(built) + " ensembles, " + std::to_string(matched) + "/5 taxonomy examples";
}

const std::vector<CriterionDef>& criteria() {
  static const std::vector<CriterionDef> defs{
      {"A(3,1,2)=7 over GF(8)", 1, crit1},
      {"A(4,2,4)=5 over GF(16) with verified witness", 600, crit2},
      {"A(n,1,2)=2^n-1 and A(n,n,n)=2^N-1 for 2<=n<=N<=4", 60, crit3},
      {"Gabidulin [4,2] over GF(16) has d=3 and is MRD", 1, crit4},
      {"MRD spectrum formula equals brute-force rank distribution", 1, crit5},
      {"Gabidulin divisors: 1 for k>=2, n for k=1", 5, crit6},
      {"circulant norm equals N - deg gcd(a, x^N+1) for N=2..8", 5, crit7},
      {"repetition code covering radius n-1", 30, crit8},
      {"covering radius bounds, monotonicity and inclusion", 300, crit9},
      {"fold-repetition invariance and product bound", 120, crit10},
      {"generalized sphere bound against exhaustive K_m", 300, crit11},
      {"parity-check condition pipeline over GF(32)", 60, crit12},
      {"rank ball 226 exceeds Hamming ball 61", 1, crit13},
      {"fuzzy membership invariants and theta decoding", 10, crit14},
      {"m-code componentwise equivalence and taxonomy", 60, crit15},
  };
  return defs;
}

const std::vector<std::string> kExpected{
    "7",
    "5",
    "2^n-1 and 2^N-1",
    "d=3 mrd=yes",
    "formula = brute force, total Q^k",
    "k>=2: 1, k=1: n",
    "rank = N - deg gcd",
    "n-1",
    "t<=n-k, t2(V^n)<=n-1, t2>=ceil(n/2), monotone",
    "equal under fold, t(CxD)<=t(C)+t(D)",
    "K >= sphere bound",
    "rank>=3 codewords; rank<=2 witnesses",
    "226 vs 61",
    "all invariants hold",
    "componentwise equality, 5/5 labels",
};

}  // namespace

Check run_criterion(unsigned id, const VerifyOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw InvalidArgument("no criterion " + std::to_string(id));
  const auto& def = criteria()[id - 1];
  Check check;
  check.id = id;
  check.name = def.name;
  check.expected = kExpected[id - 1];
  check.limit_seconds = def.limit_seconds;
  Ctx ctx{check, opts};
  const auto start = std::chrono::steady_clock::now();
  try {
    def.run(ctx);
  } catch (const std::exception& e) {
    ctx.ok = false;
    check.details.push_back(std::string("exception: ") + e.what());
    if (check.observed.empty()) check.observed = "error";
  }
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.correct = ctx.ok;
  return check;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"chapter1", "counting", "covering", "circulant", "mrd", "fuzzy", "mcode", "all"};
  return names;
}

std::vector<unsigned> suite_members(const std::string& suite) {
  if (suite == "chapter1") return {1, 2, 3, 4, 7, 12, 13};
  if (suite == "counting") return {3, 5, 13};
  if (suite == "covering") return {8, 9, 10, 11};
  if (suite == "circulant") return {7};
  if (suite == "mrd") return {4, 5, 6};
  if (suite == "fuzzy") return {14};
  if (suite == "mcode") return {15};
  if (suite == "all") {
    std::vector<unsigned> all(kCriterionCount);
    std::iota(all.begin(), all.end(), 1u);
    return all;
  }
  throw InvalidArgument("unknown suite '" + suite + "'");
}

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts) {
  SuiteReport report{suite, {}};
  for (unsigned id : suite_members(suite)) report.checks.push_back(run_criterion(id, opts));
  return report;
}

}  // namespace rankcode
