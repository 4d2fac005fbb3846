#include "rankcode/covering.hpp"

#include "rankcode/rank_metric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace rankcode {

unsigned cov(const RankVector& x, const std::vector<RankVector>& S) {
  if (S.empty()) throw InvalidArgument("cov needs a nonempty set");
  unsigned r = 0;
  for (const auto& s : S) r = std::max(r, rank_distance(x, s));
  return r;
}

unsigned cov_code(const std::vector<RankVector>& C, const std::vector<RankVector>& S) {
  if (C.empty()) throw InvalidArgument("cov_code needs a nonempty code");
  unsigned best = ~0u;
  for (const auto& c : C) best = std::min(best, cov(c, S));
  return best;
}

CoveringSpace CoveringSpace::rank_space(FieldRef ctx, unsigned n, const std::vector<Packed>& code) {
  if (code.empty()) throw InvalidArgument("empty code");
  if (n < 1 || n > ctx->degree()) throw InvalidArgument("need 1 <= n <= N");
  CoveringSpace s;
  s.N_ = ctx->degree();
  s.n_ = n;
  s.bits_ = s.N_ * n;
  if (s.bits_ > 62) throw InvalidArgument("space too large to index");
  s.max_dist_ = n;
  s.field_ = std::move(ctx);
  s.table_ = std::make_shared<kernels::WordTable>(n, s.N_);
  s.table_->reserve(code.size());
  for (const auto& w : code) s.table_->push(w);
  s.code_size_ = code.size();
  return s;
}

CoveringSpace CoveringSpace::of(const std::vector<RankVector>& code) {
  if (code.empty()) throw InvalidArgument("empty code");
  std::vector<Packed> words;
  for (const auto& c : code) {
    require_same_field(code[0].field(), c.field());
    if (c.length() != code[0].length()) throw InvalidArgument("codewords of different lengths");
    words.push_back(c.packed());
  }
  return rank_space(code[0].field(), code[0].length(), words);
}

CoveringSpace CoveringSpace::of(const LinearRdCode& code, const Budget& budget) {
  std::vector<Packed> words;
  code.for_each_codeword([&](const Packed& p) { words.push_back(p); }, budget);
  return rank_space(code.field(), code.n(), words);
}

CoveringSpace CoveringSpace::of(const CirculantRankCode& code, const Budget& budget) {
  CoveringSpace s;
  s.circulant_ = true;
  s.N_ = code.length();
  s.bits_ = s.N_;
  s.max_dist_ = s.N_;
  s.words_ = code.words(budget);
  s.code_size_ = s.words_.size();
  return s;
}

void CoveringSpace::distances(std::uint64_t point, std::uint8_t* out) const {
  if (circulant_) {
    const auto& norms = circulant_norm_table(N_);
    for (std::size_t j = 0; j < words_.size(); ++j) out[j] = norms[words_[j] ^ point];
    return;
  }
  table_->ranks_against(to_packed(point), out);
}

unsigned CoveringSpace::distance_to_code(std::uint64_t point) const {
  if (circulant_) {
    const auto& norms = circulant_norm_table(N_);
    unsigned best = max_dist_;
    for (auto w : words_) best = std::min<unsigned>(best, norms[w ^ point]);
    return best;
  }
  return table_->min_rank_against(to_packed(point));
}

Packed CoveringSpace::to_packed(std::uint64_t point) const {
  Packed p{};
  const std::uint64_t mask = (std::uint64_t{1} << N_) - 1;
  for (unsigned j = 0; j < n_; ++j) p[j] = static_cast<std::uint16_t>((point >> (j * N_)) & mask);
  return p;
}

std::uint64_t CoveringSpace::to_point(const Packed& p) const {
  std::uint64_t v = 0;
  for (unsigned j = 0; j < n_; ++j) v |= static_cast<std::uint64_t>(p[j]) << (j * N_);
  return v;
}

RankVector CoveringSpace::to_vector(std::uint64_t point) const {
  if (circulant_) throw InvalidArgument("circulant points are not rank vectors");
  return RankVector(field_, n_, to_packed(point));
}

std::string CoveringSpace::describe(std::uint64_t point) const {
  if (circulant_) return to_hex(point);
  return "(" + to_vector(point).to_string() + ")";
}

unsigned covering_radius(const CoveringSpace& space, const Budget& budget) {
  budget.require(space.log2_space() + std::log2(static_cast<double>(space.code_size())) - 4,
                 "covering radius");
  unsigned t = 0;
  for (std::uint64_t x = 0; x < space.space_size(); ++x) {
    t = std::max(t, space.distance_to_code(x));
    if (t == space.max_distance()) break;
  }
  return t;
}

unsigned covering_radius(const LinearRdCode& code, const Budget& budget) {
  const unsigned N = code.field()->degree(), n = code.n(), k = code.k();
  budget.require(static_cast<double>(N) * n, "covering radius");
  if (k == n) return 0;
  const auto& F = *code.field();
  const FieldMatrix& H = code.parity_check();
  const unsigned r = n - k;
  // Syndrome of each unit bit vector, packed N bits per parity row.
  std::vector<std::uint64_t> unit(N * n, 0);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned b = 0; b < N; ++b)
      for (unsigned i = 0; i < r; ++i)
        unit[j * N + b] |= static_cast<std::uint64_t>(F.mul(static_cast<std::uint16_t>(1u << b), H(i, j))) << (i * N);

  std::vector<std::uint8_t> least(std::size_t{1} << (N * r), 0xff);
  constexpr std::size_t kChunk = 4096;
  std::vector<std::vector<std::uint16_t>> cols(n, std::vector<std::uint16_t>(kChunk));
  std::vector<std::uint64_t> syn(kChunk);
  std::vector<std::uint8_t> ranks(kChunk);
  const std::uint16_t* ptrs[kMaxLength];
  for (unsigned j = 0; j < n; ++j) ptrs[j] = cols[j].data();
  const Packed zero{};
  std::size_t fill = 0;
  auto flush = [&] {
    kernels::batch_rank(ptrs, n, N, zero.data(), fill, ranks.data());
    for (std::size_t i = 0; i < fill; ++i) least[syn[i]] = std::min(least[syn[i]], ranks[i]);
    fill = 0;
  };
  Packed x{};
  std::uint64_t s = 0;
  const std::uint64_t total = std::uint64_t{1} << (N * n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (idx) {
      const unsigned f = static_cast<unsigned>(std::countr_zero(idx));
      x[f / N] ^= static_cast<std::uint16_t>(1u << (f % N));
      s ^= unit[f];
    }
    for (unsigned j = 0; j < n; ++j) cols[j][fill] = x[j];
    syn[fill] = s;
    if (++fill == kChunk) flush();
  }
  if (fill) flush();
  return *std::max_element(least.begin(), least.end());
}

unsigned covering_radius(const CirculantRankCode& code, const Budget& budget) {
  return covering_radius(CoveringSpace::of(code, budget), budget);
}

namespace {

using Mask = std::vector<std::uint64_t>;

bool is_zero(const Mask& m) {
  for (auto w : m)
    if (w) return false;
  return true;
}

unsigned cov_points(const CoveringSpace& space, const std::vector<std::uint64_t>& S) {
  std::vector<std::uint8_t> worst(space.code_size(), 0), d(space.code_size());
  for (auto s : S) {
    space.distances(s, d.data());
    for (std::size_t j = 0; j < d.size(); ++j) worst[j] = std::max(worst[j], d[j]);
  }
  return *std::min_element(worst.begin(), worst.end());
}

// Search for at most m masks (distinct indices) whose AND is zero.
bool find_disjoint(const std::vector<Mask>& masks, unsigned m, std::vector<std::size_t>& chosen,
                   const Mask& acc, std::size_t start) {
  if (is_zero(acc)) return true;
  if (chosen.size() == m) return false;
  Mask next(acc.size());
  for (std::size_t i = start; i < masks.size(); ++i) {
    bool shrinks = false;
    for (std::size_t w = 0; w < acc.size(); ++w) {
      next[w] = acc[w] & masks[i][w];
      shrinks |= next[w] != acc[w];
    }
    if (!shrinks) continue;
    chosen.push_back(i);
    if (find_disjoint(masks, m, chosen, next, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

// Pairs only, codes of at most 24 words: subset-sum transform over present masks.
bool find_disjoint_pair_small(const std::vector<Mask>& masks, std::size_t code_size,
                              std::vector<std::size_t>& chosen) {
  const std::size_t full = (std::size_t{1} << code_size) - 1;
  std::vector<std::int32_t> below(full + 1, -1);  // some mask that is a subset of this set
  for (std::size_t i = 0; i < masks.size(); ++i) below[masks[i][0]] = static_cast<std::int32_t>(i);
  for (std::size_t b = 0; b < code_size; ++b)
    for (std::size_t s = 0; s <= full; ++s)
      if ((s >> b) & 1 && below[s] < 0) below[s] = below[s ^ (std::size_t{1} << b)];
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const std::int32_t j = below[full & ~masks[i][0]];
    if (j >= 0) {
      chosen = {std::min<std::size_t>(i, j), std::max<std::size_t>(i, j)};
      return true;
    }
  }
  return false;
}

}  // namespace

CoveringReport multi_covering_exact(const CoveringSpace& space, unsigned m, const Budget& budget) {
  if (m < 1) throw InvalidArgument("multiplicity must be at least 1");
  if (m > space.space_size()) throw InvalidArgument("multiplicity exceeds the number of points");
  const std::size_t C = space.code_size();
  budget.require(space.log2_space() + std::log2(static_cast<double>(C)) - 4, "multi-covering radius");

  // Distance profile of every point, computed once.
  const std::uint64_t P = space.space_size();
  std::vector<std::uint8_t> prof(P * C);
  for (std::uint64_t x = 0; x < P; ++x) space.distances(x, prof.data() + x * C);

  CoveringReport rep;
  rep.code_size = C;
  rep.m = m;
  const std::size_t words = (C + 63) / 64;
  std::vector<std::uint64_t> last_witness;
  for (unsigned t = 0;; ++t) {
    // Ball masks {c : d(c,x) <= t}, deduplicated with one representative point each.
    std::map<Mask, std::uint64_t> classes;
    for (std::uint64_t x = 0; x < P; ++x) {
      Mask mk(words, 0);
      const std::uint8_t* d = prof.data() + x * C;
      for (std::size_t j = 0; j < C; ++j)
        if (d[j] <= t) mk[j / 64] |= std::uint64_t{1} << (j % 64);
      classes.emplace(std::move(mk), x);
    }
    std::vector<Mask> masks;
    std::vector<std::uint64_t> reps;
    for (auto& [mk, x] : classes) {
      masks.push_back(mk);
      reps.push_back(x);
    }
    std::vector<std::size_t> chosen;
    bool found;
    if (m == 2 && C <= 24) {
      found = false;
      for (std::size_t i = 0; i < masks.size() && !found; ++i)
        if (is_zero(masks[i])) {
          chosen = {i};
          found = true;
        }
      if (!found) found = find_disjoint_pair_small(masks, C, chosen);
    } else {
      const double combos = std::lgamma(masks.size() + 1.0) - std::lgamma(masks.size() - std::min<double>(m, masks.size()) + 1.0) -
                            std::lgamma(std::min<double>(m, masks.size()) + 1.0);
      budget.require(combos / std::log(2.0), "multi-covering m-set search");
      Mask all(words, ~std::uint64_t{0});
      found = find_disjoint(masks, m, chosen, all, 0);
    }
    if (!found) {
      rep.t = t;
      break;
    }
    last_witness.clear();
    for (auto i : chosen) last_witness.push_back(reps[i]);
  }

  // Witness: the m-set forcing cov > t-1, padded with further distinct points.
  std::set<std::uint64_t> w(last_witness.begin(), last_witness.end());
  for (std::uint64_t x = 0; w.size() < m; ++x) w.insert(x);
  rep.witness.assign(w.begin(), w.end());
  return rep;
}

CoveringReport multi_covering_sampled(const CoveringSpace& space, unsigned m, std::uint64_t samples,
                                      std::uint64_t seed) {
  if (m < 1) throw InvalidArgument("multiplicity must be at least 1");
  if (m > space.space_size()) throw InvalidArgument("multiplicity exceeds the number of points");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, space.space_size() - 1);
  CoveringReport rep;
  rep.code_size = space.code_size();
  rep.m = m;
  rep.exact = false;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::set<std::uint64_t> S;
    while (S.size() < m) S.insert(pick(rng));
    std::vector<std::uint64_t> pts(S.begin(), S.end());
    const unsigned c = cov_points(space, pts);
    if (rep.witness.empty() || c > rep.t) {
      rep.t = c;
      rep.witness = pts;
    }
  }
  return rep;
}

std::optional<BigInt> sphere_bound_min_K(unsigned n, unsigned t, unsigned m, unsigned N) {
  if (m < 1) throw InvalidArgument("multiplicity must be at least 1");
  if (n < 1 || n > N) throw InvalidArgument("need 1 <= n <= N");
  if (t >= n) return BigInt(1);
  if (m >= 2 && t < (n + 1) / 2) return std::nullopt;
  const BigInt total = pow2(N * n);
  const BigInt V = sphere_volume(n, t, N);
  if (V < m || total < m) return std::nullopt;
  const BigInt num = binomial(total, m), den = binomial(V, m);
  if (num > total * den) return std::nullopt;
  return (num + den - 1) / den;
}

BigInt rep_upper_bound_K(unsigned n, unsigned m, unsigned N) {
  if (n < 1 || n > N) throw InvalidArgument("need 1 <= n <= N");
  const BigInt b = BigInt(m) * count_rank_exactly(n, n, N) + 1;
  if (b > pow2(N * n)) throw InvalidArgument("m * L_n(n) + 1 exceeds the space size; bound is meaningless");
  return b;
}

MinKResult exact_min_K(unsigned n, unsigned t, unsigned m, unsigned N) {
  if (n < 1 || n > N) throw InvalidArgument("need 1 <= n <= N");
  if (N * n > 4) throw BudgetExceeded("exact_min_K needs 2^{Nn} <= 16");
  if (m < 1) throw InvalidArgument("multiplicity must be at least 1");
  const auto ctx = FieldContext::make(N);
  std::vector<Packed> all;
  const unsigned P = 1u << (N * n);
  for (std::uint64_t x = 0; x < P; ++x) {
    Packed p{};
    for (unsigned j = 0; j < n; ++j) p[j] = static_cast<std::uint16_t>((x >> (j * N)) & ctx->mask());
    all.push_back(p);
  }
  MinKResult res;
  if (m > P) return res;
  auto dist = [&](unsigned a, unsigned b) {
    Packed d{};
    for (unsigned j = 0; j < n; ++j) d[j] = all[a][j] ^ all[b][j];
    return rank_of(d, n);
  };
  std::vector<std::uint32_t> ball(P, 0);  // ball[s] = {c : d(c,s) <= t}
  for (unsigned s = 0; s < P; ++s)
    for (unsigned c = 0; c < P; ++c)
      if (dist(s, c) <= t) ball[s] |= 1u << c;
  // Every m-set must have a common coverer in C: a hitting-set condition.
  std::vector<std::uint32_t> coverers;
  std::vector<unsigned> idx(m);
  auto rec = [&](auto&& self, unsigned depth, unsigned start, std::uint32_t acc) -> void {
    if (depth == m) {
      coverers.push_back(acc);
      return;
    }
    for (unsigned s = start; s < P; ++s) self(self, depth + 1, s + 1, acc & ball[s]);
  };
  rec(rec, 0, 0, P == 32 ? ~0u : (1u << P) - 1);
  std::sort(coverers.begin(), coverers.end());
  coverers.erase(std::unique(coverers.begin(), coverers.end()), coverers.end());
  for (unsigned size = 1; size <= P; ++size) {
    for (std::uint64_t C = 1; C < (std::uint64_t{1} << P); ++C) {
      if (static_cast<unsigned>(std::popcount(C)) != size) continue;
      bool ok = true;
      for (auto cv : coverers)
        if (!(cv & C)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      res.K = size;
      for (unsigned c = 0; c < P; ++c)
        if ((C >> c) & 1) res.witness.push_back(c);
      return res;
    }
  }
  return res;
}

std::optional<unsigned> min_linear_dimension(unsigned n, unsigned t, unsigned m, FieldRef ctx) {
  const unsigned N = ctx->degree();
  if (n < 1 || n > N) throw InvalidArgument("need 1 <= n <= N");
  if (N * n > 8) throw BudgetExceeded("linear dimension search needs Nn <= 8");
  const unsigned q = ctx->size();
  for (unsigned k = 1; k <= n; ++k) {
    // Reduced echelon generators: pivot set plus free entries right of each pivot.
    for (std::uint32_t piv = 0; piv < (1u << n); ++piv) {
      if (static_cast<unsigned>(std::popcount(piv)) != k) continue;
      std::vector<unsigned> pc;
      for (unsigned c = 0; c < n; ++c)
        if ((piv >> c) & 1) pc.push_back(c);
      std::vector<std::pair<unsigned, unsigned>> free;
      for (unsigned r = 0; r < k; ++r)
        for (unsigned c = pc[r] + 1; c < n; ++c)
          if (!((piv >> c) & 1)) free.emplace_back(r, c);
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < free.size(); ++i) combos *= q;
      for (std::uint64_t v = 0; v < combos; ++v) {
        FieldMatrix G(ctx, k, n);
        for (unsigned r = 0; r < k; ++r) G.set(r, pc[r], 1);
        std::uint64_t rest = v;
        for (auto [r, c] : free) {
          G.set(r, c, static_cast<std::uint16_t>(rest % q));
          rest /= q;
        }
        const LinearRdCode code(std::move(G));
        if (multi_covering_exact(CoveringSpace::of(code), m).t <= t) return k;
      }
    }
  }
  return std::nullopt;
}

}  // namespace rankcode
