#include "rankcode/extremal.hpp"

#include "rankcode/kernels.hpp"
#include "rankcode/rank_metric.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace rankcode {

namespace {

using Bits = std::vector<std::uint64_t>;

// Fully reduced xor basis of a set of words, as a canonical subspace key.
std::vector<std::uint32_t> subspace_key(std::vector<std::uint32_t> words) {
  std::vector<std::uint32_t> basis;
  for (auto v : words) {
    for (auto b : basis)
      if (v & (1u << (31 - std::countl_zero(b)))) v ^= b;
    if (!v) continue;
    const std::uint32_t top = 1u << (31 - std::countl_zero(v));
    for (auto& b : basis)
      if (b & top) b ^= v;
    basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

struct Partition {
  std::vector<std::uint32_t> block;  // block id per vertex
  std::uint32_t blocks = 0;
};

template <class Key>
Partition make_partition(std::size_t count, Key&& key) {
  using K = decltype(key(std::size_t{0}));
  std::map<K, std::uint32_t> ids;
  Partition p;
  p.block.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto [it, fresh] = ids.emplace(key(i), static_cast<std::uint32_t>(ids.size()));
    p.block[i] = it->second;
  }
  p.blocks = static_cast<std::uint32_t>(ids.size());
  return p;
}

class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bits> adj, std::vector<Partition> parts)
      : adj_(std::move(adj)), parts_(std::move(parts)), V_(adj_.size()), W_((V_ + 63) / 64) {
    stamp_.resize(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) stamp_[i].assign(parts_[i].blocks, 0);
  }

  // Largest clique; best starts as the incumbent lower bound.
  std::vector<std::size_t> run(std::vector<std::size_t> incumbent) {
    best_ = std::move(incumbent);
    Bits P(W_, 0);
    for (std::size_t v = 0; v < V_; ++v) P[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> Q;
    expand(Q, P);
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static bool empty(const Bits& b) {
    for (auto w : b)
      if (w) return false;
    return true;
  }

  std::vector<std::size_t> members(const Bits& P) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < W_; ++w)
      for (std::uint64_t x = P[w]; x; x &= x - 1) out.push_back(w * 64 + std::countr_zero(x));
    return out;
  }

  // Vertices of P with an upper bound on the clique size within the prefix of the
  // order ending at each vertex (colour number).
  void colour(const Bits& P, std::vector<std::size_t>& order, std::vector<unsigned>& colours) {
    order.clear();
    colours.clear();
    Bits U = P;
    unsigned c = 0;
    while (!empty(U)) {
      ++c;
      Bits Qc = U;
      for (std::size_t w = 0; w < W_; ++w) {
        while (Qc[w]) {
          const std::size_t v = w * 64 + std::countr_zero(Qc[w]);
          Qc[w] &= Qc[w] - 1;
          U[v / 64] &= ~(std::uint64_t{1} << (v % 64));
          for (std::size_t u = w; u < W_; ++u) Qc[u] &= ~adj_[v][u];
          order.push_back(v);
          colours.push_back(c);
        }
      }
    }
    // A block partition may colour P with fewer classes.
    const auto vs = members(P);
    std::size_t best_part = parts_.size();
    unsigned best_count = c;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const unsigned gen = ++generation_;
      unsigned cnt = 0;
      for (auto v : vs) {
        auto& s = stamp_[i][parts_[i].block[v]];
        if (s != gen) {
          s = gen;
          ++cnt;
        }
      }
      if (cnt < best_count) {
        best_count = cnt;
        best_part = i;
      }
    }
    if (best_part == parts_.size()) return;
    const auto& blk = parts_[best_part].block;
    std::vector<std::size_t> sorted = vs;
    std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) { return blk[a] < blk[b]; });
    order.clear();
    colours.clear();
    unsigned k = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i == 0 || blk[sorted[i]] != blk[sorted[i - 1]]) ++k;
      order.push_back(sorted[i]);
      colours.push_back(k);
    }
  }

  void expand(std::vector<std::size_t>& Q, Bits& P) {
    ++nodes_;
    std::vector<std::size_t> order;
    std::vector<unsigned> colours;
    colour(P, order, colours);
    Bits next(W_);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (Q.size() + colours[i] <= best_.size()) return;
      const std::size_t v = order[i];
      Q.push_back(v);
      for (std::size_t w = 0; w < W_; ++w) next[w] = P[w] & adj_[v][w];
      if (empty(next)) {
        if (Q.size() > best_.size()) best_ = Q;
      } else {
        Bits sub = next;
        expand(Q, sub);
      }
      Q.pop_back();
      P[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::vector<Bits> adj_;
  std::vector<Partition> parts_;
  std::size_t V_, W_;
  std::vector<std::vector<unsigned>> stamp_;
  unsigned generation_ = 0;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

unsigned dist(const Packed& a, const Packed& b, unsigned n) {
  Packed x{};
  for (unsigned j = 0; j < n; ++j) x[j] = a[j] ^ b[j];
  return rank_of(x, n);
}

}  // namespace

BigInt a_upper_bound(unsigned n, unsigned d, unsigned N) {
  if (d < 1 || d > n) throw InvalidArgument("need 1 <= d <= n");
  BigInt b = 1;
  for (unsigned i = 0; i <= n - d; ++i) b *= pow2(N) - pow2(i);
  return b;
}

bool is_constant_rank_set(const ConstantRankSet& s) {
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (rank_norm(s.members[i]) != s.r) return false;
    for (std::size_t j = i + 1; j < s.members.size(); ++j)
      if (rank_distance(s.members[i], s.members[j]) < s.d) return false;
  }
  return true;
}

ASearchResult a_search(FieldRef ctx, unsigned n, unsigned r, unsigned d, SearchMode mode, const Budget& budget) {
  const unsigned N = ctx->degree();
  if (n < 1 || n > N) throw InvalidArgument("need 1 <= n <= N");
  ASearchResult res;
  res.exact = mode == SearchMode::kExact;
  res.witness.n = n;
  res.witness.r = r;
  res.witness.d = d;
  if (r > std::min(n, N)) return res;
  budget.require(static_cast<double>(N) * n, "constant-rank vertex enumeration");

  // Vertices in block order: grouped by row space (GF(2) relations among coordinates).
  std::vector<Packed> verts;
  const std::uint64_t total = std::uint64_t{1} << (N * n);
  for (std::uint64_t x = 0; x < total; ++x) {
    Packed p{};
    for (unsigned j = 0; j < n; ++j) p[j] = static_cast<std::uint16_t>((x >> (j * N)) & ctx->mask());
    if (rank_of(p, n) == r) verts.push_back(p);
  }
  auto row_key = [&](const Packed& p) {
    std::vector<std::uint32_t> rows(N, 0);
    for (unsigned j = 0; j < n; ++j)
      for (unsigned b = 0; b < N; ++b)
        if ((p[j] >> b) & 1) rows[b] |= 1u << j;
    return subspace_key(rows);
  };
  auto col_key = [&](const Packed& p) { return subspace_key(std::vector<std::uint32_t>(p.begin(), p.begin() + n)); };
  std::stable_sort(verts.begin(), verts.end(), [&](const Packed& a, const Packed& b) { return row_key(a) < row_key(b); });

  auto emit = [&](const std::vector<Packed>& set) {
    res.size = set.size();
    for (const auto& p : set) res.witness.members.emplace_back(ctx, n, p);
  };

  if (mode == SearchMode::kGreedy || d <= 1 || d > 2 * r) {
    std::vector<Packed> chosen;
    for (const auto& v : verts) {
      bool ok = true;
      for (const auto& c : chosen)
        if (dist(v, c, n) < d) {
          ok = false;
          break;
        }
      if (ok) chosen.push_back(v);
    }
    emit(chosen);
    return res;
  }

  const Packed v0 = verts.front();
  std::vector<Packed> nb;
  for (const auto& v : verts)
    if (dist(v, v0, n) >= d) nb.push_back(v);
  const std::size_t V = nb.size();
  if (static_cast<double>(V) * V > 4.0e9) throw BudgetExceeded("neighbourhood adjacency matrix too large");

  const std::size_t W = (V + 63) / 64;
  std::vector<Bits> adj(V, Bits(W, 0));
  {
    kernels::WordTable table(n, N);
    table.reserve(V);
    for (const auto& v : nb) table.push(v);
    std::vector<std::uint8_t> ranks(V);
    for (std::size_t i = 0; i < V; ++i) {
      table.ranks_against(nb[i], ranks.data());
      for (std::size_t j = 0; j < V; ++j)
        if (ranks[j] >= d) adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }

  std::vector<Partition> parts;
  if (d > r) {
    parts.push_back(make_partition(V, [&](std::size_t i) { return row_key(nb[i]); }));
    parts.push_back(make_partition(V, [&](std::size_t i) { return col_key(nb[i]); }));
  }
  // Vertices agreeing on n-d+1 coordinates are at distance <= d-1.
  parts.push_back(make_partition(V, [&](std::size_t i) {
    return std::vector<std::uint16_t>(nb[i].begin(), nb[i].begin() + (n - d + 1));
  }));

  // Incumbents: greedy clique, and the scalar multiples of v0 when d <= r.
  std::vector<std::size_t> inc;
  for (std::size_t i = 0; i < V; ++i) {
    bool ok = true;
    for (auto j : inc)
      if (!((adj[i][j / 64] >> (j % 64)) & 1)) {
        ok = false;
        break;
      }
    if (ok) inc.push_back(i);
  }
  if (d <= r) {
    std::vector<std::size_t> orbit;
    for (std::uint32_t a = 2; a < ctx->size(); ++a) {
      Packed s{};
      for (unsigned j = 0; j < n; ++j) s[j] = ctx->mul(static_cast<std::uint16_t>(a), v0[j]);
      auto it = std::find(nb.begin(), nb.end(), s);
      if (it != nb.end()) orbit.push_back(static_cast<std::size_t>(it - nb.begin()));
    }
    bool clique = true;
    for (std::size_t a = 0; a < orbit.size() && clique; ++a)
      for (std::size_t b = a + 1; b < orbit.size(); ++b)
        if (!((adj[orbit[a]][orbit[b] / 64] >> (orbit[b] % 64)) & 1)) {
          clique = false;
          break;
        }
    if (clique && orbit.size() > inc.size()) inc = orbit;
  }

  CliqueSearch search(std::move(adj), std::move(parts));
  const auto best = search.run(inc);
  res.nodes = search.nodes();
  std::vector<Packed> set{v0};
  for (auto i : best) set.push_back(nb[i]);
  emit(set);
  return res;
}

}  // namespace rankcode
