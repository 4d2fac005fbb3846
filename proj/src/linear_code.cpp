#include "rankcode/linear_code.hpp"

#include "rankcode/rank_metric.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>

namespace rankcode {

struct LinearRdCode::Cache {
  std::once_flag parity_once;
  std::optional<FieldMatrix> parity;
  std::once_flag dist_once;
  std::vector<std::uint64_t> dist;
  std::once_flag table_once;
  std::unique_ptr<kernels::WordTable> table;
};

LinearRdCode::LinearRdCode(FieldMatrix generator) : G_(std::move(generator)), cache_(std::make_shared<Cache>()) {
  const unsigned N = field()->degree();
  if (k() < 1) throw InvalidArgument("code dimension must be at least 1");
  if (k() > n()) throw InvalidArgument("more generator rows than columns");
  if (n() > N) throw InvalidArgument("code length " + std::to_string(n()) + " exceeds N=" + std::to_string(N));
  if (field_rank(G_) != k()) throw InvalidArgument("generator rows are linearly dependent");
  const auto& F = *field();
  for (unsigned i = 0; i < k(); ++i)
    for (unsigned t = 0; t < N; ++t) {
      Packed p{};
      for (unsigned j = 0; j < n(); ++j) p[j] = F.mul(static_cast<std::uint16_t>(1u << t), G_(i, j));
      basis_.push_back(p);
    }
}

RankVector LinearRdCode::encode(std::span<const std::uint16_t> message) const {
  if (message.size() != k()) throw InvalidArgument("message length must equal k");
  const auto& F = *field();
  Packed p{};
  for (unsigned i = 0; i < k(); ++i) {
    if (message[i] & ~F.mask()) throw InvalidArgument("message symbol outside the field");
    for (unsigned j = 0; j < n(); ++j) p[j] ^= F.mul(message[i], G_(i, j));
  }
  return RankVector(field(), n(), p);
}

bool LinearRdCode::contains(const RankVector& x) const {
  require_same_field(field(), x.field());
  if (x.length() != n()) return false;
  if (k() == n()) return true;
  for (auto s : times_transpose(x, parity_check()))
    if (s) return false;
  return true;
}

std::vector<RankVector> LinearRdCode::codewords(const Budget& budget) const {
  std::vector<RankVector> out;
  for_each_codeword([&](const Packed& p) { out.emplace_back(field(), n(), p); }, budget);
  return out;
}

const kernels::WordTable& LinearRdCode::table(const Budget& budget) const {
  budget.require(log2_size(), "codeword table");
  std::call_once(cache_->table_once, [&] {
    auto t = std::make_unique<kernels::WordTable>(n(), field()->degree());
    t->reserve(std::size_t{1} << basis_.size());
    for_each_codeword([&](const Packed& p) { t->push(p); }, budget);
    cache_->table = std::move(t);
  });
  return *cache_->table;
}

const std::vector<std::uint64_t>& LinearRdCode::rank_distribution(const Budget& budget) const {
  budget.require(log2_size(), "rank distribution");
  std::call_once(cache_->dist_once, [&] {
    std::vector<std::uint64_t> dist(n() + 1, 0);
    constexpr std::size_t kChunk = 4096;
    std::vector<std::vector<std::uint16_t>> cols(n(), std::vector<std::uint16_t>(kChunk));
    std::vector<std::uint8_t> ranks(kChunk);
    const std::uint16_t* ptrs[kMaxLength];
    for (unsigned j = 0; j < n(); ++j) ptrs[j] = cols[j].data();
    const Packed zero{};
    std::size_t fill = 0;
    auto flush = [&] {
      kernels::batch_rank(ptrs, n(), field()->degree(), zero.data(), fill, ranks.data());
      for (std::size_t i = 0; i < fill; ++i) ++dist[ranks[i]];
      fill = 0;
    };
    for_each_codeword(
        [&](const Packed& p) {
          for (unsigned j = 0; j < n(); ++j) cols[j][fill] = p[j];
          if (++fill == kChunk) flush();
        },
        budget);
    if (fill) flush();
    cache_->dist = std::move(dist);
  });
  return cache_->dist;
}

unsigned LinearRdCode::min_distance(const Budget& budget) const {
  const auto& a = rank_distribution(budget);
  for (unsigned s = 1; s < a.size(); ++s)
    if (a[s]) return s;
  return 0;
}

unsigned LinearRdCode::divisor(const Budget& budget) const {
  const auto& a = rank_distribution(budget);
  unsigned g = 0;
  for (unsigned s = 1; s < a.size(); ++s)
    if (a[s]) g = std::gcd(g, s);
  return g;
}

CodeReport LinearRdCode::classify(const Budget& budget) const {
  CodeReport r;
  r.n = n();
  r.k = k();
  r.d = min_distance(budget);
  r.is_mrd = r.d == n() - k() + 1;
  r.is_amrd = r.d + k() >= n();
  r.divisor = divisor(budget);
  r.t = r.d ? (r.d - 1) / 2 : 0;
  return r;
}

StandardForm LinearRdCode::standard_form() const {
  const Echelon e = row_reduce(G_);
  std::vector<unsigned> perm = e.pivots;
  for (unsigned c = 0; c < n(); ++c)
    if (std::find(e.pivots.begin(), e.pivots.end(), c) == e.pivots.end()) perm.push_back(c);
  FieldMatrix g(field(), k(), n());
  for (unsigned r = 0; r < k(); ++r)
    for (unsigned c = 0; c < n(); ++c) g.set(r, c, e.reduced(r, perm[c]));
  return {std::move(g), std::move(perm)};
}

const FieldMatrix& LinearRdCode::parity_check() const {
  std::call_once(cache_->parity_once, [&] {
    const StandardForm sf = standard_form();
    const unsigned r = n() - k();
    FieldMatrix h(field(), r, n());
    // H' = [A^T | I] in permuted coordinates; undo the permutation column by column.
    for (unsigned i = 0; i < r; ++i) {
      for (unsigned j = 0; j < k(); ++j) h.set(i, sf.perm[j], sf.generator(j, k() + i));
      h.set(i, sf.perm[k() + i], 1);
    }
    cache_->parity = std::move(h);
  });
  return *cache_->parity;
}

bool LinearRdCode::is_subcode_of(const LinearRdCode& other) const {
  if (!same_field(field(), other.field()) || n() != other.n() || k() > other.k()) return false;
  std::vector<std::uint16_t> data;
  for (unsigned r = 0; r < other.k(); ++r)
    for (unsigned c = 0; c < n(); ++c) data.push_back(other.G_(r, c));
  for (unsigned r = 0; r < k(); ++r)
    for (unsigned c = 0; c < n(); ++c) data.push_back(G_(r, c));
  return field_rank(FieldMatrix(field(), other.k() + k(), n(), std::move(data))) == other.k();
}

bool LinearRdCode::same_code(const LinearRdCode& other) const {
  return k() == other.k() && is_subcode_of(other);
}

LinearRdCode repetition_code(FieldRef ctx, unsigned n) {
  FieldMatrix g(std::move(ctx), 1, n);
  for (unsigned j = 0; j < n; ++j) g.set(0, j, 1);
  return LinearRdCode(std::move(g));
}

LinearRdCode cartesian_product(const LinearRdCode& c1, const LinearRdCode& c2) {
  require_same_field(c1.field(), c2.field());
  const unsigned n = c1.n() + c2.n();
  if (n > c1.field()->degree())
    throw InvalidArgument("product length " + std::to_string(n) + " exceeds N");
  FieldMatrix g(c1.field(), c1.k() + c2.k(), n);
  for (unsigned r = 0; r < c1.k(); ++r)
    for (unsigned c = 0; c < c1.n(); ++c) g.set(r, c, c1.generator()(r, c));
  for (unsigned r = 0; r < c2.k(); ++r)
    for (unsigned c = 0; c < c2.n(); ++c) g.set(c1.k() + r, c1.n() + c, c2.generator()(r, c));
  return LinearRdCode(std::move(g));
}

LinearRdCode fold_repetition(const LinearRdCode& code, unsigned r) {
  if (r < 1) throw InvalidArgument("fold factor must be at least 1");
  const unsigned n = code.n() * r;
  if (n > code.field()->degree())
    throw InvalidArgument("folded length " + std::to_string(n) + " exceeds N");
  FieldMatrix g(code.field(), code.k(), n);
  for (unsigned i = 0; i < code.k(); ++i)
    for (unsigned c = 0; c < n; ++c) g.set(i, c, code.generator()(i, c % code.n()));
  return LinearRdCode(std::move(g));
}

LinearRdCode random_linear_code(FieldRef ctx, unsigned n, unsigned k, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> sym(0, ctx->mask());
  for (;;) {
    FieldMatrix g(ctx, k, n);
    for (unsigned r = 0; r < k; ++r)
      for (unsigned c = 0; c < n; ++c) g.set(r, c, static_cast<std::uint16_t>(sym(rng)));
    if (field_rank(g) == k) return LinearRdCode(std::move(g));
  }
}

namespace {

void check_word(const LinearRdCode& code, const RankVector& y) {
  require_same_field(code.field(), y.field());
  if (y.length() != code.n()) throw InvalidArgument("received word has the wrong length");
}

}  // namespace

DecodeResult decode_nearest(const LinearRdCode& code, const RankVector& y, const Budget& budget) {
  check_word(code, y);
  const auto& t = code.table(budget);
  const auto ranks = t.ranks_against(y.packed());
  std::size_t best = 0, ties = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < ranks[best]) {
      best = i;
      ties = 1;
    } else if (ranks[i] == ranks[best]) {
      ++ties;
    }
  }
  return {RankVector(code.field(), code.n(), t.get(best)), ranks[best], ties == 1};
}

std::vector<RankVector> nearest_codewords(const LinearRdCode& code, const RankVector& y, const Budget& budget) {
  check_word(code, y);
  const auto& t = code.table(budget);
  const auto ranks = t.ranks_against(y.packed());
  const auto lo = *std::min_element(ranks.begin(), ranks.end());
  std::vector<RankVector> out;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (ranks[i] == lo) out.emplace_back(code.field(), code.n(), t.get(i));
  return out;
}

}  // namespace rankcode
