#include "rankcode/amrd.hpp"

#include "rankcode/rank_metric.hpp"

#include <array>

namespace rankcode {

namespace {

using Sums = std::array<std::uint16_t, 3>;

Sums column_sums(const FieldMatrix& H, std::uint32_t P) {
  Sums s{};
  for (unsigned j = 0; j < H.cols(); ++j)
    if ((P >> j) & 1)
      for (unsigned i = 0; i < 3; ++i) s[i] ^= H(i, j);
  return s;
}

bool rank_two(const FieldContext& F, const Sums& a, const Sums& b) {
  for (unsigned i1 = 0; i1 < 3; ++i1)
    for (unsigned i2 = i1 + 1; i2 < 3; ++i2)
      if (F.mul(a[i1], b[i2]) != F.mul(a[i2], b[i1])) return true;
  return false;
}

void check_shape(const FieldMatrix& H) {
  if (H.rows() != 3) throw InvalidArgument("parity-check matrix must have 3 rows");
  if (H.cols() > H.field()->degree()) throw InvalidArgument("n exceeds N");
  if (H.cols() > 20) throw InvalidArgument("too many columns for subset-pair enumeration");
  if (field_rank(H) != 3) throw InvalidArgument("parity-check matrix must have rank 3");
}

}  // namespace

ConditionReport theorem14_condition(const FieldMatrix& H, SubsetMode mode) {
  check_shape(H);
  const auto& F = *H.field();
  const std::uint32_t full = (1u << H.cols()) - 1;
  std::vector<Sums> sums(full + 1);
  for (std::uint32_t P = 1; P <= full; ++P) sums[P] = column_sums(H, P);

  ConditionReport rep;
  std::uint64_t checked = 0;
  for (std::uint32_t p1 = 1; p1 <= full; ++p1)
    for (std::uint32_t p2 = p1 + 1; p2 <= full; ++p2) {
      if (mode == SubsetMode::kDisjoint && (p1 & p2)) continue;
      ++checked;
      if (!rank_two(F, sums[p1], sums[p2])) {
        rep.holds = false;
        rep.violating_pair = std::make_pair(p1, p2);
        rep.pairs_checked = checked;
        return rep;
      }
    }
  rep.pairs_checked = checked;
  return rep;
}

LinearRdCode build_amrd_from_H(const FieldMatrix& H, SubsetMode mode) {
  const ConditionReport rep = theorem14_condition(H, mode);
  if (!rep.holds) throw InvalidArgument("parity-check matrix fails the single-error condition");
  if (H.cols() < 4) throw InvalidArgument("n must be at least 4 for a nonzero code");
  return LinearRdCode(null_space(H));
}

RankVector low_rank_witness(const FieldMatrix& H, std::uint32_t P1, std::uint32_t P2) {
  const auto& F = *H.field();
  const Sums s1 = column_sums(H, P1), s2 = column_sums(H, P2);
  if (rank_two(F, s1, s2)) throw InvalidArgument("pair satisfies the condition; no witness");
  std::uint16_t y1 = 1, y2 = 0;
  for (unsigned i = 0; i < 3; ++i)
    if (s1[i]) {
      y1 = s2[i];
      y2 = s1[i];
      break;
    }
  Packed x{};
  for (unsigned j = 0; j < H.cols(); ++j) {
    if ((P1 >> j) & 1) x[j] ^= y1;
    if ((P2 >> j) & 1) x[j] ^= y2;
  }
  return RankVector(H.field(), H.cols(), x);
}

std::optional<FieldMatrix> search_parity_check(FieldRef ctx, unsigned n, std::mt19937_64& rng,
                                               unsigned max_tries, SubsetMode mode) {
  std::uniform_int_distribution<unsigned> sym(0, ctx->mask());
  for (unsigned t = 0; t < max_tries; ++t) {
    FieldMatrix H(ctx, 3, n);
    for (unsigned r = 0; r < 3; ++r)
      for (unsigned c = 0; c < n; ++c) H.set(r, c, static_cast<std::uint16_t>(sym(rng)));
    if (field_rank(H) != 3) continue;
    if (theorem14_condition(H, mode).holds) return H;
  }
  return std::nullopt;
}

BallComparison rank_vs_hamming_counts(unsigned n, unsigned k, unsigned N) {
  if (k > n || (n - k) % 2 == 0) throw InvalidArgument("n-k must be odd");
  BallComparison b;
  b.r = (n - k - 1) / 2;
  b.rank_ball = sphere_volume(n, b.r, N);
  b.hamming_ball = hamming_ball_count(n, b.r, N);
  return b;
}

}  // namespace rankcode
