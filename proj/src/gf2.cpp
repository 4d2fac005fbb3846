#include "rankcode/gf2.hpp"

#include "rankcode/error.hpp"

#include <bit>

namespace rankcode {

unsigned column_rank(std::span<const std::uint16_t> cols) {
  std::uint16_t basis[16] = {};
  unsigned r = 0;
  for (std::uint16_t v : cols) {
    while (v) {
      int h = 15 - std::countl_zero(v);
      if (!basis[h]) {
        basis[h] = v;
        ++r;
        break;
      }
      v ^= basis[h];
    }
  }
  return r;
}

Gf2Matrix::Gf2Matrix(unsigned rows, unsigned cols) : rows_(rows), cols_(cols), data_(rows, 0) {
  if (cols > kMaxCols) throw InvalidArgument("Gf2Matrix supports at most 64 columns");
}

Gf2Matrix Gf2Matrix::identity(unsigned n) {
  Gf2Matrix m(n, n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void Gf2Matrix::set(unsigned r, unsigned c, bool v) {
  if (v) data_[r] |= std::uint64_t{1} << c;
  else data_[r] &= ~(std::uint64_t{1} << c);
}

void Gf2Matrix::set_row(unsigned r, std::uint64_t bits) {
  if (cols_ < 64) bits &= (std::uint64_t{1} << cols_) - 1;
  data_[r] = bits;
}

Gf2Matrix Gf2Matrix::transpose() const {
  if (rows_ > kMaxCols) throw InvalidArgument("transpose would exceed 64 columns");
  Gf2Matrix t(cols_, rows_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

unsigned gf2_rank(const Gf2Matrix& m) {
  std::vector<std::uint64_t> rows;
  rows.reserve(m.rows());
  for (unsigned r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  unsigned rank = 0;
  for (unsigned c = 0; c < m.cols() && rank < rows.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t p = rank;
    while (p < rows.size() && !(rows[p] & bit)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && (rows[i] & bit)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

RankVector::RankVector(FieldRef ctx, std::span<const std::uint16_t> coords)
    : ctx_(std::move(ctx)), n_(static_cast<unsigned>(coords.size())) {
  if (!ctx_) throw InvalidArgument("vector without field");
  if (n_ < 1 || n_ > kMaxLength) throw InvalidArgument("vector length must be 1..16");
  for (unsigned i = 0; i < n_; ++i) {
    if (coords[i] & ~ctx_->mask()) throw InvalidArgument("coordinate outside the field");
    c_[i] = coords[i];
  }
}

RankVector::RankVector(FieldRef ctx, unsigned n, const Packed& packed) : ctx_(std::move(ctx)), n_(n) {
  if (!ctx_) throw InvalidArgument("vector without field");
  if (n_ < 1 || n_ > kMaxLength) throw InvalidArgument("vector length must be 1..16");
  for (unsigned i = 0; i < n_; ++i) {
    if (packed[i] & ~ctx_->mask()) throw InvalidArgument("coordinate outside the field");
    c_[i] = packed[i];
  }
}

RankVector RankVector::zero(FieldRef ctx, unsigned n) { return RankVector(std::move(ctx), n, Packed{}); }

RankVector RankVector::from_elements(std::span<const FieldElement> elems) {
  if (elems.empty()) throw InvalidArgument("empty vector");
  std::vector<std::uint16_t> raw;
  for (const auto& e : elems) {
    require_same_field(elems[0].context(), e.context());
    raw.push_back(e.bits());
  }
  return RankVector(elems[0].context(), raw);
}

bool RankVector::is_zero() const {
  for (unsigned i = 0; i < n_; ++i)
    if (c_[i]) return false;
  return true;
}

RankVector RankVector::operator+(const RankVector& o) const {
  require_same_field(ctx_, o.ctx_);
  if (n_ != o.n_) throw InvalidArgument("vector lengths differ");
  Packed p{};
  for (unsigned i = 0; i < n_; ++i) p[i] = c_[i] ^ o.c_[i];
  return RankVector(ctx_, n_, p);
}

RankVector RankVector::scaled(std::uint16_t a) const {
  Packed p{};
  for (unsigned i = 0; i < n_; ++i) p[i] = ctx_->mul(a, c_[i]);
  return RankVector(ctx_, n_, p);
}

bool RankVector::operator==(const RankVector& o) const {
  return n_ == o.n_ && c_ == o.c_ && same_field(ctx_, o.ctx_);
}

std::string RankVector::to_string() const {
  std::string s;
  for (unsigned i = 0; i < n_; ++i) {
    if (i) s += ' ';
    s += to_hex(c_[i]);
  }
  return s;
}

Gf2Matrix expand(const RankVector& x) {
  const unsigned N = x.field()->degree();
  Gf2Matrix m(N, x.length());
  for (unsigned j = 0; j < x.length(); ++j)
    for (unsigned b = 0; b < N; ++b)
      if ((x[j] >> b) & 1) m.set(b, j, true);
  return m;
}

}  // namespace rankcode
