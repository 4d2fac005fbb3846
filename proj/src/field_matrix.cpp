#include "rankcode/field_matrix.hpp"

#include "rankcode/error.hpp"

namespace rankcode {

FieldMatrix::FieldMatrix(FieldRef ctx, unsigned rows, unsigned cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (!ctx_) throw InvalidArgument("matrix without field");
}

FieldMatrix::FieldMatrix(FieldRef ctx, unsigned rows, unsigned cols, std::vector<std::uint16_t> data)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (!ctx_) throw InvalidArgument("matrix without field");
  if (data_.size() != static_cast<std::size_t>(rows) * cols) throw InvalidArgument("matrix data size mismatch");
  for (auto v : data_)
    if (v & ~ctx_->mask()) throw InvalidArgument("matrix entry outside the field");
}

FieldMatrix FieldMatrix::identity(FieldRef ctx, unsigned n) {
  FieldMatrix m(std::move(ctx), n, n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<RankVector>& rows) {
  if (rows.empty()) throw InvalidArgument("matrix needs at least one row");
  const unsigned n = rows[0].length();
  FieldMatrix m(rows[0].field(), static_cast<unsigned>(rows.size()), n);
  for (unsigned r = 0; r < rows.size(); ++r) {
    require_same_field(rows[0].field(), rows[r].field());
    if (rows[r].length() != n) throw InvalidArgument("rows of different lengths");
    for (unsigned c = 0; c < n; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void FieldMatrix::set(unsigned r, unsigned c, std::uint16_t v) {
  if (v & ~ctx_->mask()) throw InvalidArgument("matrix entry outside the field");
  data_[r * cols_ + c] = v;
}

RankVector FieldMatrix::row_vector(unsigned r) const {
  return RankVector(ctx_, std::span<const std::uint16_t>(data_.data() + r * cols_, cols_));
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(ctx_, cols_, rows_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  require_same_field(ctx_, o.ctx_);
  if (cols_ != o.rows_) throw InvalidArgument("matrix shapes do not match");
  FieldMatrix p(ctx_, rows_, o.cols_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned c = 0; c < o.cols_; ++c) {
      std::uint16_t acc = 0;
      for (unsigned i = 0; i < cols_; ++i) acc ^= ctx_->mul((*this)(r, i), o(i, c));
      p.data_[r * o.cols_ + c] = acc;
    }
  return p;
}

bool FieldMatrix::is_zero() const {
  for (auto v : data_)
    if (v) return false;
  return true;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ && same_field(ctx_, o.ctx_);
}

Echelon row_reduce(const FieldMatrix& m) {
  const auto& F = *m.field();
  const unsigned R = m.rows(), C = m.cols();
  std::vector<std::vector<std::uint16_t>> a(R, std::vector<std::uint16_t>(C));
  for (unsigned r = 0; r < R; ++r)
    for (unsigned c = 0; c < C; ++c) a[r][c] = m(r, c);

  std::vector<unsigned> pivots;
  unsigned rank = 0;
  for (unsigned c = 0; c < C && rank < R; ++c) {
    unsigned p = rank;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[rank]);
    const std::uint16_t inv = F.inv(a[rank][c]);
    for (auto& v : a[rank]) v = F.mul(v, inv);
    for (unsigned r = 0; r < R; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::uint16_t f = a[r][c];
      for (unsigned j = 0; j < C; ++j) a[r][j] ^= F.mul(f, a[rank][j]);
    }
    pivots.push_back(c);
    ++rank;
  }
  FieldMatrix red(m.field(), rank, C);
  for (unsigned r = 0; r < rank; ++r)
    for (unsigned c = 0; c < C; ++c) red.set(r, c, a[r][c]);
  return {std::move(red), std::move(pivots)};
}

unsigned field_rank(const FieldMatrix& m) { return static_cast<unsigned>(row_reduce(m).pivots.size()); }

FieldMatrix null_space(const FieldMatrix& m) {
  const Echelon e = row_reduce(m);
  const unsigned C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<unsigned> free_cols;
  for (unsigned c = 0; c < C; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FieldMatrix basis(m.field(), static_cast<unsigned>(free_cols.size()), C);
  for (unsigned i = 0; i < free_cols.size(); ++i) {
    const unsigned f = free_cols[i];
    basis.set(i, f, 1);
    // Pivot variable r equals the sum of its row's free entries (signs vanish in char 2).
    for (unsigned r = 0; r < e.pivots.size(); ++r) basis.set(i, e.pivots[r], e.reduced(r, f));
  }
  return basis;
}

std::vector<std::uint16_t> times_transpose(const RankVector& x, const FieldMatrix& m) {
  require_same_field(x.field(), m.field());
  if (x.length() != m.cols()) throw InvalidArgument("vector length does not match matrix");
  const auto& F = *m.field();
  std::vector<std::uint16_t> s(m.rows(), 0);
  for (unsigned r = 0; r < m.rows(); ++r)
    for (unsigned c = 0; c < m.cols(); ++c) s[r] ^= F.mul(x[c], m(r, c));
  return s;
}

}  // namespace rankcode
