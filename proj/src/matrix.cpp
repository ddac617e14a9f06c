#include "quiverfg/matrix.hpp"

#include <utility>

#include "quiverfg/error.hpp"

namespace qfg {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<long>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Matrix m(f, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "set_column");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (sgn(b) == 0) continue;
        r(i, j) += a * b;
      }
    }
  }
  if (field_.is_prime_field())
    for (auto& x : r.data_) field_.reduce(x);
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(*this);
  for (auto& x : r.data_)
    if (sgn(x) != 0) x = field_.mul(x, s);
  return r;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  Vector r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (sgn(a) != 0) r[i] += a * v[j];
    }
  }
  if (field_.is_prime_field())
    for (auto& x : r) field_.reduce(x);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error(ErrorCode::DimensionMismatch, "set_block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix r(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(i, cols[j]);
  return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix r(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(rows[i], j);
  return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "hstack");
  Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(0, a.cols_, b);
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "vstack");
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, 0, b);
  return r;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, a.cols_, b);
  return r;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

namespace {

// In-place reduction of the first `ncols` columns of m (the remaining columns
// are carried along). Returns pivot columns.
std::vector<std::size_t> reduce_in_place(Matrix& m, std::size_t ncols) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Scalar inv = f.inv(m(r, c));
    support.clear();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (sgn(m(r, j)) == 0) continue;
      if (j != c) m(r, j) = f.mul(m(r, j), inv);
      support.push_back(j);
    }
    m(r, c) = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Scalar factor = m(i, c);
      for (std::size_t j : support) f.sub_mul(m(i, j), factor, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RowEchelon rref(Matrix m) {
  auto pivots = reduce_in_place(m, m.cols());
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  // Eliminate along the shorter side.
  if (m.rows() < m.cols()) return rref(m.transpose()).pivots.size();
  return rref(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = f.neg(e.reduced(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix kernel_matrix(const Matrix& m) { return Matrix::from_columns(m.field(), m.cols(), kernel_basis(m)); }

std::optional<Vector> solve_right(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_right: rhs length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  auto pivots = reduce_in_place(aug, m.cols());
  for (std::size_t i = pivots.size(); i < m.rows(); ++i)
    if (sgn(aug(i, m.cols())) != 0) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

std::vector<std::size_t> pivot_columns(const Matrix& m) { return rref(m).pivots; }

Matrix image_matrix(const Matrix& m) { return m.select_columns(pivot_columns(m)); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug = Matrix::hstack(m, Matrix::identity(m.field(), n));
  auto pivots = reduce_in_place(aug, n);
  if (pivots.size() != n) return std::nullopt;
  return aug.block(0, n, n, n);
}

Vector zero_vector(const Field&, std::size_t n) { return Vector(n); }

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vector add(const Field& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vector sub(const Field& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vector scale(const Field& f, const Scalar& s, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) r[i] = f.mul(s, a[i]);
  return r;
}

LinearSolver::LinearSolver(const Matrix& m) : field_(m.field()), rows_(m.rows()), cols_(m.cols()) {
  Matrix aug = Matrix::hstack(m, Matrix::identity(m.field(), m.rows()));
  pivots_ = reduce_in_place(aug, m.cols());
  reduced_ = aug.block(0, 0, rows_, cols_);
  transform_ = aug.block(0, cols_, rows_, rows_);
}

std::optional<Vector> LinearSolver::solve(const Vector& b) const {
  if (b.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "LinearSolver: rhs length");
  Vector y = transform_.apply(b);
  for (std::size_t i = pivots_.size(); i < rows_; ++i)
    if (sgn(y[i]) != 0) return std::nullopt;
  Vector x(cols_);
  for (std::size_t k = 0; k < pivots_.size(); ++k) x[pivots_[k]] = y[k];
  return x;
}

bool SpanBasis::add(const Vector& v) {
  if (v.size() != length_) throw Error(ErrorCode::DimensionMismatch, "SpanBasis::add");
  Vector r = v;
  Vector combo(generators_.size() + 1);
  combo.back() = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < length_; ++j)
      if (sgn(rows_[i][j]) != 0) field_.sub_mul(r[j], c, rows_[i][j]);
    for (std::size_t j = 0; j < combos_[i].size(); ++j)
      if (sgn(combos_[i][j]) != 0) field_.sub_mul(combo[j], c, combos_[i][j]);
  }
  std::size_t p = 0;
  while (p < length_ && sgn(r[p]) == 0) ++p;
  if (p == length_) return false;
  Scalar inv = field_.inv(r[p]);
  for (auto& x : r)
    if (sgn(x) != 0) x = field_.mul(x, inv);
  for (auto& x : combo)
    if (sgn(x) != 0) x = field_.mul(x, inv);
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  combos_.push_back(std::move(combo));
  generators_.push_back(v);
  return true;
}

Vector SpanBasis::reduce(const Vector& v) const {
  Vector r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < length_; ++j)
      if (sgn(rows_[i][j]) != 0) field_.sub_mul(r[j], c, rows_[i][j]);
  }
  return r;
}

bool SpanBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::optional<Vector> SpanBasis::coordinates(const Vector& v) const {
  if (v.size() != length_) throw Error(ErrorCode::DimensionMismatch, "SpanBasis::coordinates");
  Vector r = v;
  Vector coords(generators_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < length_; ++j)
      if (sgn(rows_[i][j]) != 0) field_.sub_mul(r[j], c, rows_[i][j]);
    for (std::size_t j = 0; j < combos_[i].size(); ++j)
      if (sgn(combos_[i][j]) != 0) field_.add_mul(coords[j], c, combos_[i][j]);
  }
  if (!is_zero(r)) return std::nullopt;
  return coords;
}

}  // namespace qfg
