#include "qcent/zq.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "qcent/error.hpp"

namespace qcent::zq {

Ring::Ring(Int p, int d) : p_(p), d_(d), q_(1) {
  if (p < 2 || d < 1) throw DomainError("Z/p^d needs p >= 2 and d >= 1");
  for (int i = 0; i < d; ++i) q_ *= p;
}

int Ring::valuation(Int x) const {
  x = reduce(x);
  if (x == 0) return d_;
  int v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

Int Ring::inverse(Int unit) const {
  Int a = reduce(unit);
  if (a % p_ == 0) throw DomainError("element is not a unit mod q");
  // extended Euclid on (a, q)
  Int old_r = a, r = q_, old_s = 1, s = 0;
  while (r != 0) {
    Int quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  return reduce(old_s);
}

Int Ring::power_of_p(int e) const {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= p_;
  return r;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::hconcat(const Matrix& right) const {
  if (cols_ == 0 && rows_ == 0) return right;
  if (right.cols_ == 0 && right.rows_ == 0) return *this;
  if (rows_ != right.rows_) throw DomainError("hconcat: row counts differ");
  Matrix m(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
  }
  return m;
}

Matrix Matrix::multiply(const Ring& ring, const Matrix& right) const {
  if (cols_ != right.rows_) throw DomainError("matrix product: dimension mismatch");
  Matrix m(rows_, right.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < right.cols_; ++c) m(r, c) = ring.reduce(m(r, c) + a * right(k, c));
    }
  return m;
}

Vector Matrix::apply(const Ring& ring, const Vector& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector product: dimension mismatch");
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = ring.reduce(acc + (*this)(r, c) * v[c]);
    out[r] = acc;
  }
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

namespace {

// row[dst] -= f * row[src]
void row_axpy(const Ring& ring, Matrix& m, std::size_t dst, std::size_t src, Int f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Int s = m(src, c);
    if (s != 0) m(dst, c) = ring.reduce(m(dst, c) - f * s);
  }
}

// col[dst] -= f * col[src]
void col_axpy(const Ring& ring, Matrix& m, std::size_t dst, std::size_t src, Int f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int s = m(r, src);
    if (s != 0) m(r, dst) = ring.reduce(m(r, dst) - f * s);
  }
}

void scale_row(const Ring& ring, Matrix& m, std::size_t r, Int f) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = ring.mul(m(r, c), f);
}

void scale_col(const Ring& ring, Matrix& m, std::size_t c, Int f) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = ring.mul(m(r, c), f);
}

}  // namespace

SmithForm smith_form(const Ring& ring, Matrix a, bool want_left, bool want_right) {
  const std::size_t rows = a.rows(), cols = a.cols();
  SmithForm out;
  if (want_left) {
    out.left = Matrix::identity(rows);
    out.left_inverse = Matrix::identity(rows);
  }
  if (want_right) out.right = Matrix::identity(cols);
  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    int best = ring.d();
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows && best > 0; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        Int x = a(i, j);
        if (x == 0) continue;
        int v = ring.valuation(x);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (best == ring.d()) {
      out.valuations.resize(diag, ring.d());
      return out;
    }
    a.swap_rows(t, bi);
    a.swap_cols(t, bj);
    if (want_left) {
      out.left.swap_rows(t, bi);
      out.left_inverse.swap_cols(t, bi);
    }
    if (want_right) out.right.swap_cols(t, bj);

    const Int pv = ring.power_of_p(best);
    const Int unit = a(t, t) / pv;
    const Int unit_inv = ring.inverse(unit);
    scale_row(ring, a, t, unit_inv);
    if (want_left) {
      scale_row(ring, out.left, t, unit_inv);
      scale_col(ring, out.left_inverse, t, ring.reduce(unit));
    }
    for (std::size_t i = t + 1; i < rows; ++i) {
      Int x = a(i, t);
      if (x == 0) continue;
      Int f = x / pv;
      row_axpy(ring, a, i, t, f);
      if (want_left) {
        row_axpy(ring, out.left, i, t, f);
        col_axpy(ring, out.left_inverse, t, i, ring.reduce(-f));
      }
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Int x = a(t, j);
      if (x == 0) continue;
      Int f = x / pv;
      col_axpy(ring, a, j, t, f);
      if (want_right) col_axpy(ring, out.right, j, t, f);
    }
    out.valuations.push_back(best);
  }
  return out;
}

Matrix compress_rows(const Ring& ring, Matrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pivot = 0;
  for (std::size_t c = 0; c < cols && pivot < rows; ++c) {
    int best = ring.d();
    std::size_t br = pivot;
    for (std::size_t r = pivot; r < rows; ++r) {
      Int x = a(r, c);
      if (x == 0) continue;
      int v = ring.valuation(x);
      if (v < best) {
        best = v;
        br = r;
        if (v == 0) break;
      }
    }
    if (best == ring.d()) continue;
    a.swap_rows(pivot, br);
    const Int pv = ring.power_of_p(best);
    scale_row(ring, a, pivot, ring.inverse(a(pivot, c) / pv));
    for (std::size_t r = pivot + 1; r < rows; ++r) {
      Int x = a(r, c);
      if (x != 0) row_axpy(ring, a, r, pivot, x / pv);
    }
    ++pivot;
  }
  Matrix out(pivot, cols);
  for (std::size_t r = 0; r < pivot; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = a(r, c);
  return out;
}

RowAccumulator::RowAccumulator(const Ring& ring, std::size_t cols)
    : ring_(ring), cols_(cols), reduced_(0, cols) {}

void RowAccumulator::add(const Vector& row) {
  if (row.size() != cols_) throw DomainError("row length mismatch");
  if (std::all_of(row.begin(), row.end(), [](Int x) { return x == 0; })) return;
  pending_.push_back(row);
  if (pending_.size() >= std::max<std::size_t>(64, 2 * cols_)) flush();
}

void RowAccumulator::flush() {
  if (pending_.empty()) return;
  Matrix m(reduced_.rows() + pending_.size(), cols_);
  for (std::size_t r = 0; r < reduced_.rows(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = reduced_(r, c);
  for (std::size_t i = 0; i < pending_.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(reduced_.rows() + i, c) = ring_.reduce(pending_[i][c]);
  pending_.clear();
  reduced_ = compress_rows(ring_, std::move(m));
}

Matrix RowAccumulator::finish() {
  flush();
  return reduced_;
}

Matrix kernel(const Ring& ring, const Matrix& a) {
  const std::size_t cols = a.cols();
  Matrix work = a.rows() > cols ? compress_rows(ring, a) : a;
  SmithForm s = smith_form(ring, std::move(work), false, true);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < cols; ++i) {
    int v = i < s.valuations.size() ? s.valuations[i] : ring.d();
    if (v == 0) continue;
    Int scale = ring.power_of_p(ring.d() - v);
    Vector g = s.right.column(i);
    for (auto& x : g) x = ring.mul(x, scale);
    gens.push_back(std::move(g));
  }
  return Matrix::from_columns(cols, gens);
}

std::optional<Vector> solve(const Ring& ring, const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DomainError("solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = ring.reduce(b[r]);
  }
  Matrix k = kernel(ring, aug);
  for (std::size_t g = 0; g < k.cols(); ++g) {
    Int t = k(a.cols(), g);
    if (!ring.is_unit(t)) continue;
    Int f = ring.reduce(-ring.inverse(t));
    Vector x(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) x[c] = ring.mul(k(c, g), f);
    return x;
  }
  return std::nullopt;
}

int span_length(const Ring& ring, const Matrix& generators) {
  if (generators.cols() == 0 || generators.rows() == 0) return 0;
  SmithForm s = smith_form(ring, generators, false, false);
  int len = 0;
  for (int v : s.valuations) len += ring.d() - v;
  return len;
}

Subquotient::Subquotient(const Ring& ring, Matrix numerator, Matrix denominator)
    : ring_(ring), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  const std::size_t k = numerator_.rows();
  if (denominator_.cols() == 0) denominator_ = Matrix(k, 0);
  if (denominator_.rows() != k) throw DomainError("subquotient: ambient dimensions differ");
  combined_ = numerator_.hconcat(denominator_);
  if (combined_.rows() != k) combined_ = Matrix(k, numerator_.cols() + denominator_.cols());
  const std::size_t m = numerator_.cols();

  Matrix relations(m, 0);
  if (m > 0 && k > 0) {
    Matrix ker = kernel(ring_, combined_);
    relations = Matrix(m, ker.cols());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < ker.cols(); ++j) relations(i, j) = ker(i, j);
  } else if (m > 0) {
    // zero ambient space: every numerator column is zero
    relations = Matrix::identity(m);
  }
  SmithForm s = smith_form(ring_, relations, true, false);
  to_smith_ = std::move(s.left);
  from_smith_ = std::move(s.left_inverse);
  for (std::size_t i = 0; i < m; ++i) {
    int v = i < s.valuations.size() ? s.valuations[i] : ring_.d();
    if (v == 0) continue;
    factor_index_.push_back(i);
    orders_.push_back(ring_.power_of_p(v));
  }
}

int Subquotient::length() const {
  int len = 0;
  for (Int o : orders_) {
    while (o > 1) {
      o /= ring_.p();
      ++len;
    }
  }
  return len;
}

Vector Subquotient::lift_coefficients(std::size_t k) const {
  return from_smith_.column(factor_index_.at(k));
}

Vector Subquotient::lift(std::size_t k) const {
  return numerator_.apply(ring_, lift_coefficients(k));
}

std::optional<Vector> Subquotient::coordinates(const Vector& v) const {
  if (v.size() != ambient_dimension()) throw DomainError("subquotient: vector length mismatch");
  if (orders_.empty()) {
    if (numerator_.cols() + denominator_.cols() == 0 || ambient_dimension() == 0) {
      bool zero = std::all_of(v.begin(), v.end(), [&](Int x) { return ring_.reduce(x) == 0; });
      if (!zero) return std::nullopt;
      return Vector{};
    }
  }
  auto sol = solve(ring_, combined_, v);
  if (!sol) return std::nullopt;
  const std::size_t m = numerator_.cols();
  Vector y(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(m));
  Vector ys = to_smith_.apply(ring_, y);
  Vector out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = ys[factor_index_[i]] % orders_[i];
  return out;
}

Vector Subquotient::numerator_coordinates(std::size_t j) const {
  if (j >= numerator_.cols()) throw DomainError("subquotient: numerator index out of range");
  Vector out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = ring_.reduce(to_smith_(factor_index_[i], j)) % orders_[i];
  return out;
}

Vector embed(const Ring& ring, const std::vector<Int>& orders, const Vector& coords) {
  if (orders.size() != coords.size()) throw DomainError("embed: length mismatch");
  Vector out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out[i] = ring.mul(coords[i], ring.q() / orders[i]);
  return out;
}

}  // namespace qcent::zq
