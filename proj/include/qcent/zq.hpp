#pragma once

// Linear algebra over the local ring Z/p^d.
//
// Every nonzero element of Z/p^d is a unit times a power of p, so an entry of
// minimal valuation divides every other entry of a matrix. All reductions
// below exploit that: elimination never needs gcd steps, and Smith forms have
// diagonal entries exactly p^v.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qcent::zq {

using Int = std::int64_t;
using Vector = std::vector<Int>;

class Ring {
 public:
  Ring(Int p, int d);

  Int p() const { return p_; }
  int d() const { return d_; }
  Int q() const { return q_; }

  Int reduce(Int x) const {
    Int r = x % q_;
    return r < 0 ? r + q_ : r;
  }
  Int add(Int a, Int b) const { return reduce(a + b); }
  Int sub(Int a, Int b) const { return reduce(a - b); }
  Int mul(Int a, Int b) const { return reduce(reduce(a) * reduce(b)); }

  /// Largest v with p^v | x; d for zero.
  int valuation(Int x) const;
  bool is_unit(Int x) const { return valuation(x) == 0; }
  Int inverse(Int unit) const;
  /// p^e as an integer, 0 <= e <= d.
  Int power_of_p(int e) const;

  bool operator==(const Ring& other) const { return p_ == other.p_ && d_ == other.d_; }

 private:
  Int p_;
  int d_;
  Int q_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  /// Horizontal concatenation; row counts must agree (an empty side is allowed).
  Matrix hconcat(const Matrix& right) const;
  Matrix multiply(const Ring& ring, const Matrix& right) const;
  Vector apply(const Ring& ring, const Vector& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct SmithForm {
  /// Valuations of the diagonal, length min(rows, cols); d marks a zero entry.
  std::vector<int> valuations;
  /// U and U^{-1} with U * A * V diagonal; empty unless requested.
  Matrix left;
  Matrix left_inverse;
  Matrix right;
};

SmithForm smith_form(const Ring& ring, Matrix a, bool want_left, bool want_right);

/// Unimodular row reduction; the result has the same row module and at most
/// cols() nonzero rows (zero rows are dropped).
Matrix compress_rows(const Ring& ring, Matrix a);

/// Streams rows into a matrix whose row module is kept compressed.
class RowAccumulator {
 public:
  RowAccumulator(const Ring& ring, std::size_t cols);
  void add(const Vector& row);
  Matrix finish();

 private:
  void flush();

  Ring ring_;
  std::size_t cols_;
  std::vector<Vector> pending_;
  Matrix reduced_;
};

/// Columns generating {x : a x = 0}.
Matrix kernel(const Ring& ring, const Matrix& a);

/// Some x with a x = b, if one exists.
std::optional<Vector> solve(const Ring& ring, const Matrix& a, const Vector& b);

/// log_p of the order of the column span.
int span_length(const Ring& ring, const Matrix& generators);

/// The module (span(numerator) + span(denominator)) / span(denominator)
/// inside (Z/q)^k, decomposed into cyclic factors Z/p^e with e >= 1.
class Subquotient {
 public:
  Subquotient(const Ring& ring, Matrix numerator, Matrix denominator);

  const Ring& ring() const { return ring_; }
  std::size_t ambient_dimension() const { return numerator_.rows(); }
  /// Orders p^e of the cyclic factors, in the order of the basis.
  const std::vector<Int>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  /// log_p of the module order.
  int length() const;

  /// Ambient representative of basis element k.
  Vector lift(std::size_t k) const;
  /// Coefficients on the numerator columns whose combination is lift(k).
  Vector lift_coefficients(std::size_t k) const;
  /// Coordinates of v (entry k reduced mod orders()[k]); nullopt when v is
  /// outside span(numerator) + span(denominator).
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Coordinates of numerator column j, without solving.
  Vector numerator_coordinates(std::size_t j) const;

 private:
  Ring ring_;
  Matrix numerator_;
  Matrix denominator_;
  Matrix combined_;
  Matrix to_smith_;     // U
  Matrix from_smith_;   // U^{-1}
  std::vector<std::size_t> factor_index_;
  std::vector<Int> orders_;
};

/// Embeds a coordinate vector of the module with the given cyclic orders into
/// (Z/q)^k by scaling entry i with q / orders[i].
Vector embed(const Ring& ring, const std::vector<Int>& orders, const Vector& coords);

}  // namespace qcent::zq
