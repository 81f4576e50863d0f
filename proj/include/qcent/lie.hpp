#pragma once

// Counting in the free Lie ring, and a degree-3 truncated Magnus expansion
// used to read off relation ranks of presentations whose relators sit deep
// in the Zassenhaus filtration.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcent/presentation.hpp"

namespace qcent {

/// (1/w) sum_{d | w} mu(d) n^(w/d).
std::uint64_t witt_rank(std::uint64_t n, std::uint64_t w);

/// A basic commutator, left-normed: {j, i} is [x_j, x_i] and {j, i, k} is
/// [[x_j, x_i], x_k]. Indices are 0-based.
struct HallBasisEntry {
  int weight = 1;
  std::vector<std::size_t> tree;

  std::string to_string(const std::vector<std::string>& names = {}) const;
  bool operator==(const HallBasisEntry&) const = default;
};

/// Weight 1: x_i. Weight 2: [x_j, x_i] with i < j, ordered by (i, j).
/// Weight 3: [[x_j, x_i], x_k] with i < j and k >= i, ordered by (i, j, k).
/// Throws DomainError for w outside 1..3.
std::vector<HallBasisEntry> hall_basis(std::size_t n, int w);

/// witt_rank(n, 3): rank of R / R^p [R, S] for R = [S, [S, S]].
std::uint64_t relation_rank_free_class2(std::size_t n);

/// Magnus expansion x_i -> 1 + X_i over F_p, truncated above degree 3.
/// Coefficients are indexed by monomials of length 0..3 in the X_i.
class MagnusSeries {
 public:
  MagnusSeries(std::size_t n, std::int64_t p);

  static MagnusSeries of_word(const Word& w, std::size_t n, std::int64_t p);

  std::size_t rank() const { return n_; }
  std::int64_t prime() const { return p_; }
  std::int64_t coefficient(const std::vector<std::size_t>& monomial) const;
  /// Coefficients of all monomials of the given degree, lexicographic.
  std::vector<std::int64_t> degree_part(int degree) const;
  /// Smallest positive degree with a nonzero coefficient, or 4 if none.
  int valuation() const;

  MagnusSeries operator*(const MagnusSeries& other) const;

 private:
  std::size_t offset(int degree) const;
  std::size_t index(const std::vector<std::size_t>& monomial) const;

  std::size_t n_;
  std::int64_t p_;
  std::vector<std::int64_t> coeffs_;
};

/// Relation rank of <x_1..x_n | relators> over F_p when it can be certified:
/// 0 when every relator is trivial in the free group; the relator count when
/// every relator lies in the third Zassenhaus term (Magnus valuation >= 3)
/// and their degree-3 parts are linearly independent mod p. Otherwise
/// nullopt.
std::optional<std::uint64_t> certified_relation_rank(const Presentation& pres, std::int64_t p);

}  // namespace qcent
