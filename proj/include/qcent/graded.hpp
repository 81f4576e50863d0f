#pragma once

// Graded-commutative algebras over Z/q truncated to degrees <= 2: a degree-1
// module, a degree-2 module and the product A1 x A1 -> A2.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcent/cohom.hpp"
#include "qcent/group_table.hpp"
#include "qcent/milnor.hpp"
#include "qcent/zq.hpp"

namespace qcent {

struct GradedAlgebra2 {
  std::int64_t q = 2;
  std::vector<std::int64_t> orders1;  // cyclic orders of A1
  std::vector<std::int64_t> orders2;  // cyclic orders of A2
  /// mult[i][j] = coordinates of e_i e_j in A2.
  std::vector<std::vector<zq::Vector>> mult;

  std::size_t dim1() const { return orders1.size(); }
  std::size_t dim2() const { return orders2.size(); }
  void check() const;

  PairingTensor as_tensor() const;
  static GradedAlgebra2 from_tensor(const PairingTensor& t);
};

/// H^1, the decomposable part of H^2 and the cup product.
GradedAlgebra2 algebra_from_cohomology(const FiniteGroupTable& g, std::int64_t q, std::size_t order_bound = 512);
/// k1, k2 and the symbol product.
GradedAlgebra2 algebra_from_milnor(const SymbolAlgebra& s);

/// Degree 2 becomes (A1 (x) A1) / (x y + y x, order relations, kernel of
/// mult), with mult the canonical surjection. For odd p the relation
/// 2 x x = 0 removes squares; for p = 2 squares stay.
GradedAlgebra2 quadratic_hull(const GradedAlgebra2& a);

bool algebras_equivalent(const GradedAlgebra2& a, const GradedAlgebra2& b);

}  // namespace qcent
