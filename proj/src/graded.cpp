#include "qcent/graded.hpp"

#include <algorithm>

#include "qcent/error.hpp"
#include "qcent/qcentral.hpp"

namespace qcent {

void GradedAlgebra2::check() const { as_tensor().check(); }

PairingTensor GradedAlgebra2::as_tensor() const { return PairingTensor{q, orders1, orders2, mult}; }

GradedAlgebra2 GradedAlgebra2::from_tensor(const PairingTensor& t) {
  t.check();
  return GradedAlgebra2{t.modulus, t.source_orders, t.target_orders, t.values};
}

GradedAlgebra2 algebra_from_cohomology(const FiniteGroupTable& g, std::int64_t q, std::size_t order_bound) {
  return GradedAlgebra2::from_tensor(pairing_gram(g, q, order_bound));
}

GradedAlgebra2 algebra_from_milnor(const SymbolAlgebra& s) {
  return GradedAlgebra2::from_tensor(milnor_pairing_gram(s));
}

GradedAlgebra2 quadratic_hull(const GradedAlgebra2& a) {
  a.check();
  SeriesParams sp = SeriesParams::from_q(a.q);
  zq::Ring ring(sp.p, sp.d);
  const std::size_t m = a.dim1();
  std::vector<zq::Vector> rels;
  auto unit = [&](std::size_t i, std::size_t j) { return i * m + j; };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      zq::Vector v(m * m, 0);
      v[unit(i, j)] = ring.add(v[unit(i, j)], 1);
      v[unit(j, i)] = ring.add(v[unit(j, i)], 1);
      rels.push_back(v);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      zq::Vector v(m * m, 0);
      v[unit(i, j)] = ring.reduce(std::min(a.orders1[i], a.orders1[j]));
      if (v[unit(i, j)] != 0) rels.push_back(v);
    }
  std::vector<zq::Vector> images;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) images.push_back(zq::embed(ring, a.orders2, a.mult[i][j]));
  zq::Matrix mult_matrix = zq::Matrix::from_columns(a.dim2(), images);
  if (m > 0) {
    zq::Matrix ker = a.dim2() == 0 ? zq::Matrix::identity(m * m) : zq::kernel(ring, mult_matrix);
    for (std::size_t c = 0; c < ker.cols(); ++c) rels.push_back(ker.column(c));
  }
  zq::Subquotient module(ring, zq::Matrix::identity(m * m), zq::Matrix::from_columns(m * m, rels));
  GradedAlgebra2 out{a.q, a.orders1, module.orders(), {}};
  out.mult.assign(m, std::vector<zq::Vector>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.mult[i][j] = module.numerator_coordinates(unit(i, j));
  return out;
}

bool algebras_equivalent(const GradedAlgebra2& a, const GradedAlgebra2& b) {
  return pairings_equivalent(a.as_tensor(), b.as_tensor());
}

}  // namespace qcent
