#pragma once

// Cohomology of finite groups with trivial Z/q coefficients in degrees 1 and
// 2, through normalized bar cochains.
//
// Degree 2 is not solved on all (|G|-1)^2 values. Fix the set S of table
// generators and a breadth-first spanning tree of the right Cayley graph.
// A normalized 2-cocycle is determined by its values u(g,s) = f(g,s),
// g != 1, s in S, through
//
//   f(g, h s) = f(g, h) + f(g h, s) - f(h, s),
//
// applied along the tree; the remaining Cayley edges give the linear
// conditions on u. The cocycle identity for a general third argument follows
// from the identities with a generator in that slot by induction on word
// length. Coboundary membership of any cocycle is likewise decided on the
// (g, s) values alone, since a cocycle vanishing there vanishes everywhere.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qcent/group_table.hpp"
#include "qcent/zq.hpp"

namespace qcent {

/// A normalized cochain on an explicit group. Degree 1 values are indexed by
/// g, degree 2 values by g * order + h.
struct Cochain {
  int degree = 1;
  std::int64_t modulus = 2;
  std::uint64_t group_fingerprint = 0;
  std::size_t group_order = 1;
  std::vector<std::int64_t> values;

  std::int64_t operator()(Element g) const { return values.at(g); }
  std::int64_t operator()(Element g, Element h) const { return values.at(g * group_order + h); }
  std::size_t support_size() const;

  bool operator==(const Cochain&) const = default;
};

Cochain zero_cochain(const FiniteGroupTable& g, int degree, std::int64_t q);
Cochain operator+(const Cochain& a, const Cochain& b);
Cochain scale(const Cochain& a, std::int64_t k);

/// Checks the normalization and the cocycle identity on the full domain.
bool is_cocycle(const FiniteGroupTable& g, const Cochain& c);
/// (d phi)(g, h) = phi(g) + phi(h) - phi(g h).
Cochain coboundary(const FiniteGroupTable& g, const Cochain& phi);

/// The spanning tree and unknown layout described above, for one group and
/// modulus.
class CochainModel {
 public:
  CochainModel(const FiniteGroupTable& g, std::int64_t q);

  const FiniteGroupTable& group() const { return group_; }
  const zq::Ring& ring() const { return ring_; }
  std::int64_t modulus() const { return ring_.q(); }
  /// Distinct non-identity table generators.
  const std::vector<Element>& generators() const { return gens_; }
  /// Non-identity elements in tree order; also the column order of
  /// coboundary_matrix().
  const std::vector<Element>& elements() const { return order_; }
  /// Number of unknowns u(g, s).
  std::size_t unknown_count() const;
  std::size_t unknown_index(Element g, std::size_t generator_slot) const;

  /// Values on (g, s), g != 1, in unknown order.
  zq::Vector restrict(const Cochain& c) const;
  /// The unique normalized function satisfying the tree recurrence with the
  /// given values on (g, s). A cocycle exactly when u lies in cocycle_space().
  Cochain expand(const zq::Vector& u) const;
  /// Homomorphism to Z/q with the given values on generators(); the result
  /// is a cocycle only if those values are compatible.
  Cochain expand_degree1(const zq::Vector& on_generators) const;

  /// Columns of phi -> restrict(d phi), phi ranging over the unit cochains
  /// at non-identity elements.
  zq::Matrix coboundary_matrix() const;
  /// Columns spanning restrict(Z^2).
  zq::Matrix cocycle_space() const;
  /// Columns spanning the values on generators() of homomorphisms G -> Z/q.
  zq::Matrix hom_space() const;

 private:
  FiniteGroupTable group_;
  zq::Ring ring_;
  std::vector<Element> gens_;
  std::vector<std::size_t> position_;   // element -> rank among non-identity elements
  std::vector<Element> order_;          // non-identity elements in tree order
  std::vector<Element> parent_;
  std::vector<std::size_t> parent_edge_;  // slot in gens_ with g = parent * s
};

/// H^1 or H^2 with a basis of representative cocycles.
class CohomologySpace {
 public:
  int degree() const { return degree_; }
  std::int64_t modulus() const { return modulus_; }
  std::uint64_t group_fingerprint() const { return fingerprint_; }
  /// Number of cyclic factors; the F_p-dimension when q = p.
  std::size_t dimension() const { return invariants_.size(); }
  /// Cyclic orders of the factors, matching basis().
  const std::vector<std::int64_t>& invariants() const { return invariants_; }
  const std::vector<Cochain>& basis() const { return basis_; }
  std::size_t basis_support_size() const;

  /// Class coordinates of a cochain; nullopt if it is not a cocycle.
  std::optional<zq::Vector> coordinates(const Cochain& c) const;
  /// Representative of the class with the given coordinates.
  Cochain representative(const zq::Vector& coords) const;

 private:
  friend CohomologySpace h1(const FiniteGroupTable& g, std::int64_t q);
  friend CohomologySpace h2(const FiniteGroupTable& g, std::int64_t q, std::size_t bound);

  int degree_ = 1;
  std::int64_t modulus_ = 2;
  std::uint64_t fingerprint_ = 0;
  std::vector<std::int64_t> invariants_;
  std::vector<Cochain> basis_;
  std::shared_ptr<const CochainModel> model_;
  std::shared_ptr<const zq::Subquotient> module_;
};

CohomologySpace h1(const FiniteGroupTable& g, std::int64_t q);
/// Throws SizeError when |G| > bound.
CohomologySpace h2(const FiniteGroupTable& g, std::int64_t q, std::size_t bound = 64);

/// (a u b)(g, h) = a(g) b(h).
Cochain cup(const Cochain& a, const Cochain& b);

/// A 1-cochain phi with d phi = c, or nullopt. c must be a 2-cocycle.
std::optional<Cochain> coboundary_witness(const FiniteGroupTable& g, const Cochain& c);
bool is_coboundary(const FiniteGroupTable& g, const Cochain& c);

/// The span of the cup products of an H^1 basis inside H^2.
struct DecomposableH2 {
  std::int64_t modulus = 2;
  CohomologySpace h1;
  std::vector<std::int64_t> invariants;
  /// Representatives, each a combination of the products h1.basis()[i] u h1.basis()[j].
  std::vector<Cochain> basis;
  /// basis[k] = sum over (i, j) of basis_coefficients[k][i * m + j] times the product (i, j).
  std::vector<zq::Vector> basis_coefficients;
  /// Column k holds the H^2 coordinates of basis[k]; present only when H^2
  /// itself was computed (|G| within the H^2 bound).
  std::optional<zq::Matrix> inclusion;
  /// products[i][j] = coordinates of h1.basis()[i] u h1.basis()[j].
  std::vector<std::vector<zq::Vector>> products;

  std::size_t dimension() const { return invariants.size(); }
};

/// Needs only coboundary membership, so it is bounded by the group order
/// bound rather than the H^2 bound.
DecomposableH2 decomposable_h2(const FiniteGroupTable& g, std::int64_t q, std::size_t h2_bound = 64,
                               std::size_t order_bound = 512);

/// A bilinear map from a module with source_orders to a module with
/// target_orders, given on basis pairs.
struct PairingTensor {
  std::int64_t modulus = 2;
  std::vector<std::int64_t> source_orders;
  std::vector<std::int64_t> target_orders;
  std::vector<std::vector<zq::Vector>> values;

  std::size_t m() const { return source_orders.size(); }
  std::size_t target_dim() const { return target_orders.size(); }
  /// Value on two source vectors, in target coordinates.
  zq::Vector evaluate(const zq::Vector& x, const zq::Vector& y) const;
  void check() const;

  bool operator==(const PairingTensor&) const = default;
};

PairingTensor pairing_gram(const FiniteGroupTable& g, std::int64_t q, std::size_t order_bound = 512);
PairingTensor pairing_gram(const DecomposableH2& dec);

/// Whether some source isomorphism A and target isomorphism B give
/// B(T1(A x, A y)) = T2(x, y). The target side is compared on the span of the
/// values, and the target invariants must agree. Exhaustive with pruning;
/// throws DomainError when m > 4.
bool pairings_equivalent(const PairingTensor& t1, const PairingTensor& t2);

/// Pullback along a homomorphism of tables.
Cochain inflation(const TableHomomorphism& map, const Cochain& c);

/// Contravariant matrices of pi^* : H^1(target) -> H^1(source) and on the
/// decomposable parts, in the bases of h1/decomposable_h2 of each side.
struct InducedMaps {
  zq::Matrix degree1;
  zq::Matrix degree2_decomposable;
  bool degree1_bijective = false;
  bool degree2_bijective = false;
};
InducedMaps induced_h_maps(const TableHomomorphism& pi, std::int64_t q, std::size_t h2_bound = 64,
                           std::size_t order_bound = 512);

}  // namespace qcent
