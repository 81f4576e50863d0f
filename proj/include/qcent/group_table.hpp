#pragma once

// Explicit finite groups given by a multiplication table.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qcent {

class FiniteGroupTable {
 public:
  using Element = std::uint32_t;

  /// Checks closure, identity and inverse laws and that `generators`
  /// generate; associativity is checked only by is_associative().
  FiniteGroupTable(std::size_t order, std::vector<Element> mult, Element identity,
                   std::vector<Element> generators);

  static FiniteGroupTable cyclic(std::size_t n);
  /// Direct product of cyclic groups of the given orders, elements in
  /// mixed-radix order with the first factor varying fastest.
  static FiniteGroupTable abelian(const std::vector<std::int64_t>& orders);
  static FiniteGroupTable trivial() { return cyclic(1); }

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  const std::vector<Element>& generators() const { return generators_; }
  Element multiply(Element a, Element b) const { return mult_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element a, std::int64_t k) const;
  Element commutator(Element a, Element b) const;
  std::uint64_t element_order(Element a) const;
  const std::vector<Element>& table() const { return mult_; }

  /// Fingerprint of the table and generator list, used to match cochains
  /// with the group they live on.
  std::uint64_t fingerprint() const { return fingerprint_; }

  bool is_associative() const;

  bool operator==(const FiniteGroupTable& other) const;

 private:
  std::size_t order_;
  std::vector<Element> mult_;
  Element identity_;
  std::vector<Element> generators_;
  std::vector<Element> inverse_;
  std::uint64_t fingerprint_ = 0;
};

using Element = FiniteGroupTable::Element;
/// Sorted list of distinct elements.
using ElementSet = std::vector<Element>;

ElementSet generate_subgroup(const FiniteGroupTable& g, const std::vector<Element>& generators);
ElementSet whole_group(const FiniteGroupTable& g);
bool is_subgroup(const FiniteGroupTable& g, const ElementSet& s);
bool is_normal(const FiniteGroupTable& g, const ElementSet& s);
ElementSet center(const FiniteGroupTable& g);
/// Subgroup generated by all [a,b] with a in `left`, b in `right`.
ElementSet commutator_subgroup(const FiniteGroupTable& g, const ElementSet& left, const ElementSet& right);
ElementSet derived_subgroup(const FiniteGroupTable& g);

/// Multiplicative structure of G/N, with the projection G -> G/N.
struct TableQuotient {
  FiniteGroupTable group;
  std::vector<Element> projection;
};
TableQuotient quotient(const FiniteGroupTable& g, const ElementSet& normal);

std::uint64_t exponent(const FiniteGroupTable& g);
/// Nilpotency class (0 for the trivial group); nullopt if not nilpotent.
std::optional<int> nilpotency_class(const FiniteGroupTable& g);
/// Elementary divisors (prime powers, sorted) of G/[G,G].
std::vector<std::int64_t> abelian_invariants(const FiniteGroupTable& g);

/// A map of tables given by the image of every source element.
struct TableHomomorphism {
  FiniteGroupTable source;
  FiniteGroupTable target;
  std::vector<Element> images;

  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_homomorphism() && is_injective() && is_surjective(); }
  Element operator()(Element x) const { return images.at(x); }
};

TableHomomorphism identity_homomorphism(const FiniteGroupTable& g);
/// (after o before)(x) = after(before(x)).
TableHomomorphism compose(const TableHomomorphism& after, const TableHomomorphism& before);
/// Extends generator images to a homomorphism; nullopt if no homomorphism
/// sends source.generators()[i] to generator_images[i].
std::optional<TableHomomorphism> extend_from_generators(const FiniteGroupTable& source,
                                                        const FiniteGroupTable& target,
                                                        const std::vector<Element>& generator_images);

struct IsomorphismResult {
  bool isomorphic = false;
  /// Images of g1's generators in g2 when isomorphic.
  std::optional<std::vector<Element>> witness;
};

/// Invariant pruning (order, exponent, element-order histogram, abelian
/// invariants, center order) followed by backtracking over generator images
/// in table index order.
IsomorphismResult is_isomorphic(const FiniteGroupTable& g1, const FiniteGroupTable& g2);

}  // namespace qcent
