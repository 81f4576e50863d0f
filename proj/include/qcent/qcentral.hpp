#pragma once

// Third and second quotients of the descending q-central series
//
//   G^(1) = G,  G^(i+1) = (G^(i))^q [G^(i), G],  G^[i] = G / G^(i).
//
// For a group on n generators G^[3] is a quotient of the universal group
// E(n,q) = S/S^(3), S free. Elements of E(n,q) are kept in the normal form
//
//   x_1^a_1 ... x_n^a_n  *  prod_{i<j} [x_j, x_i]^c_ij
//
// with a_i in Z/q^2 and c_ij in Z/q, the commutators [x_j, x_i] being central
// of order q. Collecting x_i^a'_i to the left past x_j^a_j (j > i) produces
// [x_j, x_i]^(a_j a'_i), so
//
//   (a, c) * (a', c') = (a + a', c + c' + (a_j a'_i)_{i<j}).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcent/group_table.hpp"
#include "qcent/presentation.hpp"

namespace qcent {

struct SeriesParams {
  std::int64_t p = 2;
  int d = 1;
  std::int64_t q = 2;

  /// Validates p prime (trial division), d >= 1, q = p^d <= 2^15.
  static SeriesParams make(std::int64_t p, int d);
  /// Factors a prime power q.
  static SeriesParams from_q(std::int64_t q);

  bool operator==(const SeriesParams&) const = default;
};

bool is_prime(std::int64_t n);

struct Limits {
  std::size_t order_bound = 512;
  std::size_t h2_bound = 64;
};

struct ClassTwoElement {
  std::vector<std::int64_t> a;  // exponents of x_i, mod q^2
  std::vector<std::int64_t> c;  // exponents of [x_j, x_i] for i < j, mod q

  bool operator==(const ClassTwoElement&) const = default;
};

/// A quotient E(n,q)/N by a normal subgroup N.
class ClassTwoGroup {
 public:
  const SeriesParams& params() const { return params_; }
  std::size_t rank() const { return n_; }
  std::size_t pair_count() const { return n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }
  /// Index of the commutator coordinate of the pair i < j.
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::size_t universal_order() const { return universal_order_; }
  std::size_t kernel_order() const { return kernel_order_; }
  std::size_t order() const { return universal_order_ / kernel_order_; }
  /// Irredundant generators of N.
  const std::vector<ClassTwoElement>& kernel_basis() const { return kernel_basis_; }

  ClassTwoElement identity() const;
  ClassTwoElement generator(std::size_t i) const;
  ClassTwoElement multiply(const ClassTwoElement& u, const ClassTwoElement& v) const;
  ClassTwoElement inverse(const ClassTwoElement& u) const;
  ClassTwoElement power(const ClassTwoElement& u, std::int64_t k) const;
  ClassTwoElement commutator(const ClassTwoElement& u, const ClassTwoElement& v) const;

  /// Position of a normal form in E(n,q), in [0, universal_order()).
  std::size_t encode(const ClassTwoElement& u) const;
  ClassTwoElement decode(std::size_t index) const;
  bool in_kernel(const ClassTwoElement& u) const;
  /// Whether u and v have the same image in E(n,q)/N.
  bool equal_in_quotient(const ClassTwoElement& u, const ClassTwoElement& v) const;

  /// E(n,q) modulo the normal closure of `elements` together with N.
  ClassTwoGroup with_relations(const std::vector<ClassTwoElement>& elements) const;

  void check(const ClassTwoElement& u) const;

 private:
  friend ClassTwoGroup universal_class2(std::size_t n, const SeriesParams& params, const Limits& limits);

  ClassTwoGroup() = default;
  ClassTwoElement normalize(ClassTwoElement u) const;

  SeriesParams params_;
  std::size_t n_ = 0;
  std::int64_t q2_ = 4;
  std::size_t universal_order_ = 1;
  std::size_t kernel_order_ = 1;
  std::vector<ClassTwoElement> kernel_basis_;
  std::vector<char> kernel_member_;
};

/// E(n,q) itself, i.e. S^[3] for S free on n generators.
ClassTwoGroup universal_class2(std::size_t n, const SeriesParams& params, const Limits& limits = {});
/// Normal form of u*v; throws DomainError on dimension mismatch.
ClassTwoElement collect(const ClassTwoElement& u, const ClassTwoElement& v, const ClassTwoGroup& group);
ClassTwoElement evaluate_word(const Word& w, const std::vector<ClassTwoElement>& images, const ClassTwoGroup& group);

/// G^[3] for G = <generators | relators>.
ClassTwoGroup third_quotient(const Presentation& pres, const SeriesParams& params, const Limits& limits = {});

/// G^[2] = (Z/q)^n / span of relator exponent sums, with the presentation
/// generators as table generators. For q = p this is (Z/q)^r.
struct SecondQuotient {
  FiniteGroupTable table;
  std::vector<std::int64_t> invariants;             // cyclic orders of the factors
  std::vector<std::vector<std::int64_t>> generator_images;  // coordinates of each x_i
  std::vector<std::vector<std::int64_t>> relator_vectors;   // exponent sums mod q
};
SecondQuotient second_quotient(const Presentation& pres, const SeriesParams& params, const Limits& limits = {});

/// The quotient E(n,q)/N as an explicit table. Table element k is the coset
/// of representatives[k], the least-index element of E(n,q) in it, so the
/// identity is element 0; the table generators are the images of x_i.
struct EnumeratedQuotient {
  FiniteGroupTable table;
  std::vector<ClassTwoElement> representatives;
  std::vector<Element> universal_to_table;  // indexed by ClassTwoGroup::encode

  Element index_of(const ClassTwoGroup& g, const ClassTwoElement& u) const {
    return universal_to_table.at(g.encode(u));
  }
};
EnumeratedQuotient enumerate(const ClassTwoGroup& g, const Limits& limits = {});
FiniteGroupTable to_table(const ClassTwoGroup& g, const Limits& limits = {});

/// H -> H^q [H, G] on an explicit table.
ElementSet series_step_oracle(const FiniteGroupTable& g, const ElementSet& subgroup, const SeriesParams& params);

/// The map G1^[3] -> G2^[3] induced by sending source generator i to
/// generator_images[i], a word in the target generators.
struct QuotientMap {
  ClassTwoGroup source;
  ClassTwoGroup target;
  TableHomomorphism table_map;

  bool is_isomorphism() const { return table_map.is_injective() && table_map.is_surjective(); }
};
QuotientMap induced_quotient_map(const std::vector<Word>& generator_images, const Presentation& source,
                                 const Presentation& target, const SeriesParams& params,
                                 const Limits& limits = {});

}  // namespace qcent
