#pragma once

// Milnor K-theory mod q in degrees 1 and 2 for finite fields, the local
// fields Q_l with l != p, and the reals, with the standard presentations of
// their maximal pro-p Galois groups.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcent/cohom.hpp"
#include "qcent/finite_field.hpp"
#include "qcent/presentation.hpp"
#include "qcent/qcentral.hpp"
#include "qcent/zq.hpp"

namespace qcent {

enum class FieldKind { finite, local, real };

struct FieldDescriptor {
  FieldKind kind = FieldKind::finite;
  /// Field size for finite fields, residue characteristic l for Q_l, 0 for R.
  std::int64_t parameter = 0;
  SeriesParams params;

  /// "Fq:<size>", "Qp:<l>" or "R"; validates the descriptor.
  static FieldDescriptor parse(std::string_view text, const SeriesParams& params);
  std::string to_string() const;
};

/// Throws DomainError unless mu_q lies in the field and the field kind is
/// supported: size = 1 mod q; q | l - 1 and l != p; R only for q = 2.
void validate(const FieldDescriptor& field);

/// A field element. Finite fields: num is the element code, den = 1. Local
/// fields and R: the nonzero rational num / den.
struct FieldValue {
  std::int64_t num = 1;
  std::int64_t den = 1;
};

struct SymbolAlgebra {
  FieldDescriptor field;
  std::vector<std::string> k1_basis;
  std::vector<FieldValue> k1_elements;
  std::vector<std::int64_t> k1_orders;
  /// Symbol generators {b_i, b_j}, generator (i, j) at index i * m + j.
  std::vector<std::pair<std::size_t, std::size_t>> k2_generators;
  /// Columns in (Z/q)^(m^2) spanning the relations among the generators.
  zq::Matrix k2_relations;
  std::vector<std::int64_t> k2_invariants;
  /// symbols[i][j] = coordinates of {b_i, b_j} in k2.
  std::vector<std::vector<zq::Vector>> symbols;
  std::shared_ptr<const GaloisField> finite_field;
};

/// Degree 1 only: the k2 fields are left empty.
SymbolAlgebra k1(const FieldDescriptor& field);
SymbolAlgebra k2(const FieldDescriptor& field);

/// Coordinates of the class of x in F* / F*^q.
zq::Vector k1_class(const SymbolAlgebra& s, const FieldValue& x);
/// Coordinates of {a, b} in k2, by bilinear expansion over the k1 basis.
zq::Vector symbol(const SymbolAlgebra& s, const FieldValue& a, const FieldValue& b);
FieldValue one_minus(const SymbolAlgebra& s, const FieldValue& x);
FieldValue negate(const SymbolAlgebra& s, const FieldValue& x);

/// Exponent of the tame symbol of a and b against zeta = u^((l-1)/q), u the
/// unit basis element; local fields only.
std::int64_t tame_symbol_exponent(const FieldDescriptor& field, const FieldValue& a, const FieldValue& b);

PairingTensor milnor_pairing_gram(const SymbolAlgebra& s);
PairingTensor milnor_pairing_gram(const FieldDescriptor& field);

/// Finite: <x | >. Q_l: <s, t | s t s^-1 t^-l>. R: <x | x^2>.
Presentation galois_model(const FieldDescriptor& field);

}  // namespace qcent
