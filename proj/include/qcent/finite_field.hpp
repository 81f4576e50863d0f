#pragma once

// GF(s) for s = l^k <= 2^16. Elements are integer codes: the coefficients of
// a polynomial in the class `a` of X, constant term first, written in base l.
// For k = 1 the code is the residue itself.

#include <cstdint>
#include <string>
#include <vector>

namespace qcent {

class GaloisField {
 public:
  explicit GaloisField(std::int64_t size);

  std::int64_t size() const { return size_; }
  std::int64_t characteristic() const { return l_; }
  int degree() const { return k_; }
  /// Monic modulus, coefficients constant term first (k + 1 entries).
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  std::int64_t add(std::int64_t x, std::int64_t y) const;
  std::int64_t neg(std::int64_t x) const;
  std::int64_t sub(std::int64_t x, std::int64_t y) const { return add(x, neg(y)); }
  std::int64_t mul(std::int64_t x, std::int64_t y) const;
  std::int64_t inv(std::int64_t x) const;
  std::int64_t one() const { return 1; }

  /// A generator of the multiplicative group: the least primitive residue
  /// for prime fields, the class a for extensions.
  std::int64_t primitive() const { return primitive_; }
  /// Discrete logarithm base primitive(); x must be nonzero.
  std::int64_t log(std::int64_t x) const;
  std::int64_t exp(std::int64_t e) const;

  /// "3" for prime fields, "a^2+2a+1" style otherwise.
  std::string name(std::int64_t x) const;

 private:
  std::vector<std::int64_t> digits(std::int64_t x) const;
  std::int64_t from_digits(const std::vector<std::int64_t>& d) const;
  std::int64_t slow_mul(std::int64_t x, std::int64_t y) const;

  std::int64_t size_;
  std::int64_t l_;
  int k_;
  std::vector<std::int64_t> modulus_;
  std::int64_t primitive_ = 1;
  std::vector<std::int64_t> log_;
  std::vector<std::int64_t> exp_;
};

}  // namespace qcent
