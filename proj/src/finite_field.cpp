#include "qcent/finite_field.hpp"

#include <algorithm>

#include "qcent/error.hpp"

namespace qcent {

GaloisField::GaloisField(std::int64_t size) : size_(size) {
  if (size < 2 || size > (1 << 16)) throw DomainError("field size must be in 2..65536");
  std::int64_t l = 2;
  while (size % l != 0) ++l;
  int k = 0;
  for (std::int64_t r = size; r > 1; r /= l) {
    if (r % l != 0) throw DomainError(std::to_string(size) + " is not a prime power");
    ++k;
  }
  l_ = l;
  k_ = k;

  // Search monic moduli in code order until the class of X has order s - 1.
  // For k = 1 search the residues themselves.
  const std::int64_t units = size - 1;
  log_.assign(static_cast<std::size_t>(size), -1);
  exp_.assign(static_cast<std::size_t>(units), 0);
  for (std::int64_t code = 0; code < size; ++code) {
    modulus_ = digits(code);
    modulus_.push_back(1);
    std::int64_t x = k == 1 ? code : l;  // the class of X
    if (x == 0) continue;
    std::fill(log_.begin(), log_.end(), -1);
    std::int64_t y = 1;
    bool ok = true;
    for (std::int64_t e = 0; e < units; ++e) {
      if (log_[static_cast<std::size_t>(y)] != -1) {
        ok = false;
        break;
      }
      log_[static_cast<std::size_t>(y)] = e;
      exp_[static_cast<std::size_t>(e)] = y;
      y = slow_mul(y, x);
    }
    if (ok && y == 1) {
      primitive_ = x;
      if (k == 1) modulus_ = {0, 1};
      return;
    }
  }
  throw Error("no primitive modulus found");
}

std::vector<std::int64_t> GaloisField::digits(std::int64_t x) const {
  std::vector<std::int64_t> d(static_cast<std::size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    d[static_cast<std::size_t>(i)] = x % l_;
    x /= l_;
  }
  return d;
}

std::int64_t GaloisField::from_digits(const std::vector<std::int64_t>& d) const {
  std::int64_t x = 0;
  for (int i = k_ - 1; i >= 0; --i) x = x * l_ + d[static_cast<std::size_t>(i)];
  return x;
}

std::int64_t GaloisField::add(std::int64_t x, std::int64_t y) const {
  auto a = digits(x), b = digits(y);
  for (int i = 0; i < k_; ++i) a[static_cast<std::size_t>(i)] = (a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)]) % l_;
  return from_digits(a);
}

std::int64_t GaloisField::neg(std::int64_t x) const {
  auto a = digits(x);
  for (auto& c : a) c = (l_ - c) % l_;
  return from_digits(a);
}

std::int64_t GaloisField::slow_mul(std::int64_t x, std::int64_t y) const {
  if (k_ == 1) return (x * y) % l_;
  auto a = digits(x), b = digits(y);
  std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      prod[static_cast<std::size_t>(i + j)] =
          (prod[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % l_;
  // reduce by the monic modulus from the top
  for (int t = 2 * k_ - 2; t >= k_; --t) {
    std::int64_t c = prod[static_cast<std::size_t>(t)];
    if (c == 0) continue;
    for (int i = 0; i <= k_; ++i) {
      auto& slot = prod[static_cast<std::size_t>(t - k_ + i)];
      slot = ((slot - c * modulus_[static_cast<std::size_t>(i)]) % l_ + l_) % l_;
    }
  }
  prod.resize(static_cast<std::size_t>(k_));
  return from_digits(prod);
}

std::int64_t GaloisField::mul(std::int64_t x, std::int64_t y) const {
  if (x == 0 || y == 0) return 0;
  return exp_[static_cast<std::size_t>((log(x) + log(y)) % (size_ - 1))];
}

std::int64_t GaloisField::inv(std::int64_t x) const {
  if (x == 0) throw DomainError("zero has no inverse");
  return exp_[static_cast<std::size_t>((size_ - 1 - log(x)) % (size_ - 1))];
}

std::int64_t GaloisField::log(std::int64_t x) const {
  if (x <= 0 || x >= size_) throw DomainError("log of zero or of a non-element");
  return log_[static_cast<std::size_t>(x)];
}

std::int64_t GaloisField::exp(std::int64_t e) const {
  const std::int64_t u = size_ - 1;
  return exp_[static_cast<std::size_t>(((e % u) + u) % u)];
}

std::string GaloisField::name(std::int64_t x) const {
  if (k_ == 1) return std::to_string(x);
  auto d = digits(x);
  std::string out;
  for (int i = k_ - 1; i >= 0; --i) {
    std::int64_t c = d[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qcent
