#include "qcent/lie.hpp"

#include "qcent/error.hpp"
#include "qcent/qcentral.hpp"
#include "qcent/zq.hpp"

namespace qcent {

namespace {

int mobius(std::uint64_t d) {
  int mu = 1;
  for (std::uint64_t f = 2; f * f <= d; ++f) {
    if (d % f != 0) continue;
    d /= f;
    if (d % f == 0) return 0;
    mu = -mu;
  }
  if (d > 1) mu = -mu;
  return mu;
}

std::int64_t mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

// binomial(k, j) mod p for any integer k and 0 <= j <= 3.
std::int64_t binomial_mod(std::int64_t k, int j, std::int64_t p) {
  __int128 num = 1;
  std::int64_t fact = 1;
  for (int t = 0; t < j; ++t) {
    num *= static_cast<__int128>(k - t);
    fact *= t + 1;
  }
  return mod(static_cast<std::int64_t>((num / fact) % p), p);
}

}  // namespace

std::uint64_t witt_rank(std::uint64_t n, std::uint64_t w) {
  if (w == 0) throw DomainError("witt_rank needs w >= 1");
  __int128 total = 0;
  for (std::uint64_t d = 1; d <= w; ++d) {
    if (w % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    __int128 pw = 1;
    for (std::uint64_t e = 0; e < w / d; ++e) pw *= n;
    total += mu * pw;
  }
  return static_cast<std::uint64_t>(total / w);
}

std::string HallBasisEntry::to_string(const std::vector<std::string>& names) const {
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i + 1); };
  std::string s = name(tree.at(0));
  for (std::size_t k = 1; k < tree.size(); ++k) s = "[" + s + "," + name(tree[k]) + "]";
  return s;
}

std::vector<HallBasisEntry> hall_basis(std::size_t n, int w) {
  std::vector<HallBasisEntry> out;
  switch (w) {
    case 1:
      for (std::size_t i = 0; i < n; ++i) out.push_back({1, {i}});
      break;
    case 2:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back({2, {j, i}});
      break;
    case 3:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          for (std::size_t k = i; k < n; ++k) out.push_back({3, {j, i, k}});
      break;
    default:
      throw DomainError("hall_basis supports weights 1 to 3 only, got " + std::to_string(w));
  }
  return out;
}

std::uint64_t relation_rank_free_class2(std::size_t n) { return witt_rank(n, 3); }

MagnusSeries::MagnusSeries(std::size_t n, std::int64_t p) : n_(n), p_(p) {
  if (!is_prime(p)) throw DomainError("Magnus expansion needs a prime modulus");
  coeffs_.assign(offset(4), 0);
  coeffs_[0] = 1;
}

std::size_t MagnusSeries::offset(int degree) const {
  std::size_t off = 0, pw = 1;
  for (int t = 0; t < degree; ++t) {
    off += pw;
    pw *= n_;
  }
  return off;
}

std::size_t MagnusSeries::index(const std::vector<std::size_t>& monomial) const {
  if (monomial.size() > 3) throw DomainError("Magnus series is truncated above degree 3");
  std::size_t r = 0;
  for (auto g : monomial) {
    if (g >= n_) throw DomainError("monomial uses an unknown variable");
    r = r * n_ + g;
  }
  return offset(static_cast<int>(monomial.size())) + r;
}

std::int64_t MagnusSeries::coefficient(const std::vector<std::size_t>& monomial) const {
  return coeffs_[index(monomial)];
}

std::vector<std::int64_t> MagnusSeries::degree_part(int degree) const {
  if (degree < 0 || degree > 3) throw DomainError("Magnus series is truncated above degree 3");
  return std::vector<std::int64_t>(coeffs_.begin() + static_cast<std::ptrdiff_t>(offset(degree)),
                                   coeffs_.begin() + static_cast<std::ptrdiff_t>(offset(degree + 1)));
}

int MagnusSeries::valuation() const {
  for (int deg = 1; deg <= 3; ++deg)
    for (std::size_t k = offset(deg); k < offset(deg + 1); ++k)
      if (coeffs_[k] != 0) return deg;
  return 4;
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& other) const {
  if (other.n_ != n_ || other.p_ != p_) throw DomainError("Magnus series over different rings");
  MagnusSeries out(n_, p_);
  out.coeffs_[0] = 0;
  std::size_t width_b = 1;
  std::vector<std::size_t> width(4, 1);
  for (int t = 1; t < 4; ++t) width[t] = width[t - 1] * n_;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b) {
      width_b = width[b];
      for (std::size_t r = 0; r < width[a]; ++r) {
        std::int64_t x = coeffs_[offset(a) + r];
        if (x == 0) continue;
        for (std::size_t s = 0; s < width_b; ++s) {
          std::int64_t y = other.coeffs_[other.offset(b) + s];
          if (y == 0) continue;
          auto& z = out.coeffs_[offset(a + b) + r * width_b + s];
          z = (z + x * y) % p_;
        }
      }
    }
  return out;
}

MagnusSeries MagnusSeries::of_word(const Word& w, std::size_t n, std::int64_t p) {
  MagnusSeries out(n, p);
  for (const auto& l : w.letters()) {
    if (l.generator >= n) throw DomainError("word letter outside the generator range");
    MagnusSeries factor(n, p);
    std::vector<std::size_t> mono;
    for (int j = 1; j <= 3; ++j) {
      mono.push_back(l.generator);
      factor.coeffs_[factor.index(mono)] = binomial_mod(l.exponent, j, p);
    }
    out = out * factor;
  }
  return out;
}

std::optional<std::uint64_t> certified_relation_rank(const Presentation& pres, std::int64_t p) {
  const auto& rels = pres.relators();
  bool all_trivial = true;
  for (const auto& r : rels) all_trivial = all_trivial && is_trivial_in_free(r);
  if (all_trivial) return 0;
  const std::size_t n = pres.generator_count();
  std::vector<zq::Vector> cubic;
  for (const auto& r : rels) {
    if (is_trivial_in_free(r)) continue;
    MagnusSeries m = MagnusSeries::of_word(r, n, p);
    if (m.valuation() < 3) return std::nullopt;
    cubic.push_back(m.degree_part(3));
  }
  zq::Ring ring(p, 1);
  auto rank = zq::span_length(ring, zq::Matrix::from_columns(n * n * n, cubic));
  if (static_cast<std::size_t>(rank) != cubic.size()) return std::nullopt;
  return cubic.size();
}

}  // namespace qcent
