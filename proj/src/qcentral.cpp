#include "qcent/qcentral.hpp"

#include <string>

#include "qcent/error.hpp"
#include "qcent/zq.hpp"

namespace qcent {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

SeriesParams SeriesParams::make(std::int64_t p, int d) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (d < 1) throw DomainError("q = p^d needs d >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < d; ++i) {
    q *= p;
    if (q > (1 << 15)) throw DomainError("q too large (limit 2^15)");
  }
  return SeriesParams{p, d, q};
}

SeriesParams SeriesParams::from_q(std::int64_t q) {
  if (q < 2) throw DomainError("q must be a prime power >= 2");
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int d = 0;
  std::int64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++d;
  }
  if (r != 1) throw DomainError(std::to_string(q) + " is not a prime power");
  return make(p, d);
}

std::size_t ClassTwoGroup::pair_index(std::size_t i, std::size_t j) const {
  if (!(i < j && j < n_)) throw DomainError("pair index needs i < j < n");
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

ClassTwoElement ClassTwoGroup::identity() const {
  return ClassTwoElement{std::vector<std::int64_t>(n_, 0), std::vector<std::int64_t>(pair_count(), 0)};
}

ClassTwoElement ClassTwoGroup::generator(std::size_t i) const {
  if (i >= n_) throw DomainError("generator index out of range");
  ClassTwoElement e = identity();
  e.a[i] = 1;
  return e;
}

void ClassTwoGroup::check(const ClassTwoElement& u) const {
  if (u.a.size() != n_ || u.c.size() != pair_count())
    throw DomainError("element dimensions do not match E(" + std::to_string(n_) + ",q)");
}

ClassTwoElement ClassTwoGroup::normalize(ClassTwoElement u) const {
  for (auto& x : u.a) x = ((x % q2_) + q2_) % q2_;
  for (auto& x : u.c) x = ((x % params_.q) + params_.q) % params_.q;
  return u;
}

ClassTwoElement ClassTwoGroup::multiply(const ClassTwoElement& u, const ClassTwoElement& v) const {
  check(u);
  check(v);
  ClassTwoElement out = u;
  for (std::size_t i = 0; i < n_; ++i) out.a[i] += v.a[i];
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j, ++k) out.c[k] += v.c[k] + (u.a[j] % params_.q) * (v.a[i] % params_.q);
  return normalize(std::move(out));
}

ClassTwoElement ClassTwoGroup::inverse(const ClassTwoElement& u) const {
  check(u);
  ClassTwoElement out = u;
  for (auto& x : out.a) x = -x;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j, ++k) out.c[k] = -u.c[k] + (u.a[j] % params_.q) * (u.a[i] % params_.q);
  return normalize(std::move(out));
}

ClassTwoElement ClassTwoGroup::power(const ClassTwoElement& u, std::int64_t k) const {
  ClassTwoElement base = k < 0 ? inverse(u) : normalize(u);
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  ClassTwoElement result = identity();
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

ClassTwoElement ClassTwoGroup::commutator(const ClassTwoElement& u, const ClassTwoElement& v) const {
  return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
}

std::size_t ClassTwoGroup::encode(const ClassTwoElement& u) const {
  check(u);
  ClassTwoElement v = normalize(u);
  std::size_t x = 0, radix = 1;
  for (auto a : v.a) {
    x += static_cast<std::size_t>(a) * radix;
    radix *= static_cast<std::size_t>(q2_);
  }
  for (auto c : v.c) {
    x += static_cast<std::size_t>(c) * radix;
    radix *= static_cast<std::size_t>(params_.q);
  }
  return x;
}

ClassTwoElement ClassTwoGroup::decode(std::size_t index) const {
  if (index >= universal_order_) throw DomainError("element index out of range");
  ClassTwoElement u = identity();
  for (auto& a : u.a) {
    a = static_cast<std::int64_t>(index % static_cast<std::size_t>(q2_));
    index /= static_cast<std::size_t>(q2_);
  }
  for (auto& c : u.c) {
    c = static_cast<std::int64_t>(index % static_cast<std::size_t>(params_.q));
    index /= static_cast<std::size_t>(params_.q);
  }
  return u;
}

bool ClassTwoGroup::in_kernel(const ClassTwoElement& u) const { return kernel_member_[encode(u)] != 0; }

bool ClassTwoGroup::equal_in_quotient(const ClassTwoElement& u, const ClassTwoElement& v) const {
  return in_kernel(multiply(inverse(u), v));
}

ClassTwoGroup ClassTwoGroup::with_relations(const std::vector<ClassTwoElement>& elements) const {
  ClassTwoGroup out = *this;
  // In class 2 the normal closure of r is generated by r and the central
  // commutators [r, x_i].
  std::vector<ClassTwoElement> candidates;
  for (const auto& r : elements) {
    check(r);
    candidates.push_back(normalize(r));
    for (std::size_t i = 0; i < n_; ++i) candidates.push_back(commutator(r, generator(i)));
  }
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < universal_order_; ++x)
    if (out.kernel_member_[x]) members.push_back(x);
  for (const auto& g : candidates) {
    if (out.kernel_member_[encode(g)]) continue;
    out.kernel_basis_.push_back(g);
    for (std::size_t i = 0; i < members.size(); ++i) {
      ClassTwoElement m = decode(members[i]);
      for (const auto& b : out.kernel_basis_) {
        std::size_t y = encode(multiply(m, b));
        if (!out.kernel_member_[y]) {
          out.kernel_member_[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  out.kernel_order_ = members.size();
  return out;
}

ClassTwoGroup universal_class2(std::size_t n, const SeriesParams& params, const Limits& limits) {
  SeriesParams checked = SeriesParams::make(params.p, params.d);
  ClassTwoGroup g;
  g.params_ = checked;
  g.n_ = n;
  g.q2_ = checked.q * checked.q;
  const std::size_t log_q = 2 * n + n * (n > 0 ? n - 1 : 0) / 2;
  std::size_t order = 1;
  for (std::size_t i = 0; i < log_q; ++i) {
    if (order > limits.order_bound / static_cast<std::size_t>(checked.q))
      throw SizeError("E(" + std::to_string(n) + "," + std::to_string(checked.q) + ") has order q^" +
                      std::to_string(log_q) + ", above the order bound " + std::to_string(limits.order_bound));
    order *= static_cast<std::size_t>(checked.q);
  }
  if (order > limits.order_bound) throw SizeError("order bound exceeded");
  g.universal_order_ = order;
  g.kernel_order_ = 1;
  g.kernel_member_.assign(order, 0);
  g.kernel_member_[0] = 1;
  return g;
}

ClassTwoElement collect(const ClassTwoElement& u, const ClassTwoElement& v, const ClassTwoGroup& group) {
  return group.multiply(u, v);
}

ClassTwoElement evaluate_word(const Word& w, const std::vector<ClassTwoElement>& images, const ClassTwoGroup& group) {
  ClassTwoElement out = group.identity();
  for (const auto& l : w.letters()) {
    if (l.generator >= images.size())
      throw DomainError("word letter " + std::to_string(l.generator) + " has no image");
    out = group.multiply(out, group.power(images[l.generator], l.exponent));
  }
  return out;
}

ClassTwoGroup third_quotient(const Presentation& pres, const SeriesParams& params, const Limits& limits) {
  ClassTwoGroup e = universal_class2(pres.generator_count(), params, limits);
  std::vector<ClassTwoElement> gens;
  for (std::size_t i = 0; i < pres.generator_count(); ++i) gens.push_back(e.generator(i));
  std::vector<ClassTwoElement> rels;
  for (const auto& r : pres.relators()) rels.push_back(evaluate_word(r, gens, e));
  return e.with_relations(rels);
}

SecondQuotient second_quotient(const Presentation& pres, const SeriesParams& params, const Limits& limits) {
  SeriesParams checked = SeriesParams::make(params.p, params.d);
  zq::Ring ring(checked.p, checked.d);
  const std::size_t n = pres.generator_count();
  SecondQuotient out{FiniteGroupTable::trivial(), {}, {}, {}};
  for (const auto& r : pres.relators()) {
    std::vector<std::int64_t> v(n, 0);
    for (const auto& l : r.letters()) v[l.generator] = ring.reduce(v[l.generator] + l.exponent);
    out.relator_vectors.push_back(v);
  }
  zq::Subquotient module(ring, zq::Matrix::identity(n), zq::Matrix::from_columns(n, out.relator_vectors));
  out.invariants = module.orders();
  std::size_t order = 1;
  for (auto o : out.invariants) {
    order *= static_cast<std::size_t>(o);
    if (order > limits.order_bound)
      throw SizeError("second quotient exceeds the order bound " + std::to_string(limits.order_bound));
  }
  FiniteGroupTable base = FiniteGroupTable::abelian(out.invariants);
  std::vector<Element> gens;
  for (std::size_t i = 0; i < n; ++i) {
    zq::Vector e(n, 0);
    e[i] = 1;
    auto coords = module.coordinates(e);
    std::size_t x = 0, radix = 1;
    for (std::size_t k = 0; k < coords->size(); ++k) {
      x += static_cast<std::size_t>((*coords)[k]) * radix;
      radix *= static_cast<std::size_t>(out.invariants[k]);
    }
    gens.push_back(static_cast<Element>(x));
    out.generator_images.push_back(*coords);
  }
  out.table = FiniteGroupTable(base.order(), base.table(), base.identity(), std::move(gens));
  return out;
}

EnumeratedQuotient enumerate(const ClassTwoGroup& g, const Limits& limits) {
  if (g.order() > limits.order_bound)
    throw SizeError("quotient of order " + std::to_string(g.order()) + " exceeds the order bound " +
                    std::to_string(limits.order_bound));
  const std::size_t total = g.universal_order();
  constexpr Element unassigned = ~Element{0};
  std::vector<Element> coset(total, unassigned);
  std::vector<ClassTwoElement> kernel;
  for (std::size_t x = 0; x < total; ++x)
    if (g.in_kernel(g.decode(x))) kernel.push_back(g.decode(x));
  std::vector<ClassTwoElement> reps;
  for (std::size_t x = 0; x < total; ++x) {
    if (coset[x] != unassigned) continue;
    auto id = static_cast<Element>(reps.size());
    ClassTwoElement u = g.decode(x);
    for (const auto& k : kernel) coset[g.encode(g.multiply(u, k))] = id;
    reps.push_back(std::move(u));
  }
  const std::size_t m = reps.size();
  std::vector<Element> mult(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mult[i * m + j] = coset[g.encode(g.multiply(reps[i], reps[j]))];
  std::vector<Element> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(coset[g.encode(g.generator(i))]);
  return EnumeratedQuotient{FiniteGroupTable(m, std::move(mult), 0, std::move(gens)), std::move(reps),
                            std::move(coset)};
}

FiniteGroupTable to_table(const ClassTwoGroup& g, const Limits& limits) { return enumerate(g, limits).table; }

ElementSet series_step_oracle(const FiniteGroupTable& g, const ElementSet& subgroup, const SeriesParams& params) {
  if (!is_subgroup(g, subgroup)) throw DomainError("series step: input is not a subgroup");
  if (!is_normal(g, subgroup)) throw DomainError("series step: input subgroup is not normal");
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> gens;
  auto add = [&](Element x) {
    if (!seen[x]) {
      seen[x] = 1;
      gens.push_back(x);
    }
  };
  for (Element h : subgroup) {
    add(g.power(h, params.q));
    for (Element x = 0; x < g.order(); ++x) add(g.commutator(h, x));
  }
  return generate_subgroup(g, gens);
}

QuotientMap induced_quotient_map(const std::vector<Word>& generator_images, const Presentation& source,
                                 const Presentation& target, const SeriesParams& params, const Limits& limits) {
  if (generator_images.size() != source.generator_count())
    throw DomainError("need one image word per source generator");
  ClassTwoGroup g1 = third_quotient(source, params, limits);
  ClassTwoGroup g2 = third_quotient(target, params, limits);
  std::vector<ClassTwoElement> target_gens;
  for (std::size_t i = 0; i < target.generator_count(); ++i) target_gens.push_back(g2.generator(i));
  std::vector<ClassTwoElement> images;
  for (const auto& w : generator_images) {
    for (const auto& l : w.letters())
      if (l.generator >= target.generator_count()) throw DomainError("image word uses an unknown target generator");
    images.push_back(evaluate_word(w, target_gens, g2));
  }
  for (std::size_t r = 0; r < source.relators().size(); ++r)
    if (!g2.in_kernel(evaluate_word(source.relators()[r], images, g2)))
      throw DomainError("not a homomorphism at level 3: relator " + std::to_string(r + 1) +
                        " survives in the target quotient");

  EnumeratedQuotient e1 = enumerate(g1, limits);
  EnumeratedQuotient e2 = enumerate(g2, limits);
  const std::size_t n = g1.rank();
  std::vector<Element> table_images;
  for (const auto& rep : e1.representatives) {
    ClassTwoElement y = g2.identity();
    for (std::size_t i = 0; i < n; ++i) y = g2.multiply(y, g2.power(images[i], rep.a[i]));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        y = g2.multiply(y, g2.power(g2.commutator(images[j], images[i]), rep.c[g1.pair_index(i, j)]));
    table_images.push_back(e2.index_of(g2, y));
  }
  return QuotientMap{g1, g2, TableHomomorphism{e1.table, e2.table, std::move(table_images)}};
}

}  // namespace qcent
