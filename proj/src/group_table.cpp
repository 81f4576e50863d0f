#include "qcent/group_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "qcent/error.hpp"

namespace qcent {

FiniteGroupTable::FiniteGroupTable(std::size_t order, std::vector<Element> mult, Element identity,
                                   std::vector<Element> generators)
    : order_(order), mult_(std::move(mult)), identity_(identity), generators_(std::move(generators)) {
  if (order_ == 0) throw DomainError("group table of order 0");
  if (mult_.size() != order_ * order_) throw DomainError("multiplication table has wrong size");
  if (identity_ >= order_) throw DomainError("identity index out of range");
  for (Element x : mult_)
    if (x >= order_) throw DomainError("table entry out of range");
  for (Element g : generators_)
    if (g >= order_) throw DomainError("generator index out of range");
  inverse_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    if (multiply(identity_, a) != a || multiply(a, identity_) != a) throw DomainError("identity law fails");
    bool found = false;
    for (Element b = 0; b < order_; ++b)
      if (multiply(a, b) == identity_) {
        if (multiply(b, a) != identity_) throw DomainError("inverse law fails");
        inverse_[a] = b;
        found = true;
        break;
      }
    if (!found) throw DomainError("element without inverse");
  }
  // each row must be a permutation
  std::vector<char> seen(order_);
  for (Element a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < order_; ++b) {
      if (seen[multiply(a, b)]) throw DomainError("table rows are not permutations");
      seen[multiply(a, b)] = 1;
    }
  }
  if (generate_subgroup(*this, generators_).size() != order_)
    throw DomainError("listed generators do not generate the group");

  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(order_);
  mix(identity_);
  for (Element x : mult_) mix(x);
  for (Element g : generators_) mix(g + 0x9e3779b9ULL);
  fingerprint_ = h;
}

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
  return abelian({static_cast<std::int64_t>(n)});
}

FiniteGroupTable FiniteGroupTable::abelian(const std::vector<std::int64_t>& orders) {
  std::size_t n = 1;
  for (auto o : orders) {
    if (o < 1) throw DomainError("cyclic factor order must be positive");
    n *= static_cast<std::size_t>(o);
  }
  auto digits = [&](std::size_t x) {
    std::vector<std::int64_t> d(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      d[i] = static_cast<std::int64_t>(x % static_cast<std::size_t>(orders[i]));
      x /= static_cast<std::size_t>(orders[i]);
    }
    return d;
  };
  auto encode = [&](const std::vector<std::int64_t>& d) {
    std::size_t x = 0, radix = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      x += static_cast<std::size_t>(d[i] % orders[i]) * radix;
      radix *= static_cast<std::size_t>(orders[i]);
    }
    return x;
  };
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto da = digits(a);
    for (std::size_t b = 0; b < n; ++b) {
      auto db = digits(b);
      for (std::size_t i = 0; i < orders.size(); ++i) db[i] += da[i];
      mult[a * n + b] = static_cast<Element>(encode(db));
    }
  }
  std::vector<Element> gens;
  std::size_t radix = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] > 1) gens.push_back(static_cast<Element>(radix));
    radix *= static_cast<std::size_t>(orders[i]);
  }
  return FiniteGroupTable(n, std::move(mult), 0, std::move(gens));
}

FiniteGroupTable::Element FiniteGroupTable::power(Element a, std::int64_t k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  Element result = identity_;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

FiniteGroupTable::Element FiniteGroupTable::commutator(Element a, Element b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

std::uint64_t FiniteGroupTable::element_order(Element a) const {
  std::uint64_t n = 1;
  Element x = a;
  while (x != identity_) {
    x = multiply(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroupTable::is_associative() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) {
      Element ab = multiply(a, b);
      for (Element c = 0; c < order_; ++c)
        if (multiply(ab, c) != multiply(a, multiply(b, c))) return false;
    }
  return true;
}

bool FiniteGroupTable::operator==(const FiniteGroupTable& other) const {
  return order_ == other.order_ && identity_ == other.identity_ && mult_ == other.mult_ &&
         generators_ == other.generators_;
}

ElementSet generate_subgroup(const FiniteGroupTable& g, const std::vector<Element>& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> queue{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Element s : generators) {
      Element y = g.multiply(queue[i], s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

ElementSet whole_group(const FiniteGroupTable& g) {
  ElementSet all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return all;
}

namespace {

std::vector<char> membership(const FiniteGroupTable& g, const ElementSet& s) {
  std::vector<char> in(g.order(), 0);
  for (Element x : s) {
    if (x >= g.order()) throw DomainError("element index out of range");
    in[x] = 1;
  }
  return in;
}

}  // namespace

bool is_subgroup(const FiniteGroupTable& g, const ElementSet& s) {
  auto in = membership(g, s);
  if (!in[g.identity()]) return false;
  for (Element a : s)
    for (Element b : s)
      if (!in[g.multiply(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteGroupTable& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  auto in = membership(g, s);
  for (Element x : s)
    for (Element t : g.generators())
      if (!in[g.multiply(g.multiply(g.inverse(t), x), t)]) return false;
  return true;
}

ElementSet center(const FiniteGroupTable& g) {
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](Element t) { return g.multiply(x, t) == g.multiply(t, x); });
    if (central) out.push_back(x);
  }
  return out;
}

ElementSet commutator_subgroup(const FiniteGroupTable& g, const ElementSet& left, const ElementSet& right) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> gens;
  for (Element a : left)
    for (Element b : right) {
      Element c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return generate_subgroup(g, gens);
}

ElementSet derived_subgroup(const FiniteGroupTable& g) {
  return commutator_subgroup(g, whole_group(g), whole_group(g));
}

TableQuotient quotient(const FiniteGroupTable& g, const ElementSet& normal) {
  if (!is_normal(g, normal)) throw DomainError("quotient by a subset that is not a normal subgroup");
  const std::size_t n = g.order();
  constexpr Element unassigned = ~Element{0};
  std::vector<Element> coset(n, unassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] != unassigned) continue;
    auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element k : normal) coset[g.multiply(x, k)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Element> mult(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mult[i * m + j] = coset[g.multiply(reps[i], reps[j])];
  std::vector<Element> gens;
  for (Element s : g.generators()) gens.push_back(coset[s]);
  return TableQuotient{FiniteGroupTable(m, std::move(mult), coset[g.identity()], std::move(gens)),
                       std::move(coset)};
}

std::uint64_t exponent(const FiniteGroupTable& g) {
  std::uint64_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

std::optional<int> nilpotency_class(const FiniteGroupTable& g) {
  ElementSet all = whole_group(g);
  ElementSet term = all;
  int c = 0;
  while (term.size() > 1) {
    ElementSet next = commutator_subgroup(g, term, all);
    if (next.size() == term.size()) return std::nullopt;
    term = std::move(next);
    ++c;
  }
  return c;
}

std::vector<std::int64_t> abelian_invariants(const FiniteGroupTable& g) {
  TableQuotient ab = quotient(g, derived_subgroup(g));
  const FiniteGroupTable& a = ab.group;
  std::vector<std::int64_t> out;
  std::size_t n = a.order();
  std::vector<std::int64_t> primes;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(static_cast<std::int64_t>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) primes.push_back(static_cast<std::int64_t>(n));
  for (std::int64_t p : primes) {
    // log_p |{x : x^(p^k) = 1}| for k = 0, 1, ...
    std::vector<int> logs{0};
    std::int64_t pk = 1;
    for (;;) {
      pk *= p;
      std::size_t count = 0;
      for (Element x = 0; x < a.order(); ++x)
        if (a.power(x, pk) == a.identity()) ++count;
      int l = 0;
      while (count > 1) {
        count /= static_cast<std::size_t>(p);
        ++l;
      }
      if (l == logs.back()) break;
      logs.push_back(l);
    }
    // number of factors of order >= p^k is logs[k] - logs[k-1]
    const int top = static_cast<int>(logs.size()) - 1;
    for (int k = 1; k <= top; ++k) {
      int at_least_k = logs[k] - logs[k - 1];
      int at_least_next = k < top ? logs[k + 1] - logs[k] : 0;
      std::int64_t order = 1;
      for (int i = 0; i < k; ++i) order *= p;
      for (int i = 0; i < at_least_k - at_least_next; ++i) out.push_back(order);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool TableHomomorphism::is_homomorphism() const {
  if (images.size() != source.order()) return false;
  for (Element x : images)
    if (x >= target.order()) return false;
  for (Element a = 0; a < source.order(); ++a)
    for (Element b = 0; b < source.order(); ++b)
      if (images[source.multiply(a, b)] != target.multiply(images[a], images[b])) return false;
  return true;
}

bool TableHomomorphism::is_injective() const {
  std::vector<char> seen(target.order(), 0);
  for (Element x : images) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool TableHomomorphism::is_surjective() const {
  std::vector<char> seen(target.order(), 0);
  for (Element x : images) seen[x] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

TableHomomorphism identity_homomorphism(const FiniteGroupTable& g) {
  std::vector<Element> images(g.order());
  std::iota(images.begin(), images.end(), Element{0});
  return TableHomomorphism{g, g, std::move(images)};
}

TableHomomorphism compose(const TableHomomorphism& after, const TableHomomorphism& before) {
  if (!(before.target == after.source)) throw DomainError("compose: maps are not composable");
  std::vector<Element> images(before.source.order());
  for (Element x = 0; x < before.source.order(); ++x) images[x] = after.images.at(before.images.at(x));
  return TableHomomorphism{before.source, after.target, std::move(images)};
}

namespace {

// Partial homomorphism on the subgroup generated by the first `count`
// source generators; returns false on inconsistency or (if requested) a
// collision of images.
bool extend_partial(const FiniteGroupTable& source, const FiniteGroupTable& target,
                    const std::vector<Element>& gen_images, std::size_t count, bool require_injective,
                    std::vector<Element>& images) {
  constexpr Element unassigned = ~Element{0};
  images.assign(source.order(), unassigned);
  std::vector<char> hit(require_injective ? target.order() : 0, 0);
  images[source.identity()] = target.identity();
  if (require_injective) hit[target.identity()] = 1;
  std::vector<Element> queue{source.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element h = queue[i];
    for (std::size_t s = 0; s < count; ++s) {
      Element k = source.multiply(h, source.generators()[s]);
      Element img = target.multiply(images[h], gen_images[s]);
      if (images[k] == unassigned) {
        if (require_injective) {
          if (hit[img]) return false;
          hit[img] = 1;
        }
        images[k] = img;
        queue.push_back(k);
      } else if (images[k] != img) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<TableHomomorphism> extend_from_generators(const FiniteGroupTable& source,
                                                        const FiniteGroupTable& target,
                                                        const std::vector<Element>& generator_images) {
  if (generator_images.size() != source.generators().size())
    throw DomainError("need one image per source generator");
  for (Element t : generator_images)
    if (t >= target.order()) throw DomainError("generator image out of range");
  std::vector<Element> images;
  if (!extend_partial(source, target, generator_images, generator_images.size(), false, images))
    return std::nullopt;
  return TableHomomorphism{source, target, std::move(images)};
}

namespace {

std::vector<std::uint64_t> order_histogram(const FiniteGroupTable& g) {
  std::vector<std::uint64_t> orders;
  for (Element x = 0; x < g.order(); ++x) orders.push_back(g.element_order(x));
  std::sort(orders.begin(), orders.end());
  return orders;
}

bool search(const FiniteGroupTable& g1, const FiniteGroupTable& g2, const std::vector<std::uint64_t>& orders1,
            const std::vector<std::uint64_t>& orders2, std::vector<Element>& chosen) {
  std::vector<Element> images;
  const std::size_t depth = chosen.size();
  if (depth == g1.generators().size()) return true;
  const Element s = g1.generators()[depth];
  for (Element t = 0; t < g2.order(); ++t) {
    if (orders2[t] != orders1[s]) continue;
    chosen.push_back(t);
    if (extend_partial(g1, g2, chosen, chosen.size(), true, images) && search(g1, g2, orders1, orders2, chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

IsomorphismResult is_isomorphic(const FiniteGroupTable& g1, const FiniteGroupTable& g2) {
  IsomorphismResult no;
  if (g1.order() != g2.order()) return no;
  if (order_histogram(g1) != order_histogram(g2)) return no;
  if (exponent(g1) != exponent(g2)) return no;
  if (center(g1).size() != center(g2).size()) return no;
  if (abelian_invariants(g1) != abelian_invariants(g2)) return no;

  std::vector<std::uint64_t> orders1(g1.order()), orders2(g2.order());
  for (Element x = 0; x < g1.order(); ++x) orders1[x] = g1.element_order(x);
  for (Element x = 0; x < g2.order(); ++x) orders2[x] = g2.element_order(x);
  std::vector<Element> chosen;
  if (!search(g1, g2, orders1, orders2, chosen)) return no;
  // injective on g1 (generated by its generators) and equal orders: bijective
  return IsomorphismResult{true, chosen};
}

}  // namespace qcent
