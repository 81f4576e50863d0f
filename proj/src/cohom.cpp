#include "qcent/cohom.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <string>

#include "qcent/error.hpp"
#include "qcent/qcentral.hpp"

namespace qcent {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

zq::Ring ring_for(std::int64_t q) {
  SeriesParams sp = SeriesParams::from_q(q);
  return zq::Ring(sp.p, sp.d);
}

void require_same(const Cochain& a, const Cochain& b) {
  if (a.modulus != b.modulus) throw DomainError("cochains have different moduli");
  if (a.group_fingerprint != b.group_fingerprint || a.group_order != b.group_order)
    throw DomainError("cochains live on different groups");
}

void require_on(const FiniteGroupTable& g, const Cochain& c) {
  if (c.group_fingerprint != g.fingerprint() || c.group_order != g.order())
    throw DomainError("cochain does not live on this group");
}

int log_p(std::int64_t order, std::int64_t p) {
  int e = 0;
  while (order > 1) {
    order /= p;
    ++e;
  }
  return e;
}

}  // namespace

std::size_t Cochain::support_size() const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](std::int64_t x) { return x != 0; }));
}

Cochain zero_cochain(const FiniteGroupTable& g, int degree, std::int64_t q) {
  if (degree != 1 && degree != 2) throw DomainError("cochains of degree 1 or 2 only");
  Cochain c;
  c.degree = degree;
  c.modulus = q;
  c.group_fingerprint = g.fingerprint();
  c.group_order = g.order();
  c.values.assign(degree == 1 ? g.order() : g.order() * g.order(), 0);
  return c;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  require_same(a, b);
  if (a.degree != b.degree) throw DomainError("cochains have different degrees");
  Cochain out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = (a.values[i] + b.values[i]) % a.modulus;
  return out;
}

Cochain scale(const Cochain& a, std::int64_t k) {
  Cochain out = a;
  k = ((k % a.modulus) + a.modulus) % a.modulus;
  for (auto& x : out.values) x = (x * k) % a.modulus;
  return out;
}

bool is_cocycle(const FiniteGroupTable& g, const Cochain& c) {
  require_on(g, c);
  const std::size_t n = g.order();
  const std::int64_t q = c.modulus;
  const Element e = g.identity();
  if (c.degree == 1) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (((c(x) + c(y) - c(g.multiply(x, y))) % q + q) % q != 0) return false;
    return true;
  }
  for (Element x = 0; x < n; ++x)
    if (c(e, x) % q != 0 || c(x, e) % q != 0) return false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = g.multiply(x, y);
      for (Element z = 0; z < n; ++z) {
        std::int64_t v = c(y, z) - c(xy, z) + c(x, g.multiply(y, z)) - c(x, y);
        if ((v % q + q) % q != 0) return false;
      }
    }
  return true;
}

Cochain coboundary(const FiniteGroupTable& g, const Cochain& phi) {
  require_on(g, phi);
  if (phi.degree != 1) throw DomainError("coboundary takes a 1-cochain");
  Cochain out = zero_cochain(g, 2, phi.modulus);
  const std::size_t n = g.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      out.values[x * n + y] =
          (((phi(x) + phi(y) - phi(g.multiply(x, y))) % phi.modulus) + phi.modulus) % phi.modulus;
  return out;
}

CochainModel::CochainModel(const FiniteGroupTable& g, std::int64_t q) : group_(g), ring_(ring_for(q)) {
  const std::size_t n = g.order();
  for (Element s : g.generators())
    if (s != g.identity() && std::find(gens_.begin(), gens_.end(), s) == gens_.end()) gens_.push_back(s);
  position_.assign(n, npos);
  parent_.assign(n, g.identity());
  parent_edge_.assign(n, npos);
  std::vector<char> seen(n, 0);
  seen[g.identity()] = 1;
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      Element y = g.multiply(x, gens_[k]);
      if (seen[y]) continue;
      seen[y] = 1;
      parent_[y] = x;
      parent_edge_[y] = k;
      position_[y] = order_.size();
      order_.push_back(y);
      queue.push_back(y);
    }
  }
  if (order_.size() + 1 != n) throw DomainError("table generators do not generate the group");
}

std::size_t CochainModel::unknown_count() const { return order_.size() * gens_.size(); }

std::size_t CochainModel::unknown_index(Element g, std::size_t slot) const {
  if (g >= position_.size() || position_[g] == npos || slot >= gens_.size())
    throw DomainError("no unknown for this pair");
  return position_[g] * gens_.size() + slot;
}

zq::Vector CochainModel::restrict(const Cochain& c) const {
  require_on(group_, c);
  if (c.degree != 2) throw DomainError("restrict takes a 2-cochain");
  zq::Vector u(unknown_count());
  for (Element x : order_)
    for (std::size_t k = 0; k < gens_.size(); ++k) u[unknown_index(x, k)] = ring_.reduce(c(x, gens_[k]));
  return u;
}

Cochain CochainModel::expand(const zq::Vector& u) const {
  if (u.size() != unknown_count()) throw DomainError("expand: wrong number of values");
  const std::size_t n = group_.order();
  const Element e = group_.identity();
  Cochain c = zero_cochain(group_, 2, ring_.q());
  auto U = [&](Element x, std::size_t k) -> std::int64_t { return x == e ? 0 : u[unknown_index(x, k)]; };
  for (Element h : order_) {
    const Element hp = parent_[h];
    const std::size_t k = parent_edge_[h];
    const std::int64_t base = U(hp, k);
    for (Element x = 0; x < n; ++x)
      c.values[x * n + h] = ring_.reduce(c.values[x * n + hp] + U(group_.multiply(x, hp), k) - base);
  }
  return c;
}

Cochain CochainModel::expand_degree1(const zq::Vector& v) const {
  if (v.size() != gens_.size()) throw DomainError("expand_degree1: wrong number of values");
  Cochain c = zero_cochain(group_, 1, ring_.q());
  for (Element h : order_) c.values[h] = ring_.reduce(c.values[parent_[h]] + v[parent_edge_[h]]);
  return c;
}

zq::Matrix CochainModel::coboundary_matrix() const {
  const Element e = group_.identity();
  zq::Matrix d(unknown_count(), order_.size());
  for (Element x : order_)
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const std::size_t row = unknown_index(x, k);
      const Element s = gens_[k];
      const Element xs = group_.multiply(x, s);
      d(row, position_[x]) = ring_.add(d(row, position_[x]), 1);
      d(row, position_[s]) = ring_.add(d(row, position_[s]), 1);
      if (xs != e) d(row, position_[xs]) = ring_.sub(d(row, position_[xs]), 1);
    }
  return d;
}

zq::Matrix CochainModel::cocycle_space() const {
  const std::size_t n = group_.order();
  const std::size_t m = unknown_count();
  const Element e = group_.identity();
  if (m == 0) return zq::Matrix(0, 0);
  // f[x][h] as a linear form in the unknowns, for all x and h.
  std::vector<zq::Vector> f(n * n, zq::Vector(m, 0));
  auto add_unknown = [&](zq::Vector& v, Element x, std::size_t k, std::int64_t sign) {
    if (x != e) v[unknown_index(x, k)] = ring_.add(v[unknown_index(x, k)], sign);
  };
  for (Element h : order_) {
    const Element hp = parent_[h];
    const std::size_t k = parent_edge_[h];
    for (Element x = 0; x < n; ++x) {
      if (x == e) continue;
      zq::Vector v = f[x * n + hp];
      add_unknown(v, group_.multiply(x, hp), k, 1);
      add_unknown(v, hp, k, -1);
      f[x * n + h] = std::move(v);
    }
  }
  zq::RowAccumulator rows(ring_, m);
  for (Element hp = 0; hp < n; ++hp)
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const Element h = group_.multiply(hp, gens_[k]);
      if (h != e && parent_[h] == hp && parent_edge_[h] == k) continue;
      for (Element x = 0; x < n; ++x) {
        if (x == e) continue;
        // f(x, hp s) - f(x, hp) - f(x hp, s) + f(hp, s) = 0
        zq::Vector v = f[x * n + h];
        const zq::Vector& w = f[x * n + hp];
        for (std::size_t i = 0; i < m; ++i) v[i] = ring_.sub(v[i], w[i]);
        add_unknown(v, group_.multiply(x, hp), k, -1);
        add_unknown(v, hp, k, 1);
        rows.add(v);
      }
    }
  zq::Matrix constraints = rows.finish();
  if (constraints.rows() == 0) return zq::Matrix::identity(m);
  return zq::kernel(ring_, constraints);
}

zq::Matrix CochainModel::hom_space() const {
  const std::size_t n = group_.order();
  const std::size_t m = gens_.size();
  const Element e = group_.identity();
  if (m == 0) return zq::Matrix(0, 0);
  std::vector<zq::Vector> phi(n, zq::Vector(m, 0));
  for (Element h : order_) {
    phi[h] = phi[parent_[h]];
    phi[h][parent_edge_[h]] = ring_.add(phi[h][parent_edge_[h]], 1);
  }
  zq::RowAccumulator rows(ring_, m);
  for (Element hp = 0; hp < n; ++hp)
    for (std::size_t k = 0; k < m; ++k) {
      const Element h = group_.multiply(hp, gens_[k]);
      if (h != e && parent_[h] == hp && parent_edge_[h] == k) continue;
      zq::Vector v = phi[hp];
      v[k] = ring_.add(v[k], 1);
      for (std::size_t i = 0; i < m; ++i) v[i] = ring_.sub(v[i], phi[h][i]);
      rows.add(v);
    }
  zq::Matrix constraints = rows.finish();
  if (constraints.rows() == 0) return zq::Matrix::identity(m);
  return zq::kernel(ring_, constraints);
}

std::size_t CohomologySpace::basis_support_size() const {
  std::size_t total = 0;
  for (const auto& c : basis_) total += c.support_size();
  return total;
}

std::optional<zq::Vector> CohomologySpace::coordinates(const Cochain& c) const {
  if (c.degree != degree_) throw DomainError("cochain degree does not match the cohomology space");
  if (c.modulus != modulus_) throw DomainError("cochain modulus does not match the cohomology space");
  require_on(model_->group(), c);
  const zq::Ring& ring = model_->ring();
  Cochain reduced = c;
  for (auto& x : reduced.values) x = ring.reduce(x);
  zq::Vector u;
  if (degree_ == 1) {
    u.resize(model_->generators().size());
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = reduced(model_->generators()[k]);
    if (model_->expand_degree1(u) != reduced) return std::nullopt;
  } else {
    u = model_->restrict(reduced);
    if (model_->expand(u) != reduced) return std::nullopt;
  }
  return module_->coordinates(u);
}

Cochain CohomologySpace::representative(const zq::Vector& coords) const {
  if (coords.size() != basis_.size()) throw DomainError("coordinate vector has the wrong length");
  Cochain out = zero_cochain(model_->group(), degree_, modulus_);
  for (std::size_t k = 0; k < coords.size(); ++k) out = out + scale(basis_[k], coords[k]);
  return out;
}

CohomologySpace h1(const FiniteGroupTable& g, std::int64_t q) {
  CohomologySpace out;
  auto model = std::make_shared<CochainModel>(g, q);
  const zq::Ring& ring = model->ring();
  const std::size_t m = model->generators().size();
  auto module = std::make_shared<zq::Subquotient>(ring, model->hom_space(), zq::Matrix(m, 0));
  out.degree_ = 1;
  out.modulus_ = q;
  out.fingerprint_ = g.fingerprint();
  out.invariants_ = module->orders();
  for (std::size_t k = 0; k < module->rank(); ++k) out.basis_.push_back(model->expand_degree1(module->lift(k)));
  out.model_ = std::move(model);
  out.module_ = std::move(module);
  return out;
}

CohomologySpace h2(const FiniteGroupTable& g, std::int64_t q, std::size_t bound) {
  if (g.order() > bound)
    throw SizeError("H^2 of a group of order " + std::to_string(g.order()) + " exceeds the H^2 bound " +
                    std::to_string(bound));
  CohomologySpace out;
  auto model = std::make_shared<CochainModel>(g, q);
  auto module = std::make_shared<zq::Subquotient>(model->ring(), model->cocycle_space(), model->coboundary_matrix());
  out.degree_ = 2;
  out.modulus_ = q;
  out.fingerprint_ = g.fingerprint();
  out.invariants_ = module->orders();
  for (std::size_t k = 0; k < module->rank(); ++k) out.basis_.push_back(model->expand(module->lift(k)));
  out.model_ = std::move(model);
  out.module_ = std::move(module);
  return out;
}

Cochain cup(const Cochain& a, const Cochain& b) {
  require_same(a, b);
  if (a.degree != 1 || b.degree != 1) throw DomainError("cup is defined here for degree-1 classes");
  Cochain out;
  out.degree = 2;
  out.modulus = a.modulus;
  out.group_fingerprint = a.group_fingerprint;
  out.group_order = a.group_order;
  const std::size_t n = a.group_order;
  out.values.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out.values[x * n + y] = (a.values[x] * b.values[y]) % a.modulus;
  return out;
}

std::optional<Cochain> coboundary_witness(const FiniteGroupTable& g, const Cochain& c) {
  require_on(g, c);
  if (c.degree != 2) throw DomainError("coboundary_witness takes a 2-cochain");
  CochainModel model(g, c.modulus);
  Cochain reduced = c;
  for (auto& x : reduced.values) x = model.ring().reduce(x);
  auto sol = zq::solve(model.ring(), model.coboundary_matrix(), model.restrict(reduced));
  if (!sol) return std::nullopt;
  Cochain phi = zero_cochain(g, 1, c.modulus);
  for (std::size_t i = 0; i < model.elements().size(); ++i) phi.values[model.elements()[i]] = (*sol)[i];
  if (coboundary(g, phi) != reduced) return std::nullopt;
  return phi;
}

bool is_coboundary(const FiniteGroupTable& g, const Cochain& c) { return coboundary_witness(g, c).has_value(); }

DecomposableH2 decomposable_h2(const FiniteGroupTable& g, std::int64_t q, std::size_t h2_bound,
                               std::size_t order_bound) {
  if (g.order() > order_bound)
    throw SizeError("group of order " + std::to_string(g.order()) + " exceeds the order bound " +
                    std::to_string(order_bound));
  DecomposableH2 out{q, h1(g, q), {}, {}, {}, std::nullopt, {}};
  CochainModel model(g, q);
  const zq::Ring& ring = model.ring();
  const auto& a = out.h1.basis();
  const std::size_t m = a.size();
  const auto& gens = model.generators();

  std::vector<zq::Vector> columns;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      zq::Vector u(model.unknown_count());
      for (Element x : model.elements())
        for (std::size_t k = 0; k < gens.size(); ++k) u[model.unknown_index(x, k)] = ring.mul(a[i](x), a[j](gens[k]));
      columns.push_back(std::move(u));
    }
  zq::Subquotient module(ring, zq::Matrix::from_columns(model.unknown_count(), columns), model.coboundary_matrix());
  out.invariants = module.orders();
  out.products.assign(m, std::vector<zq::Vector>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.products[i][j] = module.numerator_coordinates(i * m + j);
  for (std::size_t k = 0; k < module.rank(); ++k) {
    zq::Vector coeff = module.lift_coefficients(k);
    Cochain rep = zero_cochain(g, 2, q);
    for (std::size_t t = 0; t < coeff.size(); ++t)
      if (coeff[t] != 0) rep = rep + scale(cup(a[t / m], a[t % m]), coeff[t]);
    out.basis.push_back(std::move(rep));
    out.basis_coefficients.push_back(std::move(coeff));
  }
  if (g.order() <= h2_bound) {
    CohomologySpace full = h2(g, q, h2_bound);
    std::vector<zq::Vector> incl;
    for (const auto& b : out.basis) incl.push_back(*full.coordinates(b));
    out.inclusion = zq::Matrix::from_columns(full.dimension(), incl);
  }
  return out;
}

zq::Vector PairingTensor::evaluate(const zq::Vector& x, const zq::Vector& y) const {
  if (x.size() != m() || y.size() != m()) throw DomainError("pairing argument has the wrong length");
  zq::Vector out(target_dim(), 0);
  for (std::size_t i = 0; i < m(); ++i)
    for (std::size_t j = 0; j < m(); ++j) {
      const std::int64_t c = (x[i] % modulus) * (y[j] % modulus) % modulus;
      if (c == 0) continue;
      for (std::size_t t = 0; t < out.size(); ++t) out[t] = (out[t] + c * values[i][j][t]) % target_orders[t];
    }
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = ((out[t] % target_orders[t]) + target_orders[t]) % target_orders[t];
  return out;
}

void PairingTensor::check() const {
  if (values.size() != m()) throw DomainError("pairing tensor: row count differs from m");
  for (const auto& row : values) {
    if (row.size() != m()) throw DomainError("pairing tensor: column count differs from m");
    for (const auto& v : row)
      if (v.size() != target_dim()) throw DomainError("pairing tensor: value length differs from target_dim");
  }
  for (auto o : source_orders)
    if (o < 2 || modulus % o != 0) throw DomainError("pairing tensor: source order must divide the modulus");
  for (auto o : target_orders)
    if (o < 2 || modulus % o != 0) throw DomainError("pairing tensor: target order must divide the modulus");
}

PairingTensor pairing_gram(const DecomposableH2& dec) {
  return PairingTensor{dec.modulus, dec.h1.invariants(), dec.invariants, dec.products};
}

PairingTensor pairing_gram(const FiniteGroupTable& g, std::int64_t q, std::size_t order_bound) {
  return pairing_gram(decomposable_h2(g, q, 0, order_bound));
}

bool pairings_equivalent(const PairingTensor& t1, const PairingTensor& t2) {
  t1.check();
  t2.check();
  if (t1.modulus != t2.modulus) throw DomainError("pairings over different moduli");
  if (t1.m() > 4 || t2.m() > 4) throw DomainError("pairings_equivalent searches only m <= 4");
  if (t1.m() != t2.m()) return false;
  auto sorted = [](std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(t1.source_orders) != sorted(t2.source_orders)) return false;
  if (sorted(t1.target_orders) != sorted(t2.target_orders)) return false;

  const zq::Ring ring = ring_for(t1.modulus);
  const std::int64_t p = ring.p();
  const std::size_t m = t1.m();
  std::vector<int> e1, e2;
  for (auto o : t1.source_orders) e1.push_back(log_p(o, p));
  for (auto o : t2.source_orders) e2.push_back(log_p(o, p));
  const std::size_t d1 = t1.target_dim(), d2 = t2.target_dim();

  // Column j of A is the image of the j-th basis vector of T2's source in
  // T1's source; the search keeps T1(A e_i, A e_j) -> T2(e_i, e_j) a
  // well-defined bijection between the spans built so far.
  std::vector<zq::Vector> columns;
  std::vector<zq::Vector> embedded_columns;
  std::vector<zq::Vector> pairs, left, right;

  auto consistent = [&]() {
    int a = zq::span_length(ring, zq::Matrix::from_columns(d1 + d2, pairs));
    int b = zq::span_length(ring, zq::Matrix::from_columns(d1, left));
    int c = zq::span_length(ring, zq::Matrix::from_columns(d2, right));
    return a == b && b == c;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t j) -> bool {
    if (j == m) return true;
    std::vector<std::int64_t> step(m), bound(m);
    for (std::size_t i = 0; i < m; ++i) {
      step[i] = ring.power_of_p(std::max(0, e1[i] - e2[j]));
      bound[i] = t1.source_orders[i];
    }
    zq::Vector x(m, 0);
    int target_length = 0;
    for (std::size_t t = 0; t <= j; ++t) target_length += e2[t];
    while (true) {
      bool nonzero = std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; });
      if (nonzero) {
        columns.push_back(x);
        embedded_columns.push_back(zq::embed(ring, t1.source_orders, x));
        if (zq::span_length(ring, zq::Matrix::from_columns(m, embedded_columns)) == target_length) {
          const std::size_t mark = pairs.size();
          for (std::size_t a = 0; a <= j; ++a)
            for (std::size_t b = 0; b <= j; ++b) {
              if (a != j && b != j) continue;
              zq::Vector l = zq::embed(ring, t1.target_orders, t1.evaluate(columns[a], columns[b]));
              zq::Vector r = zq::embed(ring, t2.target_orders, t2.values[a][b]);
              zq::Vector both = l;
              both.insert(both.end(), r.begin(), r.end());
              left.push_back(std::move(l));
              right.push_back(std::move(r));
              pairs.push_back(std::move(both));
            }
          if (consistent() && search(j + 1)) return true;
          pairs.resize(mark);
          left.resize(mark);
          right.resize(mark);
        }
        columns.pop_back();
        embedded_columns.pop_back();
      }
      std::size_t i = 0;
      for (; i < m; ++i) {
        x[i] += step[i];
        if (x[i] < bound[i]) break;
        x[i] = 0;
      }
      if (i == m) return false;
    }
  };
  return search(0);
}

Cochain inflation(const TableHomomorphism& map, const Cochain& c) {
  if (!map.is_homomorphism()) throw DomainError("map not a homomorphism");
  require_on(map.target, c);
  Cochain out = zero_cochain(map.source, c.degree, c.modulus);
  const std::size_t n = map.source.order();
  if (c.degree == 1) {
    for (Element x = 0; x < n; ++x) out.values[x] = c(map(x));
  } else {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) out.values[x * n + y] = c(map(x), map(y));
  }
  return out;
}

namespace {

bool bijective(const zq::Ring& ring, const zq::Matrix& m, const std::vector<std::int64_t>& row_orders,
               const std::vector<std::int64_t>& col_orders) {
  auto length = [&](const std::vector<std::int64_t>& orders) {
    int len = 0;
    for (auto o : orders) len += log_p(o, ring.p());
    return len;
  };
  if (length(row_orders) != length(col_orders)) return false;
  std::vector<zq::Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(zq::embed(ring, row_orders, m.column(j)));
  return zq::span_length(ring, zq::Matrix::from_columns(row_orders.size(), cols)) == length(row_orders);
}

}  // namespace

InducedMaps induced_h_maps(const TableHomomorphism& pi, std::int64_t q, std::size_t h2_bound,
                           std::size_t order_bound) {
  if (!pi.is_homomorphism()) throw DomainError("not a homomorphism");
  DecomposableH2 src = decomposable_h2(pi.source, q, h2_bound, order_bound);
  DecomposableH2 tgt = decomposable_h2(pi.target, q, h2_bound, order_bound);
  const zq::Ring ring = ring_for(q);
  const std::size_t ms = src.h1.dimension(), mt = tgt.h1.dimension();

  InducedMaps out;
  std::vector<zq::Vector> cols1;
  for (const auto& b : tgt.h1.basis()) cols1.push_back(*src.h1.coordinates(inflation(pi, b)));
  out.degree1 = zq::Matrix::from_columns(ms, cols1);
  if (out.degree1.cols() != mt) out.degree1 = zq::Matrix(ms, mt);

  // pi^*(a_i u a_j) = pi^*a_i u pi^*a_j, expanded in the source products.
  std::vector<zq::Vector> cols2;
  for (const auto& coeff : tgt.basis_coefficients) {
    zq::Vector v(src.dimension(), 0);
    for (std::size_t t = 0; t < coeff.size(); ++t) {
      if (coeff[t] == 0) continue;
      const std::size_t i = t / mt, j = t % mt;
      for (std::size_t l = 0; l < ms; ++l)
        for (std::size_t k = 0; k < ms; ++k) {
          std::int64_t c = ring.mul(coeff[t], ring.mul(out.degree1(l, i), out.degree1(k, j)));
          if (c == 0) continue;
          for (std::size_t r = 0; r < v.size(); ++r) v[r] = ring.add(v[r], ring.mul(c, src.products[l][k][r]));
        }
    }
    for (std::size_t r = 0; r < v.size(); ++r) v[r] %= src.invariants[r];
    cols2.push_back(std::move(v));
  }
  out.degree2_decomposable = zq::Matrix::from_columns(src.dimension(), cols2);
  if (out.degree2_decomposable.cols() != tgt.dimension())
    out.degree2_decomposable = zq::Matrix(src.dimension(), tgt.dimension());
  out.degree1_bijective = bijective(ring, out.degree1, src.h1.invariants(), tgt.h1.invariants());
  out.degree2_bijective = bijective(ring, out.degree2_decomposable, src.invariants, tgt.invariants);
  return out;
}

}  // namespace qcent
