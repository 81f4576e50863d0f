#include "qcent/milnor.hpp"

#include <cstdlib>
#include <string>

#include "qcent/error.hpp"

namespace qcent {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r != 0) {
    std::int64_t t = g / r;
    std::int64_t nr = g - t * r;
    g = r;
    r = nr;
    std::int64_t nx = x - t * x1;
    x = x1;
    x1 = nx;
  }
  if (g != 1) throw DomainError("not invertible");
  return mod(x, m);
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  if (e < 0) {
    b = inverse_mod(b, m);
    e = -e;
  }
  std::int64_t r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// x = l^v * w with w a unit; returns v and w mod l (sign included).
struct LocalParts {
  std::int64_t valuation = 0;
  std::int64_t residue = 1;
};

LocalParts split(const FieldValue& x, std::int64_t l) {
  if (x.num == 0 || x.den == 0) throw DomainError("field value must be a nonzero rational");
  LocalParts out;
  std::int64_t n = x.num, d = x.den;
  while (n % l == 0) {
    n /= l;
    ++out.valuation;
  }
  while (d % l == 0) {
    d /= l;
    --out.valuation;
  }
  out.residue = mod(n, l) * inverse_mod(mod(d, l), l) % l;
  return out;
}

struct LocalData {
  GaloisField residue_field;
  std::int64_t unit;  // u
  std::int64_t q;

  // class of a residue in F_l* / F_l*^q, measured against u
  std::int64_t unit_class(std::int64_t w) const {
    return mod(residue_field.log(mod(w, residue_field.size())) * inverse_mod(residue_field.log(unit), q), q);
  }
};

LocalData local_data(const FieldDescriptor& f) {
  GaloisField gf(f.parameter);
  const std::int64_t p = f.params.p;
  for (std::int64_t w = 2; w < f.parameter; ++w)
    if (gf.log(w) % p != 0) return LocalData{gf, w, f.params.q};
  throw DomainError("no non-q-th-power unit");  // unreachable once q | l - 1
}

std::int64_t finite_generator(const GaloisField& gf, std::int64_t p) {
  for (std::int64_t x = 2; x < gf.size(); ++x)
    if (gf.log(x) % p != 0) return x;
  throw DomainError("no generator of F*/F*^q");
}

}  // namespace

FieldDescriptor FieldDescriptor::parse(std::string_view text, const SeriesParams& params) {
  FieldDescriptor f;
  f.params = params;
  auto number = [&](std::string_view digits) {
    if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw DomainError("bad field descriptor \"" + std::string(text) + "\"");
    return std::stoll(std::string(digits));
  };
  if (text == "R") {
    f.kind = FieldKind::real;
  } else if (text.substr(0, 3) == "Fq:") {
    f.kind = FieldKind::finite;
    f.parameter = number(text.substr(3));
  } else if (text.substr(0, 3) == "Qp:") {
    f.kind = FieldKind::local;
    f.parameter = number(text.substr(3));
  } else {
    throw DomainError("bad field descriptor \"" + std::string(text) + "\"; expected Fq:<size>, Qp:<l> or R");
  }
  validate(f);
  return f;
}

std::string FieldDescriptor::to_string() const {
  switch (kind) {
    case FieldKind::finite:
      return "Fq:" + std::to_string(parameter);
    case FieldKind::local:
      return "Qp:" + std::to_string(parameter);
    case FieldKind::real:
      return "R";
  }
  return "?";
}

void validate(const FieldDescriptor& f) {
  const std::int64_t q = f.params.q, p = f.params.p;
  switch (f.kind) {
    case FieldKind::finite: {
      if (f.parameter < 2 || f.parameter > (1 << 16)) throw DomainError("finite field size out of range");
      GaloisField check_size(f.parameter);  // throws unless a prime power
      if (f.parameter % q != 1 % q)
        throw DomainError("unsupported field " + f.to_string() + ": size is not 1 mod q = " + std::to_string(q));
      break;
    }
    case FieldKind::local:
      if (!is_prime(f.parameter) || f.parameter > (1 << 16))
        throw DomainError("unsupported field " + f.to_string() + ": residue characteristic must be a prime");
      if (f.parameter == p)
        throw DomainError("unsupported field " + f.to_string() + ": residue characteristic equals p");
      if ((f.parameter - 1) % q != 0)
        throw DomainError("unsupported field " + f.to_string() + ": q = " + std::to_string(q) + " does not divide l - 1");
      break;
    case FieldKind::real:
      if (q != 2) throw DomainError("unsupported field R: only q = 2");
      break;
  }
}

SymbolAlgebra k1(const FieldDescriptor& f) {
  validate(f);
  SymbolAlgebra s;
  s.field = f;
  const std::int64_t q = f.params.q;
  switch (f.kind) {
    case FieldKind::finite: {
      auto gf = std::make_shared<GaloisField>(f.parameter);
      std::int64_t u = finite_generator(*gf, f.params.p);
      s.k1_basis = {gf->name(u)};
      s.k1_elements = {FieldValue{u, 1}};
      s.k1_orders = {q};
      s.finite_field = std::move(gf);
      break;
    }
    case FieldKind::local: {
      LocalData d = local_data(f);
      s.k1_basis = {d.unit == f.parameter - 1 ? "-1" : std::to_string(d.unit), std::to_string(f.parameter)};
      s.k1_elements = {FieldValue{d.unit == f.parameter - 1 ? -1 : d.unit, 1}, FieldValue{f.parameter, 1}};
      s.k1_orders = {q, q};
      break;
    }
    case FieldKind::real:
      s.k1_basis = {"-1"};
      s.k1_elements = {FieldValue{-1, 1}};
      s.k1_orders = {2};
      break;
  }
  return s;
}

zq::Vector k1_class(const SymbolAlgebra& s, const FieldValue& x) {
  const FieldDescriptor& f = s.field;
  const std::int64_t q = f.params.q;
  switch (f.kind) {
    case FieldKind::finite: {
      const GaloisField& gf = *s.finite_field;
      if (x.num <= 0 || x.num >= gf.size() || x.den != 1) throw DomainError("not a nonzero element code");
      std::int64_t u = s.k1_elements[0].num;
      return {mod(gf.log(x.num) * inverse_mod(gf.log(u), q), q)};
    }
    case FieldKind::local: {
      LocalData d = local_data(f);
      LocalParts parts = split(x, f.parameter);
      return {d.unit_class(parts.residue), mod(parts.valuation, q)};
    }
    case FieldKind::real:
      if (x.num == 0 || x.den == 0) throw DomainError("field value must be a nonzero rational");
      return {(x.num < 0) != (x.den < 0) ? 1 : 0};
  }
  return {};
}

std::int64_t tame_symbol_exponent(const FieldDescriptor& f, const FieldValue& a, const FieldValue& b) {
  if (f.kind != FieldKind::local) throw DomainError("tame symbol is defined for local fields only");
  validate(f);
  const std::int64_t l = f.parameter;
  LocalData d = local_data(f);
  LocalParts pa = split(a, l), pb = split(b, l);
  std::int64_t t = (pa.valuation * pb.valuation) % 2 == 0 ? 1 : l - 1;
  t = t * pow_mod(pa.residue, pb.valuation, l) % l;
  t = t * pow_mod(pb.residue, -pa.valuation, l) % l;
  return d.unit_class(t);
}

SymbolAlgebra k2(const FieldDescriptor& f) {
  SymbolAlgebra s = k1(f);
  const std::int64_t q = f.params.q;
  const std::size_t m = s.k1_basis.size();
  zq::Ring ring(f.params.p, f.params.d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s.k2_generators.emplace_back(i, j);
  s.symbols.assign(m, std::vector<zq::Vector>(m));

  switch (f.kind) {
    case FieldKind::finite: {
      // Steinberg relations {a, 1 - a} over the whole field, pushed to the
      // symbol generator through the k1 classes.
      const GaloisField& gf = *s.finite_field;
      std::vector<zq::Vector> rels;
      for (std::int64_t a = 2; a < gf.size(); ++a) {
        std::int64_t b = gf.sub(1, a);
        if (b == 0) continue;
        std::int64_t c = ring.mul(k1_class(s, {a, 1})[0], k1_class(s, {b, 1})[0]);
        if (c != 0) rels.push_back({c});
      }
      s.k2_relations = zq::Matrix::from_columns(1, rels);
      zq::Subquotient module(ring, zq::Matrix::identity(1), s.k2_relations);
      s.k2_invariants = module.orders();
      s.symbols[0][0] = module.numerator_coordinates(0);
      break;
    }
    case FieldKind::local:
    case FieldKind::real: {
      // The symbol map onto mu_q = Z/q is an isomorphism; its kernel gives
      // the relations among the generators.
      zq::Matrix map(1, m * m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          std::int64_t e = f.kind == FieldKind::local
                               ? tame_symbol_exponent(f, s.k1_elements[i], s.k1_elements[j])
                               : ((s.k1_elements[i].num < 0 && s.k1_elements[j].num < 0) ? 1 : 0);
          map(0, i * m + j) = e;
          s.symbols[i][j] = {e};
        }
      s.k2_relations = zq::kernel(ring, map);
      zq::Subquotient module(ring, zq::Matrix::identity(m * m), s.k2_relations);
      s.k2_invariants = module.orders();
      if (s.k2_invariants != std::vector<std::int64_t>{q})
        throw Error("symbol map is not onto mu_q for " + f.to_string());
      break;
    }
  }
  return s;
}

zq::Vector symbol(const SymbolAlgebra& s, const FieldValue& a, const FieldValue& b) {
  if (s.symbols.empty() && !s.k1_basis.empty()) throw DomainError("symbol needs the k2 part");
  zq::Vector x = k1_class(s, a), y = k1_class(s, b);
  zq::Vector out(s.k2_invariants.size(), 0);
  const std::int64_t q = s.field.params.q;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      std::int64_t c = x[i] * y[j] % q;
      for (std::size_t t = 0; t < out.size(); ++t) out[t] = (out[t] + c * s.symbols[i][j][t]) % s.k2_invariants[t];
    }
  return out;
}

FieldValue one_minus(const SymbolAlgebra& s, const FieldValue& x) {
  if (s.field.kind == FieldKind::finite) return {s.finite_field->sub(1, x.num), 1};
  return {x.den - x.num, x.den};
}

FieldValue negate(const SymbolAlgebra& s, const FieldValue& x) {
  if (s.field.kind == FieldKind::finite) return {s.finite_field->neg(x.num), 1};
  return {-x.num, x.den};
}

PairingTensor milnor_pairing_gram(const SymbolAlgebra& s) {
  if (s.k1_basis.size() > 4) throw DomainError("k1 rank above 4");
  return PairingTensor{s.field.params.q, s.k1_orders, s.k2_invariants, s.symbols};
}

PairingTensor milnor_pairing_gram(const FieldDescriptor& f) { return milnor_pairing_gram(k2(f)); }

Presentation galois_model(const FieldDescriptor& f) {
  validate(f);
  switch (f.kind) {
    case FieldKind::finite:
      return parse_presentation("group F" + std::to_string(f.parameter) + " { generators: x; relators: ; }");
    case FieldKind::local:
      return parse_presentation("group Q" + std::to_string(f.parameter) + " { generators: s, t; relators: s t s^-1 t^-" +
                                std::to_string(f.parameter) + "; }");
    case FieldKind::real:
      return parse_presentation("group R { generators: x; relators: x^2; }");
  }
  throw DomainError("unknown field kind");
}

}  // namespace qcent
