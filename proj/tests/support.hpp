#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "qcent/presentation.hpp"

namespace qtest {

inline std::string data_path(const std::string& name) { return std::string(QCENT_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline qcent::Presentation load(const std::string& name) { return qcent::parse_presentation(slurp(data_path(name))); }

// every randomized suite draws from this seed
constexpr std::uint64_t kSeed = 20240917;

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(kSeed + salt); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

}  // namespace qtest

#include <map>
#include <vector>

#include "qcent/group_table.hpp"

namespace qtest {

using Perm = std::vector<int>;

// The permutation group generated by `gens`, composed as (a b)(i) = a(b(i)).
inline qcent::FiniteGroupTable permutation_group(const std::vector<Perm>& gens) {
  std::size_t n = gens.front().size();
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::vector<Perm> elems{id};
  std::map<Perm, std::uint32_t> index{{id, 0}};
  auto compose = [n](const Perm& a, const Perm& b) {
    Perm c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
  };
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Perm c = compose(elems[k], g);
      if (!index.count(c)) {
        index[c] = static_cast<std::uint32_t>(elems.size());
        elems.push_back(c);
      }
    }
  std::size_t order = elems.size();
  std::vector<qcent::Element> mult(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) mult[a * order + b] = index.at(compose(elems[a], elems[b]));
  std::vector<qcent::Element> g;
  for (const auto& p : gens) g.push_back(index.at(p));
  return qcent::FiniteGroupTable(order, mult, 0, g);
}

inline Perm cycle_perm(int n, int shift) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + shift) % n;
  return p;
}

}  // namespace qtest
