#pragma once

// Shared fixtures, seeded randomness and brute-force oracles for the tests.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "toric_dmod/charvar.hpp"
#include "toric_dmod/dmod.hpp"
#include "toric_dmod/fan_cox.hpp"
#include "toric_dmod/groebner.hpp"
#include "toric_dmod/lattice.hpp"
#include "toric_dmod/polynomial.hpp"
#include "toric_dmod/weyl.hpp"

namespace toric::testing {

inline std::uint64_t seed() {
  if (const char* s = std::getenv("TORIC_DMOD_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Fan make_fan(std::size_t n, std::vector<std::vector<long>> rays,
                    std::vector<std::vector<std::size_t>> cones_1based) {
  std::vector<IntVector> r;
  for (const auto& ray : rays) {
    IntVector v;
    for (long x : ray) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  for (auto& c : cones_1based)
    for (auto& i : c) --i;
  return Fan(n, std::move(r), cones_1based);
}

inline Fan p1_fan() { return make_fan(1, {{1}, {-1}}, {{1}, {2}}); }
inline Fan p2_fan() { return make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2, 3}, {1, 3}}); }
inline Fan p1xp1_fan() {
  return make_fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
}
inline Fan f1_fan() {
  return make_fan(2, {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

struct NamedFan {
  std::string name;
  Fan fan;
};

inline std::vector<NamedFan> fixture_fans() {
  return {{"P1", p1_fan()}, {"P2", p2_fan()}, {"P1xP1", p1xp1_fan()}, {"F1", f1_fan()}};
}

// Every class vector with coordinates in [lo, hi].
inline std::vector<IntVector> class_box(std::size_t r, long lo, long hi) {
  std::vector<IntVector> out{IntVector{}};
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<IntVector> next;
    for (const auto& v : out)
      for (long x = lo; x <= hi; ++x) {
        IntVector w = v;
        w.emplace_back(x);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

// Normal-ordered Weyl monomials with each exponent at most `cap`, grouped by
// Cl-degree.
inline std::map<IntVector, std::vector<Exponents>> weyl_monomials_by_degree(const GradingData& g,
                                                                           int cap) {
  const std::size_t d = g.num_rays();
  std::map<IntVector, std::vector<Exponents>> out;
  Exponents key(2 * d, 0);
  while (true) {
    out[weyl_monomial_degree(g, key)].push_back(key);
    std::size_t i = 0;
    while (i < key.size() && key[i] == cap) key[i++] = 0;
    if (i == key.size()) break;
    ++key[i];
  }
  return out;
}

inline Rational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  int a = 0;
  while (a == 0) a = num(rng);
  Rational q(a, den(rng));
  q.canonicalize();
  return q;
}

// A random nonzero homogeneous element with at most `terms` terms.
inline WeylElement random_homogeneous(const std::map<IntVector, std::vector<Exponents>>& pool,
                                      std::size_t d, std::mt19937_64& rng, std::size_t terms = 3) {
  auto it = pool.begin();
  std::advance(it, std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng));
  const auto& monos = it->second;
  WeylElement f(d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::size_t k = 1 + std::uniform_int_distribution<std::size_t>(0, terms - 1)(rng);
  for (std::size_t t = 0; t < k; ++t) f.add_term(monos[pick(rng)], random_coefficient(rng));
  if (f.is_zero()) f.add_term(monos.front(), 1);
  return f;
}

inline WeylElement random_homogeneous_of(const std::vector<Exponents>& monos, std::size_t d,
                                         std::mt19937_64& rng, std::size_t terms = 3) {
  WeylElement f(d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  for (std::size_t t = 0; t < terms; ++t) f.add_term(monos[pick(rng)], random_coefficient(rng));
  if (f.is_zero()) f.add_term(monos.front(), 1);
  return f;
}

// ---------------------------------------------------------------- oracles

// Row reduction over Q; returns the rank and leaves `m` in reduced echelon form.
inline std::size_t rational_rank(std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    ++row;
  }
  return row;
}

// Integer basis of {u in Z^d : sum_i u_i v_i = 0}, by rational elimination
// and clearing denominators (a Q-basis suffices for ideal comparisons).
inline std::vector<IntVector> ray_relations(const Fan& fan) {
  const std::size_t d = fan.num_rays(), n = fan.ambient_rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < n; ++k) m[k][i] = Rational(fan.rays()[i][k]);
  rational_rank(m);
  std::vector<int> pivot(d, -1);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (m[r][c] != 0) {
        pivot[c] = static_cast<int>(r);
        break;
      }
  std::vector<IntVector> out;
  for (std::size_t f = 0; f < d; ++f) {
    if (pivot[f] >= 0) continue;
    std::vector<Rational> u(d);
    u[f] = 1;
    for (std::size_t c = 0; c < d; ++c)
      if (pivot[c] >= 0) u[c] = -m[pivot[c]][f];
    Integer l = 1;
    for (const auto& x : u) l = lcm(l, x.get_den());
    IntVector w;
    for (const auto& x : u) w.push_back(Integer(x * l));
    out.push_back(std::move(w));
  }
  return out;
}

// sum_i u_i x_i xi_i for each ray relation u.
inline std::vector<CommPoly> z_oracle(const Fan& fan) {
  const std::size_t d = fan.num_rays();
  std::vector<CommPoly> out;
  for (const auto& u : ray_relations(fan)) {
    CommPoly p(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      Exponents e(2 * d, 0);
      e[i] = e[d + i] = 1;
      p.add_term(e, Rational(u[i]));
    }
    out.push_back(std::move(p));
  }
  return out;
}

// All exponent vectors of total degree exactly `deg` in `nvars` variables.
inline std::vector<Exponents> monomials_of_degree(std::size_t nvars, int deg) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars == 0) {
    if (deg == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, deg);
  return out;
}

// Membership of a homogeneous f of degree D in the ideal of homogeneous
// generators: f lies in the span of {m * g : deg(m g) = D} (Macaulay matrix).
inline bool macaulay_member(const std::vector<CommPoly>& gens, const CommPoly& f, std::size_t nvars) {
  if (f.is_zero()) return true;
  const int D = f.total_degree();
  std::vector<Exponents> basis = monomials_of_degree(nvars, D);
  std::map<Exponents, std::size_t> col;
  for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int k = D - g.total_degree();
    if (k < 0) continue;
    for (const auto& m : monomials_of_degree(nvars, k)) {
      std::vector<Rational> row(basis.size());
      for (const auto& [e, c] : g.terms()) {
        Exponents s(nvars);
        for (std::size_t i = 0; i < nvars; ++i) s[i] = e[i] + m[i];
        row[col.at(s)] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  std::size_t r0 = rational_rank(rows);
  std::vector<Rational> frow(basis.size());
  for (const auto& [e, c] : f.terms()) frow[col.at(e)] = c;
  rows.resize(r0);
  rows.push_back(frow);
  return rational_rank(rows) == r0;
}

}  // namespace toric::testing
