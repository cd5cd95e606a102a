#include "toric_dmod/dmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

namespace {

Cone checked_cone(const GradingData& g, const Cone& sigma) {
  Cone c = normalize_cone(sigma);
  if (!g.fan().is_cone(c)) {
    std::string label;
    for (std::size_t i : c) label += (label.empty() ? "" : ",") + std::to_string(i + 1);
    throw UnknownCone("{" + label + "} is not a cone of the fan");
  }
  return c;
}

bool in_cone(const Cone& c, std::size_t i) { return std::binary_search(c.begin(), c.end(), i); }

IntVector checked_class(const GradingData& g, const IntVector& cls) {
  if (cls.size() != g.class_coordinates())
    throw std::invalid_argument("class group element needs " +
                                std::to_string(g.class_coordinates()) + " coordinates, got " +
                                std::to_string(cls.size()));
  return g.class_group().reduce(cls);
}

IntVector checked_lattice(const GradingData& g, const IntVector& p) {
  if (p.size() != g.ambient_rank())
    throw std::invalid_argument("lattice vector needs " + std::to_string(g.ambient_rank()) +
                                " coordinates, got " + std::to_string(p.size()));
  return p;
}

int to_int(const Integer& z) {
  if (!z.fits_sint_p()) throw std::overflow_error("exponent does not fit in an int");
  return static_cast<int>(z.get_si());
}

}  // namespace

Integer pair_functional(const GradingData& g, const IntVector& u, const IntVector& cls) {
  IntVector rep = g.lift(cls);
  if (u.size() != rep.size()) throw std::invalid_argument("functional has wrong arity");
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * rep[i];
  return s;
}

void validate_presentation(const GradingData& g, const GradedPresentation& f) {
  const std::size_t d = g.num_rays();
  if (f.num_vars != d)
    throw std::invalid_argument("module lives over " + std::to_string(f.num_vars) +
                                " variables but the fan has " + std::to_string(d) + " rays");
  for (const auto& deg : f.generator_degrees) checked_class(g, deg);
  for (std::size_t k = 0; k < f.relations.size(); ++k) {
    const WeylVector& row = f.relations[k];
    if (row.size() != f.rank())
      throw std::invalid_argument("relation " + std::to_string(k + 1) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(f.rank()));
    std::optional<IntVector> common;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].num_vars() != d) throw std::invalid_argument("relation entry over wrong algebra");
      for (const auto& [key, c] : row[i].terms()) {
        IntVector deg = g.class_group().add(weyl_monomial_degree(g, key), f.generator_degrees[i]);
        if (!common) {
          common = deg;
        } else if (*common != deg) {
          throw InhomogeneousInput("relation " + std::to_string(k + 1) +
                                   " is not homogeneous: degrees " + to_string(*common) +
                                   " and " + to_string(deg));
        }
      }
    }
  }
}

GradedPresentation d_module_left(const GradingData& g, const IntVector& b) {
  IntVector cls = checked_class(g, b);
  const std::size_t d = g.num_rays();
  GradedPresentation out{Side::Left, d, {g.class_group().negate(cls)}, {}};
  for (std::size_t j = 0; j < g.dual_basis().size(); ++j) {
    WeylElement r = euler_operator(g, g.dual_basis()[j]) +
                    WeylElement::constant(d, Rational(g.pairing(j, cls)));
    out.relations.push_back({r});
  }
  return out;
}

GradedPresentation d_module_right(const GradingData& g, const IntVector& a) {
  IntVector cls = checked_class(g, a);
  const std::size_t d = g.num_rays();
  GradedPresentation out{Side::Right, d, {g.class_group().negate(cls)}, {}};
  for (std::size_t j = 0; j < g.dual_basis().size(); ++j) {
    WeylElement r = euler_operator(g, g.dual_basis()[j]) -
                    WeylElement::constant(d, Rational(g.pairing(j, cls)));
    out.relations.push_back({r});
  }
  return out;
}

std::vector<WeylVector> left_relations(const GradedPresentation& f) {
  if (f.side == Side::Left) return f.relations;
  std::vector<WeylVector> out;
  for (const auto& row : f.relations) {
    WeylVector r;
    for (const auto& x : row) r.push_back(tau(x));
    out.push_back(std::move(r));
  }
  return out;
}

WeylGroebnerBasis relation_basis(const GradedPresentation& f) {
  return WeylGroebnerBasis(left_relations(f), f.rank(), f.num_vars);
}

ThetaCheck check_theta_condition(const GradingData& g, const GradedPresentation& f) {
  validate_presentation(g, f);
  return check_theta_condition(g, f, relation_basis(f));
}

ThetaCheck check_theta_condition(const GradingData& g, const GradedPresentation& f,
                                 const WeylGroebnerBasis& relations) {
  const std::size_t d = f.num_vars;
  for (std::size_t i = 0; i < f.rank(); ++i)
    for (std::size_t j = 0; j < g.dual_basis().size(); ++j) {
      WeylElement theta = euler_operator(g, g.dual_basis()[j]);
      Rational shift(g.pairing(j, f.generator_degrees[i]));
      WeylElement element = f.side == Side::Left
                                ? theta - WeylElement::constant(d, shift)
                                : tau(theta + WeylElement::constant(d, shift));
      WeylVector v(f.rank(), WeylElement(d));
      v[i] = element;
      if (!relations.contains(v)) return {false, ThetaFailure{i, j}};
    }
  return {};
}

namespace {

void require_degree(const GradingData& g, const WeylElement& f, const IntVector& expected) {
  if (f.is_zero()) return;
  auto deg = homogeneous_degree(g, f);
  if (!deg) throw InhomogeneousInput("element is not homogeneous");
  if (*deg != g.class_group().reduce(expected))
    throw InhomogeneousInput("element has degree " + to_string(*deg) + ", expected " +
                             to_string(g.class_group().reduce(expected)));
}

}  // namespace

bool bimodule_identity_check(const GradingData& g, const WeylElement& f, const IntVector& u,
                             const IntVector& b, const IntVector& b_prime) {
  require_degree(g, f, b_prime);
  const std::size_t d = g.num_rays();
  WeylElement theta = euler_operator(g, u);
  WeylElement lhs = (theta + WeylElement::constant(d, Rational(pair_functional(g, u, b)))) * f;
  IntVector sum = g.class_group().add(checked_class(g, b), checked_class(g, b_prime));
  WeylElement rhs = f * (theta + WeylElement::constant(d, Rational(pair_functional(g, u, sum))));
  return lhs == rhs;
}

bool d_identity_check(const GradingData& g, const WeylElement& f, const IntVector& u,
                      const IntVector& a, const IntVector& b) {
  require_degree(g, f, g.class_group().add(checked_class(g, a), checked_class(g, b)));
  const std::size_t d = g.num_rays();
  WeylElement theta = euler_operator(g, u);
  WeylElement lhs = f * (theta + WeylElement::constant(d, Rational(pair_functional(g, u, b))));
  WeylElement rhs = (theta - WeylElement::constant(d, Rational(pair_functional(g, u, a)))) * f;
  return lhs == rhs;
}

GradedPresentation left_right_swap(const GradingData& g, const GradedPresentation& f) {
  GradedPresentation out;
  out.side = f.side == Side::Left ? Side::Right : Side::Left;
  out.num_vars = f.num_vars;
  const IntVector e = g.e_bar();
  const IntVector shift = f.side == Side::Left ? e : g.class_group().negate(e);
  for (const auto& deg : f.generator_degrees) out.generator_degrees.push_back(g.class_group().add(deg, shift));
  for (const auto& row : f.relations) {
    WeylVector r;
    for (const auto& x : row) r.push_back(tau(x));
    out.relations.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------------------------ local

VarNames theta_names(std::size_t d) { return indexed_names("th", d); }
VarNames vartheta_names(std::size_t n) { return indexed_names("v", n); }

std::string factored_string(const LinearProduct& h) {
  if (h.factors.empty()) return "1";
  std::string out;
  for (const auto& [i, m] : h.factors) {
    if (!out.empty()) out += '*';
    std::string th = "th" + std::to_string(i + 1);
    if (m == 0)
      out += th;
    else
      out += "(" + th + (m > 0 ? " - " : " + ") + std::to_string(m > 0 ? m : -m) + ")";
  }
  return out;
}

namespace {

LinearProduct product_of(std::size_t d, std::vector<std::pair<std::size_t, int>> factors) {
  std::sort(factors.begin(), factors.end());
  LinearProduct h{ThetaPoly::constant(d, 1), std::move(factors)};
  for (const auto& [i, m] : h.factors)
    h.poly = h.poly * (ThetaPoly::variable(d, i) - ThetaPoly::constant(d, m));
  return h;
}

LinearProduct h_p_range(const GradingData& g, const Cone& sigma, const IntVector& p, int extra) {
  Cone c = checked_cone(g, sigma);
  IntVector ip = g.iota_apply(checked_lattice(g, p));
  std::vector<std::pair<std::size_t, int>> factors;
  for (std::size_t i : c) {
    int top = -to_int(ip[i]) - 1 + extra;
    for (int m = 0; m <= top; ++m) factors.emplace_back(i, m);
  }
  return product_of(g.num_rays(), std::move(factors));
}

}  // namespace

LinearProduct h_p(const GradingData& g, const Cone& sigma, const IntVector& p) {
  return h_p_range(g, sigma, p, 0);
}

LinearProduct h_p_closed_range(const GradingData& g, const Cone& sigma, const IntVector& p) {
  return h_p_range(g, sigma, p, 1);
}

int j_p_min_radius(const GradingData& g, const Cone& sigma, const IntVector& p) {
  Cone c = checked_cone(g, sigma);
  IntVector ip = g.iota_apply(checked_lattice(g, p));
  int m = 1;
  for (std::size_t i : c) m = std::max(m, std::abs(to_int(ip[i])));
  return m + 1;
}

LinearProduct j_p_oracle(const GradingData& g, const Cone& sigma, const IntVector& p, int radius) {
  Cone c = checked_cone(g, sigma);
  const int need = j_p_min_radius(g, c, p);
  if (radius < need)
    throw BoxTooSmall("box radius " + std::to_string(radius) + " is below the required " +
                      std::to_string(need));
  IntVector ip = g.iota_apply(p);
  const std::size_t k = c.size();
  std::vector<int> shift(k);
  for (std::size_t t = 0; t < k; ++t) shift[t] = to_int(ip[c[t]]);

  auto in_z = [&](const std::vector<int>& a) {
    bool below = false;
    for (std::size_t t = 0; t < k; ++t) {
      if (a[t] < 0) return false;
      if (shift[t] + a[t] < 0) below = true;
    }
    return below;
  };
  // Enumerate the full box [-radius, radius]^k over the sigma coordinates;
  // the remaining coordinates do not enter the definition of Z(p).
  std::vector<std::vector<int>> points;
  std::vector<int> a(k, -radius);
  while (true) {
    points.push_back(a);
    std::size_t t = 0;
    while (t < k && a[t] == radius) a[t++] = -radius;
    if (t == k) break;
    ++a[t];
  }

  std::vector<std::pair<std::size_t, int>> selected;
  for (std::size_t t = 0; t < k; ++t)
    for (int m = -radius; m <= radius; ++m) {
      bool nonempty = false, inside = true;
      for (const auto& q : points) {
        if (q[t] != m) continue;
        if (std::any_of(q.begin(), q.end(), [](int x) { return x < 0; })) continue;
        nonempty = true;
        if (!in_z(q)) {
          inside = false;
          break;
        }
      }
      if (nonempty && inside) selected.emplace_back(t, m);
    }
  for (const auto& q : points) {
    if (!in_z(q)) continue;
    bool covered = std::any_of(selected.begin(), selected.end(),
                               [&](const auto& s) { return q[s.first] == s.second; });
    if (!covered) throw std::logic_error("Z(p) is not a union of coordinate hyperplane slabs");
  }
  std::vector<std::pair<std::size_t, int>> factors;
  for (const auto& [t, m] : selected) factors.emplace_back(c[t], m);
  return product_of(g.num_rays(), std::move(factors));
}

ThetaPoly rho(const GradingData& g, const ThetaPoly& w) {
  return rho_b(g, IntVector(g.num_rays(), 0), w);
}

ThetaPoly rho_b(const GradingData& g, const IntVector& b, const ThetaPoly& w) {
  const std::size_t d = g.num_rays(), n = g.ambient_rank();
  if (w.nvars() != d || b.size() != d) throw std::invalid_argument("rho: arity mismatch");
  std::vector<ThetaPoly> images;
  for (std::size_t i = 0; i < d; ++i) {
    ThetaPoly im = ThetaPoly::constant(n, Rational(-b[i]));
    for (std::size_t l = 0; l < n; ++l)
      im += ThetaPoly::variable(n, l) * Rational(g.fan().rays()[i][l]);
    images.push_back(std::move(im));
  }
  return w.substitute(images, n);
}

LocalOperator local_op_image(const GradingData& g, const Cone& sigma, const IntVector& p,
                             const ThetaPoly& w) {
  LinearProduct h = h_p(g, sigma, p);
  if (!divides(h.poly, w))
    throw NotInJp(to_string(w, theta_names(g.num_rays())) + " is not divisible by h_p = " +
                  factored_string(h));
  return {p, rho(g, w)};
}

ThetaPoly i_p_ideal(const GradingData& g, const Cone& sigma, const IntVector& p) {
  return rho(g, h_p(g, sigma, p).poly);
}

namespace {

template <class F>
void for_each_in_box(std::size_t n, int radius, F&& f) {
  IntVector q(n, -radius);
  while (true) {
    f(q);
    std::size_t t = 0;
    while (t < n && q[t] == radius) q[t++] = -radius;
    if (t == n) break;
    ++q[t];
  }
}

bool in_dual(const GradingData& g, const Cone& c, const IntVector& q) {
  IntVector iq = g.iota_apply(q);
  return std::all_of(c.begin(), c.end(), [&](std::size_t i) { return iq[i] >= 0; });
}

std::vector<Rational> as_point(const IntVector& v) {
  std::vector<Rational> out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace

bool y_p_check(const GradingData& g, const Cone& sigma, const IntVector& p, int radius) {
  Cone c = checked_cone(g, sigma);
  checked_lattice(g, p);
  ThetaPoly ip = i_p_ideal(g, c, p);
  bool ok = true;
  for_each_in_box(g.ambient_rank(), radius, [&](const IntVector& q) {
    if (!ok || !in_dual(g, c, q)) return;
    IntVector qp(q.size());
    for (std::size_t l = 0; l < q.size(); ++l) qp[l] = q[l] + p[l];
    bool in_y = !in_dual(g, c, qp);
    bool vanishes = ip.evaluate(as_point(q)) == 0;
    if (in_y != vanishes) ok = false;
  });
  return ok;
}

LaurentPoly local_action(const GradingData& g, const Cone& sigma, const IntVector& p,
                         const ThetaPoly& w, const IntVector& q) {
  Cone c = checked_cone(g, sigma);
  const std::size_t d = g.num_rays();
  LinearProduct h = h_p(g, c, p);
  ThetaPoly quotient;
  if (!divides(h.poly, w, &quotient))
    throw NotInJp(to_string(w, theta_names(d)) + " is not divisible by h_p = " + factored_string(h));
  // x^{iota(p)} h_p = x^{s+} d^{s-} on the sigma coordinates, where s is
  // iota(p) restricted to sigma; the other coordinates stay Laurent.
  IntVector ip = g.iota_apply(p);
  std::vector<int> s(d, 0), rest(d, 0);
  std::vector<bool> mask(d, true);
  for (std::size_t i = 0; i < d; ++i) {
    if (in_cone(c, i)) {
      s[i] = to_int(ip[i]);
      mask[i] = false;
    } else {
      rest[i] = to_int(ip[i]);
    }
  }
  ThetaFormElement t(d);
  t.add(s, quotient);
  WeylElement op = from_theta_form(t);
  IntVector iq = g.iota_apply(q);
  std::vector<int> qe(d);
  for (std::size_t i = 0; i < d; ++i) qe[i] = to_int(iq[i]);
  LaurentPoly acted = act(op, LaurentPoly::monomial(mask, qe));
  LaurentPoly out(mask);
  for (const auto& [e, coeff] : acted.terms()) {
    std::vector<int> shifted(e);
    for (std::size_t i = 0; i < d; ++i) shifted[i] += rest[i];
    out.add_term(shifted, coeff);
  }
  return out;
}

bool action_identity_check(const GradingData& g, const Cone& sigma, const IntVector& p,
                           const ThetaPoly& w, int radius) {
  Cone c = checked_cone(g, sigma);
  const std::size_t d = g.num_rays();
  std::vector<bool> mask(d, true);
  for (std::size_t i : c) mask[i] = false;
  bool ok = true;
  for_each_in_box(g.ambient_rank(), radius, [&](const IntVector& q) {
    if (!ok || !in_dual(g, c, q)) return;
    IntVector iq = g.iota_apply(q);
    IntVector ip = g.iota_apply(p);
    std::vector<int> target(d);
    for (std::size_t i = 0; i < d; ++i) target[i] = to_int(iq[i] + ip[i]);
    LaurentPoly expected(mask);
    Rational value = w.evaluate(as_point(iq));
    if (value != 0) expected.add_term(target, value);
    if (!(local_action(g, c, p, w, q) == expected)) ok = false;
  });
  return ok;
}

std::vector<ThetaPoly> l0_generators(const GradingData& g, const IntVector& b) {
  IntVector cls = checked_class(g, b);
  std::vector<ThetaPoly> out;
  for (std::size_t j = 0; j < g.dual_basis().size(); ++j)
    out.push_back(euler_theta(g, g.dual_basis()[j]) +
                  ThetaPoly::constant(g.num_rays(), Rational(g.pairing(j, cls))));
  return out;
}

std::vector<ThetaPoly> k_component(const GradingData& g, const IntVector& a, const IntVector& b) {
  const std::size_t d = g.num_rays();
  if (a.size() != d) throw std::invalid_argument("k_component: a needs one entry per ray");
  std::vector<ThetaPoly> out = l0_generators(g, b);
  ThetaPoly prod = ThetaPoly::constant(d, 1);
  for (std::size_t i = 0; i < d; ++i)
    if (a[i] <= 0) prod = prod * (ThetaPoly::variable(d, i) + ThetaPoly::constant(d, Rational(a[i])));
  out.push_back(std::move(prod));
  return out;
}

}  // namespace toric
