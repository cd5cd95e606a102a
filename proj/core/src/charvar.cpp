#include "toric_dmod/charvar.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

// xi_i |-> -xi_i in k[x, xi].
CommPoly negate_xi(const CommPoly& f, std::size_t d) {
  CommPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    int order = 0;
    for (std::size_t i = d; i < 2 * d; ++i) order += e[i];
    out.add_term(e, order % 2 ? Rational(-c) : c);
  }
  return out;
}

void require_theta(const GradingData& g, const GradedPresentation& f) {
  ThetaCheck check = check_theta_condition(g, f);
  if (!check.holds)
    throw PreconditionViolated("theta condition fails at generator " +
                               std::to_string(check.failure->generator + 1) + ", u" +
                               std::to_string(check.failure->functional + 1));
}

int to_int(const Integer& z) {
  if (!z.fits_sint_p()) throw std::overflow_error("exponent does not fit in an int");
  return static_cast<int>(z.get_si());
}

// Integer solution of A m = b for A of full column rank, if one exists.
std::optional<IntVector> solve_integral(const IntMatrix& a, const IntVector& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = Rational(a(r, c));
    m[r][cols] = Rational(b[r]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k <= cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  if (pivot_col.size() != cols) return std::nullopt;
  IntVector out(cols);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    if (m[r][cols].get_den() != 1) return std::nullopt;
    out[pivot_col[r]] = m[r][cols].get_num();
  }
  return out;
}

}  // namespace

std::vector<CommPoly> characteristic_ideal(const GradedPresentation& f) {
  const std::size_t d = f.num_vars, r = f.rank(), nv = 2 * d;
  if (r == 0) return {CommPoly::constant(nv, 1)};
  WeylGroebnerBasis gb = relation_basis(f);
  std::vector<CommVector> forms = initial_forms(gb);
  if (f.side == Side::Right)
    for (auto& v : forms)
      for (auto& x : v) x = negate_xi(x, d);
  if (r == 1) {
    std::vector<CommPoly> gens;
    for (const auto& v : forms) gens.push_back(v[0]);
    return groebner_basis(gens, nv);
  }
  return groebner_basis(annihilator(forms, r, nv), nv);
}

std::vector<CommPoly> z_ideal(const GradingData& g) {
  const std::size_t d = g.num_rays();
  std::vector<CommPoly> out;
  for (const auto& u : g.dual_basis()) {
    CommPoly p(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      Exponents e(2 * d, 0);
      e[i] = 1;
      e[d + i] = 1;
      p.add_term(e, Rational(u[i]));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<CommPoly> irrelevant_ideal_cotangent(const GradingData& g) {
  const std::size_t d = g.num_rays();
  std::vector<CommPoly> out;
  for (const auto& e : irrelevant_ideal(g.fan()).generators) {
    Exponents x(e);
    x.resize(2 * d, 0);
    out.push_back(CommPoly::monomial(x));
  }
  return out;
}

bool verify_char_containment(const GradingData& g, const GradedPresentation& f) {
  require_theta(g, f);
  std::vector<CommPoly> j = characteristic_ideal(f);
  const std::size_t nv = 2 * g.num_rays();
  for (const auto& p : z_ideal(g))
    if (!radical_membership(p, j, nv)) return false;
  return true;
}

CharReport dimension_report(const GradingData& g, const GradedPresentation& f) {
  require_theta(g, f);
  const std::size_t d = g.num_rays(), n = g.ambient_rank(), nv = 2 * d;
  CharReport r;
  r.j = characteristic_ideal(f);
  r.dim = krull_dimension(r.j, nv);
  r.saturated = saturation(r.j, irrelevant_ideal_cotangent(g), nv);
  auto sat_dim = krull_dimension(r.saturated, nv);
  r.torsion = !sat_dim.has_value();
  if (sat_dim) r.sheaf_dim = static_cast<long>(*sat_dim) - static_cast<long>(d - n);
  r.holonomic_a = r.dim && *r.dim == d;
  r.holonomic_sheaf = r.sheaf_dim && *r.sheaf_dim == static_cast<long>(n);
  return r;
}

std::optional<IntVector> cotangent_degree(const GradingData& g, const CommPoly& f) {
  const std::size_t d = g.num_rays();
  std::optional<IntVector> deg;
  for (const auto& [e, c] : f.terms()) {
    IntVector diff(d);
    for (std::size_t i = 0; i < d; ++i) diff[i] = e[i] - e[d + i];
    IntVector t = g.degree(diff);
    if (deg && *deg != t) return std::nullopt;
    deg = t;
  }
  return deg;
}

bool t_invariance_check(const GradingData& g, const std::vector<CommPoly>& j) {
  for (const auto& p : groebner_basis(j, 2 * g.num_rays()))
    if (!cotangent_degree(g, p)) return false;
  return true;
}

std::string generator_string(const ChartGenerator& gen, std::size_t d) {
  VarNames names = cotangent_names(d);
  std::string out;
  auto part = [&](const std::string& name, int k) {
    if (k == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (k != 1) out += "^" + std::to_string(k);
  };
  for (std::size_t i = 0; i < d; ++i) part(names[i], gen.x_exp[i]);
  for (std::size_t i = 0; i < d; ++i) part(names[d + i], gen.xi_exp[i]);
  return out.empty() ? "1" : out;
}

ChartIdeal chart_ideal(const GradingData& g, const GradedPresentation& f, const Cone& sigma) {
  require_theta(g, f);
  const std::size_t nv = 2 * g.num_rays();
  std::vector<CommPoly> sat = saturation(characteristic_ideal(f), irrelevant_ideal_cotangent(g), nv);
  return chart_ideal_from(g, sat, sigma);
}

ChartIdeal chart_ideal_from(const GradingData& g, const std::vector<CommPoly>& saturated,
                            const Cone& sigma) {
  const std::size_t d = g.num_rays(), n = g.ambient_rank();
  const Cone c = normalize_cone(sigma);
  if (!g.fan().is_maximal(c)) throw ConeNotMaximal("the cone is not a maximal cone of the fan");
  const std::size_t k = c.size();

  // Complete the rays of sigma to a basis of N: B = [rays; rows k.. of V^-1].
  std::vector<IntVector> ray_rows;
  for (std::size_t i : c) ray_rows.push_back(g.fan().rays()[i]);
  IntMatrix rays = IntMatrix::from_rows(ray_rows, n);
  SmithDecomposition snf = smith_normal_form(rays);
  if (snf.invariant_factors.size() != k ||
      std::any_of(snf.invariant_factors.begin(), snf.invariant_factors.end(),
                  [](const Integer& x) { return x != 1; }))
    throw ConeNotSmooth("the rays of the cone do not extend to a lattice basis");
  IntMatrix v_inv = unimodular_inverse(snf.V);
  IntMatrix basis(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t col = 0; col < n; ++col) basis(l, col) = l < k ? rays(l, col) : v_inv(l, col);
  IntMatrix dual = unimodular_inverse(basis);  // column l is m_l
  std::vector<IntVector> iota_m;
  for (std::size_t l = 0; l < n; ++l) iota_m.push_back(g.iota_apply(dual.col(l)));

  ChartIdeal out;
  out.sigma = c;
  auto push = [&](std::string name, const IntVector& x, std::vector<int> xi, int sign) {
    ChartGenerator gen{std::move(name), std::vector<int>(d), std::move(xi)};
    for (std::size_t i = 0; i < d; ++i) gen.x_exp[i] = sign * to_int(x[i]);
    out.generators.push_back(std::move(gen));
  };
  std::vector<std::size_t> t_index(n), s_index(n, SIZE_MAX);
  for (std::size_t l = 0; l < n; ++l) {
    t_index[l] = out.generators.size();
    push("t" + std::to_string(l + 1), iota_m[l], std::vector<int>(d, 0), 1);
  }
  for (std::size_t l = k; l < n; ++l) {
    s_index[l] = out.generators.size();
    push("s" + std::to_string(l + 1), iota_m[l], std::vector<int>(d, 0), -1);
  }
  // w_j = x^{c_j} xi_j with c_j = e_j - iota(m) vanishing on sigma.
  std::vector<IntVector> cvec(d);
  const std::size_t w_start = out.generators.size();
  for (std::size_t j = 0; j < d; ++j) {
    IntVector cj(d, 0);
    cj[j] = 1;
    for (std::size_t l = 0; l < k; ++l)
      if (c[l] == j)
        for (std::size_t i = 0; i < d; ++i) cj[i] -= iota_m[l][i];
    cvec[j] = cj;
    std::vector<int> xi(d, 0);
    xi[j] = 1;
    push("w" + std::to_string(j + 1), cj, xi, 1);
  }
  const std::size_t G = out.generators.size();
  for (const auto& gen : out.generators) out.names.push_back(gen.name);

  // Kernel of k[z] -> S'_{x^sigma_hat}: eliminate x, xi and u from
  // (z_l x^{a-} - x^{a+} xi^b, u x^sigma_hat - 1).
  {
    const std::size_t total = G + 2 * d + 1;
    std::vector<CommPoly> gens;
    for (std::size_t l = 0; l < G; ++l) {
      Exponents plus(total, 0), minus(total, 0);
      minus[l] = 1;
      for (std::size_t i = 0; i < d; ++i) {
        int a = out.generators[l].x_exp[i];
        (a >= 0 ? plus[G + i] : minus[G + i]) = std::abs(a);
        plus[G + d + i] = out.generators[l].xi_exp[i];
      }
      gens.push_back(CommPoly::monomial(minus) - CommPoly::monomial(plus));
    }
    Exponents uhat(total, 0);
    uhat[total - 1] = 1;
    for (std::size_t i = 0; i < d; ++i)
      if (!std::binary_search(c.begin(), c.end(), i)) uhat[G + i] = 1;
    gens.push_back(CommPoly::monomial(uhat) - CommPoly::constant(total, 1));
    std::vector<bool> flags(total, true);
    for (std::size_t l = 0; l < G; ++l) flags[l] = false;
    out.presentation = eliminate(gens, total, flags);
  }

  // Rewrite each generator of the saturated ideal, moved to degree 0 by a
  // Laurent monomial supported off sigma.
  std::vector<CommPoly> image;
  for (const auto& p : saturated) {
    if (p.is_zero()) continue;
    auto deg = cotangent_degree(g, p);
    if (!deg) throw std::logic_error("saturated characteristic ideal has an inhomogeneous generator");
    IntVector a = g.lift(*deg);
    IntVector shift(d, 0);
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t i = 0; i < d; ++i) shift[i] += a[c[l]] * iota_m[l][i];
    for (std::size_t i = 0; i < d; ++i) a[i] -= shift[i];

    CommPoly rewritten(G);
    for (const auto& [e, coeff] : p.terms()) {
      IntVector gamma(d);
      int xi_degree = 0;
      for (std::size_t i = 0; i < d; ++i) gamma[i] = e[i] - a[i];
      for (std::size_t j = 0; j < d; ++j) {
        xi_degree += e[d + j];
        for (std::size_t i = 0; i < d; ++i) gamma[i] -= e[d + j] * cvec[j][i];
      }
      out.xi_degree_bound = std::max(out.xi_degree_bound, xi_degree);
      auto mprime = solve_integral(g.iota(), gamma);
      if (!mprime) throw std::logic_error("chart rewrite: exponent is not a character");
      Exponents z(G, 0);
      for (std::size_t l = 0; l < n; ++l) {
        Integer lambda = 0;
        for (std::size_t col = 0; col < n; ++col) lambda += (*mprime)[col] * basis(l, col);
        int lam = to_int(lambda);
        if (l < k && lam < 0) throw std::logic_error("chart rewrite: negative power on sigma");
        if (lam >= 0)
          z[t_index[l]] = lam;
        else
          z[s_index[l]] = -lam;
      }
      for (std::size_t j = 0; j < d; ++j) z[w_start + j] = e[d + j];
      // Cross-check against the Laurent monomial.
      std::vector<int> x_back(d, 0), xi_back(d, 0);
      for (std::size_t l = 0; l < G; ++l)
        for (std::size_t i = 0; i < d; ++i) {
          x_back[i] += z[l] * out.generators[l].x_exp[i];
          xi_back[i] += z[l] * out.generators[l].xi_exp[i];
        }
      for (std::size_t i = 0; i < d; ++i)
        if (x_back[i] != e[i] - to_int(a[i]) || xi_back[i] != e[d + i])
          throw std::logic_error("chart rewrite does not reproduce the monomial");
      rewritten.add_term(z, coeff);
    }
    image.push_back(std::move(rewritten));
  }
  std::vector<CommPoly> all = image;
  all.insert(all.end(), out.presentation.begin(), out.presentation.end());
  out.image = groebner_basis(all, G);
  out.dim = krull_dimension(out.image, G);
  return out;
}

bool verify_quotient_dimension(const GradingData& g, const GradedPresentation& f) {
  CharReport r = dimension_report(g, f);
  if (r.torsion) throw PreconditionViolated("the module is b-torsion (its sheaf is zero)");
  std::optional<std::size_t> best;
  for (const auto& sigma : g.fan().maximal_cones()) {
    ChartIdeal chart = chart_ideal_from(g, r.saturated, sigma);
    if (chart.dim && (!best || *chart.dim > *best)) best = chart.dim;
  }
  return best && static_cast<long>(*best) == *r.sheaf_dim;
}

}  // namespace toric
