#include "toric_dmod/fan_cox.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace toric {

Cone normalize_cone(std::vector<std::size_t> c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

namespace {

bool is_subset(const Cone& small, const Cone& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string cone_label(const Cone& c) {
  std::string s = "{";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(c[k] + 1);
  }
  return s + "}";
}

}  // namespace

Fan::Fan(std::size_t n, std::vector<IntVector> rays,
         const std::vector<std::vector<std::size_t>>& cones)
    : n_(n), rays_(std::move(rays)) {
  std::vector<Cone> candidates;
  for (std::size_t k = 0; k < cones.size(); ++k) {
    for (std::size_t i : cones[k])
      if (i >= rays_.size())
        throw InvalidFan(FanErrorKind::BadConeIndex, std::nullopt,
                         "cone " + std::to_string(k + 1) + " refers to ray " +
                             std::to_string(i + 1) + " but only " + std::to_string(rays_.size()) +
                             " rays exist");
    candidates.push_back(normalize_cone(cones[k]));
  }
  for (std::size_t i = 0; i < rays_.size(); ++i) candidates.push_back({i});

  std::set<Cone> seen;
  for (const Cone& c : candidates) {
    if (c.empty() || !seen.insert(c).second) continue;
    bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const Cone& o) {
      return o.size() > c.size() && is_subset(c, o);
    });
    if (!dominated) maximal_.push_back(c);
  }
}

bool Fan::is_cone(const Cone& c) const {
  if (c.empty()) return true;
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const Cone& m) { return is_subset(c, m); });
}

bool Fan::is_maximal(const Cone& c) const {
  return std::find(maximal_.begin(), maximal_.end(), c) != maximal_.end();
}

std::vector<Cone> Fan::all_cones() const {
  std::set<Cone> faces;
  faces.insert(Cone{});
  for (const Cone& m : maximal_) {
    const std::size_t k = m.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      Cone f;
      for (std::size_t j = 0; j < k; ++j)
        if (mask & (std::size_t{1} << j)) f.push_back(m[j]);
      faces.insert(f);
    }
  }
  std::vector<Cone> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Cone& a, const Cone& b) { return a.size() < b.size(); });
  return out;
}

ValidationReport validate_smooth_fan(const Fan& fan) {
  auto fail = [](FanErrorKind kind, std::optional<std::size_t> cone, std::string msg) {
    return ValidationReport{false, kind, cone, std::move(msg)};
  };
  const std::size_t n = fan.ambient_rank();
  const auto& rays = fan.rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const IntVector& v = rays[i];
    if (v.size() != n)
      return fail(FanErrorKind::ZeroRay, std::nullopt,
                  "ray " + std::to_string(i + 1) + " has " + std::to_string(v.size()) +
                      " coordinates, expected " + std::to_string(n));
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0)
      return fail(FanErrorKind::ZeroRay, std::nullopt, "ray " + std::to_string(i + 1) + " is zero");
    if (g != 1)
      return fail(FanErrorKind::NonPrimitiveRay, std::nullopt,
                  "ray " + std::to_string(i + 1) + " " + to_string(v) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays[j] == v)
        return fail(FanErrorKind::DuplicateRay, std::nullopt,
                    "rays " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
  }
  const auto& cones = fan.maximal_cones();
  for (std::size_t k = 0; k < cones.size(); ++k) {
    std::vector<IntVector> cols;
    for (std::size_t i : cones[k]) cols.push_back(rays[i]);
    IntMatrix m = IntMatrix::from_rows(cols, n);
    SmithDecomposition snf = smith_normal_form(m);
    if (snf.invariant_factors.size() != cones[k].size())
      return fail(FanErrorKind::NonSimplicialCone, k,
                  "cone " + std::to_string(k + 1) + " " + cone_label(cones[k]) +
                      " has linearly dependent rays");
    // The rays extend to a basis iff the gcd of maximal minors is 1, i.e.
    // every invariant factor is 1.
    for (const auto& f : snf.invariant_factors)
      if (f != 1)
        return fail(FanErrorKind::NonSmoothCone, k,
                    "cone " + std::to_string(k + 1) + " " + cone_label(cones[k]) +
                        " is not smooth (lattice index " +
                        std::accumulate(snf.invariant_factors.begin(), snf.invariant_factors.end(),
                                        Integer(1), std::multiplies<>())
                            .get_str() +
                        ")");
  }
  if (n > 0 && (rays.empty() || rank(IntMatrix::from_rows(rays, n)) != n))
    return fail(FanErrorKind::RaysDoNotSpan, std::nullopt,
                "rays do not span a space of dimension " + std::to_string(n));
  return {};
}

void require_smooth_fan(const Fan& fan) {
  ValidationReport r = validate_smooth_fan(fan);
  if (!r.valid) throw InvalidFan(*r.kind, r.cone, r.message);
}

Exponents sigma_hat_monomial(const Fan& fan, const Cone& cone) {
  Cone c = normalize_cone(cone);
  if (!fan.is_cone(c)) throw UnknownCone(cone_label(c) + " is not a cone of the fan");
  Exponents e(fan.num_rays(), 1);
  for (std::size_t i : c) e[i] = 0;
  return e;
}

MonomialIdeal irrelevant_ideal(const Fan& fan) {
  std::set<Exponents> gens;
  for (const Cone& c : fan.maximal_cones()) gens.insert(sigma_hat_monomial(fan, c));
  auto divides = [](const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  MonomialIdeal out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(gens.begin(), gens.end(),
                                 [&](const Exponents& h) { return h != g && divides(h, g); });
    if (!redundant) out.generators.push_back(g);
  }
  // Descending lexicographic order: x1x3 before x1x4 before x2x3.
  std::sort(out.generators.begin(), out.generators.end(), std::greater<>());
  return out;
}

GradingData::GradingData(Fan fan) : fan_(std::move(fan)) {
  const std::size_t d = fan_.num_rays();
  iota_ = IntMatrix::from_rows(fan_.rays(), fan_.ambient_rank());
  cl_ = cokernel(iota_);
  dual_ = dual_lattice_basis(cl_);
  e_bar_ = cl_.project(IntVector(d, 1));
}

IntVector GradingData::iota_apply(const IntVector& p) const { return iota_.apply(p); }

IntVector GradingData::degree(const Exponents& a) const {
  return cl_.project(IntVector(a.begin(), a.end()));
}

IntVector GradingData::ray_degree(std::size_t i) const {
  IntVector e(num_rays(), 0);
  e.at(i) = 1;
  return cl_.project(e);
}

Integer GradingData::pairing(std::size_t j, const IntVector& cls) const {
  if (j >= dual_.size()) throw std::out_of_range("GradingData::pairing");
  return cl_.reduce(cls)[j];
}

GradingData grading_data(const Fan& fan) {
  require_smooth_fan(fan);
  return GradingData(fan);
}

WeylElement euler_operator(const GradingData& g, const IntVector& u) {
  return theta_to_weyl(euler_theta(g, u));
}

ThetaPoly euler_theta(const GradingData& g, const IntVector& u) {
  const std::size_t d = g.num_rays();
  if (u.size() != d) throw std::invalid_argument("euler_theta: functional has wrong arity");
  ThetaPoly out(d);
  for (std::size_t i = 0; i < d; ++i) {
    Exponents e(d, 0);
    e[i] = 1;
    out.add_term(e, Rational(u[i]));
  }
  return out;
}

std::vector<Exponents> degree_component_basis(const GradingData& g, const IntVector& cls, int cap) {
  if (cap < 0) throw std::invalid_argument("degree_component_basis: negative cap");
  const std::size_t d = g.num_rays();
  const IntVector target = g.class_group().reduce(cls);
  std::vector<Exponents> out;
  Exponents a(d, 0);
  while (true) {
    if (g.degree(a) == target) out.push_back(a);
    std::size_t i = d;
    while (i > 0 && a[i - 1] == cap) a[--i] = 0;
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

}  // namespace toric
