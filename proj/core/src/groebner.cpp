#include "toric_dmod/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace toric {

// ------------------------------------------------------------------ orders

TermOrder TermOrder::elimination(const std::vector<bool>& eliminate) {
  std::vector<int> w(eliminate.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = eliminate[i] ? 1 : 0;
  return weighted(std::move(w));
}

int TermOrder::compare(const Exponents& a, const Exponents& b) const {
  for (const auto& w : weights) {
    long long wa = 0, wb = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      wa += static_cast<long long>(w[i]) * a[i];
      wb += static_cast<long long>(w[i]) * b[i];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (base == Base::DegRevLex) return degrevlex_compare(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int ModuleOrder::compare(std::size_t ca, const Exponents& a, std::size_t cb,
                         const Exponents& b) const {
  auto by_position = [&]() {
    int ra = component_rank(ca), rb = component_rank(cb);
    return ra == rb ? 0 : (ra < rb ? -1 : 1);
  };
  if (position_over_term && ca != cb) {
    // Weights still come first so that filtrations are respected.
    for (const auto& w : term.weights) {
      long long wa = 0, wb = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        wa += static_cast<long long>(w[i]) * a[i];
        wb += static_cast<long long>(w[i]) * b[i];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
    }
    return by_position();
  }
  int c = term.compare(a, b);
  if (c != 0) return c;
  return ca == cb ? 0 : by_position();
}

namespace detail {
namespace {

struct Term {
  std::size_t comp;
  Exponents exp;
  Rational coeff;
};

// Terms strictly decreasing in the module order.
using Vec = std::vector<Term>;

class Engine {
 public:
  Engine(ModuleOrder order, bool weyl, std::size_t nvars)
      : order_(std::move(order)), weyl_(weyl), nvars_(nvars) {}

  int cmp(const Term& a, const Term& b) const { return order_.compare(a.comp, a.exp, b.comp, b.exp); }

  void normalize(Vec& v) const {
    std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return cmp(a, b) > 0; });
    Vec out;
    for (auto& t : v) {
      if (!out.empty() && out.back().comp == t.comp && out.back().exp == t.exp) {
        out.back().coeff += t.coeff;
        if (out.back().coeff == 0) out.pop_back();
      } else if (t.coeff != 0) {
        out.push_back(std::move(t));
      }
    }
    v = std::move(out);
  }

  // mono * g, scaled by c. Left multiplication in the Weyl case.
  Vec multiply(const Exponents& mono, const Rational& c, const Vec& g) const {
    Vec out;
    out.reserve(g.size());
    if (!weyl_) {
      for (const auto& t : g) {
        Exponents e(t.exp.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.exp[i] + mono[i];
        out.push_back({t.comp, std::move(e), c * t.coeff});
      }
      return out;  // monomial orders are multiplicative
    }
    const std::size_t d = nvars_ / 2;
    Exponents ma(mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>(d));
    Exponents mb(mono.begin() + static_cast<std::ptrdiff_t>(d), mono.end());
    Exponents a(d), b(d);
    std::vector<std::pair<Exponents, Rational>> buf;
    for (const auto& t : g) {
      std::copy(t.exp.begin(), t.exp.begin() + static_cast<std::ptrdiff_t>(d), a.begin());
      std::copy(t.exp.begin() + static_cast<std::ptrdiff_t>(d), t.exp.end(), b.begin());
      buf.clear();
      normal_ordered_product(ma, mb, a, b, c * t.coeff, buf);
      for (auto& [k, w] : buf) out.push_back({t.comp, std::move(k), std::move(w)});
    }
    normalize(out);
    return out;
  }

  // f[from..] - g, both sorted.
  Vec subtract(const Vec& f, std::size_t from, const Vec& g) const {
    Vec out;
    out.reserve(f.size() - from + g.size());
    std::size_t i = from, j = 0;
    while (i < f.size() || j < g.size()) {
      int c = i == f.size() ? -1 : (j == g.size() ? 1 : cmp(f[i], g[j]));
      if (c > 0) {
        out.push_back(f[i++]);
      } else if (c < 0) {
        out.push_back({g[j].comp, g[j].exp, -g[j].coeff});
        ++j;
      } else {
        Rational s = f[i].coeff - g[j].coeff;
        if (s != 0) out.push_back({f[i].comp, f[i].exp, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static bool divides(const Term& lead, const Term& t) {
    if (lead.comp != t.comp) return false;
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (lead.exp[i] > t.exp[i]) return false;
    return true;
  }

  static void make_monic(Vec& v) {
    if (v.empty() || v.front().coeff == 1) return;
    Rational inv = 1 / v.front().coeff;
    for (auto& t : v) t.coeff *= inv;
  }

  // Full reduction of f by `basis` (elements with index `skip` ignored).
  Vec reduce(Vec f, const std::vector<Vec>& basis, std::size_t skip = SIZE_MAX) const {
    Vec done;
    std::size_t head = 0;
    while (head < f.size()) {
      const Term& t = f[head];
      const Vec* red = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (k != skip && divides(basis[k].front(), t)) {
          red = &basis[k];
          break;
        }
      if (!red) {
        done.push_back(t);
        ++head;
        continue;
      }
      Exponents mono(t.exp.size());
      for (std::size_t i = 0; i < mono.size(); ++i) mono[i] = t.exp[i] - red->front().exp[i];
      Vec m = multiply(mono, t.coeff / red->front().coeff, *red);
      f = subtract(f, head, m);
      head = 0;
    }
    return done;
  }

  std::vector<Vec> groebner(std::vector<Vec> gens, std::size_t rank) const {
    std::vector<Vec> g;
    for (auto& v : gens) {
      normalize(v);
      if (v.empty()) continue;
      make_monic(v);
      g.push_back(std::move(v));
    }
    struct Pair {
      std::size_t i, j;
      Term lcm;
    };
    std::vector<Pair> pending;
    auto lcm_of = [](const Term& a, const Term& b) {
      Term l{a.comp, Exponents(a.exp.size()), 1};
      for (std::size_t k = 0; k < l.exp.size(); ++k) l.exp[k] = std::max(a.exp[k], b.exp[k]);
      return l;
    };
    auto is_pending = [&](std::size_t a, std::size_t b) {
      if (a > b) std::swap(a, b);
      return std::any_of(pending.begin(), pending.end(),
                         [&](const Pair& p) { return p.i == a && p.j == b; });
    };
    auto add_pairs = [&](std::size_t j) {
      for (std::size_t i = 0; i < j; ++i)
        if (g[i].front().comp == g[j].front().comp)
          pending.push_back({i, j, lcm_of(g[i].front(), g[j].front())});
    };
    for (std::size_t j = 0; j < g.size(); ++j) add_pairs(j);

    const bool product_criterion = !weyl_ && rank == 1;
    while (!pending.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pending.size(); ++k) {
        int c = cmp(pending[k].lcm, pending[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pending[k].j, pending[k].i) <
                                    std::tie(pending[best].j, pending[best].i)))
          best = k;
      }
      Pair p = pending[best];
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
      const Term& li = g[p.i].front();
      const Term& lj = g[p.j].front();

      if (product_criterion) {
        bool coprime = true;
        for (std::size_t k = 0; k < li.exp.size() && coprime; ++k)
          if (li.exp[k] > 0 && lj.exp[k] > 0) coprime = false;
        if (coprime) continue;
      }
      bool chain = false;
      for (std::size_t k = 0; k < g.size() && !chain; ++k) {
        if (k == p.i || k == p.j) continue;
        if (divides(g[k].front(), p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k))
          chain = true;
      }
      if (chain) continue;

      Exponents mi(li.exp.size()), mj(lj.exp.size());
      for (std::size_t k = 0; k < mi.size(); ++k) {
        mi[k] = p.lcm.exp[k] - li.exp[k];
        mj[k] = p.lcm.exp[k] - lj.exp[k];
      }
      Vec a = multiply(mi, 1 / li.coeff, g[p.i]);
      Vec b = multiply(mj, 1 / lj.coeff, g[p.j]);
      Vec s = reduce(subtract(a, 0, b), g);
      if (s.empty()) continue;
      make_monic(s);
      g.push_back(std::move(s));
      add_pairs(g.size() - 1);
    }
    return finalize(std::move(g));
  }

  // Minimal, interreduced, monic, sorted ascending by leading term.
  std::vector<Vec> finalize(std::vector<Vec> g) const {
    std::vector<Vec> minimal;
    for (std::size_t k = 0; k < g.size(); ++k) {
      bool redundant = false;
      for (std::size_t m = 0; m < g.size() && !redundant; ++m) {
        if (m == k || !divides(g[m].front(), g[k].front())) continue;
        bool same = g[m].front().exp == g[k].front().exp;
        redundant = !same || m < k;
      }
      if (!redundant) minimal.push_back(g[k]);
    }
    std::vector<Vec> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Vec r = reduce(minimal[k], minimal, k);
      make_monic(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [&](const Vec& a, const Vec& b) { return cmp(a.front(), b.front()) < 0; });
    return out;
  }

 private:
  ModuleOrder order_;
  bool weyl_;
  std::size_t nvars_;
};

Vec to_vec(const CommVector& f, const Engine& e) {
  Vec v;
  for (std::size_t c = 0; c < f.size(); ++c)
    for (const auto& [exp, coeff] : f[c].terms()) v.push_back({c, exp, coeff});
  e.normalize(v);
  return v;
}

CommVector from_vec(const Vec& v, std::size_t rank, std::size_t nvars) {
  CommVector out(rank, CommPoly(nvars));
  for (const auto& t : v) out.at(t.comp).add_term(t.exp, t.coeff);
  return out;
}

Vec to_vec(const WeylVector& f, const Engine& e) {
  Vec v;
  for (std::size_t c = 0; c < f.size(); ++c)
    for (const auto& [key, coeff] : f[c].terms()) v.push_back({c, key, coeff});
  e.normalize(v);
  return v;
}

WeylVector weyl_from_vec(const Vec& v, std::size_t rank, std::size_t d) {
  WeylVector out(rank, WeylElement(d));
  for (const auto& t : v) out.at(t.comp).add_term(t.exp, t.coeff);
  return out;
}

ModuleOrder ideal_order(const TermOrder& t) { return ModuleOrder{t, {}, true}; }

void check_vars(const std::vector<CommPoly>& gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw std::invalid_argument("polynomial ring mismatch");
}

}  // namespace
}  // namespace detail

using detail::Engine;
using detail::Vec;

// ------------------------------------------------------------------ ideals

std::vector<CommPoly> groebner_basis(const std::vector<CommPoly>& gens, std::size_t nvars,
                                     const TermOrder& order) {
  detail::check_vars(gens, nvars);
  Engine e(detail::ideal_order(order), false, nvars);
  std::vector<Vec> vs;
  for (const auto& g : gens) vs.push_back(detail::to_vec(CommVector{g}, e));
  std::vector<CommPoly> out;
  for (const auto& v : e.groebner(std::move(vs), 1)) out.push_back(detail::from_vec(v, 1, nvars)[0]);
  return out;
}

CommPoly normal_form(const CommPoly& f, const std::vector<CommPoly>& gb, const TermOrder& order) {
  Engine e(detail::ideal_order(order), false, f.nvars());
  std::vector<Vec> basis;
  for (const auto& g : gb) {
    if (g.nvars() != f.nvars()) throw std::invalid_argument("normal_form: ring mismatch");
    Vec v = detail::to_vec(CommVector{g}, e);
    if (!v.empty()) basis.push_back(std::move(v));
  }
  return detail::from_vec(e.reduce(detail::to_vec(CommVector{f}, e), basis), 1, f.nvars())[0];
}

Exponents leading_monomial(const CommPoly& f, const TermOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading_monomial of zero");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (!best || order.compare(e, *best) > 0) best = &e;
  return *best;
}

bool ideal_contains(const std::vector<CommPoly>& gens, const CommPoly& f, std::size_t nvars) {
  return normal_form(f, groebner_basis(gens, nvars)).is_zero();
}

bool ideals_equal(const std::vector<CommPoly>& a, const std::vector<CommPoly>& b,
                  std::size_t nvars) {
  return groebner_basis(a, nvars) == groebner_basis(b, nvars);
}

bool is_unit_ideal(const std::vector<CommPoly>& gens, std::size_t nvars) {
  auto gb = groebner_basis(gens, nvars);
  return gb.size() == 1 && gb[0].is_constant();
}

namespace {

CommPoly extend(const CommPoly& f, std::size_t extra) {
  CommPoly out(f.nvars() + extra);
  for (const auto& [e, c] : f.terms()) {
    Exponents x = e;
    x.resize(e.size() + extra, 0);
    out.add_term(x, c);
  }
  return out;
}

}  // namespace

std::vector<CommPoly> eliminate(const std::vector<CommPoly>& gens, std::size_t nvars,
                                const std::vector<bool>& flagged) {
  if (flagged.size() != nvars) throw std::invalid_argument("eliminate: flag arity");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < nvars; ++i)
    if (!flagged[i]) keep.push_back(i);
  std::vector<CommPoly> out;
  for (const auto& g : groebner_basis(gens, nvars, TermOrder::elimination(flagged))) {
    bool free = true;
    for (const auto& [e, c] : g.terms())
      for (std::size_t i = 0; i < nvars && free; ++i)
        if (flagged[i] && e[i] != 0) free = false;
    if (!free) continue;
    CommPoly r(keep.size());
    for (const auto& [e, c] : g.terms()) {
      Exponents x(keep.size());
      for (std::size_t k = 0; k < keep.size(); ++k) x[k] = e[keep[k]];
      r.add_term(x, c);
    }
    out.push_back(std::move(r));
  }
  return groebner_basis(out, keep.size());
}

std::vector<CommPoly> saturation(const std::vector<CommPoly>& ideal, const CommPoly& f,
                                 std::size_t nvars) {
  detail::check_vars(ideal, nvars);
  if (f.nvars() != nvars) throw std::invalid_argument("saturation: ring mismatch");
  if (f.is_zero()) return {CommPoly::constant(nvars, 1)};
  std::vector<CommPoly> ext;
  for (const auto& g : ideal) ext.push_back(extend(g, 1));
  CommPoly t = CommPoly::variable(nvars + 1, nvars);
  ext.push_back(CommPoly::constant(nvars + 1, 1) - t * extend(f, 1));
  std::vector<bool> flags(nvars + 1, false);
  flags[nvars] = true;
  return eliminate(ext, nvars + 1, flags);
}

std::vector<CommPoly> intersection(const std::vector<CommPoly>& a, const std::vector<CommPoly>& b,
                                   std::size_t nvars) {
  detail::check_vars(a, nvars);
  detail::check_vars(b, nvars);
  CommPoly t = CommPoly::variable(nvars + 1, nvars);
  CommPoly one_minus_t = CommPoly::constant(nvars + 1, 1) - t;
  std::vector<CommPoly> ext;
  for (const auto& g : a) ext.push_back(t * extend(g, 1));
  for (const auto& g : b) ext.push_back(one_minus_t * extend(g, 1));
  std::vector<bool> flags(nvars + 1, false);
  flags[nvars] = true;
  return eliminate(ext, nvars + 1, flags);
}

std::vector<CommPoly> saturation(const std::vector<CommPoly>& ideal,
                                 const std::vector<CommPoly>& by, std::size_t nvars) {
  if (by.empty()) return groebner_basis(ideal, nvars);  // (I : (0)^inf) taken as I
  std::vector<CommPoly> acc;
  bool first = true;
  for (const auto& g : by) {
    auto s = saturation(ideal, g, nvars);
    acc = first ? s : intersection(acc, s, nvars);
    first = false;
  }
  return acc;
}

bool radical_membership(const CommPoly& f, const std::vector<CommPoly>& ideal, std::size_t nvars) {
  detail::check_vars(ideal, nvars);
  std::vector<CommPoly> ext;
  for (const auto& g : ideal) ext.push_back(extend(g, 1));
  CommPoly t = CommPoly::variable(nvars + 1, nvars);
  ext.push_back(CommPoly::constant(nvars + 1, 1) - t * extend(f, 1));
  return is_unit_ideal(ext, nvars + 1);
}

std::optional<std::size_t> krull_dimension(const std::vector<CommPoly>& gens, std::size_t nvars,
                                           const TermOrder& order) {
  auto gb = groebner_basis(gens, nvars, order);
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& g : gb) {
    Exponents lm = leading_monomial(g, order);
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < nvars; ++i)
      if (lm[i] > 0) s.push_back(i);
    if (s.empty()) return std::nullopt;
    supports.push_back(std::move(s));
  }
  // Depth-first search over variable subsets: a set is independent when it
  // contains the support of no leading monomial.
  std::size_t best = 0;
  std::vector<bool> chosen(nvars, false);
  auto independent = [&]() {
    for (const auto& s : supports)
      if (std::all_of(s.begin(), s.end(), [&](std::size_t i) { return chosen[i]; })) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t next, std::size_t size) -> void {
    best = std::max(best, size);
    if (size + (nvars - next) <= best) return;
    for (std::size_t i = next; i < nvars; ++i) {
      chosen[i] = true;
      if (independent()) self(self, i + 1, size + 1);
      chosen[i] = false;
    }
  };
  search(search, 0, 0);
  return best;
}

// ----------------------------------------------------------------- modules

std::vector<CommVector> module_groebner_basis(const std::vector<CommVector>& gens,
                                              std::size_t rank, std::size_t nvars,
                                              const ModuleOrder& order) {
  Engine e(order, false, nvars);
  std::vector<Vec> vs;
  for (const auto& g : gens) {
    if (g.size() != rank) throw std::invalid_argument("module element has wrong rank");
    detail::check_vars(g, nvars);
    vs.push_back(detail::to_vec(g, e));
  }
  std::vector<CommVector> out;
  for (const auto& v : e.groebner(std::move(vs), rank)) out.push_back(detail::from_vec(v, rank, nvars));
  return out;
}

CommVector module_normal_form(const CommVector& f, const std::vector<CommVector>& gb,
                              const ModuleOrder& order) {
  const std::size_t nvars = f.empty() ? 0 : f[0].nvars();
  Engine e(order, false, nvars);
  std::vector<Vec> basis;
  for (const auto& g : gb) {
    Vec v = detail::to_vec(g, e);
    if (!v.empty()) basis.push_back(std::move(v));
  }
  return detail::from_vec(e.reduce(detail::to_vec(f, e), basis), f.size(), nvars);
}

std::vector<CommPoly> module_colon(const std::vector<CommVector>& gens, std::size_t rank,
                                   std::size_t nvars, std::size_t i) {
  if (i >= rank) throw std::out_of_range("module_colon: component");
  // Position-over-term with component i smallest: a Groebner basis element
  // whose leading term lies in component i lives entirely in component i.
  ModuleOrder order;
  order.term = TermOrder::degrevlex();
  order.priority.resize(rank);
  for (std::size_t c = 0; c < rank; ++c)
    order.priority[c] = c == i ? -static_cast<int>(rank) : -static_cast<int>(c);
  std::vector<CommPoly> out;
  for (const auto& g : module_groebner_basis(gens, rank, nvars, order)) {
    bool only_i = true;
    for (std::size_t c = 0; c < rank; ++c)
      if (c != i && !g[c].is_zero()) only_i = false;
    if (only_i) out.push_back(g[i]);
  }
  return groebner_basis(out, nvars);
}

std::vector<CommPoly> annihilator(const std::vector<CommVector>& gens, std::size_t rank,
                                  std::size_t nvars) {
  if (rank == 0) return {CommPoly::constant(nvars, 1)};
  std::vector<CommPoly> acc = module_colon(gens, rank, nvars, 0);
  for (std::size_t i = 1; i < rank; ++i) acc = intersection(acc, module_colon(gens, rank, nvars, i), nvars);
  return acc;
}

// --------------------------------------------------------------- Weyl side

ModuleOrder filtered_weyl_order(std::size_t d) {
  std::vector<int> w(2 * d, 0);
  for (std::size_t i = d; i < 2 * d; ++i) w[i] = 1;
  return ModuleOrder{TermOrder::weighted(std::move(w)), {}, true};
}

WeylGroebnerBasis::WeylGroebnerBasis(const std::vector<WeylVector>& gens, std::size_t rank,
                                     std::size_t d, ModuleOrder order)
    : rank_(rank), d_(d), order_(std::move(order)) {
  Engine e(order_, true, 2 * d);
  std::vector<Vec> vs;
  for (const auto& g : gens) {
    if (g.size() != rank) throw std::invalid_argument("Weyl module element has wrong rank");
    for (const auto& x : g)
      if (x.num_vars() != d) throw std::invalid_argument("Weyl algebra mismatch");
    vs.push_back(detail::to_vec(g, e));
  }
  for (const auto& v : e.groebner(std::move(vs), rank)) elements_.push_back(detail::weyl_from_vec(v, rank, d));
}

WeylVector WeylGroebnerBasis::normal_form(const WeylVector& f) const {
  if (f.size() != rank_) throw std::invalid_argument("Weyl module element has wrong rank");
  Engine e(order_, true, 2 * d_);
  std::vector<Vec> basis;
  for (const auto& g : elements_) basis.push_back(detail::to_vec(g, e));
  return detail::weyl_from_vec(e.reduce(detail::to_vec(f, e), basis), rank_, d_);
}

bool WeylGroebnerBasis::contains(const WeylVector& f) const {
  auto r = normal_form(f);
  return std::all_of(r.begin(), r.end(), [](const WeylElement& x) { return x.is_zero(); });
}

CommVector principal_symbol(const WeylVector& f) {
  const std::size_t d = f.empty() ? 0 : f[0].num_vars();
  int top = -1;
  for (const auto& x : f) top = std::max(top, x.order());
  CommVector out(f.size(), CommPoly(2 * d));
  for (std::size_t c = 0; c < f.size(); ++c)
    for (const auto& [key, coeff] : f[c].terms()) {
      int ord = std::accumulate(key.begin() + static_cast<std::ptrdiff_t>(d), key.end(), 0);
      if (ord == top) out[c].add_term(key, coeff);
    }
  return out;
}

std::vector<CommVector> initial_forms(const WeylGroebnerBasis& gb) {
  std::vector<CommVector> out;
  for (const auto& g : gb.elements()) out.push_back(principal_symbol(g));
  return out;
}

}  // namespace toric
