#include "toric_dmod/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "expression.hpp"

namespace toric {

namespace {

void check_same_ring(const CommPoly& a, const CommPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("CommPoly: variable count mismatch");
}

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

int degrevlex_compare(const Exponents& a, const Exponents& b) {
  int da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

CommPoly CommPoly::constant(std::size_t nvars, const Rational& c) {
  CommPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

CommPoly CommPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("CommPoly::variable: index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  CommPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

CommPoly CommPoly::monomial(const Exponents& exp, const Rational& c) {
  CommPoly p(exp.size());
  p.add_term(exp, c);
  return p;
}

bool CommPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int CommPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e));
  return best;
}

void CommPoly::add_term(const Exponents& exp, const Rational& c) {
  if (exp.size() != nvars_) throw std::invalid_argument("CommPoly::add_term: exponent arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational CommPoly::coefficient(const Exponents& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

CommPoly operator-(const CommPoly& a) {
  CommPoly r = a;
  r *= Rational(-1);
  return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  check_same_ring(a, b);
  CommPoly r(a.nvars());
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

CommPoly CommPoly::pow(unsigned k) const {
  CommPoly r = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Rational CommPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("CommPoly::evaluate: point arity");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

CommPoly CommPoly::substitute(const std::vector<CommPoly>& images, std::size_t target_nvars) const {
  if (images.size() != nvars_) throw std::invalid_argument("CommPoly::substitute: image count");
  for (const auto& im : images)
    if (im.nvars() != target_nvars) throw std::invalid_argument("CommPoly::substitute: image ring");
  CommPoly r(target_nvars);
  for (const auto& [e, c] : terms_) {
    CommPoly t = constant(target_nvars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * images[i].pow(static_cast<unsigned>(e[i]));
    r += t;
  }
  return r;
}

CommPoly CommPoly::monic() const {
  if (terms_.empty()) return *this;
  const Exponents* lead = nullptr;
  for (const auto& [e, c] : terms_)
    if (!lead || degrevlex_compare(e, *lead) > 0) lead = &e;
  CommPoly r = *this;
  r *= 1 / terms_.at(*lead);
  return r;
}

VarNames indexed_names(std::string_view prefix, std::size_t count) {
  VarNames out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

VarNames cotangent_names(std::size_t d) {
  VarNames out = indexed_names("x", d);
  VarNames xi = indexed_names("xi", d);
  out.insert(out.end(), xi.begin(), xi.end());
  return out;
}

namespace {

std::string monomial_string(const Exponents& e, const VarNames& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names.at(i);
    if (e[i] != 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const CommPoly& p, const VarNames& names) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return degrevlex_compare(a.first, b.first) > 0; });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    std::string mono = monomial_string(e, names);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + '*' + mono;
    }
  }
  return out;
}

std::string ideal_to_string(const std::vector<CommPoly>& gens, const VarNames& names) {
  if (gens.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += to_string(gens[i], names);
  }
  return s + ")";
}

CommPoly parse_comm_poly(std::string_view text, const VarNames& names) {
  const std::size_t n = names.size();
  detail::ExpressionParser<CommPoly> parser(
      text, [n](const Rational& c) { return CommPoly::constant(n, c); },
      [&names, n](std::string_view id) {
        for (std::size_t i = 0; i < n; ++i)
          if (names[i] == id) return CommPoly::variable(n, i);
        throw ParseError("unknown variable '" + std::string(id) + "'");
      });
  return parser.parse();
}

bool divides(const CommPoly& g, const CommPoly& f, CommPoly* quotient) {
  check_same_ring(g, f);
  if (g.is_zero()) throw std::invalid_argument("divides: zero divisor");
  // {g} is a Groebner basis of (g): g | f iff full reduction leaves nothing.
  auto leading = [](const CommPoly& p) {
    const Exponents* lead = nullptr;
    for (const auto& [e, c] : p.terms())
      if (!lead || degrevlex_compare(e, *lead) > 0) lead = &e;
    return *lead;
  };
  const Exponents lg = leading(g);
  const Rational cg = g.coefficient(lg);
  CommPoly rest = f;
  CommPoly q(f.nvars());
  while (!rest.is_zero()) {
    Exponents lr = leading(rest);
    Exponents shift(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      shift[i] = lr[i] - lg[i];
      if (shift[i] < 0) return false;
    }
    CommPoly t = CommPoly::monomial(shift, rest.coefficient(lr) / cg);
    q += t;
    rest -= t * g;
  }
  if (quotient) *quotient = q;
  return true;
}

}  // namespace toric
