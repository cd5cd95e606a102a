#include "toric_dmod/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "expression.hpp"
#include "toric_dmod/fan_cox.hpp"

namespace toric {

namespace {

void require_same(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("Weyl algebra: number of variables differs");
}

Exponents join(const Exponents& a, const Exponents& b) {
  Exponents key(a);
  key.insert(key.end(), b.begin(), b.end());
  return key;
}

Integer falling(int n, int k) {
  Integer r = 1;
  for (int j = 0; j < k; ++j) r *= n - j;
  return r;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

WeylElement WeylElement::constant(std::size_t d, const Rational& c) {
  WeylElement f(d);
  f.add_term(Exponents(2 * d, 0), c);
  return f;
}

WeylElement WeylElement::monomial(const Exponents& a, const Exponents& b, const Rational& c) {
  require_same(a.size(), b.size());
  WeylElement f(a.size());
  f.add_term(join(a, b), c);
  return f;
}

WeylElement WeylElement::x(std::size_t d, std::size_t i) {
  Exponents key(2 * d, 0);
  key.at(i) = 1;
  WeylElement f(d);
  f.add_term(key, 1);
  return f;
}

WeylElement WeylElement::dx(std::size_t d, std::size_t i) {
  if (i >= d) throw std::out_of_range("WeylElement::dx");
  Exponents key(2 * d, 0);
  key[d + i] = 1;
  WeylElement f(d);
  f.add_term(key, 1);
  return f;
}

WeylElement WeylElement::theta(std::size_t d, std::size_t i) {
  if (i >= d) throw std::out_of_range("WeylElement::theta");
  Exponents key(2 * d, 0);
  key[i] = 1;
  key[d + i] = 1;
  WeylElement f(d);
  f.add_term(key, 1);
  return f;
}

int WeylElement::order() const {
  int best = -1;
  for (const auto& [key, c] : terms_) {
    int ord = 0;
    for (std::size_t i = d_; i < 2 * d_; ++i) ord += key[i];
    best = std::max(best, ord);
  }
  return best;
}

void WeylElement::add_term(const Exponents& key, const Rational& c) {
  if (key.size() != 2 * d_) throw std::invalid_argument("WeylElement::add_term: key arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational WeylElement::coefficient(const Exponents& a, const Exponents& b) const {
  auto it = terms_.find(join(a, b));
  return it == terms_.end() ? Rational(0) : it->second;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  require_same(d_, o.d_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  require_same(d_, o.d_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

void normal_ordered_product(const Exponents& a, const Exponents& b, const Exponents& c,
                            const Exponents& e, const Rational& coeff,
                            std::vector<std::pair<Exponents, Rational>>& out) {
  const std::size_t d = a.size();
  // Variables with distinct indices commute, so the product factors per
  // index: d^b x^c = sum_k C(b,k) c!/(c-k)! x^(c-k) d^(b-k).
  std::vector<int> kmax(d);
  for (std::size_t i = 0; i < d; ++i) kmax[i] = std::min(b[i], c[i]);
  std::vector<int> k(d, 0);
  Exponents key(2 * d);
  while (true) {
    Rational w = coeff;
    for (std::size_t i = 0; i < d; ++i) {
      if (k[i] > 0) w *= binomial(b[i], k[i]) * falling(c[i], k[i]);
      key[i] = a[i] + c[i] - k[i];
      key[d + i] = b[i] + e[i] - k[i];
    }
    out.emplace_back(key, w);
    std::size_t i = 0;
    while (i < d && k[i] == kmax[i]) k[i++] = 0;
    if (i == d) break;
    ++k[i];
  }
}

WeylElement operator*(const WeylElement& f, const WeylElement& g) {
  require_same(f.d_, g.d_);
  const std::size_t d = f.d_;
  WeylElement r(d);
  std::vector<std::pair<Exponents, Rational>> buf;
  Exponents a(d), b(d), c(d), e(d);
  for (const auto& [kf, cf] : f.terms_) {
    std::copy(kf.begin(), kf.begin() + static_cast<std::ptrdiff_t>(d), a.begin());
    std::copy(kf.begin() + static_cast<std::ptrdiff_t>(d), kf.end(), b.begin());
    for (const auto& [kg, cg] : g.terms_) {
      std::copy(kg.begin(), kg.begin() + static_cast<std::ptrdiff_t>(d), c.begin());
      std::copy(kg.begin() + static_cast<std::ptrdiff_t>(d), kg.end(), e.begin());
      buf.clear();
      normal_ordered_product(a, b, c, e, cf * cg, buf);
      for (const auto& [key, w] : buf) r.add_term(key, w);
    }
  }
  return r;
}

WeylElement weyl_mul(const WeylElement& f, const WeylElement& g) { return f * g; }

WeylElement WeylElement::pow(unsigned k) const {
  WeylElement r = constant(d_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

IntVector weyl_monomial_degree(const GradingData& g, const Exponents& key) {
  const std::size_t d = g.num_rays();
  IntVector diff(d);
  for (std::size_t i = 0; i < d; ++i) diff[i] = key[i] - key[d + i];
  return g.degree(diff);
}

std::map<IntVector, WeylElement> graded_components(const GradingData& g, const WeylElement& f) {
  require_same(g.num_rays(), f.num_vars());
  std::map<IntVector, WeylElement> out;
  for (const auto& [key, c] : f.terms()) {
    auto [it, inserted] = out.try_emplace(weyl_monomial_degree(g, key), f.num_vars());
    it->second.add_term(key, c);
  }
  return out;
}

std::optional<IntVector> homogeneous_degree(const GradingData& g, const WeylElement& f) {
  auto parts = graded_components(g, f);
  if (parts.size() != 1) return std::nullopt;
  return parts.begin()->first;
}

void ThetaFormElement::add(const std::vector<int>& shift, const ThetaPoly& w) {
  if (shift.size() != d_ || w.nvars() != d_)
    throw std::invalid_argument("ThetaFormElement::add: arity mismatch");
  if (w.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(shift, w);
  if (!inserted) {
    it->second += w;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

ThetaPoly falling_factorial(std::size_t d, std::size_t i, int r, int shift) {
  ThetaPoly out = ThetaPoly::constant(d, 1);
  ThetaPoly th = ThetaPoly::variable(d, i);
  for (int j = 1; j <= r; ++j) out = out * (th - ThetaPoly::constant(d, shift + j - 1));
  return out;
}

ThetaFormElement to_theta_form(const WeylElement& f) {
  const std::size_t d = f.num_vars();
  ThetaFormElement out(d);
  for (const auto& [key, coeff] : f.terms()) {
    std::vector<int> shift(d);
    ThetaPoly w = ThetaPoly::constant(d, coeff);
    for (std::size_t i = 0; i < d; ++i) {
      int a = key[i], b = key[d + i];
      shift[i] = a - b;
      if (a >= b) {
        // x^a d^b = x^(a-b) (x^b d^b)
        w = w * falling_factorial(d, i, b);
      } else {
        // x^a d^b = (x^a d^a) d^m = d^m prod_j (theta - m - j + 1)
        w = w * falling_factorial(d, i, a, b - a);
      }
    }
    out.add(shift, w);
  }
  return out;
}

WeylElement theta_to_weyl(const ThetaPoly& w) {
  const std::size_t d = w.nvars();
  std::vector<WeylElement> thetas;
  for (std::size_t i = 0; i < d; ++i) thetas.push_back(WeylElement::theta(d, i));
  WeylElement out(d);
  for (const auto& [exp, c] : w.terms()) {
    WeylElement t = WeylElement::constant(d, c);
    for (std::size_t i = 0; i < d; ++i)
      if (exp[i] > 0) t = t * thetas[i].pow(static_cast<unsigned>(exp[i]));
    out += t;
  }
  return out;
}

WeylElement from_theta_form(const ThetaFormElement& t) {
  const std::size_t d = t.num_vars();
  WeylElement out(d);
  for (const auto& [shift, w] : t.entries()) {
    Exponents a(d), b(d);
    for (std::size_t i = 0; i < d; ++i) {
      a[i] = std::max(shift[i], 0);
      b[i] = std::max(-shift[i], 0);
    }
    out += WeylElement::monomial(a, b) * theta_to_weyl(w);
  }
  return out;
}

LaurentPoly LaurentPoly::monomial(std::vector<bool> mask, const std::vector<int>& exp,
                                  const Rational& c) {
  LaurentPoly p(std::move(mask));
  p.add_term(exp, c);
  return p;
}

void LaurentPoly::add_term(const std::vector<int>& exp, const Rational& c) {
  if (exp.size() != mask_.size()) throw std::invalid_argument("LaurentPoly: exponent arity");
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] < 0 && !mask_[i])
      throw std::invalid_argument("LaurentPoly: negative exponent on a non-inverted variable");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPoly::coefficient(const std::vector<int>& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.mask_ != mask_) throw std::invalid_argument("LaurentPoly: mask mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly act(const WeylElement& f, const LaurentPoly& g) {
  const std::size_t d = f.num_vars();
  require_same(d, g.num_vars());
  LaurentPoly out(g.mask());
  std::vector<int> exp(d);
  for (const auto& [key, cf] : f.terms())
    for (const auto& [e, cg] : g.terms()) {
      Rational c = cf * cg;
      for (std::size_t i = 0; i < d && c != 0; ++i) {
        const int b = key[d + i];
        c *= falling(e[i], b);
        exp[i] = e[i] - b + key[i];
      }
      if (c != 0) out.add_term(exp, c);
    }
  return out;
}

WeylElement tau(const WeylElement& f) {
  const std::size_t d = f.num_vars();
  WeylElement out(d);
  Exponents zero(d, 0), a(d), b(d);
  std::vector<std::pair<Exponents, Rational>> buf;
  for (const auto& [key, c] : f.terms()) {
    int order = 0;
    for (std::size_t i = 0; i < d; ++i) {
      a[i] = key[i];
      b[i] = key[d + i];
      order += b[i];
    }
    buf.clear();
    normal_ordered_product(zero, b, a, zero, order % 2 ? Rational(-c) : c, buf);
    for (const auto& [k, w] : buf) out.add_term(k, w);
  }
  return out;
}

std::string to_string(const WeylElement& f) {
  if (f.is_zero()) return "0";
  const std::size_t d = f.num_vars();
  VarNames names = indexed_names("x", d);
  VarNames dn = indexed_names("d", d);
  names.insert(names.end(), dn.begin(), dn.end());
  CommPoly shadow(2 * d);
  for (const auto& [key, c] : f.terms()) shadow.add_term(key, c);
  // x-variables precede d-variables in every printed monomial, which is
  // exactly normal order.
  return to_string(shadow, names);
}

WeylElement parse_weyl(std::string_view text, std::size_t d) {
  detail::ExpressionParser<WeylElement> parser(
      text, [d](const Rational& c) { return WeylElement::constant(d, c); },
      [d](std::string_view id) -> WeylElement {
        auto index = [&](std::size_t prefix) -> std::size_t {
          std::string_view digits = id.substr(prefix);
          if (digits.empty() || digits.front() == '0' ||
              !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw ParseError("unknown symbol '" + std::string(id) + "'");
          std::size_t k = std::stoul(std::string(digits));
          if (k < 1 || k > d)
            throw ParseError("variable '" + std::string(id) + "' out of range 1.." + std::to_string(d));
          return k - 1;
        };
        if (id.starts_with("th")) return WeylElement::theta(d, index(2));
        if (id.starts_with("x")) return WeylElement::x(d, index(1));
        if (id.starts_with("d")) return WeylElement::dx(d, index(1));
        throw ParseError("unknown symbol '" + std::string(id) + "'");
      });
  return parser.parse();
}

}  // namespace toric
