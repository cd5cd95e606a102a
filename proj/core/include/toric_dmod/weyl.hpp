#pragma once

// The d-th Weyl algebra k<x_1..x_d, d_1..d_d> over Q, its torus-eigenspace
// ("theta") form, the involution tau, and the action on Laurent polynomials.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toric_dmod/lattice.hpp"
#include "toric_dmod/polynomial.hpp"

namespace toric {

class GradingData;

// Normal-ordered element sum c_{a,b} x^a d^b. Keys are the concatenation
// (a_1..a_d, b_1..b_d); iteration is lexicographic in that key.
class WeylElement {
 public:
  using TermMap = std::map<Exponents, Rational>;

  WeylElement() = default;
  explicit WeylElement(std::size_t d) : d_(d) {}

  static WeylElement constant(std::size_t d, const Rational& c);
  static WeylElement monomial(const Exponents& a, const Exponents& b, const Rational& c = 1);
  static WeylElement x(std::size_t d, std::size_t i);
  static WeylElement dx(std::size_t d, std::size_t i);
  // theta_i = x_i d_i
  static WeylElement theta(std::size_t d, std::size_t i);

  std::size_t num_vars() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Largest |b| among the terms (operator order); -1 for zero.
  int order() const;

  void add_term(const Exponents& key, const Rational& c);
  Rational coefficient(const Exponents& a, const Exponents& b) const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Rational& c);

  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator-(WeylElement a) { return a *= Rational(-1); }
  friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
  friend WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }
  friend WeylElement operator*(const WeylElement& f, const WeylElement& g);
  friend bool operator==(const WeylElement& a, const WeylElement& b) = default;

  WeylElement pow(unsigned k) const;

 private:
  std::size_t d_ = 0;
  TermMap terms_;
};

WeylElement weyl_mul(const WeylElement& f, const WeylElement& g);

// x^a d^b * x^c d^e expanded into normal order, appended to `out` as
// (key, coefficient) pairs (keys may repeat).
void normal_ordered_product(const Exponents& a, const Exponents& b, const Exponents& c,
                            const Exponents& e, const Rational& coeff,
                            std::vector<std::pair<Exponents, Rational>>& out);

// Cl(X)-degree of x^a d^b, i.e. class of a - b.
IntVector weyl_monomial_degree(const GradingData& g, const Exponents& key);
std::map<IntVector, WeylElement> graded_components(const GradingData& g, const WeylElement& f);
// Degree of f if it is homogeneous and nonzero.
std::optional<IntVector> homogeneous_degree(const GradingData& g, const WeylElement& f);

// Entry c stands for x^{c+} d^{c-} w(theta).
class ThetaFormElement {
 public:
  using EntryMap = std::map<std::vector<int>, ThetaPoly>;

  ThetaFormElement() = default;
  explicit ThetaFormElement(std::size_t d) : d_(d) {}

  std::size_t num_vars() const { return d_; }
  const EntryMap& entries() const { return entries_; }
  void add(const std::vector<int>& shift, const ThetaPoly& w);
  friend bool operator==(const ThetaFormElement& a, const ThetaFormElement& b) = default;

 private:
  std::size_t d_ = 0;
  EntryMap entries_;
};

ThetaFormElement to_theta_form(const WeylElement& f);
WeylElement from_theta_form(const ThetaFormElement& t);
// w(theta_1..theta_d) as a normal-ordered Weyl element.
WeylElement theta_to_weyl(const ThetaPoly& w);
// prod_{j=1}^{r} (theta_i - j + 1), expanded in k[theta_1..theta_d].
ThetaPoly falling_factorial(std::size_t d, std::size_t i, int r, int shift = 0);

// Laurent polynomial in x_1..x_d; negative exponents allowed only where the
// mask is set.
class LaurentPoly {
 public:
  using TermMap = std::map<std::vector<int>, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<bool> negative_allowed)
      : mask_(std::move(negative_allowed)) {}

  static LaurentPoly monomial(std::vector<bool> mask, const std::vector<int>& exp,
                              const Rational& c = 1);

  std::size_t num_vars() const { return mask_.size(); }
  const std::vector<bool>& mask() const { return mask_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Throws std::invalid_argument when the exponent violates the mask.
  void add_term(const std::vector<int>& exp, const Rational& c);
  Rational coefficient(const std::vector<int>& exp) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  std::vector<bool> mask_;
  TermMap terms_;
};

// x_i acts by multiplication, d_i by differentiation.
LaurentPoly act(const WeylElement& f, const LaurentPoly& g);

// x^a d^b |-> (-d)^b x^a, an anti-automorphism with tau o tau = id.
WeylElement tau(const WeylElement& f);

// Printed as 3*x1^2*d1 - 1/2*x2*d2^3 with terms in descending
// degree-reverse-lexicographic order on (x, d).
std::string to_string(const WeylElement& f);
// Accepts x<k>, d<k> and th<k> (= x<k>*d<k>), rationals, + - * ^ and
// parentheses. Products are taken in the written order.
WeylElement parse_weyl(std::string_view text, std::size_t d);

}  // namespace toric
