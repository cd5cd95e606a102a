#pragma once

// Sparse commutative polynomials with exact rational coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Rational = mpq_class;
using Exponents = std::vector<int>;

class CommPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  CommPoly() = default;
  explicit CommPoly(std::size_t nvars) : nvars_(nvars) {}

  static CommPoly constant(std::size_t nvars, const Rational& c);
  static CommPoly variable(std::size_t nvars, std::size_t i);
  static CommPoly monomial(const Exponents& exp, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;  // -1 for zero

  // Adds c * x^exp; zero results are erased.
  void add_term(const Exponents& exp, const Rational& c);
  Rational coefficient(const Exponents& exp) const;

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const Rational& c);

  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator-(const CommPoly& a);
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(CommPoly a, const Rational& c) { return a *= c; }
  friend CommPoly operator*(const Rational& c, CommPoly a) { return a *= c; }
  friend bool operator==(const CommPoly& a, const CommPoly& b) = default;

  CommPoly pow(unsigned k) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  // Ring map sending variable i to images[i]; all images share one ring.
  CommPoly substitute(const std::vector<CommPoly>& images, std::size_t target_nvars) const;
  // Scales so that the coefficient of the largest term (degrevlex) is 1.
  CommPoly monic() const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

// Alias used where a polynomial lives in k[theta_1..theta_d] or
// k[vartheta_1..vartheta_n].
using ThetaPoly = CommPoly;

using VarNames = std::vector<std::string>;

VarNames indexed_names(std::string_view prefix, std::size_t count);
// x1..xd, xi1..xid
VarNames cotangent_names(std::size_t d);

// Terms printed in descending degree-reverse-lexicographic order.
std::string to_string(const CommPoly& p, const VarNames& names);
// "(g1, g2, ...)"; "(0)" for the zero ideal.
std::string ideal_to_string(const std::vector<CommPoly>& gens, const VarNames& names);

// Parses sums of products of rationals and variables; supports ^, *, +, -,
// and parentheses.
CommPoly parse_comm_poly(std::string_view text, const VarNames& names);

// Exact quotient f / g if g divides f.
bool divides(const CommPoly& g, const CommPoly& f, CommPoly* quotient = nullptr);

// Degree reverse lexicographic comparison: <0, 0, >0.
int degrevlex_compare(const Exponents& a, const Exponents& b);

std::string rational_to_string(const Rational& q);

}  // namespace toric
