#pragma once

// Graded A-module presentations, the modules D_L(b) and D_R(a), the theta
// condition, the left-right swap, and the local eigenspace machinery
// (h_p, rho, I(p), K(a)) with brute-force oracles.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric_dmod/fan_cox.hpp"
#include "toric_dmod/groebner.hpp"
#include "toric_dmod/weyl.hpp"

namespace toric {

enum class Side { Left, Right };

const char* to_string(Side side);

// A^r / N for a left module (N generated by rows sum_i f_i e_i) or a right
// module (rows sum_i e_i f_i). Generator degrees are the actual degrees of
// e_1..e_r in Cl(X) coordinates.
struct GradedPresentation {
  Side side = Side::Left;
  std::size_t num_vars = 0;
  std::vector<IntVector> generator_degrees;
  std::vector<WeylVector> relations;

  std::size_t rank() const { return generator_degrees.size(); }
  friend bool operator==(const GradedPresentation&, const GradedPresentation&) = default;
};

// Throws InhomogeneousInput (or std::invalid_argument on shape errors).
void validate_presentation(const GradingData& g, const GradedPresentation& f);

// <u, cls> for a functional u on Z^d that vanishes on the image of iota.
Integer pair_functional(const GradingData& g, const IntVector& u, const IntVector& cls);

// A(b)/A(theta_u + <u,b>): one generator of degree -b.
GradedPresentation d_module_left(const GradingData& g, const IntVector& b);
// A(a)/(theta_u - <u,a>)A: one generator of degree -a.
GradedPresentation d_module_right(const GradingData& g, const IntVector& a);

// Relations of the left module; for a right module the image under tau,
// which presents the same submodule read through the anti-automorphism.
std::vector<WeylVector> left_relations(const GradedPresentation& f);
WeylGroebnerBasis relation_basis(const GradedPresentation& f);

struct ThetaFailure {
  std::size_t generator;   // 0-based
  std::size_t functional;  // 0-based index into the dual basis
};

struct ThetaCheck {
  bool holds = true;
  std::optional<ThetaFailure> failure;
};

// Left: (theta_u - <u, deg e_i>) e_i lies in N for all i and u.
// Right: e_i (theta_u + <u, deg e_i>) lies in N.
ThetaCheck check_theta_condition(const GradingData& g, const GradedPresentation& f);
ThetaCheck check_theta_condition(const GradingData& g, const GradedPresentation& f,
                                 const WeylGroebnerBasis& relations);

// (theta_u + <u,b>) f == f (theta_u + <u, b + b'>) for f of degree b'.
// Throws InhomogeneousInput unless f is zero or homogeneous of degree b'.
bool bimodule_identity_check(const GradingData& g, const WeylElement& f, const IntVector& u,
                             const IntVector& b, const IntVector& b_prime);
// f (theta_u + <u,b>) == (theta_u - <u,a>) f for f of degree a + b.
bool d_identity_check(const GradingData& g, const WeylElement& f, const IntVector& u,
                      const IntVector& a, const IntVector& b);

// Applies tau entrywise, flips the side, and shifts generator degrees by
// +e (left to right) or -e (right to left).
GradedPresentation left_right_swap(const GradingData& g, const GradedPresentation& f);

// ------------------------------------------------------------ local data

// prod (theta_i - m) over the listed (i, m), i 0-based.
struct LinearProduct {
  ThetaPoly poly;
  std::vector<std::pair<std::size_t, int>> factors;
};

// "th1*(th1 - 1)"; "1" for the empty product.
std::string factored_string(const LinearProduct& h);

// Product over i in sigma, 0 <= m <= -iota(p)_i - 1 of (theta_i - m).
LinearProduct h_p(const GradingData& g, const Cone& sigma, const IntVector& p);
// The same product with the closed range 0 <= m <= -iota(p)_i.
LinearProduct h_p_closed_range(const GradingData& g, const Cone& sigma, const IntVector& p);

// Enumerates Z(p) in the box |a_i| <= radius over the coordinates of sigma
// and returns the product of the hyperplanes {a_i = m} whose slices of the
// orthant lie inside Z(p), after checking that they cover Z(p).
// Throws BoxTooSmall when radius < max(1, max_{i in sigma} |iota(p)_i|) + 1.
LinearProduct j_p_oracle(const GradingData& g, const Cone& sigma, const IntVector& p, int radius);
int j_p_min_radius(const GradingData& g, const Cone& sigma, const IntVector& p);

// theta_i |-> sum_l <e_l, v_i> vartheta_l, from k[theta] to k[vartheta_1..n].
ThetaPoly rho(const GradingData& g, const ThetaPoly& w);
// rho after theta_i |-> theta_i - b_i.
ThetaPoly rho_b(const GradingData& g, const IntVector& b, const ThetaPoly& w);

struct LocalOperator {
  IntVector p;
  ThetaPoly image;  // rho(g)
};

// Throws NotInJp unless h_p divides g.
LocalOperator local_op_image(const GradingData& g, const Cone& sigma, const IntVector& p,
                             const ThetaPoly& w);

// The generator rho(h_p) of I(p).
ThetaPoly i_p_ideal(const GradingData& g, const Cone& sigma, const IntVector& p);

// Y(p) test: for every q in sigma-dual with |q_l| <= radius,
// rho(h_p)(q) == 0 exactly when q + p leaves sigma-dual.
bool y_p_check(const GradingData& g, const Cone& sigma, const IntVector& p, int radius);

// The operator x^{iota(p)} w(theta) applied, through the Weyl action, to the
// Laurent monomial x^{iota(q)} (sigma variables not inverted).
LaurentPoly local_action(const GradingData& g, const Cone& sigma, const IntVector& p,
                         const ThetaPoly& w, const IntVector& q);
// local_action(p, w, q) == w(iota(q)) x^{iota(p + q)} for all q in
// sigma-dual with |q_l| <= radius.
bool action_identity_check(const GradingData& g, const Cone& sigma, const IntVector& p,
                           const ThetaPoly& w, int radius);

// Linear generators theta_u + <u,b> of L_0 in k[theta].
std::vector<ThetaPoly> l0_generators(const GradingData& g, const IntVector& b);
// L_0 together with prod_{a_i <= 0} (theta_i + a_i).
std::vector<ThetaPoly> k_component(const GradingData& g, const IntVector& a, const IntVector& b);

VarNames theta_names(std::size_t d);   // th1..thd
VarNames vartheta_names(std::size_t n);  // v1..vn

}  // namespace toric
