#pragma once

// Characteristic ideals under the order filtration, the variety Z, b-torsion
// and sheaf dimension, and the cotangent chart rings over the affine pieces
// of X.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric_dmod/dmod.hpp"
#include "toric_dmod/fan_cox.hpp"
#include "toric_dmod/groebner.hpp"

namespace toric {

// Ann_{S'}(gr F) in k[x_1..x_d, xi_1..xi_d], as a reduced degrevlex basis.
std::vector<CommPoly> characteristic_ideal(const GradedPresentation& f);

// p_u = sum_i <u, e_i> x_i xi_i for the dual basis.
std::vector<CommPoly> z_ideal(const GradingData& g);

// The irrelevant ideal extended to S'.
std::vector<CommPoly> irrelevant_ideal_cotangent(const GradingData& g);

// Every p_u lies in the radical of j(F). Throws PreconditionViolated when
// the theta condition fails.
bool verify_char_containment(const GradingData& g, const GradedPresentation& f);

struct CharReport {
  std::vector<CommPoly> j;
  std::optional<std::size_t> dim;  // nullopt: empty variety
  std::vector<CommPoly> saturated;
  bool torsion = false;
  std::optional<long> sheaf_dim;  // nullopt: zero sheaf
  bool holonomic_a = false;
  bool holonomic_sheaf = false;
};

CharReport dimension_report(const GradingData& g, const GradedPresentation& f);

// Every reduced basis element is homogeneous for deg x_i = e_i, deg xi_i = -e_i.
bool t_invariance_check(const GradingData& g, const std::vector<CommPoly>& j);
// Degree of a homogeneous element of S' (nullopt if inhomogeneous or zero).
std::optional<IntVector> cotangent_degree(const GradingData& g, const CommPoly& f);

// A Laurent monomial x^a xi^b of S' localized at x^sigma_hat.
struct ChartGenerator {
  std::string name;
  std::vector<int> x_exp;
  std::vector<int> xi_exp;
};

struct ChartIdeal {
  Cone sigma;
  std::vector<ChartGenerator> generators;
  VarNames names;
  // Relations among the generators (kernel of the monomial map).
  std::vector<CommPoly> presentation;
  // Image of the saturated characteristic ideal in the chart ring.
  std::vector<CommPoly> image;
  // Dimension of V(presentation + image); nullopt when empty.
  std::optional<std::size_t> dim;
  // Largest xi-degree among the rewritten generators.
  int xi_degree_bound = 0;
};

// Throws ConeNotMaximal, ConeNotSmooth, or PreconditionViolated when the
// theta condition fails.
ChartIdeal chart_ideal(const GradingData& g, const GradedPresentation& f, const Cone& sigma);
// Uses an already computed saturated characteristic ideal.
ChartIdeal chart_ideal_from(const GradingData& g, const std::vector<CommPoly>& saturated,
                            const Cone& sigma);

// max over maximal cones of the chart dimension equals dim(saturated) - (d - n).
// Throws PreconditionViolated for b-torsion modules.
bool verify_quotient_dimension(const GradingData& g, const GradedPresentation& f);

std::string generator_string(const ChartGenerator& gen, std::size_t d);

}  // namespace toric
