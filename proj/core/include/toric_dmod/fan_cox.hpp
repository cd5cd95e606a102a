#pragma once

// Smooth fans, their Cox ring grading, the irrelevant ideal and Euler
// operators.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric_dmod/error.hpp"
#include "toric_dmod/lattice.hpp"
#include "toric_dmod/polynomial.hpp"
#include "toric_dmod/weyl.hpp"

namespace toric {

// Sorted, duplicate-free list of 0-based ray indices.
using Cone = std::vector<std::size_t>;

// A fan given by its rays and its maximal cones; all faces are implied.
class Fan {
 public:
  Fan() = default;
  // `cones` may contain faces and duplicates; maximal cones are extracted.
  // Rays not contained in any listed cone become one-dimensional maximal
  // cones. Index errors raise InvalidFan(BadConeIndex).
  Fan(std::size_t n, std::vector<IntVector> rays, const std::vector<std::vector<std::size_t>>& cones);

  std::size_t ambient_rank() const { return n_; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }

  bool is_cone(const Cone& c) const;
  bool is_maximal(const Cone& c) const;
  // Every cone of the fan, including the zero cone, in a deterministic order.
  std::vector<Cone> all_cones() const;

 private:
  std::size_t n_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> maximal_;
};

Cone normalize_cone(std::vector<std::size_t> c);

struct ValidationReport {
  bool valid = true;
  std::optional<FanErrorKind> kind;
  // 0-based index into maximal_cones for cone-specific failures.
  std::optional<std::size_t> cone;
  std::string message;
};

ValidationReport validate_smooth_fan(const Fan& fan);
// Throws InvalidFan describing the first failure.
void require_smooth_fan(const Fan& fan);

// 1 at each ray outside the cone. Throws UnknownCone.
Exponents sigma_hat_monomial(const Fan& fan, const Cone& cone);

struct MonomialIdeal {
  std::vector<Exponents> generators;
};

// Minimal generators of (x^sigma_hat : sigma maximal), sorted.
MonomialIdeal irrelevant_ideal(const Fan& fan);

// The sequence 0 -> N^dual -> Z^d -> Cl(X) -> 0 in coordinates.
class GradingData {
 public:
  GradingData() = default;
  // The fan must already be valid and smooth.
  explicit GradingData(Fan fan);

  const Fan& fan() const { return fan_; }
  std::size_t num_rays() const { return fan_.num_rays(); }
  std::size_t ambient_rank() const { return fan_.ambient_rank(); }

  // d x n matrix whose i-th row is v_i.
  const IntMatrix& iota() const { return iota_; }
  IntVector iota_apply(const IntVector& p) const;
  const FinitelyGeneratedAbelianGroup& class_group() const { return cl_; }
  std::size_t class_coordinates() const { return cl_.num_coordinates(); }

  IntVector degree(const IntVector& a) const { return cl_.project(a); }
  IntVector degree(const Exponents& a) const;
  // Degree of x_i.
  IntVector ray_degree(std::size_t i) const;
  IntVector e_bar() const { return e_bar_; }
  // The SNF section: a representative in Z^d of a class.
  IntVector lift(const IntVector& cls) const { return cl_.section(cls); }

  // Functionals u_1..u_r on Z^d; <u_j, class> equals coordinate j.
  const std::vector<IntVector>& dual_basis() const { return dual_; }
  Integer pairing(std::size_t j, const IntVector& cls) const;
  // <u_j, e_i> for all i.
  IntVector dual_values(std::size_t j) const { return dual_.at(j); }

 private:
  Fan fan_;
  IntMatrix iota_;
  FinitelyGeneratedAbelianGroup cl_;
  std::vector<IntVector> dual_;
  IntVector e_bar_;
};

// Validates (throws InvalidFan) and builds the grading data.
GradingData grading_data(const Fan& fan);

// theta_u = sum_i <u, e_i> x_i d_i for u given by its values on e_1..e_d.
WeylElement euler_operator(const GradingData& g, const IntVector& u);
// Same, expressed in k[theta_1..theta_d].
ThetaPoly euler_theta(const GradingData& g, const IntVector& u);

// All a in N^d with class(a) == cls and every a_i <= cap, lexicographic.
std::vector<Exponents> degree_component_basis(const GradingData& g, const IntVector& cls, int cap);

}  // namespace toric
