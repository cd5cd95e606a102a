#pragma once

// Exact integer linear algebra: matrices over Z, Smith normal form, and
// finitely generated abelian groups presented as cokernels.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  // All rows must have length `cols`.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  IntMatrix transpose() const;

  // Matrix-vector product M v; v.size() must equal cols().
  IntVector apply(const IntVector& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// U * M * V == D with U, V unimodular and D diagonal in Smith form.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  // Nonzero diagonal entries of D, positive, each dividing the next.
  std::vector<Integer> invariant_factors;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);

// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// A finitely generated abelian group Z^r + Z/t_1 + ... + Z/t_s given as a
// quotient of Z^d. Elements are coordinate vectors of length r + s: the free
// coordinates first, then the torsion coordinates reduced into [0, t_k).
class FinitelyGeneratedAbelianGroup {
 public:
  FinitelyGeneratedAbelianGroup() = default;
  FinitelyGeneratedAbelianGroup(IntMatrix projection, IntMatrix lift, std::size_t free_rank,
                                std::vector<Integer> torsion_orders);

  std::size_t ambient_rank() const { return projection_.cols(); }
  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion_orders() const { return torsion_; }
  std::size_t num_coordinates() const { return free_rank_ + torsion_.size(); }
  bool is_trivial() const { return num_coordinates() == 0; }

  // (r + s) x d matrix; torsion rows are reduced only when projecting.
  const IntMatrix& projection_matrix() const { return projection_; }
  // d x (r + s) matrix with projection * lift == identity.
  const IntMatrix& lift_matrix() const { return lift_; }

  // a |-> class of a, in canonical reduced coordinates.
  IntVector project(const IntVector& a) const;
  // A representative a in Z^d of the given class.
  IntVector section(const IntVector& element) const;
  // Reduce torsion coordinates of an element; validates the arity.
  IntVector reduce(const IntVector& element) const;

  IntVector add(const IntVector& a, const IntVector& b) const;
  IntVector negate(const IntVector& a) const;
  IntVector zero() const { return IntVector(num_coordinates(), 0); }

  // "0", "Z", "Z^2", "Z + Z/2", ...
  std::string describe() const;

 private:
  IntMatrix projection_;
  IntMatrix lift_;
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

// coker(M : Z^n -> Z^d) for a d x n matrix M. The free part is presented in
// the basis given by the Hermite normal form of the SNF change-of-basis rows,
// so every dual functional has a positive leading entry.
FinitelyGeneratedAbelianGroup cokernel(const IntMatrix& m);

// Functionals u_1..u_r on Z^d spanning Hom(G, Z), pulled back along the
// projection. Torsion is annihilated by construction.
std::vector<IntVector> dual_lattice_basis(const FinitelyGeneratedAbelianGroup& g);

std::string to_string(const IntVector& v);

}  // namespace toric
