#include "toric_dmod/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  IntVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << toric::to_string(row(r));
  }
  os << ']';
  return os.str();
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ']';
  return os.str();
}

namespace {

// Floor-free quotient used for Euclidean steps: q = trunc(a / b).
Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix D = m;
  IntMatrix U = IntMatrix::identity(rows);
  IntMatrix V = IntMatrix::identity(cols);

  const std::size_t limit = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < limit; ++t) {
    // Pivot: nonzero entry of least absolute value in the trailing block.
    auto select_pivot = [&]() -> bool {
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          if (D(r, c) == 0) continue;
          Integer a = abs(D(r, c));
          if (!found || a < best) {
            found = true;
            best = a;
            pr = r;
            pc = c;
          }
        }
      if (!found) return false;
      D.swap_rows(t, pr);
      U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      V.swap_cols(t, pc);
      return true;
    };
    if (!select_pivot()) break;

    while (true) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (D(r, t) == 0) continue;
        Integer q = trunc_div(D(r, t), D(t, t));
        D.add_row_multiple(r, t, -q);
        U.add_row_multiple(r, t, -q);
        if (D(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (D(t, c) == 0) continue;
        Integer q = trunc_div(D(t, c), D(t, t));
        D.add_col_multiple(c, t, -q);
        V.add_col_multiple(c, t, -q);
        if (D(t, c) != 0) dirty = true;
      }
      if (dirty) {
        // A smaller remainder exists in row or column t; move it to the pivot.
        std::size_t pr = t, pc = t;
        Integer best = abs(D(t, t));
        for (std::size_t r = t + 1; r < rows; ++r)
          if (D(r, t) != 0 && abs(D(r, t)) < best) {
            best = abs(D(r, t));
            pr = r;
            pc = t;
          }
        for (std::size_t c = t + 1; c < cols; ++c)
          if (D(t, c) != 0 && abs(D(t, c)) < best) {
            best = abs(D(t, c));
            pr = t;
            pc = c;
          }
        D.swap_rows(t, pr);
        U.swap_rows(t, pr);
        D.swap_cols(t, pc);
        V.swap_cols(t, pc);
        continue;
      }
      // Row and column cleared; enforce divisibility of the trailing block.
      bool fixed = false;
      for (std::size_t r = t + 1; r < rows && !fixed; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (D(r, c) % D(t, t) != 0) {
            D.add_row_multiple(t, r, 1);
            U.add_row_multiple(t, r, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(U), std::move(D), std::move(V), {}};
  for (std::size_t i = 0; i < limit; ++i)
    if (out.D(i, i) != 0) out.invariant_factors.push_back(out.D(i, i));
  return out;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).invariant_factors.size(); }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("unimodular_inverse: matrix not square");
  const std::size_t n = m.rows();
  // Gauss-Jordan over Q, then check integrality.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = mpq_class(m(r, c));
    a[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("unimodular_inverse: singular matrix");
    std::swap(a[p], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& q = a[r][n + c];
      if (q.get_den() != 1) throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
      inv(r, c) = q.get_num();
    }
  return inv;
}

FinitelyGeneratedAbelianGroup::FinitelyGeneratedAbelianGroup(IntMatrix projection, IntMatrix lift,
                                                             std::size_t free_rank,
                                                             std::vector<Integer> torsion_orders)
    : projection_(std::move(projection)),
      lift_(std::move(lift)),
      free_rank_(free_rank),
      torsion_(std::move(torsion_orders)) {}

IntVector FinitelyGeneratedAbelianGroup::project(const IntVector& a) const {
  return reduce(projection_.apply(a));
}

IntVector FinitelyGeneratedAbelianGroup::section(const IntVector& element) const {
  return lift_.apply(reduce(element));
}

IntVector FinitelyGeneratedAbelianGroup::reduce(const IntVector& element) const {
  if (element.size() != num_coordinates())
    throw std::invalid_argument("class group element has wrong number of coordinates");
  IntVector out = element;
  for (std::size_t k = 0; k < torsion_.size(); ++k) {
    Integer& x = out[free_rank_ + k];
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), torsion_[k].get_mpz_t());
  }
  return out;
}

IntVector FinitelyGeneratedAbelianGroup::add(const IntVector& a, const IntVector& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("class group add: arity mismatch");
  IntVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return reduce(s);
}

IntVector FinitelyGeneratedAbelianGroup::negate(const IntVector& a) const {
  IntVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
  return reduce(s);
}

std::string FinitelyGeneratedAbelianGroup::describe() const {
  std::ostringstream os;
  bool any = false;
  if (free_rank_ > 0) {
    os << 'Z';
    if (free_rank_ > 1) os << '^' << free_rank_;
    any = true;
  }
  for (const auto& t : torsion_) {
    if (any) os << " + ";
    os << "Z/" << t.get_str();
    any = true;
  }
  if (!any) os << '0';
  return os.str();
}

namespace {

// Row-style Hermite normal form on rows [first, last) of u: echelon form,
// positive pivots, entries above each pivot reduced into [0, pivot).
void hermite_rows(IntMatrix& u, std::size_t first, std::size_t last) {
  const std::size_t cols = u.cols();
  std::size_t pivot_row = first;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (std::size_t c = 0; c < cols && pivot_row < last; ++c) {
    while (true) {
      std::size_t best = last;
      for (std::size_t r = pivot_row; r < last; ++r)
        if (u(r, c) != 0 && (best == last || abs(u(r, c)) < abs(u(best, c)))) best = r;
      if (best == last) break;
      u.swap_rows(pivot_row, best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < last; ++r) {
        if (u(r, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), u(r, c).get_mpz_t(), u(pivot_row, c).get_mpz_t());
        u.add_row_multiple(r, pivot_row, -q);
        if (u(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (u(pivot_row, c) == 0) continue;
    if (u(pivot_row, c) < 0) u.negate_row(pivot_row);
    pivots.emplace_back(pivot_row, c);
    ++pivot_row;
  }
  for (const auto& [pr, pc] : pivots)
    for (std::size_t r = first; r < pr; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), u(r, pc).get_mpz_t(), u(pr, pc).get_mpz_t());
      u.add_row_multiple(r, pr, -q);
    }
}

}  // namespace

FinitelyGeneratedAbelianGroup cokernel(const IntMatrix& m) {
  const std::size_t d = m.rows();
  SmithDecomposition snf = smith_normal_form(m);
  const std::size_t r = snf.invariant_factors.size();

  // Rows r..d-1 of U annihilate the image of m; any unimodular change among
  // them keeps U * m * V == D.
  IntMatrix u = snf.U;
  hermite_rows(u, r, d);
  IntMatrix u_inv = unimodular_inverse(u);

  std::vector<std::size_t> coordinates;
  std::vector<Integer> torsion;
  for (std::size_t i = r; i < d; ++i) coordinates.push_back(i);
  for (std::size_t i = 0; i < r; ++i)
    if (snf.invariant_factors[i] > 1) {
      coordinates.push_back(i);
      torsion.push_back(snf.invariant_factors[i]);
    }

  IntMatrix projection(coordinates.size(), d);
  IntMatrix lift(d, coordinates.size());
  for (std::size_t k = 0; k < coordinates.size(); ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      projection(k, j) = u(coordinates[k], j);
      lift(j, k) = u_inv(j, coordinates[k]);
    }
  }
  return FinitelyGeneratedAbelianGroup(std::move(projection), std::move(lift), d - r,
                                       std::move(torsion));
}

std::vector<IntVector> dual_lattice_basis(const FinitelyGeneratedAbelianGroup& g) {
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < g.free_rank(); ++k) out.push_back(g.projection_matrix().row(k));
  return out;
}

}  // namespace toric
