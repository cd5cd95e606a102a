#pragma once

// Buchberger's algorithm for ideals and submodules of free modules over a
// polynomial ring, and for left submodules of free modules over the Weyl
// algebra, plus the usual ideal-theoretic derived operations.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric_dmod/polynomial.hpp"
#include "toric_dmod/weyl.hpp"

namespace toric {

// Monomial order: optional weight rows compared first, then a lex or
// degree-reverse-lex tiebreak. Weights must be non-negative so that the
// order is a well-order.
struct TermOrder {
  enum class Base { Lex, DegRevLex };

  Base base = Base::DegRevLex;
  std::vector<std::vector<int>> weights;

  static TermOrder lex() { return {Base::Lex, {}}; }
  static TermOrder degrevlex() { return {Base::DegRevLex, {}}; }
  static TermOrder weighted(std::vector<int> w, Base tiebreak = Base::DegRevLex) {
    return {tiebreak, {std::move(w)}};
  }
  // Block order in which any monomial involving a flagged variable is larger
  // than every monomial free of them.
  static TermOrder elimination(const std::vector<bool>& eliminate);

  int compare(const Exponents& a, const Exponents& b) const;
};

// Order on terms c * m * e_i of a free module. Weights are compared first,
// then (position-over-term) the component priority, then the base order.
struct ModuleOrder {
  TermOrder term;
  // priority[i] of component i; larger is bigger. Empty means component 0 is
  // the largest, then 1, and so on.
  std::vector<int> priority;
  bool position_over_term = true;

  int component_rank(std::size_t i) const {
    return priority.empty() ? -static_cast<int>(i) : priority.at(i);
  }
  int compare(std::size_t ca, const Exponents& a, std::size_t cb, const Exponents& b) const;
};

// ---------------------------------------------------------------- ideals

// Reduced Groebner basis, monic, sorted ascending by leading monomial.
std::vector<CommPoly> groebner_basis(const std::vector<CommPoly>& gens, std::size_t nvars,
                                     const TermOrder& order = TermOrder::degrevlex());

// Remainder of full reduction; gb must be a Groebner basis for `order`.
CommPoly normal_form(const CommPoly& f, const std::vector<CommPoly>& gb,
                     const TermOrder& order = TermOrder::degrevlex());

Exponents leading_monomial(const CommPoly& f, const TermOrder& order = TermOrder::degrevlex());

bool ideal_contains(const std::vector<CommPoly>& gens, const CommPoly& f, std::size_t nvars);
bool ideals_equal(const std::vector<CommPoly>& a, const std::vector<CommPoly>& b, std::size_t nvars);
bool is_unit_ideal(const std::vector<CommPoly>& gens, std::size_t nvars);

// Generators (reduced GB) of I intersected with the subring in the
// unflagged variables, re-indexed to that subring.
std::vector<CommPoly> eliminate(const std::vector<CommPoly>& gens, std::size_t nvars,
                                const std::vector<bool>& eliminate);

// (I : f^infinity), computed as (I, 1 - t f) intersected with k[x].
std::vector<CommPoly> saturation(const std::vector<CommPoly>& ideal, const CommPoly& f,
                                 std::size_t nvars);
// (I : J^infinity) as the intersection of (I : g^infinity) over generators g.
std::vector<CommPoly> saturation(const std::vector<CommPoly>& ideal,
                                 const std::vector<CommPoly>& by, std::size_t nvars);
std::vector<CommPoly> intersection(const std::vector<CommPoly>& a, const std::vector<CommPoly>& b,
                                   std::size_t nvars);

// f in the radical of I, via 1 in (I, 1 - t f).
bool radical_membership(const CommPoly& f, const std::vector<CommPoly>& ideal, std::size_t nvars);

// Dimension of V(I): largest set of variables independent modulo the
// leading-term ideal. nullopt when I is the unit ideal.
std::optional<std::size_t> krull_dimension(const std::vector<CommPoly>& gens, std::size_t nvars,
                                           const TermOrder& order = TermOrder::degrevlex());

// --------------------------------------------------------------- modules

using CommVector = std::vector<CommPoly>;

std::vector<CommVector> module_groebner_basis(const std::vector<CommVector>& gens,
                                              std::size_t rank, std::size_t nvars,
                                              const ModuleOrder& order);
CommVector module_normal_form(const CommVector& f, const std::vector<CommVector>& gb,
                              const ModuleOrder& order);

// (M : e_i) = { f : f e_i in M }.
std::vector<CommPoly> module_colon(const std::vector<CommVector>& gens, std::size_t rank,
                                   std::size_t nvars, std::size_t i);
// Ann(S^r / M) as the intersection of the colons (M : e_i).
std::vector<CommPoly> annihilator(const std::vector<CommVector>& gens, std::size_t rank,
                                  std::size_t nvars);

// ------------------------------------------------------------ Weyl side

using WeylVector = std::vector<WeylElement>;

// Weight 0 on x and 1 on d (the order filtration), then position, then
// degree-reverse-lex on (x, d). A well-order, so no homogenization is needed.
ModuleOrder filtered_weyl_order(std::size_t d);

// Left submodule of A^rank generated by `gens`, as a reduced Groebner basis.
class WeylGroebnerBasis {
 public:
  WeylGroebnerBasis(const std::vector<WeylVector>& gens, std::size_t rank, std::size_t d,
                    ModuleOrder order);
  WeylGroebnerBasis(const std::vector<WeylVector>& gens, std::size_t rank, std::size_t d)
      : WeylGroebnerBasis(gens, rank, d, filtered_weyl_order(d)) {}

  std::size_t rank() const { return rank_; }
  std::size_t num_vars() const { return d_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<WeylVector>& elements() const { return elements_; }

  WeylVector normal_form(const WeylVector& f) const;
  bool contains(const WeylVector& f) const;

 private:
  std::size_t rank_;
  std::size_t d_;
  ModuleOrder order_;
  std::vector<WeylVector> elements_;
};

// Principal symbols: the top-order part of each element with d_i replaced
// by xi_i, as vectors over k[x_1..x_d, xi_1..xi_d].
std::vector<CommVector> initial_forms(const WeylGroebnerBasis& gb);
// Principal symbol of a single vector (top order across all components).
CommVector principal_symbol(const WeylVector& f);

}  // namespace toric
