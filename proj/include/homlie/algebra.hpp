#ifndef HOMLIE_ALGEBRA_HPP
#define HOMLIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "homlie/linalg.hpp"

namespace homlie {

// A finite-dimensional algebra presented by structure constants:
// product(e_i, e_j) = sum_k table[i][j][k] e_k. With skew == true the table
// is required to satisfy table[i][j] == -table[j][i] (Lie brackets, twisted
// products mu); connection products and the unital algebra G use skew == false.
struct StructureConstants {
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::vector<std::vector<Vec>> table;  // table[i][j] in coordinates of the basis
  bool skew = true;

  static StructureConstants zero(std::size_t dim, bool skew = true);

  const Vec& product(std::size_t i, std::size_t j) const { return table[i][j]; }
  void set_product(std::size_t i, std::size_t j, const Vec& value);

  /// Bilinear expansion through the tensor.
  Vec product(const Vec& x, const Vec& y) const;

  /// Checks tensor shape and, when skew, the antisymmetry of the table.
  void validate_shape() const;
  bool table_is_skew() const;
};

/// Default labels e1..en.
std::vector<std::string> default_basis_names(std::size_t dim, const std::string& prefix = "e");

Vec bracket(const StructureConstants& alg, const Vec& x, const Vec& y);

struct TripleDefect {
  std::size_t i, j, k;
  Vec residual;
};

/// Cyclic Jacobi sums over basis triples i<j<k; empty iff the algebra is Lie.
/// Requires skew.
std::vector<TripleDefect> jacobi_defect(const StructureConstants& alg);

bool is_lie(const StructureConstants& alg);

/// Adjoint operator: column j = product(x, e_j).
Mat ad(const StructureConstants& alg, const Vec& x);

struct GramForm {
  std::size_t dim = 0;
  Mat gram;
  bool symmetric = true;

  static GramForm from_gram(Mat gram);
  Rational eval(const Vec& x, const Vec& y) const;
};

/// Cartan-Killing form kappa(x, y) = Tr(ad(x) ad(y)). Requires a Lie algebra.
GramForm killing_form(const StructureConstants& alg);

/// The center {x : product(x, .) = 0}.
Subspace center(const StructureConstants& alg);

/// Span of products of two subspaces.
Subspace product_span(const StructureConstants& alg, const Subspace& a, const Subspace& b);

/// g, [g,g], [g,[g,g]], ... until stabilization (last entry repeats or is 0).
std::vector<Subspace> lower_central_series(const StructureConstants& alg);

/// g, [g,g], [[g,g],[g,g]], ... until stabilization.
std::vector<Subspace> derived_series(const StructureConstants& alg);

bool is_nilpotent(const StructureConstants& alg);
bool is_solvable(const StructureConstants& alg);

}  // namespace homlie

#endif
