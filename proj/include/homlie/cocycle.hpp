#ifndef HOMLIE_COCYCLE_HPP
#define HOMLIE_COCYCLE_HPP

#include <optional>

#include "homlie/forms.hpp"
#include "homlie/report.hpp"

namespace homlie {

// V-valued skew bilinear map on g0: theta(e_i, e_j) = sum_l values[i][j][l] v_l.
struct Cocycle {
  std::size_t dim_g0 = 0;
  std::size_t dim_v = 0;
  std::vector<std::vector<Vec>> values;  // values[i][j] lives in V-coordinates

  static Cocycle zero(std::size_t dim_g0, std::size_t dim_v);
  const Vec& operator()(std::size_t i, std::size_t j) const { return values[i][j]; }
  Vec eval(const Vec& x, const Vec& y) const;
  void set_value(std::size_t i, std::size_t j, const Vec& value);
  bool is_zero() const;
  void validate_shape() const;  // shape + antisymmetry
};

/// Cyclic-sum defects theta(x,[y,z]) + theta(y,[z,x]) + theta(z,[x,y]) on
/// basis triples i<j<k; empty iff theta is a 2-cocycle. Requires g0 Lie.
std::vector<TripleDefect> check_cocycle(const StructureConstants& g0, const Cocycle& theta);

/// theta(x, y) = sum_i B0(D_i(x), y) v_i. Validates that every D_i is a
/// B0-skew derivation and that the result passes check_cocycle.
Cocycle cocycle_from_derivations(const StructureConstants& g0, const GramForm& b0,
                                 const std::vector<Mat>& ds);

/// Inverse direction: D_i(x) = B0-sharp of y -> theta_i(x, y).
std::vector<Mat> derivations_from_cocycle(const StructureConstants& g0, const GramForm& b0,
                                          const Cocycle& theta);

/// tau with theta(x,y) = tau([x,y]) when theta is a coboundary, extended by
/// zero on the coordinate complement of the rref-canonical bracket image.
/// Returned as a dim_v x dim_g0 matrix.
std::optional<Mat> is_coboundary(const StructureConstants& g0, const Cocycle& theta);

/// Central extension g = g0 + V with [x+u, y+v] = [x,y]_0 + theta(x,y).
/// V occupies the trailing coordinates. Rejects non-cocycles.
StructureConstants central_extend(const StructureConstants& g0, const Cocycle& theta);

struct CocycleRadicals {
  std::vector<Subspace> per_component;  // Rad(theta_l)
  Subspace joint;                       // intersection of all radicals
};

CocycleRadicals cocycle_radicals(const StructureConstants& g0, const Cocycle& theta);

// The standing datum: a quadratic Lie algebra (g0, B0), a cocycle theta, the
// central extension g with its own invariant metric B, and the positional
// split g = g0 + V with V the trailing block.
struct ExtensionBundle {
  StructureConstants g0;
  GramForm b0;
  Cocycle theta;
  StructureConstants g;
  GramForm b;
  std::size_t v_offset = 0;  // == g0.dim

  std::size_t dim_v() const { return theta.dim_v; }
  std::size_t dim_g() const { return g.dim; }

  /// The trailing V block as a subspace of g.
  Subspace v_subspace() const;
  /// g0 embedded as the leading block of g.
  Subspace g0_subspace() const;
  /// Embed a g0 vector into g (trailing zeros).
  Vec embed_g0(const Vec& x) const;
  /// Embed a V vector into g (leading zeros).
  Vec embed_v(const Vec& u) const;
  /// pi and pi_V as coordinate projections.
  Vec project_g0(const Vec& x) const;
  Vec project_v(const Vec& x) const;
};

// Unvalidated bundle data as read from files; g is optional (derived from
// g0 and theta when absent).
struct BundleInput {
  StructureConstants g0;
  GramForm b0;
  Cocycle theta;
  GramForm b;
  std::optional<StructureConstants> g;
};

/// Ordered validation: g0 Jacobi, B0, cocycle identity, g Jacobi, B,
/// agreement with the central extension, centrality of V. Validation stops
/// at the first failure; the bundle is populated as far as possible (g stays
/// empty when theta fails and no g was supplied).
std::pair<ExtensionBundle, CheckReport> assemble_bundle(BundleInput in);

/// Assemble and fully validate; throws ValidationError with the anchor of
/// the first falsified identity.
ExtensionBundle make_bundle(StructureConstants g0, GramForm b0, Cocycle theta, GramForm b,
                            const std::optional<StructureConstants>& g_supplied = std::nullopt);

/// Re-validate an assembled bundle.
CheckReport validate_bundle(const ExtensionBundle& bundle);

}  // namespace homlie

#endif
