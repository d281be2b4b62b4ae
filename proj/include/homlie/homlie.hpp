#ifndef HOMLIE_HOMLIE_HPP
#define HOMLIE_HOMLIE_HPP

#include "homlie/cocycle.hpp"

namespace homlie {

// A skew product tensor mu together with a twist endomorphism alpha on the
// same space. Construction validates the twisted Jacobi identity unless the
// value is explicitly marked as a candidate (diagnostic workflows need to
// hold twists that fail it).
struct HomLieStructure {
  StructureConstants mu;  // skew
  Mat alpha;
  bool candidate = false;

  std::size_t dim() const { return mu.dim; }
};

/// Twisted Jacobi residuals mu(alpha(x), mu(y,z)) + cyclic on triples i<j<k.
std::vector<TripleDefect> check_twisted_jacobi(const StructureConstants& mu, const Mat& alpha);
std::vector<TripleDefect> check_twisted_jacobi(const HomLieStructure& hl);

/// Validating factory; pass candidate = true to skip the twisted Jacobi gate.
HomLieStructure make_homlie(StructureConstants mu, Mat alpha, bool candidate = false);

// The metric-transfer maps of a bundle. h: g -> g0 and k: g0 -> g are the
// compositions of the musical isomorphisms of B and B0 with the canonical
// projection/inclusion; T = pi k, R = pi_V k, and k(x) = T(x) + sum_i
// B0(a_i, x) v_i defines the distinguished elements a_i of g0.
struct HKPair {
  Mat h;                    // dim_g0 x dim_g
  Mat k;                    // dim_g x dim_g0
  Mat t;                    // dim_g0 x dim_g0
  Mat r;                    // dim_v x dim_g0 (row l = functional B0(a_l, .))
  std::vector<Vec> a_elems;  // in g0 coordinates
};

HKPair compute_hk(const ExtensionBundle& bundle);

// Basis {a_i + w_i} of the B-orthogonal complement of g0, dual to the v_i.
struct OrthoBasisWitness {
  std::vector<Vec> elems;  // in g coordinates
};

/// Full verification of the structural identities satisfied by h, k, T, rho,
/// the a_i, and the orthogonal-basis witness for a valid bundle. Every failed
/// identity becomes a report entry carrying indices and residual.
CheckReport hk_diagnostics(const ExtensionBundle& bundle, const HKPair& pair);

/// rho(x)(y) = h([x, y]) as a matrix on g0, for each basis vector x of g.
/// Verifies Im(rho) ⊆ Der(g0) ∩ o_B0(g0) and the composition identity
/// rho([x,y]) = rho(x) T rho(y) - rho(y) T rho(x).
std::vector<Mat> rho(const ExtensionBundle& bundle, const HKPair& pair);

/// mu(x, y) = h([x, y]) on g; verifies k(mu(x,y)) = [x,y], mu(g,g) ⊆ g0 and
/// mu(V, g) = 0.
StructureConstants build_mu(const ExtensionBundle& bundle, const HKPair& pair);

/// alpha(x + v) = T(x) + v; the twisted Jacobi identity is validated.
HomLieStructure build_alpha(const ExtensionBundle& bundle, const HKPair& pair);

/// alpha'(x + v) = k(x); validates twisted Jacobi and the relations
/// alpha'([x,y]) = [alpha'(x),y], B(alpha'x,y) = B(x,alpha'y),
/// alpha'(mu(x,y)) = [x,y], mu(alpha'(x),y) = [x,y]_0 on g0.
HomLieStructure build_alpha_prime(const ExtensionBundle& bundle, const HKPair& pair);

/// (g0, mu_0, alpha_0 = T); verifies B0-symmetry of alpha_0, mu_0-invariance
/// of B0 and alpha_0(mu_0(x,y)) = mu_0(alpha_0(x),y) = [x,y]_0.
HomLieStructure restrict_homlie(const ExtensionBundle& bundle, const HKPair& pair);

/// Metric-free construction from maps h, k satisfying k([x,y]_0) = [k(x),y]
/// and k(h([x,y])) = [x,y]; sigma (dim_v x dim_g, V-coordinates) completes
/// alpha = alpha_0 pi + sigma. Throws PreconditionError naming the first pair
/// violating (i) or (ii). When sigma vanishes on g0, verifies that g0 is a
/// Hom-Lie ideal and direct summand.
HomLieStructure build_from_hk(const StructureConstants& g0, const Cocycle& theta, const Mat& h,
                              const Mat& k, const Mat& sigma);

struct IdealCheck {
  bool is_subalgebra = false;  // mu(sub,sub) ⊆ sub and alpha(sub) ⊆ sub
  bool is_ideal = false;       // mu(sub,g) ⊆ sub and alpha(sub) ⊆ sub
};

IdealCheck check_homlie_ideal(const HomLieStructure& hl, const Subspace& sub);

/// The structural consequences of a non-coboundary cocycle: C(g)=C_mu(g)=V,
/// g0 = mu(g,g) = mu(g0,g0), C(g0)=Ker(T), [g0,g0]_0=Im(T), joint radical 0.
/// When every D_i is inner the report records the unmet hypothesis instead.
CheckReport structure_diagnostics(const ExtensionBundle& bundle, const HKPair& pair,
                                  const HomLieStructure& hl);

struct ProjectionReport {
  Mat e;  // alpha_0 (h|g0), projection onto Im(alpha_0) along span{a_i}
  Mat f;  // (h|g0) alpha_0, projection onto span{a_i}-perp along Ker(alpha_0)
  Subspace im_alpha0, ker_alpha0, a_span, a_perp;
  CheckReport checks;
};

/// The projection pair attached to an isotropic V; precondition B|VxV = 0.
ProjectionReport lemma42_projections(const ExtensionBundle& bundle, const HKPair& pair);

}  // namespace homlie

#endif
