#ifndef HOMLIE_KILLING_HPP
#define HOMLIE_KILLING_HPP

#include "homlie/homlie.hpp"

namespace homlie {

struct ConditionBDefect {
  std::size_t i, j;
  Vec residual_twist;    // alpha(mu(x,y)) - [x,y]
  Vec residual_product;  // mu(alpha(x),y) - [x,y]
};

struct ConditionBResult {
  bool holds = false;
  std::vector<ConditionBDefect> defects;
};

/// alpha(mu(x,y)) = mu(alpha(x),y) = [x,y] on all basis pairs.
ConditionBResult check_condition_B(const HomLieStructure& hl, const StructureConstants& lie);

/// K(x,y) = Tr(ad_mu(x) ad_mu(y) alpha). Defined for any triple; the
/// symmetric flag of the result records what was actually found.
GramForm twisted_killing(const HomLieStructure& hl);

/// The three identity families linking K, kappa, mu and the bracket:
/// K(alpha(x),y) = K(x,alpha(y)) = kappa(x,y), K(mu(x,y),z) = K(x,mu(y,z)),
/// K([x,y],z) = K(x,[y,z]). Marks the hypothesis unmet instead of asserting
/// when condition (B) fails.
CheckReport killing_identities_report(const HomLieStructure& hl, const StructureConstants& lie);

struct HomLieSeries {
  std::vector<Subspace> series;  // g, mu(g,g), mu(g, .), ... until stabilization
  bool nilpotent = false;
};

/// The descending mu-series g^2 = mu(g,g), g^{n+1} = mu(g, g^n).
HomLieSeries homlie_lcs(const HomLieStructure& hl);

struct TwistedKillingReport {
  GramForm K;
  GramForm kappa;
  bool condition_A = false;
  bool condition_B = false;
  bool identities_pass = false;
  bool nondegenerate = false;  // of K
  bool kappa_nondegenerate = false;
  bool solvability_criterion_holds = false;  // K(x,[y,z]) = 0 on all triples
  bool K_is_zero = false;
  bool homlie_nilpotent = false;
  bool lie_nilpotent = false;
  bool lie_solvable = false;
};

/// Populated report; under condition (B) the classification equivalences
/// (non-degeneracy transfer, K = 0 iff nilpotent, solvability criterion)
/// are enforced and a violation throws MathInconsistencyError.
TwistedKillingReport classify(const HomLieStructure& hl, const StructureConstants& lie);

/// Hom-Lie nilpotency forces Lie nilpotency and K = 0 (under condition (B)).
/// Returns true when the implication is witnessed on this input; throws
/// MathInconsistencyError if the implication itself is violated.
bool check_gil_implication(const HomLieStructure& hl, const StructureConstants& lie);

}  // namespace homlie

#endif
