#ifndef HOMLIE_CONNECTION_HPP
#define HOMLIE_CONNECTION_HPP

#include "homlie/killing.hpp"

namespace homlie {

// The connection product has no symmetry constraint; it reuses the structure
// constant container with skew == false.
using BilinearProduct = StructureConstants;

/// B is mu-invariant iff every derivation of the cocycle vanishes; the
/// equivalence is verified in both directions (a violation throws) and the
/// invariance verdict is returned.
bool check_mu_invariance_of_B(const ExtensionBundle& bundle, const HomLieStructure& hl);

/// The product defined by 2B(xy,z) = B(mu(x,y),z) + B(mu(z,x),y) + B(mu(z,y),x),
/// solved through the sharp of B for every basis pair, then re-verified by
/// substitution together with mu(x,y) = xy - yx and B(xy,z) = -B(y,xz).
BilinearProduct connection_product(const StructureConstants& g, const GramForm& b,
                                   const HomLieStructure& hl);

/// The full property sheet of the connection product: commutator identity,
/// B-skewness in the second slot, the h-expansion of 2xy, vanishing squares
/// on Ker(h) and Im(alpha'), (a + alpha'(x))^2 = [a,x], fourth powers, and
/// the skewness criterion xy = -yx iff theta = 0.
CheckReport thm44_report(const ExtensionBundle& bundle, const HKPair& pair,
                         const BilinearProduct& conn, const Mat& alpha_prime);

// The unital algebra on F x g with
// nu((s,x),(t,y)) = (st + B(x,y), sy + tx + xy); index 0 is the unit.
struct UnitalAlgebraG {
  StructureConstants base;
  std::size_t unit_index = 0;
};

UnitalAlgebraG build_G(const StructureConstants& g, const GramForm& b, const BilinearProduct& conn);

/// Smallest subspace containing sub and closed under left and right
/// multiplication by the whole algebra (span saturation to a fixed point).
Subspace ideal_closure(const StructureConstants& alg, const Subspace& sub);

struct ProbeFailure {
  Vec element;
  std::size_t closure_dim;
};

struct ProbeResult {
  unsigned long seed = 1;
  long bound = 9;
  std::size_t probes = 0;
  std::vector<ProbeFailure> failures;  // elements whose closure is proper
};

struct SimplicityResult {
  std::size_t mult_algebra_dim = 0;
  bool absolutely_simple = false;  // multiplication algebra is all of End(A)
  ProbeResult probe;
};

/// Dimension of the span-closure of {Id, left multiplications, right
/// multiplications} under composition. Equality with n^2 certifies absolute
/// simplicity (valid over every field extension); otherwise the verdict is
/// undetermined and the seeded random probes provide evidence either way.
/// Requires a unital algebra (the unit is solved for and verified).
SimplicityResult burnside_simplicity(const StructureConstants& alg, std::size_t probes = 200,
                                     unsigned long seed = 1, long bound = 9);

struct QuotientResult {
  HomLieStructure quotient;  // on g, from the commutator of nu and the induced twist
  bool iso_ok = false;
};

/// The quotient of G by the span of the unit, identified with g; checks that
/// the nu-commutator has no scalar component, that the induced bracket is mu
/// and that (s,x) -> (s, alpha'(x)) induces alpha'.
QuotientResult quotient_homlie(const UnitalAlgebraG& G, const HomLieStructure& target);

struct G0Connection {
  BilinearProduct product;  // x.y = pi(xy) on g0
  CheckReport checks;
};

/// The induced product on g0 and its property sheet (commutator recovers
/// mu_0, the h-expansion, vanishing squares, fourth powers).
G0Connection g0_connection(const ExtensionBundle& bundle, const BilinearProduct& conn);

}  // namespace homlie

#endif
