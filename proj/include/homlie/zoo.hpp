#ifndef HOMLIE_ZOO_HPP
#define HOMLIE_ZOO_HPP

#include "homlie/homlie.hpp"

namespace homlie {

// The 6-dimensional 2-step nilpotent quadratic Lie algebra with basis
// a1,a2,a3,b1,b2,b3: [a_i, a_{s(i)}] = b_{s^2(i)} for the 3-cycle s, both
// blocks isotropic, B0(a_j, b_k) = beta_jk, together with the three
// distinguished non-inner skew derivations D1, D2, D3.
struct ZooG0 {
  StructureConstants g0;
  GramForm b0;
  std::vector<Mat> derivations;
};

/// Requires beta invertible; the fixed derivation tables are B0-skew only
/// for scalar beta, anything else is rejected with a precondition error.
ZooG0 example_g0(const Mat& beta);

/// The 9-dimensional 3-step nilpotent quadratic extension generated from
/// example_g0 via its cocycle. beta = Id reproduces the reference tables
/// exactly; other scalar beta re-derive the metric on g (validated).
ExtensionBundle example_bundle(const Mat& beta);

StructureConstants abelian(std::size_t n);
StructureConstants heisenberg3();  // no invariant metric exists; Lie-level fixture only

struct AlgebraWithForm {
  StructureConstants alg;
  GramForm form;
};

AlgebraWithForm sl2();   // basis (e, f, h), form = Killing
AlgebraWithForm osc4();  // basis (d, x, y, z), invariant metric B(d,z)=1, B(x,x)=B(y,y)=1

StructureConstants mat2();      // full 2x2 matrix algebra (unital, non-skew)
StructureConstants f_plus_f();  // F + F componentwise (unital, non-simple)

/// theta = 0 and B = scale*B0 on g0, orthogonal to bv on V.
ExtensionBundle trivial_extension(const StructureConstants& g0, const GramForm& b0,
                                  const GramForm& bv, const Rational& scale = Rational(1));

/// Deterministic family over {sl2, osc4, abelian_4} x {dim V = 1,2,3} with a
/// seeded non-degenerate B_V and a seeded scale for B|g0.
ExtensionBundle seeded_trivial_extension(unsigned long seed);

/// Seeded small-integer combinations of a basis of Der(alg) ∩ o_B(alg).
std::vector<Mat> random_skew_derivations(const StructureConstants& alg, const GramForm& form,
                                         std::size_t count, unsigned long seed);

}  // namespace homlie

#endif
