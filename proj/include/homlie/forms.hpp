#ifndef HOMLIE_FORMS_HPP
#define HOMLIE_FORMS_HPP

#include <optional>

#include "homlie/algebra.hpp"

namespace homlie {

struct InvarianceDefect {
  std::size_t i, j, k;
  Rational residual;  // B(prod(e_i,e_j), e_k) - B(e_i, prod(e_j,e_k))
};

/// Invariance defects of a bilinear form against a product tensor; empty iff
/// B(xy, z) = B(x, yz) holds on the whole algebra.
std::vector<InvarianceDefect> check_invariant(const StructureConstants& alg, const GramForm& form);

bool is_nondegenerate(const GramForm& form);

/// x -> B(x, .) in dual coordinates of the fixed basis.
Vec flat(const GramForm& form, const Vec& x);

/// Inverse of flat; throws SingularFormError on degenerate forms.
Vec sharp(const GramForm& form, const Vec& functional);

/// Basis of Der(alg): solutions D of D(xy) = D(x)y + x D(y).
std::vector<Mat> derivation_space(const StructureConstants& alg);

/// Basis of Der(alg) intersected with the B-skew maps (D^T G + G D = 0).
std::vector<Mat> skew_derivation_space(const StructureConstants& alg, const GramForm& form);

/// Basis of the centroid {T : T prod(x,.) = prod(Tx, .)}.
std::vector<Mat> centroid(const StructureConstants& alg);

/// B-symmetric part of the centroid.
std::vector<Mat> symmetric_centroid(const StructureConstants& alg, const GramForm& form);

bool is_invertible_member(const Mat& t);

/// a with ad(a) = D, rref-canonical, when D is inner.
std::optional<Vec> is_inner(const StructureConstants& alg, const Mat& d);

/// Basis of the symmetric invariant bilinear forms of alg.
std::vector<GramForm> invariant_form_space(const StructureConstants& alg);

/// Bounded deterministic search for a non-degenerate invariant metric that
/// vanishes on sub x sub. Isotropy constraints are imposed linearly first;
/// integer coefficient vectors are then enumerated over the constrained basis
/// in shells of increasing sup-norm (lexicographic inside a shell) up to
/// search_bound. Absence is not a disproof; this is a semi-decision.
std::optional<GramForm> find_metric_isotropic(const StructureConstants& alg, const Subspace& sub,
                                              long search_bound);

/// {x : B(x, s) = 0 for all s in sub}. Requires non-degenerate form.
Subspace orthogonal_complement(const GramForm& form, const Subspace& sub);

/// Shared helper: is the subspace isotropic for the form?
bool is_isotropic(const GramForm& form, const Subspace& sub);

}  // namespace homlie

#endif
