#include "homlie/killing.hpp"

#include "homlie/errors.hpp"

namespace homlie {

ConditionBResult check_condition_B(const HomLieStructure& hl, const StructureConstants& lie) {
  if (hl.dim() != lie.dim) throw DimensionError("structure/algebra dimension mismatch");
  ConditionBResult out;
  const std::size_t n = lie.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec twist = hl.alpha * hl.mu.table[i][j] - lie.table[i][j];
      Vec prod = hl.mu.product(hl.alpha.column(i), Vec::unit(n, j)) - lie.table[i][j];
      if (!twist.is_zero() || !prod.is_zero())
        out.defects.push_back({i, j, std::move(twist), std::move(prod)});
    }
  out.holds = out.defects.empty();
  return out;
}

GramForm twisted_killing(const HomLieStructure& hl) {
  const std::size_t n = hl.dim();
  std::vector<Mat> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad(hl.mu, Vec::unit(n, i)));
  Mat gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat left = ads[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Mat prod = left * ads[j] * hl.alpha;
      Rational tr(0);
      for (std::size_t p = 0; p < n; ++p) tr += prod(p, p);
      gram(i, j) = tr;
    }
  }
  return GramForm::from_gram(std::move(gram));
}

CheckReport killing_identities_report(const HomLieStructure& hl, const StructureConstants& lie) {
  CheckReport rep;
  const ConditionBResult cond_b = check_condition_B(hl, lie);
  rep.add_hypothesis("α(μ(x,y))=μ(α(x),y)=[x,y]", cond_b.holds,
                     cond_b.holds ? "" : "hypothesis unmet; identities not asserted");
  if (!cond_b.holds) return rep;

  const std::size_t n = lie.dim;
  const GramForm K = twisted_killing(hl);
  const GramForm kappa = killing_form(lie);

  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        const Rational left = K.eval(hl.alpha.column(i), Vec::unit(n, j));
        const Rational right = K.eval(Vec::unit(n, i), hl.alpha.column(j));
        const Rational target = kappa.gram(i, j);
        if (left != target || right != target) {
          ok = false;
          detail = "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
        }
      }
    rep.add("K(α(x),y)=K(x,α(y))=κ(x,y)", ok, detail);
  }
  {
    auto defects = check_invariant(hl.mu, K);
    std::string detail;
    if (!defects.empty()) {
      const auto& d = defects.front();
      detail = "(i=" + std::to_string(d.i) + ",j=" + std::to_string(d.j) +
               ",k=" + std::to_string(d.k) + ") residual=" + rat_str(d.residual);
    }
    rep.add("K(μ(x,y),z)=K(x,μ(y,z))", defects.empty(), detail);
  }
  {
    auto defects = check_invariant(lie, K);
    std::string detail;
    if (!defects.empty()) {
      const auto& d = defects.front();
      detail = "(i=" + std::to_string(d.i) + ",j=" + std::to_string(d.j) +
               ",k=" + std::to_string(d.k) + ") residual=" + rat_str(d.residual);
    }
    rep.add("K([x,y],z)=K(x,[y,z])", defects.empty(), detail);
  }
  rep.add("K(x,y)=K(y,x)", K.symmetric);
  return rep;
}

HomLieSeries homlie_lcs(const HomLieStructure& hl) {
  HomLieSeries out;
  out.series.push_back(Subspace::full(hl.dim()));
  for (;;) {
    Subspace next = product_span(hl.mu, out.series.front(), out.series.back());
    const bool stable = (next == out.series.back());
    out.series.push_back(std::move(next));
    if (stable || out.series.back().is_zero()) break;
  }
  out.nilpotent = out.series.back().is_zero();
  return out;
}

TwistedKillingReport classify(const HomLieStructure& hl, const StructureConstants& lie) {
  TwistedKillingReport rep;
  rep.condition_A = check_twisted_jacobi(hl).empty();
  const ConditionBResult cond_b = check_condition_B(hl, lie);
  rep.condition_B = cond_b.holds;
  rep.K = twisted_killing(hl);
  rep.K_is_zero = rep.K.gram.is_zero();
  rep.nondegenerate = det(rep.K.gram) != 0;
  rep.homlie_nilpotent = homlie_lcs(hl).nilpotent;

  const bool lie_ok = is_lie(lie);
  if (lie_ok) {
    rep.kappa = killing_form(lie);
    rep.kappa_nondegenerate = det(rep.kappa.gram) != 0;
    rep.lie_nilpotent = is_nilpotent(lie);
    rep.lie_solvable = is_solvable(lie);
  } else {
    rep.kappa = GramForm::from_gram(Mat(lie.dim, lie.dim));
  }

  {
    bool criterion = true;
    const std::size_t n = lie.dim;
    for (std::size_t i = 0; i < n && criterion; ++i)
      for (std::size_t j = 0; j < n && criterion; ++j)
        for (std::size_t k = 0; k < n && criterion; ++k)
          if (rep.K.eval(Vec::unit(n, i), lie.table[j][k]) != 0) criterion = false;
    rep.solvability_criterion_holds = criterion;
  }

  rep.identities_pass = rep.condition_B && killing_identities_report(hl, lie).all_pass();

  if (rep.condition_B && lie_ok) {
    if (rep.nondegenerate != rep.kappa_nondegenerate)
      throw MathInconsistencyError("non-degeneracy of K and kappa disagree under condition (B)");
    if (rep.K_is_zero != rep.lie_nilpotent)
      throw MathInconsistencyError("K = 0 and Lie nilpotency disagree under condition (B)");
    if (rep.solvability_criterion_holds && !rep.lie_solvable)
      throw MathInconsistencyError("K(x,[y,z]) = 0 everywhere but the Lie algebra is not solvable");
  }
  return rep;
}

bool check_gil_implication(const HomLieStructure& hl, const StructureConstants& lie) {
  const ConditionBResult cond_b = check_condition_B(hl, lie);
  if (!cond_b.holds) throw PreconditionError("check_gil_implication requires condition (B)");
  const bool antecedent = homlie_lcs(hl).nilpotent;
  if (!antecedent) return true;  // vacuously consistent
  const bool lie_nil = is_nilpotent(lie);
  const bool k_zero = twisted_killing(hl).gram.is_zero();
  if (!lie_nil || !k_zero)
    throw MathInconsistencyError(
        "nilpotent Hom-Lie structure with non-nilpotent Lie algebra or nonzero K");
  return true;
}

}  // namespace homlie
