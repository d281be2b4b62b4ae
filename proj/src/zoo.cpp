#include "homlie/zoo.hpp"

#include <random>

#include "homlie/errors.hpp"
#include "homlie/forms.hpp"

namespace homlie {

namespace {

constexpr std::size_t kSigma[3] = {1, 2, 0};   // the 3-cycle
constexpr std::size_t kSigma2[3] = {2, 0, 1};  // its square

std::vector<std::string> ab_names() { return {"a1", "a2", "a3", "b1", "b2", "b3"}; }

}  // namespace

ZooG0 example_g0(const Mat& beta) {
  if (beta.rows() != 3 || beta.cols() != 3) throw DimensionError("beta must be 3x3");
  if (det(beta) == 0) throw PreconditionError("beta must be invertible");

  ZooG0 out;
  out.g0 = StructureConstants::zero(6);
  out.g0.basis_names = ab_names();
  for (std::size_t i = 0; i < 3; ++i)
    out.g0.set_product(i, kSigma[i], Vec::unit(6, 3 + kSigma2[i]));

  Mat gram(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      gram(i, 3 + j) = beta(i, j);
      gram(3 + j, i) = beta(i, j);
    }
  out.b0 = GramForm::from_gram(std::move(gram));

  for (std::size_t i = 0; i < 3; ++i) out.derivations.emplace_back(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec ab = Vec::unit(6, kSigma2[i]) + Vec::unit(6, 3 + kSigma2[i]);
    const Vec b = Vec::unit(6, 3 + kSigma2[i]);
    out.derivations[i].set_column(kSigma[i], ab);
    out.derivations[kSigma[i]].set_column(i, -ab);
    out.derivations[i].set_column(3 + kSigma[i], b);
    out.derivations[kSigma[i]].set_column(3 + i, -b);
  }

  for (std::size_t l = 0; l < 3; ++l) {
    const Mat& d = out.derivations[l];
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        Vec leib = d * out.g0.table[i][j];
        leib -= out.g0.product(d.column(i), Vec::unit(6, j));
        leib -= out.g0.product(Vec::unit(6, i), d.column(j));
        if (!leib.is_zero()) throw MathInconsistencyError("example derivation fails Leibniz");
        if (out.b0.eval(d.column(i), Vec::unit(6, j)) +
                out.b0.eval(Vec::unit(6, i), d.column(j)) !=
            0)
          throw PreconditionError(
              "derivation tables are not B0-skew for this beta (only scalar multiples of the "
              "identity are compatible)");
      }
    if (is_inner(out.g0, d)) throw MathInconsistencyError("example derivation is inner");
  }
  return out;
}

ExtensionBundle example_bundle(const Mat& beta) {
  ZooG0 zoo = example_g0(beta);
  Cocycle theta = cocycle_from_derivations(zoo.g0, zoo.b0, zoo.derivations);
  // For scalar beta = c Id the invariant completion is B(a_i, v_j) = d_ij,
  // B(b_i, b_j) = c d_ij with both a and V isotropic; beta = Id is the
  // reference metric.
  const Rational c = beta(0, 0);
  Mat gram(9, 9);
  for (std::size_t i = 0; i < 3; ++i) {
    gram(i, 6 + i) = 1;
    gram(6 + i, i) = 1;
    gram(3 + i, 3 + i) = c;
  }
  return make_bundle(std::move(zoo.g0), std::move(zoo.b0), std::move(theta),
                     GramForm::from_gram(std::move(gram)));
}

StructureConstants abelian(std::size_t n) { return StructureConstants::zero(n); }

StructureConstants heisenberg3() {
  StructureConstants alg = StructureConstants::zero(3);
  alg.set_product(0, 1, Vec::unit(3, 2));
  return alg;
}

AlgebraWithForm sl2() {
  StructureConstants alg = StructureConstants::zero(3);
  alg.basis_names = {"e", "f", "h"};
  alg.set_product(0, 1, Vec::unit(3, 2));             // [e,f] = h
  alg.set_product(2, 0, Rational(2) * Vec::unit(3, 0));   // [h,e] = 2e
  alg.set_product(2, 1, Rational(-2) * Vec::unit(3, 1));  // [h,f] = -2f
  return {alg, killing_form(alg)};
}

AlgebraWithForm osc4() {
  StructureConstants alg = StructureConstants::zero(4);
  alg.basis_names = {"d", "x", "y", "z"};
  alg.set_product(0, 1, Vec::unit(4, 2));   // [d,x] = y
  alg.set_product(0, 2, -Vec::unit(4, 1));  // [d,y] = -x
  alg.set_product(1, 2, Vec::unit(4, 3));   // [x,y] = z
  Mat gram(4, 4);
  gram(0, 3) = 1;
  gram(3, 0) = 1;
  gram(1, 1) = 1;
  gram(2, 2) = 1;
  return {alg, GramForm::from_gram(std::move(gram))};
}

StructureConstants mat2() {
  StructureConstants alg = StructureConstants::zero(4, /*skew=*/false);
  alg.basis_names = {"E11", "E12", "E21", "E22"};
  auto idx = [](std::size_t i, std::size_t j) { return 2 * i + j; };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          if (j == k) alg.table[idx(i, j)][idx(k, l)] = Vec::unit(4, idx(i, l));
  return alg;
}

StructureConstants f_plus_f() {
  StructureConstants alg = StructureConstants::zero(2, /*skew=*/false);
  alg.table[0][0] = Vec::unit(2, 0);
  alg.table[1][1] = Vec::unit(2, 1);
  return alg;
}

ExtensionBundle trivial_extension(const StructureConstants& g0, const GramForm& b0,
                                  const GramForm& bv, const Rational& scale) {
  const std::size_t n = g0.dim, r = bv.dim;
  Mat gram(n + r, n + r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = scale * b0.gram(i, j);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram(n + i, n + j) = bv.gram(i, j);
  return make_bundle(g0, b0, Cocycle::zero(n, r), GramForm::from_gram(std::move(gram)));
}

namespace {

long draw_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

}  // namespace

ExtensionBundle seeded_trivial_extension(unsigned long seed) {
  std::mt19937_64 rng(seed);
  AlgebraWithForm base;
  switch (seed % 3) {
    case 0:
      base = sl2();
      break;
    case 1:
      base = osc4();
      break;
    default: {
      base.alg = abelian(4);
      base.form = GramForm::from_gram(Mat::identity(4));
      break;
    }
  }
  const std::size_t r = 1 + (seed / 3) % 3;
  const Rational scales[4] = {Rational(1), Rational(2), Rational(3), Rational(1, 2)};
  const Rational scale = scales[(seed / 9) % 4];

  Mat bv(r, r);
  for (;;) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        bv(i, j) = Rational(draw_int(rng, -3, 3));
        bv(j, i) = bv(i, j);
      }
    if (det(bv) != 0) break;
  }
  return trivial_extension(base.alg, base.form, GramForm::from_gram(bv), scale);
}

std::vector<Mat> random_skew_derivations(const StructureConstants& alg, const GramForm& form,
                                         std::size_t count, unsigned long seed) {
  const std::vector<Mat> basis = skew_derivation_space(alg, form);
  std::mt19937_64 rng(seed);
  std::vector<Mat> out;
  for (std::size_t c = 0; c < count; ++c) {
    Mat d(alg.dim, alg.dim);
    for (const Mat& b : basis) d += Rational(draw_int(rng, -3, 3)) * b;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace homlie
