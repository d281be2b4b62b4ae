#include <doctest.h>

#include "helpers.hpp"
#include "homlie/errors.hpp"

using namespace homlie;
using namespace testutil;

TEST_SUITE("example base generator") {
  TEST_CASE("the reference tables at beta = Id") {
    const ZooG0 zoo = example_g0(Mat::identity(3));
    CHECK(zoo.g0.dim == 6);
    CHECK(zoo.g0.basis_names[0] == "a1");
    CHECK(zoo.g0.basis_names[5] == "b3");
    CHECK(zoo.g0.table[A(0)][A(1)] == unit(6, B(2)));
    CHECK(zoo.g0.table[A(1)][A(2)] == unit(6, B(0)));
    CHECK(zoo.g0.table[A(2)][A(0)] == unit(6, B(1)));
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(zoo.g0.table[i][B(j)].is_zero());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(zoo.b0.gram(A(i), B(j)) == (i == j ? 1 : 0));
        CHECK(zoo.b0.gram(A(i), A(j)) == 0);
        CHECK(zoo.b0.gram(B(i), B(j)) == 0);
      }
    // derivation tables
    const Mat& d1 = zoo.derivations[0];
    CHECK(d1.column(A(1)) == unit(6, A(2)) + unit(6, B(2)));  // D1(a2) = a3 + b3
    CHECK(d1.column(A(2)) == -unit(6, A(1)) - unit(6, B(1)));
    CHECK(d1.column(B(1)) == unit(6, B(2)));                  // D1(b2) = b3
    CHECK(d1.column(B(2)) == -unit(6, B(1)));
    CHECK(d1.column(A(0)).is_zero());
    CHECK(d1.column(B(0)).is_zero());
  }

  TEST_CASE("nilpotency class is independent of the scalar") {
    for (long c : {1, 2, -3}) {
      const ZooG0 zoo = example_g0(Rational(c) * Mat::identity(3));
      const auto series = lower_central_series(zoo.g0);
      CHECK(series.size() == 3);
      CHECK(is_nilpotent(zoo.g0));
      for (const Mat& d : zoo.derivations) {
        CHECK(leibniz_holds(zoo.g0, d));
        CHECK(b_skew_holds(zoo.b0, d));
        CHECK_FALSE(is_inner(zoo.g0, d));
        // non-innerness seen directly: the image leaves the bracket image span{b}
        bool leaves_b_block = false;
        for (std::size_t j = 0; j < 6; ++j)
          if (!d.column(j).head(3).is_zero()) leaves_b_block = true;
        CHECK(leaves_b_block);
      }
    }
  }

  TEST_CASE("incompatible betas are rejected") {
    CHECK_THROWS_AS(example_g0(Mat(3, 3)), PreconditionError);  // singular
    Mat diag(3, 3);
    diag(0, 0) = 1;
    diag(1, 1) = 2;
    diag(2, 2) = 3;
    CHECK_THROWS_AS(example_g0(diag), PreconditionError);  // breaks B0-skewness
    Mat off = Mat::identity(3);
    off(0, 1) = 1;
    CHECK_THROWS_AS(example_g0(off), PreconditionError);
    CHECK_THROWS_AS(example_g0(Mat::identity(2)), DimensionError);
  }
}

TEST_SUITE("example bundle generator") {
  TEST_CASE("beta = Id reproduces the reference metric") {
    const ExtensionBundle bundle = example_bundle(Mat::identity(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(bundle.b.gram(B(i), B(j)) == (i == j ? 1 : 0));
        CHECK(bundle.b.gram(A(i), V(j)) == (i == j ? 1 : 0));
        CHECK(bundle.b.gram(A(i), A(j)) == 0);
        CHECK(bundle.b.gram(V(i), V(j)) == 0);
        CHECK(bundle.b.gram(B(i), A(j)) == 0);
        CHECK(bundle.b.gram(B(i), V(j)) == 0);
      }
  }

  TEST_CASE("the extension is 3-step nilpotent with isotropic a and V") {
    const ExtensionBundle bundle = example_bundle(Mat::identity(3));
    CHECK(lower_central_series(bundle.g).size() == 4);
    CHECK(is_isotropic(bundle.b, bundle.v_subspace()));
    CHECK(is_isotropic(bundle.b,
                       Subspace::span(9, {unit(9, A(0)), unit(9, A(1)), unit(9, A(2))})));
  }

  TEST_CASE("scalar variants validate end to end") {
    for (long c : {2, -1, 5}) {
      const ExtensionBundle bundle = example_bundle(Rational(c) * Mat::identity(3));
      CHECK(validate_bundle(bundle).all_pass());
      CHECK(is_isotropic(bundle.b, bundle.v_subspace()));
    }
  }
}

TEST_SUITE("stock algebras") {
  TEST_CASE("every stock Lie algebra passes Jacobi and its form is an invariant metric") {
    const std::vector<AlgebraWithForm> with_forms{sl2(), osc4()};
    for (const auto& [alg, form] : with_forms) {
      CHECK(jacobi_defect(alg).empty());
      CHECK(check_invariant(alg, form).empty());
      CHECK(is_nondegenerate(form));
    }
    CHECK(jacobi_defect(heisenberg3()).empty());
    CHECK(jacobi_defect(abelian(5)).empty());
  }

  TEST_CASE("sl2 Killing values") {
    CHECK(sl2().form.gram(2, 2) == 8);
  }

  TEST_CASE("osc4 is solvable but not nilpotent") {
    CHECK(is_solvable(osc4().alg));
    CHECK_FALSE(is_nilpotent(osc4().alg));
  }

  TEST_CASE("the matrix algebra and the split two-liner are unital") {
    const StructureConstants m = mat2();
    // E11 + E22 acts as the unit
    const Vec u = Vec::unit(4, 0) + Vec::unit(4, 3);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(m.product(u, Vec::unit(4, j)) == Vec::unit(4, j));
      CHECK(m.product(Vec::unit(4, j), u) == Vec::unit(4, j));
    }
    const StructureConstants f2 = f_plus_f();
    const Vec one = Vec::unit(2, 0) + Vec::unit(2, 1);
    CHECK(f2.product(one, Vec::unit(2, 1)) == Vec::unit(2, 1));
  }

  TEST_CASE("trivial extension of sl2 transfers by the identity") {
    const auto [alg, kappa] = sl2();
    Mat bv(1, 1);
    bv(0, 0) = 1;
    const ExtensionBundle bundle = trivial_extension(alg, kappa, GramForm::from_gram(bv));
    const HKPair pair = compute_hk(bundle);
    for (std::size_t j = 0; j < 3; ++j) CHECK(pair.h.column(j) == unit(3, j));
    CHECK(pair.h.column(3).is_zero());
    CHECK(validate_bundle(bundle).all_pass());
  }

  TEST_CASE("seeded trivial extensions all validate") {
    for (unsigned long seed = 0; seed < 20; ++seed) {
      const ExtensionBundle bundle = seeded_trivial_extension(seed);
      CHECK(validate_bundle(bundle).all_pass());
      CHECK(is_nondegenerate(bundle.b));
    }
  }
}
