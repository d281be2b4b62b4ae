#include <doctest.h>

#include "helpers.hpp"
#include "homlie/errors.hpp"

using namespace homlie;
using namespace testutil;

namespace {

ExtensionBundle ref_bundle() { return example_bundle(Mat::identity(3)); }

ExtensionBundle trivial_sl2(const Rational& scale = Rational(1)) {
  const auto [alg, kappa] = sl2();
  Mat bv(1, 1);
  bv(0, 0) = 1;
  return trivial_extension(alg, kappa, GramForm::from_gram(bv), scale);
}

}  // namespace

TEST_SUITE("metric transfer maps") {
  TEST_CASE("the example tables, entry for entry") {
    const ExtensionBundle bundle = ref_bundle();
    const HKPair pair = compute_hk(bundle);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(pair.h.column(A(j)).is_zero());          // h(a_j) = 0
      CHECK(pair.h.column(B(j)) == unit(6, A(j)));   // h(b_j) = a_j
      CHECK(pair.h.column(V(j)) == unit(6, B(j)));   // h(v_j) = b_j
      CHECK(pair.k.column(A(j)) == unit(9, B(j)));   // k(a_j) = b_j
      CHECK(pair.k.column(B(j)) == unit(9, V(j)));   // k(b_j) = v_j
      CHECK(pair.t.column(A(j)) == unit(6, B(j)));   // T(a_j) = b_j
      CHECK(pair.t.column(B(j)).is_zero());          // T(b_j) = 0
      CHECK(pair.a_elems[j] == unit(6, A(j)));       // a_i are the a-basis vectors
    }
    CHECK((pair.h * pair.k).is_identity());
  }

  TEST_CASE("trivial extensions transfer by identity maps") {
    const ExtensionBundle bundle = trivial_sl2();
    const HKPair pair = compute_hk(bundle);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(pair.h.column(j) == unit(3, j));
      CHECK(pair.k.column(j) == unit(4, j));
    }
    CHECK(pair.h.column(3).is_zero());  // h kills V
    CHECK(pair.t.is_identity());
    for (const Vec& a : pair.a_elems) CHECK(a.is_zero());
  }

  TEST_CASE("a scaled metric on the base rescales h and k") {
    const ExtensionBundle bundle = trivial_sl2(Rational(2));
    const HKPair pair = compute_hk(bundle);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(pair.h.column(j) == Rational(2) * unit(3, j));   // h(x) = 2x
      CHECK(pair.k.column(j) == rat(1, 2) * unit(4, j));     // k(x) = x/2
    }
  }

  TEST_CASE("degenerate metrics are rejected") {
    ExtensionBundle bundle = ref_bundle();
    bundle.b.gram = Mat(9, 9);
    CHECK_THROWS_AS(compute_hk(bundle), SingularFormError);
  }
}

TEST_SUITE("hk diagnostics") {
  TEST_CASE("the example bundle passes every identity") {
    const ExtensionBundle bundle = ref_bundle();
    const CheckReport rep = hk_diagnostics(bundle, compute_hk(bundle));
    for (const CheckItem& item : rep.items) {
      INFO(item.anchor << " " << item.detail);
      CHECK(item.pass);
    }
  }

  TEST_CASE("trivial and scaled extensions pass") {
    for (const Rational& s : {Rational(1), Rational(2), rat(1, 2)}) {
      const ExtensionBundle bundle = trivial_sl2(s);
      CHECK(hk_diagnostics(bundle, compute_hk(bundle)).all_pass());
    }
  }

  TEST_CASE("seeded trivial extensions pass") {
    for (unsigned long seed = 0; seed < 6; ++seed) {
      const ExtensionBundle bundle = seeded_trivial_extension(seed);
      CHECK(hk_diagnostics(bundle, compute_hk(bundle)).all_pass());
    }
  }
}

TEST_SUITE("rho") {
  TEST_CASE("the example representation sends a_i to D_i and V to zero") {
    const ExtensionBundle bundle = ref_bundle();
    const ZooG0 zoo = example_g0(Mat::identity(3));
    const auto tables = rho(bundle, compute_hk(bundle));
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(tables[A(i)] == zoo.derivations[i]);
      CHECK(tables[V(i)].is_zero());
    }
  }

  TEST_CASE("on a trivial extension rho of a base vector is its adjoint") {
    const ExtensionBundle bundle = trivial_sl2();
    const auto tables = rho(bundle, compute_hk(bundle));
    for (std::size_t x = 0; x < 3; ++x) CHECK(tables[x] == ad(bundle.g0, unit(3, x)));
    CHECK(tables[3].is_zero());
  }
}

TEST_SUITE("twisted product") {
  TEST_CASE("the example mu table") {
    const ExtensionBundle bundle = ref_bundle();
    const StructureConstants mu = build_mu(bundle, compute_hk(bundle));
    CHECK(mu.table[A(0)][A(1)] == unit(9, A(2)) + unit(9, B(2)));  // mu(a1,a2) = a3 + b3
    CHECK(mu.table[A(0)][B(1)] == unit(9, B(2)));                  // mu(a1,b2) = b3
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK(mu.table[B(j)][B(k)].is_zero());
        for (std::size_t u = 0; u < 9; ++u) CHECK(mu.table[V(j)][u].is_zero());
      }
  }

  TEST_CASE("on a trivial extension mu is the base bracket") {
    const ExtensionBundle bundle = trivial_sl2();
    const StructureConstants mu = build_mu(bundle, compute_hk(bundle));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(mu.table[i][j].head(3) == bundle.g0.table[i][j]);
        CHECK(mu.table[i][j][3] == 0);
      }
  }
}

TEST_SUITE("twist maps") {
  TEST_CASE("alpha of the example") {
    const ExtensionBundle bundle = ref_bundle();
    const HomLieStructure hl = build_alpha(bundle, compute_hk(bundle));
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(hl.alpha.column(A(j)) == unit(9, B(j)));
      CHECK(hl.alpha.column(B(j)).is_zero());
      CHECK(hl.alpha.column(V(j)) == unit(9, V(j)));
    }
    CHECK(check_twisted_jacobi(hl).empty());
  }

  TEST_CASE("alpha-prime of the example and the kernel contrast") {
    const ExtensionBundle bundle = ref_bundle();
    const HomLieStructure hl = build_alpha_prime(bundle, compute_hk(bundle));
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(hl.alpha.column(A(j)) == unit(9, B(j)));
      CHECK(hl.alpha.column(B(j)) == unit(9, V(j)));
      CHECK(hl.alpha.column(V(j)).is_zero());
    }
    // Ker(alpha') = V while alpha fixes V pointwise
    CHECK(Subspace::span(9, kernel_basis(hl.alpha)) == bundle.v_subspace());
    const HomLieStructure plain = build_alpha(bundle, compute_hk(bundle));
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(plain.alpha * unit(9, V(j)) == unit(9, V(j)));
  }

  TEST_CASE("trivial extension twists") {
    const ExtensionBundle bundle = trivial_sl2();
    const HKPair pair = compute_hk(bundle);
    CHECK(build_alpha(bundle, pair).alpha.is_identity());
    const HomLieStructure prime = build_alpha_prime(bundle, pair);
    for (std::size_t j = 0; j < 3; ++j) CHECK(prime.alpha.column(j) == unit(4, j));
    CHECK(prime.alpha.column(3).is_zero());
  }

  TEST_CASE("the two twists differ only by a map into V") {
    for (const ExtensionBundle& bundle : {ref_bundle(), trivial_sl2(), seeded_trivial_extension(4)}) {
      const HKPair pair = compute_hk(bundle);
      const Mat a = build_alpha(bundle, pair).alpha;
      const Mat ap = build_alpha_prime(bundle, pair).alpha;
      const std::size_t n = bundle.g0.dim;
      for (std::size_t j = 0; j < n; ++j) {
        // pi(alpha x) = pi(alpha' x) = T(x) on the base block
        CHECK(bundle.project_g0(a.column(j)) == pair.t.column(j));
        CHECK(bundle.project_g0(ap.column(j)) == pair.t.column(j));
      }
    }
  }

  TEST_CASE("scalar beta variants keep the twisted Jacobi identity") {
    for (long c : {2, 3, 5, -1, -2}) {
      const ExtensionBundle bundle = example_bundle(Rational(c) * Mat::identity(3));
      const HKPair pair = compute_hk(bundle);
      CHECK(check_twisted_jacobi(build_alpha(bundle, pair)).empty());
      CHECK(check_twisted_jacobi(build_alpha_prime(bundle, pair)).empty());
    }
    for (unsigned long seed = 0; seed < 15; ++seed) {
      const ExtensionBundle bundle = seeded_trivial_extension(seed);
      const HKPair pair = compute_hk(bundle);
      CHECK(check_twisted_jacobi(build_alpha(bundle, pair)).empty());
      CHECK(check_twisted_jacobi(build_alpha_prime(bundle, pair)).empty());
    }
  }
}

TEST_SUITE("restricted structure") {
  TEST_CASE("the example restriction") {
    const ExtensionBundle bundle = ref_bundle();
    const HomLieStructure hl = restrict_homlie(bundle, compute_hk(bundle));
    CHECK(hl.dim() == 6);
    CHECK(hl.mu.table[A(0)][A(1)] == unit(6, A(2)) + unit(6, B(2)));
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(hl.alpha.column(A(j)) == unit(6, B(j)));
      CHECK(hl.alpha.column(B(j)).is_zero());
    }
    // alpha0(mu0(a1,a2)) = b3 = [a1,a2]_0
    CHECK(hl.alpha * hl.mu.table[A(0)][A(1)] == unit(6, B(2)));
    CHECK(check_invariant(hl.mu, bundle.b0).empty());
  }

  TEST_CASE("trivial restriction is the base bracket with identity twist") {
    const ExtensionBundle bundle = trivial_sl2();
    const HomLieStructure hl = restrict_homlie(bundle, compute_hk(bundle));
    CHECK(hl.alpha.is_identity());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(hl.mu.table[i][j] == bundle.g0.table[i][j]);
  }
}

TEST_SUITE("metric-free construction") {
  TEST_CASE("sigma = identity-on-V reproduces alpha") {
    const ExtensionBundle bundle = ref_bundle();
    const HKPair pair = compute_hk(bundle);
    Mat sigma(3, 9);
    for (std::size_t l = 0; l < 3; ++l) sigma(l, V(l)) = 1;
    const HomLieStructure built = build_from_hk(bundle.g0, bundle.theta, pair.h, pair.k, sigma);
    const HomLieStructure expect = build_alpha(bundle, pair);
    CHECK(built.alpha == expect.alpha);
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j) CHECK(built.mu.table[i][j] == expect.mu.table[i][j]);
  }

  TEST_CASE("sigma = projection-of-k reproduces alpha-prime") {
    const ExtensionBundle bundle = ref_bundle();
    const HKPair pair = compute_hk(bundle);
    Mat sigma(3, 9);
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t l = 0; l < 3; ++l) sigma(l, j) = pair.k(V(l), j);
    const HomLieStructure built = build_from_hk(bundle.g0, bundle.theta, pair.h, pair.k, sigma);
    CHECK(built.alpha == build_alpha_prime(bundle, pair).alpha);
  }

  TEST_CASE("a k violating the equivariance condition is rejected by name") {
    const ExtensionBundle bundle = ref_bundle();
    const HKPair pair = compute_hk(bundle);
    CHECK_THROWS_AS(
        build_from_hk(bundle.g0, bundle.theta, pair.h, Mat(9, 6), Mat(3, 9)),
        PreconditionError);
  }
}

TEST_SUITE("twisted Jacobi checks") {
  TEST_CASE("Lie algebras with the identity twist pass") {
    const auto [alg, kappa] = sl2();
    CHECK(check_twisted_jacobi(alg, Mat::identity(3)).empty());
  }

  TEST_CASE("killing the f-direction of sl2 breaks the identity") {
    // oracle on (e,f,h): [e,[f,h]] + 0 + [h,h] = [e,2f] = 2h
    const auto [alg, kappa] = sl2();
    Mat alpha(3, 3);
    alpha(0, 0) = 1;
    alpha(2, 2) = 1;
    const auto defects = check_twisted_jacobi(alg, alpha);
    REQUIRE(defects.size() == 1);
    CHECK(defects.front().residual == Rational(2) * unit(3, 2));
  }

  TEST_CASE("killing the h-direction of sl2 happens to keep the identity") {
    // The cyclic sum is alternating, so it is determined by the single basis
    // triple (e,f,h), where the two surviving terms cancel: [e,[f,h]] +
    // [f,[h,e]] = 2h - 2h = 0.
    const auto [alg, kappa] = sl2();
    Mat alpha(3, 3);
    alpha(0, 0) = 1;
    alpha(1, 1) = 1;
    CHECK(check_twisted_jacobi(alg, alpha).empty());
  }

  TEST_CASE("the candidate flag holds structures that fail the identity") {
    const auto [alg, kappa] = sl2();
    Mat alpha(3, 3);
    alpha(0, 0) = 1;
    alpha(2, 2) = 1;
    CHECK_THROWS_AS(make_homlie(alg, alpha), ValidationError);
    const HomLieStructure candidate = make_homlie(alg, alpha, /*candidate=*/true);
    CHECK_FALSE(check_twisted_jacobi(candidate).empty());
  }
}

TEST_SUITE("Hom-Lie ideals") {
  TEST_CASE("the base is an ideal for alpha but not for alpha-prime") {
    const ExtensionBundle bundle = ref_bundle();
    const HKPair pair = compute_hk(bundle);
    const Subspace g0_sub = bundle.g0_subspace();
    const auto with_alpha = check_homlie_ideal(build_alpha(bundle, pair), g0_sub);
    CHECK(with_alpha.is_subalgebra);
    CHECK(with_alpha.is_ideal);
    const auto with_prime = check_homlie_ideal(build_alpha_prime(bundle, pair), g0_sub);
    CHECK_FALSE(with_prime.is_ideal);  // alpha'(b_j) = v_j leaves the base
  }

  TEST_CASE("the zero subspace is always an ideal") {
    const ExtensionBundle bundle = ref_bundle();
    const auto res = check_homlie_ideal(build_alpha(bundle, compute_hk(bundle)), Subspace(9));
    CHECK(res.is_subalgebra);
    CHECK(res.is_ideal);
  }
}

TEST_SUITE("structure diagnostics") {
  TEST_CASE("the example satisfies every structural consequence") {
    const ExtensionBundle bundle = ref_bundle();
    const HKPair pair = compute_hk(bundle);
    const CheckReport rep = structure_diagnostics(bundle, pair, build_alpha(bundle, pair));
    CHECK(rep.all_pass());
    CHECK(rep.hypotheses_met());
    CHECK(rep.items.size() > 1);
  }

  TEST_CASE("a trivial extension reports the unmet hypothesis") {
    const ExtensionBundle bundle = trivial_sl2();
    const HKPair pair = compute_hk(bundle);
    const CheckReport rep = structure_diagnostics(bundle, pair, build_alpha(bundle, pair));
    CHECK(rep.all_pass());  // nothing is falsified
    CHECK_FALSE(rep.hypotheses_met());
  }
}

TEST_SUITE("projection pair") {
  TEST_CASE("the example projections split the base") {
    const ExtensionBundle bundle = ref_bundle();
    const ProjectionReport rep = lemma42_projections(bundle, compute_hk(bundle));
    CHECK(rep.checks.all_pass());
    const Subspace b_span = Subspace::span(6, {unit(6, B(0)), unit(6, B(1)), unit(6, B(2))});
    const Subspace a_span = Subspace::span(6, {unit(6, A(0)), unit(6, A(1)), unit(6, A(2))});
    CHECK(rep.im_alpha0 == b_span);
    CHECK(rep.ker_alpha0 == b_span);
    CHECK(rep.a_span == a_span);
    CHECK(rep.a_perp == a_span);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(rep.e.column(B(j)) == unit(6, B(j)));  // E fixes the b-block
      CHECK(rep.e.column(A(j)).is_zero());         // and kills the a-block
      CHECK(rep.f.column(A(j)) == unit(6, A(j)));
      CHECK(rep.f.column(B(j)).is_zero());
    }
  }

  TEST_CASE("a non-isotropic V is rejected") {
    CHECK_THROWS_AS(lemma42_projections(trivial_sl2(), compute_hk(trivial_sl2())),
                    PreconditionError);
  }
}
