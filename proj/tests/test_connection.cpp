#include <doctest.h>

#include "helpers.hpp"
#include "homlie/errors.hpp"

using namespace homlie;
using namespace testutil;

namespace {

struct ExampleData {
  ExtensionBundle bundle;
  HKPair pair;
  HomLieStructure prime;
  BilinearProduct conn;
};

const ExampleData& example_data() {
  static const ExampleData data = [] {
    ExtensionBundle bundle = example_bundle(Mat::identity(3));
    HKPair pair = compute_hk(bundle);
    HomLieStructure prime = build_alpha_prime(bundle, pair);
    BilinearProduct conn = connection_product(bundle.g, bundle.b, prime);
    return ExampleData{std::move(bundle), std::move(pair), std::move(prime), std::move(conn)};
  }();
  return data;
}

ExtensionBundle trivial_sl2() {
  const auto [alg, kappa] = sl2();
  Mat bv(1, 1);
  bv(0, 0) = 1;
  return trivial_extension(alg, kappa, GramForm::from_gram(bv));
}

}  // namespace

TEST_SUITE("mu-invariance of the extension metric") {
  TEST_CASE("fails on the example (the derivations are nonzero)") {
    const auto& d = example_data();
    const HomLieStructure hl = build_alpha(d.bundle, d.pair);
    CHECK_FALSE(check_mu_invariance_of_B(d.bundle, hl));
  }

  TEST_CASE("holds on trivial extensions") {
    const ExtensionBundle bundle = trivial_sl2();
    const HomLieStructure hl = build_alpha(bundle, compute_hk(bundle));
    CHECK(check_mu_invariance_of_B(bundle, hl));
  }

  TEST_CASE("the equivalence is verified on seeded bundles") {
    for (unsigned long seed = 0; seed < 12; ++seed) {
      const ExtensionBundle bundle = seeded_trivial_extension(seed);
      CHECK(check_mu_invariance_of_B(bundle, build_alpha(bundle, compute_hk(bundle))));
    }
    for (long c : {2, 3, -1}) {
      const ExtensionBundle bundle = example_bundle(Rational(c) * Mat::identity(3));
      CHECK_FALSE(check_mu_invariance_of_B(bundle, build_alpha(bundle, compute_hk(bundle))));
    }
  }
}

TEST_SUITE("connection product table") {
  TEST_CASE("the mixed a-b products carry the half-v correction") {
    const auto& conn = example_data().conn;
    CHECK(conn.table[A(0)][B(1)] == unit(9, B(2)) + rat(1, 2) * unit(9, V(2)));  // a1 b2
    CHECK(conn.table[B(1)][A(0)] == rat(1, 2) * unit(9, V(2)));                  // b2 a1
    CHECK(conn.table[B(0)][A(1)] == rat(-1, 2) * unit(9, V(2)));                 // b1 a2
    CHECK(conn.table[B(0)][A(2)] == rat(1, 2) * unit(9, V(1)));                  // b1 a3
    CHECK(conn.table[A(1)][B(0)] == -unit(9, B(2)) - rat(1, 2) * unit(9, V(2))); // a2 b1
  }

  TEST_CASE("the b-block multiplies to zero") {
    const auto& conn = example_data().conn;
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK(conn.table[B(j)][B(k)].is_zero());
        CHECK(conn.table[B(j)][V(k)].is_zero());
        CHECK(conn.table[V(j)][B(k)].is_zero());
        CHECK(conn.table[V(j)][V(k)].is_zero());
      }
  }

  TEST_CASE("the a-block is half the derivation action, hence anti-commutative") {
    const auto& d = example_data();
    const ZooG0 zoo = example_g0(Mat::identity(3));
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const Vec expect = rat(1, 2) * zoo.derivations[j].column(A(k));
        CHECK(d.conn.table[A(j)][A(k)].head(6) == expect);
        CHECK(d.conn.table[A(j)][A(k)].tail(3).is_zero());
        CHECK(d.conn.table[A(j)][A(k)] == -d.conn.table[A(k)][A(j)]);
      }
  }

  TEST_CASE("the a-v products pair through the cocycle") {
    const auto& conn = example_data().conn;
    CHECK(conn.table[A(0)][V(1)] == rat(1, 2) * unit(9, V(2)));   // a1 v2
    CHECK(conn.table[A(0)][V(0)].is_zero());                      // a1 v1
    CHECK(conn.table[V(0)][A(1)] == rat(-1, 2) * unit(9, V(2)));  // v1 a2
    CHECK(conn.table[V(1)][A(0)] == rat(1, 2) * unit(9, V(2)));   // v2 a1
  }

  TEST_CASE("neither commutative nor anti-commutative") {
    const auto& conn = example_data().conn;
    bool some_noncommuting = false, some_nonanticommuting = false;
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j) {
        if (!(conn.table[i][j] - conn.table[j][i]).is_zero()) some_noncommuting = true;
        if (!(conn.table[i][j] + conn.table[j][i]).is_zero()) some_nonanticommuting = true;
      }
    CHECK(some_noncommuting);
    CHECK(some_nonanticommuting);
  }

  TEST_CASE("a degenerate metric is rejected") {
    const auto& d = example_data();
    CHECK_THROWS_AS(connection_product(d.bundle.g, GramForm::from_gram(Mat(9, 9)), d.prime),
                    SingularFormError);
  }
}

TEST_SUITE("connection property sheet") {
  TEST_CASE("everything passes on the example") {
    const auto& d = example_data();
    const CheckReport rep = thm44_report(d.bundle, d.pair, d.conn, d.prime.alpha);
    for (const CheckItem& item : rep.items) {
      INFO(item.anchor << " " << item.detail);
      CHECK(item.pass);
    }
  }

  TEST_CASE("squares and fourth powers vanish for random elements too") {
    const auto& d = example_data();
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 25; ++trial) {
      const Vec y = rand_vec(rng, 9);
      const Vec sq = d.conn.product(y, y);
      CHECK(d.conn.product(sq, sq).is_zero());  // y^4 = (y^2)^2 = 0
    }
  }

  TEST_CASE("the trivial extension has the fully skew half-product") {
    const ExtensionBundle bundle = trivial_sl2();
    const HKPair pair = compute_hk(bundle);
    const HomLieStructure prime = build_alpha_prime(bundle, pair);
    const BilinearProduct conn = connection_product(bundle.g, bundle.b, prime);
    const StructureConstants mu = build_mu(bundle, pair);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(conn.table[i][j] == rat(1, 2) * mu.table[i][j]);
        CHECK(conn.table[i][j] == -conn.table[j][i]);
      }
    CHECK(thm44_report(bundle, pair, conn, prime.alpha).all_pass());
  }
}

TEST_SUITE("the unital algebra") {
  TEST_CASE("unit laws and the scalar pairing") {
    const auto& d = example_data();
    const UnitalAlgebraG G = build_G(d.bundle.g, d.bundle.b, d.conn);
    CHECK(G.base.dim == 10);
    CHECK(G.unit_index == 0);
    // nu((0,a1),(0,v1)) = (B(a1,v1), a1 v1) = (1, 0)
    const Vec prod = G.base.table[1 + A(0)][1 + V(0)];
    CHECK(prod[0] == 1);
    CHECK(prod.tail(9).is_zero());
    // [(0,a1),(0,a2)]_nu = (0, mu(a1,a2)) = (0, a3 + b3)
    const Vec comm = G.base.table[1 + A(0)][1 + A(1)] - G.base.table[1 + A(1)][1 + A(0)];
    CHECK(comm[0] == 0);
    CHECK(comm.tail(9) == unit(9, A(2)) + unit(9, B(2)));
  }
}

TEST_SUITE("ideal closure") {
  TEST_CASE("the zero subspace is closed") {
    CHECK(ideal_closure(f_plus_f(), Subspace(2)).is_zero());
  }

  TEST_CASE("a single v generates all of G in the example") {
    const auto& d = example_data();
    const UnitalAlgebraG G = build_G(d.bundle.g, d.bundle.b, d.conn);
    Vec gen(10);
    gen[1 + V(0)] = 1;  // (0, v1)
    CHECK(ideal_closure(G.base, Subspace::span(10, {gen})).is_full());
  }

  TEST_CASE("a factor of F + F is a proper ideal") {
    const Subspace factor = Subspace::span(2, {Vec::unit(2, 0)});
    CHECK(ideal_closure(f_plus_f(), factor) == factor);
  }
}

TEST_SUITE("simplicity certificate") {
  TEST_CASE("the example G is absolutely simple") {
    const auto& d = example_data();
    const UnitalAlgebraG G = build_G(d.bundle.g, d.bundle.b, d.conn);
    const SimplicityResult res = burnside_simplicity(G.base, 50, 1, 9);
    CHECK(res.mult_algebra_dim == 100);
    CHECK(res.absolutely_simple);
    CHECK(res.probe.failures.empty());
  }

  TEST_CASE("F + F is seen through immediately") {
    const SimplicityResult res = burnside_simplicity(f_plus_f(), 50, 1, 9);
    CHECK(res.mult_algebra_dim == 2);
    CHECK_FALSE(res.absolutely_simple);
    CHECK_FALSE(res.probe.failures.empty());  // the probe finds proper ideals
    for (const ProbeFailure& f : res.probe.failures) CHECK(f.closure_dim == 1);
  }

  TEST_CASE("the full matrix algebra passes with dimension 16") {
    const SimplicityResult res = burnside_simplicity(mat2(), 50, 1, 9);
    CHECK(res.mult_algebra_dim == 16);
    CHECK(res.absolutely_simple);
  }

  TEST_CASE("a non-unital algebra is rejected") {
    CHECK_THROWS_AS(burnside_simplicity(heisenberg3(), 1, 1, 9), PreconditionError);
  }

  TEST_CASE("probes are reproducible for a fixed seed") {
    const SimplicityResult a = burnside_simplicity(f_plus_f(), 40, 7, 9);
    const SimplicityResult b = burnside_simplicity(f_plus_f(), 40, 7, 9);
    REQUIRE(a.probe.failures.size() == b.probe.failures.size());
    for (std::size_t i = 0; i < a.probe.failures.size(); ++i)
      CHECK(a.probe.failures[i].element == b.probe.failures[i].element);
  }
}

TEST_SUITE("quotient structure") {
  TEST_CASE("the example quotient is the alpha-prime structure") {
    const auto& d = example_data();
    const UnitalAlgebraG G = build_G(d.bundle.g, d.bundle.b, d.conn);
    const QuotientResult q = quotient_homlie(G, d.prime);
    CHECK(q.iso_ok);
    CHECK_FALSE(q.quotient.candidate);
  }

  TEST_CASE("trivial extensions agree as well") {
    const ExtensionBundle bundle = trivial_sl2();
    const HKPair pair = compute_hk(bundle);
    const HomLieStructure prime = build_alpha_prime(bundle, pair);
    const BilinearProduct conn = connection_product(bundle.g, bundle.b, prime);
    CHECK(quotient_homlie(build_G(bundle.g, bundle.b, conn), prime).iso_ok);
  }
}

TEST_SUITE("base connection") {
  TEST_CASE("the example base table") {
    const auto& d = example_data();
    const G0Connection res = g0_connection(d.bundle, d.conn);
    CHECK(res.product.table[A(0)][B(1)] == unit(6, B(2)));  // a1 . b2 = b3 (v part projected away)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(res.product.table[B(j)][B(k)].is_zero());
    // (a1 + T(a2))^2 = [a1,a2]_0 = b3
    const Vec y = unit(6, A(0)) + d.pair.t.column(A(1));
    CHECK(res.product.product(y, y) == unit(6, B(2)));
    CHECK(res.checks.all_pass());
  }

  TEST_CASE("trivial extensions pass the base sheet") {
    const ExtensionBundle bundle = trivial_sl2();
    const HKPair pair = compute_hk(bundle);
    const HomLieStructure prime = build_alpha_prime(bundle, pair);
    const BilinearProduct conn = connection_product(bundle.g, bundle.b, prime);
    CHECK(g0_connection(bundle, conn).checks.all_pass());
  }
}
