#include <doctest.h>

#include <filesystem>

#include "helpers.hpp"
#include "homlie/errors.hpp"

using namespace homlie;
using namespace testutil;

namespace {

Json parse_text(const std::string& text) { return Json::parse(text); }

}  // namespace

TEST_SUITE("serialization round trips") {
  TEST_CASE("algebras serialize canonically") {
    const ExtensionBundle bundle = example_bundle(Mat::identity(3));
    const Json once = algebra_to_json(bundle.g);
    const Json twice = algebra_to_json(algebra_from_json(once));
    CHECK(once.dump() == twice.dump());
  }

  TEST_CASE("forms, cocycles and structures round trip") {
    const ExtensionBundle bundle = example_bundle(Mat::identity(3));
    const Json form_doc = form_to_json(bundle.b0);
    CHECK(form_doc.dump() == form_to_json(form_from_json(form_doc)).dump());

    const Json theta_doc = cocycle_to_json(bundle.theta, bundle.g0.basis_names);
    const Cocycle back = cocycle_from_json(theta_doc);
    CHECK(theta_doc.dump() == cocycle_to_json(back, bundle.g0.basis_names).dump());

    const HomLieStructure hl = build_alpha(bundle, compute_hk(bundle));
    const Json hl_doc = homlie_to_json(hl);
    CHECK(hl_doc.dump() == homlie_to_json(homlie_from_json(hl_doc)).dump());
  }

  TEST_CASE("rationals normalize on the way in") {
    const Json doc = parse_text(R"({
      "dim": 2, "basis": ["x", "y"], "skew": true,
      "products": [{"left": "x", "right": "y", "result": {"y": "2/4"}}]
    })");
    const StructureConstants alg = algebra_from_json(doc);
    CHECK(alg.table[0][1][1] == rat(1, 2));
    const Json out = algebra_to_json(alg);
    CHECK(out["products"][0]["result"]["y"] == "1/2");
  }
}

TEST_SUITE("parse errors") {
  TEST_CASE("unknown basis labels are reported by name") {
    const Json doc = parse_text(R"({
      "dim": 2, "basis": ["x", "y"], "skew": true,
      "products": [{"left": "x", "right": "zz", "result": {"y": "1"}}]
    })");
    CHECK_THROWS_WITH_AS(algebra_from_json(doc), doctest::Contains("zz"), ParseError);
  }

  TEST_CASE("skew violations are rejected") {
    const Json both = parse_text(R"({
      "dim": 2, "basis": ["x", "y"], "skew": true,
      "products": [{"left": "x", "right": "y", "result": {"y": "1"}},
                    {"left": "y", "right": "x", "result": {"y": "-1"}}]
    })");
    CHECK_THROWS_AS(algebra_from_json(both), ParseError);
    const Json diagonal = parse_text(R"({
      "dim": 2, "basis": ["x", "y"], "skew": true,
      "products": [{"left": "x", "right": "x", "result": {"y": "1"}}]
    })");
    CHECK_THROWS_AS(algebra_from_json(diagonal), ParseError);
  }

  TEST_CASE("malformed rationals and shapes are rejected") {
    CHECK_THROWS_AS(form_from_json(parse_text(R"({"dim": 2, "symmetric": true,
      "gram": [["1", "0"], ["0"]]})")),
                    ParseError);
    CHECK_THROWS_AS(form_from_json(parse_text(R"({"dim": 1, "symmetric": true,
      "gram": [["1/0"]]})")),
                    ParseError);
    CHECK_THROWS_AS(form_from_json(parse_text(R"({"dim": 2, "symmetric": true,
      "gram": [["1", "2"], ["0", "1"]]})")),
                    ParseError);  // declared symmetric, is not
  }

  TEST_CASE("duplicate labels are rejected") {
    CHECK_THROWS_AS(algebra_from_json(parse_text(
                        R"({"dim": 2, "basis": ["x", "x"], "skew": true, "products": []})")),
                    ParseError);
  }
}

TEST_SUITE("bundle files") {
  TEST_CASE("save and load through a directory") {
    const ExtensionBundle bundle = example_bundle(Mat::identity(3));
    const std::string dir = (std::filesystem::temp_directory_path() / "homlie_io_test").string();
    const std::string path = save_bundle(dir, bundle);
    const BundleInput input = load_bundle(path);
    auto [loaded, rep] = assemble_bundle(input);
    CHECK(rep.all_pass());
    CHECK(loaded.g.dim == 9);
    CHECK(loaded.b.gram == bundle.b.gram);
  }

  TEST_CASE("the shipped fixtures parse, revalidate and match the generator") {
    // Locate fixtures/ relative to the source tree; skip quietly when the
    // test binary runs from an unrelated directory.
    std::filesystem::path dir = std::filesystem::path(__FILE__).parent_path().parent_path() /
                                "fixtures" / "example";
    if (!std::filesystem::exists(dir / "bundle.json")) {
      MESSAGE("fixtures not found at " << dir.string());
      return;
    }
    const BundleInput input = load_bundle((dir / "bundle.json").string());
    auto [loaded, rep] = assemble_bundle(input);
    CHECK(rep.all_pass());
    const ExtensionBundle generated = example_bundle(Mat::identity(3));
    CHECK(algebra_to_json(loaded.g).dump() == algebra_to_json(generated.g).dump());
    CHECK(form_to_json(loaded.b).dump() == form_to_json(generated.b).dump());
    CHECK(cocycle_to_json(loaded.theta, loaded.g0.basis_names).dump() ==
          cocycle_to_json(generated.theta, generated.g0.basis_names).dump());
  }
}

TEST_SUITE("pipeline") {
  TEST_CASE("identical inputs produce byte-identical reports") {
    const ExtensionBundle bundle = example_bundle(Mat::identity(3));
    const BundleInput input{bundle.g0, bundle.b0, bundle.theta, bundle.b, bundle.g};
    PipelineOptions opts;
    opts.probes = 10;
    const PipelineReport a = run_report(input, opts);
    const PipelineReport b = run_report(input, opts);
    CHECK(a.doc.dump() == b.doc.dump());
    CHECK(a.exit_code == 0);
    CHECK(a.bundle_valid);
    CHECK(a.all_pass);
  }

  TEST_CASE("the reference report carries the expected landmark values") {
    const ExtensionBundle bundle = example_bundle(Mat::identity(3));
    const BundleInput input{bundle.g0, bundle.b0, bundle.theta, bundle.b, bundle.g};
    PipelineOptions opts;
    opts.probes = 5;
    const PipelineReport rep = run_report(input, opts);
    CHECK(rep.doc["killing"]["K_is_zero"] == true);
    CHECK(rep.doc["killing"]["lie_nilpotent"] == true);
    CHECK(rep.doc["killing"]["homlie_nilpotent"] == false);
    CHECK(rep.doc["simplicity"]["mult_algebra_dim"] == 100);
    CHECK(rep.doc["simplicity"]["absolutely_simple"] == true);
    CHECK(rep.doc["homlie_variants"]["restricted"]["condition_B_vs_bracket0"] == true);
    CHECK(rep.doc["homlie_variants"]["alpha"]["condition_B_vs_bracket"] == false);
  }

  TEST_CASE("an invalid bundle aborts at its anchor with exit code 1") {
    const ExtensionBundle bundle = example_bundle(Mat::identity(3));
    GramForm bad = bundle.b;
    bad.gram(B(0), B(0)) = 2;
    const BundleInput input{bundle.g0, bundle.b0, bundle.theta, bad, bundle.g};
    const PipelineReport rep = run_report(input, {});
    CHECK(rep.exit_code == 1);
    CHECK_FALSE(rep.bundle_valid);
    CHECK(rep.doc["aborted_at"] == "B([x,y],z)=B(x,[y,z])");
  }

  TEST_CASE("a degenerate metric aborts at the non-degeneracy anchor") {
    const ExtensionBundle bundle = example_bundle(Mat::identity(3));
    const BundleInput input{bundle.g0, bundle.b0, bundle.theta,
                            GramForm::from_gram(Mat(9, 9)), bundle.g};
    const PipelineReport rep = run_report(input, {});
    CHECK(rep.exit_code == 1);
    CHECK(rep.doc["aborted_at"] == "B: non-degenerate");
  }

  TEST_CASE("scalar variants of the example run the full pipeline cleanly") {
    const ExtensionBundle bundle = example_bundle(Rational(2) * Mat::identity(3));
    const BundleInput input{bundle.g0, bundle.b0, bundle.theta, bundle.b, bundle.g};
    PipelineOptions opts;
    opts.probes = 5;
    const PipelineReport rep = run_report(input, opts);
    CHECK(rep.exit_code == 0);
    CHECK(rep.doc["simplicity"]["mult_algebra_dim"] == 100);
    CHECK(rep.doc["killing"]["K_is_zero"] == true);
  }

  TEST_CASE("trivial extensions run the full pipeline cleanly") {
    const auto [alg, kappa] = sl2();
    Mat bv(1, 1);
    bv(0, 0) = 1;
    const ExtensionBundle bundle = trivial_extension(alg, kappa, GramForm::from_gram(bv));
    const BundleInput input{bundle.g0, bundle.b0, bundle.theta, bundle.b, bundle.g};
    PipelineOptions opts;
    opts.probes = 5;
    const PipelineReport rep = run_report(input, opts);
    CHECK(rep.exit_code == 0);
    CHECK(rep.doc["killing"]["K_nondegenerate"] == true);
    CHECK(rep.doc["killing"]["kappa_nondegenerate"] == true);
    CHECK(rep.doc["homlie_variants"]["alpha"]["condition_B_vs_bracket"] == true);
    CHECK(rep.doc["sections"]["projections"] == "skipped: V is not isotropic");
  }
}
