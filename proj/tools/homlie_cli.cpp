#include <CLI11.hpp>
#include <iostream>

#include "homlie/errors.hpp"
#include "homlie/io.hpp"

namespace {

using namespace homlie;

void emit(const Json& doc, const std::string& out_path) {
  if (out_path.empty())
    std::cout << doc.dump(2) << "\n";
  else
    save_json(out_path, doc);
}

int exit_code_for(const CheckReport& rep) { return rep.all_pass() ? 0 : 1; }

Json defects_json(const std::vector<TripleDefect>& defects) {
  Json arr = Json::array();
  for (const auto& d : defects) {
    Json entry;
    entry["i"] = d.i;
    entry["j"] = d.j;
    entry["k"] = d.k;
    entry["residual"] = vec_str(d.residual);
    arr.push_back(std::move(entry));
  }
  return arr;
}

ExtensionBundle validated_bundle_or_exit(const std::string& path) {
  auto [bundle, rep] = assemble_bundle(load_bundle(path));
  if (const CheckItem* fail = rep.first_failure()) {
    std::cerr << "bundle invalid at \"" << fail->anchor << "\" " << fail->detail << "\n";
    std::exit(1);
  }
  return std::move(bundle);
}

struct ZooRequest {
  std::string name;
  std::string out_dir;
  std::string beta = "1";
  std::size_t dim_v = 1;
};

int run_zoo(const ZooRequest& req) {
  namespace fs = std::filesystem;
  fs::create_directories(req.out_dir);
  const fs::path dir(req.out_dir);
  auto write_pair = [&](const std::string& name, const AlgebraWithForm& af) {
    save_json((dir / (name + ".json")).string(), algebra_to_json(af.alg));
    save_json((dir / (name + "_form.json")).string(), form_to_json(af.form));
  };
  if (req.name == "example") {
    const Rational c = rat_parse(req.beta);
    ExtensionBundle bundle = example_bundle(c * Mat::identity(3));
    std::cout << save_bundle(req.out_dir, bundle) << "\n";
    return 0;
  }
  if (req.name.rfind("trivial_", 0) == 0) {
    const std::string base_name = req.name.substr(8);
    AlgebraWithForm base;
    if (base_name == "sl2") {
      base = sl2();
    } else if (base_name == "osc4") {
      base = osc4();
    } else if (base_name.rfind("abelian_", 0) == 0) {
      base.alg = abelian(std::stoul(base_name.substr(8)));
      base.form = GramForm::from_gram(Mat::identity(base.alg.dim));
    } else {
      throw ParseError("unknown trivial-extension base \"" + base_name + "\"");
    }
    ExtensionBundle bundle =
        trivial_extension(base.alg, base.form, GramForm::from_gram(Mat::identity(req.dim_v)));
    std::cout << save_bundle(req.out_dir, bundle) << "\n";
    return 0;
  }
  if (req.name == "sl2") {
    write_pair("sl2", sl2());
    return 0;
  }
  if (req.name == "osc4") {
    write_pair("osc4", osc4());
    return 0;
  }
  if (req.name == "heisenberg3") {
    save_json((dir / "heisenberg3.json").string(), algebra_to_json(heisenberg3()));
    return 0;
  }
  if (req.name == "mat2") {
    save_json((dir / "mat2.json").string(), algebra_to_json(mat2()));
    return 0;
  }
  if (req.name == "f_plus_f") {
    save_json((dir / "f_plus_f.json").string(), algebra_to_json(f_plus_f()));
    return 0;
  }
  if (req.name.rfind("abelian_", 0) == 0) {
    const std::size_t n = std::stoul(req.name.substr(8));
    save_json((dir / (req.name + ".json")).string(), algebra_to_json(abelian(n)));
    return 0;
  }
  throw ParseError("unknown zoo name \"" + req.name +
                   "\" (expected example, trivial_{sl2|osc4|abelian_<n>}, sl2, osc4, "
                   "heisenberg3, mat2, f_plus_f, abelian_<n>)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions and checks for Hom-Lie structures on quadratic central extensions"};
  app.require_subcommand(1);

  std::string path_a, path_b, path_c, out_path, variant = "alpha";
  unsigned long seed = 1;
  std::size_t probes = 200;
  long bound = 9;

  // validate
  auto* validate = app.add_subcommand("validate", "re-run the defining identities of an object");
  validate->require_subcommand(1);
  auto* v_lie = validate->add_subcommand("lie", "Jacobi identity of an algebra file");
  v_lie->add_option("algebra", path_a)->required();
  auto* v_form = validate->add_subcommand("form", "invariance and non-degeneracy of a form");
  v_form->add_option("algebra", path_a)->required();
  v_form->add_option("form", path_b)->required();
  auto* v_cocycle = validate->add_subcommand("cocycle", "cocycle identity");
  v_cocycle->add_option("g0", path_a)->required();
  v_cocycle->add_option("theta", path_b)->required();
  auto* v_bundle = validate->add_subcommand("bundle", "full bundle validation");
  v_bundle->add_option("bundle", path_a)->required();
  auto* v_homlie = validate->add_subcommand("homlie", "twisted Jacobi identity");
  v_homlie->add_option("homlie", path_a)->required();

  // derivations
  auto* derivs = app.add_subcommand("derivations", "basis of the derivation space");
  derivs->add_option("algebra", path_a)->required();
  derivs->add_option("--form", path_b, "restrict to B-skew derivations");
  derivs->add_option("-o,--output", out_path);

  // cocycle tools
  auto* cocycle_cmd = app.add_subcommand("cocycle", "cocycle utilities");
  cocycle_cmd->require_subcommand(1);
  auto* c_check = cocycle_cmd->add_subcommand("check", "cocycle identity");
  c_check->add_option("g0", path_a)->required();
  c_check->add_option("theta", path_b)->required();
  auto* c_from = cocycle_cmd->add_subcommand("from-derivations", "theta from B0-skew derivations");
  c_from->add_option("g0", path_a)->required();
  c_from->add_option("B0", path_b)->required();
  c_from->add_option("derivations", path_c)->required();
  c_from->add_option("-o,--output", out_path);
  auto* c_cob = cocycle_cmd->add_subcommand("coboundary", "solve theta(x,y)=tau([x,y])");
  c_cob->add_option("g0", path_a)->required();
  c_cob->add_option("theta", path_b)->required();
  auto* c_rad = cocycle_cmd->add_subcommand("radicals", "component and joint radicals");
  c_rad->add_option("g0", path_a)->required();
  c_rad->add_option("theta", path_b)->required();

  // extend
  auto* extend = app.add_subcommand("extend", "central extension from g0 and theta");
  extend->add_option("g0", path_a)->required();
  extend->add_option("theta", path_b)->required();
  extend->add_option("-o,--output", out_path);

  // homlie
  auto* homlie_cmd = app.add_subcommand("homlie", "build a Hom-Lie structure from a bundle");
  homlie_cmd->add_option("bundle", path_a)->required();
  homlie_cmd->add_option("--variant", variant, "alpha | alpha-prime | restricted")
      ->check(CLI::IsMember({"alpha", "alpha-prime", "restricted"}));
  homlie_cmd->add_option("-o,--output", out_path);

  // killing
  auto* killing_cmd = app.add_subcommand("killing", "twisted Killing classification");
  killing_cmd->add_option("homlie", path_a)->required();
  killing_cmd->add_option("algebra", path_b)->required();
  killing_cmd->add_option("-o,--output", out_path);

  // connection
  auto* conn_cmd = app.add_subcommand("connection", "connection product and its property sheet");
  conn_cmd->add_option("bundle", path_a)->required();
  conn_cmd->add_option("-o,--output", out_path);

  // gsimple
  auto* gsimple = app.add_subcommand("gsimple", "unital algebra G and simplicity certificate");
  gsimple->add_option("bundle", path_a)->required();
  gsimple->add_option("--seed", seed);
  gsimple->add_option("--probes", probes);
  gsimple->add_option("--bound", bound);
  gsimple->add_option("-o,--output", out_path);

  // zoo
  ZooRequest zoo_req;
  auto* zoo_cmd = app.add_subcommand("zoo", "write generated fixtures");
  zoo_cmd->add_option("name", zoo_req.name)->required();
  zoo_cmd->add_option("-o,--output", zoo_req.out_dir)->required();
  zoo_cmd->add_option("--beta", zoo_req.beta, "scalar beta for the example family");
  zoo_cmd->add_option("--dim-v", zoo_req.dim_v, "dim V for the trivial_* family");

  // report
  auto* report_cmd = app.add_subcommand("report", "end-to-end pipeline over a bundle");
  report_cmd->add_option("bundle", path_a)->required();
  report_cmd->add_option("--seed", seed);
  report_cmd->add_option("--probes", probes);
  report_cmd->add_option("--bound", bound);
  report_cmd->add_option("-o,--output", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (v_lie->parsed()) {
      auto defects = jacobi_defect(load_algebra(path_a));
      Json doc;
      doc["lie"] = defects.empty();
      doc["defects"] = defects_json(defects);
      emit(doc, out_path);
      return defects.empty() ? 0 : 1;
    }
    if (v_form->parsed()) {
      const StructureConstants alg = load_algebra(path_a);
      const GramForm form = load_form(path_b);
      const auto defects = check_invariant(alg, form);
      Json doc;
      doc["invariant"] = defects.empty();
      doc["non_degenerate"] = is_nondegenerate(form);
      if (!defects.empty()) {
        const auto& d = defects.front();
        doc["first_defect"] = "(i=" + std::to_string(d.i) + ",j=" + std::to_string(d.j) +
                              ",k=" + std::to_string(d.k) + ") residual=" + rat_str(d.residual);
      }
      emit(doc, out_path);
      return defects.empty() && is_nondegenerate(form) ? 0 : 1;
    }
    if (v_cocycle->parsed() || c_check->parsed()) {
      auto defects = check_cocycle(load_algebra(path_a), load_cocycle(path_b));
      Json doc;
      doc["cocycle"] = defects.empty();
      doc["defects"] = defects_json(defects);
      emit(doc, out_path);
      return defects.empty() ? 0 : 1;
    }
    if (v_bundle->parsed()) {
      auto [bundle, rep] = assemble_bundle(load_bundle(path_a));
      Json doc;
      doc["valid"] = rep.all_pass();
      doc["checks"] = report_to_json(rep);
      emit(doc, out_path);
      return exit_code_for(rep);
    }
    if (v_homlie->parsed()) {
      const HomLieStructure hl = load_homlie(path_a, /*as_candidate=*/true);
      auto defects = check_twisted_jacobi(hl);
      Json doc;
      doc["homlie"] = defects.empty();
      doc["defects"] = defects_json(defects);
      emit(doc, out_path);
      return defects.empty() ? 0 : 1;
    }
    if (derivs->parsed()) {
      const StructureConstants alg = load_algebra(path_a);
      const std::vector<Mat> basis =
          path_b.empty() ? derivation_space(alg) : skew_derivation_space(alg, load_form(path_b));
      Json doc;
      doc["count"] = basis.size();
      Json arr = Json::array();
      for (const Mat& d : basis) arr.push_back(matrix_to_json(d));
      doc["derivations"] = std::move(arr);
      emit(doc, out_path);
      return 0;
    }
    if (c_from->parsed()) {
      const StructureConstants g0 = load_algebra(path_a);
      const GramForm b0 = load_form(path_b);
      const Json ds_doc = load_json(path_c);
      std::vector<Mat> ds;
      for (const Json& m : ds_doc.at("derivations")) ds.push_back(matrix_from_json(m));
      const Cocycle theta = cocycle_from_derivations(g0, b0, ds);
      emit(cocycle_to_json(theta, g0.basis_names), out_path);
      return 0;
    }
    if (c_cob->parsed()) {
      const StructureConstants g0 = load_algebra(path_a);
      const Cocycle theta = load_cocycle(path_b);
      const auto tau = is_coboundary(g0, theta);
      Json doc;
      doc["coboundary"] = tau.has_value();
      if (tau) doc["tau"] = matrix_to_json(*tau);
      emit(doc, out_path);
      return 0;  // the query itself succeeded either way
    }
    if (c_rad->parsed()) {
      const StructureConstants g0 = load_algebra(path_a);
      const Cocycle theta = load_cocycle(path_b);
      const CocycleRadicals rads = cocycle_radicals(g0, theta);
      Json doc;
      Json per = Json::array();
      for (const Subspace& s : rads.per_component) {
        Json basis = Json::array();
        for (const Vec& v : s.basis()) basis.push_back(vec_str(v));
        per.push_back(std::move(basis));
      }
      doc["per_component"] = std::move(per);
      Json joint = Json::array();
      for (const Vec& v : rads.joint.basis()) joint.push_back(vec_str(v));
      doc["joint"] = std::move(joint);
      doc["joint_dim"] = rads.joint.dim();
      emit(doc, out_path);
      return 0;
    }
    if (extend->parsed()) {
      const StructureConstants g = central_extend(load_algebra(path_a), load_cocycle(path_b));
      emit(algebra_to_json(g), out_path);
      return 0;
    }
    if (homlie_cmd->parsed()) {
      const ExtensionBundle bundle = validated_bundle_or_exit(path_a);
      const HKPair pair = compute_hk(bundle);
      HomLieStructure hl = variant == "alpha"
                               ? build_alpha(bundle, pair)
                               : variant == "alpha-prime" ? build_alpha_prime(bundle, pair)
                                                          : restrict_homlie(bundle, pair);
      emit(homlie_to_json(hl), out_path);
      return 0;
    }
    if (killing_cmd->parsed()) {
      const HomLieStructure hl = load_homlie(path_a, /*as_candidate=*/true);
      const StructureConstants lie = load_algebra(path_b);
      const TwistedKillingReport rep = classify(hl, lie);
      Json doc;
      doc["K"] = matrix_to_json(rep.K.gram)["entries"];
      doc["kappa"] = matrix_to_json(rep.kappa.gram)["entries"];
      doc["condition_A"] = rep.condition_A;
      doc["condition_B"] = rep.condition_B;
      doc["K_symmetric"] = rep.K.symmetric;
      doc["identities_pass"] = rep.identities_pass;
      doc["K_nondegenerate"] = rep.nondegenerate;
      doc["kappa_nondegenerate"] = rep.kappa_nondegenerate;
      doc["solvability_criterion_holds"] = rep.solvability_criterion_holds;
      doc["K_is_zero"] = rep.K_is_zero;
      doc["homlie_nilpotent"] = rep.homlie_nilpotent;
      doc["lie_nilpotent"] = rep.lie_nilpotent;
      doc["lie_solvable"] = rep.lie_solvable;
      emit(doc, out_path);
      return 0;
    }
    if (conn_cmd->parsed()) {
      const ExtensionBundle bundle = validated_bundle_or_exit(path_a);
      const HKPair pair = compute_hk(bundle);
      const HomLieStructure hl = build_alpha_prime(bundle, pair);
      const BilinearProduct conn = connection_product(bundle.g, bundle.b, hl);
      const CheckReport rep = thm44_report(bundle, pair, conn, hl.alpha);
      Json doc;
      doc["product"] = algebra_to_json(conn);
      doc["checks"] = report_to_json(rep);
      emit(doc, out_path);
      return exit_code_for(rep);
    }
    if (gsimple->parsed()) {
      const ExtensionBundle bundle = validated_bundle_or_exit(path_a);
      const HKPair pair = compute_hk(bundle);
      const HomLieStructure hl = build_alpha_prime(bundle, pair);
      const BilinearProduct conn = connection_product(bundle.g, bundle.b, hl);
      const UnitalAlgebraG G = build_G(bundle.g, bundle.b, conn);
      const SimplicityResult simp = burnside_simplicity(G.base, probes, seed, bound);
      Json doc;
      doc["dim"] = G.base.dim;
      doc["mult_algebra_dim"] = simp.mult_algebra_dim;
      doc["absolutely_simple"] = simp.absolutely_simple;
      doc["verdict"] = simp.absolutely_simple ? "absolutely simple" : "undetermined over the closure";
      Json fails = Json::array();
      for (const ProbeFailure& f : simp.probe.failures) {
        Json entry;
        entry["element"] = vec_str(f.element);
        entry["closure_dim"] = f.closure_dim;
        fails.push_back(std::move(entry));
      }
      doc["probe_failures"] = std::move(fails);
      emit(doc, out_path);
      return 0;
    }
    if (zoo_cmd->parsed()) return run_zoo(zoo_req);
    if (report_cmd->parsed()) {
      PipelineOptions opts{seed, probes, bound};
      const PipelineReport rep = run_report(load_bundle(path_a), opts);
      emit(rep.doc, out_path);
      std::cerr << rep.human_summary;
      return rep.exit_code;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "check failed at \"" << e.anchor << "\": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
