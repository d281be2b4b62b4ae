#include "homlie/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::size_t size_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("field \"") + key + "\" must be a count");
  return v.get<std::size_t>();
}

std::vector<std::string> name_list(const Json& v, std::size_t expect, const char* what) {
  if (!v.is_array() || v.size() != expect)
    throw ParseError(std::string(what) + " must list exactly " + std::to_string(expect) + " labels");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const Json& e : v) {
    if (!e.is_string()) throw ParseError(std::string(what) + " entries must be strings");
    std::string s = e.get<std::string>();
    if (!seen.insert(s).second) throw ParseError("duplicate basis label \"" + s + "\"");
    names.push_back(std::move(s));
  }
  return names;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx[names[i]] = i;
  return idx;
}

std::size_t resolve(const std::map<std::string, std::size_t>& idx, const Json& label) {
  if (!label.is_string()) throw ParseError("basis label must be a string");
  auto it = idx.find(label.get<std::string>());
  if (it == idx.end()) throw ParseError("unknown basis label \"" + label.get<std::string>() + "\"");
  return it->second;
}

Vec value_vec(const Json& result, const std::map<std::string, std::size_t>& idx, std::size_t dim) {
  if (!result.is_object()) throw ParseError("\"result\" must map labels to rationals");
  Vec v(dim);
  for (auto it = result.begin(); it != result.end(); ++it) {
    auto found = idx.find(it.key());
    if (found == idx.end()) throw ParseError("unknown basis label \"" + it.key() + "\"");
    if (!it.value().is_string()) throw ParseError("rational entries must be strings");
    v[found->second] = rat_parse(it.value().get<std::string>());
  }
  return v;
}

Json result_json(const Vec& v, const std::vector<std::string>& names) {
  Json r = Json::object();
  for (std::size_t k = 0; k < v.dim(); ++k)
    if (v[k] != 0) r[names[k]] = rat_str(v[k]);
  return r;
}

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_entries(const Json& rows, std::size_t nrows, std::size_t ncols, const char* what) {
  if (!rows.is_array() || rows.size() != nrows)
    throw ParseError(std::string(what) + " must have " + std::to_string(nrows) + " rows");
  Mat m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    const Json& row = rows.at(i);
    if (!row.is_array() || row.size() != ncols)
      throw ParseError(std::string(what) + " row " + std::to_string(i) + " must have " +
                       std::to_string(ncols) + " entries");
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!row.at(j).is_string()) throw ParseError("rational entries must be strings");
      m(i, j) = rat_parse(row.at(j).get<std::string>());
    }
  }
  return m;
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(rat_str(v[i]));
  return a;
}

}  // namespace

Json algebra_to_json(const StructureConstants& alg) {
  Json doc;
  doc["dim"] = alg.dim;
  doc["basis"] = alg.basis_names;
  doc["skew"] = alg.skew;
  Json products = Json::array();
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = alg.skew ? i + 1 : 0; j < alg.dim; ++j) {
      if (alg.table[i][j].is_zero()) continue;
      Json entry;
      entry["left"] = alg.basis_names[i];
      entry["right"] = alg.basis_names[j];
      entry["result"] = result_json(alg.table[i][j], alg.basis_names);
      products.push_back(std::move(entry));
    }
  doc["products"] = std::move(products);
  return doc;
}

StructureConstants algebra_from_json(const Json& doc) {
  const std::size_t dim = size_field(doc, "dim");
  const Json& skew_field = field(doc, "skew");
  if (!skew_field.is_boolean()) throw ParseError("\"skew\" must be a boolean");
  StructureConstants alg = StructureConstants::zero(dim, skew_field.get<bool>());
  alg.basis_names = name_list(field(doc, "basis"), dim, "\"basis\"");
  const auto idx = index_of(alg.basis_names);

  std::set<std::pair<std::size_t, std::size_t>> seen;
  const Json& products = doc.contains("products") ? doc.at("products") : Json::array();
  if (!products.is_array()) throw ParseError("\"products\" must be an array");
  for (const Json& entry : products) {
    const std::size_t i = resolve(idx, field(entry, "left"));
    const std::size_t j = resolve(idx, field(entry, "right"));
    const Vec value = value_vec(field(entry, "result"), idx, dim);
    if (alg.skew) {
      if (i == j && !value.is_zero())
        throw ParseError("skew violation: nonzero product of \"" + alg.basis_names[i] +
                         "\" with itself");
      if (seen.count({i, j}) || seen.count({j, i}))
        throw ParseError("skew violation: both orientations of (" + alg.basis_names[i] + ", " +
                         alg.basis_names[j] + ") appear");
      seen.insert({i, j});
      if (i != j) alg.set_product(i, j, value);
    } else {
      if (seen.count({i, j}))
        throw ParseError("duplicate product entry (" + alg.basis_names[i] + ", " +
                         alg.basis_names[j] + ")");
      seen.insert({i, j});
      alg.table[i][j] = value;
    }
  }
  return alg;
}

Json form_to_json(const GramForm& form) {
  Json doc;
  doc["dim"] = form.dim;
  doc["symmetric"] = form.symmetric;
  doc["gram"] = mat_json(form.gram);
  return doc;
}

GramForm form_from_json(const Json& doc) {
  const std::size_t dim = size_field(doc, "dim");
  const Json& sym = field(doc, "symmetric");
  if (!sym.is_boolean()) throw ParseError("\"symmetric\" must be a boolean");
  GramForm form = GramForm::from_gram(mat_from_entries(field(doc, "gram"), dim, dim, "\"gram\""));
  if (sym.get<bool>() && !form.symmetric)
    throw ParseError("form declared symmetric but the Gram matrix is not");
  form.symmetric = sym.get<bool>() && form.symmetric;
  return form;
}

Json cocycle_to_json(const Cocycle& theta, const std::vector<std::string>& g0_names) {
  Json doc;
  doc["dim_g0"] = theta.dim_g0;
  doc["dim_v"] = theta.dim_v;
  doc["basis"] = g0_names;
  std::vector<std::string> v_names = default_basis_names(theta.dim_v, "v");
  doc["v_basis"] = v_names;
  Json values = Json::array();
  for (std::size_t i = 0; i < theta.dim_g0; ++i)
    for (std::size_t j = i + 1; j < theta.dim_g0; ++j) {
      if (theta.values[i][j].is_zero()) continue;
      Json entry;
      entry["left"] = g0_names[i];
      entry["right"] = g0_names[j];
      entry["result"] = result_json(theta.values[i][j], v_names);
      values.push_back(std::move(entry));
    }
  doc["values"] = std::move(values);
  return doc;
}

Cocycle cocycle_from_json(const Json& doc) {
  const std::size_t dim_g0 = size_field(doc, "dim_g0");
  const std::size_t dim_v = size_field(doc, "dim_v");
  std::vector<std::string> g0_names = doc.contains("basis")
                                          ? name_list(doc.at("basis"), dim_g0, "\"basis\"")
                                          : default_basis_names(dim_g0);
  std::vector<std::string> v_names = doc.contains("v_basis")
                                         ? name_list(doc.at("v_basis"), dim_v, "\"v_basis\"")
                                         : default_basis_names(dim_v, "v");
  const auto idx = index_of(g0_names);
  const auto v_idx = index_of(v_names);

  Cocycle theta = Cocycle::zero(dim_g0, dim_v);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const Json& values = doc.contains("values") ? doc.at("values") : Json::array();
  if (!values.is_array()) throw ParseError("\"values\" must be an array");
  for (const Json& entry : values) {
    const std::size_t i = resolve(idx, field(entry, "left"));
    const std::size_t j = resolve(idx, field(entry, "right"));
    const Vec value = value_vec(field(entry, "result"), v_idx, dim_v);
    if (i == j && !value.is_zero())
      throw ParseError("skew violation: nonzero cocycle value on (" + g0_names[i] + ", " +
                       g0_names[i] + ")");
    if (seen.count({i, j}) || seen.count({j, i}))
      throw ParseError("skew violation: both orientations of (" + g0_names[i] + ", " +
                       g0_names[j] + ") appear");
    seen.insert({i, j});
    if (i != j) theta.set_value(i, j, value);
  }
  return theta;
}

Json matrix_to_json(const Mat& m) {
  Json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  doc["entries"] = mat_json(m);
  return doc;
}

Mat matrix_from_json(const Json& doc) {
  const std::size_t rows = size_field(doc, "rows");
  const std::size_t cols = size_field(doc, "cols");
  return mat_from_entries(field(doc, "entries"), rows, cols, "\"entries\"");
}

Json homlie_to_json(const HomLieStructure& hl) {
  Json doc;
  doc["dim"] = hl.dim();
  doc["mu"] = algebra_to_json(hl.mu);
  doc["alpha"] = mat_json(hl.alpha);
  return doc;
}

HomLieStructure homlie_from_json(const Json& doc, bool as_candidate) {
  const std::size_t dim = size_field(doc, "dim");
  StructureConstants mu = algebra_from_json(field(doc, "mu"));
  if (mu.dim != dim) throw ParseError("\"mu\" dimension differs from \"dim\"");
  if (!mu.skew) throw ParseError("\"mu\" must be a skew product");
  Mat alpha = mat_from_entries(field(doc, "alpha"), dim, dim, "\"alpha\"");
  return make_homlie(std::move(mu), std::move(alpha), as_candidate);
}

Json report_to_json(const CheckReport& rep) {
  Json arr = Json::array();
  for (const CheckItem& it : rep.items) {
    Json entry;
    entry["anchor"] = it.anchor;
    entry["pass"] = it.pass;
    if (it.hypothesis) entry["hypothesis"] = true;
    if (!it.detail.empty()) entry["detail"] = it.detail;
    arr.push_back(std::move(entry));
  }
  return arr;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in \"" + path + "\": " + e.what());
  }
  return doc;
}

void save_json(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write \"" + path + "\"");
  out << doc.dump(2) << "\n";
}

StructureConstants load_algebra(const std::string& path) { return algebra_from_json(load_json(path)); }
GramForm load_form(const std::string& path) { return form_from_json(load_json(path)); }
Cocycle load_cocycle(const std::string& path) { return cocycle_from_json(load_json(path)); }
HomLieStructure load_homlie(const std::string& path, bool as_candidate) {
  return homlie_from_json(load_json(path), as_candidate);
}
Mat load_matrix(const std::string& path) { return matrix_from_json(load_json(path)); }

BundleInput load_bundle(const std::string& path) {
  const Json doc = load_json(path);
  const std::filesystem::path dir = std::filesystem::path(path).parent_path();
  auto resolve_path = [&](const char* key) {
    const Json& p = field(doc, key);
    if (!p.is_string()) throw ParseError(std::string("\"") + key + "\" must be a path");
    return (dir / p.get<std::string>()).string();
  };
  BundleInput input;
  input.g0 = load_algebra(resolve_path("g0"));
  input.b0 = load_form(resolve_path("B0"));
  input.theta = load_cocycle(resolve_path("theta"));
  input.b = load_form(resolve_path("B"));
  if (doc.contains("g")) input.g = load_algebra(resolve_path("g"));
  return input;
}

std::string save_bundle(const std::string& dir, const ExtensionBundle& bundle) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path base(dir);
  save_json((base / "g0.json").string(), algebra_to_json(bundle.g0));
  save_json((base / "B0.json").string(), form_to_json(bundle.b0));
  save_json((base / "theta.json").string(), cocycle_to_json(bundle.theta, bundle.g0.basis_names));
  save_json((base / "B.json").string(), form_to_json(bundle.b));
  save_json((base / "g.json").string(), algebra_to_json(bundle.g));
  Json doc;
  doc["g0"] = "g0.json";
  doc["B0"] = "B0.json";
  doc["theta"] = "theta.json";
  doc["B"] = "B.json";
  doc["g"] = "g.json";
  const std::string bundle_path = (base / "bundle.json").string();
  save_json(bundle_path, doc);
  return bundle_path;
}

namespace {

Json killing_report_json(const TwistedKillingReport& rep) {
  Json doc;
  doc["K"] = mat_json(rep.K.gram);
  doc["kappa"] = mat_json(rep.kappa.gram);
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
  return doc;
}

}  // namespace

PipelineReport run_report(const BundleInput& input, const PipelineOptions& opts) {
  PipelineReport out;
  Json& doc = out.doc;
  doc["seed"] = opts.seed;
  doc["probes"] = opts.probes;
  doc["bound"] = opts.bound;

  std::string human;
  bool failed = false;
  auto add_section = [&](const std::string& name, const CheckReport& rep) {
    doc["sections"][name] = report_to_json(rep);
    for (const CheckItem& it : rep.items) {
      const char* tag = it.pass ? "[PASS]" : (it.hypothesis ? "[SKIP]" : "[FAIL]");
      human += std::string(tag) + " " + name + ": " + it.anchor;
      if (!it.detail.empty()) human += "  -- " + it.detail;
      human += "\n";
    }
    if (!rep.all_pass()) failed = true;
  };

  auto [bundle, vrep] = assemble_bundle(input);
  add_section("bundle", vrep);
  out.bundle_valid = vrep.all_pass();
  doc["bundle_valid"] = out.bundle_valid;
  if (!out.bundle_valid) {
    doc["aborted_at"] = vrep.first_failure()->anchor;
    human += "aborted at: " + vrep.first_failure()->anchor + "\n";
    out.all_pass = false;
    out.exit_code = 1;
    out.human_summary = std::move(human);
    return out;
  }

  const HKPair pair = compute_hk(bundle);
  doc["hk"]["h"] = mat_json(pair.h);
  doc["hk"]["k"] = mat_json(pair.k);
  doc["hk"]["T"] = mat_json(pair.t);
  {
    Json a = Json::array();
    for (const Vec& ai : pair.a_elems) a.push_back(vec_json(ai));
    doc["hk"]["a_elems"] = std::move(a);
  }
  add_section("hk_diagnostics", hk_diagnostics(bundle, pair));

  const HomLieStructure hl_alpha = build_alpha(bundle, pair);
  const HomLieStructure hl_alpha_prime = build_alpha_prime(bundle, pair);
  const HomLieStructure hl_restricted = restrict_homlie(bundle, pair);

  doc["homlie_variants"]["alpha"]["twisted_jacobi"] = true;
  doc["homlie_variants"]["alpha"]["condition_B_vs_bracket"] =
      check_condition_B(hl_alpha, bundle.g).holds;
  doc["homlie_variants"]["alpha_prime"]["twisted_jacobi"] = true;
  doc["homlie_variants"]["alpha_prime"]["condition_B_vs_bracket"] =
      check_condition_B(hl_alpha_prime, bundle.g).holds;
  doc["homlie_variants"]["restricted"]["twisted_jacobi"] = true;
  doc["homlie_variants"]["restricted"]["condition_B_vs_bracket0"] =
      check_condition_B(hl_restricted, bundle.g0).holds;

  const TwistedKillingReport killing = classify(hl_restricted, bundle.g0);
  doc["killing"] = killing_report_json(killing);
  add_section("killing_identities", killing_identities_report(hl_restricted, bundle.g0));

  {
    const HomLieSeries lcs = homlie_lcs(hl_restricted);
    Json dims = Json::array();
    for (const Subspace& s : lcs.series) dims.push_back(s.dim());
    doc["homlie_lcs"]["dims"] = std::move(dims);
    doc["homlie_lcs"]["nilpotent"] = lcs.nilpotent;
  }

  doc["mu_invariant_B"] = check_mu_invariance_of_B(bundle, hl_alpha);

  if (is_isotropic(bundle.b, bundle.v_subspace())) {
    add_section("projections", lemma42_projections(bundle, pair).checks);
  } else {
    doc["sections"]["projections"] = "skipped: V is not isotropic";
    human += "[SKIP] projections: V is not isotropic\n";
  }

  const BilinearProduct conn = connection_product(bundle.g, bundle.b, hl_alpha_prime);
  add_section("connection", thm44_report(bundle, pair, conn, hl_alpha_prime.alpha));
  add_section("g0_connection", g0_connection(bundle, conn).checks);

  const UnitalAlgebraG G = build_G(bundle.g, bundle.b, conn);
  const SimplicityResult simp = burnside_simplicity(G.base, opts.probes, opts.seed, opts.bound);
  doc["simplicity"]["dim"] = G.base.dim;
  doc["simplicity"]["mult_algebra_dim"] = simp.mult_algebra_dim;
  doc["simplicity"]["absolutely_simple"] = simp.absolutely_simple;
  doc["simplicity"]["verdict"] =
      simp.absolutely_simple ? "absolutely simple" : "undetermined over the closure";
  {
    Json fails = Json::array();
    for (const ProbeFailure& f : simp.probe.failures) {
      Json entry;
      entry["element"] = vec_json(f.element);
      entry["closure_dim"] = f.closure_dim;
      fails.push_back(std::move(entry));
    }
    doc["simplicity"]["probe_failures"] = std::move(fails);
  }
  human += std::string("[INFO] simplicity: mult_algebra_dim=") +
           std::to_string(simp.mult_algebra_dim) + " verdict=" +
           (simp.absolutely_simple ? "absolutely simple" : "undetermined over the closure") + "\n";

  {
    CheckReport rep;
    rep.add("quotient of (G,ν) by the unit line ≅ (g,μ,α')", quotient_homlie(G, hl_alpha_prime).iso_ok);
    add_section("quotient", rep);
  }

  add_section("structure", structure_diagnostics(bundle, pair, hl_alpha));

  out.all_pass = !failed;
  out.exit_code = failed ? 1 : 0;
  out.human_summary = std::move(human);
  return out;
}

}  // namespace homlie
