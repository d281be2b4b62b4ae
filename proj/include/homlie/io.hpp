#ifndef HOMLIE_IO_HPP
#define HOMLIE_IO_HPP

#include <json.hpp>

#include "homlie/connection.hpp"
#include "homlie/zoo.hpp"

namespace homlie {

// Ordered JSON keeps serialization deterministic (reports must be
// byte-identical for identical inputs and seeds).
using Json = nlohmann::ordered_json;

Json algebra_to_json(const StructureConstants& alg);
StructureConstants algebra_from_json(const Json& doc);

Json form_to_json(const GramForm& form);
GramForm form_from_json(const Json& doc);

Json cocycle_to_json(const Cocycle& theta, const std::vector<std::string>& g0_names);
Cocycle cocycle_from_json(const Json& doc);

Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& doc);

Json homlie_to_json(const HomLieStructure& hl);
/// as_candidate skips the twisted Jacobi gate (diagnostic workflows).
HomLieStructure homlie_from_json(const Json& doc, bool as_candidate = false);

Json report_to_json(const CheckReport& rep);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& doc);

StructureConstants load_algebra(const std::string& path);
GramForm load_form(const std::string& path);
Cocycle load_cocycle(const std::string& path);
HomLieStructure load_homlie(const std::string& path, bool as_candidate = false);
Mat load_matrix(const std::string& path);

/// Bundle file: {"g0": path, "B0": path, "theta": path, "B": path, "g": path?}
/// with component paths resolved relative to the bundle file's directory.
/// No validation happens here.
BundleInput load_bundle(const std::string& path);

/// Writes g0.json, B0.json, theta.json, B.json, g.json and bundle.json into
/// dir; returns the bundle path.
std::string save_bundle(const std::string& dir, const ExtensionBundle& bundle);

struct PipelineOptions {
  unsigned long seed = 1;
  std::size_t probes = 200;
  long bound = 9;
};

struct PipelineReport {
  bool bundle_valid = false;
  bool all_pass = false;  // no falsified identity anywhere
  int exit_code = 1;      // 0 = pass, 1 = a mathematical check failed
  Json doc;               // machine-readable report
  std::string human_summary;
};

/// The end-to-end verification pipeline over one bundle: validation, the
/// metric-transfer maps and their diagnostics, the three Hom-Lie structures,
/// the twisted Killing classification, the mu-series, the projection pair
/// (when V is isotropic), the connection product with its property sheet,
/// the unital algebra with the simplicity certificate and quotient
/// comparison, and the structural diagnostics. Aborts at the first failed
/// bundle-validation anchor.
PipelineReport run_report(const BundleInput& input, const PipelineOptions& opts = {});

}  // namespace homlie

#endif
