#include "homlie/cocycle.hpp"

#include "homlie/errors.hpp"

namespace homlie {

Cocycle Cocycle::zero(std::size_t dim_g0, std::size_t dim_v) {
  Cocycle c;
  c.dim_g0 = dim_g0;
  c.dim_v = dim_v;
  c.values.assign(dim_g0, std::vector<Vec>(dim_g0, Vec(dim_v)));
  return c;
}

Vec Cocycle::eval(const Vec& x, const Vec& y) const {
  if (x.dim() != dim_g0 || y.dim() != dim_g0) throw DimensionError("cocycle operand dimension mismatch");
  Vec out(dim_v);
  for (std::size_t i = 0; i < dim_g0; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_g0; ++j) {
      if (y[j] == 0) continue;
      out += (x[i] * y[j]) * values[i][j];
    }
  }
  return out;
}

void Cocycle::set_value(std::size_t i, std::size_t j, const Vec& value) {
  if (value.dim() != dim_v) throw DimensionError("cocycle value dimension mismatch");
  if (i == j && !value.is_zero()) throw PreconditionError("cocycle with nonzero diagonal value");
  values[i][j] = value;
  if (i != j) values[j][i] = -value;
}

bool Cocycle::is_zero() const {
  for (const auto& row : values)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

void Cocycle::validate_shape() const {
  if (values.size() != dim_g0) throw ValidationError("tensor shape", "cocycle row count != dim_g0");
  for (const auto& row : values) {
    if (row.size() != dim_g0) throw ValidationError("tensor shape", "cocycle column count != dim_g0");
    for (const auto& v : row)
      if (v.dim() != dim_v) throw ValidationError("tensor shape", "cocycle value dimension != dim_v");
  }
  for (std::size_t i = 0; i < dim_g0; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(values[i][j] + values[j][i]).is_zero())
        throw ValidationError("theta(x,y)=-theta(y,x)", "cocycle tensor not antisymmetric");
}

std::vector<TripleDefect> check_cocycle(const StructureConstants& g0, const Cocycle& theta) {
  if (theta.dim_g0 != g0.dim) throw DimensionError("cocycle/algebra dimension mismatch");
  if (!is_lie(g0)) throw PreconditionError("check_cocycle requires a Lie algebra");
  std::vector<TripleDefect> defects;
  for (std::size_t i = 0; i < g0.dim; ++i)
    for (std::size_t j = i + 1; j < g0.dim; ++j)
      for (std::size_t k = j + 1; k < g0.dim; ++k) {
        Vec r = theta.eval(Vec::unit(g0.dim, i), g0.table[j][k]);
        r += theta.eval(Vec::unit(g0.dim, j), g0.table[k][i]);
        r += theta.eval(Vec::unit(g0.dim, k), g0.table[i][j]);
        if (!r.is_zero()) defects.push_back({i, j, k, std::move(r)});
      }
  return defects;
}

namespace {

// Leibniz residual of D on the pair (i, j).
Vec leibniz_residual(const StructureConstants& alg, const Mat& d, std::size_t i, std::size_t j) {
  Vec r = d * alg.table[i][j];
  r -= alg.product(d.column(i), Vec::unit(alg.dim, j));
  r -= alg.product(Vec::unit(alg.dim, i), d.column(j));
  return r;
}

}  // namespace

Cocycle cocycle_from_derivations(const StructureConstants& g0, const GramForm& b0,
                                 const std::vector<Mat>& ds) {
  for (std::size_t l = 0; l < ds.size(); ++l) {
    const Mat& d = ds[l];
    if (d.rows() != g0.dim || d.cols() != g0.dim)
      throw DimensionError("derivation matrix dimension mismatch");
    for (std::size_t i = 0; i < g0.dim; ++i)
      for (std::size_t j = 0; j < g0.dim; ++j) {
        Vec r = leibniz_residual(g0, d, i, j);
        if (!r.is_zero())
          throw ValidationError("D([x,y])=[D(x),y]+[x,D(y)]",
                                "derivation " + std::to_string(l + 1) + " fails Leibniz at (i=" +
                                    std::to_string(i) + ",j=" + std::to_string(j) +
                                    ") residual=" + vec_str(r));
        Rational s = b0.eval(d.column(i), Vec::unit(g0.dim, j)) +
                     b0.eval(Vec::unit(g0.dim, i), d.column(j));
        if (s != 0)
          throw ValidationError("B0(D(x),y)=-B0(x,D(y))",
                                "derivation " + std::to_string(l + 1) + " not B0-skew at (i=" +
                                    std::to_string(i) + ",j=" + std::to_string(j) +
                                    ") residual=" + rat_str(s));
      }
  }
  Cocycle theta = Cocycle::zero(g0.dim, ds.size());
  for (std::size_t i = 0; i < g0.dim; ++i)
    for (std::size_t j = 0; j < g0.dim; ++j) {
      Vec v(ds.size());
      for (std::size_t l = 0; l < ds.size(); ++l)
        v[l] = b0.eval(ds[l].column(i), Vec::unit(g0.dim, j));
      theta.values[i][j] = std::move(v);
    }
  theta.validate_shape();
  if (!check_cocycle(g0, theta).empty())
    throw MathInconsistencyError("cocycle built from skew derivations fails the cocycle identity");
  return theta;
}

std::vector<Mat> derivations_from_cocycle(const StructureConstants& g0, const GramForm& b0,
                                          const Cocycle& theta) {
  if (theta.dim_g0 != g0.dim) throw DimensionError("cocycle/algebra dimension mismatch");
  if (!is_nondegenerate(b0)) throw SingularFormError("derivations_from_cocycle needs non-degenerate B0");
  std::vector<Mat> ds;
  for (std::size_t l = 0; l < theta.dim_v; ++l) {
    Mat d(g0.dim, g0.dim);
    for (std::size_t i = 0; i < g0.dim; ++i) {
      Vec functional(g0.dim);
      for (std::size_t j = 0; j < g0.dim; ++j) functional[j] = theta.values[i][j][l];
      d.set_column(i, sharp(b0, functional));
    }
    ds.push_back(std::move(d));
  }
  return ds;
}

std::optional<Mat> is_coboundary(const StructureConstants& g0, const Cocycle& theta) {
  const std::size_t n = g0.dim, r = theta.dim_v;
  // Generators of the bracket image with their theta values.
  std::vector<Vec> gen_brackets;
  std::vector<Vec> gen_thetas;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g0.table[i][j].is_zero()) continue;
      gen_brackets.push_back(g0.table[i][j]);
      gen_thetas.push_back(theta.values[i][j]);
    }
  Mat tau(r, n);
  if (!gen_brackets.empty()) {
    const Mat gen_mat = Mat::from_columns(n, gen_brackets);
    const RrefResult image = rref(Mat::from_rows(n, gen_brackets));
    for (std::size_t t = 0; t < image.rank; ++t) {
      const Vec w = image.reduced.row(t);
      auto combo = solve(gen_mat, w);
      if (!combo) throw MathInconsistencyError("rref basis vector outside generator span");
      Vec value(r);
      for (std::size_t s = 0; s < gen_thetas.size(); ++s)
        if (combo->particular[s] != 0) value += combo->particular[s] * gen_thetas[s];
      // tau vanishes on the non-pivot coordinates, so tau(w_t) = tau(e_pivot).
      tau.set_column(image.pivots[t], value);
    }
  }
  // Defining property on all pairs; failure means theta is no coboundary.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(tau * g0.table[i][j] - theta.values[i][j]).is_zero()) return std::nullopt;
  return tau;
}

StructureConstants central_extend(const StructureConstants& g0, const Cocycle& theta) {
  if (theta.dim_g0 != g0.dim) throw DimensionError("cocycle/algebra dimension mismatch");
  theta.validate_shape();
  if (!check_cocycle(g0, theta).empty())
    throw ValidationError("theta(x,[y,z])+theta(y,[z,x])+theta(z,[x,y])=0",
                          "central_extend rejects a non-cocycle (the extension would fail Jacobi)");
  const std::size_t n = g0.dim, r = theta.dim_v, m = n + r;
  StructureConstants g = StructureConstants::zero(m);
  g.basis_names = g0.basis_names;
  for (std::size_t l = 0; l < r; ++l) g.basis_names.push_back("v" + std::to_string(l + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec value(m);
      for (std::size_t k = 0; k < n; ++k) value[k] = g0.table[i][j][k];
      for (std::size_t l = 0; l < r; ++l) value[n + l] = theta.values[i][j][l];
      g.table[i][j] = std::move(value);
    }
  return g;
}

CocycleRadicals cocycle_radicals(const StructureConstants& g0, const Cocycle& theta) {
  const std::size_t n = g0.dim, r = theta.dim_v;
  CocycleRadicals out{{}, Subspace(n)};
  Mat joint(n * r, n);
  for (std::size_t l = 0; l < r; ++l) {
    Mat pairing(n, n);  // row j, column i: theta_l(e_i, e_j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        pairing(j, i) = theta.values[i][j][l];
        joint(l * n + j, i) = theta.values[i][j][l];
      }
    out.per_component.push_back(Subspace::span(n, kernel_basis(pairing)));
  }
  out.joint = r == 0 ? Subspace::full(n) : Subspace::span(n, kernel_basis(joint));
  return out;
}

Subspace ExtensionBundle::v_subspace() const {
  std::vector<Vec> gens;
  for (std::size_t l = 0; l < dim_v(); ++l) gens.push_back(Vec::unit(g.dim, v_offset + l));
  return Subspace::span(g.dim, gens);
}

Subspace ExtensionBundle::g0_subspace() const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < g0.dim; ++i) gens.push_back(Vec::unit(g.dim, i));
  return Subspace::span(g.dim, gens);
}

Vec ExtensionBundle::embed_g0(const Vec& x) const {
  if (x.dim() != g0.dim) throw DimensionError("embed_g0 dimension mismatch");
  return concat(x, Vec(dim_v()));
}

Vec ExtensionBundle::embed_v(const Vec& u) const {
  if (u.dim() != dim_v()) throw DimensionError("embed_v dimension mismatch");
  return concat(Vec(g0.dim), u);
}

Vec ExtensionBundle::project_g0(const Vec& x) const {
  if (x.dim() != g.dim) throw DimensionError("project_g0 dimension mismatch");
  return x.head(g0.dim);
}

Vec ExtensionBundle::project_v(const Vec& x) const {
  if (x.dim() != g.dim) throw DimensionError("project_v dimension mismatch");
  return x.tail(dim_v());
}

namespace {

void check_form(CheckReport& rep, const std::string& label, const GramForm& form,
                const StructureConstants& alg) {
  rep.add(label + ": symmetric", form.gram == form.gram.transpose());
  rep.add(label + ": non-degenerate", det(form.gram) != 0);
  auto defects = check_invariant(alg, form);
  std::string detail;
  if (!defects.empty()) {
    const auto& d = defects.front();
    detail = "(i=" + std::to_string(d.i) + ",j=" + std::to_string(d.j) + ",k=" + std::to_string(d.k) +
             ") residual=" + rat_str(d.residual);
  }
  rep.add(label + "([x,y],z)=" + label + "(x,[y,z])", defects.empty(), detail);
}

std::string triple_detail(const std::vector<TripleDefect>& defects) {
  if (defects.empty()) return "";
  const auto& d = defects.front();
  return "(i=" + std::to_string(d.i) + ",j=" + std::to_string(d.j) + ",k=" + std::to_string(d.k) +
         ") residual=" + vec_str(d.residual);
}

}  // namespace

std::pair<ExtensionBundle, CheckReport> assemble_bundle(BundleInput in) {
  in.g0.validate_shape();
  in.theta.validate_shape();
  if (in.theta.dim_g0 != in.g0.dim) throw DimensionError("cocycle/g0 dimension mismatch");
  if (in.b0.dim != in.g0.dim) throw DimensionError("B0/g0 dimension mismatch");
  if (in.b.dim != in.g0.dim + in.theta.dim_v) throw DimensionError("B/g dimension mismatch");
  if (in.g) in.g->validate_shape();

  ExtensionBundle bundle;
  bundle.v_offset = in.g0.dim;
  bundle.g0 = std::move(in.g0);
  bundle.b0 = std::move(in.b0);
  bundle.theta = std::move(in.theta);
  bundle.b = std::move(in.b);

  CheckReport rep;
  auto g0_jac = jacobi_defect(bundle.g0);
  rep.add("g0: [[x,y],z]+[[y,z],x]+[[z,x],y]=0", g0_jac.empty(), triple_detail(g0_jac));
  if (!g0_jac.empty()) return {std::move(bundle), std::move(rep)};

  check_form(rep, "B0", bundle.b0, bundle.g0);
  if (!rep.all_pass()) return {std::move(bundle), std::move(rep)};

  auto coc = check_cocycle(bundle.g0, bundle.theta);
  rep.add("theta(x,[y,z])+theta(y,[z,x])+theta(z,[x,y])=0", coc.empty(), triple_detail(coc));
  if (!coc.empty()) return {std::move(bundle), std::move(rep)};

  const StructureConstants derived = central_extend(bundle.g0, bundle.theta);
  bundle.g = in.g ? std::move(*in.g) : derived;

  auto g_jac = jacobi_defect(bundle.g);
  rep.add("g: [[x,y],z]+[[y,z],x]+[[z,x],y]=0", g_jac.empty(), triple_detail(g_jac));
  if (!g_jac.empty()) return {std::move(bundle), std::move(rep)};

  check_form(rep, "B", bundle.b, bundle.g);
  if (!rep.all_pass()) return {std::move(bundle), std::move(rep)};

  bool agrees = derived.dim == bundle.g.dim;
  std::string agree_detail = agrees ? "" : "dimension mismatch";
  if (agrees) {
    for (std::size_t i = 0; i < bundle.g.dim && agrees; ++i)
      for (std::size_t j = 0; j < bundle.g.dim && agrees; ++j)
        if (!(derived.table[i][j] - bundle.g.table[i][j]).is_zero()) {
          agrees = false;
          agree_detail = "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ") differs";
        }
  }
  rep.add("[x+u,y+v]=[x,y]0+theta(x,y)", agrees, agree_detail);
  if (!agrees) return {std::move(bundle), std::move(rep)};

  rep.add("V⊆C(g)", center(bundle.g).contains(bundle.v_subspace()));
  return {std::move(bundle), std::move(rep)};
}

CheckReport validate_bundle(const ExtensionBundle& bundle) {
  BundleInput in{bundle.g0, bundle.b0, bundle.theta, bundle.b, bundle.g};
  return assemble_bundle(std::move(in)).second;
}

ExtensionBundle make_bundle(StructureConstants g0, GramForm b0, Cocycle theta, GramForm b,
                            const std::optional<StructureConstants>& g_supplied) {
  BundleInput in{std::move(g0), std::move(b0), std::move(theta), std::move(b), g_supplied};
  auto [bundle, rep] = assemble_bundle(std::move(in));
  if (const CheckItem* fail = rep.first_failure())
    throw ValidationError(fail->anchor,
                          "bundle validation failed at \"" + fail->anchor + "\" " + fail->detail);
  return bundle;
}

}  // namespace homlie
