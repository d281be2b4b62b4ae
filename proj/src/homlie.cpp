#include "homlie/homlie.hpp"

#include "homlie/errors.hpp"

namespace homlie {

std::vector<TripleDefect> check_twisted_jacobi(const StructureConstants& mu, const Mat& alpha) {
  if (alpha.rows() != mu.dim || alpha.cols() != mu.dim)
    throw DimensionError("twist map dimension mismatch");
  std::vector<TripleDefect> defects;
  std::vector<Vec> twisted;
  twisted.reserve(mu.dim);
  for (std::size_t i = 0; i < mu.dim; ++i) twisted.push_back(alpha.column(i));
  for (std::size_t i = 0; i < mu.dim; ++i)
    for (std::size_t j = i + 1; j < mu.dim; ++j)
      for (std::size_t k = j + 1; k < mu.dim; ++k) {
        Vec r = mu.product(twisted[i], mu.table[j][k]);
        r += mu.product(twisted[j], mu.table[k][i]);
        r += mu.product(twisted[k], mu.table[i][j]);
        if (!r.is_zero()) defects.push_back({i, j, k, std::move(r)});
      }
  return defects;
}

std::vector<TripleDefect> check_twisted_jacobi(const HomLieStructure& hl) {
  return check_twisted_jacobi(hl.mu, hl.alpha);
}

HomLieStructure make_homlie(StructureConstants mu, Mat alpha, bool candidate) {
  mu.validate_shape();
  if (!mu.skew) throw PreconditionError("Hom-Lie product must be skew");
  HomLieStructure hl{std::move(mu), std::move(alpha), candidate};
  if (!candidate) {
    auto defects = check_twisted_jacobi(hl);
    if (!defects.empty()) {
      const auto& d = defects.front();
      throw ValidationError("mu(alpha(x),mu(y,z))+cyclic=0",
                            "twisted Jacobi fails at (i=" + std::to_string(d.i) +
                                ",j=" + std::to_string(d.j) + ",k=" + std::to_string(d.k) +
                                ") residual=" + vec_str(d.residual));
    }
  }
  return hl;
}

HKPair compute_hk(const ExtensionBundle& bundle) {
  const std::size_t n = bundle.g0.dim, m = bundle.g.dim, r = m - n;
  if (!is_nondegenerate(bundle.b0) || !is_nondegenerate(bundle.b))
    throw SingularFormError("compute_hk requires non-degenerate metrics");

  Mat dual_restrict(n, m);  // iota^*: functionals on g -> functionals on g0
  for (std::size_t i = 0; i < n; ++i) dual_restrict(i, i) = 1;

  const Mat g0_sharp = inverse(bundle.b0.gram.transpose());
  const Mat g_sharp = inverse(bundle.b.gram.transpose());

  HKPair pair;
  pair.h = g0_sharp * dual_restrict * bundle.b.gram.transpose();
  pair.k = g_sharp * dual_restrict.transpose() * bundle.b0.gram.transpose();

  pair.t = Mat(n, n);
  pair.r = Mat(r, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) pair.t(i, j) = pair.k(i, j);
    for (std::size_t l = 0; l < r; ++l) pair.r(l, j) = pair.k(n + l, j);
  }
  for (std::size_t l = 0; l < r; ++l) pair.a_elems.push_back(sharp(bundle.b0, pair.r.row(l)));

  if (!(pair.h * pair.k).is_identity())
    throw MathInconsistencyError("h k != Id on a validated bundle");
  // k(x) = T(x) + sum_i B0(a_i, x) v_i, reproduced exactly.
  for (std::size_t j = 0; j < n; ++j) {
    Vec expect = concat(pair.t.column(j), Vec(r));
    for (std::size_t l = 0; l < r; ++l)
      expect[n + l] += bundle.b0.eval(pair.a_elems[l], Vec::unit(n, j));
    if (!(expect - pair.k.column(j)).is_zero())
      throw MathInconsistencyError("k(x) != T(x) + sum B0(a_i,x) v_i");
  }
  return pair;
}

namespace {

// rho(x)(y) = h([x, y]) for x in g (one matrix per basis vector of g).
std::vector<Mat> rho_tables(const ExtensionBundle& bundle, const HKPair& pair) {
  const std::size_t n = bundle.g0.dim, m = bundle.g.dim;
  std::vector<Mat> tables;
  tables.reserve(m);
  for (std::size_t u = 0; u < m; ++u) {
    Mat rx(n, n);
    for (std::size_t y = 0; y < n; ++y) rx.set_column(y, pair.h * bundle.g.table[u][y]);
    tables.push_back(std::move(rx));
  }
  return tables;
}

Mat rho_of(const std::vector<Mat>& tables, const Vec& x) {
  Mat out(tables.front().rows(), tables.front().cols());
  for (std::size_t u = 0; u < x.dim(); ++u)
    if (x[u] != 0) out += x[u] * tables[u];
  return out;
}

Subspace column_span(const Mat& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.rows(), cols);
}

std::string pair_detail(std::size_t i, std::size_t j, const Vec& residual) {
  return "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ") residual=" + vec_str(residual);
}

}  // namespace

CheckReport hk_diagnostics(const ExtensionBundle& bundle, const HKPair& pair) {
  CheckReport rep;
  const std::size_t n = bundle.g0.dim, m = bundle.g.dim, r = m - n;
  const auto& g = bundle.g;
  const auto& g0 = bundle.g0;

  rep.add("h∘k=Id", (pair.h * pair.k).is_identity());

  {
    bool ok = true;
    std::string detail;
    for (std::size_t u = 0; u < m && ok; ++u)
      for (std::size_t y = 0; y < n && ok; ++y) {
        Rational lhs = bundle.b.eval(Vec::unit(m, u), bundle.embed_g0(Vec::unit(n, y)));
        Rational rhs = bundle.b0.eval(pair.h.column(u), Vec::unit(n, y));
        if (lhs != rhs) {
          ok = false;
          detail = pair_detail(u, y, Vec(std::vector<Rational>{lhs - rhs}));
        }
      }
    rep.add("B(x+v,y)=B0(h(x+v),y)", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t u = 0; u < m && ok; ++u) {
        Rational lhs = bundle.b0.eval(Vec::unit(n, x), bundle.project_g0(Vec::unit(m, u)));
        Rational rhs = bundle.b.eval(pair.k.column(x), Vec::unit(m, u));
        if (lhs != rhs) {
          ok = false;
          detail = pair_detail(x, u, Vec(std::vector<Rational>{lhs - rhs}));
        }
      }
    rep.add("B0(x,y)=B(k(x),y+v)", ok, detail);
  }

  const Subspace ker_h = Subspace::span(m, kernel_basis(pair.h));
  const Subspace g0_perp = orthogonal_complement(bundle.b, bundle.g0_subspace());
  rep.add("Ker(h)=g0^⊥", ker_h == g0_perp);

  const Subspace im_k = column_span(pair.k);
  const Subspace v_perp = orthogonal_complement(bundle.b, bundle.v_subspace());
  rep.add("Im(k)=V^⊥", im_k == v_perp);

  rep.add("g=Ker(h)⊕Im(k)",
          ker_h.dim() + im_k.dim() == m && ker_h.intersect(im_k).is_zero());

  {
    bool ok = true;
    std::string detail;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        Vec lhs = pair.k * g0.table[x][y];
        Vec rhs = g.product(pair.k.column(x), bundle.embed_g0(Vec::unit(n, y)));
        if (!(lhs - rhs).is_zero()) {
          ok = false;
          detail = pair_detail(x, y, lhs - rhs);
        }
      }
    rep.add("k([x,y]0)=[k(x),y]", ok, detail);
  }

  {
    bool centroid_ok = true, symmetric_ok = true;
    for (std::size_t x = 0; x < n; ++x) {
      const Mat adx = ad(g0, Vec::unit(n, x));
      const Mat ad_tx = ad(g0, pair.t.column(x));
      if (!(pair.t * adx - ad_tx).is_zero()) centroid_ok = false;
      for (std::size_t y = 0; y < n; ++y)
        if (bundle.b0.eval(pair.t.column(x), Vec::unit(n, y)) !=
            bundle.b0.eval(Vec::unit(n, x), pair.t.column(y)))
          symmetric_ok = false;
    }
    rep.add("T∘ad(x)=ad(T(x))", centroid_ok);
    rep.add("B0(T(x),y)=B0(x,T(y))", symmetric_ok);
  }

  rep.add("Ker(T)⊆C(g0)", center(g0).contains(Subspace::span(n, kernel_basis(pair.t))));

  // Orthogonal-basis witness: a_i + w_i in g0^⊥ with B(a_i + w_i, v_j) = d_ij.
  {
    bool ok = true;
    std::vector<Vec> elems;
    for (std::size_t i = 0; i < r && ok; ++i) {
      Mat sys(m, r);
      Vec rhs(m);
      const Vec a_emb = bundle.embed_g0(pair.a_elems[i]);
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t l = 0; l < r; ++l)
          sys(p, l) = bundle.b.eval(Vec::unit(m, n + l), Vec::unit(m, p));
        rhs[p] = -bundle.b.eval(a_emb, Vec::unit(m, p));
      }
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t l = 0; l < r; ++l)
          sys(n + j, l) = bundle.b.eval(Vec::unit(m, n + l), Vec::unit(m, n + j));
        rhs[n + j] = Rational(i == j ? 1 : 0) - bundle.b.eval(a_emb, Vec::unit(m, n + j));
      }
      auto sol = solve(sys, rhs);
      if (!sol) {
        ok = false;
        break;
      }
      elems.push_back(a_emb + bundle.embed_v(sol->particular));
    }
    if (ok) ok = Subspace::span(m, elems) == g0_perp;
    rep.add("basis {a_i+w_i} of g0^⊥ with B(a_i+w_i,v_j)=δ_ij", ok);
  }

  const std::vector<Mat> rhos = rho_tables(bundle, pair);
  const std::vector<Mat> ds = derivations_from_cocycle(g0, bundle.b0, bundle.theta);

  {
    bool ok = true;
    std::string detail;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < m && ok; ++y)
        for (std::size_t z = 0; z < m && ok; ++z) {
          Vec lhs = pair.h * g.product(bundle.embed_g0(Vec::unit(n, x)), g.table[y][z]);
          Vec rhs = g0.product(Vec::unit(n, x), pair.h * g.table[y][z]);
          if (!(lhs - rhs).is_zero()) {
            ok = false;
            detail = "(x=" + std::to_string(x) + ",y=" + std::to_string(y) +
                     ",z=" + std::to_string(z) + ")";
          }
        }
    rep.add("h([x,[y,z]])=[x,h([y,z])]0", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        const Mat rx = rhos[x], ry = rhos[y];
        const Mat lhs = rho_of(rhos, g.product(Vec::unit(m, x), Vec::unit(m, y)));
        const Mat rhs = rx * pair.t * ry - ry * pair.t * rx;
        if (!(lhs - rhs).is_zero()) {
          ok = false;
          detail = "(x=" + std::to_string(x) + ",y=" + std::to_string(y) + ")";
        }
      }
    rep.add("ρ([x,y])=ρ(x)∘T∘ρ(y)−ρ(y)∘T∘ρ(x)", ok, detail);
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      ok = (rho_of(rhos, bundle.embed_g0(pair.a_elems[i])) == ds[i]);
    rep.add("ρ(a_i)=D_i", ok);
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      // D_i extended to g by zero on V against the centralizer of a_i in g.
      Mat ext(m, m);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) ext(p, q) = ds[i](p, q);
      const Subspace ker_d = Subspace::span(m, kernel_basis(ext));
      const Subspace centralizer =
          Subspace::span(m, kernel_basis(ad(g, bundle.embed_g0(pair.a_elems[i]))));
      ok = (ker_d == centralizer);
    }
    rep.add("Ker(D_i)={x:[a_i,x]=0}", ok);
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t u = 0; u < m && ok; ++u) {
      Vec lhs = bundle.project_g0(Vec::unit(m, u));
      Vec rhs = pair.t * (pair.h * Vec::unit(m, u));
      for (std::size_t i = 0; i < r; ++i)
        rhs += bundle.b.eval(Vec::unit(m, u), Vec::unit(m, n + i)) * pair.a_elems[i];
      if (!(lhs - rhs).is_zero()) {
        ok = false;
        detail = "(u=" + std::to_string(u) + ") residual=" + vec_str(lhs - rhs);
      }
    }
    rep.add("x=T(h(x+v))+ΣB(x+v,v_i)a_i", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t x = 0; x < n && ok; ++x) {
      const Mat adx = ad(g0, Vec::unit(n, x));
      if (!(pair.t * rhos[x] - adx).is_zero() || !(rhos[x] * pair.t - adx).is_zero()) {
        ok = false;
        detail = "(x=" + std::to_string(x) + ")";
      }
    }
    rep.add("T∘ρ(x)=ρ(x)∘T=ad0(x)", ok, detail);
  }

  {
    bool ok = true;
    if (pair.t.is_zero()) {
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) ok = g0.table[i][j].is_zero();
    }
    rep.add("Im(T)=0⇒g0 abelian", ok);
  }

  return rep;
}

std::vector<Mat> rho(const ExtensionBundle& bundle, const HKPair& pair) {
  const std::size_t n = bundle.g0.dim, m = bundle.g.dim;
  std::vector<Mat> tables = rho_tables(bundle, pair);
  for (std::size_t u = 0; u < m; ++u) {
    const Mat& rx = tables[u];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec leib = rx * bundle.g0.table[i][j];
        leib -= bundle.g0.product(rx.column(i), Vec::unit(n, j));
        leib -= bundle.g0.product(Vec::unit(n, i), rx.column(j));
        if (!leib.is_zero())
          throw ValidationError("ρ(x)∈Der(g0)",
                                "rho of basis vector " + std::to_string(u) + " fails Leibniz");
        if (bundle.b0.eval(rx.column(i), Vec::unit(n, j)) +
                bundle.b0.eval(Vec::unit(n, i), rx.column(j)) !=
            0)
          throw ValidationError("ρ(x)∈o_B0(g0)",
                                "rho of basis vector " + std::to_string(u) + " is not B0-skew");
      }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Mat lhs = rho_of(tables, bundle.g.product(Vec::unit(m, x), Vec::unit(m, y)));
      const Mat rhs = tables[x] * pair.t * tables[y] - tables[y] * pair.t * tables[x];
      if (!(lhs - rhs).is_zero())
        throw ValidationError("ρ([x,y])=ρ(x)∘T∘ρ(y)−ρ(y)∘T∘ρ(x)",
                              "composition identity fails at (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")");
    }
  return tables;
}

StructureConstants build_mu(const ExtensionBundle& bundle, const HKPair& pair) {
  const std::size_t m = bundle.g.dim;
  StructureConstants mu = StructureConstants::zero(m);
  mu.basis_names = bundle.g.basis_names;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      mu.table[i][j] = bundle.embed_g0(pair.h * bundle.g.table[i][j]);
  // k(mu(x,y)) = [x,y]: uniqueness of the factorization through k.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!(pair.k * bundle.project_g0(mu.table[i][j]) - bundle.g.table[i][j]).is_zero())
        throw MathInconsistencyError("k(mu(x,y)) != [x,y] at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
      if (i >= bundle.v_offset && !mu.table[i][j].is_zero())
        throw MathInconsistencyError("mu(V, g) != 0");
    }
  return mu;
}

HomLieStructure build_alpha(const ExtensionBundle& bundle, const HKPair& pair) {
  const std::size_t n = bundle.g0.dim, m = bundle.g.dim;
  Mat alpha(m, m);
  for (std::size_t j = 0; j < n; ++j) alpha.set_column(j, bundle.embed_g0(pair.t.column(j)));
  for (std::size_t l = n; l < m; ++l) alpha(l, l) = 1;
  return make_homlie(build_mu(bundle, pair), std::move(alpha));
}

HomLieStructure build_alpha_prime(const ExtensionBundle& bundle, const HKPair& pair) {
  const std::size_t n = bundle.g0.dim, m = bundle.g.dim;
  Mat alpha(m, m);
  for (std::size_t j = 0; j < n; ++j) alpha.set_column(j, pair.k.column(j));
  StructureConstants mu = build_mu(bundle, pair);

  auto fail = [](const std::string& anchor, std::size_t i, std::size_t j) {
    throw ValidationError(anchor, "fails at (i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")");
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec bij = bundle.g.table[i][j];
      if (!(alpha * bij - bundle.g.product(alpha.column(i), Vec::unit(m, j))).is_zero())
        fail("α'([x,y])=[α'(x),y]", i, j);
      if (bundle.b.eval(alpha.column(i), Vec::unit(m, j)) !=
          bundle.b.eval(Vec::unit(m, i), alpha.column(j)))
        fail("B(α'(x),y)=B(x,α'(y))", i, j);
      if (!(alpha * mu.table[i][j] - bij).is_zero()) fail("α'(μ(x,y))=[x,y]", i, j);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = mu.product(alpha.column(i), Vec::unit(m, j));
      if (!(lhs - bundle.embed_g0(bundle.g0.table[i][j])).is_zero())
        fail("μ(α'(x),y)=[x,y]0", i, j);
    }
  return make_homlie(std::move(mu), std::move(alpha));
}

HomLieStructure restrict_homlie(const ExtensionBundle& bundle, const HKPair& pair) {
  const std::size_t n = bundle.g0.dim;
  StructureConstants mu0 = StructureConstants::zero(n);
  mu0.basis_names = bundle.g0.basis_names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mu0.table[i][j] = pair.h * bundle.g.table[i][j];

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (bundle.b0.eval(pair.t.column(i), Vec::unit(n, j)) !=
          bundle.b0.eval(Vec::unit(n, i), pair.t.column(j)))
        throw ValidationError("B0(α0(x),y)=B0(x,α0(y))",
                              "fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (!check_invariant(mu0, bundle.b0).empty())
    throw ValidationError("B0(μ0(x,y),z)=B0(x,μ0(y,z))", "mu0-invariance of B0 fails");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec expect = bundle.g0.table[i][j];
      if (!(pair.t * mu0.table[i][j] - expect).is_zero() ||
          !(mu0.product(pair.t.column(i), Vec::unit(n, j)) - expect).is_zero())
        throw ValidationError("α0(μ0(x,y))=μ0(α0(x),y)=[x,y]0",
                              "fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return make_homlie(std::move(mu0), pair.t);
}

HomLieStructure build_from_hk(const StructureConstants& g0, const Cocycle& theta, const Mat& h,
                              const Mat& k, const Mat& sigma) {
  const std::size_t n = g0.dim, r = theta.dim_v, m = n + r;
  if (h.rows() != n || h.cols() != m) throw DimensionError("h must be dim_g0 x dim_g");
  if (k.rows() != m || k.cols() != n) throw DimensionError("k must be dim_g x dim_g0");
  if (sigma.rows() != r || sigma.cols() != m) throw DimensionError("sigma must be dim_v x dim_g");
  const StructureConstants g = central_extend(g0, theta);

  auto embed_g0 = [&](const Vec& x) { return concat(x, Vec(r)); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(k * g0.table[i][j] - g.product(k.column(i), embed_g0(Vec::unit(n, j)))).is_zero())
        throw PreconditionError("k([x,y]0)=[k(x),y] fails at (i=" + std::to_string(i) +
                                ",j=" + std::to_string(j) + ")");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!(k * (h * g.table[i][j]) - g.table[i][j]).is_zero())
        throw PreconditionError("k(h([x,y]))=[x,y] fails at (i=" + std::to_string(i) +
                                ",j=" + std::to_string(j) + ")");

  StructureConstants mu = StructureConstants::zero(m);
  mu.basis_names = g.basis_names;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mu.table[i][j] = embed_g0(h * g.table[i][j]);

  // alpha = alpha_0 pi + sigma with alpha_0 = pi k.
  Mat alpha(m, m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) alpha(i, j) = k(i, j);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < r; ++l) alpha(n + l, j) += sigma(l, j);

  HomLieStructure hl = make_homlie(std::move(mu), std::move(alpha));

  bool sigma_vanishes_on_g0 = true;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < r; ++l)
      if (sigma(l, j) != 0) sigma_vanishes_on_g0 = false;
  if (sigma_vanishes_on_g0) {
    std::vector<Vec> g0_gens, v_gens;
    for (std::size_t i = 0; i < n; ++i) g0_gens.push_back(Vec::unit(m, i));
    for (std::size_t l = 0; l < r; ++l) v_gens.push_back(Vec::unit(m, n + l));
    if (!check_homlie_ideal(hl, Subspace::span(m, g0_gens)).is_ideal ||
        !check_homlie_ideal(hl, Subspace::span(m, v_gens)).is_ideal)
      throw MathInconsistencyError("sigma|g0 = 0 but g0 is not an ideal and direct summand");
  }
  return hl;
}

IdealCheck check_homlie_ideal(const HomLieStructure& hl, const Subspace& sub) {
  const std::size_t m = hl.dim();
  if (sub.ambient_dim() != m) throw DimensionError("subspace ambient dimension mismatch");
  bool alpha_stable = true;
  for (const Vec& u : sub.basis())
    if (!sub.contains(hl.alpha * u)) alpha_stable = false;
  bool closed = true;
  for (const Vec& u : sub.basis())
    for (const Vec& v : sub.basis())
      if (!sub.contains(hl.mu.product(u, v))) closed = false;
  bool absorbs = true;
  for (const Vec& u : sub.basis())
    for (std::size_t w = 0; w < m; ++w)
      if (!sub.contains(hl.mu.product(u, Vec::unit(m, w)))) absorbs = false;
  return {closed && alpha_stable, absorbs && alpha_stable};
}

CheckReport structure_diagnostics(const ExtensionBundle& bundle, const HKPair& pair,
                                  const HomLieStructure& hl) {
  CheckReport rep;
  const std::size_t n = bundle.g0.dim;
  const std::vector<Mat> ds = derivations_from_cocycle(bundle.g0, bundle.b0, bundle.theta);
  bool some_not_inner = false;
  for (const Mat& d : ds)
    if (!is_inner(bundle.g0, d)) some_not_inner = true;
  rep.add_hypothesis(
      "hypothesis: some D_i not inner", some_not_inner,
      some_not_inner ? "" : "every derivation of the cocycle is inner; conclusions not asserted");
  if (!some_not_inner) return rep;

  const Subspace v_sub = bundle.v_subspace();
  const Subspace g0_sub = bundle.g0_subspace();
  rep.add("C(g)=V", center(bundle.g) == v_sub);
  rep.add("C_mu(g)=V", center(hl.mu) == v_sub);
  const Subspace full = Subspace::full(bundle.g.dim);
  rep.add("μ(g,g)=g0", product_span(hl.mu, full, full) == g0_sub);
  rep.add("μ(g0,g0)=g0", product_span(hl.mu, g0_sub, g0_sub) == g0_sub);
  rep.add("C(g0)=Ker(T)", center(bundle.g0) == Subspace::span(n, kernel_basis(pair.t)));
  rep.add("[g0,g0]0=Im(T)",
          product_span(bundle.g0, Subspace::full(n), Subspace::full(n)) == column_span(pair.t));

  const CocycleRadicals rads = cocycle_radicals(bundle.g0, bundle.theta);
  Subspace ker_meet = Subspace::full(n);
  for (const Mat& d : ds) ker_meet = ker_meet.intersect(Subspace::span(n, kernel_basis(d)));
  rep.add("∩Rad(θ_l)=0", rads.joint.is_zero() && rads.joint == ker_meet);
  return rep;
}

ProjectionReport lemma42_projections(const ExtensionBundle& bundle, const HKPair& pair) {
  const std::size_t n = bundle.g0.dim, m = bundle.g.dim, r = m - n;
  if (!is_isotropic(bundle.b, bundle.v_subspace()))
    throw PreconditionError("V is not isotropic for B");

  Mat h0(n, n);  // h restricted to the g0 block
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) h0(i, j) = pair.h(i, j);

  ProjectionReport out{pair.t * h0,
                       h0 * pair.t,
                       column_span(pair.t),
                       Subspace::span(n, kernel_basis(pair.t)),
                       Subspace::span(n, pair.a_elems),
                       Subspace(n),
                       {}};
  out.a_perp = orthogonal_complement(bundle.b0, out.a_span);
  CheckReport& rep = out.checks;

  rep.add("E²=E", out.e * out.e == out.e);
  rep.add("F²=F", out.f * out.f == out.f);
  rep.add("g0=Im(α0)⊕𝔞", column_span(out.e) == out.im_alpha0 &&
                             Subspace::span(n, kernel_basis(out.e)) == out.a_span &&
                             out.im_alpha0.dim() + out.a_span.dim() == n &&
                             out.im_alpha0.intersect(out.a_span).is_zero());
  rep.add("g0=Ker(α0)⊕𝔞^⊥", Subspace::span(n, kernel_basis(out.f)) == out.ker_alpha0 &&
                                column_span(out.f) == out.a_perp &&
                                out.ker_alpha0.dim() + out.a_perp.dim() == n &&
                                out.ker_alpha0.intersect(out.a_perp).is_zero());
  rep.add("{a_i} linearly independent", out.a_span.dim() == r);

  std::vector<Vec> hv;
  for (std::size_t l = 0; l < r; ++l) hv.push_back(pair.h.column(n + l));
  const Subspace hv_span = Subspace::span(n, hv);
  rep.add("{h(v_i)} linearly independent", hv_span.dim() == r);
  rep.add("h|V:V→Ker(α0) bijective", hv_span.dim() == r && hv_span == out.ker_alpha0);
  rep.add("r=dim Ker(α0)", out.ker_alpha0.dim() == r);

  {
    bool ok = true;
    for (const Vec& u : out.im_alpha0.basis())
      for (std::size_t l = 0; l < r && ok; ++l)
        if (bundle.b.eval(bundle.embed_g0(u), Vec::unit(m, n + l)) != 0) ok = false;
    rep.add("B(Im(α0),V)=0", ok);
  }

  rep.add("α0=α0∘h∘α0", pair.t * h0 * pair.t == pair.t);

  {
    bool ok = true;
    std::string detail;
    for (std::size_t x = 0; x < n && ok; ++x) {
      Vec rhs = out.f.column(x);
      for (std::size_t i = 0; i < r; ++i)
        rhs += bundle.b0.eval(pair.a_elems[i], Vec::unit(n, x)) * hv[i];
      if (!(Vec::unit(n, x) - rhs).is_zero()) {
        ok = false;
        detail = "(x=" + std::to_string(x) + ")";
      }
    }
    rep.add("x=F(x)+ΣB0(a_i,x)h(v_i)", ok, detail);
  }

  {
    bool ok = true;
    for (const Vec& a : out.a_span.basis())
      if (!out.ker_alpha0.contains(h0 * a)) ok = false;
    rep.add("h(𝔞)⊆Ker(α0)", ok);
  }

  // g0 as a central extension of a^⊥ by Ker(α0): the kernel must be central
  // and the quotient bracket on a^⊥ must satisfy Jacobi.
  {
    const bool central = center(bundle.g0).contains(out.ker_alpha0);
    bool quotient_lie = central;
    const std::size_t s = out.a_perp.dim();
    if (central && out.ker_alpha0.dim() + s == n) {
      std::vector<Vec> cols;
      for (const Vec& q : out.a_perp.basis()) cols.push_back(q);
      for (const Vec& z : out.ker_alpha0.basis()) cols.push_back(z);
      const Mat basis_change = inverse(Mat::from_columns(n, cols));
      StructureConstants quotient = StructureConstants::zero(s);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
          const Vec br = bundle.g0.product(out.a_perp.basis()[i], out.a_perp.basis()[j]);
          quotient.table[i][j] = (basis_change * br).head(s);
        }
      quotient_lie = jacobi_defect(quotient).empty();
    }
    rep.add("g0 is a central extension of 𝔞^⊥ by Ker(α0)", central && quotient_lie);
  }

  return out;
}

}  // namespace homlie
