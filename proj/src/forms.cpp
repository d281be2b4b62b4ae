#include "homlie/forms.hpp"

#include "homlie/errors.hpp"

namespace homlie {

std::vector<InvarianceDefect> check_invariant(const StructureConstants& alg, const GramForm& form) {
  if (form.dim != alg.dim) throw DimensionError("form/algebra dimension mismatch");
  std::vector<InvarianceDefect> defects;
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j)
      for (std::size_t k = 0; k < alg.dim; ++k) {
        Rational lhs = form.eval(alg.table[i][j], Vec::unit(alg.dim, k));
        Rational rhs = form.eval(Vec::unit(alg.dim, i), alg.table[j][k]);
        if (lhs != rhs) defects.push_back({i, j, k, lhs - rhs});
      }
  return defects;
}

bool is_nondegenerate(const GramForm& form) { return det(form.gram) != 0; }

Vec flat(const GramForm& form, const Vec& x) {
  if (x.dim() != form.dim) throw DimensionError("flat dimension mismatch");
  return form.gram.transpose() * x;
}

Vec sharp(const GramForm& form, const Vec& functional) {
  if (functional.dim() != form.dim) throw DimensionError("sharp dimension mismatch");
  auto sol = solve(form.gram.transpose(), functional);
  if (!sol || !sol->homogeneous.empty()) throw SingularFormError("sharp of a degenerate form");
  return sol->particular;
}

namespace {

// Columns index End(g) in column-major vectorization.
std::vector<Mat> matrices_from_kernel(const Mat& constraints, std::size_t n) {
  std::vector<Mat> basis;
  for (const Vec& v : kernel_basis(constraints)) basis.push_back(Mat::unvectorize(v, n, n));
  return basis;
}

// Rows expressing the Leibniz identity D(e_i e_j) = D(e_i) e_j + e_i D(e_j)
// as linear constraints on vec(D).
void append_leibniz_rows(const StructureConstants& alg, std::vector<Vec>& rows) {
  const std::size_t n = alg.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // coefficient of D_{p,q} in component k of the residual
      // D(c_{ij}) - [D e_i, e_j] - [e_i, D e_j]
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(n * n);
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            Rational c(0);
            if (p == k) c += alg.table[i][j][q];         // D applied to the product
            c -= alg.table[p][j][k] * (q == i ? 1 : 0);  // product(D e_i, e_j)
            c -= alg.table[i][p][k] * (q == j ? 1 : 0);  // product(e_i, D e_j)
            row[q * n + p] = c;
          }
        rows.push_back(std::move(row));
      }
    }
}

void append_b_skew_rows(const GramForm& form, std::vector<Vec>& rows) {
  // D^T G + G D = 0, entrywise in vec(D).
  const std::size_t n = form.dim;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec row(n * n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          row[q * n + p] = form.gram(p, b) * (q == a ? 1 : 0) + form.gram(a, p) * (b == q ? 1 : 0);
      rows.push_back(std::move(row));
    }
}

void append_b_symmetric_rows(const GramForm& form, std::vector<Vec>& rows) {
  // T^T G - G T = 0.
  const std::size_t n = form.dim;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec row(n * n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          row[q * n + p] = form.gram(p, b) * (q == a ? 1 : 0) - form.gram(a, p) * (b == q ? 1 : 0);
      rows.push_back(std::move(row));
    }
}

void append_centroid_rows(const StructureConstants& alg, std::vector<Vec>& rows) {
  // T(product(e_i, e_j)) = product(T e_i, e_j), i.e. component k of
  // T c_{ij} - sum_p T_{p,i} c_{pj} vanishes.
  const std::size_t n = alg.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(n * n);
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            Rational c(0);
            if (p == k) c += alg.table[i][j][q];
            c -= alg.table[p][j][k] * (q == i ? 1 : 0);
            row[q * n + p] = c;
          }
        rows.push_back(std::move(row));
      }
}

}  // namespace

std::vector<Mat> derivation_space(const StructureConstants& alg) {
  std::vector<Vec> rows;
  append_leibniz_rows(alg, rows);
  return matrices_from_kernel(Mat::from_rows(alg.dim * alg.dim, rows), alg.dim);
}

std::vector<Mat> skew_derivation_space(const StructureConstants& alg, const GramForm& form) {
  if (form.dim != alg.dim) throw DimensionError("form/algebra dimension mismatch");
  std::vector<Vec> rows;
  append_leibniz_rows(alg, rows);
  append_b_skew_rows(form, rows);
  return matrices_from_kernel(Mat::from_rows(alg.dim * alg.dim, rows), alg.dim);
}

std::vector<Mat> centroid(const StructureConstants& alg) {
  std::vector<Vec> rows;
  append_centroid_rows(alg, rows);
  return matrices_from_kernel(Mat::from_rows(alg.dim * alg.dim, rows), alg.dim);
}

std::vector<Mat> symmetric_centroid(const StructureConstants& alg, const GramForm& form) {
  if (form.dim != alg.dim) throw DimensionError("form/algebra dimension mismatch");
  std::vector<Vec> rows;
  append_centroid_rows(alg, rows);
  append_b_symmetric_rows(form, rows);
  return matrices_from_kernel(Mat::from_rows(alg.dim * alg.dim, rows), alg.dim);
}

bool is_invertible_member(const Mat& t) { return t.rows() == t.cols() && det(t) != 0; }

std::optional<Vec> is_inner(const StructureConstants& alg, const Mat& d) {
  if (d.rows() != alg.dim || d.cols() != alg.dim) throw DimensionError("is_inner dimension mismatch");
  // ad(a) = D as a linear system in a: rows (j, k), columns i.
  const std::size_t n = alg.dim;
  Mat sys(n * n, n);
  Vec rhs(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) sys(j * n + k, i) = alg.table[i][j][k];
      rhs[j * n + k] = d(k, j);
    }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::vector<GramForm> invariant_form_space(const StructureConstants& alg) {
  // Unknowns: g_{pq} for p <= q (symmetric form).
  const std::size_t n = alg.dim;
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) unknowns.emplace_back(p, q);
  auto index_of = [&](std::size_t p, std::size_t q) {
    if (p > q) std::swap(p, q);
    return p * n + q - p * (p + 1) / 2;
  };
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // B(c_{ij}, e_k) - B(e_i, c_{jk}) = 0
        Vec row(unknowns.size());
        for (std::size_t m = 0; m < n; ++m) {
          if (alg.table[i][j][m] != 0) row[index_of(m, k)] += alg.table[i][j][m];
          if (alg.table[j][k][m] != 0) row[index_of(i, m)] -= alg.table[j][k][m];
        }
        if (!row.is_zero()) rows.push_back(std::move(row));
      }
  std::vector<Vec> coords;
  if (rows.empty()) {
    for (std::size_t t = 0; t < unknowns.size(); ++t) coords.push_back(Vec::unit(unknowns.size(), t));
  } else {
    coords = kernel_basis(Mat::from_rows(unknowns.size(), rows));
  }
  std::vector<GramForm> basis;
  for (const Vec& c : coords) {
    Mat gram(n, n);
    for (std::size_t t = 0; t < unknowns.size(); ++t) {
      auto [p, q] = unknowns[t];
      gram(p, q) = c[t];
      gram(q, p) = c[t];
    }
    basis.push_back(GramForm::from_gram(std::move(gram)));
  }
  return basis;
}

bool is_isotropic(const GramForm& form, const Subspace& sub) {
  for (const Vec& u : sub.basis())
    for (const Vec& v : sub.basis())
      if (form.eval(u, v) != 0) return false;
  return true;
}

std::optional<GramForm> find_metric_isotropic(const StructureConstants& alg, const Subspace& sub,
                                              long search_bound) {
  const std::vector<GramForm> inv = invariant_form_space(alg);
  if (inv.empty()) return std::nullopt;
  // Isotropy is linear in the coordinates over the invariant basis.
  std::vector<Vec> rows;
  for (const Vec& u : sub.basis())
    for (const Vec& v : sub.basis()) {
      Vec row(inv.size());
      for (std::size_t t = 0; t < inv.size(); ++t) row[t] = inv[t].eval(u, v);
      if (!row.is_zero()) rows.push_back(std::move(row));
    }
  std::vector<Vec> coords;
  if (rows.empty()) {
    for (std::size_t t = 0; t < inv.size(); ++t) coords.push_back(Vec::unit(inv.size(), t));
  } else {
    coords = kernel_basis(Mat::from_rows(inv.size(), rows));
  }
  if (coords.empty()) return std::nullopt;

  const std::size_t m = coords.size();
  std::vector<GramForm> constrained;
  for (const Vec& c : coords) {
    Mat gram(alg.dim, alg.dim);
    for (std::size_t t = 0; t < inv.size(); ++t)
      if (c[t] != 0) gram += c[t] * inv[t].gram;
    constrained.push_back(GramForm::from_gram(std::move(gram)));
  }

  // Shells of increasing sup-norm; lexicographic odometer inside a shell.
  std::vector<long> coeff(m, 0);
  for (long shell = 1; shell <= search_bound; ++shell) {
    for (std::size_t i = 0; i < m; ++i) coeff[i] = -shell;
    for (;;) {
      bool on_shell = false;
      for (long c : coeff)
        if (c == shell || c == -shell) on_shell = true;
      if (on_shell) {
        Mat gram(alg.dim, alg.dim);
        for (std::size_t t = 0; t < m; ++t)
          if (coeff[t] != 0) gram += Rational(coeff[t]) * constrained[t].gram;
        GramForm candidate = GramForm::from_gram(std::move(gram));
        if (det(candidate.gram) != 0) return candidate;
      }
      std::size_t pos = m;
      while (pos > 0) {
        if (coeff[pos - 1] < shell) {
          ++coeff[pos - 1];
          for (std::size_t i = pos; i < m; ++i) coeff[i] = -shell;
          break;
        }
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return std::nullopt;
}

Subspace orthogonal_complement(const GramForm& form, const Subspace& sub) {
  if (!is_nondegenerate(form)) throw SingularFormError("orthogonal complement of a degenerate form");
  if (sub.ambient_dim() != form.dim) throw DimensionError("complement dimension mismatch");
  std::vector<Vec> rows;
  for (const Vec& s : sub.basis()) rows.push_back(form.gram * s);  // row_j = B(e_j, s)
  if (rows.empty()) return Subspace::full(form.dim);
  return Subspace::span(form.dim, kernel_basis(Mat::from_rows(form.dim, rows)));
}

}  // namespace homlie
