#include "homlie/algebra.hpp"

#include "homlie/errors.hpp"

namespace homlie {

StructureConstants StructureConstants::zero(std::size_t dim, bool skew) {
  StructureConstants alg;
  alg.dim = dim;
  alg.basis_names = default_basis_names(dim);
  alg.table.assign(dim, std::vector<Vec>(dim, Vec(dim)));
  alg.skew = skew;
  return alg;
}

void StructureConstants::set_product(std::size_t i, std::size_t j, const Vec& value) {
  if (value.dim() != dim) throw DimensionError("structure constant value dimension mismatch");
  table[i][j] = value;
  if (skew && i != j) table[j][i] = -value;
  if (skew && i == j && !value.is_zero())
    throw PreconditionError("skew product with nonzero square " + basis_names[i]);
}

Vec StructureConstants::product(const Vec& x, const Vec& y) const {
  if (x.dim() != dim || y.dim() != dim) throw DimensionError("product operand dimension mismatch");
  Vec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Rational c = x[i] * y[j];
      out += c * table[i][j];
    }
  }
  return out;
}

void StructureConstants::validate_shape() const {
  if (basis_names.size() != dim) throw ValidationError("tensor shape", "basis name count != dim");
  if (table.size() != dim) throw ValidationError("tensor shape", "table row count != dim");
  for (const auto& row : table) {
    if (row.size() != dim) throw ValidationError("tensor shape", "table column count != dim");
    for (const auto& v : row)
      if (v.dim() != dim) throw ValidationError("tensor shape", "table entry dimension != dim");
  }
  if (skew && !table_is_skew())
    throw ValidationError("c[i][j][k]=-c[j][i][k]", "skew flag set but table is not antisymmetric");
}

bool StructureConstants::table_is_skew() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(table[i][j] + table[j][i]).is_zero()) return false;
  return true;
}

std::vector<std::string> default_basis_names(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
  return names;
}

Vec bracket(const StructureConstants& alg, const Vec& x, const Vec& y) { return alg.product(x, y); }

std::vector<TripleDefect> jacobi_defect(const StructureConstants& alg) {
  if (!alg.skew) throw PreconditionError("jacobi_defect requires a skew product");
  std::vector<TripleDefect> defects;
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = i + 1; j < alg.dim; ++j)
      for (std::size_t k = j + 1; k < alg.dim; ++k) {
        Vec r = alg.product(Vec::unit(alg.dim, i), alg.table[j][k]);
        r += alg.product(Vec::unit(alg.dim, j), alg.table[k][i]);
        r += alg.product(Vec::unit(alg.dim, k), alg.table[i][j]);
        if (!r.is_zero()) defects.push_back({i, j, k, std::move(r)});
      }
  return defects;
}

bool is_lie(const StructureConstants& alg) {
  return alg.skew && alg.table_is_skew() && jacobi_defect(alg).empty();
}

Mat ad(const StructureConstants& alg, const Vec& x) {
  if (x.dim() != alg.dim) throw DimensionError("ad operand dimension mismatch");
  Mat m(alg.dim, alg.dim);
  for (std::size_t j = 0; j < alg.dim; ++j) m.set_column(j, alg.product(x, Vec::unit(alg.dim, j)));
  return m;
}

GramForm GramForm::from_gram(Mat gram) {
  if (gram.rows() != gram.cols()) throw DimensionError("Gram matrix must be square");
  GramForm f;
  f.dim = gram.rows();
  f.symmetric = (gram == gram.transpose());
  f.gram = std::move(gram);
  return f;
}

Rational GramForm::eval(const Vec& x, const Vec& y) const {
  if (x.dim() != dim || y.dim() != dim) throw DimensionError("form evaluation dimension mismatch");
  return dot(x, gram * y);
}

GramForm killing_form(const StructureConstants& alg) {
  if (!is_lie(alg)) throw PreconditionError("killing_form requires a Lie algebra");
  std::vector<Mat> ads;
  ads.reserve(alg.dim);
  for (std::size_t i = 0; i < alg.dim; ++i) ads.push_back(ad(alg, Vec::unit(alg.dim, i)));
  Mat gram(alg.dim, alg.dim);
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = i; j < alg.dim; ++j) {
      Rational tr(0);
      for (std::size_t p = 0; p < alg.dim; ++p)
        for (std::size_t q = 0; q < alg.dim; ++q) tr += ads[i](p, q) * ads[j](q, p);
      gram(i, j) = tr;
      gram(j, i) = tr;
    }
  return GramForm::from_gram(std::move(gram));
}

Subspace center(const StructureConstants& alg) {
  // x is central iff product(x, e_j) = 0 for every j; rows are (j, k) pairs.
  Mat sys(alg.dim * alg.dim, alg.dim);
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j)
      for (std::size_t k = 0; k < alg.dim; ++k) sys(j * alg.dim + k, i) = alg.table[i][j][k];
  return Subspace::span(alg.dim, kernel_basis(sys));
}

Subspace product_span(const StructureConstants& alg, const Subspace& a, const Subspace& b) {
  std::vector<Vec> gens;
  for (const Vec& x : a.basis())
    for (const Vec& y : b.basis()) gens.push_back(alg.product(x, y));
  return Subspace::span(alg.dim, gens);
}

std::vector<Subspace> lower_central_series(const StructureConstants& alg) {
  std::vector<Subspace> series{Subspace::full(alg.dim)};
  for (;;) {
    Subspace next = product_span(alg, series.front(), series.back());
    const bool stable = (next == series.back());
    series.push_back(std::move(next));
    if (stable || series.back().is_zero()) break;
  }
  return series;
}

std::vector<Subspace> derived_series(const StructureConstants& alg) {
  std::vector<Subspace> series{Subspace::full(alg.dim)};
  for (;;) {
    Subspace next = product_span(alg, series.back(), series.back());
    const bool stable = (next == series.back());
    series.push_back(std::move(next));
    if (stable || series.back().is_zero()) break;
  }
  return series;
}

bool is_nilpotent(const StructureConstants& alg) { return lower_central_series(alg).back().is_zero(); }

bool is_solvable(const StructureConstants& alg) { return derived_series(alg).back().is_zero(); }

}  // namespace homlie
