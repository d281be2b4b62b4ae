#include "homlie/linalg.hpp"

#include <algorithm>

#include "homlie/errors.hpp"

namespace homlie {

Vec Vec::unit(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

bool Vec::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

Vec& Vec::operator+=(const Vec& o) {
  if (dim() != o.dim()) throw DimensionError("vector addition dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (dim() != o.dim()) throw DimensionError("vector subtraction dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Vec& Vec::operator*=(const Rational& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

Vec operator-(Vec v) {
  for (auto& x : v.e_) x = -x;
  return v;
}

Vec Vec::head(std::size_t n) const {
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = e_[i];
  return out;
}

Vec Vec::tail(std::size_t n) const {
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = e_[dim() - n + i];
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) throw DimensionError("dot dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec out(a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.dim(); ++i) out[a.dim() + i] = b[i];
  return out;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  return s + ")";
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].dim() != rows) throw DimensionError("from_columns dimension mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != cols) throw DimensionError("from_rows dimension mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

void Mat::set_column(std::size_t j, const Vec& v) {
  if (v.dim() != rows_) throw DimensionError("set_column dimension mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product dimension mismatch");
  Mat p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

Vec Mat::operator*(const Vec& v) const {
  if (cols_ != v.dim()) throw DimensionError("matrix-vector dimension mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix addition dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix subtraction dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Mat& Mat::operator*=(const Rational& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

Vec Mat::vectorize() const {
  Vec v(rows_ * cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) v[j * rows_ + i] = (*this)(i, j);
  return v;
}

Mat Mat::unvectorize(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.dim() != rows * cols) throw DimensionError("unvectorize dimension mismatch");
  Mat m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[j * rows + i];
  return m;
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, Mat::identity(m.rows()), {}, 0};
  Mat& a = res.reduced;
  Mat& t = res.transform;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
      for (std::size_t j = 0; j < rows; ++j) std::swap(t(r, j), t(piv, j));
    }
    const Rational inv = Rational(1) / a(r, c);
    if (inv != 1) {
      for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
      for (std::size_t j = 0; j < rows; ++j) t(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
      for (std::size_t j = 0; j < rows; ++j) t(i, j) -= f * t(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Mat& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Solution> solve(const Mat& m, const Vec& rhs) {
  if (rhs.dim() != m.rows()) throw DimensionError("solve: rhs dimension mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Solution sol{Vec(m.cols()), kernel_basis(m)};
  for (std::size_t i = 0; i < r.rank; ++i) sol.particular[r.pivots[i]] = r.reduced(i, m.cols());
  return sol;
}

Rational det(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionError("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  // Clear denominators row by row, then run integer Bareiss.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Integer lcm(1);
    for (std::size_t j = 0; j < n; ++j) {
      Integer den = m(i, j).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = m(i, j) * Rational(lcm);
      a[i][j] = scaled.get_num();  // exact by construction
    }
    scale *= Rational(lcm);
  }

  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return Rational(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational d(a[n - 1][n - 1]);
  if (sign < 0) d = -d;
  return d / scale;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  const RrefResult r = rref(m);
  if (r.rank != m.rows()) throw SingularFormError("matrix not invertible");
  return r.transform;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& generators) {
  Subspace s(ambient_dim);
  if (generators.empty()) return s;
  const RrefResult r = rref(Mat::from_rows(ambient_dim, generators));
  for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row(i));
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_.push_back(Vec::unit(ambient_dim, i));
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.dim() != ambient_) throw DimensionError("contains: ambient dimension mismatch");
  if (v.is_zero()) return true;
  std::vector<Vec> gens = basis_;
  gens.push_back(v);
  return Subspace::span(ambient_, gens).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("contains: ambient dimension mismatch");
  for (const Vec& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("sum: ambient dimension mismatch");
  std::vector<Vec> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return Subspace::span(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("intersect: ambient dimension mismatch");
  if (is_zero() || other.is_zero()) return Subspace(ambient_);
  // Solve U^T l = W^T m: kernel of [U^T | -W^T].
  const std::size_t d1 = dim(), d2 = other.dim();
  Mat sys(ambient_, d1 + d2);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) sys(i, j) = basis_[j][i];
  for (std::size_t j = 0; j < d2; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) sys(i, d1 + j) = -other.basis_[j][i];
  std::vector<Vec> gens;
  for (const Vec& k : kernel_basis(sys)) {
    Vec v(ambient_);
    for (std::size_t j = 0; j < d1; ++j) v += k[j] * basis_[j];
    gens.push_back(std::move(v));
  }
  return Subspace::span(ambient_, gens);
}

}  // namespace homlie
