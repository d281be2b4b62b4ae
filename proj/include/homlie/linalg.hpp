#ifndef HOMLIE_LINALG_HPP
#define HOMLIE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "homlie/rational.hpp"

namespace homlie {

class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : e_(dim, Rational(0)) {}
  explicit Vec(std::vector<Rational> entries) : e_(std::move(entries)) {}
  static Vec unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return e_.size(); }
  Rational& operator[](std::size_t i) { return e_[i]; }
  const Rational& operator[](std::size_t i) const { return e_[i]; }

  bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rational& c);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rational& c, Vec v) { return v *= c; }
  friend Vec operator-(Vec v);
  friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }

  /// Head/tail slices, used for the positional g = g0 + V split.
  Vec head(std::size_t n) const;
  Vec tail(std::size_t n) const;

 private:
  std::vector<Rational> e_;
};

Rational dot(const Vec& a, const Vec& b);

/// Concatenate two coordinate blocks.
Vec concat(const Vec& a, const Vec& b);

/// "(1, -1/2, 0)" - used in diagnostics.
std::string vec_str(const Vec& v);

// Dense exact matrix, column-action convention: entry (i, j) is the
// coefficient of output basis element i in the image of input basis
// element j. Fixed repo-wide.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}
  static Mat identity(std::size_t n);
  static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols);
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_column(std::size_t j, const Vec& v);

  bool is_zero() const;
  bool is_identity() const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rational& c);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Rational& c, Mat m) { return m *= c; }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  /// Column-major flattening (turns End(V) solves into plain kernel problems).
  Vec vectorize() const;
  static Mat unvectorize(const Vec& v, std::size_t rows, std::size_t cols);

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

struct RrefResult {
  Mat reduced;                      // the unique reduced row-echelon form
  Mat transform;                    // invertible, transform * input == reduced
  std::vector<std::size_t> pivots;  // pivot column indices
  std::size_t rank = 0;
};

RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis of the right null space; size == cols - rank.
std::vector<Vec> kernel_basis(const Mat& m);

struct Solution {
  Vec particular;                // rref-canonical (free variables = 0)
  std::vector<Vec> homogeneous;  // kernel basis
};

/// Exact solve of m * x = rhs; empty when inconsistent (not an error).
std::optional<Solution> solve(const Mat& m, const Vec& rhs);

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// row denominators. Throws DimensionError on non-square input.
Rational det(const Mat& m);

/// Inverse via row reduction; throws SingularFormError when singular.
Mat inverse(const Mat& m);

// Subspace of Q^n with an rref-canonical basis, so equality of subspaces is
// equality of bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& generators);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;  // rref-canonical rows, never zero
};

}  // namespace homlie

#endif
