#ifndef HOMLIE_TESTS_HELPERS_HPP
#define HOMLIE_TESTS_HELPERS_HPP

#include <random>

#include "homlie/connection.hpp"
#include "homlie/io.hpp"
#include "homlie/zoo.hpp"

namespace testutil {

using namespace homlie;

inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rational rand_rat(std::mt19937_64& rng) { return rat(draw(rng, -9, 9), draw(rng, 1, 4)); }

inline Mat rand_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rand_rat(rng);
  return m;
}

inline Vec rand_vec(std::mt19937_64& rng, std::size_t dim) {
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rand_rat(rng);
  return v;
}

// Killing form straight from the tensor, independent of the Mat machinery:
// kappa(e_i, e_j) = sum_{m,p} c[j][m][p] c[i][p][m].
inline Mat killing_oracle(const StructureConstants& alg) {
  Mat gram(alg.dim, alg.dim);
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      Rational tr(0);
      for (std::size_t m = 0; m < alg.dim; ++m)
        for (std::size_t p = 0; p < alg.dim; ++p) tr += alg.table[j][m][p] * alg.table[i][p][m];
      gram(i, j) = tr;
    }
  return gram;
}

// Leibniz residual by plain substitution (no solver involved).
inline bool leibniz_holds(const StructureConstants& alg, const Mat& d) {
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      Vec r = d * alg.table[i][j];
      r -= alg.product(d.column(i), Vec::unit(alg.dim, j));
      r -= alg.product(Vec::unit(alg.dim, i), d.column(j));
      if (!r.is_zero()) return false;
    }
  return true;
}

inline bool b_skew_holds(const GramForm& form, const Mat& d) {
  for (std::size_t i = 0; i < form.dim; ++i)
    for (std::size_t j = 0; j < form.dim; ++j)
      if (form.eval(d.column(i), Vec::unit(form.dim, j)) +
              form.eval(Vec::unit(form.dim, i), d.column(j)) !=
          0)
        return false;
  return true;
}

/// Is m a member of the span of basis (as flattened vectors)?
inline bool in_span(const std::vector<Mat>& basis, const Mat& m) {
  if (basis.empty()) return m.is_zero();
  std::vector<Vec> vecs;
  for (const Mat& b : basis) vecs.push_back(b.vectorize());
  const Subspace s = Subspace::span(m.rows() * m.cols(), vecs);
  return s.contains(m.vectorize());
}

inline bool form_in_span(const std::vector<GramForm>& basis, const GramForm& f) {
  std::vector<Mat> mats;
  for (const auto& b : basis) mats.push_back(b.gram);
  return in_span(mats, f.gram);
}

/// Sparse expectation helper: the vector with value 1 at the given index.
inline Vec unit(std::size_t dim, std::size_t i) { return Vec::unit(dim, i); }

// Indices of the 9-dimensional example basis a1..a3, b1..b3, v1..v3.
inline std::size_t A(std::size_t i) { return i; }        // a_{i+1}
inline std::size_t B(std::size_t i) { return 3 + i; }    // b_{i+1}
inline std::size_t V(std::size_t i) { return 6 + i; }    // v_{i+1}

// Seeded central extensions (Lie level only, no metric on the extension):
// random B0-skew derivation tuples over the quadratic example base give valid
// cocycles, hence valid Lie algebras.
inline StructureConstants seeded_extension_algebra(unsigned long seed) {
  ZooG0 zoo = example_g0(Mat::identity(3));
  const std::size_t r = 1 + seed % 3;
  std::vector<Mat> ds = random_skew_derivations(zoo.g0, zoo.b0, r, seed);
  return central_extend(zoo.g0, cocycle_from_derivations(zoo.g0, zoo.b0, ds));
}

}  // namespace testutil

#endif
