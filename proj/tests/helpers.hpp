#pragma once

#include <cstdint>
#include <random>

#include "nilgraded/catalog.hpp"
#include "nilgraded/exactlin.hpp"
#include "nilgraded/liecore.hpp"
#include "oracles.hpp"

namespace testutil {

using namespace nilgraded;

inline Scalar small_q(std::mt19937_64& gen, int spread = 5) {
  const long num = static_cast<long>(gen() % (2 * spread + 1)) - spread;
  const long den = static_cast<long>(gen() % 3) + 1;
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline Mat random_mat(std::size_t rows, std::size_t cols, std::mt19937_64& gen, int zero_percent = 40) {
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (static_cast<int>(gen() % 100) >= zero_percent) m(r, c) = small_q(gen);
  return m;
}

// Unit lower times unit upper triangular: always invertible.
inline Mat random_invertible(std::size_t n, std::mt19937_64& gen) {
  Mat lower = Mat::identity(n), upper = Mat::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      lower(r, c) = small_q(gen, 2);
      upper(c, r) = small_q(gen, 2);
    }
  return lower * upper;
}

inline oracle::Dense to_dense(const Mat& m) {
  oracle::Dense d(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
  return d;
}

inline Vec random_vec(std::size_t n, std::mt19937_64& gen) {
  Vec v(n);
  for (auto& x : v) x = small_q(gen);
  return v;
}

// L_n with [X_1, X_i] = X_{i+1}.
inline LieAlgebra chain(int n) { return build_model(parse_model_id("VL(" + std::to_string(n) + ")")); }

inline LieAlgebra model(const char* id) { return build_model(parse_model_id(id)); }

inline LieAlgebra from_brackets(std::size_t n, const std::vector<oracle::Bracket>& brackets) {
  StructureTensor t(n);
  for (const auto& b : brackets)
    t.add(static_cast<std::size_t>(b.i - 1), static_cast<std::size_t>(b.j - 1), static_cast<std::size_t>(b.k - 1), b.c);
  return LieAlgebra(std::move(t));
}

inline oracle::DenseLaw dense_law(const LieAlgebra& g) {
  std::vector<oracle::Bracket> list;
  for (const auto& [idx, c] : g.tensor().entries())
    list.push_back({static_cast<int>(idx.i + 1), static_cast<int>(idx.j + 1), static_cast<int>(idx.k + 1), c});
  return oracle::DenseLaw(g.dim(), list);
}

}  // namespace testutil
