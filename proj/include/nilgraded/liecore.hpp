#pragma once

// Structure-constant representation of finite-dimensional Lie algebras and
// the bracket-level operations on them. Indices are 0-based in the C++ API
// and 1-based in every text format.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilgraded/exactlin.hpp"

namespace nilgraded {

/// Position of a structure constant C^k_{ij}, always with i < j.
struct BracketIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  friend auto operator<=>(const BracketIndex&, const BracketIndex&) = default;
};

/// Sparse C^k_{ij} with i < j. Antisymmetry is implied by the storage and
/// zero coefficients are never stored.
class StructureTensor {
 public:
  using Entries = std::map<BracketIndex, Scalar>;

  explicit StructureTensor(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Entries& entries() const noexcept { return entries_; }

  /// Adds c to C^k_{ij}. Accepts i > j (stored as -c at (j,i)); i == j is an
  /// InputError since [X_i, X_i] = 0.
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  Scalar coeff(std::size_t i, std::size_t j, std::size_t k) const;

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t dim_;
  Entries entries_;
};

/// Sparse vector used for brackets of basis elements: (index, coefficient).
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

class LieAlgebra {
 public:
  explicit LieAlgebra(StructureTensor tensor,
                      std::vector<std::string> labels = {},
                      std::optional<std::vector<int>> weights = std::nullopt);

  std::size_t dim() const noexcept { return tensor_.dim(); }
  const StructureTensor& tensor() const noexcept { return tensor_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Claimed grading, if one was attached. Never trusted without a
  /// graded_certificate check.
  const std::optional<std::vector<int>>& weights() const noexcept { return weights_; }

  /// [X_a, X_b] in sparse form.
  const SparseVec& basis_bracket(std::size_t a, std::size_t b) const {
    return table_[a * dim() + b];
  }

  LieAlgebra with_weights(std::optional<std::vector<int>> weights) const;

  /// Equality of structure constants; labels and weights are ignored.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.tensor_ == b.tensor_;
  }

 private:
  StructureTensor tensor_;
  std::vector<std::string> labels_;
  std::optional<std::vector<int>> weights_;
  std::vector<SparseVec> table_;
};

/// Default labels X1..Xn.
std::vector<std::string> default_labels(std::size_t n);

LieAlgebra abelian(std::size_t n);

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y);

/// Matrix of y -> [x, y] in the stored basis.
Mat ad_matrix(const LieAlgebra& g, const Vec& x);

struct JacobiDefect {
  std::size_t i = 0, j = 0, k = 0;  // i < j < k
  Vec defect;                       // [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj]
};

std::vector<JacobiDefect> jacobi_defects(const LieAlgebra& g);

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

/// Quotient by the line spanned by a nonzero central z. A multiple of a basis
/// vector has its index deleted; otherwise the first nonzero coordinate of z
/// is eliminated and the remaining basis vectors span the complement.
LieAlgebra central_quotient(const LieAlgebra& g, const Vec& z);

/// Columns of p are the new basis vectors written in the old basis. The
/// returned law is the one in which p is an isomorphism onto g.
LieAlgebra change_of_basis(const LieAlgebra& g, const Mat& p);

/// Permutes the basis: new basis vector r is old basis vector order[r].
LieAlgebra relabel(const LieAlgebra& g, const std::vector<std::size_t>& order);

/// JSON text format: {"dim", "labels", "brackets": [{"i","j","k","c"}], "weights"}.
std::string to_json(const LieAlgebra& g);
LieAlgebra from_json(const std::string& text);

}  // namespace nilgraded
