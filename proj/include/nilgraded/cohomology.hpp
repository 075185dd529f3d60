#pragma once

// Second Chevalley-Eilenberg cohomology with trivial coefficients, central
// extensions and the search for graded one-dimensional extensions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilgraded/exactlin.hpp"
#include "nilgraded/invariants.hpp"
#include "nilgraded/liecore.hpp"

namespace nilgraded {

/// phi = sum c_ab w_a ^ w_b over a < b (0-based), so phi(X_a, X_b) = c_ab.
class TwoCochain {
 public:
  using Coefficients = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

  TwoCochain() = default;
  static TwoCochain wedge(std::size_t a, std::size_t b, const Scalar& c = 1);

  void add(std::size_t a, std::size_t b, const Scalar& c);
  /// phi(X_a, X_b) for any a, b.
  Scalar operator()(std::size_t a, std::size_t b) const;
  const Coefficients& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coordinates over the pairs (a < b) in lexicographic order.
  Vec to_vec(std::size_t n) const;
  static TwoCochain from_vec(std::size_t n, const Vec& v);

  std::string to_string() const;  // "w1^w3 - 1/2 w2^w5"
  friend bool operator==(const TwoCochain&, const TwoCochain&) = default;

 private:
  Coefficients coeffs_;
};

std::size_t pair_count(std::size_t n);
std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::size_t n);

/// Matrix of the cocycle condition: rows are triples i < j < k, columns are
/// pairs, entry sums phi([Xi,Xj],Xk) + phi([Xj,Xk],Xi) + phi([Xk,Xi],Xj).
Mat cocycle_matrix(const LieAlgebra& g);

/// Coboundary of the dual basis form w_k: phi(X_a, X_b) = -w_k([X_a, X_b]).
TwoCochain coboundary_of(const LieAlgebra& g, std::size_t k);

/// First triple i < j < k on which the cocycle condition fails.
std::optional<std::array<std::size_t, 3>> cocycle_violation(const LieAlgebra& g, const TwoCochain& c);

struct CocycleSpaces {
  std::vector<TwoCochain> z2_basis;
  std::vector<TwoCochain> b2_basis;
  std::size_t h2_dim = 0;
};

CocycleSpaces cocycle_spaces(const LieAlgebra& g);

/// [X_a, X_b] += c(X_a, X_b) X_{n+1}; the new basis element is central.
/// `new_weight` is appended to g's weights when both are present.
LieAlgebra central_extension(const LieAlgebra& g, const TwoCochain& c,
                             std::optional<int> new_weight = std::nullopt);

struct HomogeneousSlices {
  std::vector<TwoCochain> z_basis;
  std::vector<TwoCochain> b_basis;
};

/// Weight-w parts of Z^2 and B^2, where w_a ^ w_b has weight
/// weights[a] + weights[b]. Requires a passing graded certificate.
HomogeneousSlices homogeneous_cocycles(const LieAlgebra& g, const std::vector<int>& weights, int w);

struct ExtensionProfile {
  std::size_t dim = 0;
  CharacteristicSequence sequence;
  std::vector<std::size_t> series_dims;
  std::size_t h2_dim = 0;
  friend auto operator<=>(const ExtensionProfile&, const ExtensionProfile&) = default;
};

struct ExtensionCandidate {
  TwoCochain cocycle;
  int new_weight = 0;
  LieAlgebra extension;
  bool nilindex_preserved = false;
  bool linear_sequence = false;
  bool nonsplit = false;
  bool graded = false;
  ExtensionProfile profile;
};

struct ExtensionSearchOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_per_weight = 10;
  std::optional<int> max_weight;  // default nilindex(g) + 1
};

struct ExtensionSearch {
  std::vector<ExtensionCandidate> candidates;  // survivors, deduplicated by profile
  std::size_t cocycles_tried = 0;
  std::size_t weights_searched = 0;
};

/// For every weight 2..nilindex+1, extends g by a basis of the homogeneous
/// Z-slice modulo the B-slice plus seeded random combinations of the Z-slice,
/// and keeps the extensions that preserve the nilindex, have a linear
/// characteristic sequence, no abelian direct factor, and a graded
/// certificate with the new generator at that weight.
ExtensionSearch search_graded_linear_extensions(const LieAlgebra& g, const std::vector<int>& weights,
                                                const ExtensionSearchOptions& options = {});

std::vector<ExtensionCandidate> enumerate_graded_linear_extensions(const LieAlgebra& g,
                                                                   const std::vector<int>& weights);

}  // namespace nilgraded
