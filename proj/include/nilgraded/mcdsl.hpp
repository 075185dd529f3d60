#pragma once

// Maurer-Cartan structure equations: text parsing, canonical rendering and
// conversion to and from bracket presentations.
//
// Sign convention: a term c * w_a ^ w_b in d w_k means [X_a, X_b] = -c X_k.
// Bracket lists such as [X_1, X_i] = X_{i+1} and form lists such as
// d w_j = w_1 ^ w_{j-1} therefore differ by the isomorphism X_1 -> -X_1.
//
// Grammar (line-oriented, '#' starts a comment, ';' or newline separate):
//   system := header decl*
//   header := "n" "=" INT
//   decl   := "d" FORM "=" sum | "d" FORM "=" "0"
//   sum    := ["+"|"-"] term (("+"|"-") term)*
//   term   := [RATIONAL] FORM "^" FORM
//   FORM   := "w" INT          RATIONAL := INT | INT "/" INT

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nilgraded/exactlin.hpp"
#include "nilgraded/liecore.hpp"

namespace nilgraded {

/// coeff * w_a ^ w_b with a < b (0-based).
struct WedgeTerm {
  std::size_t a = 0;
  std::size_t b = 0;
  Scalar coeff;
  friend bool operator==(const WedgeTerm&, const WedgeTerm&) = default;
};

/// Differentials of the dual basis: forms[k] lists the terms of d w_k,
/// sorted by (a, b) with no duplicates or zero coefficients.
struct MCSystem {
  std::size_t dim = 0;
  std::vector<std::vector<WedgeTerm>> forms;

  explicit MCSystem(std::size_t n = 0) : dim(n), forms(n) {}

  /// Adds c * w_a ^ w_b to d w_k, normalising a > b and merging duplicates.
  /// a == b is rejected with InputError.
  void add(std::size_t k, std::size_t a, std::size_t b, const Scalar& c);

  friend bool operator==(const MCSystem&, const MCSystem&) = default;
};

MCSystem parse_mc_system(std::string_view text);
LieAlgebra to_algebra(const MCSystem& system);
MCSystem to_mc_system(const LieAlgebra& g);

LieAlgebra parse_mc(std::string_view text);
std::string render_mc(const MCSystem& system);
std::string render_mc(const LieAlgebra& g);

/// A nonzero 3-form d(d w_k), as sorted triples a < b < c with coefficients.
struct ClosureDefect {
  std::size_t form = 0;
  std::vector<std::pair<std::array<std::size_t, 3>, Scalar>> terms;
};

/// Computes d^2 w_k on forms directly, without passing through brackets.
/// Empty iff the system defines a Lie algebra.
std::vector<ClosureDefect> closure_defects(const MCSystem& system);

}  // namespace nilgraded
