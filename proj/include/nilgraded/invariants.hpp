#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nilgraded/exactlin.hpp"
#include "nilgraded/liecore.hpp"

namespace nilgraded {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Lower central series C^0 = g, C^{i+1} = [g, C^i]. Each stage is a reduced
/// echelon basis; the last stage is empty.
struct Filtration {
  std::vector<std::vector<Vec>> stages;

  std::vector<std::size_t> dims() const;
};

Filtration lower_central_series(const LieAlgebra& g);

/// Smallest p with C^p(g) = 0.
std::size_t nilindex(const LieAlgebra& g);

std::vector<Vec> center(const LieAlgebra& g);

/// Jordan block sizes of a nilpotent operator, non-increasing.
struct CharacteristicSequence {
  std::vector<std::size_t> parts;

  std::size_t total() const;
  std::string to_string() const;  // "(6,1,1)"
  friend auto operator<=>(const CharacteristicSequence&, const CharacteristicSequence&) = default;
};

/// Jordan type of a nilpotent matrix from the ranks of its powers.
CharacteristicSequence jordan_type(const Mat& a);

CharacteristicSequence char_seq_of(const LieAlgebra& g, const Vec& x);

struct CharacteristicResult {
  CharacteristicSequence sequence;
  Vec witness;                        // a characteristic vector
  std::size_t candidates_examined = 0;
};

inline constexpr std::size_t kCharacteristicSamples = 25;

/// Lexicographic maximum of char_seq_of over every basis vector outside C^1
/// and kCharacteristicSamples seeded random rational combinations of the
/// degree-one generators. The maximum is attained on a Zariski-open set, so
/// sampling finds it with probability one; it is not a proof.
CharacteristicResult characteristic_sequence(const LieAlgebra& g,
                                             std::uint64_t seed = kDefaultSeed);

bool is_linear(const CharacteristicSequence& cs);

/// Basis vectors chosen greedily so that they complement C^1.
std::vector<Vec> degree_one_generators(const LieAlgebra& g);

struct GradedAlgebra {
  LieAlgebra algebra;
  std::vector<int> weights;
  std::vector<Vec> basis;  // adapted basis of g, in the order of `algebra`'s basis
};

GradedAlgebra associated_graded(const LieAlgebra& g);

struct CertificateResult {
  bool ok = false;
  std::string reason;  // empty when ok
};

/// Checks that every nonzero C^k_{ij} has weight(k) = weight(i) + weight(j)
/// and that the weight-w slice has dimension dim C^{w-1}/C^w for every w.
/// A pass certifies that g coincides with its associated graded algebra.
CertificateResult check_graded(const LieAlgebra& g, const std::vector<int>& weights);
bool graded_certificate(const LieAlgebra& g, const std::vector<int>& weights);

/// True iff the center is not contained in C^1, i.e. g = g' (+) one-dimensional
/// abelian factor.
bool has_abelian_direct_factor(const LieAlgebra& g);

}  // namespace nilgraded
