#pragma once

// The naturally graded models with linear characteristic sequence:
// Vergne's filiform algebras and the four parametrised families L_n(t),
// Q_{2m-1}(t), D_{2m}(t), E_{2m+1}(t), together with their expected
// invariants and a dimension-wise census.
//
// The published structure equations contain index and sign slips. Every
// deviation is a named Correction; the builders can revert any subset of
// them so that the failure each one repairs can be recomputed on demand.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nilgraded/invariants.hpp"
#include "nilgraded/liecore.hpp"
#include "nilgraded/mcdsl.hpp"

namespace nilgraded {

enum class Family { L, Q, D, E, VergneL, VergneQ };

/// Family tag, size parameter (n for L/VergneL, m otherwise) and a strictly
/// increasing tuple t_1 < ... < t_p.
struct ModelId {
  Family family = Family::L;
  int size = 0;
  std::vector<int> tuple;

  std::string to_string() const;  // "L(7;1,3)", "Q(4;)", "VL(9)", "VQ(5)"
  friend auto operator<=>(const ModelId&, const ModelId&) = default;
};

ModelId parse_model_id(std::string_view text);

enum class Correction {
  VergneLChainRange,
  VergneQPairRange,
  LChainIndex,
  LTupleBound,
  QExtensionTarget,
  QExtensionSum,
  DSecondIndices,
  DExtensionSum,
  ETopSigns,
};

using CorrectionSet = std::set<Correction>;

struct CorrectionInfo {
  Correction id;
  std::string key;       // stable short name
  std::string family;
  std::string printed;   // as published
  std::string adopted;   // as built here
  bool revertible = true;
  std::optional<ModelId> witness;  // a model on which the printed form fails
};

const std::vector<CorrectionInfo>& corrections();

/// Throws ParameterError naming the violated bound. `reverted` relaxes the
/// bounds whose correction is listed.
void validate(const ModelId& id, const CorrectionSet& reverted = {});

/// A structure-equation system as transcribed, with any construction
/// problems (repeated or out-of-range indices) it ran into.
struct ModelDraft {
  MCSystem system;
  std::vector<std::string> issues;
};

ModelDraft draft_model(const ModelId& id, const CorrectionSet& reverted = {});

/// Weights forced by homogeneity: forms with zero differential get weight 1,
/// every other form gets the common weight of its terms. nullopt (with a
/// reason) when some form is inhomogeneous or unresolved.
std::optional<std::vector<int>> derive_weights(const MCSystem& system, std::string* reason = nullptr);

/// The corrected model with its canonical grading attached.
LieAlgebra build_model(const ModelId& id);

struct ExpectedInvariants {
  std::size_t dim = 0;
  CharacteristicSequence sequence;
};

ExpectedInvariants expected_invariants(const ModelId& id);

std::size_t model_dimension(const ModelId& id);

/// True for Vergne's models and for L/Q with an empty tuple.
bool is_filiform(const ModelId& id);

/// Index of the last extension generator, for L/Q/D/E with a nonempty tuple.
std::optional<std::size_t> last_extension_generator(const ModelId& id);

/// Drops the last tuple entry.
ModelId without_last_parameter(const ModelId& id);

/// Every admissible model of exactly this dimension, ordered by family, size
/// and tuple.
std::vector<ModelId> enumerate_models(std::size_t dim);

/// Every admissible model with 3 <= dimension <= max_dim, grouped by dimension.
std::vector<ModelId> model_grid(std::size_t max_dim);

/// What goes wrong when one correction is reverted on its witness model.
struct CorrectionEvidence {
  bool computable = true;  // false for purely typographical corrections
  std::string model;
  std::vector<std::string> issues;
  std::size_t jacobi_defects = 0;
  std::string first_defect;  // "(X2,X3,X4)"
  bool homogeneous = true;
  std::string inhomogeneity;
  bool nilpotent = true;
  bool split = false;
  std::string sequence;      // computed characteristic sequence, if meaningful
  std::string expected;      // table row
  std::string summary() const;
};

CorrectionEvidence correction_evidence(const CorrectionInfo& info);

}  // namespace nilgraded
