#pragma once

// End-to-end verification of the catalog: structure equations, the
// invariant table, gradings, nonsplitness, tuple-removal coherence,
// extension and cohomology checks, the census and the text round trip.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilgraded/catalog.hpp"
#include "nilgraded/invariants.hpp"

namespace nilgraded {

struct ModelCheck {
  ModelId id;
  std::size_t dim = 0;
  bool filiform = false;
  std::size_t jacobi_defects = 0;
  std::string first_defect;      // "(X1,X2,X6)" when jacobi_defects > 0
  std::string sequence;          // computed, e.g. "(6,1,1)"
  std::string expected;          // table row
  bool table_match = false;
  bool graded = false;
  bool gr_equal = false;         // associated_graded equals the model after relabeling
  bool nonsplit = false;
  bool linear = false;
  bool nilindex_match = false;
  std::optional<bool> quotient;  // only for models with a nonempty tuple
  bool round_trip = false;
  std::string error;             // exception text if a check could not run
  bool pass() const;
};

struct ExtensionCheck {
  ModelId base;                  // the check runs on base (+) abelian(1)
  std::size_t cocycles_tried = 0;
  std::size_t survivors = 0;
  bool pass() const { return survivors == 0; }
};

struct CohomologyCheck {
  ModelId id;
  std::size_t z2 = 0, b2 = 0, h2 = 0;
  bool inclusion = false;        // B^2 inside Z^2
  bool extensions_jacobi = false;
  bool quotient_identity = false;
  bool pass() const { return inclusion && extensions_jacobi && quotient_identity && h2 + b2 == z2; }
};

struct CensusRow {
  std::size_t dim = 0;
  std::size_t listed = 0;
  std::size_t filiform = 0;
  std::size_t expected = 0;      // closed-form count
  bool pass() const { return listed == expected; }
};

struct CorrectionRow {
  std::string key;
  std::string family;
  std::string printed;
  std::string adopted;
  std::string evidence;
};

struct VerificationReport {
  std::size_t max_dim = 0;
  std::uint64_t seed = 0;
  std::vector<ModelCheck> models;
  std::vector<ExtensionCheck> extensions;
  std::vector<CohomologyCheck> cohomology;
  std::vector<CensusRow> census;
  std::vector<CorrectionRow> corrections;
  std::vector<std::string> notes;
  bool pass = false;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t extension_max_dim = 10;
  std::size_t cohomology_max_dim = 10;
  std::optional<ModelId> corrupt;  // test hook: perturb one coefficient of this model
};

/// Throws InputError when max_dim < 7.
VerificationReport verify_paper(std::size_t max_dim, const VerifyOptions& options = {});

std::string render_text(const VerificationReport& r);
std::string render_json(const VerificationReport& r);

/// Closed-form count of admissible models of one dimension, summing binomial
/// coefficients per family instead of listing tuples.
std::size_t census_count(std::size_t dim);

}  // namespace nilgraded
