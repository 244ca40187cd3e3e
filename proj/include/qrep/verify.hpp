#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qrep/representation.hpp"

namespace qrep {

/// One line of the verification report. `value` is always computed by the
/// library; `expected` is the claim it is held against.
struct Check {
  std::string name;
  std::string value;
  std::string expected;
  std::string provenance;
  bool pass = false;
};

/// Computed facts reported alongside the checks that do not gate the result.
struct Observation {
  std::string name;
  std::string value;
};

struct VerifyReport {
  Field field = Field::rationals();
  std::vector<Check> checks;
  std::vector<Observation> observations;

  bool passed() const;
  std::string to_text() const;
  /// check.<k>.name=..., check.<k>.value=..., check.<k>.expected=...,
  /// check.<k>.provenance=..., check.<k>.pass=true|false; k counts from 1.
  std::string to_key_values() const;
};

/// The quiver and the three representations the pipeline runs on.
struct FixtureSet {
  std::shared_ptr<const Quiver> quiver;
  Representation x_alpha;
  Representation x_beta1;
  Representation x_gamma1;

  /// The embedded fixtures over `field`.
  static FixtureSet load(Field field);
};

/// Re-derives, in order: the word for alpha, that alpha is a real root,
/// the structure of X_alpha, the reflection candidates below alpha, the
/// vanishing pairings of beta2..beta4, the reflection of alpha along beta1,
/// the nonzero map X_beta1 -> X_gamma1 and the resulting conclusion that no
/// real Schur root allows X_alpha to be reached by a universal extension.
VerifyReport verify_paper(Field field);
VerifyReport verify_paper(const FixtureSet& fixtures);

}  // namespace qrep
