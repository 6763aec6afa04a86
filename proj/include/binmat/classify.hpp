#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "binmat/catalog.hpp"
#include "binmat/compose.hpp"
#include "binmat/connectivity.hpp"
#include "binmat/minor.hpp"

namespace binmat {

/// Raised when a 3-connected P9-free input matches no clause (or, when the
/// exclusive check is on, more than one): that would falsify either the
/// transcription or the classification theorem at this instance.
class ExhaustivenessViolation : public std::runtime_error {
 public:
  explicit ExhaustivenessViolation(const std::string& what) : std::runtime_error(what) {}
};

enum class MatroidClass {
  NotThreeConnected,
  HasP9Minor,
  Regular,
  Spike,
  Y16Family,
  Starfish,
};

std::string class_name(MatroidClass c);

struct Classification {
  MatroidClass label = MatroidClass::Regular;
  std::optional<Separation> separation;       // NotThreeConnected
  std::optional<MinorWitness> p9_witness;     // HasP9Minor
  std::optional<SpikeSpec> spike;             // Spike
  std::optional<std::string> family_member;   // Y16Family
  std::optional<StarfishSpec> starfish;       // Starfish
  std::optional<std::string> regular_kind;    // with refine_regular: graphic/cographic/R10/other
};

struct ClassifyOptions {
  bool refine_regular = false;
  /// Evaluate every clause and require exactly one match (census mode);
  /// default is cheapest-first short-circuit.
  bool exclusive_check = false;
};

Classification classify(const BinaryMatroid& m, const ClassifyOptions& opts = {});

/// Re-verify the certificate embedded in a classification.
bool verify_classification(const BinaryMatroid& m, const Classification& c);

/// Spike recognition via the (|E|, rank) equations then isomorphism; only
/// returns specs with r >= 4 (Z3 is F7 and belongs to the Y16 family).
std::optional<SpikeSpec> is_spike_family(const BinaryMatroid& m);

/// Starfish recognition: candidate (n, extra, t) from |E| = 3n+extra+t and
/// rank = 2n+extra-2+t, then isomorphism against the built instance.
std::optional<StarfishSpec> is_starfish(const BinaryMatroid& m);

/// Membership in the 16-member family, by isomorphism.
std::optional<std::string> y16_family_member(const BinaryMatroid& m);

}  // namespace binmat
