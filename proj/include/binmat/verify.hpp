#pragma once

#include <functional>
#include <string>
#include <vector>

namespace binmat {

/// One paper-verification case; status is pass iff every underlying
/// assertion held.
struct VerificationCase {
  std::string id;
  std::string description;
};

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string details;      // one line per checked fact, failures marked
  double seconds = 0.0;
};

const std::vector<VerificationCase>& verification_cases();

/// Run one case by id; throws std::invalid_argument for unknown ids.
CaseResult run_verification_case(const std::string& id);

/// Run all cases (ordered by id), returning per-case results.
std::vector<CaseResult> run_all_verification_cases();

}  // namespace binmat
