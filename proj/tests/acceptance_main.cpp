// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The same cases back `binmat verify-paper`.

#include <cstdio>
#include <string>

#include "binmat/verify.hpp"

int main(int argc, char** argv) {
  std::string only = argc > 1 ? argv[1] : "";
  bool all_pass = true;
  int ran = 0;
  for (const auto& vcase : binmat::verification_cases()) {
    if (!only.empty() && vcase.id != only) continue;
    binmat::CaseResult r = binmat::run_verification_case(vcase.id);
    ran++;
    std::printf("[%s] %-24s %7.1fs  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                r.seconds, vcase.description.c_str());
    if (!r.pass) std::fputs(r.details.c_str(), stdout);
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  if (ran == 0) {
    std::fprintf(stderr, "unknown case id: %s\n", only.c_str());
    return 2;
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                               : "ACCEPTANCE: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
