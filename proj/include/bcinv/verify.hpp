#pragma once

// Exhaustive / sampled claim verification and counterexample hunting.
// Reports are deterministic functions of (claim, ring, mode, seed),
// regardless of the worker count.

#include <cstdint>
#include <string>
#include <vector>

#include "bcinv/claims.hpp"
#include "bcinv/ring.hpp"

namespace bcinv {

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

struct VerifyMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;   // sample mode
  std::uint64_t count = 0;  // sample mode

  static VerifyMode Exhaustive() { return VerifyMode{}; }
  static VerifyMode Sample(std::uint64_t seed, std::uint64_t count) {
    return VerifyMode{false, seed, count};
  }
  std::string to_string() const;
};

struct FailureCase {
  std::vector<std::string> tuple;  // element literals
  std::vector<std::pair<std::string, bool>> conditions;
};

struct TheoremReport {
  std::string claim_id;
  std::string ring;
  VerifyMode mode;
  std::uint64_t cases = 0;
  std::uint64_t failures_total = 0;
  std::vector<FailureCase> failures;  // capped at kMaxStoredFailures
  double elapsed_ms = 0.0;

  bool pass() const { return failures_total == 0; }
  static constexpr std::size_t kMaxStoredFailures = 50;
};

// Evaluates the claim over all tuples (exhaustive: |R|^arity must fit the
// budget) or over `count` seeded pseudo-random tuples.  Throws
// std::invalid_argument for unknown claims and exceeded budgets.
TheoremReport verify(std::string_view claim_id, const RingHandle& ring,
                     VerifyMode mode, unsigned workers = 1,
                     std::uint64_t budget = kDefaultBudget);

struct HuntResult {
  bool found = false;
  std::string ring;                // spec text of the ring with the find
  std::vector<std::string> tuple;  // element literals
};

// Scans the ring family in order for the first tuple violating a claim with
// expected == fails_somewhere.  Throws std::invalid_argument for unknown
// claims, claims with expected == holds, and exceeded budgets.
HuntResult hunt(std::string_view claim_id, const std::vector<RingSpec>& family,
                std::uint64_t budget = kDefaultBudget,
                std::uint64_t cardinality_cap = Ring::kDefaultCardinalityCap);

std::string to_json_string(const TheoremReport& report);
std::string to_json_string(const HuntResult& result);

}  // namespace bcinv
