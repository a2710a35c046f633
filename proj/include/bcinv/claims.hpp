#pragma once

// Registry of executable claims: every theorem, proposition, corollary,
// lemma and remark item about one-sided (b,c)-inverses, products and
// perturbations, as total predicates over element tuples.  Claims with
// expected == fails_somewhere encode converse directions that are known (or
// suspected) to fail; hunting them is how counterexamples are produced.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bcinv/ring.hpp"

namespace bcinv {

struct ConditionTrace {
  std::vector<std::pair<std::string, bool>> conditions;
};

struct Claim {
  enum class Expected { holds, fails_somewhere };

  std::string id;
  unsigned arity = 0;
  Expected expected = Expected::holds;
  std::string statement;  // what the predicate asserts, in one line
  // Total predicate over tuples of `arity` elements of one ring.  When
  // `trace` is non-null the named sub-conditions are recorded for reporting.
  std::function<bool(const RingHandle&, const std::vector<Element>&,
                     ConditionTrace*)>
      predicate;
};

const std::vector<Claim>& registry();
const Claim* find_claim(std::string_view id);  // nullptr if unknown

}  // namespace bcinv
