#pragma once

// Jacobson-lemma transfers between 1+ab and 1+ba, and the four-way
// equivalence tying one-sided (b,c)-invertibility of a perturbed element α
// to classical one-sided invertibility of 1+(α-a)a⊗ and 1+a⊗(α-a), where a⊗
// is the (b,c)-inverse of a.

#include <array>

#include "bcinv/inverse.hpp"
#include "bcinv/ring.hpp"

namespace bcinv {

// Given y with y*(1+ab) = 1, returns 1 - b*y*a, a left inverse of 1+ba.
// Throws std::invalid_argument when the precondition fails.
Element jacobson_left(Element a, Element b, Element y);
// Given x with (1+ab)*x = 1, returns 1 - b*x*a, a right inverse of 1+ba.
Element jacobson_right(Element a, Element b, Element x);
// Given the two-sided inverse of 1+ab, returns (1+ba)^{-1} = 1 - b*inv*a.
Element jacobson_inverse(Element a, Element b, Element inv);

struct PerturbationReport {
  bool invertible = false;          // the shared truth value
  std::array<bool, 4> conditions{};  // (i)..(iv) individually
};

// For side == left the four equivalent conditions are
//   (i)   α is left (b,c)-invertible
//   (ii)  α is right annihilator (b,c)-invertible
//   (iii) 1+(α-a)*a_bc is left invertible
//   (iv)  1+a_bc*(α-a) is left invertible
// and dually for side == right (right inverses, left annihilator).
// a_bc must be the (b,c)-inverse of a (std::invalid_argument otherwise);
// a violated equivalence throws std::logic_error with the offending tuple.
PerturbationReport perturbed_one_sided(Element a, Element b, Element c,
                                       Element a_bc, Element alpha, Side side);

}  // namespace bcinv
