#pragma once

// One-sided (b,c)-invertibility of a triple product paq: splitting into the
// factors pa and aq, transfers between paq and a, and the mixed two-sided
// transfer.  Constructed witnesses are rechecked against their defining
// equations on every call; a failed recheck (or a violated equivalence)
// throws std::logic_error, since it can only mean an implementation bug.

#include <optional>

#include "bcinv/inverse.hpp"
#include "bcinv/ring.hpp"

namespace bcinv {

struct SplitResult {
  bool exists = false;
  std::optional<Element> y;  // witness of paq for (b, c)
  std::optional<Element> x;  // q*y, witness of pa for (qb, c)
  std::optional<Element> z;  // y*p, witness of aq for (b, cp)
};

// exists ⟺ paq is left (b,c)-invertible ⟺ pa is left (qb,c)-invertible and
// aq is left (b,cp)-invertible.  Returns the witness maps x = q*y, z = y*p,
// and rechecks the converse construction z'*a*x' from independently found
// one-sided witnesses.
SplitResult split_left(Element p, Element a, Element q, Element b, Element c);
SplitResult split_right(Element p, Element a, Element q, Element b, Element c);

struct TransferResult {
  bool precondition_ok = false;  // q' / p' exist as required by the side
  bool exists = false;
  std::optional<Element> w;        // q*y*p, witness of a for (qb, cp)
  std::optional<Element> q_prime;  // least q' with q'*q*b = b (left/both)
  std::optional<Element> p_prime;  // least p' with c*p*p' = c (right/both)
};

// Under the side's factor precondition, paq is side-(b,c)-invertible iff a
// is side-(qb,cp)-invertible; w = q*y*p transfers the witness.
TransferResult transfer(Element p, Element a, Element q, Element b, Element c,
                        Sided side);

struct MixedTransferResult {
  bool precondition_ok = false;  // q' with q'*q*c = c and p' with b*p*p' = b
  bool exists = false;
  std::optional<Element> y;  // z*a*x, the (b,c)-inverse of paq
};

// paq is (b,c)-invertible iff pa is right (qb,qc)-invertible and aq is left
// (bp,cp)-invertible; the witness is reassembled as y = z*a*x.
MixedTransferResult mixed_transfer(Element p, Element a, Element q, Element b,
                                   Element c);

}  // namespace bcinv
