#pragma once

// Decision procedures and witness constructions for generalized inverses:
// one-sided and two-sided (b,c)-inverses, one-sided annihilator
// (b,c)-inverses, hybrid and annihilator (b,c)-inverses, the inverse along
// an element, δ-inverses, Moore-Penrose, group and Drazin inverses, and the
// regularity predicates they specialize to.
//
// Every decision procedure returns the least-code witness and a certificate
// that makes the witness self-verifying.  Definition-level predicates
// (is_*_witness) evaluate the defining equations by raw enumeration and are
// deliberately independent of the ideal solvers, so the two routes can be
// played against each other.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcinv/ideal.hpp"
#include "bcinv/ring.hpp"

namespace bcinv {

enum class Sided { left, right, both };

enum class InverseTag {
  left_bc,
  right_bc,
  right_ann_bc,
  left_ann_bc,
  two_sided_bc,
  hybrid_bc,
  ann_bc,
  mary_left,
  mary_right,
  mary,
  delta,
  moore_penrose,
  group,
  drazin,
};

struct InverseKind {
  InverseTag tag = InverseTag::left_bc;
  unsigned delta_mask = 0;  // nonempty subset of {1,2,3,4}, delta only

  std::string to_string() const;
  static InverseKind parse(std::string_view text);  // "delta" gets mask later
};

// δ-set helpers: masks use bit i for Penrose equation i.
constexpr unsigned delta_bit(unsigned i) { return 1u << i; }
constexpr unsigned kPenroseAll = 0b11110;
unsigned parse_delta_set(std::string_view text);  // "1,3" -> bits {1,3}
std::string delta_set_to_string(unsigned mask);   // -> "{1,3}"

struct Witness {
  InverseKind kind;
  Element y;
  // Named auxiliary factors proving the defining equations (s with y = s*c,
  // t with y = b*t, ...).
  std::vector<std::pair<std::string, Element>> factors;
  unsigned index = 0;  // Drazin index / pi-regularity exponent when relevant
};

// --- definition-level predicates (raw enumeration; the oracle side) --------

bool scan_in_left_ideal(Element y, Element g);   // y ∈ Rg
bool scan_in_right_ideal(Element y, Element g);  // y ∈ gR
bool right_ann_contained(Element g1, Element g2);  // g1° ⊆ g2°
bool left_ann_contained(Element g1, Element g2);   // °g1 ⊆ °g2
bool same_right_ann(Element x, Element y);  // x° == y°
bool same_left_ann(Element x, Element y);   // °x == °y

bool is_left_bc_witness(Element a, Element b, Element c, Element y);
bool is_right_bc_witness(Element a, Element b, Element c, Element y);
bool is_right_ann_bc_witness(Element a, Element b, Element c, Element y);
bool is_left_ann_bc_witness(Element a, Element b, Element c, Element y);
// Drazin's definition: y ∈ (bRy) ∩ (yRc), y*a*b = b, c*a*y = c.
bool is_bc_inverse(Element a, Element b, Element c, Element y);
bool is_hybrid_bc_witness(Element a, Element b, Element c, Element y);
bool is_ann_bc_witness(Element a, Element b, Element c, Element y);
// Penrose equations selected by mask bits 1..4:
// (1) aya=a  (2) yay=y  (3) (ay)*=ay  (4) (ya)*=ya
bool satisfies_penrose(Element a, Element y, unsigned delta_mask);
bool is_drazin_inverse(Element a, Element y, unsigned k);
bool is_regular(Element a);  // ∃w: a*w*a = a

// Re-evaluates the defining equations of w.kind on (a, b, c, w).
// For Mary kinds pass b = c = d; for single-element kinds b and c are unused.
bool verify_witness(Element a, Element b, Element c, const Witness& w);

// --- decision procedures (criterion + construction side) -------------------

// Least-code y with Ry ⊆ Rc and y*a*b = b, decided via the Rb = Rcab
// criterion; witness carries s with y = s*c.
std::optional<Witness> left_bc(Element a, Element b, Element c);
// Least-code y with yR ⊆ bR and c*a*y = c; witness carries t with y = b*t.
std::optional<Witness> right_bc(Element a, Element b, Element c);
// Least-code y with c° ⊆ y° and y*a*b = b (exhaustive; delegates to left_bc
// when c is regular, where the two witness sets provably coincide).
std::optional<Witness> right_ann_bc(Element a, Element b, Element c);
// Least-code y with °b ⊆ °y and c*a*y = c.
std::optional<Witness> left_ann_bc(Element a, Element b, Element c);
// The unique y with y ∈ (bRy) ∩ (yRc), y*a*b = b, c*a*y = c; built as
// y = s*c = b*t and fully rechecked.  Throws std::logic_error if the
// construction ever fails its recheck (an implementation bug, not an input
// condition).
std::optional<Witness> two_sided_bc(Element a, Element b, Element c);
// The unique y with y*a*y = y, yR = bR, y° = c° (exhaustive).
std::optional<Witness> hybrid_bc(Element a, Element b, Element c);
// The unique y with y*a*y = y, °b = °y, y° = c° (exhaustive).
std::optional<Witness> ann_bc(Element a, Element b, Element c);
// Inverse along d: the (d,d)-inverse; side both additionally verifies
// y*a*d = d = d*a*y.
std::optional<Witness> inverse_along(Element a, Element d, Sided side);
// All y satisfying the selected Penrose equations, sorted by code.
std::vector<Element> delta_inverses(Element a, unsigned delta_mask);
// Existence decided through left_bc(a, a*, 1) ∧ right_bc(a, 1, a*); the
// witness is the unique solution of all four Penrose equations.  The two
// routes must agree (std::logic_error otherwise).
std::optional<Witness> moore_penrose(Element a);

struct PiRegularity {
  unsigned n;  // least exponent
  Element x;   // least-code solution of a^n = x*a^(n+1) (left) or dual
};
// Least n >= 1 (bounded by |R|) and least-code x; each n is cross-checked
// against left_bc(a, a^n, 1) / right_bc(a, 1, a^n).
std::optional<PiRegularity> pi_regular(Element a, Side side);

// Drazin inverse: index = least n that is two-sidedly pi-regular; witness is
// the unique y with a*y = y*a, y*a*y = y, a^k = a^(k+1)*y.  Cross-checked
// against two_sided_bc(a, a^k, a^k).  Always exists on a finite carrier.
std::optional<Witness> drazin(Element a);
// Drazin index 1 case.
std::optional<Witness> group_inverse(Element a);

// Least-code x solving the star-regularity equation:
//   left:  a = a a* a x      right: a = x a a* a
// Cross-checked against left_bc(a, a*, a*) / right_bc(a, a*, a*).
std::optional<Element> star_regular(Element a, Side side);

// Full witness set of the defining equations of `kind`, sorted by code.
// Mary kinds take b = c = d; single-element kinds ignore b and c.
std::vector<Element> witness_set(InverseKind kind, Element a, Element b,
                                 Element c);

}  // namespace bcinv
