#pragma once

// One-sided ideal membership and division equations over a finite carrier:
// principal ideals Rg / gR, annihilator ideals g° / °g, the existence
// criterion solve for b ∈ Rcab, and the unit-sum decomposition
// 1 = t*(ca) + u with u*b = 0.
//
// Factor equations s*g = x are solved in closed form per carrier: extended
// Euclid for zmod, a k^2-unknown linear system mod n (Smith normal form)
// for mat, componentwise for prod.  Searches return the least-code result.

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "bcinv/ring.hpp"

namespace bcinv {

enum class Side { left, right };

// Principal one-sided ideal: side == left is Rg, side == right is gR.
struct PrincipalIdeal {
  Side side;
  Element generator;

  bool membership(Element x) const;
  std::vector<Element> elements() const;  // sorted by code
};

// Annihilator ideal: side == right is g° = {x : g*x = 0}, side == left is
// °g = {x : x*g = 0}.
struct AnnihilatorIdeal {
  Side side;
  Element generator;

  bool membership(Element x) const;
  std::vector<Element> elements() const;  // sorted by code
};

using IdealRef = std::variant<PrincipalIdeal, AnnihilatorIdeal>;

// True iff the two ideals intersect in {0} only.
bool trivial_intersection(const IdealRef& i1, const IdealRef& i2);

// Least-code s with s*g = x (resp. g*s = x), or empty.
std::optional<Element> solve_left_factor(Element x, Element g);
std::optional<Element> solve_right_factor(Element x, Element g);

// Visits every solution s of s*g = x (resp. g*s = x).  The visitor returns
// false to stop early.  Returns true iff at least one solution exists.
// Enumeration order is deterministic but not generally code-ascending.
bool for_each_left_factor_solution(Element x, Element g,
                                   const std::function<bool(Element)>& visit);
bool for_each_right_factor_solution(Element x, Element g,
                                    const std::function<bool(Element)>& visit);

// side == right decides g1° ⊆ g2°, side == left decides °g1 ⊆ °g2.
bool annihilator_subset(Element g1, Element g2, Side side);

// Least-code s with s*(c*a*b) = b, or empty.  Since Rcab ⊆ Rb always, a
// solution exists exactly when Rb = Rcab.
std::optional<Element> ideal_eq_rb_rcab(Element a, Element b, Element c);

struct UnitSum {
  Element t, u;  // 1 = t*ca + u,  u*b = 0
};

// Constructive decomposition R = R(ca) + °b, built as t = s, u = 1 - s*ca
// from the least s with s*ca*b = b; empty iff no such s exists.
std::optional<UnitSum> unit_sum_decomposition(Element ca, Element b);

// Some x with A*x ≡ v (mod n), via Smith normal form of A over the
// integers; empty iff the system has no solution.  The returned solution is
// rechecked by substitution.  Throws std::invalid_argument on dimension
// mismatch or n < 1.
std::optional<std::vector<std::uint64_t>> solve_linear_mod(
    const std::vector<std::vector<long long>>& A,
    const std::vector<long long>& v, std::uint64_t n);

}  // namespace bcinv
