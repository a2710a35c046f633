#include "bcinv/product.hpp"

#include <stdexcept>

namespace bcinv {
namespace {

[[noreturn]] void violation(const char* what, Element p, Element a, Element q,
                            Element b, Element c) {
  throw std::logic_error(std::string(what) + " on (p,a,q,b,c) = (" +
                         format_element(p) + ", " + format_element(a) + ", " +
                         format_element(q) + ", " + format_element(b) + ", " +
                         format_element(c) + ")");
}

void require_same5(Element p, Element a, Element q, Element b, Element c) {
  const Ring* r = &p.ring();
  if (&a.ring() != r || &q.ring() != r || &b.ring() != r || &c.ring() != r)
    throw std::invalid_argument("mixed-ring operands");
}

}  // namespace

SplitResult split_left(Element p, Element a, Element q, Element b, Element c) {
  require_same5(p, a, q, b, c);
  Element paq = p * a * q;
  auto w_paq = left_bc(paq, b, c);
  auto w_pa = left_bc(p * a, q * b, c);
  auto w_aq = left_bc(a * q, b, c * p);
  if (w_paq.has_value() != (w_pa.has_value() && w_aq.has_value()))
    violation("split_left: equivalence failed", p, a, q, b, c);
  SplitResult out;
  out.exists = w_paq.has_value();
  if (!out.exists) return out;

  Element y = w_paq->y, x = q * y, z = y * p;
  if (!is_left_bc_witness(p * a, q * b, c, x) ||
      !is_left_bc_witness(a * q, b, c * p, z))
    violation("split_left: mapped witness recheck failed", p, a, q, b, c);
  // converse direction: reassemble from the independent one-sided witnesses
  Element back = w_aq->y * a * w_pa->y;
  if (!is_left_bc_witness(paq, b, c, back))
    violation("split_left: reassembled witness recheck failed", p, a, q, b, c);
  out.y = y;
  out.x = x;
  out.z = z;
  return out;
}

SplitResult split_right(Element p, Element a, Element q, Element b, Element c) {
  require_same5(p, a, q, b, c);
  Element paq = p * a * q;
  auto w_paq = right_bc(paq, b, c);
  auto w_pa = right_bc(p * a, q * b, c);
  auto w_aq = right_bc(a * q, b, c * p);
  if (w_paq.has_value() != (w_pa.has_value() && w_aq.has_value()))
    violation("split_right: equivalence failed", p, a, q, b, c);
  SplitResult out;
  out.exists = w_paq.has_value();
  if (!out.exists) return out;

  Element y = w_paq->y, x = q * y, z = y * p;
  if (!is_right_bc_witness(p * a, q * b, c, x) ||
      !is_right_bc_witness(a * q, b, c * p, z))
    violation("split_right: mapped witness recheck failed", p, a, q, b, c);
  Element back = w_aq->y * a * w_pa->y;
  if (!is_right_bc_witness(paq, b, c, back))
    violation("split_right: reassembled witness recheck failed", p, a, q, b, c);
  out.y = y;
  out.x = x;
  out.z = z;
  return out;
}

TransferResult transfer(Element p, Element a, Element q, Element b, Element c,
                        Sided side) {
  require_same5(p, a, q, b, c);
  TransferResult out;
  Element qb = q * b, cp = c * p;
  bool need_qp = side == Sided::left || side == Sided::both;
  bool need_pp = side == Sided::right || side == Sided::both;
  if (need_qp) {
    out.q_prime = solve_left_factor(b, qb);  // q'*(q*b) = b
    if (!out.q_prime) return out;
  }
  if (need_pp) {
    out.p_prime = solve_right_factor(c, cp);  // (c*p)*p' = c
    if (!out.p_prime) return out;
  }
  out.precondition_ok = true;

  Element paq = p * a * q;
  std::optional<Witness> w_paq, w_a;
  switch (side) {
    case Sided::left:
      w_paq = left_bc(paq, b, c);
      w_a = left_bc(a, qb, cp);
      break;
    case Sided::right:
      w_paq = right_bc(paq, b, c);
      w_a = right_bc(a, qb, cp);
      break;
    case Sided::both:
      w_paq = two_sided_bc(paq, b, c);
      w_a = two_sided_bc(a, qb, cp);
      break;
  }
  if (w_paq.has_value() != w_a.has_value())
    violation("transfer: equivalence failed", p, a, q, b, c);
  out.exists = w_paq.has_value();
  if (!out.exists) return out;

  Element w = q * w_paq->y * p;
  bool ok = false;
  switch (side) {
    case Sided::left:  ok = is_left_bc_witness(a, qb, cp, w); break;
    case Sided::right: ok = is_right_bc_witness(a, qb, cp, w); break;
    case Sided::both:  ok = is_bc_inverse(a, qb, cp, w) && w == w_a->y; break;
  }
  if (!ok) violation("transfer: witness recheck failed", p, a, q, b, c);
  out.w = w;
  return out;
}

MixedTransferResult mixed_transfer(Element p, Element a, Element q, Element b,
                                   Element c) {
  require_same5(p, a, q, b, c);
  MixedTransferResult out;
  if (!solve_left_factor(c, q * c) ||   // q'*(q*c) = c
      !solve_right_factor(b, b * p))    // (b*p)*p' = b
    return out;
  out.precondition_ok = true;

  Element paq = p * a * q;
  auto whole = two_sided_bc(paq, b, c);
  auto x_part = right_bc(p * a, q * b, q * c);
  auto z_part = left_bc(a * q, b * p, c * p);
  if (whole.has_value() != (x_part.has_value() && z_part.has_value()))
    violation("mixed_transfer: equivalence failed", p, a, q, b, c);
  out.exists = whole.has_value();
  if (!out.exists) return out;

  Element y = z_part->y * a * x_part->y;
  if (y * paq * b != b || c * paq * y != c || !scan_in_left_ideal(y, c) ||
      !scan_in_right_ideal(y, b) || y != whole->y)
    violation("mixed_transfer: reassembled witness recheck failed", p, a, q, b, c);
  out.y = y;
  return out;
}

}  // namespace bcinv
