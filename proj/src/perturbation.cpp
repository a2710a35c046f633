#include "bcinv/perturbation.hpp"

#include <stdexcept>

namespace bcinv {

Element jacobson_left(Element a, Element b, Element y) {
  const Ring& R = a.ring();
  Element one = R.one();
  if (y * (one + a * b) != one)
    throw std::invalid_argument("jacobson_left: y*(1+ab) = 1 required");
  Element out = one - b * y * a;
  if (out * (one + b * a) != one)
    throw std::logic_error("jacobson_left: (1-bya)(1+ba) = 1 recheck failed");
  return out;
}

Element jacobson_right(Element a, Element b, Element x) {
  const Ring& R = a.ring();
  Element one = R.one();
  if ((one + a * b) * x != one)
    throw std::invalid_argument("jacobson_right: (1+ab)*x = 1 required");
  Element out = one - b * x * a;
  if ((one + b * a) * out != one)
    throw std::logic_error("jacobson_right: (1+ba)(1-bxa) = 1 recheck failed");
  return out;
}

Element jacobson_inverse(Element a, Element b, Element inv) {
  const Ring& R = a.ring();
  Element one = R.one();
  Element u = one + a * b;
  if (inv * u != one || u * inv != one)
    throw std::invalid_argument("jacobson_inverse: inv must invert 1+ab two-sidedly");
  Element out = one - b * inv * a;
  Element v = one + b * a;
  if (out * v != one || v * out != one)
    throw std::logic_error("jacobson_inverse: (1+ba)^{-1} recheck failed");
  return out;
}

PerturbationReport perturbed_one_sided(Element a, Element b, Element c,
                                       Element a_bc, Element alpha, Side side) {
  if (!is_bc_inverse(a, b, c, a_bc))
    throw std::invalid_argument("perturbed_one_sided: a_bc is not the (b,c)-inverse of a");
  const Ring& R = a.ring();
  Element one = R.one();
  Element du = one + (alpha - a) * a_bc;  // 1+(α-a)a⊗
  Element dv = one + a_bc * (alpha - a);  // 1+a⊗(α-a)

  PerturbationReport rep;
  if (side == Side::left) {
    rep.conditions[0] = left_bc(alpha, b, c).has_value();
    rep.conditions[1] = right_ann_bc(alpha, b, c).has_value();
    rep.conditions[2] = left_invertible(du).has_value();
    rep.conditions[3] = left_invertible(dv).has_value();
  } else {
    rep.conditions[0] = right_bc(alpha, b, c).has_value();
    rep.conditions[1] = left_ann_bc(alpha, b, c).has_value();
    rep.conditions[2] = right_invertible(du).has_value();
    rep.conditions[3] = right_invertible(dv).has_value();
  }
  for (int i = 1; i < 4; ++i)
    if (rep.conditions[i] != rep.conditions[0])
      throw std::logic_error(
          "perturbed_one_sided: equivalence failed on (a,b,c,a_bc,alpha) = (" +
          format_element(a) + ", " + format_element(b) + ", " +
          format_element(c) + ", " + format_element(a_bc) + ", " +
          format_element(alpha) + ") side=" +
          (side == Side::left ? "left" : "right"));
  rep.invertible = rep.conditions[0];
  return rep;
}

}  // namespace bcinv
