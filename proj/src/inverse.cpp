#include "bcinv/inverse.hpp"

#include <stdexcept>

namespace bcinv {
namespace {

void require_same(Element a, Element b) {
  if (&a.ring() != &b.ring())
    throw std::invalid_argument("mixed-ring operands");
}

[[noreturn]] void internal_error(const char* where, Element a, Element b,
                                 Element c) {
  throw std::logic_error(std::string(where) + ": certificate recheck failed on (" +
                         format_element(a) + ", " + format_element(b) + ", " +
                         format_element(c) + ")");
}

// Least element of { map(s) : s*g = x } together with a witnessing s.
struct MappedLeast {
  Element y, factor;
};
template <typename Map>
std::optional<MappedLeast> least_image(Element x, Element g, Map map) {
  std::optional<MappedLeast> best;
  for_each_left_factor_solution(x, g, [&](Element s) {
    Element y = map(s);
    if (!best || y.code() < best->y.code()) best = MappedLeast{y, s};
    return true;
  });
  return best;
}
template <typename Map>
std::optional<MappedLeast> least_image_right(Element x, Element g, Map map) {
  std::optional<MappedLeast> best;
  for_each_right_factor_solution(x, g, [&](Element t) {
    Element y = map(t);
    if (!best || y.code() < best->y.code()) best = MappedLeast{y, t};
    return true;
  });
  return best;
}

}  // namespace

std::string InverseKind::to_string() const {
  switch (tag) {
    case InverseTag::left_bc: return "left_bc";
    case InverseTag::right_bc: return "right_bc";
    case InverseTag::right_ann_bc: return "right_ann_bc";
    case InverseTag::left_ann_bc: return "left_ann_bc";
    case InverseTag::two_sided_bc: return "two_sided_bc";
    case InverseTag::hybrid_bc: return "hybrid_bc";
    case InverseTag::ann_bc: return "ann_bc";
    case InverseTag::mary_left: return "mary_left";
    case InverseTag::mary_right: return "mary_right";
    case InverseTag::mary: return "mary";
    case InverseTag::delta: return "delta";
    case InverseTag::moore_penrose: return "moore_penrose";
    case InverseTag::group: return "group";
    case InverseTag::drazin: return "drazin";
  }
  return "?";
}

InverseKind InverseKind::parse(std::string_view text) {
  static const std::pair<const char*, InverseTag> table[] = {
      {"left_bc", InverseTag::left_bc},
      {"right_bc", InverseTag::right_bc},
      {"right_ann_bc", InverseTag::right_ann_bc},
      {"left_ann_bc", InverseTag::left_ann_bc},
      {"two_sided_bc", InverseTag::two_sided_bc},
      {"hybrid_bc", InverseTag::hybrid_bc},
      {"ann_bc", InverseTag::ann_bc},
      {"mary_left", InverseTag::mary_left},
      {"mary_right", InverseTag::mary_right},
      {"mary", InverseTag::mary},
      {"delta", InverseTag::delta},
      {"moore_penrose", InverseTag::moore_penrose},
      {"group", InverseTag::group},
      {"drazin", InverseTag::drazin},
  };
  for (const auto& [name, tag] : table)
    if (text == name) return InverseKind{tag, 0};
  throw std::invalid_argument("unknown inverse kind '" + std::string(text) + "'");
}

unsigned parse_delta_set(std::string_view text) {
  unsigned mask = 0;
  bool expect_digit = true;
  for (char ch : text) {
    if (expect_digit) {
      if (ch < '1' || ch > '4')
        throw std::invalid_argument("delta set must list digits 1-4");
      mask |= delta_bit(static_cast<unsigned>(ch - '0'));
      expect_digit = false;
    } else {
      if (ch != ',')
        throw std::invalid_argument("delta set digits must be comma-separated");
      expect_digit = true;
    }
  }
  if (mask == 0 || expect_digit)
    throw std::invalid_argument("delta set must be a nonempty subset of {1,2,3,4}");
  return mask;
}

std::string delta_set_to_string(unsigned mask) {
  std::string out = "{";
  for (unsigned i = 1; i <= 4; ++i)
    if (mask & delta_bit(i)) {
      if (out.size() > 1) out += ",";
      out += static_cast<char>('0' + i);
    }
  return out + "}";
}

// --- definition-level predicates -------------------------------------------

bool scan_in_left_ideal(Element y, Element g) {
  require_same(y, g);
  const Ring& R = y.ring();
  for (std::uint64_t r = 0; r < R.cardinality(); ++r)
    if (R.element(r) * g == y) return true;
  return false;
}

bool scan_in_right_ideal(Element y, Element g) {
  require_same(y, g);
  const Ring& R = y.ring();
  for (std::uint64_t r = 0; r < R.cardinality(); ++r)
    if (g * R.element(r) == y) return true;
  return false;
}

bool right_ann_contained(Element g1, Element g2) {
  require_same(g1, g2);
  const Ring& R = g1.ring();
  Element zero = R.zero();
  for (std::uint64_t x = 0; x < R.cardinality(); ++x) {
    Element xe = R.element(x);
    if (g1 * xe == zero && g2 * xe != zero) return false;
  }
  return true;
}

bool left_ann_contained(Element g1, Element g2) {
  require_same(g1, g2);
  const Ring& R = g1.ring();
  Element zero = R.zero();
  for (std::uint64_t x = 0; x < R.cardinality(); ++x) {
    Element xe = R.element(x);
    if (xe * g1 == zero && xe * g2 != zero) return false;
  }
  return true;
}

bool same_right_ann(Element x, Element y) {
  require_same(x, y);
  const Ring& R = x.ring();
  Element zero = R.zero();
  for (std::uint64_t c = 0; c < R.cardinality(); ++c) {
    Element e = R.element(c);
    if ((x * e == zero) != (y * e == zero)) return false;
  }
  return true;
}

bool same_left_ann(Element x, Element y) {
  require_same(x, y);
  const Ring& R = x.ring();
  Element zero = R.zero();
  for (std::uint64_t c = 0; c < R.cardinality(); ++c) {
    Element e = R.element(c);
    if ((e * x == zero) != (e * y == zero)) return false;
  }
  return true;
}

bool is_left_bc_witness(Element a, Element b, Element c, Element y) {
  // Ry ⊆ Rc is equivalent to y ∈ Rc
  return y * a * b == b && scan_in_left_ideal(y, c);
}

bool is_right_bc_witness(Element a, Element b, Element c, Element y) {
  return c * a * y == c && scan_in_right_ideal(y, b);
}

bool is_right_ann_bc_witness(Element a, Element b, Element c, Element y) {
  return y * a * b == b && right_ann_contained(c, y);
}

bool is_left_ann_bc_witness(Element a, Element b, Element c, Element y) {
  return c * a * y == c && left_ann_contained(b, y);
}

bool is_bc_inverse(Element a, Element b, Element c, Element y) {
  if (y * a * b != b || c * a * y != c) return false;
  const Ring& R = y.ring();
  bool in_bRy = false, in_yRc = false;
  for (std::uint64_t r = 0; r < R.cardinality() && !in_bRy; ++r)
    if (b * R.element(r) * y == y) in_bRy = true;
  if (!in_bRy) return false;
  for (std::uint64_t r = 0; r < R.cardinality() && !in_yRc; ++r)
    if (y * R.element(r) * c == y) in_yRc = true;
  return in_yRc;
}

bool is_hybrid_bc_witness(Element a, Element b, Element c, Element y) {
  return y * a * y == y && scan_in_right_ideal(y, b) &&
         scan_in_right_ideal(b, y) && same_right_ann(y, c);
}

bool is_ann_bc_witness(Element a, Element b, Element c, Element y) {
  return y * a * y == y && same_left_ann(b, y) && same_right_ann(y, c);
}

bool satisfies_penrose(Element a, Element y, unsigned delta_mask) {
  if ((delta_mask & 0b0010) && a * y * a != a) return false;
  if ((delta_mask & 0b0100) && y * a * y != y) return false;
  if ((delta_mask & 0b1000) && star(a * y) != a * y) return false;
  if ((delta_mask & 0b10000) && star(y * a) != y * a) return false;
  return true;
}

bool is_drazin_inverse(Element a, Element y, unsigned k) {
  return a * y == y * a && y * a * y == y && pow(a, k) == pow(a, k + 1) * y;
}

bool is_regular(Element a) {
  const Ring& R = a.ring();
  for (std::uint64_t w = 0; w < R.cardinality(); ++w)
    if (a * R.element(w) * a == a) return true;
  return false;
}

bool verify_witness(Element a, Element b, Element c, const Witness& w) {
  Element y = w.y;
  auto factor = [&](const char* name) -> std::optional<Element> {
    for (const auto& [n, e] : w.factors)
      if (n == name) return e;
    return std::nullopt;
  };
  switch (w.kind.tag) {
    case InverseTag::left_bc: {
      auto s = factor("s");
      return s && *s * c == y && y * a * b == b;
    }
    case InverseTag::right_bc: {
      auto t = factor("t");
      return t && b * *t == y && c * a * y == c;
    }
    case InverseTag::right_ann_bc:
      return is_right_ann_bc_witness(a, b, c, y);
    case InverseTag::left_ann_bc:
      return is_left_ann_bc_witness(a, b, c, y);
    case InverseTag::two_sided_bc: {
      auto s = factor("s");
      auto t = factor("t");
      return s && t && *s * c == y && b * *t == y && is_bc_inverse(a, b, c, y);
    }
    case InverseTag::hybrid_bc:
      return is_hybrid_bc_witness(a, b, c, y);
    case InverseTag::ann_bc:
      return is_ann_bc_witness(a, b, c, y);
    case InverseTag::mary_left: {
      auto s = factor("s");
      return s && *s * c == y && y * a * b == b;  // b == c == d
    }
    case InverseTag::mary_right: {
      auto t = factor("t");
      return t && b * *t == y && c * a * y == c;
    }
    case InverseTag::mary:
      return y * a * b == b && b * a * y == b && is_bc_inverse(a, b, c, y);
    case InverseTag::delta:
      return satisfies_penrose(a, y, w.kind.delta_mask);
    case InverseTag::moore_penrose:
      return satisfies_penrose(a, y, 0b11110);
    case InverseTag::group:
      return w.index == 1 && is_drazin_inverse(a, y, 1);
    case InverseTag::drazin:
      return w.index >= 1 && is_drazin_inverse(a, y, w.index);
  }
  return false;
}

// --- decision procedures ---------------------------------------------------

std::optional<Witness> left_bc(Element a, Element b, Element c) {
  require_same(a, b);
  require_same(a, c);
  // Rb = Rcab criterion: any s with s*(cab) = b yields the witness s*c, and
  // every witness arises this way; take the least of the image.
  auto best = least_image(b, c * a * b, [&](Element s) { return s * c; });
  if (!best) return std::nullopt;
  Witness w{InverseKind{InverseTag::left_bc}, best->y, {{"s", best->factor}}, 0};
  if (!verify_witness(a, b, c, w)) internal_error("left_bc", a, b, c);
  return w;
}

std::optional<Witness> right_bc(Element a, Element b, Element c) {
  require_same(a, b);
  require_same(a, c);
  // cR = cabR criterion: witnesses are exactly b*t over solutions of
  // (cab)*t = c.
  auto best = least_image_right(c, c * a * b, [&](Element t) { return b * t; });
  if (!best) return std::nullopt;
  Witness w{InverseKind{InverseTag::right_bc}, best->y, {{"t", best->factor}}, 0};
  if (!verify_witness(a, b, c, w)) internal_error("right_bc", a, b, c);
  return w;
}

std::optional<Witness> right_ann_bc(Element a, Element b, Element c) {
  require_same(a, b);
  require_same(a, c);
  const Ring& R = a.ring();
  if (is_regular(c)) {
    // with c regular, the right annihilator witnesses coincide with the
    // left (b,c) witnesses
    auto w = left_bc(a, b, c);
    if (!w) return std::nullopt;
    Witness out{InverseKind{InverseTag::right_ann_bc}, w->y, {}, 0};
    if (!verify_witness(a, b, c, out)) internal_error("right_ann_bc", a, b, c);
    return out;
  }
  // exhaustive least-code search over the definition
  std::vector<std::uint64_t> ann;  // c° as a code list
  Element zero = R.zero();
  for (std::uint64_t x = 0; x < R.cardinality(); ++x)
    if (c * R.element(x) == zero) ann.push_back(x);
  for (std::uint64_t yc = 0; yc < R.cardinality(); ++yc) {
    Element y = R.element(yc);
    if (y * a * b != b) continue;
    bool ok = true;
    for (std::uint64_t x : ann)
      if (y * R.element(x) != zero) {
        ok = false;
        break;
      }
    if (ok) return Witness{InverseKind{InverseTag::right_ann_bc}, y, {}, 0};
  }
  return std::nullopt;
}

std::optional<Witness> left_ann_bc(Element a, Element b, Element c) {
  require_same(a, b);
  require_same(a, c);
  const Ring& R = a.ring();
  if (is_regular(b)) {
    auto w = right_bc(a, b, c);
    if (!w) return std::nullopt;
    Witness out{InverseKind{InverseTag::left_ann_bc}, w->y, {}, 0};
    if (!verify_witness(a, b, c, out)) internal_error("left_ann_bc", a, b, c);
    return out;
  }
  std::vector<std::uint64_t> ann;  // °b
  Element zero = R.zero();
  for (std::uint64_t x = 0; x < R.cardinality(); ++x)
    if (R.element(x) * b == zero) ann.push_back(x);
  for (std::uint64_t yc = 0; yc < R.cardinality(); ++yc) {
    Element y = R.element(yc);
    if (c * a * y != c) continue;
    bool ok = true;
    for (std::uint64_t x : ann)
      if (R.element(x) * y != zero) {
        ok = false;
        break;
      }
    if (ok) return Witness{InverseKind{InverseTag::left_ann_bc}, y, {}, 0};
  }
  return std::nullopt;
}

std::optional<Witness> two_sided_bc(Element a, Element b, Element c) {
  auto l = left_bc(a, b, c);
  if (!l) return std::nullopt;
  auto r = right_bc(a, b, c);
  if (!r) return std::nullopt;
  // s*c = b*t holds for every valid pair (s, t), so both one-sided
  // constructions already produced the unique two-sided inverse.
  if (l->y != r->y) internal_error("two_sided_bc", a, b, c);
  Witness w{InverseKind{InverseTag::two_sided_bc},
            l->y,
            {{"s", l->factors[0].second}, {"t", r->factors[0].second}},
            0};
  if (!verify_witness(a, b, c, w)) internal_error("two_sided_bc", a, b, c);
  return w;
}

std::optional<Witness> hybrid_bc(Element a, Element b, Element c) {
  require_same(a, b);
  require_same(a, c);
  const Ring& R = a.ring();
  // bR flags and c° flags, then scan candidates ascending
  std::vector<char> in_bR(R.cardinality(), 0);
  for (std::uint64_t r = 0; r < R.cardinality(); ++r)
    in_bR[(b * R.element(r)).code()] = 1;
  Element zero = R.zero();
  std::vector<char> ann_c(R.cardinality(), 0);
  for (std::uint64_t x = 0; x < R.cardinality(); ++x)
    ann_c[x] = (c * R.element(x) == zero) ? 1 : 0;
  for (std::uint64_t yc = 0; yc < R.cardinality(); ++yc) {
    Element y = R.element(yc);
    if (y * a * y != y || !in_bR[yc]) continue;
    if (!scan_in_right_ideal(b, y)) continue;  // yR = bR needs b ∈ yR too
    bool same = true;
    for (std::uint64_t x = 0; x < R.cardinality() && same; ++x)
      if (((y * R.element(x) == zero) ? 1 : 0) != ann_c[x]) same = false;
    if (same) return Witness{InverseKind{InverseTag::hybrid_bc}, y, {}, 0};
  }
  return std::nullopt;
}

std::optional<Witness> ann_bc(Element a, Element b, Element c) {
  require_same(a, b);
  require_same(a, c);
  const Ring& R = a.ring();
  for (std::uint64_t yc = 0; yc < R.cardinality(); ++yc) {
    Element y = R.element(yc);
    if (y * a * y != y) continue;
    if (same_left_ann(b, y) && same_right_ann(y, c))
      return Witness{InverseKind{InverseTag::ann_bc}, y, {}, 0};
  }
  return std::nullopt;
}

std::optional<Witness> inverse_along(Element a, Element d, Sided side) {
  switch (side) {
    case Sided::left: {
      auto w = left_bc(a, d, d);
      if (!w) return std::nullopt;
      Witness out{InverseKind{InverseTag::mary_left}, w->y, w->factors, 0};
      if (!verify_witness(a, d, d, out)) internal_error("inverse_along", a, d, d);
      return out;
    }
    case Sided::right: {
      auto w = right_bc(a, d, d);
      if (!w) return std::nullopt;
      Witness out{InverseKind{InverseTag::mary_right}, w->y, w->factors, 0};
      if (!verify_witness(a, d, d, out)) internal_error("inverse_along", a, d, d);
      return out;
    }
    case Sided::both: {
      auto w = two_sided_bc(a, d, d);
      if (!w) return std::nullopt;
      Witness out{InverseKind{InverseTag::mary}, w->y, w->factors, 0};
      // Mary's original equations y*a*d = d = d*a*y
      if (w->y * a * d != d || d * a * w->y != d || !verify_witness(a, d, d, out))
        internal_error("inverse_along", a, d, d);
      return out;
    }
  }
  return std::nullopt;
}

std::vector<Element> delta_inverses(Element a, unsigned delta_mask) {
  if (delta_mask == 0 || (delta_mask & ~0b11110u) != 0)
    throw std::invalid_argument("delta set must be a nonempty subset of {1,2,3,4}");
  const Ring& R = a.ring();
  std::vector<Element> out;
  for (std::uint64_t yc = 0; yc < R.cardinality(); ++yc) {
    Element y = R.element(yc);
    if (satisfies_penrose(a, y, delta_mask)) out.push_back(y);
  }
  return out;
}

std::optional<Witness> moore_penrose(Element a) {
  const Ring& R = a.ring();
  bool via_bc = left_bc(a, star(a), R.one()).has_value() &&
                right_bc(a, R.one(), star(a)).has_value();
  std::optional<Element> found;
  for (std::uint64_t yc = 0; yc < R.cardinality(); ++yc) {
    Element y = R.element(yc);
    if (satisfies_penrose(a, y, 0b11110)) {
      if (found) throw std::logic_error("moore_penrose: multiple witnesses");
      found = y;
    }
  }
  if (via_bc != found.has_value())
    throw std::logic_error("moore_penrose: bc-route disagrees with the four-equation search");
  if (!found) return std::nullopt;
  return Witness{InverseKind{InverseTag::moore_penrose}, *found, {}, 0};
}

std::optional<PiRegularity> pi_regular(Element a, Side side) {
  const Ring& R = a.ring();
  Element an = a;  // a^n
  for (unsigned n = 1; n <= R.cardinality(); ++n) {
    Element an1 = an * a;  // a^(n+1)
    std::optional<Element> found;
    for (std::uint64_t x = 0; x < R.cardinality(); ++x) {
      Element xe = R.element(x);
      Element lhs = side == Side::left ? xe * an1 : an1 * xe;
      if (lhs == an) {
        found = xe;
        break;
      }
    }
    bool bc = side == Side::left ? left_bc(a, an, R.one()).has_value()
                                 : right_bc(a, R.one(), an).has_value();
    if (bc != found.has_value())
      throw std::logic_error("pi_regular: bc-route disagrees at n=" +
                             std::to_string(n));
    if (found) return PiRegularity{n, *found};
    an = an1;
  }
  return std::nullopt;
}

std::optional<Witness> drazin(Element a) {
  const Ring& R = a.ring();
  Element an = a;
  for (unsigned n = 1; n <= R.cardinality(); ++n) {
    Element an1 = an * a;
    bool left = false, right = false;
    for (std::uint64_t x = 0; x < R.cardinality() && !(left && right); ++x) {
      Element xe = R.element(x);
      if (!left && xe * an1 == an) left = true;
      if (!right && an1 * xe == an) right = true;
    }
    if (left && right) {
      std::optional<Element> found;
      for (std::uint64_t yc = 0; yc < R.cardinality(); ++yc) {
        Element y = R.element(yc);
        if (is_drazin_inverse(a, y, n)) {
          if (found)
            throw std::logic_error("drazin: multiple witnesses at index " +
                                   std::to_string(n));
          found = y;
        }
      }
      if (!found)
        throw std::logic_error("drazin: no witness despite strong pi-regularity");
      if (!two_sided_bc(a, an, an).has_value())
        throw std::logic_error("drazin: (a^k, a^k)-inverse route disagrees");
      return Witness{InverseKind{InverseTag::drazin}, *found, {}, n};
    }
    an = an1;
  }
  return std::nullopt;
}

std::optional<Witness> group_inverse(Element a) {
  auto w = drazin(a);
  if (!w || w->index != 1) return std::nullopt;
  w->kind = InverseKind{InverseTag::group};
  return w;
}

std::optional<Element> star_regular(Element a, Side side) {
  const Ring& R = a.ring();
  Element aaa = a * star(a) * a;
  std::optional<Element> found;
  for (std::uint64_t x = 0; x < R.cardinality(); ++x) {
    Element xe = R.element(x);
    Element lhs = side == Side::left ? aaa * xe : xe * aaa;
    if (lhs == a) {
      found = xe;
      break;
    }
  }
  bool bc = side == Side::left ? left_bc(a, star(a), star(a)).has_value()
                               : right_bc(a, star(a), star(a)).has_value();
  if (bc != found.has_value())
    throw std::logic_error("star_regular: bc-route disagrees");
  return found;
}

std::vector<Element> witness_set(InverseKind kind, Element a, Element b,
                                 Element c) {
  const Ring& R = a.ring();
  std::vector<Element> out;
  auto collect = [&](auto&& pred) {
    for (std::uint64_t yc = 0; yc < R.cardinality(); ++yc) {
      Element y = R.element(yc);
      if (pred(y)) out.push_back(y);
    }
  };
  switch (kind.tag) {
    case InverseTag::left_bc:
    case InverseTag::mary_left:
      collect([&](Element y) { return is_left_bc_witness(a, b, c, y); });
      break;
    case InverseTag::right_bc:
    case InverseTag::mary_right:
      collect([&](Element y) { return is_right_bc_witness(a, b, c, y); });
      break;
    case InverseTag::right_ann_bc:
      collect([&](Element y) { return is_right_ann_bc_witness(a, b, c, y); });
      break;
    case InverseTag::left_ann_bc:
      collect([&](Element y) { return is_left_ann_bc_witness(a, b, c, y); });
      break;
    case InverseTag::two_sided_bc:
      collect([&](Element y) { return is_bc_inverse(a, b, c, y); });
      break;
    case InverseTag::mary:
      // Mary's original equations with d = b = c
      collect([&](Element y) {
        return y * a * b == b && b * a * y == b &&
               scan_in_right_ideal(y, b) && scan_in_left_ideal(y, b);
      });
      break;
    case InverseTag::hybrid_bc:
      collect([&](Element y) { return is_hybrid_bc_witness(a, b, c, y); });
      break;
    case InverseTag::ann_bc:
      collect([&](Element y) { return is_ann_bc_witness(a, b, c, y); });
      break;
    case InverseTag::delta:
      return delta_inverses(a, kind.delta_mask);
    case InverseTag::moore_penrose:
      collect([&](Element y) { return satisfies_penrose(a, y, 0b11110); });
      break;
    case InverseTag::group:
      collect([&](Element y) { return is_drazin_inverse(a, y, 1); });
      break;
    case InverseTag::drazin: {
      auto w = drazin(a);
      if (w) collect([&](Element y) { return is_drazin_inverse(a, y, w->index); });
      break;
    }
  }
  return out;
}

}  // namespace bcinv
