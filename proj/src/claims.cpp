#include "bcinv/claims.hpp"

#include "bcinv/inverse.hpp"
#include "bcinv/perturbation.hpp"
#include "bcinv/product.hpp"

namespace bcinv {
namespace {

using CT = ConditionTrace;

void put(CT* t, const char* name, bool v) {
  if (t) t->conditions.emplace_back(name, v);
}

// --- set machinery (definition-level, raw scans) ---------------------------

std::vector<char> flags_Rg(const Ring& R, Element g) {
  std::vector<char> f(R.cardinality(), 0);
  for (std::uint64_t r = 0; r < R.cardinality(); ++r)
    f[(R.element(r) * g).code()] = 1;
  return f;
}

std::vector<char> flags_gR(const Ring& R, Element g) {
  std::vector<char> f(R.cardinality(), 0);
  for (std::uint64_t r = 0; r < R.cardinality(); ++r)
    f[(g * R.element(r)).code()] = 1;
  return f;
}

std::vector<char> flags_ann_right(const Ring& R, Element g) {  // g°
  std::vector<char> f(R.cardinality(), 0);
  for (std::uint64_t x = 0; x < R.cardinality(); ++x)
    f[x] = (g * R.element(x) == R.zero()) ? 1 : 0;
  return f;
}

std::vector<char> flags_ann_left(const Ring& R, Element g) {  // °g
  std::vector<char> f(R.cardinality(), 0);
  for (std::uint64_t x = 0; x < R.cardinality(); ++x)
    f[x] = (R.element(x) * g == R.zero()) ? 1 : 0;
  return f;
}

bool subset_of(const std::vector<char>& a, const std::vector<char>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

bool same_set(const std::vector<char>& a, const std::vector<char>& b) {
  return a == b;
}

// {u + v : u in A, v in B} covers the whole carrier
bool sum_spans(const Ring& R, const std::vector<char>& A,
               const std::vector<char>& B) {
  std::vector<char> hit(R.cardinality(), 0);
  std::uint64_t covered = 0;
  for (std::uint64_t u = 0; u < R.cardinality(); ++u) {
    if (!A[u]) continue;
    Element ue = R.element(u);
    for (std::uint64_t v = 0; v < R.cardinality(); ++v) {
      if (!B[v]) continue;
      std::uint64_t s = (ue + R.element(v)).code();
      if (!hit[s]) {
        hit[s] = 1;
        if (++covered == R.cardinality()) return true;
      }
    }
  }
  return covered == R.cardinality();
}

bool meet_trivial(const std::vector<char>& A, const std::vector<char>& B) {
  for (std::size_t i = 1; i < A.size(); ++i)
    if (A[i] && B[i]) return false;
  return true;
}

bool direct_sum(const Ring& R, const std::vector<char>& A,
                const std::vector<char>& B) {
  return sum_spans(R, A, B) && meet_trivial(A, B);
}

// --- definition-level existence scans ---------------------------------------

bool ex_left(const Ring& R, Element a, Element b, Element c) {
  std::vector<char> rc = flags_Rg(R, c);
  for (std::uint64_t y = 0; y < R.cardinality(); ++y) {
    Element ye = R.element(y);
    if (rc[y] && ye * a * b == b) return true;
  }
  return false;
}

bool ex_right(const Ring& R, Element a, Element b, Element c) {
  std::vector<char> br = flags_gR(R, b);
  for (std::uint64_t y = 0; y < R.cardinality(); ++y) {
    Element ye = R.element(y);
    if (br[y] && c * a * ye == c) return true;
  }
  return false;
}

bool ex_right_ann(const Ring& R, Element a, Element b, Element c) {
  for (std::uint64_t y = 0; y < R.cardinality(); ++y)
    if (is_right_ann_bc_witness(a, b, c, R.element(y))) return true;
  return false;
}

bool ex_left_ann(const Ring& R, Element a, Element b, Element c) {
  for (std::uint64_t y = 0; y < R.cardinality(); ++y)
    if (is_left_ann_bc_witness(a, b, c, R.element(y))) return true;
  return false;
}

bool ex_two(const Ring& R, Element a, Element b, Element c) {
  for (std::uint64_t y = 0; y < R.cardinality(); ++y)
    if (is_bc_inverse(a, b, c, R.element(y))) return true;
  return false;
}

std::vector<std::uint64_t> left_witness_codes(const Ring& R, Element a,
                                              Element b, Element c) {
  std::vector<char> rc = flags_Rg(R, c);
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < R.cardinality(); ++y)
    if (rc[y] && R.element(y) * a * b == b) out.push_back(y);
  return out;
}

std::vector<std::uint64_t> right_witness_codes(const Ring& R, Element a,
                                               Element b, Element c) {
  std::vector<char> br = flags_gR(R, b);
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < R.cardinality(); ++y)
    if (br[y] && c * a * R.element(y) == c) out.push_back(y);
  return out;
}

std::vector<std::uint64_t> right_ann_witness_codes(const Ring& R, Element a,
                                                   Element b, Element c) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < R.cardinality(); ++y)
    if (is_right_ann_bc_witness(a, b, c, R.element(y))) out.push_back(y);
  return out;
}

std::optional<Element> least_such(const Ring& R,
                                  const std::function<bool(Element)>& pred) {
  for (std::uint64_t y = 0; y < R.cardinality(); ++y) {
    Element ye = R.element(y);
    if (pred(ye)) return ye;
  }
  return std::nullopt;
}

bool unit_exists(const Ring& R, Element u, Side side) {
  for (std::uint64_t t = 0; t < R.cardinality(); ++t) {
    Element te = R.element(t);
    if (side == Side::left ? te * u == R.one() : u * te == R.one())
      return true;
  }
  return false;
}

bool pi_at(const Ring& R, Element a, unsigned n, Side side) {
  Element an = pow(a, n), an1 = pow(a, n + 1);
  for (std::uint64_t x = 0; x < R.cardinality(); ++x) {
    Element xe = R.element(x);
    if ((side == Side::left ? xe * an1 : an1 * xe) == an) return true;
  }
  return false;
}

Claim holds(std::string id, unsigned arity, std::string statement,
            std::function<bool(const RingHandle&, const std::vector<Element>&,
                               CT*)>
                pred) {
  return Claim{std::move(id), arity, Claim::Expected::holds,
               std::move(statement), std::move(pred)};
}

Claim fails(std::string id, unsigned arity, std::string statement,
            std::function<bool(const RingHandle&, const std::vector<Element>&,
                               CT*)>
                pred) {
  return Claim{std::move(id), arity, Claim::Expected::fails_somewhere,
               std::move(statement), std::move(pred)};
}

std::vector<Claim> build_registry() {
  std::vector<Claim> reg;

  // ---- existence criteria ----

  reg.push_back(holds(
      "existence-left-bc", 3,
      "a is left (b,c)-invertible iff Rb = Rcab",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        bool criterion = ideal_eq_rb_rcab(a, b, c).has_value();
        bool definitional = ex_left(R, a, b, c);
        put(tr, "criterion", criterion);
        put(tr, "definitional", definitional);
        return criterion == definitional;
      }));

  reg.push_back(holds(
      "existence-right-bc", 3,
      "a is right (b,c)-invertible iff cR = cabR",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        bool criterion = solve_right_factor(c, c * a * b).has_value();
        bool definitional = ex_right(R, a, b, c);
        put(tr, "criterion", criterion);
        put(tr, "definitional", definitional);
        return criterion == definitional;
      }));

  // ---- one-sided vs annihilator witnesses ----

  reg.push_back(holds(
      "remark-left-witness-is-rightann", 4,
      "every left (b,c)-witness is a right annihilator (b,c)-witness",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool lw = is_left_bc_witness(a, b, c, y);
        put(tr, "left_witness", lw);
        if (!lw) return true;
        bool rw = is_right_ann_bc_witness(a, b, c, y);
        put(tr, "right_ann_witness", rw);
        return rw;
      }));

  reg.push_back(holds(
      "remark-right-witness-is-leftann", 4,
      "every right (b,c)-witness is a left annihilator (b,c)-witness",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool rw = is_right_bc_witness(a, b, c, y);
        put(tr, "right_witness", rw);
        if (!rw) return true;
        bool lw = is_left_ann_bc_witness(a, b, c, y);
        put(tr, "left_ann_witness", lw);
        return lw;
      }));

  reg.push_back(fails(
      "converse-annihilator-to-onesided", 4,
      "a right annihilator (b,c)-witness need not be a left (b,c)-witness",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool rw = is_right_ann_bc_witness(a, b, c, y);
        put(tr, "right_ann_witness", rw);
        if (!rw) return true;
        bool lw = is_left_bc_witness(a, b, c, y);
        put(tr, "left_witness", lw);
        return lw;
      }));

  reg.push_back(fails(
      "remark-c-ann-eq-but-not-ideal", 2,
      "equal right annihilators of c and y need not put y into Rc",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element c = t[0], y = t[1];
        bool eq = same_right_ann(c, y);
        put(tr, "ann_equal", eq);
        if (!eq) return true;
        bool in_rc = scan_in_left_ideal(y, c);
        put(tr, "in_Rc", in_rc);
        return in_rc;
      }));

  reg.push_back(holds(
      "bridge-regular-c-left-vs-rightann", 4,
      "for regular c: y is a left (b,c)-witness iff a right annihilator one",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool reg_c = is_regular(c);
        put(tr, "c_regular", reg_c);
        if (!reg_c) return true;
        bool lw = is_left_bc_witness(a, b, c, y);
        bool rw = is_right_ann_bc_witness(a, b, c, y);
        put(tr, "left_witness", lw);
        put(tr, "right_ann_witness", rw);
        return lw == rw;
      }));

  reg.push_back(holds(
      "bridge-regular-b-right-vs-leftann", 4,
      "for regular b: y is a right (b,c)-witness iff a left annihilator one",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool reg_b = is_regular(b);
        put(tr, "b_regular", reg_b);
        if (!reg_b) return true;
        bool rw = is_right_bc_witness(a, b, c, y);
        bool lw = is_left_ann_bc_witness(a, b, c, y);
        put(tr, "right_witness", rw);
        put(tr, "left_ann_witness", lw);
        return rw == lw;
      }));

  // ---- the two-sided corollary ----

  reg.push_back(holds(
      "two-sided-iff-left-and-right", 3,
      "a is (b,c)-invertible iff it is left and right (b,c)-invertible",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        bool two = ex_two(R, a, b, c);
        bool l = ex_left(R, a, b, c), r = ex_right(R, a, b, c);
        put(tr, "two_sided", two);
        put(tr, "left", l);
        put(tr, "right", r);
        return two == (l && r);
      }));

  reg.push_back(holds(
      "two-sided-iff-regular-and-ann", 3,
      "a is (b,c)-invertible iff b,c are regular and a is left and right "
      "annihilator (b,c)-invertible",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        bool two = ex_two(R, a, b, c);
        bool rhs = is_regular(b) && is_regular(c) &&
                   ex_left_ann(R, a, b, c) && ex_right_ann(R, a, b, c);
        put(tr, "two_sided", two);
        put(tr, "regular_and_ann", rhs);
        return two == rhs;
      }));

  // ---- star duality ----

  reg.push_back(holds(
      "star-duality-left", 4,
      "y is a left (b,c)-witness of a iff y* is a right (c*,b*)-witness of a*",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool lw = is_left_bc_witness(a, b, c, y);
        bool rw = is_right_bc_witness(star(a), star(c), star(b), star(y));
        put(tr, "left_witness", lw);
        put(tr, "dual_right_witness", rw);
        return lw == rw;
      }));

  reg.push_back(holds(
      "star-duality-ann", 4,
      "for regular b,c: y is a left annihilator (b,c)-witness of a iff y* is "
      "a right annihilator (c*,b*)-witness of a*",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool hyp = is_regular(b) && is_regular(c);
        put(tr, "b_c_regular", hyp);
        if (!hyp) return true;
        bool lw = is_left_ann_bc_witness(a, b, c, y);
        bool rw = is_right_ann_bc_witness(star(a), star(c), star(b), star(y));
        put(tr, "left_ann_witness", lw);
        put(tr, "dual_right_ann_witness", rw);
        return lw == rw;
      }));

  // ---- annihilator consequences ----

  reg.push_back(holds(
      "rightann-implies-bcirc-eq", 3,
      "right annihilator (b,c)-invertibility forces equal right "
      "annihilators of b and cab",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        bool ex = ex_right_ann(R, a, b, c);
        put(tr, "right_ann_exists", ex);
        if (!ex) return true;
        bool eq = same_right_ann(b, c * a * b);
        put(tr, "bcirc_eq", eq);
        return eq;
      }));

  reg.push_back(holds(
      "leftann-implies-circc-eq", 3,
      "left annihilator (b,c)-invertibility forces equal left annihilators "
      "of c and cab",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        bool ex = ex_left_ann(R, a, b, c);
        put(tr, "left_ann_exists", ex);
        if (!ex) return true;
        bool eq = same_left_ann(c, c * a * b);
        put(tr, "circc_eq", eq);
        return eq;
      }));

  reg.push_back(fails(
      "converse-bcirc-equality", 3,
      "b and cab sharing right annihilators need not make a right "
      "annihilator (b,c)-invertible",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        bool eq = same_right_ann(b, c * a * b);
        put(tr, "bcirc_eq", eq);
        if (!eq) return true;
        bool ex = ex_right_ann(R, a, b, c);
        put(tr, "right_ann_exists", ex);
        return ex;
      }));

  reg.push_back(fails(
      "converse-circc-equality", 3,
      "c and cab sharing left annihilators need not make a left annihilator "
      "(b,c)-invertible",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        bool eq = same_left_ann(c, c * a * b);
        put(tr, "circc_eq", eq);
        if (!eq) return true;
        bool ex = ex_left_ann(R, a, b, c);
        put(tr, "left_ann_exists", ex);
        return ex;
      }));

  // ---- hybrid and annihilator inverse characterizations ----

  reg.push_back(holds(
      "hybrid-characterization", 4,
      "y is both a right and right annihilator (b,c)-witness iff y is the "
      "hybrid (b,c)-inverse",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool both = is_right_bc_witness(a, b, c, y) &&
                    is_right_ann_bc_witness(a, b, c, y);
        bool hybrid = is_hybrid_bc_witness(a, b, c, y);
        put(tr, "right_and_right_ann", both);
        put(tr, "hybrid", hybrid);
        return both == hybrid;
      }));

  reg.push_back(holds(
      "hybrid-characterization-dual", 4,
      "y is both a left and left annihilator (b,c)-witness iff yay=y, the "
      "left annihilators of b and y coincide and Rc = Ry",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool both = is_left_bc_witness(a, b, c, y) &&
                    is_left_ann_bc_witness(a, b, c, y);
        bool chr = y * a * y == y && same_left_ann(b, y) &&
                   scan_in_left_ideal(y, c) && scan_in_left_ideal(c, y);
        put(tr, "left_and_left_ann", both);
        put(tr, "characterization", chr);
        return both == chr;
      }));

  reg.push_back(holds(
      "ann-implies-onesided-ann", 4,
      "the annihilator (b,c)-inverse is a right and left annihilator witness",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool ann = is_ann_bc_witness(a, b, c, y);
        put(tr, "ann_witness", ann);
        if (!ann) return true;
        bool ra = is_right_ann_bc_witness(a, b, c, y);
        bool la = is_left_ann_bc_witness(a, b, c, y);
        put(tr, "right_ann_witness", ra);
        put(tr, "left_ann_witness", la);
        return ra && la;
      }));

  reg.push_back(holds(
      "left-and-leftann-implies-ann", 4,
      "a joint left and left annihilator (b,c)-witness is the annihilator "
      "(b,c)-inverse",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool both = is_left_bc_witness(a, b, c, y) &&
                    is_left_ann_bc_witness(a, b, c, y);
        put(tr, "left_and_left_ann", both);
        if (!both) return true;
        bool ann = is_ann_bc_witness(a, b, c, y);
        put(tr, "ann_witness", ann);
        return ann;
      }));

  reg.push_back(holds(
      "right-and-rightann-implies-ann", 4,
      "a joint right and right annihilator (b,c)-witness is the annihilator "
      "(b,c)-inverse",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool both = is_right_bc_witness(a, b, c, y) &&
                    is_right_ann_bc_witness(a, b, c, y);
        put(tr, "right_and_right_ann", both);
        if (!both) return true;
        bool ann = is_ann_bc_witness(a, b, c, y);
        put(tr, "ann_witness", ann);
        return ann;
      }));

  reg.push_back(holds(
      "ann-converses-under-regularity", 4,
      "for regular b,c the annihilator-inverse implications all reverse",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        bool hyp = is_regular(b) && is_regular(c);
        put(tr, "b_c_regular", hyp);
        if (!hyp) return true;
        bool ann = is_ann_bc_witness(a, b, c, y);
        bool ra = is_right_ann_bc_witness(a, b, c, y);
        bool la = is_left_ann_bc_witness(a, b, c, y);
        bool l = is_left_bc_witness(a, b, c, y);
        bool r = is_right_bc_witness(a, b, c, y);
        bool conv_i = !(ra && la) || ann;
        bool conv_ii = !ann || (l && la);
        bool conv_iii = !ann || (r && ra);
        put(tr, "conv_i", conv_i);
        put(tr, "conv_ii", conv_ii);
        put(tr, "conv_iii", conv_iii);
        return conv_i && conv_ii && conv_iii;
      }));

  reg.push_back(fails(
      "converse-prop-ann-i", 4,
      "a joint right and left annihilator witness need not be the "
      "annihilator (b,c)-inverse",
      [](const RingHandle&, const std::vector<Element>& t, CT*) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        if (!(is_right_ann_bc_witness(a, b, c, y) &&
              is_left_ann_bc_witness(a, b, c, y)))
          return true;
        return is_ann_bc_witness(a, b, c, y);
      }));

  reg.push_back(fails(
      "converse-prop-ann-ii", 4,
      "the annihilator (b,c)-inverse need not be a left (b,c)-witness",
      [](const RingHandle&, const std::vector<Element>& t, CT*) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        if (!is_ann_bc_witness(a, b, c, y)) return true;
        return is_left_bc_witness(a, b, c, y) &&
               is_left_ann_bc_witness(a, b, c, y);
      }));

  reg.push_back(fails(
      "converse-prop-ann-iii", 4,
      "the annihilator (b,c)-inverse need not be a right (b,c)-witness",
      [](const RingHandle&, const std::vector<Element>& t, CT*) {
        Element a = t[0], b = t[1], c = t[2], y = t[3];
        if (!is_ann_bc_witness(a, b, c, y)) return true;
        return is_right_bc_witness(a, b, c, y) &&
               is_right_ann_bc_witness(a, b, c, y);
      }));

  reg.push_back(fails(
      "witness-inequality-left-vs-rightann", 3,
      "left (b,c)-witnesses and right annihilator (b,c)-witnesses need not "
      "coincide elementwise",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        std::vector<std::uint64_t> L = left_witness_codes(R, a, b, c);
        std::vector<std::uint64_t> A = right_ann_witness_codes(R, a, b, c);
        put(tr, "left_nonempty", !L.empty());
        put(tr, "right_ann_nonempty", !A.empty());
        if (L.empty() || A.empty()) return true;
        bool single = L.size() == 1 && A.size() == 1 && L[0] == A[0];
        put(tr, "witnesses_coincide", single);
        return single;
      }));

  // ---- five-way existence equivalences ----

  reg.push_back(holds(
      "five-way-left", 3,
      "left (b,c)-invertibility is equivalent to the unit-sum and trivial-"
      "intersection conditions on Rca and the left annihilator of b",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        std::vector<char> rca = flags_Rg(R, c * a);
        std::vector<char> lb = flags_ann_left(R, b);
        std::vector<char> a_ra = flags_ann_right(R, a);
        std::vector<char> bR = flags_gR(R, b);
        std::vector<char> abR = flags_gR(R, a * b);
        std::vector<char> c_ra = flags_ann_right(R, c);
        bool spans = sum_spans(R, rca, lb);
        bool m1 = meet_trivial(a_ra, bR);   // a° ∩ bR = 0
        bool m2 = meet_trivial(abR, c_ra);  // abR ∩ c° = 0
        bool p1 = ex_left(R, a, b, c);
        bool p2 = m1 && m2 && spans;
        bool p3 = m1 && spans;
        bool p4 = m2 && spans;
        bool p5 = spans;
        put(tr, "left_exists", p1);
        put(tr, "meets_and_sum", p2);
        put(tr, "a_ann_meet_and_sum", p3);
        put(tr, "abR_meet_and_sum", p4);
        put(tr, "sum_spans", p5);
        return p1 == p2 && p2 == p3 && p3 == p4 && p4 == p5;
      }));

  reg.push_back(holds(
      "five-way-right", 3,
      "right (b,c)-invertibility is equivalent to the unit-sum and trivial-"
      "intersection conditions on abR and the right annihilator of c",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        std::vector<char> abR = flags_gR(R, a * b);
        std::vector<char> c_ra = flags_ann_right(R, c);
        std::vector<char> a_la = flags_ann_left(R, a);
        std::vector<char> Rc = flags_Rg(R, c);
        std::vector<char> rca = flags_Rg(R, c * a);
        std::vector<char> lb = flags_ann_left(R, b);
        bool spans = sum_spans(R, abR, c_ra);
        bool m1 = meet_trivial(a_la, Rc);  // °a ∩ Rc = 0
        bool m2 = meet_trivial(rca, lb);   // Rca ∩ °b = 0
        bool p1 = ex_right(R, a, b, c);
        bool p2 = m1 && m2 && spans;
        bool p3 = m1 && spans;
        bool p4 = m2 && spans;
        bool p5 = spans;
        put(tr, "right_exists", p1);
        put(tr, "meets_and_sum", p2);
        put(tr, "a_ann_meet_and_sum", p3);
        put(tr, "Rca_meet_and_sum", p4);
        put(tr, "sum_spans", p5);
        return p1 == p2 && p2 == p3 && p3 == p4 && p4 == p5;
      }));

  reg.push_back(holds(
      "direct-sum-corollary", 3,
      "(b,c)-invertibility is equivalent to the two direct-sum "
      "decompositions (and to the two plain sums)",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        std::vector<char> abR = flags_gR(R, a * b);
        std::vector<char> c_ra = flags_ann_right(R, c);
        std::vector<char> rca = flags_Rg(R, c * a);
        std::vector<char> lb = flags_ann_left(R, b);
        std::vector<char> a_ra = flags_ann_right(R, a);
        std::vector<char> bR = flags_gR(R, b);
        std::vector<char> a_la = flags_ann_left(R, a);
        std::vector<char> Rc = flags_Rg(R, c);
        bool meets = meet_trivial(a_ra, bR) && meet_trivial(a_la, Rc);
        bool ds1 = direct_sum(R, abR, c_ra), ds2 = direct_sum(R, rca, lb);
        bool s1 = sum_spans(R, abR, c_ra), s2 = sum_spans(R, rca, lb);
        bool q1 = ex_two(R, a, b, c);
        bool q2 = meets && ds1 && ds2;
        bool q3 = meets && s1 && s2;
        bool q4 = ds1 && ds2;
        bool q5 = s1 && s2;
        put(tr, "two_sided", q1);
        put(tr, "meets_and_direct_sums", q2);
        put(tr, "meets_and_sums", q3);
        put(tr, "direct_sums", q4);
        put(tr, "sums", q5);
        return q1 == q2 && q2 == q3 && q3 == q4 && q4 == q5;
      }));

  // ---- {1,3} / {1,4} criteria and Moore-Penrose bridges ----

  reg.push_back(holds(
      "lemma-13-criteria", 1,
      "{1,3}-invertibility is equivalent to a*R = a*aR, Ra = Ra*a and both "
      "unit sums",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], as = star(a);
        bool c1 = !delta_inverses(a, delta_bit(1) | delta_bit(3)).empty();
        bool c2 = same_set(flags_gR(R, as), flags_gR(R, as * a));
        bool c3 = same_set(flags_Rg(R, a), flags_Rg(R, as * a));
        bool c4 = sum_spans(R, flags_Rg(R, as), flags_ann_left(R, a));
        bool c5 = sum_spans(R, flags_gR(R, a), flags_ann_right(R, as));
        put(tr, "has_13", c1);
        put(tr, "astarR_eq", c2);
        put(tr, "Ra_eq", c3);
        put(tr, "sum_Rastar", c4);
        put(tr, "sum_aR", c5);
        return c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5;
      }));

  reg.push_back(holds(
      "lemma-14-criteria", 1,
      "{1,4}-invertibility is equivalent to aR = aa*R, Ra* = Raa* and both "
      "unit sums",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], as = star(a);
        bool c1 = !delta_inverses(a, delta_bit(1) | delta_bit(4)).empty();
        bool c2 = same_set(flags_gR(R, a), flags_gR(R, a * as));
        bool c3 = same_set(flags_Rg(R, as), flags_Rg(R, a * as));
        bool c4 = sum_spans(R, flags_Rg(R, a), flags_ann_left(R, as));
        bool c5 = sum_spans(R, flags_gR(R, as), flags_ann_right(R, a));
        put(tr, "has_14", c1);
        put(tr, "aR_eq", c2);
        put(tr, "Rastar_eq", c3);
        put(tr, "sum_Ra", c4);
        put(tr, "sum_astarR", c5);
        return c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5;
      }));

  reg.push_back(holds(
      "bridge-14-left-astar-1", 1,
      "a is left (a*,1)-invertible iff a has a {1,4}-inverse",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0];
        bool l = left_bc(a, star(a), R.one()).has_value();
        bool d = !delta_inverses(a, delta_bit(1) | delta_bit(4)).empty();
        put(tr, "left_astar_1", l);
        put(tr, "has_14", d);
        return l == d;
      }));

  reg.push_back(holds(
      "bridge-13-right-1-astar", 1,
      "a is right (1,a*)-invertible iff a has a {1,3}-inverse",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0];
        bool r = right_bc(a, R.one(), star(a)).has_value();
        bool d = !delta_inverses(a, delta_bit(1) | delta_bit(3)).empty();
        put(tr, "right_1_astar", r);
        put(tr, "has_13", d);
        return r == d;
      }));

  reg.push_back(holds(
      "mp-iff-onesided-bc", 1,
      "a is Moore-Penrose invertible iff it is left (a*,1)- and right "
      "(1,a*)-invertible",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0];
        bool mp = !delta_inverses(a, kPenroseAll).empty();
        bool route = left_bc(a, star(a), R.one()).has_value() &&
                     right_bc(a, R.one(), star(a)).has_value();
        put(tr, "mp", mp);
        put(tr, "bc_route", route);
        return mp == route;
      }));

  // ---- pi-regularity bridges ----

  reg.push_back(holds(
      "bridge-pi-left", 1,
      "for every n: a is left (a^n,1)-invertible iff a^n = x a^(n+1) solves",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0];
        for (unsigned n = 1; n <= R.cardinality(); ++n) {
          bool bc = left_bc(a, pow(a, n), R.one()).has_value();
          bool pi = pi_at(R, a, n, Side::left);
          if (bc != pi) {
            put(tr, ("n=" + std::to_string(n)).c_str(), false);
            return false;
          }
        }
        return true;
      }));

  reg.push_back(holds(
      "bridge-pi-right", 1,
      "for every n: a is right (1,a^n)-invertible iff a^n = a^(n+1) x solves",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0];
        for (unsigned n = 1; n <= R.cardinality(); ++n) {
          bool bc = right_bc(a, R.one(), pow(a, n)).has_value();
          bool pi = pi_at(R, a, n, Side::right);
          if (bc != pi) {
            put(tr, ("n=" + std::to_string(n)).c_str(), false);
            return false;
          }
        }
        return true;
      }));

  reg.push_back(holds(
      "bridge-drazin-strongly-pi", 1,
      "a is Drazin invertible iff some n is two-sidedly pi-regular iff some "
      "n gives left (a^n,1)- and right (1,a^n)-invertibility",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0];
        bool strong = false, via_bc = false;
        for (unsigned n = 1; n <= R.cardinality() && !(strong && via_bc); ++n) {
          if (!strong && pi_at(R, a, n, Side::left) &&
              pi_at(R, a, n, Side::right))
            strong = true;
          if (!via_bc && left_bc(a, pow(a, n), R.one()).has_value() &&
              right_bc(a, R.one(), pow(a, n)).has_value())
            via_bc = true;
        }
        bool drz = drazin(a).has_value();
        put(tr, "strongly_pi", strong);
        put(tr, "via_bc", via_bc);
        put(tr, "drazin", drz);
        return strong == via_bc && via_bc == drz;
      }));

  // ---- special (b,c) choices ----

  reg.push_back(holds(
      "special-astar-1-unitsum", 1,
      "a is right (a*,1)-invertible iff R = aa*R, and left (1,a*)-invertible "
      "iff R = Ra*a",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], as = star(a);
        bool r = right_bc(a, as, R.one()).has_value();
        bool full_r = scan_in_right_ideal(R.one(), a * as);  // 1 ∈ aa*R
        bool l = left_bc(a, R.one(), as).has_value();
        bool full_l = scan_in_left_ideal(R.one(), as * a);  // 1 ∈ Ra*a
        put(tr, "right_astar_1", r);
        put(tr, "aastarR_full", full_r);
        put(tr, "left_1_astar", l);
        put(tr, "Rastara_full", full_l);
        return r == full_r && l == full_l;
      }));

  reg.push_back(holds(
      "special-a-astar", 1,
      "a is left (a,a*)-invertible iff Ra = Ra*a^2 (dually with a*R = a*a^2R)",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], as = star(a);
        bool l = left_bc(a, a, as).has_value();
        bool leq = scan_in_left_ideal(a, as * a * a);  // a ∈ Ra*a²
        bool r = right_bc(a, a, as).has_value();
        bool req = scan_in_right_ideal(as, as * a * a);  // a* ∈ a*a²R
        put(tr, "left_a_astar", l);
        put(tr, "Ra_eq", leq);
        put(tr, "right_a_astar", r);
        put(tr, "astarR_eq", req);
        return l == leq && r == req;
      }));

  reg.push_back(holds(
      "special-astar-a", 1,
      "a is left (a*,a)-invertible iff Ra* = Ra^2a* (dually with aR = a^2a*R)",
      [](const RingHandle&, const std::vector<Element>& t, CT* tr) {
        Element a = t[0], as = star(a);
        bool l = left_bc(a, as, a).has_value();
        bool leq = scan_in_left_ideal(as, a * a * as);  // a* ∈ Ra²a*
        bool r = right_bc(a, as, a).has_value();
        bool req = scan_in_right_ideal(a, a * a * as);  // a ∈ a²a*R
        put(tr, "left_astar_a", l);
        put(tr, "Rastar_eq", leq);
        put(tr, "right_astar_a", r);
        put(tr, "aR_eq", req);
        return l == leq && r == req;
      }));

  // ---- remarks on regularity of b and c ----

  reg.push_back(fails(
      "onesided-without-regular-bc", 3,
      "one-sided (b,c)-invertibility does not force b and c to be regular",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        bool onesided = ex_left(R, a, b, c) || ex_right(R, a, b, c);
        put(tr, "one_sided", onesided);
        if (!onesided) return true;
        bool reg = is_regular(b) && is_regular(c);
        put(tr, "b_c_regular", reg);
        return reg;
      }));

  reg.push_back(holds(
      "two-sided-implies-regular-bc", 3,
      "(b,c)-invertibility forces b and c to be regular",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        bool two = ex_two(R, a, b, c);
        put(tr, "two_sided", two);
        if (!two) return true;
        bool reg = is_regular(b) && is_regular(c);
        put(tr, "b_c_regular", reg);
        return reg;
      }));

  reg.push_back(holds(
      "remark-a-11-iff-onesided-unit", 1,
      "a is left/right (1,1)-invertible iff it is left/right invertible",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], one = R.one();
        bool l_bc = left_bc(a, one, one).has_value();
        bool l_unit = unit_exists(R, a, Side::left);
        bool r_bc = right_bc(a, one, one).has_value();
        bool r_unit = unit_exists(R, a, Side::right);
        put(tr, "left_bc_11", l_bc);
        put(tr, "left_unit", l_unit);
        put(tr, "right_bc_11", r_bc);
        put(tr, "right_unit", r_unit);
        return l_bc == l_unit && r_bc == r_unit;
      }));

  reg.push_back(holds(
      "remark-b-aa-iff-regular", 1,
      "a is left/right (a,a)-invertible iff it is left/right regular",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0];
        bool l_bc = left_bc(a, a, a).has_value();
        bool r_bc = right_bc(a, a, a).has_value();
        bool l_reg = false, r_reg = false;
        for (std::uint64_t x = 0; x < R.cardinality(); ++x) {
          Element xe = R.element(x);
          if (!l_reg && xe * a * a == a) l_reg = true;
          if (!r_reg && a * a * xe == a) r_reg = true;
        }
        put(tr, "left_bc_aa", l_bc);
        put(tr, "left_regular", l_reg);
        put(tr, "right_bc_aa", r_bc);
        put(tr, "right_regular", r_reg);
        return l_bc == l_reg && r_bc == r_reg;
      }));

  reg.push_back(holds(
      "remark-c-astar-iff-star-regular", 1,
      "a is left/right (a*,a*)-invertible iff left/right *-regular iff "
      "Moore-Penrose invertible",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], as = star(a);
        Element aaa = a * as * a;
        bool l_bc = left_bc(a, as, as).has_value();
        bool r_bc = right_bc(a, as, as).has_value();
        bool l_star = false, r_star = false;
        for (std::uint64_t x = 0; x < R.cardinality(); ++x) {
          Element xe = R.element(x);
          if (!l_star && aaa * xe == a) l_star = true;
          if (!r_star && xe * aaa == a) r_star = true;
        }
        bool mp = !delta_inverses(a, kPenroseAll).empty();
        put(tr, "left_bc_astar", l_bc);
        put(tr, "left_star_regular", l_star);
        put(tr, "right_bc_astar", r_bc);
        put(tr, "right_star_regular", r_star);
        put(tr, "mp", mp);
        return l_bc == l_star && r_bc == r_star && l_star == mp && r_star == mp;
      }));

  reg.push_back(holds(
      "remark-d-an-iff-pi-regular", 1,
      "for every n: a is left/right (a^n,a^n)-invertible iff left/right "
      "pi-regular at n",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0];
        for (unsigned n = 1; n <= R.cardinality(); ++n) {
          Element an = pow(a, n);
          bool l_bc = left_bc(a, an, an).has_value();
          bool r_bc = right_bc(a, an, an).has_value();
          bool l_pi = pi_at(R, a, n, Side::left);
          bool r_pi = pi_at(R, a, n, Side::right);
          if (l_bc != l_pi || r_bc != r_pi) {
            put(tr, ("n=" + std::to_string(n)).c_str(), false);
            return false;
          }
        }
        return true;
      }));

  reg.push_back(holds(
      "remark-mary-reduction", 3,
      "under nested or equal image ideals, one-sided (b,c)-invertibility "
      "reduces to one-sided invertibility along b (resp. c)",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2];
        std::vector<char> Rb = flags_Rg(R, b), Rc = flags_Rg(R, c);
        std::vector<char> Rcab = flags_Rg(R, c * a * b);
        bool ok = true;
        if ((subset_of(Rc, Rb) && subset_of(Rb, Rcab)) || same_set(Rc, Rb)) {
          bool lhs = ex_left(R, a, b, c);
          bool rhs = ex_left(R, a, b, b);  // left Mary along b
          put(tr, "left_bc", lhs);
          put(tr, "left_along_b", rhs);
          ok = ok && lhs == rhs;
        }
        std::vector<char> bR = flags_gR(R, b), cR = flags_gR(R, c);
        std::vector<char> cabR = flags_gR(R, c * a * b);
        if ((subset_of(bR, cR) && subset_of(cR, cabR)) || same_set(bR, cR)) {
          bool lhs = ex_right(R, a, b, c);
          bool rhs = ex_right(R, a, c, c);  // right Mary along c
          put(tr, "right_bc", lhs);
          put(tr, "right_along_c", rhs);
          ok = ok && lhs == rhs;
        }
        return ok;
      }));

  // ---- products of three elements ----

  reg.push_back(holds(
      "product-split-left", 5,
      "paq is left (b,c)-invertible iff pa is left (qb,c)- and aq is left "
      "(b,cp)-invertible, with witnesses mapping via x=qy, z=yp, y=zax",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element p = t[0], a = t[1], q = t[2], b = t[3], c = t[4];
        Element paq = p * a * q, pa = p * a, aq = a * q;
        Element qb = q * b, cp = c * p;
        bool e = ex_left(R, paq, b, c);
        bool e1 = ex_left(R, pa, qb, c);
        bool e2 = ex_left(R, aq, b, cp);
        put(tr, "paq_left", e);
        put(tr, "pa_left", e1);
        put(tr, "aq_left", e2);
        if (e != (e1 && e2)) return false;
        if (!e) return true;
        auto y = least_such(R, [&](Element v) {
          return is_left_bc_witness(paq, b, c, v);
        });
        bool maps = is_left_bc_witness(pa, qb, c, q * *y) &&
                    is_left_bc_witness(aq, b, cp, *y * p);
        auto x = least_such(R, [&](Element v) {
          return is_left_bc_witness(pa, qb, c, v);
        });
        auto z = least_such(R, [&](Element v) {
          return is_left_bc_witness(aq, b, cp, v);
        });
        bool back = is_left_bc_witness(paq, b, c, *z * a * *x);
        put(tr, "witness_maps", maps);
        put(tr, "reassembled", back);
        return maps && back;
      }));

  reg.push_back(holds(
      "product-split-right", 5,
      "paq is right (b,c)-invertible iff pa is right (qb,c)- and aq is right "
      "(b,cp)-invertible, with witnesses mapping via x=qy, z=yp, y=zax",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element p = t[0], a = t[1], q = t[2], b = t[3], c = t[4];
        Element paq = p * a * q, pa = p * a, aq = a * q;
        Element qb = q * b, cp = c * p;
        bool e = ex_right(R, paq, b, c);
        bool e1 = ex_right(R, pa, qb, c);
        bool e2 = ex_right(R, aq, b, cp);
        put(tr, "paq_right", e);
        put(tr, "pa_right", e1);
        put(tr, "aq_right", e2);
        if (e != (e1 && e2)) return false;
        if (!e) return true;
        auto y = least_such(R, [&](Element v) {
          return is_right_bc_witness(paq, b, c, v);
        });
        bool maps = is_right_bc_witness(pa, qb, c, q * *y) &&
                    is_right_bc_witness(aq, b, cp, *y * p);
        auto x = least_such(R, [&](Element v) {
          return is_right_bc_witness(pa, qb, c, v);
        });
        auto z = least_such(R, [&](Element v) {
          return is_right_bc_witness(aq, b, cp, v);
        });
        bool back = is_right_bc_witness(paq, b, c, *z * a * *x);
        put(tr, "witness_maps", maps);
        put(tr, "reassembled", back);
        return maps && back;
      }));

  reg.push_back(holds(
      "product-transfer-left", 5,
      "with q'qb = b solvable: paq is left (b,c)-invertible iff a is left "
      "(qb,cp)-invertible, and w = qyp transfers the witness",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element p = t[0], a = t[1], q = t[2], b = t[3], c = t[4];
        Element qb = q * b, cp = c * p;
        bool hyp = scan_in_left_ideal(b, qb);  // ∃q': q'(qb) = b
        put(tr, "q_prime_exists", hyp);
        if (!hyp) return true;
        Element paq = p * a * q;
        bool e1 = ex_left(R, paq, b, c);
        bool e2 = ex_left(R, a, qb, cp);
        put(tr, "paq_left", e1);
        put(tr, "a_left_qb_cp", e2);
        if (e1 != e2) return false;
        if (!e1) return true;
        auto y = least_such(R, [&](Element v) {
          return is_left_bc_witness(paq, b, c, v);
        });
        bool w_ok = is_left_bc_witness(a, qb, cp, q * *y * p);
        put(tr, "w_transfers", w_ok);
        return w_ok;
      }));

  reg.push_back(holds(
      "product-transfer-right", 5,
      "with cpp' = c solvable: paq is right (b,c)-invertible iff a is right "
      "(qb,cp)-invertible, and w = qyp transfers the witness",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element p = t[0], a = t[1], q = t[2], b = t[3], c = t[4];
        Element qb = q * b, cp = c * p;
        bool hyp = scan_in_right_ideal(c, cp);  // ∃p': (cp)p' = c
        put(tr, "p_prime_exists", hyp);
        if (!hyp) return true;
        Element paq = p * a * q;
        bool e1 = ex_right(R, paq, b, c);
        bool e2 = ex_right(R, a, qb, cp);
        put(tr, "paq_right", e1);
        put(tr, "a_right_qb_cp", e2);
        if (e1 != e2) return false;
        if (!e1) return true;
        auto y = least_such(R, [&](Element v) {
          return is_right_bc_witness(paq, b, c, v);
        });
        bool w_ok = is_right_bc_witness(a, qb, cp, q * *y * p);
        put(tr, "w_transfers", w_ok);
        return w_ok;
      }));

  reg.push_back(holds(
      "product-transfer-two-sided", 5,
      "with q'qb = b and cpp' = c solvable: paq is (b,c)-invertible iff a is "
      "(qb,cp)-invertible, and w = qyp is the transferred inverse",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element p = t[0], a = t[1], q = t[2], b = t[3], c = t[4];
        Element qb = q * b, cp = c * p;
        bool hyp = scan_in_left_ideal(b, qb) && scan_in_right_ideal(c, cp);
        put(tr, "primes_exist", hyp);
        if (!hyp) return true;
        Element paq = p * a * q;
        bool e1 = ex_two(R, paq, b, c);
        bool e2 = ex_two(R, a, qb, cp);
        put(tr, "paq_two_sided", e1);
        put(tr, "a_two_sided", e2);
        if (e1 != e2) return false;
        if (!e1) return true;
        auto y = least_such(R, [&](Element v) {
          return is_bc_inverse(paq, b, c, v);
        });
        bool w_ok = is_bc_inverse(a, qb, cp, q * *y * p);
        put(tr, "w_is_inverse", w_ok);
        return w_ok;
      }));

  reg.push_back(holds(
      "product-mixed-transfer", 5,
      "with q'qc = c and bpp' = b solvable: paq is (b,c)-invertible iff pa "
      "is right (qb,qc)- and aq is left (bp,cp)-invertible, with y = zax",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element p = t[0], a = t[1], q = t[2], b = t[3], c = t[4];
        bool hyp = scan_in_left_ideal(c, q * c) && scan_in_right_ideal(b, b * p);
        put(tr, "primes_exist", hyp);
        if (!hyp) return true;
        Element paq = p * a * q;
        bool e = ex_two(R, paq, b, c);
        bool e1 = ex_right(R, p * a, q * b, q * c);
        bool e2 = ex_left(R, a * q, b * p, c * p);
        put(tr, "paq_two_sided", e);
        put(tr, "pa_right", e1);
        put(tr, "aq_left", e2);
        if (e != (e1 && e2)) return false;
        if (!e) return true;
        auto x = least_such(R, [&](Element v) {
          return is_right_bc_witness(p * a, q * b, q * c, v);
        });
        auto z = least_such(R, [&](Element v) {
          return is_left_bc_witness(a * q, b * p, c * p, v);
        });
        bool y_ok = is_bc_inverse(paq, b, c, *z * a * *x);
        put(tr, "zax_is_inverse", y_ok);
        return y_ok;
      }));

  reg.push_back(fails(
      "hunt-product-witness-maps-left", 5,
      "the relations y=zax, x=qy, z=yp for arbitrary (not constructed) "
      "left witnesses of paq, pa and aq",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT*) {
        const Ring& R = *Rh;
        Element p = t[0], a = t[1], q = t[2], b = t[3], c = t[4];
        Element paq = p * a * q, pa = p * a, aq = a * q;
        Element qb = q * b, cp = c * p;
        std::vector<std::uint64_t> ys = left_witness_codes(R, paq, b, c);
        std::vector<std::uint64_t> xs = left_witness_codes(R, pa, qb, c);
        std::vector<std::uint64_t> zs = left_witness_codes(R, aq, b, cp);
        for (std::uint64_t yc : ys)
          for (std::uint64_t xc : xs)
            for (std::uint64_t zc : zs) {
              Element y = R.element(yc), x = R.element(xc), z = R.element(zc);
              if (y != z * a * x || x != q * y || z != y * p) return false;
            }
        return true;
      }));

  reg.push_back(fails(
      "hunt-product-witness-maps-right", 5,
      "the relations y=zax, x=qy, z=yp for arbitrary (not constructed) "
      "right witnesses of paq, pa and aq",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT*) {
        const Ring& R = *Rh;
        Element p = t[0], a = t[1], q = t[2], b = t[3], c = t[4];
        Element paq = p * a * q, pa = p * a, aq = a * q;
        Element qb = q * b, cp = c * p;
        std::vector<std::uint64_t> ys = right_witness_codes(R, paq, b, c);
        std::vector<std::uint64_t> xs = right_witness_codes(R, pa, qb, c);
        std::vector<std::uint64_t> zs = right_witness_codes(R, aq, b, cp);
        for (std::uint64_t yc : ys)
          for (std::uint64_t xc : xs)
            for (std::uint64_t zc : zs) {
              Element y = R.element(yc), x = R.element(xc), z = R.element(zc);
              if (y != z * a * x || x != q * y || z != y * p) return false;
            }
        return true;
      }));

  // ---- Jacobson lemma and perturbations ----

  reg.push_back(holds(
      "jacobson-left", 2,
      "1+ab is left invertible iff 1+ba is, with (1-bya)(1+ba) = 1 whenever "
      "y(1+ab) = 1",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], one = R.one();
        Element u = one + a * b, v = one + b * a;
        bool lu = unit_exists(R, u, Side::left);
        bool lv = unit_exists(R, v, Side::left);
        put(tr, "left_1ab", lu);
        put(tr, "left_1ba", lv);
        if (lu != lv) return false;
        for (std::uint64_t yc = 0; yc < R.cardinality(); ++yc) {
          Element y = R.element(yc);
          if (y * u == one && (one - b * y * a) * v != one) {
            put(tr, "formula", false);
            return false;
          }
        }
        return true;
      }));

  reg.push_back(holds(
      "jacobson-right", 2,
      "1+ab is right invertible iff 1+ba is, with (1+ba)(1-bxa) = 1 whenever "
      "(1+ab)x = 1",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], one = R.one();
        Element u = one + a * b, v = one + b * a;
        bool ru = unit_exists(R, u, Side::right);
        bool rv = unit_exists(R, v, Side::right);
        put(tr, "right_1ab", ru);
        put(tr, "right_1ba", rv);
        if (ru != rv) return false;
        for (std::uint64_t xc = 0; xc < R.cardinality(); ++xc) {
          Element x = R.element(xc);
          if (u * x == one && v * (one - b * x * a) != one) {
            put(tr, "formula", false);
            return false;
          }
        }
        return true;
      }));

  reg.push_back(holds(
      "jacobson-iii", 2,
      "1+ab is invertible iff 1+ba is, with (1+ba)^{-1} = 1 - b(1+ab)^{-1}a",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], one = R.one();
        Element u = one + a * b, v = one + b * a;
        auto iu = invertible(u);
        auto iv = invertible(v);
        put(tr, "inv_1ab", iu.has_value());
        put(tr, "inv_1ba", iv.has_value());
        if (iu.has_value() != iv.has_value()) return false;
        if (!iu) return true;
        Element w = one - b * *iu * a;
        bool formula = (w * v == one && v * w == one);
        put(tr, "formula", formula);
        return formula;
      }));

  reg.push_back(holds(
      "perturbation-left-4way", 5,
      "when a_bc is the (b,c)-inverse of a: alpha left (b,c)-invertible iff "
      "right annihilator (b,c)-invertible iff 1+(alpha-a)a_bc and "
      "1+a_bc(alpha-a) are left invertible",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2], abc = t[3], alpha = t[4];
        if (!is_bc_inverse(a, b, c, abc)) return true;
        Element one = R.one();
        bool e1 = ex_left(R, alpha, b, c);
        bool e2 = ex_right_ann(R, alpha, b, c);
        bool e3 = unit_exists(R, one + (alpha - a) * abc, Side::left);
        bool e4 = unit_exists(R, one + abc * (alpha - a), Side::left);
        put(tr, "alpha_left_bc", e1);
        put(tr, "alpha_right_ann", e2);
        put(tr, "unit_alpha_abc", e3);
        put(tr, "unit_abc_alpha", e4);
        return e1 == e2 && e2 == e3 && e3 == e4;
      }));

  reg.push_back(holds(
      "perturbation-right-4way", 5,
      "when a_bc is the (b,c)-inverse of a: alpha right (b,c)-invertible iff "
      "left annihilator (b,c)-invertible iff 1+(alpha-a)a_bc and "
      "1+a_bc(alpha-a) are right invertible",
      [](const RingHandle& Rh, const std::vector<Element>& t, CT* tr) {
        const Ring& R = *Rh;
        Element a = t[0], b = t[1], c = t[2], abc = t[3], alpha = t[4];
        if (!is_bc_inverse(a, b, c, abc)) return true;
        Element one = R.one();
        bool e1 = ex_right(R, alpha, b, c);
        bool e2 = ex_left_ann(R, alpha, b, c);
        bool e3 = unit_exists(R, one + (alpha - a) * abc, Side::right);
        bool e4 = unit_exists(R, one + abc * (alpha - a), Side::right);
        put(tr, "alpha_right_bc", e1);
        put(tr, "alpha_left_ann", e2);
        put(tr, "unit_alpha_abc", e3);
        put(tr, "unit_abc_alpha", e4);
        return e1 == e2 && e2 == e3 && e3 == e4;
      }));

  return reg;
}

}  // namespace

const std::vector<Claim>& registry() {
  static const std::vector<Claim> reg = build_registry();
  return reg;
}

const Claim* find_claim(std::string_view id) {
  for (const Claim& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace bcinv
