#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "bcinv/inverse.hpp"
#include "bcinv/ring.hpp"

using namespace bcinv;

namespace {

RingHandle ring_of(const char* text) {
  return build_ring(RingSpec::parse(text));
}

// independent scan oracles, written directly against the definitions
std::vector<std::uint64_t> scan_left_witnesses(const RingHandle& r, Element a,
                                               Element b, Element c) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t yc = 0; yc < r->cardinality(); ++yc) {
    Element y = r->element(yc);
    bool in_rc = false;
    for (std::uint64_t s = 0; s < r->cardinality() && !in_rc; ++s)
      if (r->element(s) * c == y) in_rc = true;
    if (in_rc && y * a * b == b) out.push_back(yc);
  }
  return out;
}

std::vector<std::uint64_t> scan_right_witnesses(const RingHandle& r, Element a,
                                                Element b, Element c) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t yc = 0; yc < r->cardinality(); ++yc) {
    Element y = r->element(yc);
    bool in_br = false;
    for (std::uint64_t s = 0; s < r->cardinality() && !in_br; ++s)
      if (b * r->element(s) == y) in_br = true;
    if (in_br && c * a * y == c) out.push_back(yc);
  }
  return out;
}

std::vector<std::uint64_t> scan_right_ann_witnesses(const RingHandle& r,
                                                    Element a, Element b,
                                                    Element c) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t yc = 0; yc < r->cardinality(); ++yc) {
    Element y = r->element(yc);
    if (y * a * b != b) continue;
    bool ok = true;
    for (std::uint64_t x = 0; x < r->cardinality() && ok; ++x)
      if (c * r->element(x) == r->zero() && y * r->element(x) != r->zero())
        ok = false;
    if (ok) out.push_back(yc);
  }
  return out;
}

std::vector<std::uint64_t> scan_bc_inverses(const RingHandle& r, Element a,
                                            Element b, Element c) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t yc = 0; yc < r->cardinality(); ++yc)
    if (is_bc_inverse(a, b, c, r->element(yc))) out.push_back(yc);
  return out;
}

}  // namespace

TEST_CASE("left (b,c)-inverse: examples") {
  auto z8 = ring_of("zmod:8");
  auto w = left_bc(z8->element(5), z8->element(0), z8->element(2));
  REQUIRE(w.has_value());
  auto all = witness_set(InverseKind{InverseTag::left_bc}, z8->element(5),
                         z8->element(0), z8->element(2));
  bool has4 = false;
  for (const Element& e : all) has4 = has4 || e.code() == 4;
  CHECK(has4);  // 4 is among the left (0,2)-inverses of 5

  auto z6 = ring_of("zmod:6");
  // b = 0 always yields y = 0
  CHECK(left_bc(z6->element(4), z6->element(0), z6->element(5))->y.code() == 0);
  auto w6 = left_bc(z6->element(2), z6->element(2), z6->element(2));
  REQUIRE(w6.has_value());
  CHECK(w6->y.code() == 2);  // least witness
  CHECK(!left_bc(z6->element(2), z6->element(3), z6->element(3)).has_value());
}

TEST_CASE("right (b,c)-inverse: examples") {
  auto z6 = ring_of("zmod:6");
  auto w = right_bc(z6->element(2), z6->element(2), z6->element(2));
  REQUIRE(w.has_value());
  CHECK(w->y.code() == 2);
  CHECK(right_bc(z6->element(3), z6->element(4), z6->element(0))->y.code() == 0);
  CHECK(!right_bc(z6->element(2), z6->element(3), z6->element(3)).has_value());
}

TEST_CASE("one-sided decisions match the definitional scan everywhere") {
  for (const char* text :
       {"zmod:2", "zmod:3", "zmod:4", "zmod:5", "zmod:6", "zmod:7", "zmod:8",
        "mat:2:zmod:2", "prod:(zmod:2;zmod:3)"}) {
    auto r = ring_of(text);
    std::uint64_t n = r->cardinality();
    for (std::uint64_t ac = 0; ac < n; ++ac)
      for (std::uint64_t bc = 0; bc < n; ++bc)
        for (std::uint64_t cc = 0; cc < n; ++cc) {
          Element a = r->element(ac), b = r->element(bc), c = r->element(cc);
          auto L = scan_left_witnesses(r, a, b, c);
          auto wl = left_bc(a, b, c);
          REQUIRE(wl.has_value() == !L.empty());
          if (wl) {
            CHECK(wl->y.code() == L.front());  // least witness
            CHECK(verify_witness(a, b, c, *wl));
          }
          auto Rw = scan_right_witnesses(r, a, b, c);
          auto wr = right_bc(a, b, c);
          REQUIRE(wr.has_value() == !Rw.empty());
          if (wr) {
            CHECK(wr->y.code() == Rw.front());
            CHECK(verify_witness(a, b, c, *wr));
          }
          auto A = scan_right_ann_witnesses(r, a, b, c);
          auto wa = right_ann_bc(a, b, c);
          REQUIRE(wa.has_value() == !A.empty());
          if (wa) {
            CHECK(wa->y.code() == A.front());
            CHECK(verify_witness(a, b, c, *wa));
          }
          auto wla = left_ann_bc(a, b, c);
          bool la_any = false;
          std::uint64_t la_least = 0;
          for (std::uint64_t yc = 0; yc < n && !la_any; ++yc)
            if (is_left_ann_bc_witness(a, b, c, r->element(yc))) {
              la_any = true;
              la_least = yc;
            }
          REQUIRE(wla.has_value() == la_any);
          if (wla) {
            CHECK(wla->y.code() == la_least);
            CHECK(verify_witness(a, b, c, *wla));
          }
        }
  }
}

TEST_CASE("right annihilator (b,c)-inverse: examples") {
  auto z8 = ring_of("zmod:8");
  Element a = z8->element(5), b = z8->element(0), c = z8->element(2);
  auto w = right_ann_bc(a, b, c);
  REQUIRE(w.has_value());
  auto set = witness_set(InverseKind{InverseTag::right_ann_bc}, a, b, c);
  std::vector<std::uint64_t> codes;
  for (const Element& e : set) codes.push_back(e.code());
  CHECK(codes == std::vector<std::uint64_t>{0, 2, 4, 6});

  auto z5 = ring_of("zmod:5");
  CHECK(right_ann_bc(z5->element(3), z5->element(0), z5->element(1))->y.code() ==
        0);
}

TEST_CASE("two-sided (b,c)-inverse: uniqueness and construction") {
  auto z6 = ring_of("zmod:6");
  auto w = two_sided_bc(z6->element(2), z6->element(2), z6->element(2));
  REQUIRE(w.has_value());
  CHECK(w->y.code() == 2);
  CHECK(verify_witness(z6->element(2), z6->element(2), z6->element(2), *w));

  auto one = z6->one();
  CHECK(two_sided_bc(one, one, one)->y == one);
  CHECK(!two_sided_bc(z6->element(2), z6->element(3), z6->element(3))
             .has_value());

  for (const char* text : {"zmod:6", "zmod:8", "mat:2:zmod:2"}) {
    auto r = ring_of(text);
    std::uint64_t n = r->cardinality();
    for (std::uint64_t ac = 0; ac < n; ++ac)
      for (std::uint64_t bc = 0; bc < n; ++bc)
        for (std::uint64_t cc = 0; cc < n; ++cc) {
          Element a = r->element(ac), b = r->element(bc), c = r->element(cc);
          auto set = scan_bc_inverses(r, a, b, c);
          CHECK(set.size() <= 1);  // uniqueness
          auto got = two_sided_bc(a, b, c);
          REQUIRE(got.has_value() == !set.empty());
          if (got) CHECK(got->y.code() == set.front());
        }
  }
}

TEST_CASE("hybrid (b,c)-inverse: examples and characterization") {
  auto z6 = ring_of("zmod:6");
  CHECK(hybrid_bc(z6->element(2), z6->element(2), z6->element(2))->y.code() == 2);
  CHECK(hybrid_bc(z6->one(), z6->one(), z6->one())->y == z6->one());
  auto z8 = ring_of("zmod:8");
  CHECK(!hybrid_bc(z8->element(5), z8->element(0), z8->element(2)).has_value());

  for (const char* text : {"zmod:6", "zmod:8"}) {
    auto r = ring_of(text);
    std::uint64_t n = r->cardinality();
    for (std::uint64_t ac = 0; ac < n; ++ac)
      for (std::uint64_t bc = 0; bc < n; ++bc)
        for (std::uint64_t cc = 0; cc < n; ++cc) {
          Element a = r->element(ac), b = r->element(bc), c = r->element(cc);
          // hybrid witnesses = right witnesses ∩ right annihilator witnesses
          std::vector<std::uint64_t> expect;
          auto right = scan_right_witnesses(r, a, b, c);
          for (std::uint64_t yc : right) {
            Element y = r->element(yc);
            if (is_right_ann_bc_witness(a, b, c, y)) expect.push_back(yc);
          }
          std::vector<std::uint64_t> hybrid;
          for (std::uint64_t yc = 0; yc < n; ++yc)
            if (is_hybrid_bc_witness(a, b, c, r->element(yc)))
              hybrid.push_back(yc);
          CHECK(hybrid == expect);
          CHECK(hybrid.size() <= 1);
          auto got = hybrid_bc(a, b, c);
          REQUIRE(got.has_value() == !hybrid.empty());
          if (got) CHECK(got->y.code() == hybrid.front());
        }
  }
}

TEST_CASE("annihilator (b,c)-inverse: examples and uniqueness") {
  auto z6 = ring_of("zmod:6");
  CHECK(ann_bc(z6->one(), z6->one(), z6->one())->y == z6->one());
  CHECK(ann_bc(z6->element(2), z6->element(2), z6->element(2))->y.code() == 2);
  auto z8 = ring_of("zmod:8");
  CHECK(!ann_bc(z8->element(5), z8->element(0), z8->element(2)).has_value());

  auto r = ring_of("zmod:8");
  for (std::uint64_t ac = 0; ac < 8; ++ac)
    for (std::uint64_t bc = 0; bc < 8; ++bc)
      for (std::uint64_t cc = 0; cc < 8; ++cc) {
        Element a = r->element(ac), b = r->element(bc), c = r->element(cc);
        std::vector<std::uint64_t> set;
        for (std::uint64_t yc = 0; yc < 8; ++yc)
          if (is_ann_bc_witness(a, b, c, r->element(yc))) set.push_back(yc);
        CHECK(set.size() <= 1);
        auto got = ann_bc(a, b, c);
        REQUIRE(got.has_value() == !set.empty());
      }
}

TEST_CASE("inverse along an element") {
  auto z6 = ring_of("zmod:6");
  auto w = inverse_along(z6->element(2), z6->element(2), Sided::both);
  REQUIRE(w.has_value());
  CHECK(w->y.code() == 2);

  // invertible a along d = 1 gives the ordinary inverse
  CHECK(inverse_along(z6->element(5), z6->one(), Sided::both)->y.code() == 5);

  CHECK(!inverse_along(z6->element(3), z6->element(2), Sided::left).has_value());
}

TEST_CASE("delta inverses") {
  auto z5 = ring_of("zmod:5");
  auto full = delta_inverses(z5->element(2), kPenroseAll);
  REQUIRE(full.size() == 1);
  CHECK(full[0].code() == 3);

  auto z6 = ring_of("zmod:6");
  auto outer = delta_inverses(z6->element(0), delta_bit(2));
  bool has0 = false;
  for (const Element& e : outer) has0 = has0 || e.code() == 0;
  CHECK(has0);

  auto z8 = ring_of("zmod:8");
  CHECK(delta_inverses(z8->element(2), delta_bit(1)).empty());  // 2 not regular

  CHECK_THROWS_AS(delta_inverses(z8->element(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_delta_set("5"), std::invalid_argument);
  CHECK(parse_delta_set("1,3") == (delta_bit(1) | delta_bit(3)));
  CHECK(delta_set_to_string(delta_bit(1) | delta_bit(3)) == "{1,3}");
}

TEST_CASE("Moore-Penrose inverse") {
  auto z5 = ring_of("zmod:5");
  CHECK(moore_penrose(z5->element(2))->y.code() == 3);

  auto m3 = ring_of("mat:2:zmod:3");
  Element d10 = parse_element(m3, "[[1,0],[0,0]]");
  CHECK(moore_penrose(d10)->y == d10);

  auto z8 = ring_of("zmod:8");
  CHECK(!moore_penrose(z8->element(2)).has_value());
}

TEST_CASE("pi-regularity") {
  auto z8 = ring_of("zmod:8");
  auto p = pi_regular(z8->element(2), Side::left);
  REQUIRE(p.has_value());
  CHECK(p->n == 3);
  CHECK(p->x.code() == 0);

  auto z6 = ring_of("zmod:6");
  auto p6 = pi_regular(z6->element(2), Side::left);
  REQUIRE(p6.has_value());
  CHECK(p6->n == 1);
  CHECK(p6->x.code() == 2);

  // idempotents are pi-regular at n = 1 with witness 1
  auto p3 = pi_regular(z6->element(3), Side::left);
  REQUIRE(p3.has_value());
  CHECK(p3->n == 1);
  CHECK(p3->x.code() == 1);
}

TEST_CASE("Drazin and group inverses") {
  auto z8 = ring_of("zmod:8");
  auto d = drazin(z8->element(2));
  REQUIRE(d.has_value());
  CHECK(d->index == 3);
  CHECK(d->y.code() == 0);  // nilpotent: Drazin inverse 0

  auto z6 = ring_of("zmod:6");
  auto g = drazin(z6->element(2));
  REQUIRE(g.has_value());
  CHECK(g->index == 1);
  CHECK(g->y.code() == 2);
  CHECK(group_inverse(z6->element(2)).has_value());
  CHECK(!group_inverse(z8->element(2)).has_value());  // index 3

  // invertible elements have index 1 and the ordinary inverse
  auto u = drazin(z6->element(5));
  REQUIRE(u.has_value());
  CHECK(u->index == 1);
  CHECK(u->y.code() == 5);

  // every element of a finite carrier is Drazin invertible
  for (const char* text : {"zmod:12", "mat:2:zmod:2"}) {
    auto r = ring_of(text);
    for (std::uint64_t ac = 0; ac < r->cardinality(); ++ac) {
      Element a = r->element(ac);
      auto w = drazin(a);
      REQUIRE(w.has_value());
      CHECK(is_drazin_inverse(a, w->y, w->index));
      CHECK(two_sided_bc(a, pow(a, w->index), pow(a, w->index)).has_value());
    }
  }
}

TEST_CASE("star regularity") {
  auto z5 = ring_of("zmod:5");
  auto x = star_regular(z5->element(2), Side::left);
  REQUIRE(x.has_value());
  CHECK(x->code() == 4);  // 2 = 2*2*2*x -> 3x = 2 -> x = 4

  CHECK(star_regular(z5->element(0), Side::left)->code() == 0);
  auto z8 = ring_of("zmod:8");
  CHECK(!star_regular(z8->element(2), Side::left).has_value());
}

TEST_CASE("witness-level remark: one-sided vs annihilator witnesses") {
  // every left witness is a right annihilator witness, and dually
  for (const char* text : {"zmod:8", "mat:2:zmod:2"}) {
    auto r = ring_of(text);
    std::uint64_t n = r->cardinality();
    for (std::uint64_t ac = 0; ac < n; ++ac)
      for (std::uint64_t bc = 0; bc < n; ++bc)
        for (std::uint64_t cc = 0; cc < n; ++cc) {
          Element a = r->element(ac), b = r->element(bc), c = r->element(cc);
          for (std::uint64_t yc = 0; yc < n; ++yc) {
            Element y = r->element(yc);
            if (is_left_bc_witness(a, b, c, y))
              CHECK(is_right_ann_bc_witness(a, b, c, y));
            if (is_right_bc_witness(a, b, c, y))
              CHECK(is_left_ann_bc_witness(a, b, c, y));
          }
        }
  }
}

TEST_CASE("regular-c bridging: left and right-annihilator witness sets agree") {
  auto r = ring_of("zmod:6");
  for (std::uint64_t ac = 0; ac < 6; ++ac)
    for (std::uint64_t bc = 0; bc < 6; ++bc)
      for (std::uint64_t cc = 0; cc < 6; ++cc) {
        Element a = r->element(ac), b = r->element(bc), c = r->element(cc);
        if (!is_regular(c)) continue;
        CHECK(scan_left_witnesses(r, a, b, c) ==
              scan_right_ann_witnesses(r, a, b, c));
      }
}

TEST_CASE("star duality on the matrix carrier") {
  auto r = ring_of("mat:2:zmod:2");
  for (std::uint64_t ac = 0; ac < 16; ++ac)
    for (std::uint64_t bc = 0; bc < 16; ++bc)
      for (std::uint64_t cc = 0; cc < 16; ++cc) {
        Element a = r->element(ac), b = r->element(bc), c = r->element(cc);
        CHECK(left_bc(a, b, c).has_value() ==
              right_bc(star(a), star(c), star(b)).has_value());
        for (std::uint64_t yc = 0; yc < 16; ++yc) {
          Element y = r->element(yc);
          CHECK(is_left_bc_witness(a, b, c, y) ==
                is_right_bc_witness(star(a), star(c), star(b), star(y)));
        }
      }
}

TEST_CASE("witness sets and kind parsing") {
  CHECK(InverseKind::parse("left_bc").tag == InverseTag::left_bc);
  CHECK(InverseKind::parse("drazin").tag == InverseTag::drazin);
  CHECK_THROWS_AS(InverseKind::parse("nope"), std::invalid_argument);
  for (const char* name :
       {"left_bc", "right_bc", "right_ann_bc", "left_ann_bc", "two_sided_bc",
        "hybrid_bc", "ann_bc", "mary_left", "mary_right", "mary", "delta",
        "moore_penrose", "group", "drazin"})
    CHECK(InverseKind::parse(name).to_string() == name);
}
