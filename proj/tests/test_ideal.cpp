#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>
#include <set>

#include "bcinv/ideal.hpp"
#include "bcinv/ring.hpp"

using namespace bcinv;

namespace {

RingHandle ring_of(const char* text) {
  return build_ring(RingSpec::parse(text));
}

// brute-force oracle: least s with s*g = x (left) or g*s = x (right)
std::optional<std::uint64_t> scan_factor(const RingHandle& r, Element x,
                                         Element g, bool left) {
  for (std::uint64_t s = 0; s < r->cardinality(); ++s) {
    Element se = r->element(s);
    if ((left ? se * g : g * se) == x) return s;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("factor solver examples") {
  auto z6 = ring_of("zmod:6");
  CHECK(solve_left_factor(z6->element(2), z6->element(4)).value().code() == 2);
  CHECK(solve_left_factor(z6->element(0), z6->element(4)).value().code() == 0);
  CHECK(!solve_left_factor(z6->element(3), z6->element(2)).has_value());
  CHECK(solve_right_factor(z6->element(2), z6->element(4)).value().code() == 2);
  CHECK(solve_right_factor(z6->element(0), z6->element(5)).value().code() == 0);

  auto m2 = ring_of("mat:2:zmod:2");
  Element id = parse_element(m2, "[[1,0],[0,1]]");
  Element e11 = parse_element(m2, "[[1,0],[0,0]]");
  CHECK(!solve_right_factor(id, e11).has_value());  // rank-1 cannot reach I
  CHECK(solve_right_factor(e11, id).value() == e11);
}

TEST_CASE("factor solvers agree with the exhaustive scan") {
  for (const char* text : {"zmod:6", "zmod:8", "zmod:12", "zmod:96",
                           "mat:2:zmod:2", "mat:2:zmod:3",
                           "prod:(zmod:4;zmod:6)"}) {
    auto r = ring_of(text);
    for (std::uint64_t xc = 0; xc < r->cardinality(); ++xc)
      for (std::uint64_t gc = 0; gc < r->cardinality(); ++gc) {
        Element x = r->element(xc), g = r->element(gc);
        auto left = solve_left_factor(x, g);
        auto left_scan = scan_factor(r, x, g, true);
        REQUIRE(left.has_value() == left_scan.has_value());
        if (left) {
          REQUIRE(left->code() == *left_scan);  // least-code contract
          CHECK(*left * g == x);
        }
        auto right = solve_right_factor(x, g);
        auto right_scan = scan_factor(r, x, g, false);
        REQUIRE(right.has_value() == right_scan.has_value());
        if (right) {
          REQUIRE(right->code() == *right_scan);
          CHECK(g * *right == x);
        }
      }
  }
}

TEST_CASE("factor solvers on mat:3:zmod:2 agree with the scan (sampled)") {
  auto r = ring_of("mat:3:zmod:2");  // 512 elements, 9x9 block systems
  std::mt19937_64 rng(11);
  for (int it = 0; it < 1500; ++it) {
    Element x = r->element(rng() % 512), g = r->element(rng() % 512);
    auto left = solve_left_factor(x, g);
    auto left_scan = scan_factor(r, x, g, true);
    REQUIRE(left.has_value() == left_scan.has_value());
    if (left) REQUIRE(left->code() == *left_scan);
    auto right = solve_right_factor(x, g);
    auto right_scan = scan_factor(r, x, g, false);
    REQUIRE(right.has_value() == right_scan.has_value());
    if (right) REQUIRE(right->code() == *right_scan);
  }
}

TEST_CASE("solution enumeration visits exactly the solution set") {
  for (const char* text : {"zmod:12", "mat:2:zmod:2", "prod:(zmod:2;zmod:4)"}) {
    auto r = ring_of(text);
    for (std::uint64_t xc = 0; xc < r->cardinality(); ++xc)
      for (std::uint64_t gc = 0; gc < r->cardinality(); ++gc) {
        Element x = r->element(xc), g = r->element(gc);
        std::set<std::uint64_t> got;
        for_each_left_factor_solution(x, g, [&](Element s) {
          CHECK(s * g == x);
          CHECK(got.insert(s.code()).second);  // no duplicates
          return true;
        });
        std::set<std::uint64_t> want;
        for (std::uint64_t s = 0; s < r->cardinality(); ++s)
          if (r->element(s) * g == x) want.insert(s);
        CHECK(got == want);
      }
  }
}

TEST_CASE("annihilator subset decisions") {
  auto z8 = ring_of("zmod:8");
  CHECK(annihilator_subset(z8->element(2), z8->element(6), Side::right));
  CHECK(!annihilator_subset(z8->element(2), z8->element(1), Side::right));
  for (std::uint64_t g = 0; g < 8; ++g)  // reflexivity
    CHECK(annihilator_subset(z8->element(g), z8->element(g), Side::right));

  auto m2 = ring_of("mat:2:zmod:2");
  Element e12 = parse_element(m2, "[[0,1],[0,0]]");
  Element e11 = parse_element(m2, "[[1,0],[0,0]]");
  // °(e12) vs °(e11): x*e12 = 0 iff second column of x... check both sides
  for (std::uint64_t g1 = 0; g1 < 16; ++g1)
    for (std::uint64_t g2 = 0; g2 < 16; ++g2) {
      bool expect = true;
      for (std::uint64_t x = 0; x < 16 && expect; ++x)
        if (m2->element(g1) * m2->element(x) == m2->zero() &&
            m2->element(g2) * m2->element(x) != m2->zero())
          expect = false;
      CHECK(annihilator_subset(m2->element(g1), m2->element(g2), Side::right) ==
            expect);
    }
  (void)e11;
  (void)e12;
}

TEST_CASE("existence criterion solve: least s with s*cab = b") {
  auto z8 = ring_of("zmod:8");
  CHECK(ideal_eq_rb_rcab(z8->element(5), z8->element(0), z8->element(2))
            .value()
            .code() == 0);
  auto z6 = ring_of("zmod:6");
  CHECK(ideal_eq_rb_rcab(z6->element(2), z6->element(2), z6->element(2))
            .value()
            .code() == 1);
  CHECK(!ideal_eq_rb_rcab(z6->element(2), z6->element(3), z6->element(3))
             .has_value());
}

TEST_CASE("existence criterion equals the set-level ideal comparison") {
  for (const char* text : {"zmod:8", "zmod:6", "mat:2:zmod:2"}) {
    auto r = ring_of(text);
    std::uint64_t n = r->cardinality();
    for (std::uint64_t ac = 0; ac < n; ++ac)
      for (std::uint64_t bc = 0; bc < n; ++bc)
        for (std::uint64_t cc = 0; cc < n; ++cc) {
          Element a = r->element(ac), b = r->element(bc), c = r->element(cc);
          // materialize Rb and Rcab
          std::set<std::uint64_t> rb, rcab;
          Element cab = c * a * b;
          for (std::uint64_t s = 0; s < n; ++s) {
            rb.insert((r->element(s) * b).code());
            rcab.insert((r->element(s) * cab).code());
          }
          CHECK(ideal_eq_rb_rcab(a, b, c).has_value() == (rb == rcab));
        }
  }
}

TEST_CASE("unit-sum decomposition certificates") {
  auto z6 = ring_of("zmod:6");
  auto us = unit_sum_decomposition(z6->element(4), z6->element(2));
  REQUIRE(us.has_value());
  CHECK(us->t.code() == 1);
  CHECK(us->u.code() == 3);

  auto trivial = unit_sum_decomposition(z6->element(4), z6->element(0));
  REQUIRE(trivial.has_value());
  CHECK(trivial->t.code() == 0);
  CHECK(trivial->u.code() == 1);

  CHECK(!unit_sum_decomposition(z6->element(0), z6->element(3)).has_value());

  // certificate recheck and solver-level equivalence with the criterion
  for (const char* text : {"zmod:6", "zmod:8", "mat:2:zmod:2"}) {
    auto r = ring_of(text);
    std::uint64_t n = r->cardinality();
    for (std::uint64_t ac = 0; ac < n; ++ac)
      for (std::uint64_t bc = 0; bc < n; ++bc)
        for (std::uint64_t cc = 0; cc < n; ++cc) {
          Element a = r->element(ac), b = r->element(bc), c = r->element(cc);
          auto dec = unit_sum_decomposition(c * a, b);
          CHECK(dec.has_value() == ideal_eq_rb_rcab(a, b, c).has_value());
          if (dec) {
            CHECK(dec->t * (c * a) + dec->u == r->one());
            CHECK(dec->u * b == r->zero());
          }
        }
  }
}

TEST_CASE("principal and annihilator ideal members") {
  auto z6 = ring_of("zmod:6");
  PrincipalIdeal r2{Side::left, z6->element(2)};
  std::vector<std::uint64_t> codes;
  for (const Element& e : r2.elements()) codes.push_back(e.code());
  CHECK(codes == std::vector<std::uint64_t>{0, 2, 4});
  CHECK(r2.membership(z6->element(4)));
  CHECK(!r2.membership(z6->element(3)));

  AnnihilatorIdeal ann2{Side::right, z6->element(2)};
  codes.clear();
  for (const Element& e : ann2.elements()) codes.push_back(e.code());
  CHECK(codes == std::vector<std::uint64_t>{0, 3});
}

TEST_CASE("trivial intersection of ideal pairs") {
  auto z8 = ring_of("zmod:8");
  CHECK(trivial_intersection(
      AnnihilatorIdeal{Side::right, z8->element(5)},
      PrincipalIdeal{Side::right, z8->element(0)}));

  auto z6 = ring_of("zmod:6");
  CHECK(!trivial_intersection(AnnihilatorIdeal{Side::right, z6->element(2)},
                              PrincipalIdeal{Side::right, z6->element(3)}));

  auto z12 = ring_of("zmod:12");
  for (std::uint64_t x = 0; x < 12; ++x)
    CHECK(trivial_intersection(AnnihilatorIdeal{Side::right, z12->element(x)},
                               PrincipalIdeal{Side::right, z12->element(0)}));
}

TEST_CASE("linear systems mod n via Smith normal form") {
  using Mat = std::vector<std::vector<long long>>;
  auto sol = solve_linear_mod(Mat{{1, 0}, {0, 1}}, {1, 0}, 2);
  REQUIRE(sol.has_value());
  CHECK(*sol == std::vector<std::uint64_t>{1, 0});

  CHECK(!solve_linear_mod(Mat{{2}}, {1}, 4).has_value());
  sol = solve_linear_mod(Mat{{2}}, {2}, 4);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] % 4 == 1);

  CHECK_THROWS_AS(solve_linear_mod(Mat{{1, 2}}, {1, 2}, 4),
                  std::invalid_argument);

  // exhaustive agreement with scanning for k <= 2, n <= 4
  for (std::uint64_t n = 2; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < n * n * n * n; ++mask) {
      std::uint64_t m = mask;
      long long a00 = m % n; m /= n;
      long long a01 = m % n; m /= n;
      long long a10 = m % n; m /= n;
      long long a11 = m % n;
      for (std::uint64_t v0 = 0; v0 < n; ++v0)
        for (std::uint64_t v1 = 0; v1 < n; ++v1) {
          Mat A{{a00, a01}, {a10, a11}};
          std::vector<long long> v{(long long)v0, (long long)v1};
          bool scan_found = false;
          for (long long x0 = 0; x0 < (long long)n && !scan_found; ++x0)
            for (long long x1 = 0; x1 < (long long)n && !scan_found; ++x1)
              if ((a00 * x0 + a01 * x1) % (long long)n == (long long)v0 &&
                  (a10 * x0 + a11 * x1) % (long long)n == (long long)v1)
                scan_found = true;
          auto got = solve_linear_mod(A, v, n);
          REQUIRE(got.has_value() == scan_found);
          if (got) {
            long long x0 = (long long)(*got)[0], x1 = (long long)(*got)[1];
            CHECK((a00 * x0 + a01 * x1) % (long long)n == (long long)v0);
            CHECK((a10 * x0 + a11 * x1) % (long long)n == (long long)v1);
          }
        }
    }
  }
}
