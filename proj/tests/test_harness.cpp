#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "bcinv/verify.hpp"

using namespace bcinv;

namespace {

RingHandle ring_of(const char* text) {
  return build_ring(RingSpec::parse(text));
}

// The static coverage manifest: one entry per registered claim.  Registry
// drift (an added, removed, renamed or re-aritied claim) must show up here.
struct ManifestEntry {
  const char* id;
  unsigned arity;
  Claim::Expected expected;
};

constexpr ManifestEntry kManifest[] = {
    {"existence-left-bc", 3, Claim::Expected::holds},
    {"existence-right-bc", 3, Claim::Expected::holds},
    {"remark-left-witness-is-rightann", 4, Claim::Expected::holds},
    {"remark-right-witness-is-leftann", 4, Claim::Expected::holds},
    {"converse-annihilator-to-onesided", 4, Claim::Expected::fails_somewhere},
    {"remark-c-ann-eq-but-not-ideal", 2, Claim::Expected::fails_somewhere},
    {"bridge-regular-c-left-vs-rightann", 4, Claim::Expected::holds},
    {"bridge-regular-b-right-vs-leftann", 4, Claim::Expected::holds},
    {"two-sided-iff-left-and-right", 3, Claim::Expected::holds},
    {"two-sided-iff-regular-and-ann", 3, Claim::Expected::holds},
    {"star-duality-left", 4, Claim::Expected::holds},
    {"star-duality-ann", 4, Claim::Expected::holds},
    {"rightann-implies-bcirc-eq", 3, Claim::Expected::holds},
    {"leftann-implies-circc-eq", 3, Claim::Expected::holds},
    {"converse-bcirc-equality", 3, Claim::Expected::fails_somewhere},
    {"converse-circc-equality", 3, Claim::Expected::fails_somewhere},
    {"hybrid-characterization", 4, Claim::Expected::holds},
    {"hybrid-characterization-dual", 4, Claim::Expected::holds},
    {"ann-implies-onesided-ann", 4, Claim::Expected::holds},
    {"left-and-leftann-implies-ann", 4, Claim::Expected::holds},
    {"right-and-rightann-implies-ann", 4, Claim::Expected::holds},
    {"ann-converses-under-regularity", 4, Claim::Expected::holds},
    {"converse-prop-ann-i", 4, Claim::Expected::fails_somewhere},
    {"converse-prop-ann-ii", 4, Claim::Expected::fails_somewhere},
    {"converse-prop-ann-iii", 4, Claim::Expected::fails_somewhere},
    {"witness-inequality-left-vs-rightann", 3,
     Claim::Expected::fails_somewhere},
    {"five-way-left", 3, Claim::Expected::holds},
    {"five-way-right", 3, Claim::Expected::holds},
    {"direct-sum-corollary", 3, Claim::Expected::holds},
    {"lemma-13-criteria", 1, Claim::Expected::holds},
    {"lemma-14-criteria", 1, Claim::Expected::holds},
    {"bridge-14-left-astar-1", 1, Claim::Expected::holds},
    {"bridge-13-right-1-astar", 1, Claim::Expected::holds},
    {"mp-iff-onesided-bc", 1, Claim::Expected::holds},
    {"bridge-pi-left", 1, Claim::Expected::holds},
    {"bridge-pi-right", 1, Claim::Expected::holds},
    {"bridge-drazin-strongly-pi", 1, Claim::Expected::holds},
    {"special-astar-1-unitsum", 1, Claim::Expected::holds},
    {"special-a-astar", 1, Claim::Expected::holds},
    {"special-astar-a", 1, Claim::Expected::holds},
    {"onesided-without-regular-bc", 3, Claim::Expected::fails_somewhere},
    {"two-sided-implies-regular-bc", 3, Claim::Expected::holds},
    {"remark-a-11-iff-onesided-unit", 1, Claim::Expected::holds},
    {"remark-b-aa-iff-regular", 1, Claim::Expected::holds},
    {"remark-c-astar-iff-star-regular", 1, Claim::Expected::holds},
    {"remark-d-an-iff-pi-regular", 1, Claim::Expected::holds},
    {"remark-mary-reduction", 3, Claim::Expected::holds},
    {"product-split-left", 5, Claim::Expected::holds},
    {"product-split-right", 5, Claim::Expected::holds},
    {"product-transfer-left", 5, Claim::Expected::holds},
    {"product-transfer-right", 5, Claim::Expected::holds},
    {"product-transfer-two-sided", 5, Claim::Expected::holds},
    {"product-mixed-transfer", 5, Claim::Expected::holds},
    {"hunt-product-witness-maps-left", 5, Claim::Expected::fails_somewhere},
    {"hunt-product-witness-maps-right", 5, Claim::Expected::fails_somewhere},
    {"jacobson-left", 2, Claim::Expected::holds},
    {"jacobson-right", 2, Claim::Expected::holds},
    {"jacobson-iii", 2, Claim::Expected::holds},
    {"perturbation-left-4way", 5, Claim::Expected::holds},
    {"perturbation-right-4way", 5, Claim::Expected::holds},
};

}  // namespace

TEST_CASE("registry matches the coverage manifest exactly") {
  const auto& reg = registry();
  std::set<std::string> seen;
  for (const Claim& c : reg) {
    CHECK(seen.insert(c.id).second);  // unique ids
    CHECK(c.arity >= 1);
    CHECK(!c.statement.empty());
    CHECK(bool(c.predicate));
  }
  CHECK(reg.size() == std::size(kManifest));
  for (const ManifestEntry& m : kManifest) {
    const Claim* c = find_claim(m.id);
    REQUIRE_MESSAGE(c != nullptr, m.id);
    CHECK(c->arity == m.arity);
    CHECK(c->expected == m.expected);
  }
  CHECK(find_claim("nosuch") == nullptr);
}

TEST_CASE("verify: exhaustive case counts and passes") {
  auto rep = verify("existence-left-bc", ring_of("zmod:8"),
                    VerifyMode::Exhaustive());
  CHECK(rep.cases == 512);
  CHECK(rep.failures_total == 0);
  CHECK(rep.pass());

  rep = verify("jacobson-iii", ring_of("zmod:12"), VerifyMode::Exhaustive());
  CHECK(rep.cases == 144);
  CHECK(rep.pass());
}

TEST_CASE("verify: sampled mode is seeded and counted") {
  auto rep = verify("existence-left-bc", ring_of("mat:2:zmod:3"),
                    VerifyMode::Sample(1, 1000));
  CHECK(rep.cases == 1000);
  CHECK(rep.failures_total == 0);
  CHECK(rep.mode.to_string() == "sample:1:1000");
}

TEST_CASE("verify: deterministic across repeats and worker counts") {
  auto r = ring_of("zmod:6");
  auto a = verify("five-way-left", r, VerifyMode::Exhaustive(), 1);
  auto b = verify("five-way-left", r, VerifyMode::Exhaustive(), 4);
  CHECK(a.cases == b.cases);
  CHECK(a.failures_total == b.failures_total);

  // a hunt-style claim records failures deterministically too
  auto h1 = verify("converse-annihilator-to-onesided", r,
                   VerifyMode::Exhaustive(), 1);
  auto h2 = verify("converse-annihilator-to-onesided", r,
                   VerifyMode::Exhaustive(), 3);
  CHECK(h1.failures_total == h2.failures_total);
  REQUIRE(h1.failures.size() == h2.failures.size());
  for (std::size_t i = 0; i < h1.failures.size(); ++i)
    CHECK(h1.failures[i].tuple == h2.failures[i].tuple);

  auto s1 = verify("existence-left-bc", r, VerifyMode::Sample(9, 200), 1);
  auto s2 = verify("existence-left-bc", r, VerifyMode::Sample(9, 200), 3);
  CHECK(s1.failures_total == s2.failures_total);
  CHECK(s1.cases == s2.cases);
}

TEST_CASE("verify: failure reports carry tuples and sub-conditions") {
  // witness-inequality records failures on zmod:8 (multiple witnesses exist)
  auto rep = verify("witness-inequality-left-vs-rightann", ring_of("zmod:8"),
                    VerifyMode::Exhaustive());
  CHECK(rep.failures_total > 0);
  REQUIRE(!rep.failures.empty());
  CHECK(rep.failures[0].tuple.size() == 3);
  CHECK(!rep.failures[0].conditions.empty());
  std::string json = to_json_string(rep);
  CHECK(json.find("\"claim\":\"witness-inequality-left-vs-rightann\"") !=
        std::string::npos);
  CHECK(json.find("\"pass\":false") != std::string::npos);
}

TEST_CASE("verify: budget and argument errors") {
  CHECK_THROWS_AS(verify("nosuch", ring_of("zmod:6"), VerifyMode::Exhaustive()),
                  std::invalid_argument);
  // zmod:40 at arity 5 needs 1.024e8 > 5e7 evaluations
  CHECK_THROWS_AS(verify("product-split-left", ring_of("zmod:40"),
                         VerifyMode::Exhaustive()),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify("existence-left-bc", ring_of("zmod:6"),
                         VerifyMode::Sample(1, kDefaultBudget + 1)),
                  std::invalid_argument);
}

TEST_CASE("hunt: finds the witness-level inequality in zmod:8") {
  auto res = hunt("witness-inequality-left-vs-rightann",
                  {RingSpec::parse("zmod:8")});
  REQUIRE(res.found);
  CHECK(res.ring == "zmod:8");
  CHECK(res.tuple.size() == 3);
  std::string json = to_json_string(res);
  CHECK(json.find("\"found\":true") != std::string::npos);
}

TEST_CASE("hunt: scans a family deterministically") {
  std::vector<RingSpec> family;
  for (std::uint64_t n = 2; n <= 12; ++n) family.push_back(RingSpec::zmod(n));
  auto r1 = hunt("converse-bcirc-equality", family);
  auto r2 = hunt("converse-bcirc-equality", family);
  CHECK(r1.found == r2.found);
  CHECK(r1.ring == r2.ring);
  CHECK(r1.tuple == r2.tuple);
  // this converse only fails on infinite carriers, so the zmod family
  // finding nothing is the expected (and legitimate) outcome
  CHECK(!r1.found);
}

TEST_CASE("hunt: rejects claims that are expected to hold") {
  CHECK_THROWS_AS(hunt("existence-left-bc", {RingSpec::parse("zmod:6")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hunt("nosuch", {RingSpec::parse("zmod:6")}),
                  std::invalid_argument);
}

TEST_CASE("hunt: product witness maps fail for arbitrary witnesses") {
  auto res = hunt("hunt-product-witness-maps-left",
                  {RingSpec::parse("zmod:4"), RingSpec::parse("zmod:6")});
  CHECK(res.found);  // non-uniqueness breaks the constructed-witness maps
}
