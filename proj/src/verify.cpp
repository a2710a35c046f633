#include "bcinv/verify.hpp"

#include <chrono>
#include <random>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace bcinv {
namespace {

// card^arity, or nullopt on uint64 overflow
std::optional<std::uint64_t> tuple_space(std::uint64_t card, unsigned arity) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (card != 0 && total > UINT64_MAX / card) return std::nullopt;
    total *= card;
  }
  return total;
}

// decode tuple index into element codes, first position most significant
void decode_tuple(std::uint64_t index, std::uint64_t card, unsigned arity,
                  const Ring& R, std::vector<Element>& out) {
  out.clear();
  std::uint64_t divisor = 1;
  for (unsigned i = 1; i < arity; ++i) divisor *= card;
  for (unsigned i = 0; i < arity; ++i) {
    out.push_back(R.element((index / divisor) % card));
    divisor /= card;
  }
}

struct ChunkResult {
  std::uint64_t failures = 0;
  std::vector<std::pair<std::uint64_t, FailureCase>> stored;  // (index, case)
};

FailureCase describe_failure(const Claim& claim, const RingHandle& ring,
                             const std::vector<Element>& tuple) {
  FailureCase fc;
  for (const Element& e : tuple) fc.tuple.push_back(format_element(e));
  ConditionTrace trace;
  claim.predicate(ring, tuple, &trace);
  fc.conditions = std::move(trace.conditions);
  return fc;
}

}  // namespace

std::string VerifyMode::to_string() const {
  if (exhaustive) return "exhaustive";
  return "sample:" + std::to_string(seed) + ":" + std::to_string(count);
}

TheoremReport verify(std::string_view claim_id, const RingHandle& ring,
                     VerifyMode mode, unsigned workers,
                     std::uint64_t budget) {
  const Claim* claim = find_claim(claim_id);
  if (!claim)
    throw std::invalid_argument("unknown claim '" + std::string(claim_id) + "'");
  if (workers == 0) workers = 1;

  auto started = std::chrono::steady_clock::now();
  TheoremReport report;
  report.claim_id = claim->id;
  report.ring = ring->spec().to_string();
  report.mode = mode;

  std::uint64_t card = ring->cardinality();
  std::vector<std::uint64_t> sampled;  // sample mode codes, arity per case

  std::uint64_t total = 0;
  if (mode.exhaustive) {
    auto space = tuple_space(card, claim->arity);
    if (!space || *space > budget)
      throw std::invalid_argument(
          "budget exceeded: |R|^" + std::to_string(claim->arity) +
          " tuples of " + report.ring + " exceed " + std::to_string(budget));
    total = *space;
  } else {
    if (mode.count > budget)
      throw std::invalid_argument("budget exceeded: sample count " +
                                  std::to_string(mode.count) + " exceeds " +
                                  std::to_string(budget));
    total = mode.count;
    // one pre-generated stream keeps reports independent of the worker
    // count; cap the buffer and fall back to sequential streaming beyond it
    if (total <= (std::uint64_t(1) << 27) / claim->arity) {
      std::mt19937_64 rng(mode.seed);
      sampled.reserve(total * claim->arity);
      for (std::uint64_t i = 0; i < total * claim->arity; ++i)
        sampled.push_back(rng() % card);
    } else {
      workers = 1;
    }
  }
  report.cases = total;

  unsigned used = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, total == 0 ? 1 : total));
  std::vector<ChunkResult> chunks(used);
  std::uint64_t per = used == 0 ? 0 : total / used;

  auto run_chunk = [&](unsigned w) {
    std::uint64_t lo = per * w;
    std::uint64_t hi = (w + 1 == used) ? total : per * (w + 1);
    ChunkResult& out = chunks[w];
    std::vector<Element> tuple;
    tuple.reserve(claim->arity);
    std::mt19937_64 stream_rng(mode.seed);  // streaming sample fallback
    for (std::uint64_t t = lo; t < hi; ++t) {
      tuple.clear();
      if (mode.exhaustive) {
        decode_tuple(t, card, claim->arity, *ring, tuple);
      } else if (!sampled.empty()) {
        for (unsigned j = 0; j < claim->arity; ++j)
          tuple.push_back(ring->element(sampled[t * claim->arity + j]));
      } else {
        for (unsigned j = 0; j < claim->arity; ++j)
          tuple.push_back(ring->element(stream_rng() % card));
      }
      if (!claim->predicate(ring, tuple, nullptr)) {
        ++out.failures;
        if (out.stored.size() < TheoremReport::kMaxStoredFailures)
          out.stored.emplace_back(t, describe_failure(*claim, ring, tuple));
      }
    }
  };

  if (used <= 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (unsigned w = 0; w < used; ++w)
      pool.emplace_back(run_chunk, w);
    for (auto& th : pool) th.join();
  }

  for (const ChunkResult& chunk : chunks) {
    report.failures_total += chunk.failures;
    for (const auto& [idx, fc] : chunk.stored)
      if (report.failures.size() < TheoremReport::kMaxStoredFailures)
        report.failures.push_back(fc);
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

HuntResult hunt(std::string_view claim_id, const std::vector<RingSpec>& family,
                std::uint64_t budget, std::uint64_t cardinality_cap) {
  const Claim* claim = find_claim(claim_id);
  if (!claim)
    throw std::invalid_argument("unknown claim '" + std::string(claim_id) + "'");
  if (claim->expected != Claim::Expected::fails_somewhere)
    throw std::invalid_argument("claim '" + std::string(claim_id) +
                                "' is not a hunt claim");
  for (const RingSpec& spec : family) {
    RingHandle ring = build_ring(spec, cardinality_cap);
    std::uint64_t card = ring->cardinality();
    auto space = tuple_space(card, claim->arity);
    if (!space || *space > budget)
      throw std::invalid_argument("budget exceeded on ring " + spec.to_string());
    std::vector<Element> tuple;
    for (std::uint64_t t = 0; t < *space; ++t) {
      decode_tuple(t, card, claim->arity, *ring, tuple);
      if (!claim->predicate(ring, tuple, nullptr)) {
        HuntResult res;
        res.found = true;
        res.ring = spec.to_string();
        for (const Element& e : tuple) res.tuple.push_back(format_element(e));
        return res;
      }
    }
  }
  return HuntResult{};
}

std::string to_json_string(const TheoremReport& report) {
  nlohmann::json j;
  j["claim"] = report.claim_id;
  j["ring"] = report.ring;
  j["mode"] = report.mode.to_string();
  if (!report.mode.exhaustive) {
    j["seed"] = report.mode.seed;
    j["count"] = report.mode.count;
  }
  j["cases"] = report.cases;
  j["failures_total"] = report.failures_total;
  j["pass"] = report.pass();
  j["failures"] = nlohmann::json::array();
  for (const FailureCase& fc : report.failures) {
    nlohmann::json f;
    f["tuple"] = fc.tuple;
    nlohmann::json conds = nlohmann::json::object();
    for (const auto& [name, value] : fc.conditions) conds[name] = value;
    f["conditions"] = conds;
    j["failures"].push_back(f);
  }
  j["elapsed_ms"] = report.elapsed_ms;
  return j.dump();
}

std::string to_json_string(const HuntResult& result) {
  nlohmann::json j;
  j["found"] = result.found;
  if (result.found) {
    j["ring"] = result.ring;
    j["tuple"] = result.tuple;
  }
  return j.dump();
}

}  // namespace bcinv
