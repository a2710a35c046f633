// Command-line front end: solve inverse problems, check registered claims,
// hunt for counterexamples.  JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success/found, 2 usage error, 3 not-exists/not-found,
// 4 claim failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcinv/inverse.hpp"
#include "bcinv/ring.hpp"
#include "bcinv/verify.hpp"

namespace {

using nlohmann::json;
using namespace bcinv;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitClaimFailure = 4;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BCINV_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "ignoring malformed BCINV_BUDGET value '" << env << "'\n";
  }
  return kDefaultBudget;
}

// zmod:a..b expands inclusively; everything else is a single spec
std::vector<RingSpec> expand_ring_list(const std::string& text) {
  std::vector<RingSpec> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) {
      std::size_t dots = item.find("..");
      if (dots != std::string::npos && item.rfind("zmod:", 0) == 0) {
        std::uint64_t lo = std::stoull(item.substr(5, dots - 5));
        std::uint64_t hi = std::stoull(item.substr(dots + 2));
        if (lo < 2 || hi < lo)
          throw std::invalid_argument("bad ring range '" + item + "'");
        for (std::uint64_t n = lo; n <= hi; ++n)
          out.push_back(RingSpec::zmod(n));
      } else {
        out.push_back(RingSpec::parse(item));
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty ring list");
  return out;
}

struct SolveArgs {
  std::string ring_spec, kind_name, a, b, c, d, delta;
  bool all = false;
};

int run_solve(const SolveArgs& args) {
  RingHandle ring = build_ring(RingSpec::parse(args.ring_spec));
  InverseKind kind = InverseKind::parse(args.kind_name);
  Element a = parse_element(ring, args.a);

  auto need = [&](const std::string& v, const char* flag) {
    if (v.empty())
      throw std::invalid_argument(std::string("kind ") + args.kind_name +
                                  " requires " + flag);
    return parse_element(ring, v);
  };

  Element b = a, c = a;  // placeholders, replaced per kind below
  switch (kind.tag) {
    case InverseTag::left_bc:
    case InverseTag::right_bc:
    case InverseTag::right_ann_bc:
    case InverseTag::left_ann_bc:
    case InverseTag::two_sided_bc:
    case InverseTag::hybrid_bc:
    case InverseTag::ann_bc:
      b = need(args.b, "--b");
      c = need(args.c, "--c");
      break;
    case InverseTag::mary_left:
    case InverseTag::mary_right:
    case InverseTag::mary:
      b = c = need(args.d, "--d");
      break;
    case InverseTag::delta:
      if (args.delta.empty())
        throw std::invalid_argument("kind delta requires --delta");
      kind.delta_mask = parse_delta_set(args.delta);
      break;
    default:
      break;  // single-element kinds
  }

  std::optional<Witness> w;
  switch (kind.tag) {
    case InverseTag::left_bc: w = left_bc(a, b, c); break;
    case InverseTag::right_bc: w = right_bc(a, b, c); break;
    case InverseTag::right_ann_bc: w = right_ann_bc(a, b, c); break;
    case InverseTag::left_ann_bc: w = left_ann_bc(a, b, c); break;
    case InverseTag::two_sided_bc: w = two_sided_bc(a, b, c); break;
    case InverseTag::hybrid_bc: w = hybrid_bc(a, b, c); break;
    case InverseTag::ann_bc: w = ann_bc(a, b, c); break;
    case InverseTag::mary_left: w = inverse_along(a, b, Sided::left); break;
    case InverseTag::mary_right: w = inverse_along(a, b, Sided::right); break;
    case InverseTag::mary: w = inverse_along(a, b, Sided::both); break;
    case InverseTag::moore_penrose: w = moore_penrose(a); break;
    case InverseTag::group: w = group_inverse(a); break;
    case InverseTag::drazin: w = drazin(a); break;
    case InverseTag::delta: break;
  }

  json out;
  out["ring"] = ring->spec().to_string();
  out["kind"] = kind.tag == InverseTag::delta
                    ? ("delta" + delta_set_to_string(kind.delta_mask))
                    : kind.to_string();
  bool exists = false;
  if (kind.tag == InverseTag::delta) {
    std::vector<Element> all = delta_inverses(a, kind.delta_mask);
    exists = !all.empty();
    out["exists"] = exists;
    if (exists) out["witness"] = format_element(all.front());
    if (args.all) {
      json list = json::array();
      for (const Element& e : all) list.push_back(format_element(e));
      out["all"] = list;
    }
  } else {
    exists = w.has_value();
    out["exists"] = exists;
    if (w) {
      out["witness"] = format_element(w->y);
      json cert = json::object();
      for (const auto& [name, e] : w->factors) cert[name] = format_element(e);
      if (w->index > 0) cert["index"] = w->index;
      if (!cert.empty()) out["certificate"] = cert;
    }
    if (args.all) {
      json list = json::array();
      for (const Element& e : witness_set(kind, a, b, c))
        list.push_back(format_element(e));
      out["all"] = list;
    }
  }
  std::cout << out.dump() << "\n";
  return exists ? kExitOk : kExitNotFound;
}

struct CheckArgs {
  std::string claim, ring_spec, mode = "exhaustive";
  bool all_claims = false;
  unsigned workers = 1;
};

VerifyMode parse_mode(const std::string& text) {
  if (text == "exhaustive") return VerifyMode::Exhaustive();
  if (text.rfind("sample:", 0) == 0) {
    std::size_t second = text.find(':', 7);
    if (second != std::string::npos) {
      std::uint64_t seed = std::stoull(text.substr(7, second - 7));
      std::uint64_t count = std::stoull(text.substr(second + 1));
      return VerifyMode::Sample(seed, count);
    }
  }
  throw std::invalid_argument("mode must be exhaustive or sample:<seed>:<count>");
}

int run_check(const CheckArgs& args) {
  RingHandle ring = build_ring(RingSpec::parse(args.ring_spec));
  VerifyMode mode = parse_mode(args.mode);
  std::uint64_t budget = default_budget();

  std::vector<const Claim*> todo;
  if (args.all_claims) {
    for (const Claim& c : registry())
      if (c.expected == Claim::Expected::holds) todo.push_back(&c);
  } else {
    const Claim* c = find_claim(args.claim);
    if (!c) throw std::invalid_argument("unknown claim '" + args.claim + "'");
    if (c->expected != Claim::Expected::holds)
      throw std::invalid_argument("claim '" + args.claim +
                                  "' is a hunt claim; use the hunt command");
    todo.push_back(c);
  }

  bool all_pass = true;
  json reports = json::array();
  for (const Claim* c : todo) {
    TheoremReport rep = verify(c->id, ring, mode, args.workers, budget);
    all_pass = all_pass && rep.pass();
    reports.push_back(json::parse(to_json_string(rep)));
  }
  std::cout << (args.all_claims ? reports.dump() : reports[0].dump()) << "\n";
  return all_pass ? kExitOk : kExitClaimFailure;
}

struct HuntArgs {
  std::string claim, rings;
};

int run_hunt(const HuntArgs& args) {
  std::vector<RingSpec> family = expand_ring_list(args.rings);
  HuntResult res = hunt(args.claim, family, default_budget());
  std::cout << to_json_string(res) << "\n";
  return res.found ? kExitOk : kExitNotFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact (b,c)-inverse computations over finite rings"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "decide one inverse problem");
  solve->add_option("--ring", solve_args.ring_spec, "ring spec")->required();
  solve->add_option("--kind", solve_args.kind_name, "inverse kind")->required();
  solve->add_option("--a", solve_args.a, "element a")->required();
  solve->add_option("--b", solve_args.b, "element b");
  solve->add_option("--c", solve_args.c, "element c");
  solve->add_option("--d", solve_args.d, "element d (mary kinds)");
  solve->add_option("--delta", solve_args.delta, "delta set, e.g. 1,3");
  solve->add_flag("--all", solve_args.all, "list the full witness set");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "verify a registered claim");
  check->add_option("--claim", check_args.claim, "claim id");
  check->add_flag("--all-claims", check_args.all_claims,
                  "verify every claim expected to hold");
  check->add_option("--ring", check_args.ring_spec, "ring spec")->required();
  check->add_option("--mode", check_args.mode,
                    "exhaustive | sample:<seed>:<count>");
  check->add_option("--workers", check_args.workers, "worker threads");

  HuntArgs hunt_args;
  CLI::App* huntcmd =
      app.add_subcommand("hunt", "scan rings for a counterexample");
  huntcmd->add_option("--claim", hunt_args.claim, "hunt claim id")->required();
  huntcmd->add_option("--rings", hunt_args.rings,
                      "comma list of specs; zmod:a..b ranges allowed")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (check->parsed()) {
      if (check_args.all_claims ? !check_args.claim.empty()
                                : check_args.claim.empty())
        throw std::invalid_argument(
            "check needs exactly one of --claim or --all-claims");
      return run_check(check_args);
    }
    if (huntcmd->parsed()) return run_hunt(hunt_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
