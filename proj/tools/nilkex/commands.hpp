// Copyright 2026 The nilkex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILKEX_TOOLS_COMMANDS_HPP_
#define NILKEX_TOOLS_COMMANDS_HPP_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "platform.hpp"

namespace nilkex::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;       // check: an identity failed
inline constexpr int kExitInput = 2;        // unreadable or malformed input
inline constexpr int kExitAttackFailed = 3;

struct CheckConfig {
  std::string path;
  std::optional<std::size_t> declared_class;
};

inline int cmd_check(const CheckConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<PcGroup> group;
  try {
    group.emplace(parse_presentation(read_file(cfg.path)));
  } catch (const Error& e) {
    err << cfg.path << ": " << e.what() << "\n";
    return kExitInput;
  }
  const auto rep = check_consistency(*group);
  for (const auto& f : rep.failures) out << "FAIL " << f << "\n";
  out << (rep.consistent() ? "pass" : "fail") << ": "
      << rep.checked - rep.failures.size() << "/" << rep.checked
      << " overlap identities hold\n";
  if (!rep.consistent()) {
    out << "inconsistent\n";
    return kExitFailed;
  }
  if (cfg.declared_class) {
    if (!verify_class_at_most(*group, *cfg.declared_class)) {
      out << "FAIL class <= " << *cfg.declared_class
          << ": a left-normed commutator of that weight is nontrivial\n";
      return kExitFailed;
    }
    out << "consistent, class <= " << *cfg.declared_class << " confirmed\n";
    return kExitOk;
  }
  if (const auto c = nilpotency_class_bound(*group)) {
    out << "consistent, class <= " << *c << " confirmed\n";
  } else {
    out << "consistent\n";
  }
  return kExitOk;
}

struct ExchangeConfig {
  std::string protocol = "I";
  std::string platform;
  std::optional<std::string> keys;  // csv
  std::uint64_t seed = 0;
  std::optional<std::string> bound;
  std::optional<std::string> out;
};

inline std::vector<Integer> parse_key_list(const std::string& csv) {
  std::vector<Integer> keys;
  for (const auto& tok : detail::split(csv, ',')) keys.push_back(parse_integer(tok));
  return keys;
}

template <Group G>
Integer default_bound(const G& g) {
  if (auto p = g.period()) return *p;
  return Integer(1) << 128;
}

inline int cmd_exchange(const ExchangeConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const ProtocolKind protocol = parse_protocol(cfg.protocol);
    const Platform platform = resolve_platform(cfg.platform);
    return std::visit(
        [&](const auto& group) -> int {
          const auto params = default_params(group, protocol);
          std::vector<PrivateKey> keys;
          if (cfg.keys) {
            const auto list = parse_key_list(*cfg.keys);
            if (list.size() != params.parties()) {
              throw Error(Errc::kInvalidArgument,
                          "platform needs " + std::to_string(params.parties()) +
                              " keys for Protocol " + protocol_name(protocol));
            }
            for (std::size_t j = 0; j < list.size(); ++j) keys.push_back({j + 1, list[j]});
          } else {
            const Integer bound = cfg.bound ? parse_integer(*cfg.bound) : default_bound(group);
            keys = sample_keys(params.parties(), bound, cfg.seed);
          }
          const auto run = run_exchange(params, keys);
          const Json transcript = transcript_to_json(platform, params, run.transcript);
          if (cfg.out) write_file(*cfg.out, transcript.dump(2) + "\n");

          Json report{{"protocol", protocol_name(protocol)},
                      {"platform", platform.spec},
                      {"parties", params.parties()},
                      {"agreement", run.agreement},
                      {"shared_key", element_to_json(group, run.shared)},
                      {"shared_key_text", describe(group, run.shared)},
                      {"trivial_key", run.trivial_key},
                      {"warnings", run.warnings}};
          if (cfg.out) report["transcript"] = *cfg.out;
          out << report.dump(2) << "\n";
          return run.agreement ? kExitOk : kExitFailed;
        },
        platform.group);
  } catch (const Error& e) {
    err << "exchange: " << e.what() << "\n";
    return kExitInput;
  }
}

struct AttackConfig {
  std::string transcript;
  std::string solver = "ut-reduce";
  std::optional<std::uint64_t> budget;
  std::uint64_t bound = 1000000;  // bruteforce scan limit
  std::optional<std::string> out;
};

namespace detail {

template <class G>
Integer unsupported(const std::string& solver) {
  throw Error(Errc::kUnsupported, "solver '" + solver + "' does not apply to this platform");
}

// Selects a solver callable for the platform at hand.
template <Group G>
auto make_solver(const AttackConfig& cfg) {
  return [cfg](const CountingGroup<G>& cg, const typename G::element_type& b,
               const typename G::element_type& t) -> Integer {
    if (cfg.solver == "bruteforce") {
      if (auto a = psp_bruteforce(cg, b, t, cfg.bound)) return *a;
      throw Error(Errc::kNoSolution, "no exponent within the scan bound");
    }
    if (cfg.solver == "bsgs") {
      const auto order = cg.period();
      if (!order) throw Error(Errc::kUnsupported, "bsgs needs a finite group");
      return psp_bsgs(cg, b, t, *order);
    }
    if (cfg.solver == "ut-reduce") {
      if constexpr (std::is_same_v<G, UTGroup>) {
        return psp_ut_reduce(cg.base(), b, t, cg.counter());
      } else {
        return unsupported<G>(cfg.solver);
      }
    }
    if (cfg.solver == "pgroup-digits") {
      if constexpr (std::is_same_v<G, PcGroup>) {
        return psp_pgroup_digits(cg, b, t, heisenberg_fp_filtration(cg.base()));
      } else {
        return unsupported<G>(cfg.solver);
      }
    }
    throw Error(Errc::kInvalidArgument, "unknown solver '" + cfg.solver + "'");
  };
}

}  // namespace detail

inline int cmd_attack(const AttackConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_file(cfg.transcript);
  } catch (const Error& e) {
    err << "attack: " << e.what() << "\n";
    return kExitInput;
  }
  try {
    return with_transcript(text, [&](const Platform& platform, const auto& session) -> int {
      using G = std::decay_t<decltype(session.params.group)>;
      const auto rep = break_exchange(session.params, session.transcript,
                                      detail::make_solver<G>(cfg), cfg.budget);
      Json report{{"platform", platform.spec},
                  {"protocol", protocol_name(session.params.protocol)},
                  {"solver", cfg.solver},
                  {"success", rep.success}};
      if (rep.success) {
        report["recovered_exponent"] = to_string(*rep.exponent);
        report["key"] = element_to_json(session.params.group, *rep.key);
        report["key_text"] = describe(session.params.group, *rep.key);
      } else {
        report["reason"] = rep.reason;
      }
      report["ops"] = rep.ops;
      if (cfg.budget) report["budget"] = *cfg.budget;
      if (cfg.out) write_file(*cfg.out, report.dump(2) + "\n");
      report["elapsed_ms"] = std::round(rep.elapsed_ms * 1000) / 1000;
      out << report.dump(2) << "\n";
      if (!rep.success) err << "attack failed: " << rep.reason << "\n";
      return rep.success ? kExitOk : kExitAttackFailed;
    });
  } catch (const Error& e) {
    err << "attack: " << e.what() << "\n";
    return kExitInput;
  }
}

struct BenchConfig {
  std::vector<std::string> suites{"bsgs", "ut-reduce"};
  unsigned cap = 20;  // bsgs ladder runs q = 2^10 .. 2^cap
  std::uint64_t seed = 0;
  std::optional<std::string> out;
};

inline int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
  Json rows = Json::array();
  std::ostringstream table;
  auto line = [&](const std::string& suite, const std::string& param, const std::string& size,
                  double ops, const std::string& scaled, double ms) {
    table << std::left << std::setw(10) << suite << std::setw(12) << param << std::right
          << std::setw(14) << size << std::setw(12) << std::fixed << std::setprecision(1)
          << ops << std::setw(14) << scaled << std::setw(10) << std::setprecision(1) << ms
          << "\n";
  };
  try {
    for (const auto& suite : cfg.suites) {
      if (suite == "bsgs") {
        for (const auto& r : bsgs_ladder(10, cfg.cap, 2, 16, cfg.seed)) {
          const double root = std::sqrt(r.q.get_d());
          std::ostringstream s;
          s << std::fixed << std::setprecision(3) << r.mean_ops / root;
          line("bsgs", "q~2^" + std::to_string(r.bits), to_string(r.q), r.mean_ops, s.str(), r.ms);
          rows.push_back({{"suite", "bsgs"}, {"bits", r.bits}, {"p", to_string(r.p)},
                          {"q", to_string(r.q)}, {"mean_ops", r.mean_ops},
                          {"ops_per_sqrt_q", r.mean_ops / root}});
        }
      } else if (suite == "ut-reduce") {
        for (std::size_t n : {3, 4, 5, 6}) {
          for (unsigned bits : {16u, 64u, 128u, 256u}) {
            const auto pt = ut_reduce_point(n, bits, 8, cfg.seed);
            line("ut-reduce", "n=" + std::to_string(n), "2^" + std::to_string(bits),
                 pt.mean_ops,
                 std::to_string(pt.recovered) + "/" + std::to_string(pt.runs), pt.ms);
            rows.push_back({{"suite", "ut-reduce"}, {"n", n}, {"bound_bits", bits},
                            {"mean_ops", pt.mean_ops}, {"recovered", pt.recovered},
                            {"runs", pt.runs}});
          }
        }
      } else {
        err << "bench: unknown suite '" << suite << "'\n";
        return kExitInput;
      }
    }
  } catch (const Error& e) {
    err << "bench: " << e.what() << "\n";
    return kExitInput;
  }
  if (!rows.empty()) {
    out << std::left << std::setw(10) << "suite" << std::setw(12) << "param" << std::right
        << std::setw(14) << "size" << std::setw(12) << "ops" << std::setw(14) << "ops/sqrt|ok"
        << std::setw(10) << "ms" << "\n";
    out << table.str();
  }
  if (cfg.out) {
    try {
      write_file(*cfg.out, rows.dump(2) + "\n");
    } catch (const Error& e) {
      err << "bench: " << e.what() << "\n";
      return kExitInput;
    }
  }
  return kExitOk;
}

}  // namespace nilkex::cli

#endif  // NILKEX_TOOLS_COMMANDS_HPP_
