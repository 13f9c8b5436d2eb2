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

// Named platforms and the JSON transcript format used by the command line.

#ifndef NILKEX_TOOLS_PLATFORM_HPP_
#define NILKEX_TOOLS_PLATFORM_HPP_

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "nilkex/nilkex.hpp"

namespace nilkex::cli {

using Json = nlohmann::ordered_json;
using SafePrimeGroup = ProductGroup<UTGroup, UnitSubgroup>;
using AnyGroup = std::variant<PcGroup, UTGroup, SafePrimeGroup>;

enum class PlatformKind { kPresentation, kMatrix, kSafePrime };

struct Platform {
  std::string spec;
  PlatformKind kind;
  AnyGroup group;
  Integer safe_prime;  // kSafePrime only
};

inline std::string fixture_dir() {
  if (const char* env = std::getenv("NILKEX_FIXTURES"); env && *env) return env;
#ifdef NILKEX_FIXTURE_DIR
  return NILKEX_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

// UT(3, F_3) x <w^2>: g1 = (I + e12, w^2) has order 3q, so recovering a_1
// needs a discrete log in the order-q subgroup mod p.
inline SafePrimeGroup safe_prime_group(const Integer& p) {
  const auto setup = safe_prime_setup(p);
  return SafePrimeGroup(UTGroup(3, Ring::prime_field(3)), setup.subgroup);
}

namespace detail {
inline Integer spec_integer(const std::string& text, const std::string& spec) {
  try {
    return parse_integer(text);
  } catch (const Error&) {
    throw Error(Errc::kInvalidArgument, "bad number in platform '" + spec + "'");
  }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

inline Ring spec_ring(const std::vector<std::string>& parts, std::size_t at,
                      const std::string& spec) {
  if (at >= parts.size()) throw Error(Errc::kInvalidArgument, "missing ring in '" + spec + "'");
  const std::string& r = parts[at];
  if (r == "z" && parts.size() == at + 1) return Ring::integers();
  if (r == "zmod" && parts.size() == at + 2) {
    return Ring::integers_mod(spec_integer(parts[at + 1], spec));
  }
  if (r == "fp" && parts.size() == at + 2) {
    return Ring::prime_field(spec_integer(parts[at + 1], spec));
  }
  throw Error(Errc::kInvalidArgument, "unknown ring in '" + spec + "'");
}
}  // namespace detail

// heisenberg | heisenberg-fp:<p> | ut3z | ut4z | ut3zmod:<m> |
// ut:<n>:z | ut:<n>:zmod:<m> | ut:<n>:fp:<p> | safeprime:<p> | <file>.npres
inline Platform resolve_platform(const std::string& spec) {
  const auto parts = detail::split(spec, ':');
  const std::string head = parts.empty() ? "" : parts[0];
  auto pc = [&](const NilpotentPresentation& p) {
    return Platform{spec, PlatformKind::kPresentation, PcGroup(p), 0};
  };
  auto ut = [&](std::size_t n, Ring r) {
    return Platform{spec, PlatformKind::kMatrix, UTGroup(n, std::move(r)), 0};
  };
  if (spec == "heisenberg") {
    return pc(parse_presentation(
        read_file((std::filesystem::path(fixture_dir()) / "heisenberg.npres").string())));
  }
  if (head == "heisenberg-fp" && parts.size() == 2) {
    return pc(heisenberg_fp_presentation(detail::spec_integer(parts[1], spec)));
  }
  if (spec == "ut3z") return ut(3, Ring::integers());
  if (spec == "ut4z") return ut(4, Ring::integers());
  if (head == "ut3zmod" && parts.size() == 2) {
    return ut(3, Ring::integers_mod(detail::spec_integer(parts[1], spec)));
  }
  if (head == "ut" && parts.size() >= 3) {
    const Integer n = detail::spec_integer(parts[1], spec);
    if (n < 2 || n > 64) throw Error(Errc::kInvalidArgument, "dimension out of range in '" + spec + "'");
    return ut(n.get_ui(), detail::spec_ring(parts, 2, spec));
  }
  if (head == "safeprime" && parts.size() == 2) {
    const Integer p = detail::spec_integer(parts[1], spec);
    return Platform{spec, PlatformKind::kSafePrime, safe_prime_group(p), p};
  }
  if (spec.size() > 6 && spec.ends_with(".npres")) {
    return pc(parse_presentation(read_file(spec)));
  }
  throw Error(Errc::kInvalidArgument, "unknown platform '" + spec + "'");
}

// Element codecs: exponent vectors as arrays of decimal strings, matrices
// in the matrix text format, safe-prime pairs as {"ut", "unit"}.
inline Json element_to_json(const PcGroup&, const ExponentVector& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) a.push_back(to_string(v[i]));
  return a;
}
inline Json element_to_json(const UTGroup& g, const UTMatrix& m) {
  return g.encode(m);
}
inline Json element_to_json(const SafePrimeGroup& g,
                            const SafePrimeGroup::element_type& e) {
  return Json{{"ut", g.first().encode(e.first)},
              {"unit", g.second().encode(e.second)}};
}

inline ExponentVector element_from_json(const PcGroup& g, const Json& j) {
  if (!j.is_array() || j.size() != g.rank()) {
    throw Error(Errc::kParse, "expected an exponent vector of length " +
                                  std::to_string(g.rank()));
  }
  std::vector<Integer> v;
  for (const auto& x : j) {
    if (!x.is_string()) throw Error(Errc::kParse, "exponents are decimal strings");
    v.push_back(parse_integer(x.get<std::string>()));
  }
  ExponentVector e(std::move(v));
  if (!g.is_normal_form(e)) throw Error(Errc::kParse, "not a normal form: " + e.to_string());
  return e;
}
inline UTMatrix element_from_json(const UTGroup& g, const Json& j) {
  if (!j.is_string()) throw Error(Errc::kParse, "expected matrix text");
  return g.decode(j.get<std::string>());
}
inline SafePrimeGroup::element_type element_from_json(const SafePrimeGroup& g,
                                                      const Json& j) {
  if (!j.is_object() || !j.contains("ut") || !j.contains("unit") ||
      !j["ut"].is_string() || !j["unit"].is_string()) {
    throw Error(Errc::kParse, "expected {\"ut\", \"unit\"}");
  }
  return {g.first().decode(j["ut"].get<std::string>()),
          g.second().decode(j["unit"].get<std::string>())};
}

// Compact matrix notation such as I+30e13 or I-e12+2e23.
inline std::string sparse_matrix(const UTMatrix& m) {
  std::string out = "I";
  const std::size_t n = m.dimension();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) {
      const Integer& v = m.at(i, i + k);
      if (sgn(v) == 0) continue;
      out += sgn(v) < 0 ? "-" : "+";
      const Integer a = abs(v);
      if (a != 1) out += to_string(a);
      out += "e" + std::to_string(i + 1) + std::to_string(i + k + 1);
    }
  }
  return out;
}

// Human-readable key: matrices in compact form, Heisenberg normal forms with
// their matrix image.
inline std::string describe(const PcGroup& g, const ExponentVector& v) {
  try {
    return v.to_string() + " = " + sparse_matrix(heisenberg_hom(g, v));
  } catch (const Error&) {
    return v.to_string();
  }
}
inline std::string describe(const UTGroup&, const UTMatrix& m) {
  return sparse_matrix(m);
}
inline std::string describe(const SafePrimeGroup& g,
                            const SafePrimeGroup::element_type& e) {
  return "(" + sparse_matrix(e.first) + ", " + g.second().encode(e.second) + ")";
}

// Default bases: Protocol I uses n = class elements with a nonvanishing
// left-normed commutator; Protocol II uses n = class - 1.

inline ProtocolParams<UTGroup> default_params(const UTGroup& g, ProtocolKind protocol) {
  const std::size_t n = g.dimension();
  if (n < 3) throw Error(Errc::kInvalidParameters, "UT(2, R) is abelian");
  if (protocol == ProtocolKind::kI) {
    std::vector<UTMatrix> bases;
    for (std::size_t i = 0; i + 1 < n; ++i) bases.push_back(g.elementary(i, i + 1));
    return ProtocolParams<UTGroup>::one(g, bases);
  }
  return ProtocolParams<UTGroup>::two(g, g.elementary(0, 1), g.superdiagonal(), n - 2);
}

inline ProtocolParams<SafePrimeGroup> default_params(const SafePrimeGroup& g,
                                                     ProtocolKind protocol) {
  const UTGroup& u = g.first();
  const Integer w2 = g.second().generator();
  SafePrimeGroup::element_type a{u.elementary(0, 1), w2};
  SafePrimeGroup::element_type b{u.elementary(1, 2), Integer(1)};
  if (protocol == ProtocolKind::kI) return ProtocolParams<SafePrimeGroup>::one(g, {a, b});
  return ProtocolParams<SafePrimeGroup>::two(g, b, a, 1);
}

inline ProtocolParams<PcGroup> default_params(const PcGroup& g, ProtocolKind protocol) {
  const auto cls = nilpotency_class_bound(g);
  if (!cls || *cls < 2) {
    throw Error(Errc::kInvalidParameters, "presentation is abelian or of unknown class");
  }
  std::vector<ExponentVector> cand;
  for (std::size_t i = 0; i < g.rank(); ++i) cand.push_back(g.generator(i));
  for (std::size_t i = 0; i < g.rank(); ++i) {
    for (std::size_t j = i + 1; j < g.rank(); ++j) {
      cand.push_back(g.multiply(g.generator(i), g.generator(j)));
    }
  }
  if (protocol == ProtocolKind::kII) {
    for (const auto& x : cand) {
      for (const auto& y : cand) {
        if (!is_identity(g, engel_commutator(g, x, y, *cls - 1))) {
          return ProtocolParams<PcGroup>::two(g, x, y, *cls - 1);
        }
      }
    }
    throw Error(Errc::kInvalidParameters, "no Engel witness among small elements");
  }
  // Depth-first over candidate tuples of length class.
  std::vector<ExponentVector> tuple;
  std::function<bool()> search = [&]() {
    if (tuple.size() == *cls) return !is_identity(g, left_normed_commutator(g, tuple));
    for (const auto& c : cand) {
      tuple.push_back(c);
      if (tuple.size() < 2 || !is_identity(g, left_normed_commutator(g, tuple))) {
        if (search()) return true;
      }
      tuple.pop_back();
    }
    return false;
  };
  if (!search()) throw Error(Errc::kInvalidParameters, "no commutator witness among small elements");
  return ProtocolParams<PcGroup>::one(g, tuple);
}

inline Json platform_descriptor(const Platform& p) {
  Json d{{"spec", p.spec}};
  switch (p.kind) {
    case PlatformKind::kPresentation:
      d["kind"] = "presentation";
      d["presentation"] = emit_presentation(std::get<PcGroup>(p.group).presentation());
      break;
    case PlatformKind::kMatrix:
      d["kind"] = "matrix";
      d["header"] = ut_header(std::get<UTGroup>(p.group));
      break;
    case PlatformKind::kSafePrime:
      d["kind"] = "safeprime";
      d["p"] = to_string(p.safe_prime);
      break;
  }
  return d;
}

inline Platform platform_from_descriptor(const Json& d) {
  const std::string spec = d.at("spec").get<std::string>();
  const std::string kind = d.at("kind").get<std::string>();
  if (kind == "presentation") {
    return Platform{spec, PlatformKind::kPresentation,
                    PcGroup(parse_presentation(d.at("presentation").get<std::string>())), 0};
  }
  if (kind == "matrix") {
    return Platform{spec, PlatformKind::kMatrix,
                    parse_ut_header(d.at("header").get<std::string>()), 0};
  }
  if (kind == "safeprime") {
    const Integer p = parse_integer(d.at("p").get<std::string>());
    return Platform{spec, PlatformKind::kSafePrime, safe_prime_group(p), p};
  }
  throw Error(Errc::kParse, "unknown platform kind '" + kind + "'");
}

inline constexpr const char* kTranscriptFormat = "nilkex-transcript/1";

// Only public data is written: the platform, the public bases and the
// messages.  Private exponents never reach this function.
template <Group G>
Json transcript_to_json(const Platform& platform, const ProtocolParams<G>& params,
                        const Transcript<typename G::element_type>& t) {
  Json bases = Json::array();
  for (const auto& b : params.bases) bases.push_back(element_to_json(params.group, b));
  Json messages = Json::array();
  for (const auto& m : t.messages()) {
    messages.push_back({{"role", m.role},
                        {"label", m.label},
                        {"element", element_to_json(params.group, m.element)}});
  }
  return Json{{"format", kTranscriptFormat},
              {"protocol", protocol_name(params.protocol)},
              {"arity", params.arity},
              {"platform", platform_descriptor(platform)},
              {"params", {{"bases", bases}}},
              {"messages", messages}};
}

template <Group G>
struct Session {
  ProtocolParams<G> params;
  Transcript<typename G::element_type> transcript;
};

// Decodes params and messages against a known group.  Structural problems
// raise kParse; missing messages are left for derive_key / break_exchange.
template <Group G>
Session<G> session_from_json(const G& group, const Json& j) {
  using E = typename G::element_type;
  const ProtocolKind protocol = parse_protocol(j.at("protocol").get<std::string>());
  const std::size_t arity = j.at("arity").get<std::size_t>();
  std::vector<E> bases;
  for (const auto& b : j.at("params").at("bases")) bases.push_back(element_from_json(group, b));
  ProtocolParams<G> params{protocol, group, arity, std::move(bases)};
  const auto rep = validate_params(params);
  if (!rep.valid()) throw Error(Errc::kParse, "transcript parameters: " + rep.errors.front());
  Transcript<E> t(protocol, arity);
  for (const auto& m : j.at("messages")) {
    const std::size_t role = m.at("role").get<std::size_t>();
    const std::string label = m.at("label").get<std::string>();
    bool scheduled = false;
    if (role >= 1 && role <= arity + 1) {
      for (const auto& [l, idx] : role_schedule(protocol, arity, role)) scheduled |= l == label;
    }
    if (!scheduled) {
      throw Error(Errc::kParse, "unexpected message (role " + std::to_string(role) +
                                    ", label " + label + ")");
    }
    t.add({role, label, element_from_json(group, m.at("element"))});
  }
  return {std::move(params), std::move(t)};
}

// Parses the envelope and hands the decoded session to f.
template <class F>
auto with_transcript(const std::string& text, F&& f) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::kParse, std::string("transcript is not JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("format", "") != kTranscriptFormat) {
      throw Error(Errc::kParse, "not a nilkex transcript");
    }
    const Platform platform = platform_from_descriptor(j.at("platform"));
    return std::visit(
        [&](const auto& group) {
          return f(platform, session_from_json(group, j));
        },
        platform.group);
  } catch (const Json::exception& e) {
    throw Error(Errc::kParse, std::string("malformed transcript: ") + e.what());
  }
}

}  // namespace nilkex::cli

#endif  // NILKEX_TOOLS_PLATFORM_HPP_
