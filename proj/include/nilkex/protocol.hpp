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

#ifndef NILKEX_PROTOCOL_HPP_
#define NILKEX_PROTOCOL_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilkex/commutator.hpp"
#include "nilkex/error.hpp"
#include "nilkex/group.hpp"
#include "nilkex/integer.hpp"
#include "nilkex/multilinear.hpp"

namespace nilkex {

// Protocol I: n + 1 parties over a class-n group with public g1..gn.
// Protocol II: n + 1 parties over a class-(n+1) group with public x, g.
enum class ProtocolKind { kI, kII };

inline std::string protocol_name(ProtocolKind k) {
  return k == ProtocolKind::kI ? "I" : "II";
}

inline ProtocolKind parse_protocol(const std::string& s) {
  if (s == "I" || s == "1") return ProtocolKind::kI;
  if (s == "II" || s == "2") return ProtocolKind::kII;
  throw Error(Errc::kInvalidArgument, "unknown protocol '" + s + "'");
}

template <Group G>
struct ProtocolParams {
  using E = typename G::element_type;

  ProtocolKind protocol;
  G group;
  std::size_t arity;      // n; there are n + 1 parties
  std::vector<E> bases;   // I: g1..gn; II: {x, g}

  static ProtocolParams one(G group, std::vector<E> gs) {
    const std::size_t n = gs.size();
    return ProtocolParams{ProtocolKind::kI, std::move(group), n, std::move(gs)};
  }
  static ProtocolParams two(G group, E x, E g, std::size_t n) {
    return ProtocolParams{ProtocolKind::kII, std::move(group), n,
                          {std::move(x), std::move(g)}};
  }

  std::size_t parties() const { return arity + 1; }

  // [g1, ..., gn] or [x, g, ..., g]; the shared key is its power by the
  // product of all private exponents.
  E base_commutator() const {
    if (protocol == ProtocolKind::kI) return left_normed_commutator(group, bases);
    return engel_commutator(group, bases[0], bases[1], arity);
  }
};

struct PrivateKey {
  std::size_t role;  // 1-based
  Integer exponent;
};

template <class E>
struct Message {
  std::size_t role;
  std::string label;
  E element;

  friend bool operator==(const Message& a, const Message& b) {
    return a.role == b.role && a.label == b.label && a.element == b.element;
  }
};

namespace detail {
inline bool message_order(std::size_t ra, const std::string& la,
                          std::size_t rb, const std::string& lb) {
  if (ra != rb) return ra < rb;
  if (la.size() != lb.size()) return la.size() < lb.size();
  return la < lb;
}
inline std::string base_label(std::size_t i) { return "g" + std::to_string(i); }
}  // namespace detail

// Public messages of one run, kept in canonical (role, label) order.
template <class E>
class Transcript {
 public:
  Transcript() = default;
  Transcript(ProtocolKind protocol, std::size_t arity)
      : protocol_(protocol), arity_(arity) {}

  ProtocolKind protocol() const noexcept { return protocol_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Message<E>>& messages() const noexcept { return messages_; }

  void add(Message<E> m) {
    auto it = std::find_if(messages_.begin(), messages_.end(), [&](const auto& x) {
      return !detail::message_order(x.role, x.label, m.role, m.label);
    });
    if (it != messages_.end() && it->role == m.role && it->label == m.label) {
      throw Error(Errc::kInvalidArgument, "duplicate message from role " +
                                              std::to_string(m.role) + " (" +
                                              m.label + ")");
    }
    messages_.insert(it, std::move(m));
  }

  const E* find(std::size_t role, const std::string& label) const {
    for (const auto& m : messages_) {
      if (m.role == role && m.label == label) return &m.element;
    }
    return nullptr;
  }

  const E& require(std::size_t role, const std::string& label) const {
    if (const E* e = find(role, label)) return *e;
    throw Error(Errc::kIncompleteTranscript,
                "missing message (role " + std::to_string(role) + ", label " +
                    label + ")");
  }

  friend bool operator==(const Transcript& a, const Transcript& b) {
    return a.protocol_ == b.protocol_ && a.arity_ == b.arity_ &&
           a.messages_ == b.messages_;
  }

 private:
  ProtocolKind protocol_ = ProtocolKind::kI;
  std::size_t arity_ = 0;
  std::vector<Message<E>> messages_;
};

// (role, label, base index) triples that role j publishes.  Protocol I: role
// 1 sends g1^a1, role j in [2, n] sends g_{j-1}^aj and g_j^aj, role n+1 sends
// g_n^a_{n+1}.  Protocol II: every role sends g^aj.
inline std::vector<std::pair<std::string, std::size_t>> role_schedule(
    ProtocolKind protocol, std::size_t arity, std::size_t role) {
  std::vector<std::pair<std::string, std::size_t>> out;
  if (protocol == ProtocolKind::kII) {
    out.emplace_back("g", 1);
    return out;
  }
  if (role > 1) out.emplace_back(detail::base_label(role - 1), role - 2);
  if (role <= arity) out.emplace_back(detail::base_label(role), role - 1);
  return out;
}

template <class E>
struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  std::optional<E> base;
  std::optional<Integer> base_order;

  bool valid() const { return errors.empty(); }
};

// Orders up to this bound are computed by brute force for trivial-key
// detection.
inline constexpr std::uint64_t kOrderSearchLimit = 1000000;

template <Group G>
ValidationReport<typename G::element_type> validate_params(
    const ProtocolParams<G>& params) {
  ValidationReport<typename G::element_type> rep;
  const std::size_t n = params.arity;
  if (params.protocol == ProtocolKind::kI) {
    if (n < 2) rep.errors.push_back("Protocol I needs n >= 2 (class > 1)");
    if (params.bases.size() != n) rep.errors.push_back("Protocol I needs n bases");
  } else {
    if (n < 1) rep.errors.push_back("Protocol II needs n >= 1");
    if (params.bases.size() != 2) rep.errors.push_back("Protocol II needs x and g");
  }
  if (!rep.valid()) return rep;
  const std::size_t weight = params.protocol == ProtocolKind::kI ? n : n + 1;
  if (!class_at_most(params.group, weight)) {
    rep.errors.push_back("group class exceeds " + std::to_string(weight) +
                         "; keys would not agree");
  }
  auto base = params.base_commutator();
  if (is_identity(params.group, base)) {
    rep.errors.push_back(params.protocol == ProtocolKind::kI
                             ? "witness [g1, ..., gn] is the identity"
                             : "witness [x, g, ..., g] is the identity");
    return rep;
  }
  rep.base = base;
  rep.base_order = element_order(params.group, base, kOrderSearchLimit);
  if (rep.base_order) {
    rep.warnings.push_back("base commutator has order " +
                           to_string(*rep.base_order) +
                           "; the shared key only depends on the key product "
                           "modulo this order");
  }
  return rep;
}

template <Group G>
void require_valid(const ProtocolParams<G>& params) {
  auto rep = validate_params(params);
  if (!rep.valid()) throw Error(Errc::kInvalidParameters, rep.errors.front());
}

template <Group G>
std::vector<Message<typename G::element_type>> publish(
    const ProtocolParams<G>& params, const PrivateKey& key) {
  if (key.role < 1 || key.role > params.parties()) {
    throw Error(Errc::kOutOfRange, "role " + std::to_string(key.role) +
                                       " outside [1, " +
                                       std::to_string(params.parties()) + "]");
  }
  if (sgn(key.exponent) == 0) {
    throw Error(Errc::kInvalidArgument, "private exponents must be nonzero");
  }
  std::vector<Message<typename G::element_type>> out;
  const auto schedule = role_schedule(params.protocol, params.arity, key.role);
  for (const auto& [label, idx] : schedule) {
    const auto& base =
        params.protocol == ProtocolKind::kI ? params.bases[idx] : params.bases[1];
    out.push_back({key.role, label, params.group.power(base, key.exponent)});
  }
  return out;
}

// Key derivation from the transcript and the role's own exponent only.
template <Group G>
typename G::element_type derive_key(
    const ProtocolParams<G>& params, const PrivateKey& key,
    const Transcript<typename G::element_type>& transcript) {
  using E = typename G::element_type;
  const std::size_t n = params.arity;
  const std::size_t j = key.role;
  if (j < 1 || j > n + 1) {
    throw Error(Errc::kOutOfRange, "role " + std::to_string(j) + " out of range");
  }
  if (sgn(key.exponent) == 0) {
    throw Error(Errc::kInvalidArgument, "private exponents must be nonzero");
  }
  std::vector<E> args;
  if (params.protocol == ProtocolKind::kI) {
    // Slot i holds g_i^{a_i} from role i when i < j, else g_i^{a_{i+1}}
    // from role i + 1.
    for (std::size_t i = 1; i <= n; ++i) {
      args.push_back(
          transcript.require(i < j ? i : i + 1, detail::base_label(i)));
    }
    return params.group.power(left_normed_commutator(params.group, args),
                              key.exponent);
  }
  args.push_back(params.group.power(params.bases[0], key.exponent));
  for (std::size_t l = 1; l <= n + 1; ++l) {
    if (l != j) args.push_back(transcript.require(l, "g"));
  }
  return left_normed_commutator(params.group, args);
}

template <class E>
struct ExchangeResult {
  Transcript<E> transcript;
  std::vector<E> derived;  // per role, index 0 is role 1
  E shared;                // power(base, prod a_j)
  Integer key_product;
  bool agreement = false;
  bool trivial_key = false;
  std::optional<Integer> base_order;
  std::vector<std::string> warnings;
};

// Keys uniform in [1, bound] union [-bound, -1].
inline std::vector<PrivateKey> sample_keys(std::size_t parties,
                                           const Integer& bound,
                                           std::uint64_t seed) {
  if (bound < 1) throw Error(Errc::kInvalidArgument, "key bound must be >= 1");
  Rng rng(seed);
  std::vector<PrivateKey> keys;
  for (std::size_t j = 1; j <= parties; ++j) {
    keys.push_back({j, rng.nonzero(bound)});
  }
  return keys;
}

// Honest run of all parties.  Every publish happens before any derivation.
template <Group G>
ExchangeResult<typename G::element_type> run_exchange(
    const ProtocolParams<G>& params, const std::vector<PrivateKey>& keys) {
  using E = typename G::element_type;
  auto rep = validate_params(params);
  if (!rep.valid()) throw Error(Errc::kInvalidParameters, rep.errors.front());
  if (keys.size() != params.parties()) {
    throw Error(Errc::kInvalidArgument,
                "expected " + std::to_string(params.parties()) + " keys");
  }
  Transcript<E> transcript(params.protocol, params.arity);
  for (std::size_t j = 0; j < keys.size(); ++j) {
    if (keys[j].role != j + 1) {
      throw Error(Errc::kInvalidArgument, "keys must be listed by role");
    }
    for (auto& m : publish(params, keys[j])) transcript.add(std::move(m));
  }
  std::vector<E> derived;
  for (const auto& k : keys) derived.push_back(derive_key(params, k, transcript));

  Integer product = 1;
  for (const auto& k : keys) product *= k.exponent;
  E shared = params.group.power(*rep.base, product);
  bool agree = true;
  for (const auto& d : derived) agree = agree && d == shared;

  ExchangeResult<E> out{std::move(transcript), std::move(derived), shared,
                        product, agree, false, rep.base_order, rep.warnings};
  if (rep.base_order && mod_floor(product, *rep.base_order) == 0) {
    out.trivial_key = true;
    out.warnings.push_back(
        "key product is a multiple of the base order; the shared key is trivial");
  }
  return out;
}

template <Group G>
ExchangeResult<typename G::element_type> run_exchange(
    const ProtocolParams<G>& params, const Integer& bound, std::uint64_t seed) {
  return run_exchange(params, sample_keys(params.parties(), bound, seed));
}

}  // namespace nilkex

#endif  // NILKEX_PROTOCOL_HPP_
