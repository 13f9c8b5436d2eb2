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

#ifndef NILKEX_CRYPTANALYSIS_ATTACK_HPP_
#define NILKEX_CRYPTANALYSIS_ATTACK_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilkex/commutator.hpp"
#include "nilkex/error.hpp"
#include "nilkex/group.hpp"
#include "nilkex/integer.hpp"
#include "nilkex/protocol.hpp"

namespace nilkex {

template <class E>
struct AttackReport {
  bool success = false;
  std::string reason;
  std::optional<Integer> exponent;  // recovered a_1
  std::optional<E> key;
  std::uint64_t ops = 0;
  double elapsed_ms = 0;
};

// Passive eavesdropper: solve the power search on role 1's message for a_1,
// then repeat role 1's key computation from public data.  The solver is
// called as solve(counted_group, base, target) and signals failure by
// throwing.  Missing messages are not an attack failure and propagate.
template <Group G, class Solver>
AttackReport<typename G::element_type> break_exchange(
    const ProtocolParams<G>& params,
    const Transcript<typename G::element_type>& transcript, Solver&& solve,
    std::optional<std::uint64_t> budget = std::nullopt) {
  using E = typename G::element_type;
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = params.arity;
  const bool one = params.protocol == ProtocolKind::kI;

  const E& base = one ? params.bases[0] : params.bases[1];
  const E& target = transcript.require(1, one ? "g1" : "g");
  std::vector<E> slots;
  if (one) {
    for (std::size_t i = 1; i <= n; ++i) {
      slots.push_back(transcript.require(i + 1, detail::base_label(i)));
    }
  } else {
    for (std::size_t l = 2; l <= n + 1; ++l) slots.push_back(transcript.require(l, "g"));
  }

  AttackReport<E> rep;
  OpCounter counter(budget);
  const CountingGroup<G> group(params.group, counter);
  try {
    const Integer a = solve(group, base, target);
    if (!(group.power(base, a) == target)) {
      throw Error(Errc::kNoSolution, "solver answer fails verification");
    }
    rep.exponent = a;
    if (one) {
      rep.key = group.power(left_normed_commutator(group, slots), a);
    } else {
      slots.insert(slots.begin(), group.power(params.bases[0], a));
      rep.key = left_normed_commutator(group, slots);
    }
    rep.success = true;
  } catch (const Error& e) {
    if (e.code() == Errc::kIncompleteTranscript) throw;
    rep.reason = e.what();
    rep.exponent.reset();
    rep.key.reset();
  }
  rep.ops = counter.count();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace nilkex

#endif  // NILKEX_CRYPTANALYSIS_ATTACK_HPP_
