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

#ifndef NILKEX_MULTILINEAR_HPP_
#define NILKEX_MULTILINEAR_HPP_

#include <optional>
#include <span>
#include <vector>

#include "nilkex/collector.hpp"
#include "nilkex/commutator.hpp"
#include "nilkex/consistency.hpp"
#include "nilkex/cyclic.hpp"
#include "nilkex/error.hpp"
#include "nilkex/group.hpp"
#include "nilkex/unitriangular.hpp"

namespace nilkex {

// Nilpotency class bounds per platform.
inline bool class_at_most(const PcGroup& g, std::size_t c) {
  return verify_class_at_most(g, c);
}
inline bool class_at_most(const UTGroup& g, std::size_t c) {
  return g.dimension() - 1 <= c;
}
inline bool class_at_most(const UnitSubgroup&, std::size_t c) { return c >= 1; }
template <Group A, Group B>
bool class_at_most(const ProductGroup<A, B>& g, std::size_t c) {
  return class_at_most(g.first(), c) && class_at_most(g.second(), c);
}
template <Group G>
bool class_at_most(const CountingGroup<G>& g, std::size_t c) {
  return class_at_most(g.base(), c);
}

enum class MapKind { kPlain, kEngel };

// e(g1..gn) = [g1, ..., gn] on a group of class at most n, or the anchored
// e'(g1..gn) = [x, g1, ..., gn] on a group of class at most n + 1.  Each map
// carries a witness tuple whose value must be nontrivial.
template <Group G>
struct MapDescriptor {
  using E = typename G::element_type;

  MapKind kind = MapKind::kPlain;
  G group;
  std::size_t arity = 0;
  std::optional<E> anchor;  // x, engel kind only
  std::vector<E> witness;   // arguments of a nontrivial evaluation
};

template <Group G>
typename G::element_type eval_map(const MapDescriptor<G>& d,
                                  std::span<const typename G::element_type> gs) {
  if (gs.size() != d.arity) {
    throw Error(Errc::kInvalidArgument,
                "map of arity " + std::to_string(d.arity) + " given " +
                    std::to_string(gs.size()) + " arguments");
  }
  std::vector<typename G::element_type> args;
  if (d.kind == MapKind::kEngel) args.push_back(*d.anchor);
  args.insert(args.end(), gs.begin(), gs.end());
  if (args.size() == 1) return args[0];
  return left_normed_commutator(d.group, args);
}

template <Group G>
typename G::element_type eval_map(
    const MapDescriptor<G>& d,
    const std::vector<typename G::element_type>& gs) {
  return eval_map(d, std::span<const typename G::element_type>(gs));
}

template <Group G>
bool check_nondegenerate(const MapDescriptor<G>& d) {
  return !is_identity(d.group, eval_map(d, d.witness));
}

// Throws invalid-parameters unless the descriptor's invariants hold.
template <Group G>
void validate_map(const MapDescriptor<G>& d) {
  if (d.arity < 1 || (d.kind == MapKind::kPlain && d.arity < 2)) {
    throw Error(Errc::kInvalidParameters, "map arity too small");
  }
  if ((d.kind == MapKind::kEngel) != d.anchor.has_value()) {
    throw Error(Errc::kInvalidParameters,
                "an anchor is required exactly for the anchored map");
  }
  const std::size_t weight = d.arity + (d.kind == MapKind::kEngel ? 1 : 0);
  if (!class_at_most(d.group, weight)) {
    throw Error(Errc::kInvalidParameters,
                "group class exceeds " + std::to_string(weight) +
                    "; the commutator map is not multilinear");
  }
  if (d.witness.size() != d.arity) {
    throw Error(Errc::kInvalidParameters, "witness has wrong length");
  }
  if (!check_nondegenerate(d)) {
    throw Error(Errc::kInvalidParameters, "witness evaluates to the identity");
  }
}

template <Group G>
MapDescriptor<G> make_plain_map(G group,
                                std::vector<typename G::element_type> witness) {
  MapDescriptor<G> d{MapKind::kPlain, std::move(group), witness.size(),
                     std::nullopt, std::move(witness)};
  validate_map(d);
  return d;
}

// e' with witness (g, ..., g), i.e. [x, g, ..., g] != 1.
template <Group G>
MapDescriptor<G> make_engel_map(G group, typename G::element_type anchor,
                                typename G::element_type g, std::size_t arity) {
  MapDescriptor<G> d{MapKind::kEngel, std::move(group), arity,
                     std::move(anchor),
                     std::vector<typename G::element_type>(arity, g)};
  validate_map(d);
  return d;
}

// Compares e(g1^a1, ..., gn^an) with e(g1, ..., gn)^(a1 ... an).  For the
// anchored map an extra leading exponent, when given, raises the anchor too.
template <Group G>
bool check_multilinearity(const MapDescriptor<G>& d,
                          std::span<const typename G::element_type> gs,
                          std::span<const Integer> as) {
  const bool anchored = as.size() == d.arity + 1;
  if (as.size() != d.arity && !(anchored && d.kind == MapKind::kEngel)) {
    throw Error(Errc::kInvalidArgument, "exponent count does not match arity");
  }
  Integer prod = 1;
  for (const auto& a : as) {
    if (sgn(a) == 0) {
      throw Error(Errc::kInvalidArgument, "multilinearity exponents must be nonzero");
    }
    prod *= a;
  }
  MapDescriptor<G> raised = d;
  std::size_t off = 0;
  if (anchored) {
    raised.anchor = d.group.power(*d.anchor, as[0]);
    off = 1;
  }
  std::vector<typename G::element_type> powered;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    powered.push_back(d.group.power(gs[i], as[i + off]));
  }
  return eval_map(raised, powered) == d.group.power(eval_map(d, gs), prod);
}

template <Group G>
bool check_multilinearity(const MapDescriptor<G>& d,
                          const std::vector<typename G::element_type>& gs,
                          const std::vector<Integer>& as) {
  return check_multilinearity(d, std::span<const typename G::element_type>(gs),
                              std::span<const Integer>(as));
}

}  // namespace nilkex

#endif  // NILKEX_MULTILINEAR_HPP_
