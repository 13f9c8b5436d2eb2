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

#ifndef NILKEX_COMMUTATOR_HPP_
#define NILKEX_COMMUTATOR_HPP_

#include <span>
#include <vector>

#include "nilkex/error.hpp"
#include "nilkex/group.hpp"

namespace nilkex {

// [a, b] = a^-1 b^-1 a b.
template <Group G>
typename G::element_type commutator(const G& g,
                                    const typename G::element_type& a,
                                    const typename G::element_type& b) {
  return g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
}

// [g1, ..., gk] = [[g1, ..., g(k-1)], gk].
template <Group G>
typename G::element_type left_normed_commutator(
    const G& g, std::span<const typename G::element_type> gs) {
  if (gs.size() < 2) {
    throw Error(Errc::kInvalidArgument,
                "left-normed commutator needs at least two entries");
  }
  auto acc = commutator(g, gs[0], gs[1]);
  for (std::size_t i = 2; i < gs.size(); ++i) acc = commutator(g, acc, gs[i]);
  return acc;
}

template <Group G>
typename G::element_type left_normed_commutator(
    const G& g, const std::vector<typename G::element_type>& gs) {
  return left_normed_commutator(
      g, std::span<const typename G::element_type>(gs.data(), gs.size()));
}

// [x, y, ..., y] with m copies of y.
template <Group G>
typename G::element_type engel_commutator(const G& g,
                                          const typename G::element_type& x,
                                          const typename G::element_type& y,
                                          std::size_t m) {
  if (m < 1) {
    throw Error(Errc::kInvalidArgument, "Engel commutator needs m >= 1");
  }
  auto acc = x;
  for (std::size_t i = 0; i < m; ++i) acc = commutator(g, acc, y);
  return acc;
}

}  // namespace nilkex

#endif  // NILKEX_COMMUTATOR_HPP_
