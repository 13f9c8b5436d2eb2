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

#ifndef NILKEX_CRYPTANALYSIS_PSP_HPP_
#define NILKEX_CRYPTANALYSIS_PSP_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

#include "nilkex/error.hpp"
#include "nilkex/group.hpp"
#include "nilkex/integer.hpp"

namespace nilkex {

// Power search: find a with g^a = h.  Solvers take any Group, so wrapping
// the platform in a CountingGroup meters their cost.

// Scans 0, 1, -1, 2, -2, ... up to |a| = bound and returns the first hit.
template <Group G>
std::optional<Integer> psp_bruteforce(const G& group,
                                      const typename G::element_type& g,
                                      const typename G::element_type& h,
                                      std::uint64_t bound) {
  auto pos = group.identity();
  if (pos == h) return Integer(0);
  auto neg = pos;
  const auto g_inv = group.inverse(g);
  for (std::uint64_t k = 1; k <= bound; ++k) {
    pos = group.multiply(pos, g);
    if (pos == h) return Integer(std::to_string(k));
    neg = group.multiply(neg, g_inv);
    if (neg == h) return -Integer(std::to_string(k));
  }
  return std::nullopt;
}

// Baby-step giant-step over an order bound.  At most 2 * ceil(sqrt(order))
// multiplications; the single inversion is free under the cost model.
template <Group G>
Integer psp_bsgs(const G& group, const typename G::element_type& g,
                 const typename G::element_type& h, const Integer& order) {
  if (order < 1) throw Error(Errc::kInvalidArgument, "order must be positive");
  const Integer m_big = isqrt_ceil(order);
  if (!m_big.fits_ulong_p() || m_big > Integer(1) << 40) {
    throw Error(Errc::kUnsupported,
                "baby-step table of " + to_string(m_big) + " entries");
  }
  const unsigned long m = m_big.get_ui();

  std::unordered_map<std::string, unsigned long> table;
  table.reserve(std::min(m, 1UL << 20));
  auto e = group.identity();
  table.emplace(group.encode(e), 0);
  for (unsigned long j = 1; j < m; ++j) {
    e = group.multiply(e, g);
    table.emplace(group.encode(e), j);
  }
  const auto giant = group.inverse(group.multiply(e, g));

  auto gamma = h;
  for (unsigned long i = 0; i < m; ++i) {
    if (auto it = table.find(group.encode(gamma)); it != table.end()) {
      return mod_floor(Integer(i) * m + it->second, order);
    }
    if (i + 1 < m) gamma = group.multiply(gamma, giant);
  }
  throw Error(Errc::kNoSolution, "target is not in the cyclic subgroup");
}

}  // namespace nilkex

#endif  // NILKEX_CRYPTANALYSIS_PSP_HPP_
