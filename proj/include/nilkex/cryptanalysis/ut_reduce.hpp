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

#ifndef NILKEX_CRYPTANALYSIS_UT_REDUCE_HPP_
#define NILKEX_CRYPTANALYSIS_UT_REDUCE_HPP_

#include "nilkex/error.hpp"
#include "nilkex/group.hpp"
#include "nilkex/integer.hpp"
#include "nilkex/unitriangular.hpp"

namespace nilkex {

namespace detail {

// Solves g^a = h with every multiplication charged to `group`.  Over Z the
// first nonzero band of g - I determines a by exact division.  Over Z/mZ it
// determines a modulo some M; g^M then vanishes on that band and the rest of
// a is found one band higher.
inline Integer ut_reduce_step(const CountingGroup<UTGroup>& group,
                              const UTMatrix& g, const UTMatrix& h) {
  const std::size_t n = g.dimension();
  const Ring& ring = g.ring();
  const auto band = g.minimal_band();
  if (!band) {
    if (h.is_identity()) return 0;
    throw Error(Errc::kNotAPower, "g is the identity but h is not");
  }
  const std::size_t k = *band;
  for (std::size_t d = 1; d < k; ++d) {
    for (std::size_t i = 0; i + d < n; ++i) {
      if (sgn(h.at(i, i + d)) != 0) {
        throw Error(Errc::kNotAPower,
                    "h is nonzero on band " + std::to_string(d) +
                        " where every power of g vanishes");
      }
    }
  }

  if (!ring.is_modular()) {
    std::optional<Integer> a;
    for (std::size_t i = 0; i + k < n; ++i) {
      const Integer& b = g.at(i, i + k);
      const Integer& c = h.at(i, i + k);
      if (sgn(b) == 0) {
        if (sgn(c) != 0) throw Error(Errc::kNotAPower, "entry mismatch on band");
        continue;
      }
      if (!mpz_divisible_p(c.get_mpz_t(), b.get_mpz_t())) {
        throw Error(Errc::kNotAPower, "band entry is not a multiple");
      }
      Integer q = c / b;
      if (a && *a != q) throw Error(Errc::kNotAPower, "band quotients disagree");
      a = q;
    }
    return *a;
  }

  const Integer& m = ring.modulus();
  Integer r = 0;
  Integer mod = 1;
  for (std::size_t i = 0; i + k < n; ++i) {
    Integer ri, period;
    if (!solve_linear_congruence(g.at(i, i + k), h.at(i, i + k), m, ri, period) ||
        !intersect_residue_classes(r, mod, ri, period)) {
      throw Error(Errc::kNotAPower, "band congruences have no common solution");
    }
  }
  const UTMatrix g_next = group.power(g, mod);
  if (g_next.is_identity()) return r;
  const UTMatrix h_next = group.multiply(group.power(g, -r), h);
  return r + mod * ut_reduce_step(group, g_next, h_next);
}

}  // namespace detail

// Power search in UT(n, R) through the additive group of R.  Returns the
// exact exponent over Z and the least non-negative one modulo ord(g) over
// Z/mZ; the answer is always checked by recomputing g^a.
inline Integer psp_ut_reduce(const UTGroup& group, const UTMatrix& g,
                             const UTMatrix& h, OpCounter& counter) {
  const CountingGroup<UTGroup> counted(group, counter);
  Integer a = detail::ut_reduce_step(counted, g, h);
  if (!(counted.power(g, a) == h)) {
    throw Error(Errc::kNotAPower, "h is not a power of g");
  }
  if (group.ring().is_modular()) {
    if (const auto order = order_from_period(group, g)) {
      a = mod_floor(a, *order);
    }
  }
  return a;
}

inline Integer psp_ut_reduce(const UTGroup& group, const UTMatrix& g,
                             const UTMatrix& h) {
  OpCounter counter;
  return psp_ut_reduce(group, g, h, counter);
}

}  // namespace nilkex

#endif  // NILKEX_CRYPTANALYSIS_UT_REDUCE_HPP_
