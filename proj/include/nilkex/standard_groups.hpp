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

#ifndef NILKEX_STANDARD_GROUPS_HPP_
#define NILKEX_STANDARD_GROUPS_HPP_

#include <utility>
#include <vector>

#include "nilkex/collector.hpp"
#include "nilkex/error.hpp"
#include "nilkex/presentation.hpp"
#include "nilkex/unitriangular.hpp"

namespace nilkex {

// Polycyclic generators of UT(n, R): the elementary matrices I + e_{i,i+k},
// ordered by band k and then by row i.
inline std::vector<std::pair<std::size_t, std::size_t>> ut_generator_positions(
    std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) pos.emplace_back(i, i + k);
  }
  return pos;
}

// Exponents c with m = prod_t (I + e_t)^{c_t} in generator order.  Peeling
// generators band by band leaves the current band untouched by later factors,
// so each coefficient is read off the residual matrix.
inline ExponentVector ut_coordinates(const UTGroup& g, const UTMatrix& m) {
  const auto pos = ut_generator_positions(g.dimension());
  ExponentVector c(pos.size());
  UTMatrix residual = m;
  for (std::size_t t = 0; t < pos.size(); ++t) {
    const auto [i, j] = pos[t];
    c[t] = residual.at(i, j);
    if (sgn(c[t]) != 0) {
      residual =
          g.multiply(g.elementary(i, j, g.ring().reduce(-c[t])), residual);
    }
  }
  return c;
}

inline UTMatrix ut_from_coordinates(const UTGroup& g, const ExponentVector& c) {
  const auto pos = ut_generator_positions(g.dimension());
  if (c.size() != pos.size()) {
    throw Error(Errc::kMismatch, "coordinate vector has wrong length");
  }
  UTMatrix m = g.identity();
  for (std::size_t t = 0; t < pos.size(); ++t) {
    if (sgn(c[t]) != 0) {
      m = g.multiply(m, g.elementary(pos[t].first, pos[t].second, c[t]));
    }
  }
  return m;
}

// Nilpotent presentation of UT(n, R) on the elementary generators.  Relative
// orders are infinite over Z and m over Z/mZ.
inline NilpotentPresentation ut_presentation(const UTGroup& g) {
  const auto pos = ut_generator_positions(g.dimension());
  const std::size_t r = pos.size();
  std::vector<RelativeOrder> orders;
  for (std::size_t t = 0; t < r; ++t) {
    orders.push_back(g.ring().is_modular()
                         ? RelativeOrder::finite(g.ring().modulus())
                         : RelativeOrder::infinite());
  }
  NilpotentPresentation p(std::move(orders));
  std::vector<UTMatrix> x, xinv;
  for (const auto& [i, j] : pos) {
    x.push_back(g.elementary(i, j, 1));
    xinv.push_back(g.inverse(x.back()));
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      // tail = x_i^-1 (x_j^-1 x_i x_j), which lies above x_i.
      auto tail_of = [&](const UTMatrix& conj) {
        ExponentVector c = ut_coordinates(g, g.multiply(xinv[i], conj));
        return c;
      };
      p.set_conjugate(j, i, tail_of(g.multiply(g.multiply(xinv[j], x[i]), x[j])));
      p.set_conjugate_inverse(j, i,
                              tail_of(g.multiply(g.multiply(x[j], x[i]), xinv[j])));
    }
  }
  return p;
}

// The Heisenberg group UT(3, Z): x1 = I + e12, x2 = I + e23, x3 = I + e13,
// with x1^-1 x2 x1 = x2 x3^-1 (equivalently x2^-1 x1 x2 = x1 x3).
inline NilpotentPresentation heisenberg_presentation() {
  return ut_presentation(UTGroup(3, Ring::integers()));
}

// The Heisenberg group over F_p, of order p^3.
inline NilpotentPresentation heisenberg_fp_presentation(const Integer& p) {
  return ut_presentation(UTGroup(3, Ring::prime_field(p)));
}

// Cyclic group of order s on one generator.
inline NilpotentPresentation cyclic_presentation(const Integer& s) {
  return NilpotentPresentation({RelativeOrder::finite(s)});
}

// Image of a normal form of the Heisenberg presentation (over Z or F_p) under
// x1 -> I + e12, x2 -> I + e23, x3 -> I + e13.
inline UTMatrix heisenberg_hom(const PcGroup& g, const ExponentVector& v) {
  const auto& p = g.presentation();
  std::optional<UTGroup> target;
  if (p.generator_count() == 3) {
    if (p == heisenberg_presentation()) {
      target.emplace(3, Ring::integers());
    } else if (p.all_finite() && is_probable_prime(p.relative_order(0).value()) &&
               p == heisenberg_fp_presentation(p.relative_order(0).value())) {
      target.emplace(3, Ring::prime_field(p.relative_order(0).value()));
    }
  }
  if (!target) {
    throw Error(Errc::kMismatch, "not a shipped Heisenberg presentation");
  }
  if (!g.is_normal_form(v)) {
    throw Error(Errc::kMismatch, "not a normal form: " + v.to_string());
  }
  return ut_from_coordinates(*target, v);
}

}  // namespace nilkex

#endif  // NILKEX_STANDARD_GROUPS_HPP_
