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

#ifndef NILKEX_CONSISTENCY_HPP_
#define NILKEX_CONSISTENCY_HPP_

#include <string>
#include <vector>

#include "nilkex/collector.hpp"
#include "nilkex/commutator.hpp"

namespace nilkex {

struct ConsistencyReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool consistent() const { return failures.empty(); }
};

// Evaluates the overlap identities of a nilpotent presentation by collection:
//   x_k (x_j x_i) = (x_k x_j) x_i                       k > j > i
//   (x_j^s_j) x_i = x_j^(s_j - 1) (x_j x_i)             j > i, s_j finite
//   x_j (x_i^s_i) = (x_j x_i) x_i^(s_i - 1)             j > i, s_i finite
//   x_i (x_i^s_i) = (x_i^s_i) x_i                       s_i finite
//   x_j (x_j^-1 x_i x_j) x_j^-1 = x_i and the mirrored identity, j < i
// Passing them is taken as consistency; the test is not claimed to be a
// complete decision procedure.
inline ConsistencyReport check_consistency(const PcGroup& g) {
  const auto& p = g.presentation();
  const std::size_t n = g.rank();
  ConsistencyReport rep;
  auto x = [&](std::size_t i) { return g.generator(i); };
  auto nm = [](std::size_t i) { return NilpotentPresentation::name(i); };
  auto expect = [&](const ExponentVector& lhs, const ExponentVector& rhs,
                    const std::string& what) {
    ++rep.checked;
    if (!(lhs == rhs)) {
      rep.failures.push_back(what + ": " + lhs.to_string() + " vs " +
                             rhs.to_string());
    }
  };
  // x_i^(s_i) through its power relation, and x_i^(s_i - 1) as a normal form.
  auto full_power = [&](std::size_t i) { return p.power_rhs(i); };
  auto almost_power = [&](std::size_t i) {
    return g.collect({{i, p.relative_order(i).value() - 1}});
  };

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        expect(g.multiply(x(k), g.multiply(x(j), x(i))),
               g.multiply(g.multiply(x(k), x(j)), x(i)),
               nm(k) + "(" + nm(j) + nm(i) + ") = (" + nm(k) + nm(j) + ")" +
                   nm(i));
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (p.relative_order(j).is_finite()) {
        expect(g.multiply(full_power(j), x(i)),
               g.multiply(almost_power(j), g.multiply(x(j), x(i))),
               "(" + nm(j) + "^s)" + nm(i) + " = " + nm(j) + "^(s-1)(" +
                   nm(j) + nm(i) + ")");
      }
      if (p.relative_order(i).is_finite()) {
        expect(g.multiply(x(j), full_power(i)),
               g.multiply(g.multiply(x(j), x(i)), almost_power(i)),
               nm(j) + "(" + nm(i) + "^s) = (" + nm(j) + nm(i) + ")" + nm(i) +
                   "^(s-1)");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.relative_order(i).is_finite()) continue;
    expect(g.multiply(x(i), full_power(i)), g.multiply(full_power(i), x(i)),
           nm(i) + "(" + nm(i) + "^s) = (" + nm(i) + "^s)" + nm(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const ExponentVector fwd = g.multiply(x(i), p.conjugate_rhs(j, i));
      const ExponentVector bwd =
          g.multiply(x(i), p.conjugate_inverse_rhs(j, i));
      Word w{{j, Integer(1)}};
      for (std::size_t m = 0; m < n; ++m) {
        if (sgn(fwd[m]) != 0) w.push_back({m, fwd[m]});
      }
      w.push_back({j, Integer(-1)});
      expect(g.collect(w), x(i),
             nm(j) + " (" + nm(j) + "^-1 " + nm(i) + " " + nm(j) + ") " +
                 nm(j) + "^-1 = " + nm(i));
      Word v{{j, Integer(-1)}};
      for (std::size_t m = 0; m < n; ++m) {
        if (sgn(bwd[m]) != 0) v.push_back({m, bwd[m]});
      }
      v.push_back({j, Integer(1)});
      expect(g.collect(v), x(i),
             nm(j) + "^-1 (" + nm(j) + " " + nm(i) + " " + nm(j) + "^-1) " +
                 nm(j) + " = " + nm(i));
    }
  }
  return rep;
}

// True iff every left-normed commutator of weight c + 1 in the generators is
// trivial, which for a nilpotent group means class at most c.
inline bool verify_class_at_most(const PcGroup& g, std::size_t c) {
  if (c < 1) {
    throw Error(Errc::kInvalidArgument, "class bound must be positive");
  }
  const std::size_t n = g.rank();
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(g.generator(i));
  // Depth-first over prefixes; a trivial prefix stays trivial.
  auto rec = [&](auto&& self, const ExponentVector& acc,
                 std::size_t weight) -> bool {
    if (acc.is_zero()) return true;
    if (weight == c + 1) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!self(self, commutator(g, acc, gens[i]), weight + 1)) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!rec(rec, gens[i], 1)) return false;
  }
  return true;
}

// Smallest c with verify_class_at_most(g, c), searching up to the rank.
inline std::optional<std::size_t> nilpotency_class_bound(const PcGroup& g) {
  for (std::size_t c = 1; c <= std::max<std::size_t>(g.rank(), 1); ++c) {
    if (verify_class_at_most(g, c)) return c;
  }
  return std::nullopt;
}

}  // namespace nilkex

#endif  // NILKEX_CONSISTENCY_HPP_
