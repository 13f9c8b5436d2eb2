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

#ifndef NILKEX_CRYPTANALYSIS_PGROUP_HPP_
#define NILKEX_CRYPTANALYSIS_PGROUP_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilkex/collector.hpp"
#include "nilkex/cryptanalysis/psp.hpp"
#include "nilkex/cyclic.hpp"
#include "nilkex/error.hpp"
#include "nilkex/group.hpp"
#include "nilkex/integer.hpp"
#include "nilkex/standard_groups.hpp"

namespace nilkex {

// A series G = G_0 > G_1 > ... > G_n = 1 of a finite p-group whose factors
// G_i / G_{i+1} are elementary abelian.  Level i can test membership in G_i
// and maps G_i onto coordinates of G_i / G_{i+1} as a vector over Z/pZ.
template <class E>
struct PGroupFiltration {
  struct Level {
    std::function<bool(const E&)> contains;
    std::function<std::vector<Integer>(const E&)> project;
  };

  using LogOracle = std::function<std::optional<Integer>(
      std::size_t level, const std::vector<Integer>& base,
      const std::vector<Integer>& target)>;

  Integer p;
  std::vector<Level> levels;
  LogOracle log;  // empty: coordinatewise linear algebra mod p
};

// d in [0, p) with d * base == target over Z/pZ, if any.
inline std::optional<Integer> elementary_abelian_log(
    const Integer& p, const std::vector<Integer>& base,
    const std::vector<Integer>& target) {
  if (base.size() != target.size()) {
    throw Error(Errc::kMismatch, "coordinate vectors differ in length");
  }
  std::optional<Integer> d;
  for (std::size_t j = 0; j < base.size(); ++j) {
    const Integer b = mod_floor(base[j], p);
    const Integer t = mod_floor(target[j], p);
    if (sgn(b) == 0) {
      if (sgn(t) != 0) return std::nullopt;
      continue;
    }
    if (!d) {
      Integer inv;
      mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t());
      d = mod_floor(t * inv, p);
    } else if (mod_floor(*d * b - t, p) != 0) {
      return std::nullopt;
    }
  }
  return d.value_or(Integer(0));
}

namespace detail {
inline bool all_zero(const std::vector<Integer>& v, const Integer& p) {
  for (const auto& x : v) {
    if (mod_floor(x, p) != 0) return false;
  }
  return true;
}
}  // namespace detail

// Recovers a = a_0 + a_1 p + ... with g^a = h one base-p digit at a time.
// The current base is g^{p^i} and the current target is h g^{-(a_0 + ... +
// a_{i-1} p^{i-1})}.  Levels on which the base projects trivially are
// skipped; the target must vanish there too.
template <Group G>
Integer psp_pgroup_digits(const G& group, const typename G::element_type& g,
                          const typename G::element_type& h,
                          const PGroupFiltration<typename G::element_type>& filt) {
  if (filt.levels.empty()) {
    throw Error(Errc::kInvalidArgument, "filtration has no levels");
  }
  if (!filt.levels[0].contains(g) || !filt.levels[0].contains(h)) {
    throw Error(Errc::kInvalidArgument, "elements lie outside the filtration");
  }
  const auto log = [&](std::size_t level, const std::vector<Integer>& b,
                       const std::vector<Integer>& t) {
    return filt.log ? filt.log(level, b, t)
                    : elementary_abelian_log(filt.p, b, t);
  };

  auto base = g;
  auto target = h;
  Integer a = 0;
  Integer place = 1;
  std::size_t level = 0;
  while (!is_identity(group, base)) {
    std::vector<Integer> b;
    for (;; ++level) {
      if (level == filt.levels.size()) {
        throw Error(Errc::kInconsistentFiltration,
                    "base survives past the last level");
      }
      b = filt.levels[level].project(base);
      const auto t = filt.levels[level].project(target);
      if (!detail::all_zero(b, filt.p)) break;
      if (!detail::all_zero(t, filt.p)) {
        throw Error(Errc::kUnrecoverable,
                    "level " + std::to_string(level) +
                        ": target has a component the base cannot reach");
      }
    }
    const auto digit = log(level, b, filt.levels[level].project(target));
    if (!digit) {
      throw Error(Errc::kUnrecoverable,
                  "level " + std::to_string(level) + ": quotient log failed");
    }
    a += *digit * place;
    if (sgn(*digit) != 0) {
      target = group.multiply(target, group.power(base, Integer(-*digit)));
    }
    base = group.power(base, filt.p);
    place *= filt.p;
  }
  if (!is_identity(group, target)) {
    throw Error(Errc::kUnrecoverable, "target is not in the subgroup <g>");
  }
  if (!(group.power(g, a) == h)) {
    throw Error(Errc::kInconsistentFiltration, "recovered exponent fails g^a = h");
  }
  return a;
}

// Cyclic group of order p^k: G_i = <c^{p^i}>.  An element x of G_i is
// projected through x -> x^{p^{k-i-1}} into the subgroup of order p and
// identified there by a discrete log, which is where the work lies.
inline PGroupFiltration<Integer> cyclic_filtration(const UnitSubgroup& group,
                                                   const Integer& p,
                                                   OpCounter* oracle_ops = nullptr) {
  Integer order = group.order();
  unsigned long k = 0;
  while (order > 1) {
    if (order % p != 0) {
      throw Error(Errc::kInvalidArgument,
                  "group order is not a power of " + to_string(p));
    }
    order /= p;
    ++k;
  }
  if (k == 0) throw Error(Errc::kInvalidArgument, "trivial group");
  const Integer zeta = group.power(group.generator(), pow_int(p, k - 1));

  PGroupFiltration<Integer> filt;
  filt.p = p;
  for (unsigned long i = 0; i < k; ++i) {
    const Integer member = pow_int(p, k - i);
    const Integer lift = pow_int(p, k - i - 1);
    filt.levels.push_back(
        {[group, member](const Integer& x) {
           return group.contains(x) && group.power(x, member) == 1;
         },
         [group, lift, zeta, p, oracle_ops](const Integer& x) {
           const Integer y = group.power(x, lift);
           OpCounter scratch;
           CountingGroup<UnitSubgroup> counted(group,
                                               oracle_ops ? *oracle_ops : scratch);
           return std::vector<Integer>{psp_bsgs(counted, zeta, y, p)};
         }});
  }
  return filt;
}

// Heisenberg group over F_p (three generators of relative order p, x3
// central): G_1 is the center <x3>.
inline PGroupFiltration<ExponentVector> heisenberg_fp_filtration(
    const PcGroup& group) {
  const auto& pres = group.presentation();
  if (pres.generator_count() != 3 || !pres.all_finite() ||
      !is_probable_prime(pres.relative_order(0).value()) ||
      !(pres == heisenberg_fp_presentation(pres.relative_order(0).value()))) {
    throw Error(Errc::kMismatch, "not a Heisenberg group over a prime field");
  }
  const Integer p = pres.relative_order(0).value();
  PGroupFiltration<ExponentVector> filt;
  filt.p = p;
  filt.levels.push_back(
      {[](const ExponentVector&) { return true; },
       [](const ExponentVector& v) { return std::vector<Integer>{v[0], v[1]}; }});
  filt.levels.push_back(
      {[](const ExponentVector& v) { return is_zero(v[0]) && is_zero(v[1]); },
       [](const ExponentVector& v) { return std::vector<Integer>{v[2]}; }});
  return filt;
}

}  // namespace nilkex

#endif  // NILKEX_CRYPTANALYSIS_PGROUP_HPP_
