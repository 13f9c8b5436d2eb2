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

#ifndef NILKEX_CRYPTANALYSIS_SAFE_PRIME_HPP_
#define NILKEX_CRYPTANALYSIS_SAFE_PRIME_HPP_

#include <chrono>
#include <cstdint>
#include <optional>

#include "nilkex/cryptanalysis/pgroup.hpp"
#include "nilkex/cryptanalysis/psp.hpp"
#include "nilkex/cyclic.hpp"
#include "nilkex/group.hpp"
#include "nilkex/integer.hpp"

namespace nilkex {

// In G = <w^2> of prime order q the series G_0 > G_1 = G^q G' is already
// trivial, so the first digit of the level-by-level method is the whole
// discrete log.  The demo solves one instance both ways and reports the
// baby-step giant-step cost.
struct SafePrimeReport {
  Integer p;
  Integer q;
  Integer primitive_root;
  Integer base;
  Integer target;
  Integer exponent;
  std::uint64_t ops = 0;
  std::uint64_t op_bound = 0;  // 2 ceil(sqrt q) + 4
  std::size_t filtration_levels = 0;
  Integer digits_exponent;
  std::uint64_t digits_ops = 0;
  double elapsed_ms = 0;
};

inline SafePrimeReport safe_prime_demo(const Integer& p, std::uint64_t seed,
                                       std::optional<Integer> target = {}) {
  const auto start = std::chrono::steady_clock::now();
  const SafePrimeSetup setup = safe_prime_setup(p);
  const UnitSubgroup& group = setup.subgroup;

  SafePrimeReport rep;
  rep.p = setup.p;
  rep.q = setup.q;
  rep.primitive_root = setup.primitive_root;
  rep.base = group.generator();
  if (target) {
    rep.target = group.decode(to_string(*target));
  } else {
    Rng rng(seed);
    rep.target = group.power(rep.base, rng.uniform(0, setup.q - 1));
  }

  OpCounter counter;
  rep.exponent = psp_bsgs(CountingGroup<UnitSubgroup>(group, counter), rep.base,
                          rep.target, setup.q);
  rep.ops = counter.count();
  rep.op_bound = 2 * isqrt_ceil(setup.q).get_ui() + 4;

  OpCounter digit_ops;
  const auto filt = cyclic_filtration(group, setup.q, &digit_ops);
  rep.filtration_levels = filt.levels.size();
  rep.digits_exponent = psp_pgroup_digits(
      CountingGroup<UnitSubgroup>(group, digit_ops), rep.base, rep.target, filt);
  rep.digits_ops = digit_ops.count();

  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace nilkex

#endif  // NILKEX_CRYPTANALYSIS_SAFE_PRIME_HPP_
