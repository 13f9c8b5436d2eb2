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

// Measurement ladders shared by the bench command and the acceptance suite.

#ifndef NILKEX_TOOLS_BENCH_HPP_
#define NILKEX_TOOLS_BENCH_HPP_

#include <chrono>
#include <cstdint>
#include <vector>

#include "nilkex/nilkex.hpp"

namespace nilkex::cli {

struct BsgsRung {
  unsigned bits;  // q is the least safe-prime cofactor >= 2^bits
  Integer p;
  Integer q;
  double mean_ops = 0;
  std::uint64_t max_ops = 0;
  double ms = 0;
};

// Mean BSGS cost over `instances` random targets in <w^2> mod p.
inline BsgsRung bsgs_rung(unsigned bits, unsigned instances, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  BsgsRung r;
  r.bits = bits;
  r.p = next_safe_prime(Integer(1) << bits);
  r.q = (r.p - 1) / 2;
  const auto setup = safe_prime_setup(r.p);
  const UnitSubgroup& g = setup.subgroup;
  Rng rng(seed ^ bits);
  std::uint64_t total = 0;
  for (unsigned i = 0; i < instances; ++i) {
    const Integer a = rng.uniform(0, r.q - 1);
    const Integer h = g.power(g.generator(), a);
    OpCounter counter;
    const Integer found = psp_bsgs(CountingGroup<UnitSubgroup>(g, counter),
                                   g.generator(), h, r.q);
    if (found != a) throw Error(Errc::kNoSolution, "bsgs returned a wrong exponent");
    total += counter.count();
    r.max_ops = std::max(r.max_ops, counter.count());
  }
  r.mean_ops = instances ? static_cast<double>(total) / instances : 0;
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::vector<BsgsRung> bsgs_ladder(unsigned from_bits, unsigned cap_bits,
                                         unsigned step, unsigned instances,
                                         std::uint64_t seed) {
  std::vector<BsgsRung> out;
  for (unsigned b = from_bits; b <= cap_bits; b += step) {
    out.push_back(bsgs_rung(b, instances, seed));
  }
  return out;
}

struct UtReducePoint {
  std::size_t n;
  unsigned bound_bits;
  double mean_ops = 0;
  std::uint64_t max_ops = 0;
  unsigned recovered = 0;
  unsigned runs = 0;
  double ms = 0;
};

// Eavesdropper cost on honest Protocol II runs over UT(n, Z) with private
// exponents bounded by 2^bound_bits.
inline UtReducePoint ut_reduce_point(std::size_t n, unsigned bound_bits,
                                     unsigned runs, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  UtReducePoint pt{n, bound_bits};
  const UTGroup g(n, Ring::integers());
  const auto params =
      ProtocolParams<UTGroup>::two(g, g.elementary(0, 1), g.superdiagonal(), n - 2);
  const auto solver = [](const CountingGroup<UTGroup>& cg, const UTMatrix& b,
                         const UTMatrix& t) {
    return psp_ut_reduce(cg.base(), b, t, cg.counter());
  };
  std::uint64_t total = 0;
  for (unsigned i = 0; i < runs; ++i) {
    const auto run = run_exchange(params, Integer(1) << bound_bits, seed + i);
    const auto rep = break_exchange(params, run.transcript, solver);
    if (rep.success && rep.key && *rep.key == run.shared) ++pt.recovered;
    total += rep.ops;
    pt.max_ops = std::max(pt.max_ops, rep.ops);
  }
  pt.runs = runs;
  pt.mean_ops = runs ? static_cast<double>(total) / runs : 0;
  pt.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return pt;
}

}  // namespace nilkex::cli

#endif  // NILKEX_TOOLS_BENCH_HPP_
