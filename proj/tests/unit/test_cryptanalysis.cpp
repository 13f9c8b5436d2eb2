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

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace nilkex;

namespace {

// Independent scan: least non-negative a < limit with g^a = h.
template <class G>
std::optional<long> least_exponent(const G& g, const typename G::element_type& b,
                                   const typename G::element_type& h, long limit) {
  auto x = g.identity();
  for (long a = 0; a < limit; ++a) {
    if (x == h) return a;
    x = g.multiply(x, b);
  }
  return std::nullopt;
}

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kUnsupported;
}

const auto kUtSolver = [](const CountingGroup<UTGroup>& cg, const UTMatrix& b,
                          const UTMatrix& t) {
  return psp_ut_reduce(cg.base(), b, t, cg.counter());
};

}  // namespace

TEST(BruteForce, Examples) {
  const PcGroup h(heisenberg_presentation());
  const auto x3 = h.generator(2);
  EXPECT_EQ(psp_bruteforce(h, x3, h.power(x3, 5), 10), 5);
  EXPECT_EQ(psp_bruteforce(h, x3, h.power(x3, -4), 10), -4);
  EXPECT_EQ(psp_bruteforce(h, x3, x3, 10), 1);
  EXPECT_EQ(psp_bruteforce(h, x3, h.identity(), 10), 0);
  EXPECT_FALSE(psp_bruteforce(h, x3, h.generator(0), 10));
  EXPECT_FALSE(psp_bruteforce(h, x3, h.power(x3, 11), 10));
}

TEST(Bsgs, Examples) {
  const UnitSubgroup g(23, 11, 2);
  EXPECT_EQ(psp_bsgs(g, Integer(2), Integer(13), 11), 7);
  EXPECT_EQ(psp_bsgs(g, Integer(2), Integer(1), 11), 0);
  EXPECT_EQ(psp_bsgs(g, Integer(2), Integer(2), 11), 1);
  const UnitSubgroup full(23, 22, 5);
  EXPECT_EQ(error_of([&] { psp_bsgs(full, Integer(2), Integer(5), 11); }), Errc::kNoSolution);
}

TEST(Bsgs, AgreesWithScanWithinCostBound) {
  std::mt19937_64 rng(41);
  for (const auto& g : {cyclic_p_group(3, 4), cyclic_p_group(5, 4), cyclic_p_group(7, 3),
                        safe_prime_setup(23).subgroup, safe_prime_setup(2039).subgroup,
                        safe_prime_setup(10007).subgroup}) {
    const long order = g.order().get_si();
    for (int t = 0; t < 30; ++t) {
      const long a = std::uniform_int_distribution<long>(0, order - 1)(rng);
      const Integer h = g.power(g.generator(), a);
      OpCounter c;
      const Integer found = psp_bsgs(CountingGroup<UnitSubgroup>(g, c), g.generator(), h, order);
      EXPECT_EQ(found, least_exponent(g, g.generator(), h, order).value());
      EXPECT_LE(c.count(), 2 * isqrt_ceil(order).get_ui() + 4);
    }
  }
}

TEST(UtReduce, Examples) {
  const UTGroup z3(3, Ring::integers());
  const auto g = z3.multiply(z3.elementary(0, 1, 2), z3.elementary(0, 2, 5));
  EXPECT_EQ(psp_ut_reduce(z3, g, z3.power(g, 7)), 7);
  EXPECT_EQ(psp_ut_reduce(z3, g, g), 1);
  EXPECT_EQ(psp_ut_reduce(z3, g, z3.power(g, -12)), -12);
  const UTGroup z6(3, Ring::integers_mod(6));
  const auto g6 = z6.multiply(z6.elementary(0, 1, 2), z6.elementary(1, 2, 3));
  const auto h6 = z6.power(g6, 5);
  EXPECT_EQ(h6.at(0, 1), 4);
  EXPECT_EQ(h6.at(1, 2), 3);
  EXPECT_EQ(psp_ut_reduce(z6, g6, h6), 5);
}

TEST(UtReduce, RejectsNonPowers) {
  const UTGroup z3(3, Ring::integers());
  const auto g = z3.elementary(0, 2, 2);
  EXPECT_EQ(error_of([&] { psp_ut_reduce(z3, g, z3.elementary(0, 1)); }), Errc::kNotAPower);
  EXPECT_EQ(error_of([&] { psp_ut_reduce(z3, g, z3.elementary(0, 2, 3)); }), Errc::kNotAPower);
  EXPECT_EQ(error_of([&] { psp_ut_reduce(z3, z3.identity(), g); }), Errc::kNotAPower);
  EXPECT_EQ(psp_ut_reduce(z3, z3.identity(), z3.identity()), 0);
  const UTGroup z6(3, Ring::integers_mod(6));
  EXPECT_EQ(error_of([&] { psp_ut_reduce(z6, z6.elementary(0, 1, 2), z6.elementary(0, 1, 3)); }),
            Errc::kNotAPower);
  // Right band values but a wrong corner entry.
  const auto s = z3.superdiagonal();
  auto h = z3.power(s, 4);
  h.set(0, 2, h.at(0, 2) + 1);
  EXPECT_EQ(error_of([&] { psp_ut_reduce(z3, s, h); }), Errc::kNotAPower);
}

TEST(UtReduce, AgreesWithBruteForce) {
  std::mt19937_64 rng(42);
  for (const auto& g : {UTGroup(3, Ring::integers()), UTGroup(4, Ring::integers()),
                        UTGroup(3, Ring::integers_mod(6)), UTGroup(3, Ring::integers_mod(12)),
                        UTGroup(3, Ring::prime_field(5)), UTGroup(4, Ring::integers_mod(4))}) {
    for (int t = 0; t < 40; ++t) {
      auto b = ut_random(g, rng(), 9);
      if (b.is_identity()) continue;
      const long a = std::uniform_int_distribution<long>(-1000, 1000)(rng);
      const auto h = g.power(b, a);
      const Integer found = psp_ut_reduce(g, b, h);
      EXPECT_EQ(g.power(b, found), h);
      if (g.ring().is_modular()) {
        const Integer order = order_from_period(g, b).value();
        EXPECT_EQ(found, least_exponent(g, b, h, order.get_si()).value());
        EXPECT_EQ(found, mod_floor(a, order));
      } else {
        EXPECT_EQ(found, a);
        EXPECT_EQ(found, psp_bruteforce(g, b, h, 1000).value());
      }
    }
  }
}

TEST(UtReduce, CostDoesNotGrowWithExponent) {
  const UTGroup g(4, Ring::integers());
  const auto s = g.superdiagonal();
  std::uint64_t first = 0;
  for (unsigned bits : {16u, 64u, 256u, 1024u}) {
    OpCounter c;
    const Integer a = (Integer(1) << bits) - 3;
    EXPECT_EQ(psp_ut_reduce(g, s, g.power(s, a), c), a);
    if (first == 0) first = c.count();
    EXPECT_EQ(c.count(), first);
  }
}

TEST(PGroupDigits, CyclicOrderNine) {
  const auto g = cyclic_p_group(3, 2);
  const auto filt = cyclic_filtration(g, 3);
  ASSERT_EQ(filt.levels.size(), 2u);
  EXPECT_EQ(psp_pgroup_digits(g, g.generator(), g.power(g.generator(), 5), filt), 5);
  EXPECT_EQ(psp_pgroup_digits(g, g.generator(), Integer(1), filt), 0);
}

TEST(PGroupDigits, AgreesWithBruteForceOnCyclicPGroups) {
  for (long p : {3L, 5L}) {
    for (unsigned long k = 1; k <= 4; ++k) {
      const auto g = cyclic_p_group(p, k);
      const auto filt = cyclic_filtration(g, p);
      const long order = g.order().get_si();
      // Every base g^(p^s) and every target in its subgroup.
      for (unsigned long shift = 0; shift < k; ++shift) {
        const Integer base = g.power(g.generator(), pow_int(p, shift));
        const long sub = order / pow_int(p, shift).get_si();
        for (long a = 0; a < sub; ++a) {
          const Integer h = g.power(base, a);
          ASSERT_EQ(psp_pgroup_digits(g, base, h, filt), least_exponent(g, base, h, sub).value())
              << p << "^" << k << " shift " << shift << " a " << a;
        }
      }
    }
  }
}

TEST(PGroupDigits, HeisenbergOverF3AllTargets) {
  const PcGroup h(heisenberg_fp_presentation(3));
  const auto filt = heisenberg_fp_filtration(h);
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const auto g = testing_support::random_element(h, rng, 0);
    const long order = element_order(h, g, 100).value().get_si();
    for (long a = 0; a < order; ++a) {
      const auto target = h.power(g, a);
      ASSERT_EQ(psp_pgroup_digits(h, g, target, filt),
                least_exponent(h, g, target, order).value());
    }
  }
  // Base in the center: level 0 is skipped.
  const auto z = h.generator(2);
  EXPECT_EQ(psp_pgroup_digits(h, z, h.power(z, 2), filt), 2);
}

TEST(PGroupDigits, Failures) {
  const PcGroup h(heisenberg_fp_presentation(3));
  const auto filt = heisenberg_fp_filtration(h);
  EXPECT_EQ(error_of([&] { psp_pgroup_digits(h, h.generator(2), h.generator(0), filt); }),
            Errc::kUnrecoverable);
  EXPECT_EQ(error_of([&] { psp_pgroup_digits(h, h.generator(0), h.generator(1), filt); }),
            Errc::kUnrecoverable);
  // A filtration that stops one level short.
  auto short_filt = filt;
  short_filt.levels.pop_back();
  EXPECT_EQ(error_of([&] {
              psp_pgroup_digits(h, h.generator(2), h.generator(2), short_filt);
            }),
            Errc::kInconsistentFiltration);
  EXPECT_THROW(heisenberg_fp_filtration(PcGroup(heisenberg_presentation())), Error);
}

TEST(SafePrime, Examples) {
  const auto r23 = safe_prime_demo(23, 0, Integer(13));
  EXPECT_EQ(r23.q, 11);
  EXPECT_EQ(r23.primitive_root, 5);
  EXPECT_EQ(r23.base, 2);
  EXPECT_EQ(r23.exponent, 7);
  EXPECT_EQ(r23.digits_exponent, 7);
  EXPECT_EQ(r23.filtration_levels, 1u);
  EXPECT_LE(r23.ops, 8u + 4u);
  for (int s = 0; s < 10; ++s) {
    const auto r7 = safe_prime_demo(7, s);
    EXPECT_LE(r7.ops, 4u + 4u);
    EXPECT_EQ(UnitSubgroup(7, 3, r7.base).power(r7.base, r7.exponent), r7.target);
  }
  EXPECT_EQ(safe_prime_demo(11, 0, Integer(1)).exponent, 0);
  EXPECT_THROW(safe_prime_demo(13, 0), Error);
}

TEST(SafePrime, BsgsCostTracksSquareRoot) {
  for (long p : {2039L, 8039L, 32003L}) {
    const auto r = safe_prime_demo(p, 5);
    EXPECT_LE(r.ops, r.op_bound);
    EXPECT_EQ(r.exponent, r.digits_exponent);
  }
}

TEST(Attack, BreaksUnitriangularExchanges) {
  const UTGroup z3(3, Ring::integers());
  const auto one = ProtocolParams<UTGroup>::one(z3, {z3.elementary(0, 1), z3.elementary(1, 2)});
  const auto run1 = run_exchange(one, {{1, 2}, {2, 3}, {3, 5}});
  const auto r1 = break_exchange(one, run1.transcript, kUtSolver);
  ASSERT_TRUE(r1.success) << r1.reason;
  EXPECT_EQ(*r1.key, z3.elementary(0, 2, 30));

  const UTGroup z4(4, Ring::integers());
  const auto two = ProtocolParams<UTGroup>::two(z4, z4.elementary(0, 1), z4.superdiagonal(), 2);
  const auto run2 = run_exchange(two, {{1, 2}, {2, 3}, {3, 5}});
  const auto r2 = break_exchange(two, run2.transcript, kUtSolver);
  ASSERT_TRUE(r2.success);
  EXPECT_EQ(*r2.key, z4.elementary(0, 3, 30));
}

TEST(Attack, RandomHonestRunsAreBroken) {
  std::mt19937_64 rng(44);
  for (std::size_t n : {3, 4}) {
    for (const Ring& ring : {Ring::integers(), Ring::integers_mod(12), Ring::integers_mod(1000)}) {
      const UTGroup g(n, ring);
      std::vector<UTMatrix> bases;
      for (std::size_t i = 0; i + 1 < n; ++i) bases.push_back(g.elementary(i, i + 1));
      const auto one = ProtocolParams<UTGroup>::one(g, bases);
      const auto two = ProtocolParams<UTGroup>::two(g, g.elementary(0, 1), g.superdiagonal(), n - 2);
      for (int t = 0; t < 10; ++t) {
        const Integer bound = ring.is_modular() ? ring.modulus() : Integer(1) << 64;
        for (const auto* params : {&one, &two}) {
          const auto run = run_exchange(*params, bound, rng());
          const auto rep = break_exchange(*params, run.transcript, kUtSolver);
          ASSERT_TRUE(rep.success) << rep.reason;
          EXPECT_EQ(*rep.key, run.shared);
          EXPECT_LE(rep.ops, 10000u);
        }
      }
    }
  }
}

TEST(Attack, BudgetExhaustionFailsHonestly) {
  const Integer p("36893488147419104219");
  const auto setup = safe_prime_setup(p);
  using Sp = ProductGroup<UTGroup, UnitSubgroup>;
  const Sp g(UTGroup(3, Ring::prime_field(3)), setup.subgroup);
  const UTGroup& u = g.first();
  const auto params = ProtocolParams<Sp>::one(
      g, {{u.elementary(0, 1), setup.subgroup.generator()}, {u.elementary(1, 2), Integer(1)}});
  const auto run = run_exchange(params, setup.q, 3);
  const auto rep = break_exchange(
      params, run.transcript,
      [](const CountingGroup<Sp>& cg, const Sp::element_type& b, const Sp::element_type& t) {
        return psp_bsgs(cg, b, t, *cg.period());
      },
      std::uint64_t{1} << 20);
  EXPECT_FALSE(rep.success);
  EXPECT_FALSE(rep.key);
  EXPECT_NE(rep.reason.find("budget"), std::string::npos);
  EXPECT_GE(rep.ops, std::uint64_t{1} << 20);
}

TEST(Attack, IncompleteTranscriptPropagates) {
  const UTGroup z3(3, Ring::integers());
  const auto one = ProtocolParams<UTGroup>::one(z3, {z3.elementary(0, 1), z3.elementary(1, 2)});
  Transcript<UTMatrix> t(ProtocolKind::kI, 2);
  for (auto& m : publish(one, {1, 4})) t.add(m);
  EXPECT_EQ(error_of([&] { break_exchange(one, t, kUtSolver); }), Errc::kIncompleteTranscript);
}
