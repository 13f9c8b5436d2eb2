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

#include "support.hpp"

using namespace nilkex;
using testing_support::heis_image;

namespace {

template <class G>
void expect_multilinear(const MapDescriptor<G>& d,
                        std::function<typename G::element_type(std::mt19937_64&)> sample,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 100; ++t) {
    std::vector<typename G::element_type> gs;
    std::vector<Integer> as;
    for (std::size_t i = 0; i < d.arity; ++i) {
      gs.push_back(sample(rng));
      as.push_back(oracle::random_nonzero(rng, 1L << 16));
    }
    ASSERT_TRUE(check_multilinearity(d, gs, as));
    // One slot at a time.
    const auto base = eval_map(d, gs);
    for (std::size_t i = 0; i < d.arity; ++i) {
      auto raised = gs;
      raised[i] = d.group.power(gs[i], as[i]);
      ASSERT_EQ(eval_map(d, raised), d.group.power(base, as[i]));
    }
  }
}

}  // namespace

TEST(Multilinear, PlainMapOnHeisenberg) {
  const PcGroup h(heisenberg_presentation());
  const auto d = make_plain_map(h, {h.generator(0), h.generator(1)});
  EXPECT_EQ(eval_map(d, {h.generator(0), h.generator(1)}), (ExponentVector{0, 0, 1}));
  EXPECT_EQ(eval_map(d, {h.identity(), h.generator(1)}), h.identity());
  EXPECT_TRUE(check_nondegenerate(d));
  EXPECT_TRUE(check_multilinearity(d, {h.generator(0), h.generator(1)}, {2, 3}));
  EXPECT_EQ(heis_image(h.power(eval_map(d, {h.generator(0), h.generator(1)}), 6)),
            oracle::unit(3, {{1, 3, 6}}));
  EXPECT_TRUE(check_multilinearity(d, {h.generator(0), h.generator(1)}, {1, 1}));
  EXPECT_THROW(eval_map(d, {h.generator(0)}), Error);
  EXPECT_THROW(check_multilinearity(d, {h.generator(0), h.generator(1)}, {0, 3}), Error);
}

TEST(Multilinear, DegenerateWitnessIsRejected) {
  const PcGroup h(heisenberg_presentation());
  MapDescriptor<PcGroup> d{MapKind::kPlain, h, 2, std::nullopt,
                           {h.generator(0), h.generator(0)}};
  EXPECT_FALSE(check_nondegenerate(d));
  EXPECT_THROW(make_plain_map(h, {h.generator(0), h.generator(0)}), Error);
  // Class 3 group with a plain map of arity 2 is not multilinear.
  const UTGroup u4(4, Ring::integers());
  EXPECT_THROW(make_plain_map(u4, {u4.elementary(0, 1), u4.elementary(1, 2)}), Error);
}

TEST(Multilinear, EngelMapOnUT4) {
  const UTGroup g(4, Ring::integers());
  const auto x = g.elementary(0, 1);
  const auto s = g.superdiagonal();
  const auto d = make_engel_map(g, x, s, 2);
  EXPECT_EQ(eval_map(d, {s, s}), g.elementary(0, 3));
  EXPECT_TRUE(check_nondegenerate(d));
  EXPECT_EQ(eval_map(d, {g.identity(), s}), g.identity());
  EXPECT_TRUE(check_multilinearity(d, {s, s}, {Integer(7), 2, 3}));
  EXPECT_EQ(g.power(eval_map(d, {s, s}), 42), g.elementary(0, 3, 42));
  EXPECT_THROW(make_engel_map(g, s, s, 2), Error);
}

TEST(Multilinear, RandomChecksOnEveryPlatform) {
  const PcGroup h(heisenberg_presentation());
  expect_multilinear<PcGroup>(make_plain_map(h, {h.generator(0), h.generator(1)}),
                              [&](std::mt19937_64& r) {
                                return testing_support::random_element(h, r, 1000);
                              },
                              21);
  for (const auto& g : {UTGroup(3, Ring::integers()), UTGroup(4, Ring::integers()),
                        UTGroup(3, Ring::integers_mod(12)), UTGroup(4, Ring::prime_field(5))}) {
    std::vector<UTMatrix> w;
    for (std::size_t i = 0; i + 1 < g.dimension(); ++i) w.push_back(g.elementary(i, i + 1));
    const auto sample = [&](std::mt19937_64& r) { return ut_random(g, r(), 1000); };
    expect_multilinear<UTGroup>(make_plain_map(g, w), sample, 22);
    if (g.dimension() > 2) {
      const auto e = make_engel_map(g, g.elementary(0, 1), g.superdiagonal(), g.dimension() - 2);
      expect_multilinear<UTGroup>(e, sample, 23);
    }
  }
}
