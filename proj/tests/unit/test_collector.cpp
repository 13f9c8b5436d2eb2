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

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace nilkex;
using testing_support::fixture;
using testing_support::heis_image;
using testing_support::random_element;

namespace {

PcGroup load(const std::string& name) {
  std::ifstream in(fixture(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return PcGroup(parse_presentation(ss.str()));
}

const PcGroup& heis() {
  static const PcGroup g(heisenberg_presentation());
  return g;
}

}  // namespace

TEST(Collect, SpecExamples) {
  const auto& h = heis();
  EXPECT_EQ(h.collect(parse_word("2 1")), (ExponentVector{1, 1, -1}));
  EXPECT_EQ(h.collect({}), h.identity());
  const PcGroup c5(cyclic_presentation(5));
  EXPECT_EQ(c5.collect(parse_word("1^7")), (ExponentVector{2}));
  EXPECT_EQ(h.collect(parse_word("1^0 2^0")), h.identity());
  EXPECT_THROW(h.collect({{3, 1}}), Error);
}

TEST(Collect, AgreesWithMatrixOracleOnRandomWords) {
  const auto& h = heis();
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    Word w;
    oracle::Mat m = oracle::identity(3);
    const int len = static_cast<int>(oracle::random_z(rng, 0, 8).get_si());
    for (int s = 0; s < len; ++s) {
      const std::size_t gen = oracle::random_z(rng, 0, 2).get_ui();
      const Integer e = oracle::random_z(rng, -50, 50);
      w.push_back({gen, e});
      const auto x = gen == 0 ? oracle::unit(3, {{1, 2, 1}})
                   : gen == 1 ? oracle::unit(3, {{2, 3, 1}})
                              : oracle::unit(3, {{1, 3, 1}});
      m = oracle::mul(m, oracle::pow(x, e));
    }
    EXPECT_EQ(heis_image(h.collect(w)), m);
  }
}

TEST(Collect, MultiplyInversePowerExamples) {
  const auto& h = heis();
  EXPECT_EQ(h.multiply({1, 0, 0}, {0, 1, 0}), (ExponentVector{1, 1, 0}));
  EXPECT_EQ(h.multiply({0, 1, 0}, {1, 0, 0}), (ExponentVector{1, 1, -1}));
  EXPECT_EQ(h.inverse(h.identity()), h.identity());
  EXPECT_EQ(h.inverse({1, 0, 0}), (ExponentVector{-1, 0, 0}));
  const ExponentVector a{1, 1, 0};
  EXPECT_EQ(h.multiply(a, h.inverse(a)), h.identity());
  EXPECT_EQ(h.multiply(h.inverse(a), a), h.identity());
  EXPECT_EQ(heis_image(h.power(a, 3)), oracle::pow(heis_image(a), 3));
  EXPECT_EQ(h.power(a, 0), h.identity());
  EXPECT_EQ(h.power(a, 1), a);
  EXPECT_THROW(h.multiply({1, 0}, {1, 0, 0}), Error);
}

TEST(Collect, HomomorphismIntoUT3Z) {
  const auto& h = heis();
  std::mt19937_64 rng(2);
  for (int t = 0; t < 500; ++t) {
    const auto a = random_element(h, rng, 1000);
    const auto b = random_element(h, rng, 1000);
    const Integer k = oracle::random_z(rng, -1000000, 1000000);
    EXPECT_EQ(heis_image(h.multiply(a, b)), oracle::mul(heis_image(a), heis_image(b)));
    EXPECT_EQ(heis_image(h.inverse(a)), oracle::inv(heis_image(a)));
    EXPECT_EQ(heis_image(h.power(a, k)), oracle::pow(heis_image(a), k));
    EXPECT_EQ(heis_image(commutator(h, a, b)), oracle::comm(heis_image(a), heis_image(b)));
    EXPECT_EQ(heisenberg_hom(h, a), testing_support::from_mat(UTGroup(3, Ring::integers()),
                                                              heis_image(a)));
  }
}

TEST(Collect, GroupLawsOnEveryFixture) {
  std::mt19937_64 rng(3);
  for (const char* name : {"heisenberg.npres", "heisenberg-f3.npres", "ut4z.npres",
                           "ut4f2.npres", "ut3z6.npres", "cyclic5.npres"}) {
    const PcGroup g = load(name);
    for (int t = 0; t < 60; ++t) {
      const auto a = random_element(g, rng, 30);
      const auto b = random_element(g, rng, 30);
      const auto c = random_element(g, rng, 30);
      EXPECT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c))) << name;
      EXPECT_EQ(g.multiply(a, g.identity()), a);
      EXPECT_EQ(g.multiply(g.inverse(a), a), g.identity());
      EXPECT_EQ(commutator(g, a, b), g.inverse(commutator(g, b, a)));
      EXPECT_TRUE(g.is_normal_form(g.multiply(a, b)));
    }
  }
}

TEST(Collect, AssociationOrderDoesNotMatter) {
  const PcGroup g = load("ut4z.npres");
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    Word w1, w2;
    for (int s = 0; s < 4; ++s) {
      w1.push_back({oracle::random_z(rng, 0, 5).get_ui(), oracle::random_z(rng, -9, 9)});
      w2.push_back({oracle::random_z(rng, 0, 5).get_ui(), oracle::random_z(rng, -9, 9)});
    }
    Word both = w1;
    both.insert(both.end(), w2.begin(), w2.end());
    EXPECT_EQ(g.collect(both), g.multiply(g.collect(w1), g.collect(w2)));
  }
}

TEST(Collect, PowerAdditivityWithLargeExponents) {
  const auto& h = heis();
  const PcGroup u4 = load("ut4z.npres");
  std::mt19937_64 rng(5);
  const Integer two64 = Integer(1) << 64;
  for (int t = 0; t < 40; ++t) {
    Integer j = Integer(std::to_string(rng())) % two64 - (two64 >> 1);
    Integer k = Integer(std::to_string(rng())) % two64 - (two64 >> 1);
    for (const PcGroup* g : {&h, &u4}) {
      const auto a = random_element(*g, rng, 5);
      EXPECT_EQ(g->power(a, j + k), g->multiply(g->power(a, j), g->power(a, k)));
    }
  }
}

TEST(Collect, HugeExponentsStayFast) {
  const auto& h = heis();
  const auto start = std::chrono::steady_clock::now();
  const Integer k = (Integer(1) << 128) + 12345;
  const ExponentVector a{3, -7, 11};
  const auto p = h.power(a, k);
  EXPECT_EQ(heis_image(p), oracle::pow(heis_image(a), k));
  EXPECT_EQ(h.multiply(h.power(a, -k), p), h.identity());
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 2.0);
}

TEST(Collect, FiniteFixturesEnumerateExactly) {
  for (auto [name, order] : std::vector<std::pair<const char*, int>>{
           {"cyclic5.npres", 5}, {"heisenberg-f3.npres", 27}, {"ut4f2.npres", 64},
           {"ut3z6.npres", 216}}) {
    const PcGroup g = load(name);
    std::vector<ExponentVector> all{g.identity()};
    for (std::size_t i = g.rank(); i-- > 0;) {
      std::vector<ExponentVector> next;
      const long s = g.presentation().relative_order(i).value().get_si();
      for (const auto& v : all) {
        for (long e = 0; e < s; ++e) {
          auto w = v;
          w[i] = e;
          next.push_back(w);
        }
      }
      all = std::move(next);
    }
    ASSERT_EQ(static_cast<int>(all.size()), order) << name;
    std::set<std::string> forms;
    for (const auto& v : all) forms.insert(v.to_string());
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto c = g.multiply(a, b);
        ASSERT_TRUE(forms.count(c.to_string())) << name << " " << c.to_string();
      }
    }
    EXPECT_EQ(g.period(), order) << name;
  }
}

TEST(Consistency, SpecExamples) {
  EXPECT_TRUE(check_consistency(heis()).consistent());
  EXPECT_TRUE(check_consistency(PcGroup(cyclic_presentation(5))).consistent());
  const auto bad = check_consistency(load("invalid/heisenberg-corrupt.npres"));
  ASSERT_FALSE(bad.consistent());
  for (const auto& f : bad.failures) {
    EXPECT_NE(f.find("x1^-1"), std::string::npos) << f;
  }
  for (const char* name : {"heisenberg-f3.npres", "ut4z.npres", "ut4f2.npres", "ut3z6.npres"}) {
    EXPECT_TRUE(check_consistency(load(name)).consistent()) << name;
  }
}

TEST(Consistency, DetectsBrokenPowerRelation) {
  // x1^2 = x2, yet x1 does not commute with x2.
  NilpotentPresentation p(
      {RelativeOrder::finite(2), RelativeOrder::finite(2), RelativeOrder::finite(2)});
  p.set_power(0, ExponentVector{0, 1, 0});
  p.set_conjugate(0, 1, ExponentVector{0, 0, 1});
  p.set_conjugate_inverse(0, 1, ExponentVector{0, 0, 1});
  EXPECT_FALSE(check_consistency(PcGroup(p)).consistent());
}

TEST(ClassBound, SpecExamples) {
  EXPECT_TRUE(verify_class_at_most(heis(), 2));
  EXPECT_FALSE(verify_class_at_most(heis(), 1));
  EXPECT_TRUE(verify_class_at_most(PcGroup(cyclic_presentation(5)), 1));
  EXPECT_TRUE(verify_class_at_most(load("ut4z.npres"), 3));
  EXPECT_FALSE(verify_class_at_most(load("ut4z.npres"), 2));
  EXPECT_EQ(nilpotency_class_bound(load("ut4f2.npres")), 3u);
  EXPECT_THROW(verify_class_at_most(heis(), 0), Error);
}

TEST(Commutator, HeisenbergGenerators) {
  const auto& h = heis();
  EXPECT_EQ(commutator(h, h.generator(0), h.generator(1)), (ExponentVector{0, 0, 1}));
  EXPECT_EQ(commutator(h, h.generator(0), h.generator(0)), h.identity());
}
