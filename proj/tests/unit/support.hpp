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

#ifndef NILKEX_TESTS_SUPPORT_HPP_
#define NILKEX_TESTS_SUPPORT_HPP_

#include <random>
#include <vector>

#include "nilkex/nilkex.hpp"
#include "oracles.hpp"

namespace testing_support {

using nilkex::Integer;

inline oracle::Mat to_mat(const nilkex::UTMatrix& m) {
  const std::size_t n = m.dimension();
  oracle::Mat r = oracle::identity(n, m.ring().is_modular() ? m.ring().modulus() : 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) r(i, j) = m.at(i, j);
  }
  return r;
}

inline nilkex::UTMatrix from_mat(const nilkex::UTGroup& g, const oracle::Mat& m) {
  nilkex::UTMatrix r = g.identity();
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = i + 1; j < m.n; ++j) r.set(i, j, m(i, j));
  }
  return r;
}

inline oracle::Mat heis_image(const nilkex::ExponentVector& v, const Integer& mod = 0) {
  return oracle::heisenberg(v[0], v[1], v[2], mod);
}

// Random normal form with infinite-order exponents in [-bound, bound].
inline nilkex::ExponentVector random_element(const nilkex::PcGroup& g, std::mt19937_64& rng,
                                             long bound) {
  std::vector<Integer> e;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const auto& s = g.presentation().relative_order(i);
    if (s.is_finite()) {
      e.push_back(oracle::random_z(rng, 0, s.value().get_si() - 1));
    } else {
      e.push_back(oracle::random_z(rng, -bound, bound));
    }
  }
  return nilkex::ExponentVector(std::move(e));
}

inline std::string fixture(const std::string& name) {
  return std::string(NILKEX_FIXTURE_DIR) + "/" + name;
}

}  // namespace testing_support

#endif  // NILKEX_TESTS_SUPPORT_HPP_
