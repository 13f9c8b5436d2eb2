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

// Reference arithmetic for the tests: full square matrices with plain
// schoolbook products, written without the library's matrix code.

#ifndef NILKEX_TESTS_ORACLES_HPP_
#define NILKEX_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Z = mpz_class;

struct Mat {
  std::size_t n = 0;
  Z mod = 0;  // 0 means the integers
  std::vector<Z> a;

  Z& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Z& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  bool operator==(const Mat& o) const { return n == o.n && mod == o.mod && a == o.a; }
};

inline Z reduce(const Z& v, const Z& mod) {
  if (mod == 0) return v;
  Z r = v % mod;
  if (r < 0) r += mod;
  return r;
}

inline Mat identity(std::size_t n, const Z& mod = 0) {
  Mat m{n, mod, std::vector<Z>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

// I + sum of v * e_{ij} over the given 1-based (i, j, v) triples.
inline Mat unit(std::size_t n, std::vector<std::tuple<int, int, long>> entries,
                const Z& mod = 0) {
  Mat m = identity(n, mod);
  for (auto [i, j, v] : entries) m(i - 1, j - 1) = reduce(m(i - 1, j - 1) + v, mod);
  return m;
}

inline Mat mul(const Mat& x, const Mat& y) {
  Mat r{x.n, x.mod, std::vector<Z>(x.n * x.n, 0)};
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t k = 0; k < x.n; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  }
  for (auto& v : r.a) v = reduce(v, x.mod);
  return r;
}

// Inverse of a unitriangular matrix by back substitution.
inline Mat inv(const Mat& x) {
  const std::size_t n = x.n;
  Mat r = identity(n, x.mod);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t ii = j; ii-- > 0;) {
      Z s = 0;
      for (std::size_t k = ii + 1; k <= j; ++k) s += x(ii, k) * r(k, j);
      r(ii, j) = reduce(-s, x.mod);
    }
  }
  return r;
}

// Square-and-multiply powering.
inline Mat pow(Mat x, Z k) {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Mat r = identity(x.n, x.mod);
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = mul(r, x);
    k >>= 1;
    if (k > 0) x = mul(x, x);
  }
  return r;
}

inline Mat comm(const Mat& a, const Mat& b) {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

// Heisenberg normal form x1^a x2^b x3^c as a matrix.
inline Mat heisenberg(const Z& a, const Z& b, const Z& c, const Z& mod = 0) {
  Mat x1 = unit(3, {{1, 2, 1}}, mod), x2 = unit(3, {{2, 3, 1}}, mod),
      x3 = unit(3, {{1, 3, 1}}, mod);
  return mul(mul(pow(x1, a), pow(x2, b)), pow(x3, c));
}

inline Z random_z(std::mt19937_64& rng, long lo, long hi) {
  return Z(std::to_string(std::uniform_int_distribution<long>(lo, hi)(rng)));
}

inline Z random_nonzero(std::mt19937_64& rng, long bound) {
  Z v;
  do v = random_z(rng, -bound, bound);
  while (v == 0);
  return v;
}

}  // namespace oracle

#endif  // NILKEX_TESTS_ORACLES_HPP_
