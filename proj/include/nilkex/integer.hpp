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

#ifndef NILKEX_INTEGER_HPP_
#define NILKEX_INTEGER_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilkex/error.hpp"

namespace nilkex {

// Arbitrary-precision integer used for every exponent and ring entry.
using Integer = mpz_class;

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Integer out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw Error(Errc::kParse, "not an integer: '" + std::string(text) + "'");
  }
  return out;
}

inline std::string to_string(const Integer& v) { return v.get_str(10); }

inline bool is_zero(const Integer& v) { return sgn(v) == 0; }

// Floor division with non-negative remainder for a positive divisor.
inline void floor_divmod(const Integer& a, const Integer& d, Integer& q,
                         Integer& r) {
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
}

inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer pow_int(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer isqrt_ceil(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return r;
}

inline std::size_t bit_length(const Integer& v) {
  if (is_zero(v)) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline std::size_t popcount_abs(const Integer& v) {
  Integer a = abs(v);
  return mpz_popcount(a.get_mpz_t());
}

// Miller-Rabin with 64 rounds; a composite survives with probability
// below 4^-64 = 2^-128.
inline bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
}

// Generalized binomial coefficient k(k-1)...(k-d+1)/d!, exact for any
// integer k, including negative ones.
inline Integer binomial(const Integer& k, unsigned long d) {
  Integer num = 1;
  Integer den = 1;
  for (unsigned long t = 0; t < d; ++t) {
    num *= k - t;
    den *= t + 1;
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Solves b * a == c (mod m).  On success stores a residue r in [0, period)
// with period = m / gcd(b, m) and returns true.
inline bool solve_linear_congruence(const Integer& b, const Integer& c,
                                    const Integer& m, Integer& r,
                                    Integer& period) {
  Integer d = gcd(b, m);
  if (mod_floor(c, d) != 0) return false;
  period = m / d;
  Integer bb = mod_floor(b / d, period);
  Integer cc = mod_floor(c / d, period);
  if (period == 1) {
    r = 0;
    return true;
  }
  Integer inv;
  mpz_invert(inv.get_mpz_t(), bb.get_mpz_t(), period.get_mpz_t());
  r = mod_floor(cc * inv, period);
  return true;
}

// Intersects the residue classes r1 mod m1 and r2 mod m2.  Returns false
// when they are disjoint; otherwise replaces (r1, m1) by the combined class
// modulo lcm(m1, m2).
inline bool intersect_residue_classes(Integer& r1, Integer& m1,
                                      const Integer& r2, const Integer& m2) {
  Integer g = gcd(m1, m2);
  if (mod_floor(r2 - r1, g) != 0) return false;
  Integer l = lcm(m1, m2);
  Integer m1g = m1 / g;
  Integer m2g = m2 / g;
  Integer t = 0;
  if (m2g != 1) {
    Integer inv;
    Integer base = mod_floor(m1g, m2g);
    mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), m2g.get_mpz_t());
    t = mod_floor(((r2 - r1) / g) * inv, m2g);
  }
  r1 = mod_floor(r1 + m1 * t, l);
  m1 = l;
  return true;
}

// Distinct prime factors by trial division up to limit; nullopt when the
// cofactor left over is composite.
inline std::optional<std::vector<Integer>> small_prime_factors(
    Integer m, unsigned long limit = 1000000) {
  std::vector<Integer> primes;
  for (unsigned long d = 2; d <= limit && Integer(d) * d <= m; ++d) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      primes.emplace_back(d);
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) m /= d;
    }
  }
  if (m > 1) {
    if (!is_probable_prime(m)) return std::nullopt;
    primes.push_back(m);
  }
  return primes;
}

// Deterministic source of uniform integers, seeded from a 64-bit value.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(gmp_randinit_mt) {
    Integer s(std::to_string(seed));
    state_.seed(s);
  }

  // Uniform in [lo, hi].
  Integer uniform(const Integer& lo, const Integer& hi) {
    Integer span = hi - lo + 1;
    return lo + state_.get_z_range(span);
  }

  // Uniform in [1, bound] union [-bound, -1].
  Integer nonzero(const Integer& bound) {
    Integer v = uniform(1, 2 * bound);
    return v <= bound ? v : bound - v;
  }

  std::uint64_t next_u64() {
    Integer v = state_.get_z_bits(64);
    return std::stoull(v.get_str(10));
  }

 private:
  gmp_randclass state_;
};

}  // namespace nilkex

#endif  // NILKEX_INTEGER_HPP_
