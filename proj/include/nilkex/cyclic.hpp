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

#ifndef NILKEX_CYCLIC_HPP_
#define NILKEX_CYCLIC_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "nilkex/error.hpp"
#include "nilkex/group.hpp"
#include "nilkex/integer.hpp"

namespace nilkex {

// Cyclic subgroup <generator> of the units modulo a prime, of known order.
class UnitSubgroup {
 public:
  using element_type = Integer;

  UnitSubgroup(Integer modulus, Integer order, Integer generator)
      : modulus_(std::move(modulus)),
        order_(std::move(order)),
        generator_(mod_floor(generator, modulus_)) {
    if (modulus_ < 2 || order_ < 1) {
      throw Error(Errc::kInvalidArgument, "bad unit subgroup parameters");
    }
    if (powm(generator_, order_) != 1) {
      throw Error(Errc::kInvalidArgument,
                  "generator order does not divide " + to_string(order_));
    }
  }

  const Integer& modulus() const noexcept { return modulus_; }
  const Integer& order() const noexcept { return order_; }
  const Integer& generator() const noexcept { return generator_; }

  Integer identity() const { return 1; }
  Integer multiply(const Integer& a, const Integer& b) const {
    return mod_floor(a * b, modulus_);
  }
  Integer inverse(const Integer& a) const {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
      throw Error(Errc::kInvalidArgument, to_string(a) + " is not a unit");
    }
    return r;
  }
  Integer power(const Integer& a, const Integer& k) const {
    if (sgn(k) < 0) return powm(inverse(a), Integer(-k));
    return powm(a, k);
  }

  bool contains(const Integer& a) const {
    return sgn(a) > 0 && a < modulus_ && powm(a, order_) == 1;
  }

  std::string encode(const Integer& a) const { return to_string(a); }
  Integer decode(std::string_view text) const {
    Integer a = parse_integer(text);
    if (!contains(a)) {
      throw Error(Errc::kMismatch, to_string(a) + " is not in the subgroup");
    }
    return a;
  }

  std::uint64_t power_cost(const Integer& k) const {
    return binary_power_cost(k);
  }
  bool torsion_free() const { return false; }
  std::optional<Integer> period() const { return order_; }

  friend bool operator==(const UnitSubgroup& a, const UnitSubgroup& b) {
    return a.modulus_ == b.modulus_ && a.order_ == b.order_ &&
           a.generator_ == b.generator_;
  }

 private:
  Integer powm(const Integer& a, const Integer& k) const {
    Integer r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), k.get_mpz_t(), modulus_.get_mpz_t());
    return r;
  }

  Integer modulus_;
  Integer order_;
  Integer generator_;
};

struct SafePrimeSetup {
  Integer p;
  Integer q;
  Integer primitive_root;  // w, a generator of (Z/pZ)^*
  UnitSubgroup subgroup;   // <w^2>, of order q
};

inline bool is_safe_prime(const Integer& p) {
  return p > 4 && is_probable_prime(p) && is_probable_prime((p - 1) / 2);
}

// The order-q subgroup <w^2> of (Z/pZ)^* for a safe prime p = 2q + 1, where w
// is the least primitive root.
inline SafePrimeSetup safe_prime_setup(const Integer& p) {
  if (!is_safe_prime(p)) {
    throw Error(Errc::kInvalidArgument, to_string(p) + " is not a safe prime");
  }
  const Integer q = (p - 1) / 2;
  for (Integer w = 2; w < p; ++w) {
    Integer sq = mod_floor(w * w, p);
    Integer wq;
    mpz_powm(wq.get_mpz_t(), w.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    if (sq != 1 && wq != 1) {
      return SafePrimeSetup{p, q, w, UnitSubgroup(p, q, sq)};
    }
  }
  throw Error(Errc::kInvalidArgument, "no primitive root found");
}

// Least safe prime p = 2q + 1 with q >= lower.
inline Integer next_safe_prime(const Integer& lower) {
  Integer q = lower;
  if (q < 2) q = 2;
  for (;; ++q) {
    if (is_probable_prime(q) && is_probable_prime(2 * q + 1)) return 2 * q + 1;
  }
}

// A cyclic group of order p^k realised inside (Z/lZ)^* for the least prime
// l = 1 mod p^k.
inline UnitSubgroup cyclic_p_group(const Integer& p, unsigned long k) {
  if (!is_probable_prime(p) || k < 1) {
    throw Error(Errc::kInvalidArgument, "cyclic p-group needs prime p, k >= 1");
  }
  const Integer order = pow_int(p, k);
  Integer ell = order + 1;
  while (!is_probable_prime(ell)) ell += order;
  const Integer cofactor = (ell - 1) / order;
  const Integer top = pow_int(p, k - 1);
  for (Integer y = 2; y < ell; ++y) {
    Integer h, t;
    mpz_powm(h.get_mpz_t(), y.get_mpz_t(), cofactor.get_mpz_t(),
             ell.get_mpz_t());
    mpz_powm(t.get_mpz_t(), h.get_mpz_t(), top.get_mpz_t(), ell.get_mpz_t());
    if (t != 1) return UnitSubgroup(ell, order, h);
  }
  throw Error(Errc::kInvalidArgument, "no element of order p^k found");
}

// Direct product A x B with componentwise arithmetic.
template <Group A, Group B>
class ProductGroup {
 public:
  using element_type =
      std::pair<typename A::element_type, typename B::element_type>;

  ProductGroup(A a, B b) : a_(std::move(a)), b_(std::move(b)) {}

  const A& first() const noexcept { return a_; }
  const B& second() const noexcept { return b_; }

  element_type identity() const { return {a_.identity(), b_.identity()}; }
  element_type multiply(const element_type& x, const element_type& y) const {
    return {a_.multiply(x.first, y.first), b_.multiply(x.second, y.second)};
  }
  element_type inverse(const element_type& x) const {
    return {a_.inverse(x.first), b_.inverse(x.second)};
  }
  element_type power(const element_type& x, const Integer& k) const {
    return {a_.power(x.first, k), b_.power(x.second, k)};
  }
  std::string encode(const element_type& x) const {
    return "(" + a_.encode(x.first) + " ; " + b_.encode(x.second) + ")";
  }
  std::uint64_t power_cost(const Integer& k) const {
    return std::max(a_.power_cost(k), b_.power_cost(k));
  }
  bool torsion_free() const { return a_.torsion_free() && b_.torsion_free(); }
  std::optional<Integer> period() const {
    auto pa = a_.period();
    auto pb = b_.period();
    if (!pa || !pb) return std::nullopt;
    return lcm(*pa, *pb);
  }

 private:
  A a_;
  B b_;
};

}  // namespace nilkex

#endif  // NILKEX_CYCLIC_HPP_
