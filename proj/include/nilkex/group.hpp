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

#ifndef NILKEX_GROUP_HPP_
#define NILKEX_GROUP_HPP_

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include "nilkex/error.hpp"
#include "nilkex/integer.hpp"

namespace nilkex {

// The element interface shared by every platform: presentations, matrix
// groups, cyclic unit groups and their direct products.  Elements are plain
// values; the group object carries whatever context the arithmetic needs.
template <class G>
concept Group = requires(const G& g, const typename G::element_type& a,
                         const Integer& k) {
  typename G::element_type;
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.multiply(a, a) } -> std::convertible_to<typename G::element_type>;
  { g.inverse(a) } -> std::convertible_to<typename G::element_type>;
  { g.power(a, k) } -> std::convertible_to<typename G::element_type>;
  { a == a } -> std::convertible_to<bool>;
  { g.encode(a) } -> std::convertible_to<std::string>;
  // Number of multiplications power(a, k) performs internally.
  { g.power_cost(k) } -> std::convertible_to<std::uint64_t>;
  { g.torsion_free() } -> std::convertible_to<bool>;
  // A positive integer killing every element, when one is known.
  { g.period() } -> std::convertible_to<std::optional<Integer>>;
};

// Square-and-multiply; inverts first when k < 0.
template <class G, class E>
E binary_power(const G& g, const E& a, const Integer& k) {
  if (sgn(k) < 0) return binary_power(g, g.inverse(a), Integer(-k));
  E result = g.identity();
  if (is_zero(k)) return result;
  E base = a;
  bool started = false;
  const std::size_t bits = bit_length(k);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(k.get_mpz_t(), i)) {
      result = started ? g.multiply(result, base) : base;
      started = true;
    }
    if (i + 1 < bits) base = g.multiply(base, base);
  }
  return result;
}

// Multiplications used by binary_power for exponent k.
inline std::uint64_t binary_power_cost(const Integer& k) {
  if (is_zero(k)) return 0;
  return bit_length(k) + popcount_abs(k) - 2;
}

// Counts group multiplications and enforces an optional budget.
class OpCounter {
 public:
  OpCounter() = default;
  explicit OpCounter(std::optional<std::uint64_t> budget) : budget_(budget) {}

  void add(std::uint64_t ops) {
    count_ += ops;
    if (budget_ && count_ > *budget_) {
      throw Error(Errc::kBudgetExhausted,
                  "operation budget of " + std::to_string(*budget_) +
                      " group multiplications exhausted");
    }
  }

  std::uint64_t count() const noexcept { return count_; }
  std::optional<std::uint64_t> budget() const noexcept { return budget_; }

 private:
  std::uint64_t count_ = 0;
  std::optional<std::uint64_t> budget_;
};

// Forwards to an underlying group, charging every multiplication (including
// those performed inside power) to an OpCounter.
template <Group G>
class CountingGroup {
 public:
  using element_type = typename G::element_type;

  CountingGroup(const G& group, OpCounter& counter)
      : group_(&group), counter_(&counter) {}

  element_type identity() const { return group_->identity(); }
  element_type multiply(const element_type& a, const element_type& b) const {
    counter_->add(1);
    return group_->multiply(a, b);
  }
  element_type inverse(const element_type& a) const {
    return group_->inverse(a);
  }
  element_type power(const element_type& a, const Integer& k) const {
    counter_->add(group_->power_cost(k));
    return group_->power(a, k);
  }
  std::string encode(const element_type& a) const { return group_->encode(a); }
  std::uint64_t power_cost(const Integer& k) const {
    return group_->power_cost(k);
  }
  bool torsion_free() const { return group_->torsion_free(); }
  std::optional<Integer> period() const { return group_->period(); }

  const G& base() const noexcept { return *group_; }
  OpCounter& counter() const noexcept { return *counter_; }

 private:
  const G* group_;
  OpCounter* counter_;
};

template <Group G>
bool is_identity(const G& g, const typename G::element_type& a) {
  return a == g.identity();
}

// Exact order of a from a known period whose prime factors are found by
// trial division; nullopt otherwise.
template <Group G>
std::optional<Integer> order_from_period(const G& g,
                                         const typename G::element_type& a) {
  const auto period = g.period();
  if (!period) return std::nullopt;
  const auto primes = small_prime_factors(*period);
  if (!primes) return std::nullopt;
  const auto id = g.identity();
  Integer n = *period;
  for (const auto& p : *primes) {
    while (n % p == 0 && g.power(a, Integer(n / p)) == id) n /= p;
  }
  return n;
}

// Order of a when it is at most limit, else nullopt.
template <Group G>
std::optional<Integer> element_order(const G& g,
                                     const typename G::element_type& a,
                                     std::uint64_t limit) {
  const auto id = g.identity();
  if (a == id) return Integer(1);
  if (g.torsion_free()) return std::nullopt;
  if (auto n = order_from_period(g, a)) {
    if (*n > Integer(std::to_string(limit))) return std::nullopt;
    return n;
  }
  auto x = a;
  for (std::uint64_t k = 2; k <= limit; ++k) {
    x = g.multiply(x, a);
    if (x == id) return Integer(std::to_string(k));
  }
  return std::nullopt;
}

}  // namespace nilkex

#endif  // NILKEX_GROUP_HPP_
