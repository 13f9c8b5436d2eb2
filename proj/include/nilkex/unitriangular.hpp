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

#ifndef NILKEX_UNITRIANGULAR_HPP_
#define NILKEX_UNITRIANGULAR_HPP_

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilkex/error.hpp"
#include "nilkex/group.hpp"
#include "nilkex/integer.hpp"

namespace nilkex {

// Coefficient ring of UT(n, R): the integers, Z/mZ, or a prime field F_p
// (represented as Z/pZ with a certified prime modulus).
class Ring {
 public:
  enum class Kind { kIntegers, kIntegersMod, kPrimeField };

  static Ring integers() { return Ring(Kind::kIntegers, 0); }

  static Ring integers_mod(Integer m) {
    if (m < 2) throw Error(Errc::kInvalidArgument, "modulus must be >= 2");
    return Ring(Kind::kIntegersMod, std::move(m));
  }

  static Ring prime_field(Integer p) {
    if (p < 2 || !is_probable_prime(p)) {
      throw Error(Errc::kInvalidArgument, nilkex::to_string(p) + " is not prime");
    }
    return Ring(Kind::kPrimeField, std::move(p));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_modular() const noexcept { return kind_ != Kind::kIntegers; }
  const Integer& modulus() const noexcept { return modulus_; }

  Integer reduce(const Integer& v) const {
    return is_modular() ? mod_floor(v, modulus_) : v;
  }

  bool is_canonical(const Integer& v) const {
    return !is_modular() || (sgn(v) >= 0 && v < modulus_);
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::kIntegers: return "Z";
      case Kind::kIntegersMod: return "Zmod " + nilkex::to_string(modulus_);
      case Kind::kPrimeField: return "Fp " + nilkex::to_string(modulus_);
    }
    return "?";
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Ring(Kind k, Integer m) : kind_(k), modulus_(std::move(m)) {}

  Kind kind_;
  Integer modulus_;
};

// Upper unitriangular n x n matrix; only the strictly upper entries are
// stored (row-major), the diagonal is implicitly 1.
class UTMatrix {
 public:
  UTMatrix(std::size_t n, Ring ring)
      : n_(n), ring_(std::move(ring)), upper_(n * (n - 1) / 2) {
    if (n < 2) throw Error(Errc::kInvalidArgument, "UT(n, R) needs n > 1");
  }

  std::size_t dimension() const noexcept { return n_; }
  const Ring& ring() const noexcept { return ring_; }

  // Entry (i, j), 0-based with i < j.
  const Integer& at(std::size_t i, std::size_t j) const {
    return upper_[index(i, j)];
  }

  void set(std::size_t i, std::size_t j, const Integer& v) {
    upper_[index(i, j)] = ring_.reduce(v);
  }

  // Entries (i, i + k) of band k >= 1.
  std::vector<Integer> band(std::size_t k) const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i + k < n_; ++i) out.push_back(at(i, i + k));
    return out;
  }

  // Smallest k with a nonzero entry in band k, or nullopt for the identity.
  std::optional<std::size_t> minimal_band() const {
    for (std::size_t k = 1; k < n_; ++k) {
      for (std::size_t i = 0; i + k < n_; ++i) {
        if (sgn(at(i, i + k)) != 0) return k;
      }
    }
    return std::nullopt;
  }

  bool is_identity() const {
    for (const auto& v : upper_) {
      if (sgn(v) != 0) return false;
    }
    return true;
  }

  const std::vector<Integer>& strict_upper() const noexcept { return upper_; }

  friend bool operator==(const UTMatrix& a, const UTMatrix& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.upper_ == b.upper_;
  }

 private:
  friend class UTGroup;

  std::size_t index(std::size_t i, std::size_t j) const {
    if (!(i < j && j < n_)) {
      throw Error(Errc::kOutOfRange, "entry (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) +
                                         ") is not strictly upper");
    }
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  std::size_t n_;
  Ring ring_;
  std::vector<Integer> upper_;
};

// UT(n, R), nilpotent of class n - 1.
class UTGroup {
 public:
  using element_type = UTMatrix;

  UTGroup(std::size_t n, Ring ring) : n_(n), ring_(std::move(ring)) {
    if (n < 2) throw Error(Errc::kInvalidArgument, "UT(n, R) needs n > 1");
  }

  std::size_t dimension() const noexcept { return n_; }
  const Ring& ring() const noexcept { return ring_; }

  UTMatrix identity() const { return UTMatrix(n_, ring_); }

  // I + v * e_ij (0-based).
  UTMatrix elementary(std::size_t i, std::size_t j, const Integer& v = 1) const {
    UTMatrix m = identity();
    m.set(i, j, v);
    return m;
  }

  // I + sum of the superdiagonal entries e_{i,i+1}.
  UTMatrix superdiagonal() const {
    UTMatrix m = identity();
    for (std::size_t i = 0; i + 1 < n_; ++i) m.set(i, i + 1, 1);
    return m;
  }

  // Builds a matrix from its strictly upper entries, row by row.
  UTMatrix from_rows(const std::vector<std::vector<Integer>>& rows) const {
    if (rows.size() != n_ - 1) {
      throw Error(Errc::kMismatch, "expected " + std::to_string(n_ - 1) +
                                       " rows of strictly upper entries");
    }
    UTMatrix m = identity();
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (rows[i].size() != n_ - 1 - i) {
        throw Error(Errc::kMismatch, "row " + std::to_string(i + 1) +
                                         " needs " +
                                         std::to_string(n_ - 1 - i) +
                                         " entries");
      }
      for (std::size_t j = i + 1; j < n_; ++j) m.set(i, j, rows[i][j - i - 1]);
    }
    return m;
  }

  UTMatrix multiply(const UTMatrix& a, const UTMatrix& b) const {
    check(a);
    check(b);
    UTMatrix c = identity();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        Integer v = a.at(i, j) + b.at(i, j);
        for (std::size_t k = i + 1; k < j; ++k) v += a.at(i, k) * b.at(k, j);
        c.set(i, j, v);
      }
    }
    return c;
  }

  // (I + N)^-1 = I - N + N^2 - ... with N^n = 0.
  UTMatrix inverse(const UTMatrix& a) const {
    check(a);
    return unipotent_power(a, Integer(-1));
  }

  // (I + N)^k = sum_{d < n} C(k, d) N^d, valid for every integer k because N
  // is nilpotent; n - 2 matrix products regardless of |k|.
  UTMatrix power(const UTMatrix& a, const Integer& k) const {
    check(a);
    if (sgn(k) == 0) return identity();
    if (k == 1) return a;
    return unipotent_power(a, k);
  }

  std::string encode(const UTMatrix& a) const;
  UTMatrix decode(std::string_view text) const;

  std::uint64_t power_cost(const Integer& k) const {
    if (sgn(k) == 0 || k == 1 || n_ < 3) return 0;
    return n_ - 2;
  }

  bool torsion_free() const { return !ring_.is_modular(); }

  // Order of I + J (J the superdiagonal shift), which every element's order
  // divides; a multiple of it when the modulus resists trial division.
  std::optional<Integer> period() const;

  // Entries uniform in [-bound, bound] over Z and in [0, m) otherwise.
  UTMatrix random(Rng& rng, const Integer& bound) const {
    if (bound < 1) throw Error(Errc::kInvalidArgument, "bound must be >= 1");
    UTMatrix m = identity();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        m.set(i, j,
              ring_.is_modular() ? rng.uniform(0, ring_.modulus() - 1)
                                 : rng.uniform(-bound, bound));
      }
    }
    return m;
  }

  friend bool operator==(const UTGroup& a, const UTGroup& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_;
  }

 private:
  void check(const UTMatrix& a) const {
    if (a.dimension() != n_ || !(a.ring() == ring_)) {
      throw Error(Errc::kMismatch, "matrix of UT(" +
                                       std::to_string(a.dimension()) + ", " +
                                       a.ring().to_string() +
                                       ") used in UT(" + std::to_string(n_) +
                                       ", " + ring_.to_string() + ")");
    }
  }

  // Strictly upper product P Q.
  std::vector<Integer> strict_product(const std::vector<Integer>& p,
                                      const std::vector<Integer>& q) const {
    UTMatrix pm = identity(), qm = identity(), out = identity();
    pm.upper_ = p;
    qm.upper_ = q;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 2; j < n_; ++j) {
        Integer v = 0;
        for (std::size_t k = i + 1; k < j; ++k) v += pm.at(i, k) * qm.at(k, j);
        out.set(i, j, v);
      }
    }
    return out.upper_;
  }

  UTMatrix unipotent_power(const UTMatrix& a, const Integer& k) const {
    const std::vector<Integer>& nil = a.upper_;
    std::vector<Integer> acc(nil.size());
    std::vector<Integer> term = nil;
    for (std::size_t d = 1; d < n_; ++d) {
      if (d > 1) term = strict_product(term, nil);
      Integer c = binomial(k, d);
      for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += c * term[t];
    }
    UTMatrix out = identity();
    for (std::size_t t = 0; t < acc.size(); ++t) {
      out.upper_[t] = ring_.reduce(acc[t]);
    }
    return out;
  }

  std::size_t n_;
  Ring ring_;
};

// Deterministic sample for a fixed seed.
inline UTMatrix ut_random(const UTGroup& group, std::uint64_t seed,
                          const Integer& bound) {
  Rng rng(seed);
  return group.random(rng, bound);
}

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

// Header "ut <n> <ring>" with ring "Z", "Zmod <m>" or "Fp <p>".
inline UTGroup parse_ut_header(std::string_view header) {
  auto toks = detail::split_ws(header);
  auto fail = [&](const std::string& why) -> UTGroup {
    throw ParseError(1, 1, "bad UT header '" + std::string(header) + "': " + why);
  };
  if (toks.size() < 3 || toks[0] != "ut") return fail("expected 'ut <n> <ring>'");
  std::size_t n = 0;
  try {
    n = std::stoul(toks[1]);
  } catch (const std::exception&) {
    return fail("dimension is not a number");
  }
  if (n < 2) return fail("dimension must exceed 1");
  if (toks[2] == "Z" && toks.size() == 3) return UTGroup(n, Ring::integers());
  if (toks.size() != 4) return fail("unknown ring");
  Integer m = parse_integer(toks[3]);
  if (toks[2] == "Zmod") return UTGroup(n, Ring::integers_mod(m));
  if (toks[2] == "Fp") return UTGroup(n, Ring::prime_field(m));
  return fail("unknown ring '" + toks[2] + "'");
}

inline std::string ut_header(const UTGroup& g) {
  return "ut " + std::to_string(g.dimension()) + " " + g.ring().to_string();
}

inline std::string UTGroup::encode(const UTMatrix& a) const {
  check(a);
  std::string out = ut_header(*this);
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    out += "\n";
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (j > i + 1) out += " ";
      out += to_string(a.at(i, j));
    }
  }
  return out;
}

inline UTMatrix UTGroup::decode(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (!detail::split_ws(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) throw ParseError(1, 1, "empty matrix text");
  if (!(parse_ut_header(lines[0]) == *this)) {
    throw Error(Errc::kMismatch, "matrix header '" + lines[0] +
                                     "' does not match " + ut_header(*this));
  }
  if (lines.size() != n_) {
    throw ParseError(lines.size() + 1, 1,
                     "expected " + std::to_string(n_ - 1) + " entry rows");
  }
  std::vector<std::vector<Integer>> rows;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    std::vector<Integer> row;
    for (const auto& tok : detail::split_ws(lines[r])) {
      Integer v = parse_integer(tok);
      if (!ring_.is_canonical(v)) {
        throw ParseError(Errc::kOutOfRange, r + 1, 1,
                         "entry " + tok + " outside [0, " +
                             to_string(ring_.modulus()) + ")");
      }
      row.push_back(v);
    }
    if (row.size() != n_ - r) {
      throw ParseError(r + 1, 1, "row needs " + std::to_string(n_ - r) +
                                     " entries");
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

// Factors m by trial division up to `limit`; returns nullopt if a cofactor
// above the limit is not a probable prime.
inline std::optional<Integer> UTGroup::period() const {
  if (!ring_.is_modular()) return std::nullopt;
  // C(t, d) = 0 mod m for 1 <= d < n  <=>  (I + J)^t = I.
  auto kills = [&](const Integer& t) {
    for (std::size_t d = 1; d < n_; ++d) {
      if (mod_floor(binomial(t, d), ring_.modulus()) != 0) return false;
    }
    return true;
  };
  Integer fact = 1;
  for (std::size_t d = 2; d < n_; ++d) fact *= static_cast<unsigned long>(d);
  Integer t = ring_.modulus() * fact;
  auto primes = small_prime_factors(t);
  if (!primes) return t;
  for (const auto& p : *primes) {
    while (mod_floor(t, p) == 0 && kills(t / p)) t /= p;
  }
  return t;
}

}  // namespace nilkex

#endif  // NILKEX_UNITRIANGULAR_HPP_
