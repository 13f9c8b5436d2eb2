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

#ifndef NILKEX_COLLECTOR_HPP_
#define NILKEX_COLLECTOR_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilkex/error.hpp"
#include "nilkex/group.hpp"
#include "nilkex/integer.hpp"
#include "nilkex/presentation.hpp"

namespace nilkex {

// Group arithmetic on normal forms of a nilpotent presentation.
//
// Words are collected from the left: the collected prefix is kept as an
// exponent vector and each incoming syllable x_i^k is moved past the part of
// the prefix above x_i by conjugating that part with x_i^k.  Conjugation by a
// power of x_i is evaluated as a power of the automorphism "conjugate by x_i"
// of <x_{i+1}, ..., x_n>, which keeps the cost logarithmic in |k|.  Power
// relations renormalize each exponent into [0, s_i) as soon as it is touched.
// Every recursive call works in a strictly deeper subgroup, so collection
// terminates.
class PcGroup {
 public:
  using element_type = ExponentVector;

  explicit PcGroup(NilpotentPresentation pres)
      : impl_(std::make_shared<Impl>(std::move(pres))) {
    build_tables();
  }

  const NilpotentPresentation& presentation() const { return impl_->pres; }
  std::size_t rank() const { return impl_->pres.generator_count(); }

  ExponentVector identity() const { return ExponentVector(rank()); }

  // Normal form of the generator x_i (0-based).
  ExponentVector generator(std::size_t i) const {
    if (i >= rank()) throw Error(Errc::kOutOfRange, "no such generator");
    ExponentVector e = identity();
    mul_syllable(e, i, Integer(1));
    return e;
  }

  ExponentVector collect(const Word& w) const {
    ExponentVector e = identity();
    for (const auto& s : w) {
      if (s.generator >= rank()) {
        throw Error(Errc::kOutOfRange,
                    "word uses generator " + std::to_string(s.generator + 1) +
                        " of a rank-" + std::to_string(rank()) +
                        " presentation");
      }
      mul_syllable(e, s.generator, s.exponent);
    }
    return e;
  }

  ExponentVector multiply(const ExponentVector& a,
                          const ExponentVector& b) const {
    check(a);
    check(b);
    return mul(a, b);
  }

  ExponentVector inverse(const ExponentVector& a) const {
    check(a);
    return inv(a);
  }

  ExponentVector power(const ExponentVector& a, const Integer& k) const {
    check(a);
    return pow(a, k);
  }

  bool is_normal_form(const ExponentVector& a) const {
    if (a.size() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i) {
      const auto& s = impl_->pres.relative_order(i);
      if (s.is_finite() && (sgn(a[i]) < 0 || a[i] >= s.value())) return false;
    }
    return true;
  }

  std::string encode(const ExponentVector& a) const { return a.to_string(); }
  std::uint64_t power_cost(const Integer& k) const {
    return binary_power_cost(k);
  }

  // A consistent nilpotent presentation with only infinite relative orders
  // defines a torsion-free group.
  bool torsion_free() const { return impl_->pres.all_infinite(); }

  // Order of the group when every relative order is finite.
  std::optional<Integer> period() const {
    if (!impl_->pres.all_finite()) return std::nullopt;
    Integer order = 1;
    for (const auto& s : impl_->pres.relative_orders()) order *= s.value();
    return order;
  }

  // Index t such that <x_t, ..., x_n> is abelian.
  std::size_t abelian_from() const { return impl_->abelian_from; }

 private:
  using Images = std::vector<ExponentVector>;

  struct Impl {
    explicit Impl(NilpotentPresentation p) : pres(std::move(p)) {}
    NilpotentPresentation pres;
    // forward[i][m] = x_i^-1 x_m x_i and backward[i][m] = x_i x_m x_i^-1 as
    // normal forms, for m > i.
    std::vector<Images> forward;
    std::vector<Images> backward;
    std::vector<bool> acts;  // conjugation by x_i is nontrivial above i
    std::size_t abelian_from = 0;
  };

  void check(const ExponentVector& a) const {
    if (a.size() != rank()) {
      throw Error(Errc::kMismatch, "exponent vector of length " +
                                       std::to_string(a.size()) +
                                       " in a rank-" + std::to_string(rank()) +
                                       " group");
    }
  }

  void build_tables() {
    Impl& im = *impl_;
    const std::size_t n = rank();
    im.forward.assign(n, Images(n, ExponentVector(n)));
    im.backward = im.forward;
    im.acts.assign(n, false);
    im.abelian_from = n;
    for (std::size_t t = n; t-- > 0;) {
      bool ok = true;
      for (std::size_t i = t + 1; i < n && ok; ++i) {
        ok = im.pres.conjugate_rhs(t, i).is_zero() &&
             im.pres.conjugate_inverse_rhs(t, i).is_zero();
      }
      if (!ok) break;
      im.abelian_from = t;
    }
    // Deeper generators first: images of x_m only need arithmetic in the
    // subgroup below x_m, whose tables are complete by then.
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t m = i + 1; m < n; ++m) {
        const auto& f = im.pres.conjugate_rhs(i, m);
        const auto& b = im.pres.conjugate_inverse_rhs(i, m);
        im.forward[i][m] = mul(generator(m), f);
        im.backward[i][m] = mul(generator(m), b);
        if (!f.is_zero() || !b.is_zero()) im.acts[i] = true;
      }
    }
  }

  bool in_abelian_tail(const ExponentVector& a) const {
    return a.depth() >= impl_->abelian_from;
  }

  // Carries exponents of an element of the abelian tail into range.
  void normalize_abelian(ExponentVector& v) const {
    const auto& p = impl_->pres;
    for (std::size_t m = impl_->abelian_from; m < rank(); ++m) {
      const auto& s = p.relative_order(m);
      if (!s.is_finite()) continue;
      Integer q, r;
      floor_divmod(v[m], s.value(), q, r);
      v[m] = r;
      if (sgn(q) == 0) continue;
      const auto& w = p.power_rhs(m);
      for (std::size_t l = m + 1; l < rank(); ++l) {
        if (sgn(w[l]) != 0) v[l] += q * w[l];
      }
    }
  }

  ExponentVector mul(const ExponentVector& a, const ExponentVector& b) const {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    if (in_abelian_tail(a) && in_abelian_tail(b)) {
      ExponentVector s = a;
      for (std::size_t m = 0; m < rank(); ++m) s[m] += b[m];
      normalize_abelian(s);
      return s;
    }
    ExponentVector e = a;
    for (std::size_t i = b.depth(); i < rank(); ++i) {
      if (sgn(b[i]) != 0) mul_syllable(e, i, b[i]);
    }
    return e;
  }

  ExponentVector inv(const ExponentVector& a) const {
    if (in_abelian_tail(a)) {
      ExponentVector s = a;
      for (std::size_t m = 0; m < rank(); ++m) s[m] = -s[m];
      normalize_abelian(s);
      return s;
    }
    ExponentVector e = identity();
    for (std::size_t i = rank(); i-- > 0;) {
      if (sgn(a[i]) != 0) mul_syllable(e, i, Integer(-a[i]));
    }
    return e;
  }

  ExponentVector pow(const ExponentVector& a, const Integer& k) const {
    if (in_abelian_tail(a)) {
      ExponentVector s = a;
      for (std::size_t m = 0; m < rank(); ++m) s[m] *= k;
      normalize_abelian(s);
      return s;
    }
    return binary_power(View{this}, a, k);
  }

  // Unchecked arithmetic for internal binary powering.
  struct View {
    const PcGroup* g;
    ExponentVector identity() const { return g->identity(); }
    ExponentVector multiply(const ExponentVector& a,
                            const ExponentVector& b) const {
      return g->mul(a, b);
    }
    ExponentVector inverse(const ExponentVector& a) const { return g->inv(a); }
  };

  // e <- e * x_i^k.
  void mul_syllable(ExponentVector& e, std::size_t i, const Integer& k) const {
    if (sgn(k) == 0) return;
    const std::size_t n = rank();
    const auto& p = impl_->pres;
    ExponentVector tail(n);
    bool has_tail = false;
    for (std::size_t m = i + 1; m < n; ++m) {
      if (sgn(e[m]) != 0) {
        tail[m] = e[m];
        has_tail = true;
      }
    }
    if (has_tail) tail = conjugate_by_power(tail, i, k);
    Integer t = e[i] + k;
    const auto& s = p.relative_order(i);
    if (s.is_finite()) {
      Integer q, r;
      floor_divmod(t, s.value(), q, r);
      e[i] = r;
      if (sgn(q) != 0 && !p.power_rhs(i).is_zero()) {
        tail = mul(pow(p.power_rhs(i), q), tail);
      }
    } else {
      e[i] = t;
    }
    for (std::size_t m = i + 1; m < n; ++m) e[m] = tail[m];
  }

  // x_i^-k u x_i^k for u in <x_{i+1}, ..., x_n>.
  ExponentVector conjugate_by_power(const ExponentVector& u, std::size_t i,
                                    const Integer& k) const {
    if (!impl_->acts[i] || u.is_zero()) return u;
    const auto& p = impl_->pres;
    const auto& s = p.relative_order(i);
    if (!s.is_finite()) return apply(automorphism_power(i, k), u, i);
    // x_i^k = x_i^r (x_i^s)^q with 0 <= r < s.
    Integer q, r;
    floor_divmod(k, s.value(), q, r);
    ExponentVector v = apply(automorphism_power(i, r), u, i);
    if (sgn(q) != 0 && !p.power_rhs(i).is_zero()) {
      ExponentVector w = pow(p.power_rhs(i), q);
      v = mul(mul(inv(w), v), w);
    }
    return v;
  }

  Images identity_images(std::size_t i) const {
    Images id(rank(), ExponentVector(rank()));
    for (std::size_t m = i + 1; m < rank(); ++m) id[m] = generator(m);
    return id;
  }

  // Images of x_{i+1}..x_n under conjugation by x_i^k.
  Images automorphism_power(std::size_t i, const Integer& k) const {
    if (sgn(k) == 0) return identity_images(i);
    const Images& base =
        sgn(k) > 0 ? impl_->forward[i] : impl_->backward[i];
    Integer e = abs(k);
    if (e == 1) return base;
    std::optional<Images> result;
    Images sq = base;
    const std::size_t bits = bit_length(e);
    for (std::size_t b = 0; b < bits; ++b) {
      if (mpz_tstbit(e.get_mpz_t(), b)) {
        result = result ? compose(*result, sq, i) : sq;
      }
      if (b + 1 < bits) sq = compose(sq, sq, i);
    }
    return *result;
  }

  // (alpha o beta)(x_m) = alpha(beta(x_m)).
  Images compose(const Images& alpha, const Images& beta, std::size_t i) const {
    Images out(rank(), ExponentVector(rank()));
    for (std::size_t m = i + 1; m < rank(); ++m) {
      out[m] = apply(alpha, beta[m], i);
    }
    return out;
  }

  ExponentVector apply(const Images& images, const ExponentVector& u,
                       std::size_t i) const {
    ExponentVector out = identity();
    for (std::size_t m = i + 1; m < rank(); ++m) {
      if (sgn(u[m]) != 0) out = mul(out, pow(images[m], u[m]));
    }
    return out;
  }

  std::shared_ptr<Impl> impl_;
};

}  // namespace nilkex

#endif  // NILKEX_COLLECTOR_HPP_
