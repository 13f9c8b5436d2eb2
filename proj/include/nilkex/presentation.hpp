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

#ifndef NILKEX_PRESENTATION_HPP_
#define NILKEX_PRESENTATION_HPP_

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilkex/error.hpp"
#include "nilkex/integer.hpp"

namespace nilkex {

// Relative order s_i of a polycyclic generator: a positive integer or
// infinite.
class RelativeOrder {
 public:
  static RelativeOrder infinite() { return RelativeOrder(); }
  static RelativeOrder finite(Integer s) {
    if (sgn(s) <= 0) {
      throw Error(Errc::kOutOfRange, "relative order must be positive");
    }
    return RelativeOrder(std::move(s));
  }

  bool is_finite() const noexcept { return value_.has_value(); }
  const Integer& value() const { return *value_; }

  std::string to_string() const {
    return value_ ? nilkex::to_string(*value_) : "inf";
  }

  friend bool operator==(const RelativeOrder& a, const RelativeOrder& b) {
    if (a.is_finite() != b.is_finite()) return false;
    return !a.is_finite() || a.value() == b.value();
  }

 private:
  RelativeOrder() = default;
  explicit RelativeOrder(Integer s) : value_(std::move(s)) {}

  std::optional<Integer> value_;
};

// Exponents (e_1, ..., e_n) of a normal form x_1^e_1 ... x_n^e_n.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n) {}
  explicit ExponentVector(std::vector<Integer> e) : e_(std::move(e)) {}
  ExponentVector(std::initializer_list<long> init) {
    e_.reserve(init.size());
    for (long v : init) e_.emplace_back(v);
  }

  static ExponentVector unit(std::size_t n, std::size_t i,
                             const Integer& exp = 1) {
    ExponentVector v(n);
    v.e_[i] = exp;
    return v;
  }

  std::size_t size() const noexcept { return e_.size(); }
  const Integer& operator[](std::size_t i) const { return e_[i]; }
  Integer& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<Integer>& values() const noexcept { return e_; }

  bool is_zero() const {
    for (const auto& v : e_) {
      if (sgn(v) != 0) return false;
    }
    return true;
  }

  // Index of the first nonzero exponent, or size() for the identity.
  std::size_t depth() const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (sgn(e_[i]) != 0) return i;
    }
    return e_.size();
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) out += ",";
      out += nilkex::to_string(e_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ == b.e_;
  }

 private:
  std::vector<Integer> e_;
};

// One letter x_i^e of an unreduced word (0-based generator index).
struct Syllable {
  std::size_t generator;
  Integer exponent;
};

using Word = std::vector<Syllable>;

// Parses "1^2 3^-1 2" (1-based generators, exponent defaults to 1).
inline Word parse_word(std::string_view text);

// A nilpotent presentation on generators x_1..x_n (stored 0-based) with
// power relations x_i^{s_i} = x_{i+1}^{a_{i,i+1}} ... and conjugation
// relations x_j^{-1} x_i x_j = x_i * tail, x_j x_i x_j^{-1} = x_i * tail'
// for j < i.  Every right-hand side lives in the span of x_{i+1}..x_n.
class NilpotentPresentation {
 public:
  NilpotentPresentation() = default;

  explicit NilpotentPresentation(std::vector<RelativeOrder> orders)
      : orders_(std::move(orders)) {
    const std::size_t n = orders_.size();
    if (n == 0) {
      throw Error(Errc::kInvalidArgument, "presentation needs a generator");
    }
    power_.assign(n, ExponentVector(n));
    conj_.assign(n, std::vector<ExponentVector>(n, ExponentVector(n)));
    conj_inv_ = conj_;
  }

  std::size_t generator_count() const noexcept { return orders_.size(); }
  const std::vector<RelativeOrder>& relative_orders() const noexcept {
    return orders_;
  }
  const RelativeOrder& relative_order(std::size_t i) const {
    return orders_.at(i);
  }

  // Right-hand side of x_i^{s_i}; zero vector when s_i is infinite.
  const ExponentVector& power_rhs(std::size_t i) const { return power_.at(i); }
  // tail with x_j^{-1} x_i x_j = x_i * tail (j < i).
  const ExponentVector& conjugate_rhs(std::size_t j, std::size_t i) const {
    return conj_.at(j).at(i);
  }
  // tail with x_j x_i x_j^{-1} = x_i * tail (j < i).
  const ExponentVector& conjugate_inverse_rhs(std::size_t j,
                                              std::size_t i) const {
    return conj_inv_.at(j).at(i);
  }

  void set_power(std::size_t i, ExponentVector rhs) {
    check_index(i);
    if (!orders_[i].is_finite()) {
      throw Error(Errc::kInvalidArgument,
                  "power relation for infinite generator " + name(i));
    }
    check_rhs(i, rhs);
    power_[i] = std::move(rhs);
  }

  void set_conjugate(std::size_t j, std::size_t i, ExponentVector tail) {
    check_pair(j, i);
    check_rhs(i, tail);
    conj_[j][i] = std::move(tail);
  }

  void set_conjugate_inverse(std::size_t j, std::size_t i,
                             ExponentVector tail) {
    check_pair(j, i);
    check_rhs(i, tail);
    conj_inv_[j][i] = std::move(tail);
  }

  bool all_finite() const {
    for (const auto& s : orders_) {
      if (!s.is_finite()) return false;
    }
    return true;
  }

  bool all_infinite() const {
    for (const auto& s : orders_) {
      if (s.is_finite()) return false;
    }
    return true;
  }

  friend bool operator==(const NilpotentPresentation& a,
                         const NilpotentPresentation& b) {
    return a.orders_ == b.orders_ && a.power_ == b.power_ &&
           a.conj_ == b.conj_ && a.conj_inv_ == b.conj_inv_;
  }

  static std::string name(std::size_t i) { return "x" + std::to_string(i + 1); }

 private:
  void check_index(std::size_t i) const {
    if (i >= orders_.size()) {
      throw Error(Errc::kOutOfRange, "no generator " + name(i));
    }
  }

  void check_pair(std::size_t j, std::size_t i) const {
    check_index(i);
    check_index(j);
    if (j >= i) {
      throw Error(Errc::kNonTriangular,
                  "conjugation relation needs j < i, got " + name(j) +
                      " acting on " + name(i));
    }
  }

  void check_rhs(std::size_t i, const ExponentVector& rhs) const {
    if (rhs.size() != orders_.size()) {
      throw Error(Errc::kInvalidArgument, "right-hand side has wrong length");
    }
    for (std::size_t k = 0; k <= i; ++k) {
      if (sgn(rhs[k]) != 0) {
        throw Error(Errc::kNonTriangular, "relation of " + name(i) +
                                              " involves " + name(k) +
                                              " on the right-hand side");
      }
    }
    for (std::size_t k = i + 1; k < rhs.size(); ++k) {
      if (orders_[k].is_finite() &&
          (sgn(rhs[k]) < 0 || rhs[k] >= orders_[k].value())) {
        throw Error(Errc::kOutOfRange,
                    "exponent " + to_string(rhs[k]) + " of " + name(k) +
                        " outside [0, " + orders_[k].to_string() + ")");
      }
    }
  }

  std::vector<RelativeOrder> orders_;
  std::vector<ExponentVector> power_;
  std::vector<std::vector<ExponentVector>> conj_;
  std::vector<std::vector<ExponentVector>> conj_inv_;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == ':') {
      out.push_back({":", i + 1});
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' && line[i] != ':' &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

inline bool is_decimal(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

inline std::size_t parse_index(const Token& t, std::size_t line,
                               std::size_t n) {
  if (!is_decimal(t.text, false)) {
    throw ParseError(line, t.column, "expected generator index, got '" +
                                         t.text + "'");
  }
  Integer v(t.text);
  if (v < 1 || v > Integer(static_cast<unsigned long>(n))) {
    throw ParseError(Errc::kOutOfRange, line, t.column,
                     "generator index " + t.text + " outside [1, " +
                         std::to_string(n) + "]");
  }
  return v.get_ui() - 1;
}

// Parses "k^e" / "k" terms into a dense vector, enforcing increasing indices.
inline ExponentVector parse_terms(const std::vector<Token>& toks,
                                  std::size_t from, std::size_t line,
                                  std::size_t n, std::size_t rel_index) {
  ExponentVector v(n);
  std::optional<std::size_t> last;
  for (std::size_t t = from; t < toks.size(); ++t) {
    const Token& tok = toks[t];
    std::string gen = tok.text;
    std::string exp = "1";
    if (auto caret = tok.text.find('^'); caret != std::string::npos) {
      gen = tok.text.substr(0, caret);
      exp = tok.text.substr(caret + 1);
    }
    if (!is_decimal(exp, true)) {
      throw ParseError(line, tok.column, "bad exponent in '" + tok.text + "'");
    }
    std::size_t k = parse_index({gen, tok.column}, line, n);
    if (k <= rel_index) {
      throw ParseError(Errc::kNonTriangular, line, tok.column,
                       "relation of " + NilpotentPresentation::name(rel_index) +
                           " involves " + NilpotentPresentation::name(k) +
                           " on the right-hand side");
    }
    if (last && k <= *last) {
      throw ParseError(line, tok.column,
                       "right-hand side generators must increase");
    }
    last = k;
    v[k] = parse_integer(exp);
  }
  return v;
}

inline std::string format_terms(const ExponentVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    out += " " + std::to_string(k + 1) + "^" + to_string(v[k]);
  }
  return out;
}

}  // namespace detail

inline Word parse_word(std::string_view text) {
  Word w;
  for (const auto& tok : detail::tokenize_line(text)) {
    std::string gen = tok.text;
    std::string exp = "1";
    if (auto caret = tok.text.find('^'); caret != std::string::npos) {
      gen = tok.text.substr(0, caret);
      exp = tok.text.substr(caret + 1);
    }
    if (!detail::is_decimal(gen, false) || !detail::is_decimal(exp, true)) {
      throw ParseError(1, tok.column, "bad word syllable '" + tok.text + "'");
    }
    unsigned long g = std::stoul(gen);
    if (g == 0) throw ParseError(1, tok.column, "generators are 1-based");
    w.push_back({g - 1, parse_integer(exp)});
  }
  return w;
}

// Reads the text presentation format:
//   ngens <n>
//   orders s1 ... sn          (inf for infinite)
//   pow i : k^e ...
//   conj j i : k^e ...        x_j^-1 x_i x_j = x_i x_k^e ...
//   conjinv j i : k^e ...     x_j x_i x_j^-1 = x_i x_k^e ...
// '#' starts a comment; omitted relations are trivial.
inline NilpotentPresentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> ngens;
  std::optional<NilpotentPresentation> pres;
  std::vector<std::vector<bool>> seen_conj, seen_conj_inv;
  std::vector<bool> seen_pow;

  auto need_pres = [&](const detail::Token& t) -> NilpotentPresentation& {
    if (!pres) {
      throw ParseError(line_no, t.column,
                       "'" + t.text + "' before 'ngens' and 'orders'");
    }
    return *pres;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = detail::tokenize_line(raw);
    if (toks.empty()) continue;
    const auto& kw = toks[0];
    if (kw.text == "ngens") {
      if (ngens) throw ParseError(line_no, kw.column, "duplicate 'ngens'");
      if (toks.size() != 2 || !detail::is_decimal(toks[1].text, false)) {
        throw ParseError(line_no, kw.column, "expected 'ngens <n>'");
      }
      unsigned long n = std::stoul(toks[1].text);
      if (n == 0) {
        throw ParseError(line_no, toks[1].column, "ngens must be positive");
      }
      ngens = n;
    } else if (kw.text == "orders") {
      if (!ngens) throw ParseError(line_no, kw.column, "'orders' before 'ngens'");
      if (pres) throw ParseError(line_no, kw.column, "duplicate 'orders'");
      if (toks.size() != *ngens + 1) {
        throw ParseError(line_no, kw.column,
                         "expected " + std::to_string(*ngens) +
                             " relative orders");
      }
      std::vector<RelativeOrder> orders;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        if (toks[t].text == "inf") {
          orders.push_back(RelativeOrder::infinite());
        } else if (detail::is_decimal(toks[t].text, false) &&
                   Integer(toks[t].text) >= 1) {
          orders.push_back(RelativeOrder::finite(Integer(toks[t].text)));
        } else {
          throw ParseError(Errc::kOutOfRange, line_no, toks[t].column,
                           "relative order must be 'inf' or >= 1");
        }
      }
      pres.emplace(std::move(orders));
      seen_pow.assign(*ngens, false);
      seen_conj.assign(*ngens, std::vector<bool>(*ngens, false));
      seen_conj_inv = seen_conj;
    } else if (kw.text == "pow") {
      auto& p = need_pres(kw);
      if (toks.size() < 3 || toks[2].text != ":") {
        throw ParseError(line_no, kw.column, "expected 'pow i : terms'");
      }
      std::size_t i = detail::parse_index(toks[1], line_no, *ngens);
      if (!p.relative_order(i).is_finite()) {
        throw ParseError(line_no, toks[1].column,
                         "power relation for infinite generator");
      }
      if (seen_pow[i]) throw ParseError(line_no, kw.column, "duplicate relation");
      seen_pow[i] = true;
      auto rhs = detail::parse_terms(toks, 3, line_no, *ngens, i);
      try {
        p.set_power(i, std::move(rhs));
      } catch (const Error& e) {
        throw ParseError(e.code(), line_no, kw.column, e.what());
      }
    } else if (kw.text == "conj" || kw.text == "conjinv") {
      auto& p = need_pres(kw);
      if (toks.size() < 4 || toks[3].text != ":") {
        throw ParseError(line_no, kw.column,
                         "expected '" + kw.text + " j i : terms'");
      }
      std::size_t j = detail::parse_index(toks[1], line_no, *ngens);
      std::size_t i = detail::parse_index(toks[2], line_no, *ngens);
      if (j >= i) {
        throw ParseError(Errc::kNonTriangular, line_no, toks[1].column,
                         "conjugation relation needs j < i");
      }
      auto& seen = kw.text == "conj" ? seen_conj : seen_conj_inv;
      if (seen[j][i]) throw ParseError(line_no, kw.column, "duplicate relation");
      seen[j][i] = true;
      auto tail = detail::parse_terms(toks, 4, line_no, *ngens, i);
      try {
        if (kw.text == "conj") {
          p.set_conjugate(j, i, std::move(tail));
        } else {
          p.set_conjugate_inverse(j, i, std::move(tail));
        }
      } catch (const Error& e) {
        throw ParseError(e.code(), line_no, kw.column, e.what());
      }
    } else {
      throw ParseError(line_no, kw.column, "unknown keyword '" + kw.text + "'");
    }
  }
  if (!pres) throw ParseError(line_no + 1, 1, "missing 'ngens'/'orders'");
  return std::move(*pres);
}

// Canonical text: nontrivial relations only, ordered by (i, j) with the power
// relation of x_i first.
inline std::string emit_presentation(const NilpotentPresentation& p) {
  const std::size_t n = p.generator_count();
  std::string out = "ngens " + std::to_string(n) + "\norders";
  for (const auto& s : p.relative_orders()) out += " " + s.to_string();
  out += "\n";
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.power_rhs(i).is_zero()) {
      out += "pow " + std::to_string(i + 1) + " :" +
             detail::format_terms(p.power_rhs(i)) + "\n";
    }
    for (std::size_t j = 0; j < i; ++j) {
      const std::string pair = std::to_string(j + 1) + " " + std::to_string(i + 1);
      if (!p.conjugate_rhs(j, i).is_zero()) {
        out += "conj " + pair + " :" +
               detail::format_terms(p.conjugate_rhs(j, i)) + "\n";
      }
      if (!p.conjugate_inverse_rhs(j, i).is_zero()) {
        out += "conjinv " + pair + " :" +
               detail::format_terms(p.conjugate_inverse_rhs(j, i)) + "\n";
      }
    }
  }
  return out;
}

}  // namespace nilkex

#endif  // NILKEX_PRESENTATION_HPP_
