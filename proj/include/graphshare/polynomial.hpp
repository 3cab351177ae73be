// Copyright 2026 The graphshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Sparse multivariate polynomials over Z_p in the variables t[v,s]
// (vertex v, color s).

#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graphshare/error.hpp"
#include "graphshare/graph.hpp"

namespace graphshare {

using FieldElement = std::uint32_t;

inline bool IsPrime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline void CheckPrime(std::uint32_t p) {
  if (!IsPrime(p)) {
    throw Error(ErrorKind::kInvalidArgument, std::to_string(p) + " is not prime");
  }
}

struct Variable {
  Vertex vertex = 0;
  int color = 0;

  auto operator<=>(const Variable&) const = default;
};

// Strictly increasing variables, exponents >= 1. Empty = constant monomial.
using Monomial = std::vector<std::pair<Variable, int>>;
using Point = std::map<Variable, FieldElement>;

inline Monomial MultiplyMonomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

class SparsePolynomial {
 public:
  explicit SparsePolynomial(FieldElement p = 2) : p_(p) { CheckPrime(p); }

  static SparsePolynomial Constant(FieldElement p, std::uint64_t c) {
    SparsePolynomial out(p);
    out.AddTerm({}, c);
    return out;
  }

  static SparsePolynomial Var(FieldElement p, Variable v) {
    SparsePolynomial out(p);
    out.AddTerm({{v, 1}}, 1);
    return out;
  }

  FieldElement modulus() const { return p_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int TotalDegree() const {
    int best = 0;
    for (const auto& [mono, coeff] : terms_) {
      int d = 0;
      for (const auto& factor : mono) d += factor.second;
      best = std::max(best, d);
    }
    return best;
  }

  // Adds coeff * mono; `mono` must be canonical.
  void AddTerm(const Monomial& mono, std::uint64_t coeff) {
    const FieldElement c = static_cast<FieldElement>(coeff % p_);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
      it->second = static_cast<FieldElement>((std::uint64_t{it->second} + c) % p_);
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
    CheckSameField(a, b);
    SparsePolynomial out = a;
    for (const auto& [mono, coeff] : b.terms_) out.AddTerm(mono, coeff);
    return out;
  }

  friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) {
    CheckSameField(a, b);
    SparsePolynomial out = a;
    for (const auto& [mono, coeff] : b.terms_) out.AddTerm(mono, a.p_ - coeff);
    return out;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    CheckSameField(a, b);
    SparsePolynomial out(a.p_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        out.AddTerm(MultiplyMonomials(ma, mb), std::uint64_t{ca} * cb);
      }
    }
    return out;
  }

  FieldElement Eval(const Point& point) const {
    std::uint64_t total = 0;
    for (const auto& [mono, coeff] : terms_) {
      std::uint64_t term = coeff;
      for (const auto& [var, exponent] : mono) {
        auto it = point.find(var);
        if (it == point.end()) {
          throw Error(ErrorKind::kMissingVariable,
                      "no value for t[" + std::to_string(var.vertex + 1) + "," +
                          std::to_string(var.color) + "]");
        }
        const std::uint64_t x = it->second % p_;
        for (int e = 0; e < exponent; ++e) term = term * x % p_;
      }
      total = (total + term) % p_;
    }
    return static_cast<FieldElement>(total);
  }

  // Terms in canonical (monomial) order joined by '+', each rendered as
  // coeff*t[v,s]^e*..., with 1-based v and ^e omitted for e = 1.
  std::string Render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : terms_) {
      if (!out.empty()) out += '+';
      out += std::to_string(coeff);
      for (const auto& [var, exponent] : mono) {
        out += "*t[" + std::to_string(var.vertex + 1) + "," + std::to_string(var.color) + "]";
        if (exponent != 1) out += "^" + std::to_string(exponent);
      }
    }
    return out;
  }

  static SparsePolynomial Parse(const std::string& text, FieldElement p);

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  static void CheckSameField(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.p_ != b.p_) {
      throw Error(ErrorKind::kInvalidArgument, "polynomials over different fields");
    }
  }

  FieldElement p_;
  std::map<Monomial, FieldElement> terms_;
};

namespace internal {

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, FieldElement p) : text_(text), p_(p) {}

  SparsePolynomial Run() {
    SparsePolynomial out(p_);
    SkipSpace();
    if (AtEnd()) Fail("empty polynomial");
    while (true) {
      ParseTerm(out);
      SkipSpace();
      if (AtEnd()) break;
      Expect('+');
    }
    return out;
  }

 private:
  void ParseTerm(SparsePolynomial& out) {
    std::uint64_t coeff = 1;
    Monomial mono;
    bool first = true;
    while (true) {
      SkipSpace();
      if (Peek() == 't') {
        const auto [var, exponent] = ParseFactor();
        mono = MultiplyMonomials(mono, Monomial{{var, exponent}});
      } else if (first && std::isdigit(static_cast<unsigned char>(Peek()))) {
        coeff = ParseNumber() % p_;
      } else {
        Fail("expected coefficient or t[v,s]");
      }
      first = false;
      SkipSpace();
      if (Peek() != '*') break;
      ++pos_;
    }
    out.AddTerm(mono, coeff);
  }

  std::pair<Variable, int> ParseFactor() {
    Expect('t');
    Expect('[');
    const std::uint64_t v = ParseNumber();
    Expect(',');
    const std::uint64_t s = ParseNumber();
    Expect(']');
    if (v < 1) Fail("vertex indices are 1-based");
    if (s > 2) Fail("color index must be 0, 1 or 2");
    int exponent = 1;
    SkipSpace();
    if (Peek() == '^') {
      ++pos_;
      const std::uint64_t e = ParseNumber();
      if (e < 1) Fail("exponent must be >= 1");
      exponent = static_cast<int>(e);
    }
    return {Variable{static_cast<Vertex>(v - 1), static_cast<int>(s)}, exponent};
  }

  std::uint64_t ParseNumber() {
    SkipSpace();
    if (!std::isdigit(static_cast<unsigned char>(Peek()))) Fail("expected a number");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(Peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (value > 0xffffffffULL) Fail("number too large");
    }
    return value;
  }

  void Expect(char c) {
    SkipSpace();
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return AtEnd() ? '\0' : text_[pos_]; }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorKind::kParse, what + " at offset " + std::to_string(pos_));
  }

  const std::string& text_;
  FieldElement p_;
  std::size_t pos_ = 0;
};

}  // namespace internal

inline SparsePolynomial SparsePolynomial::Parse(const std::string& text, FieldElement p) {
  CheckPrime(p);
  return internal::PolynomialParser(text, p).Run();
}

}  // namespace graphshare
