/*
 *   Copyright 2026 the sgring authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sgring/canonical_sum.hpp"
#include "sgring/errors.hpp"
#include "sgring/numbers.hpp"
#include "sgring/semigroup.hpp"

namespace sgring::oracle {

/// Dense univariate polynomial with exact integer coefficients. Reference
/// model: the ring over (N>=1, +) is isomorphic to the polynomials with
/// zero constant term via n -> x^n.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero

  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial constant(Int v) {
    return IntPolynomial(std::vector<Int>{std::move(v)});
  }

  static IntPolynomial monomial(const Int& coeff, std::size_t degree) {
    std::vector<Int> c(degree + 1, Int(0));
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<Int>& coeffs() const { return c_; }

  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = a.coeff(i) + b.coeff(i);
    }
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<Int> c = a.c_;
    for (Int& v : c) {
      v = -v;
    }
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
      return IntPolynomial();
    }
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.c_ == b.c_;
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) {
      return "0";
    }
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Int& k = c_[i];
      if (sgn(k) == 0) {
        continue;
      }
      if (out.empty()) {
        if (sgn(k) < 0) {
          out += '-';
        }
      } else {
        out += sgn(k) < 0 ? '-' : '+';
      }
      Int a = abs(k);
      if (a != 1 || i == 0) {
        out += a.get_str();
      }
      if (i >= 1) {
        out += var;
        if (i > 1) {
          out += "^" + std::to_string(i);
        }
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.str();
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) {
      c_.pop_back();
    }
  }

  std::vector<Int> c_;  // c_[i] is the coefficient of var^i
};

/// Mirror map from the ring over (N>=1, +) onto polynomials with zero
/// constant term: coefficient c on element n becomes c*x^n.
inline IntPolynomial to_poly(const CanonicalSum<NaturalsAdd>& x) {
  IntPolynomial p;
  for (const auto& [n, c] : x.coeffs()) {
    p = p + IntPolynomial::monomial(c, static_cast<std::size_t>(n));
  }
  return p;
}

/// Inverse of to_poly; rejects polynomials with a nonzero constant term,
/// which lie outside the image.
inline CanonicalSum<NaturalsAdd> from_poly(const Handle<NaturalsAdd>& h,
                                           const IntPolynomial& p) {
  if (sgn(p.coeff(0)) != 0) {
    throw MalformedSpec("polynomial with nonzero constant term has no "
                        "preimage in the semigroup ring");
  }
  std::vector<std::pair<Nat, Int>> terms;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
    if (sgn(p.coeff(i)) != 0) {
      terms.emplace_back(static_cast<Nat>(i), p.coeff(i));
    }
  }
  return CanonicalSum<NaturalsAdd>(h, terms);
}

/// Exact rational function, numerator/denominator pair of integer
/// polynomials with nonzero denominator; equality by cross-multiplication.
/// Reference field for fractions over (N>=1, +) and the standard field
/// target for lifts.
class RatFunction {
 public:
  RatFunction() : num_(), den_(IntPolynomial::constant(Int(1))) {}

  RatFunction(IntPolynomial num, IntPolynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
      throw ZeroDenominator("rational function with denominator 0");
    }
  }

  static RatFunction zero() { return RatFunction(); }
  static RatFunction one() {
    return RatFunction(IntPolynomial::constant(Int(1)),
                       IntPolynomial::constant(Int(1)));
  }
  static RatFunction variable() {
    return RatFunction(IntPolynomial::monomial(Int(1), 1),
                       IntPolynomial::constant(Int(1)));
  }
  static RatFunction from_poly(IntPolynomial p) {
    return RatFunction(std::move(p), IntPolynomial::constant(Int(1)));
  }

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunction operator+(const RatFunction& a, const RatFunction& b) {
    return RatFunction(a.num_ * b.den_ + a.den_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunction operator-(const RatFunction& a) {
    return RatFunction(-a.num_, a.den_);
  }
  friend RatFunction operator-(const RatFunction& a, const RatFunction& b) {
    return a + (-b);
  }
  friend RatFunction operator*(const RatFunction& a, const RatFunction& b) {
    return RatFunction(a.num_ * b.num_, a.den_ * b.den_);
  }

  RatFunction inverse() const {
    if (num_.is_zero()) {
      throw ZeroDenominator("inverse of the zero rational function");
    }
    return RatFunction(den_, num_);
  }

  friend RatFunction operator/(const RatFunction& a, const RatFunction& b) {
    return a * b.inverse();
  }

  friend bool operator==(const RatFunction& a, const RatFunction& b) {
    return a.num_ * b.den_ == a.den_ * b.num_;
  }

  std::string str(const std::string& var = "t") const {
    if (den_.is_one()) {
      return num_.str(var);
    }
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFunction& r) {
    return os << r.str();
  }

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

}  // namespace sgring::oracle
