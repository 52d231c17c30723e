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

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "sgring/errors.hpp"

namespace sgring {

/// Exact integer used for all ring coefficients. Repeated multiplication
/// grows coefficients without bound, so fixed-width integers would silently
/// break the ring axioms.
using Int = mpz_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

/// Exact rational number, kept reduced with positive denominator.
/// Target carrier for field lifts into the rationals.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0) {
      throw ZeroDenominator("rational with denominator 0");
    }
    if (sgn(den_) < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  explicit Rational(Int num) : num_(std::move(num)), den_(1) {}
  explicit Rational(long num) : num_(num), den_(1) {}

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return sgn(num_) == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + a.den_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a) {
    Rational r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    // both reduced with positive denominator
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rational inverse() const {
    if (is_zero()) {
      throw DivisionByZeroClass("inverse of rational 0");
    }
    return Rational(den_, num_);
  }

  std::string str() const {
    if (den_ == 1) {
      return num_.get_str();
    }
    return num_.get_str() + "/" + den_.get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  Int num_;
  Int den_;
};

}  // namespace sgring
