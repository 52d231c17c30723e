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

#include <ostream>
#include <string>
#include <utility>

#include "sgring/canonical_sum.hpp"
#include "sgring/errors.hpp"
#include "sgring/semigroup.hpp"

namespace sgring {

namespace detail {

/// Product with the domain guard: a zero product of two nonzero ring
/// elements means the fraction construction's hypothesis failed.
template <Semigroup S>
CanonicalSum<S> checked_mul(const CanonicalSum<S>& x, const CanonicalSum<S>& y) {
  CanonicalSum<S> p = x * y;
  if (p.is_zero() && !x.is_zero() && !y.is_zero()) {
    throw ZeroDivisorDetected("(" + to_string(x) + ") * (" + to_string(y) +
                              ") = 0 over " + x.semigroup()->id());
  }
  return p;
}

/// A fixed nonzero denominator representing the one-class: the semigroup
/// unit when present, otherwise the least generator. In a domain all d/d
/// classes coincide, so the choice is immaterial.
template <Semigroup S>
CanonicalSum<S> fixed_denominator(const Handle<S>& h) {
  if (auto u = unit_of(h)) {
    return *u;
  }
  return embed(h, h->least_generator());
}

}  // namespace detail

/// Formal fraction over R(H) for commutative H, denoting its class under
/// common-factor cancellation. No reduced form is stored or promised;
/// equality is decided by cross-multiplication.
template <Semigroup S>
class Fraction {
 public:
  Fraction(CanonicalSum<S> num, CanonicalSum<S> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (!same_instance(num_.semigroup(), den_.semigroup())) {
      throw HandleMismatch("fraction with numerator over " +
                           num_.semigroup()->id() + " and denominator over " +
                           den_.semigroup()->id());
    }
    if (!num_.semigroup()->commutative()) {
      throw NoncommutativeSemigroup("fractions require a commutative instance; " +
                                    num_.semigroup()->id() + " is not");
    }
    if (den_.is_zero()) {
      throw ZeroDenominator("fraction with denominator 0 over " +
                            num_.semigroup()->id());
    }
  }

  static Fraction zero(const Handle<S>& h) {
    return Fraction(CanonicalSum<S>::zero(h), detail::fixed_denominator(h));
  }

  static Fraction one(const Handle<S>& h) {
    CanonicalSum<S> d = detail::fixed_denominator(h);
    return Fraction(d, d);
  }

  const CanonicalSum<S>& num() const { return num_; }
  const CanonicalSum<S>& den() const { return den_; }
  const Handle<S>& semigroup() const { return num_.semigroup(); }
  bool is_zero() const { return num_.is_zero(); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    require_same(a, b);
    CanonicalSum<S> n =
        detail::checked_mul(a.num_, b.den_) + detail::checked_mul(a.den_, b.num_);
    return Fraction(std::move(n), detail::checked_mul(a.den_, b.den_));
  }

  friend Fraction operator-(const Fraction& a) {
    Fraction r = a;
    r.num_ = -r.num_;
    return r;
  }

  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return a + (-b);
  }

  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) {
      return zero(a.semigroup());
    }
    return Fraction(detail::checked_mul(a.num_, b.num_),
                    detail::checked_mul(a.den_, b.den_));
  }

  Fraction inverse() const {
    if (num_.is_zero()) {
      throw DivisionByZeroClass("inverse of the zero class over " +
                                semigroup()->id());
    }
    return Fraction(den_, num_);
  }

  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_.is_zero()) {
      throw DivisionByZeroClass("division by the zero class over " +
                                a.semigroup()->id());
    }
    return a * b.inverse();
  }

  /// Cross-multiplication equality (the same class under common-factor
  /// cancellation whenever R(H) is an integral domain). Throws
  /// ZeroDivisorDetected when a cross product exposes nonzero elements
  /// multiplying to zero.
  friend bool equivalent(const Fraction& a, const Fraction& b) {
    require_same(a, b);
    return detail::checked_mul(a.num_, b.den_) ==
           detail::checked_mul(a.den_, b.num_);
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return equivalent(a, b);
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) {
    return !equivalent(a, b);
  }

 private:
  static void require_same(const Fraction& a, const Fraction& b) {
    if (!same_instance(a.semigroup(), b.semigroup())) {
      throw HandleMismatch("fraction operands over different instances: " +
                           a.semigroup()->id() + " vs " + b.semigroup()->id());
    }
  }

  CanonicalSum<S> num_;
  CanonicalSum<S> den_;
};

/// The embedding e2 : R(H) -> F(H). With a semigroup unit the denominator is
/// the unit class; otherwise x maps to (x*d)/d for the fixed nonzero d, and
/// all such choices are cross-multiplication equal in a domain.
template <Semigroup S>
Fraction<S> to_fraction(const CanonicalSum<S>& x) {
  const Handle<S>& h = x.semigroup();
  if (auto u = unit_of(h)) {
    return Fraction<S>(x, *u);
  }
  CanonicalSum<S> d = detail::fixed_denominator(h);
  return Fraction<S>(detail::checked_mul(x, d), d);
}

template <Semigroup S>
std::string to_string(const Fraction<S>& f) {
  if (f.is_zero()) {
    return "0";
  }
  bool is_one = false;
  try {
    is_one = equivalent(f, Fraction<S>::one(f.semigroup()));
  } catch (const ZeroDivisorDetected&) {
    is_one = false;  // not decidable here; fall through to the pair form
  }
  if (is_one) {
    return "1";
  }
  return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

template <Semigroup S>
std::ostream& operator<<(std::ostream& os, const Fraction<S>& f) {
  return os << to_string(f);
}

}  // namespace sgring
