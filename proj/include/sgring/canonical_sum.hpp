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

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sgring/errors.hpp"
#include "sgring/formal_sum.hpp"
#include "sgring/numbers.hpp"
#include "sgring/semigroup.hpp"

namespace sgring {

/// Ring element of R(H) in normal form: a finite mapping element -> nonzero
/// integer coefficient. Cancelling a +h/-h pair and permuting entries leave
/// exactly the per-element signed counts invariant, so the net coefficients
/// are a complete invariant of the equivalence class; the empty mapping is
/// the zero class. Iteration follows the element order, which makes printing
/// and minimal representatives deterministic.
template <Semigroup S>
class CanonicalSum {
 public:
  using element_type = typename S::element_type;
  using coeff_map = std::map<element_type, Int>;

  /// The zero class.
  explicit CanonicalSum(Handle<S> semigroup) : sg_(std::move(semigroup)) {}

  /// Folds a term list: duplicate elements accumulate, zeros are dropped.
  CanonicalSum(Handle<S> semigroup,
               const std::vector<std::pair<element_type, Int>>& terms)
      : sg_(std::move(semigroup)) {
    for (const auto& [el, c] : terms) {
      if (!sg_->contains(el)) {
        throw ForeignElement("term is not an element of " + sg_->id());
      }
      if (sgn(c) == 0) {
        continue;
      }
      Int& slot = coeffs_[el];
      slot += c;
      if (sgn(slot) == 0) {
        coeffs_.erase(el);
      }
    }
  }

  static CanonicalSum zero(Handle<S> semigroup) {
    return CanonicalSum(std::move(semigroup));
  }

  const Handle<S>& semigroup() const { return sg_; }
  const coeff_map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  Int coeff(const element_type& el) const {
    auto it = coeffs_.find(el);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  friend CanonicalSum operator+(const CanonicalSum& x, const CanonicalSum& y) {
    require_same(x, y, "add");
    CanonicalSum r = x;
    for (const auto& [el, c] : y.coeffs_) {
      Int& slot = r.coeffs_[el];
      slot += c;
      if (sgn(slot) == 0) {
        r.coeffs_.erase(el);
      }
    }
    return r;
  }

  friend CanonicalSum operator-(const CanonicalSum& x) {
    CanonicalSum r = x;
    for (auto& [el, c] : r.coeffs_) {
      c = -c;
    }
    return r;
  }

  friend CanonicalSum operator-(const CanonicalSum& x, const CanonicalSum& y) {
    return x + (-y);
  }

  /// Convolution product: every pair of terms contributes the coefficient
  /// product on the semigroup product of the underlying elements. The sign
  /// rule for formal entries is exactly integer sign arithmetic. x*0 = 0 = 0*x
  /// falls out of the empty loop.
  friend CanonicalSum operator*(const CanonicalSum& x, const CanonicalSum& y) {
    require_same(x, y, "multiply");
    CanonicalSum r(x.sg_);
    for (const auto& [g, cg] : x.coeffs_) {
      for (const auto& [h, ch] : y.coeffs_) {
        element_type prod = x.sg_->op(g, h);
        Int& slot = r.coeffs_[prod];
        slot += cg * ch;
        if (sgn(slot) == 0) {
          r.coeffs_.erase(prod);
        }
      }
    }
    return r;
  }

  friend bool operator==(const CanonicalSum& x, const CanonicalSum& y) {
    require_same(x, y, "compare");
    return x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const CanonicalSum& x, const CanonicalSum& y) {
    return !(x == y);
  }

 private:
  static void require_same(const CanonicalSum& x, const CanonicalSum& y,
                           const char* what) {
    if (!same_instance(x.sg_, y.sg_)) {
      throw HandleMismatch(std::string("cannot ") + what +
                           " sums over different instances: " + x.sg_->id() +
                           " vs " + y.sg_->id());
    }
  }

  Handle<S> sg_;
  coeff_map coeffs_;
};

/// Integer scaling; k-fold repeated addition collapses to coefficient
/// multiplication in normal form.
template <Semigroup S>
CanonicalSum<S> scale(const CanonicalSum<S>& x, const Int& k) {
  if (sgn(k) == 0) {
    return CanonicalSum<S>::zero(x.semigroup());
  }
  std::vector<std::pair<typename S::element_type, Int>> terms;
  for (const auto& [el, c] : x.coeffs()) {
    terms.emplace_back(el, c * k);
  }
  return CanonicalSum<S>(x.semigroup(), terms);
}

template <Semigroup S>
CanonicalSum<S> operator*(const Int& k, const CanonicalSum<S>& x) {
  return scale(x, k);
}

/// Quotient map sums(H) -> R(H): sum the signs per element, drop zeros.
/// Two formal sums normalize equally iff they are connected by pair
/// cancellations/insertions and permutations.
template <Semigroup S>
CanonicalSum<S> normalize(const FormalSum<S>& x) {
  std::vector<std::pair<typename S::element_type, Int>> terms;
  for (const auto& e : x.entries()) {
    terms.emplace_back(e.element, Int(e.sign == Sign::plus ? 1 : -1));
  }
  return CanonicalSum<S>(x.semigroup(), terms);
}

/// The minimal-length representative of the class: |coeff| copies of each
/// element with the coefficient's sign, emitted in element order.
template <Semigroup S>
FormalSum<S> minimal_representative(const CanonicalSum<S>& x) {
  FormalSum<S> out(x.semigroup());
  for (const auto& [el, c] : x.coeffs()) {
    Sign s = sgn(c) > 0 ? Sign::plus : Sign::minus;
    Int n = abs(c);
    for (Int i = 0; i < n; ++i) {
      out.push(s, el);
    }
  }
  return out;
}

/// The embedding e1 : H -> R(H), a |-> class of <+a>. A semigroup
/// homomorphism into the multiplicative structure.
template <Semigroup S>
CanonicalSum<S> embed(const Handle<S>& h, const typename S::element_type& a) {
  if (!h->contains(a)) {
    throw ForeignElement("embed: not an element of " + h->id());
  }
  return CanonicalSum<S>(h, {{a, Int(1)}});
}

/// The ring has a unit exactly when the semigroup has one, namely the class
/// of <+1_H>.
template <Semigroup S>
std::optional<CanonicalSum<S>> unit_of(const Handle<S>& h) {
  std::optional<typename S::element_type> e = h->identity();
  if (!e) {
    return std::nullopt;
  }
  return embed(h, *e);
}

/// Canonical printing: terms in element order, "{sign}{|coeff|·}element",
/// space separated; the zero class prints as "0".
template <Semigroup S>
std::string to_string(const CanonicalSum<S>& x) {
  if (x.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [el, c] : x.coeffs()) {
    if (!first) {
      out += ' ';
    }
    first = false;
    out += sgn(c) > 0 ? '+' : '-';
    Int a = abs(c);
    if (a > 1) {
      out += a.get_str();
      out += "\xc2\xb7";
    }
    out += x.semigroup()->print(el);
  }
  return out;
}

template <Semigroup S>
std::ostream& operator<<(std::ostream& os, const CanonicalSum<S>& x) {
  return os << to_string(x);
}

}  // namespace sgring
