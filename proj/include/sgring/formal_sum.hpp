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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sgring/errors.hpp"
#include "sgring/semigroup.hpp"

namespace sgring {

enum class Sign : std::int8_t { plus = +1, minus = -1 };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

template <Semigroup S>
struct SignedEntry {
  Sign sign;
  typename S::element_type element;

  friend bool operator==(const SignedEntry&, const SignedEntry&) = default;
};

/// Raw element of sums(H): an ordered sequence of signed entries. The sum is
/// purely formal; nothing is combined. Kept as a first-class type so the
/// equivalence closure over it stays testable against the canonical form.
template <Semigroup S>
class FormalSum {
 public:
  using element_type = typename S::element_type;
  using entry_type = SignedEntry<S>;

  explicit FormalSum(Handle<S> semigroup) : sg_(std::move(semigroup)) {}

  FormalSum(Handle<S> semigroup, std::vector<entry_type> entries)
      : sg_(std::move(semigroup)), entries_(std::move(entries)) {
    for (const entry_type& e : entries_) {
      if (!sg_->contains(e.element)) {
        throw ForeignElement("formal sum entry is not an element of " +
                             sg_->id());
      }
    }
  }

  FormalSum& push(Sign sign, element_type element) {
    if (!sg_->contains(element)) {
      throw ForeignElement("formal sum entry is not an element of " +
                           sg_->id());
    }
    entries_.push_back(entry_type{sign, std::move(element)});
    return *this;
  }

  std::size_t length() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<entry_type>& entries() const { return entries_; }
  const Handle<S>& semigroup() const { return sg_; }

  FormalSum negated() const {
    FormalSum r(sg_);
    for (const entry_type& e : entries_) {
      r.entries_.push_back(entry_type{opposite(e.sign), e.element});
    }
    return r;
  }

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return same_instance(a.sg_, b.sg_) && a.entries_ == b.entries_;
  }

 private:
  Handle<S> sg_;
  std::vector<entry_type> entries_;
};

/// Representative-level addition: plain concatenation of entry sequences.
template <Semigroup S>
FormalSum<S> concat(const FormalSum<S>& a, const FormalSum<S>& b) {
  if (!same_instance(a.semigroup(), b.semigroup())) {
    throw HandleMismatch("concat across instances " + a.semigroup()->id() +
                         " and " + b.semigroup()->id());
  }
  std::vector<SignedEntry<S>> entries = a.entries();
  entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  return FormalSum<S>(a.semigroup(), std::move(entries));
}

template <Semigroup S>
std::string to_string(const FormalSum<S>& x) {
  std::string out = "<";
  for (std::size_t i = 0; i < x.entries().size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    const auto& e = x.entries()[i];
    out += e.sign == Sign::plus ? '+' : '-';
    out += x.semigroup()->print(e.element);
  }
  out += ">";
  return out;
}

}  // namespace sgring
