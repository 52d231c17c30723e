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

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sgring/cayley.hpp"
#include "sgring/errors.hpp"
#include "sgring/random.hpp"

namespace sgring {

// ---------------------------------------------------------------------------
// Element value types
// ---------------------------------------------------------------------------

/// Element of a free semigroup: a nonempty word stored as letter indices
/// into the instance's alphabet. Ordered shortlex (length first, then
/// letter-by-letter in alphabet order) for deterministic printing.
struct Word {
  std::vector<std::uint32_t> letters;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) {
      return c;
    }
    return a.letters <=> b.letters;
  }
};

/// Element of a free commutative semigroup: exponents per variable.
/// Plain lexicographic order (vectors always have equal length within one
/// instance).
struct ExpVec {
  std::vector<std::uint32_t> exps;

  bool all_zero() const {
    return std::all_of(exps.begin(), exps.end(),
                       [](std::uint32_t e) { return e == 0; });
  }

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b) {
    return a.exps <=> b.exps;
  }
};

/// Element of (N>=1, +) and (N>=1, max).
using Nat = unsigned long long;

/// Element of a finite table semigroup: its index in the Cayley table.
using TableIndex = std::uint32_t;

// ---------------------------------------------------------------------------
// Semigroup concept and handles
// ---------------------------------------------------------------------------

/// What an instance must provide. All instances are immutable after
/// construction and every operation is pure, so handles are freely shared.
template <typename S>
concept Semigroup = requires(const S& s, const typename S::element_type& a,
                             const typename S::element_type& b, Prng& rng,
                             const std::string& text) {
  requires std::totally_ordered<typename S::element_type>;
  requires std::copyable<typename S::element_type>;
  { s.op(a, b) } -> std::same_as<typename S::element_type>;
  { s.contains(a) } -> std::same_as<bool>;
  { s.commutative() } -> std::same_as<bool>;
  { s.identity() } -> std::same_as<std::optional<typename S::element_type>>;
  { s.least_generator() } -> std::same_as<typename S::element_type>;
  { s.generators() } -> std::same_as<std::vector<typename S::element_type>>;
  { s.decompose(a) } -> std::same_as<std::vector<typename S::element_type>>;
  { s.print(a) } -> std::same_as<std::string>;
  {
    s.parse_element(text)
  } -> std::same_as<std::optional<typename S::element_type>>;
  { s.sample(rng) } -> std::same_as<typename S::element_type>;
  { s.id() } -> std::convertible_to<std::string>;
};

/// Instances with an enumerable finite carrier (exhaustive checks instead of
/// sampling).
template <typename S>
concept FiniteSemigroup = Semigroup<S> && requires(const S& s) {
  { s.carrier() } -> std::same_as<std::vector<typename S::element_type>>;
};

template <Semigroup S>
using Handle = std::shared_ptr<const S>;

/// Two handles are interchangeable when they denote the same instance.
/// Identity is content-based (canonical descriptor string) so that two
/// loads of the same table produce compatible values.
template <Semigroup S>
bool same_instance(const Handle<S>& a, const Handle<S>& b) {
  return a == b || a->id() == b->id();
}

/// The semigroup operation with domain checking.
template <Semigroup S>
typename S::element_type sg_op(const Handle<S>& h,
                               const typename S::element_type& a,
                               const typename S::element_type& b) {
  if (!h->contains(a)) {
    throw ForeignElement("left operand is not an element of " + h->id());
  }
  if (!h->contains(b)) {
    throw ForeignElement("right operand is not an element of " + h->id());
  }
  return h->op(a, b);
}

// ---------------------------------------------------------------------------
// Built-in instances
// ---------------------------------------------------------------------------

namespace detail {

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += parts[i];
  }
  return out;
}

/// Longest match among names at position pos; returns index or npos.
inline std::size_t match_name(const std::vector<std::string>& names,
                              std::string_view text, std::size_t pos) {
  std::size_t best = std::string::npos;
  std::size_t best_len = 0;
  for (std::size_t k = 0; k < names.size(); ++k) {
    const std::string& name = names[k];
    if (name.size() > best_len && text.size() - pos >= name.size() &&
        text.compare(pos, name.size(), name) == 0) {
      best = k;
      best_len = name.size();
    }
  }
  return best;
}

}  // namespace detail

/// Free (noncommutative for >= 2 letters) semigroup on a named alphabet.
/// Elements are nonempty words; the operation is concatenation.
class FreeSemigroup {
 public:
  using element_type = Word;

  explicit FreeSemigroup(std::vector<std::string> alphabet)
      : alphabet_(std::move(alphabet)) {
    if (alphabet_.empty()) {
      throw MalformedSpec("free semigroup needs at least one generator");
    }
    detail::check_element_names(alphabet_);
    id_ = "free:" + detail::join(alphabet_, ",");
  }

  Word op(const Word& a, const Word& b) const {
    Word w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
  }

  bool contains(const Word& w) const {
    if (w.letters.empty()) {
      return false;
    }
    return std::all_of(w.letters.begin(), w.letters.end(),
                       [&](std::uint32_t l) { return l < alphabet_.size(); });
  }

  bool commutative() const { return alphabet_.size() < 2; }
  std::optional<Word> identity() const { return std::nullopt; }
  Word least_generator() const { return Word{{0}}; }

  std::vector<Word> generators() const {
    std::vector<Word> gens;
    for (std::uint32_t i = 0; i < alphabet_.size(); ++i) {
      gens.push_back(Word{{i}});
    }
    return gens;
  }

  std::vector<Word> decompose(const Word& w) const {
    std::vector<Word> parts;
    for (std::uint32_t l : w.letters) {
      parts.push_back(Word{{l}});
    }
    return parts;
  }

  std::string print(const Word& w) const {
    std::string out;
    for (std::uint32_t l : w.letters) {
      out += alphabet_[l];
    }
    return out;
  }

  /// Factorizes text into alphabet letters, longest name first with
  /// backtracking, so multi-character generator names are handled.
  std::optional<Word> parse_element(const std::string& text) const {
    if (text.empty()) {
      return std::nullopt;
    }
    std::vector<std::uint32_t> order(alphabet_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t x, std::uint32_t y) {
                       return alphabet_[x].size() > alphabet_[y].size();
                     });
    std::vector<char> dead(text.size() + 1, 0);
    std::vector<std::uint32_t> letters;
    std::function<bool(std::size_t)> walk = [&](std::size_t pos) {
      if (pos == text.size()) {
        return true;
      }
      if (dead[pos]) {
        return false;
      }
      for (std::uint32_t k : order) {
        const std::string& name = alphabet_[k];
        if (text.size() - pos >= name.size() &&
            text.compare(pos, name.size(), name) == 0) {
          letters.push_back(k);
          if (walk(pos + name.size())) {
            return true;
          }
          letters.pop_back();
        }
      }
      dead[pos] = 1;
      return false;
    };
    if (!walk(0)) {
      return std::nullopt;
    }
    return Word{std::move(letters)};
  }

  Word sample(Prng& rng) const {
    std::size_t len = 1 + rng.below(3);
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
      w.letters.push_back(static_cast<std::uint32_t>(rng.below(alphabet_.size())));
    }
    return w;
  }

  const std::string& id() const { return id_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }

 private:
  std::vector<std::string> alphabet_;
  std::string id_;
};

/// Free commutative semigroup on named variables, elements stored as
/// exponent vectors. The plain variant excludes the all-zero vector
/// (semigroup, not monoid); the monoid variant includes it as identity.
class FreeCommutativeSemigroup {
 public:
  using element_type = ExpVec;

  FreeCommutativeSemigroup(std::vector<std::string> variables,
                           bool with_identity)
      : vars_(std::move(variables)), with_identity_(with_identity) {
    if (vars_.empty()) {
      throw MalformedSpec("free commutative semigroup needs a variable");
    }
    detail::check_element_names(vars_);
    id_ = (with_identity_ ? "freecomm1:" : "freecomm:") +
          detail::join(vars_, ",");
  }

  ExpVec op(const ExpVec& a, const ExpVec& b) const {
    ExpVec r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) {
      r.exps[i] += b.exps[i];
    }
    return r;
  }

  bool contains(const ExpVec& v) const {
    if (v.exps.size() != vars_.size()) {
      return false;
    }
    return with_identity_ || !v.all_zero();
  }

  bool commutative() const { return true; }

  std::optional<ExpVec> identity() const {
    if (!with_identity_) {
      return std::nullopt;
    }
    return ExpVec{std::vector<std::uint32_t>(vars_.size(), 0)};
  }

  ExpVec least_generator() const {
    ExpVec v{std::vector<std::uint32_t>(vars_.size(), 0)};
    v.exps[0] = 1;
    return v;
  }

  std::vector<ExpVec> generators() const {
    std::vector<ExpVec> gens;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      ExpVec v{std::vector<std::uint32_t>(vars_.size(), 0)};
      v.exps[i] = 1;
      gens.push_back(std::move(v));
    }
    return gens;
  }

  std::vector<ExpVec> decompose(const ExpVec& v) const {
    if (v.all_zero()) {
      return {v};  // identity is treated as its own generator
    }
    std::vector<ExpVec> parts;
    for (std::size_t i = 0; i < v.exps.size(); ++i) {
      ExpVec unit{std::vector<std::uint32_t>(vars_.size(), 0)};
      unit.exps[i] = 1;
      for (std::uint32_t k = 0; k < v.exps[i]; ++k) {
        parts.push_back(unit);
      }
    }
    return parts;
  }

  std::string print(const ExpVec& v) const {
    if (v.all_zero()) {
      return "\xce\xb5";  // epsilon, the monoid identity
    }
    std::string out;
    for (std::size_t i = 0; i < v.exps.size(); ++i) {
      if (v.exps[i] == 0) {
        continue;
      }
      out += vars_[i];
      if (v.exps[i] > 1) {
        out += "^" + std::to_string(v.exps[i]);
      }
    }
    return out;
  }

  std::optional<ExpVec> parse_element(const std::string& text) const {
    if (text == "\xce\xb5") {
      return identity();
    }
    ExpVec v{std::vector<std::uint32_t>(vars_.size(), 0)};
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t k = detail::match_name(vars_, text, pos);
      if (k == std::string::npos) {
        return std::nullopt;
      }
      pos += vars_[k].size();
      std::uint64_t exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
          return std::nullopt;
        }
        exp = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
          exp = exp * 10 + static_cast<std::uint64_t>(text[pos] - '0');
          if (exp > 1000000) {
            return std::nullopt;
          }
          ++pos;
        }
      }
      v.exps[k] += static_cast<std::uint32_t>(exp);
    }
    if (!contains(v)) {
      return std::nullopt;
    }
    return v;
  }

  ExpVec sample(Prng& rng) const {
    for (;;) {
      ExpVec v{std::vector<std::uint32_t>(vars_.size(), 0)};
      for (auto& e : v.exps) {
        e = static_cast<std::uint32_t>(rng.below(3));
      }
      if (with_identity_ || !v.all_zero()) {
        return v;
      }
    }
  }

  const std::string& id() const { return id_; }
  bool with_identity() const { return with_identity_; }

 private:
  std::vector<std::string> vars_;
  bool with_identity_;
  std::string id_;
};

namespace detail {

inline std::optional<Nat> parse_natural(const std::string& text) {
  if (text.empty() || text.size() > 18) {
    return std::nullopt;
  }
  Nat v = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return std::nullopt;
    }
    v = v * 10 + static_cast<Nat>(c - '0');
  }
  if (v == 0) {
    return std::nullopt;
  }
  return v;
}

}  // namespace detail

/// (N>=1, +). No identity, which exercises the unit-free branch of the
/// ring construction. Generated by 1.
class NaturalsAdd {
 public:
  using element_type = Nat;

  Nat op(Nat a, Nat b) const { return a + b; }
  bool contains(Nat a) const { return a >= 1; }
  bool commutative() const { return true; }
  std::optional<Nat> identity() const { return std::nullopt; }
  Nat least_generator() const { return 1; }
  std::vector<Nat> generators() const { return {1}; }

  std::vector<Nat> decompose(Nat a) const {
    return std::vector<Nat>(static_cast<std::size_t>(a), Nat{1});
  }

  std::string print(Nat a) const { return std::to_string(a); }
  std::optional<Nat> parse_element(const std::string& text) const {
    return detail::parse_natural(text);
  }
  Nat sample(Prng& rng) const { return 1 + rng.below(8); }
  const std::string& id() const {
    static const std::string name = "nat+";
    return name;
  }
};

/// (N>=1, max). Commutative with identity 1, idempotent; its ring has
/// zero divisors, so fraction operations over it can trip the runtime
/// domain guard. Not finitely generated: every element is its own
/// generator for map extension.
class NaturalsMax {
 public:
  using element_type = Nat;

  Nat op(Nat a, Nat b) const { return a > b ? a : b; }
  bool contains(Nat a) const { return a >= 1; }
  bool commutative() const { return true; }
  std::optional<Nat> identity() const { return 1; }
  Nat least_generator() const { return 1; }
  std::vector<Nat> generators() const { return {1, 2, 3, 4}; }
  std::vector<Nat> decompose(Nat a) const { return {a}; }
  std::string print(Nat a) const { return std::to_string(a); }
  std::optional<Nat> parse_element(const std::string& text) const {
    return detail::parse_natural(text);
  }
  Nat sample(Prng& rng) const { return 1 + rng.below(8); }
  const std::string& id() const {
    static const std::string name = "natmax";
    return name;
  }
};

/// Finite semigroup backed by a validated Cayley table.
class TableSemigroup {
 public:
  using element_type = TableIndex;

  explicit TableSemigroup(CayleyTable table) : table_(std::move(table)) {
    id_ = "table[n=" + std::to_string(table_.order) + ";" +
          detail::join(table_.names, ",") + ";";
    for (std::size_t k = 0; k < table_.entries.size(); ++k) {
      if (k > 0) {
        id_ += ",";
      }
      id_ += std::to_string(table_.entries[k]);
    }
    id_ += "]";
  }

  TableIndex op(TableIndex a, TableIndex b) const { return table_.at(a, b); }
  bool contains(TableIndex a) const { return a < table_.order; }
  bool commutative() const { return table_.commutative; }
  std::optional<TableIndex> identity() const { return table_.identity; }
  TableIndex least_generator() const { return 0; }

  std::vector<TableIndex> generators() const { return carrier(); }
  std::vector<TableIndex> decompose(TableIndex a) const { return {a}; }

  std::vector<TableIndex> carrier() const {
    std::vector<TableIndex> all(table_.order);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }

  std::string print(TableIndex a) const { return table_.names[a]; }

  std::optional<TableIndex> parse_element(const std::string& text) const {
    for (TableIndex k = 0; k < table_.order; ++k) {
      if (table_.names[k] == text) {
        return k;
      }
    }
    return std::nullopt;
  }

  TableIndex sample(Prng& rng) const {
    return static_cast<TableIndex>(rng.below(table_.order));
  }

  const std::string& id() const { return id_; }
  const CayleyTable& table() const { return table_; }

 private:
  CayleyTable table_;
  std::string id_;
};

static_assert(Semigroup<FreeSemigroup>);
static_assert(Semigroup<FreeCommutativeSemigroup>);
static_assert(Semigroup<NaturalsAdd>);
static_assert(Semigroup<NaturalsMax>);
static_assert(Semigroup<TableSemigroup>);
static_assert(FiniteSemigroup<TableSemigroup>);
static_assert(!FiniteSemigroup<NaturalsAdd>);

// ---------------------------------------------------------------------------
// Descriptor-driven construction
// ---------------------------------------------------------------------------

using AnySemigroup =
    std::variant<Handle<FreeSemigroup>, Handle<FreeCommutativeSemigroup>,
                 Handle<NaturalsAdd>, Handle<NaturalsMax>,
                 Handle<TableSemigroup>>;

namespace detail {

inline std::vector<std::string> split_names(std::string_view body) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string_view::npos) {
      comma = body.size();
    }
    names.emplace_back(body.substr(start, comma - start));
    start = comma + 1;
    if (comma == body.size()) {
      break;
    }
  }
  return names;
}

}  // namespace detail

/// Builds an instance from a descriptor string:
///   free:<c1>,<c2>,...   freecomm:<v1>,...   freecomm1:<v1>,...
///   nat+   natmax   table:<path>
inline AnySemigroup make_instance(std::string_view descriptor) {
  if (descriptor == "nat+") {
    return std::make_shared<const NaturalsAdd>();
  }
  if (descriptor == "natmax") {
    return std::make_shared<const NaturalsMax>();
  }
  std::size_t colon = descriptor.find(':');
  if (colon == std::string_view::npos) {
    throw UnknownInstance("no instance named '" + std::string(descriptor) +
                          "'");
  }
  std::string_view kind = descriptor.substr(0, colon);
  std::string_view body = descriptor.substr(colon + 1);
  if (kind == "free") {
    return std::make_shared<const FreeSemigroup>(detail::split_names(body));
  }
  if (kind == "freecomm") {
    return std::make_shared<const FreeCommutativeSemigroup>(
        detail::split_names(body), false);
  }
  if (kind == "freecomm1") {
    return std::make_shared<const FreeCommutativeSemigroup>(
        detail::split_names(body), true);
  }
  if (kind == "table") {
    if (body.empty()) {
      throw MalformedSpec("table descriptor needs a file path");
    }
    return std::make_shared<const TableSemigroup>(
        load_cayley_file(std::string(body)));
  }
  throw UnknownInstance("no instance named '" + std::string(kind) + "'");
}

/// Runs f with the concrete handle selected by the descriptor. All branches
/// must agree on the return type.
template <typename F>
decltype(auto) with_instance(std::string_view descriptor, F&& f) {
  AnySemigroup any = make_instance(descriptor);
  return std::visit([&](auto& handle) -> decltype(auto) { return f(handle); },
                    any);
}

}  // namespace sgring
