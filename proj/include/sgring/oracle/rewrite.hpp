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
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "sgring/errors.hpp"
#include "sgring/formal_sum.hpp"
#include "sgring/semigroup.hpp"

namespace sgring::oracle {

// Brute-force decision procedure for the equivalence closure of the two
// generating moves on formal sums: cancellation/insertion of a {+h, -h}
// pair and permutation of entries. Completely independent of the canonical
// normal form; used to validate it.
//
// Search moves are adjacent transpositions, adjacent pair deletion and
// adjacent pair insertion. Adjacent transpositions generate all
// permutations and a separated pair can always be brought together first,
// so the reachability closure is exactly the closure of the two relations,
// restricted to sums no longer than the bound. Insertions only draw from
// elements present in the endpoints: a pair of any other element would have
// to be deleted with itself again and cannot make progress.

namespace detail {

// entries encoded as digits: element_index * 2 + (0 for '+', 1 for '-')
using State = std::vector<std::uint16_t>;

inline bool cancels(std::uint16_t a, std::uint16_t b) {
  return (a >> 1) == (b >> 1) && ((a ^ b) & 1) != 0;
}

template <Semigroup S>
std::vector<typename S::element_type> element_dictionary(
    const std::vector<const FormalSum<S>*>& sums) {
  std::vector<typename S::element_type> dict;
  for (const FormalSum<S>* fs : sums) {
    for (const auto& e : fs->entries()) {
      dict.push_back(e.element);
    }
  }
  std::sort(dict.begin(), dict.end());
  dict.erase(std::unique(dict.begin(), dict.end()), dict.end());
  return dict;
}

template <Semigroup S>
State encode(const FormalSum<S>& fs,
             const std::vector<typename S::element_type>& dict) {
  State s;
  for (const auto& e : fs.entries()) {
    auto it = std::lower_bound(dict.begin(), dict.end(), e.element);
    std::uint16_t idx = static_cast<std::uint16_t>(it - dict.begin());
    s.push_back(static_cast<std::uint16_t>(idx * 2 +
                                           (e.sign == Sign::plus ? 0 : 1)));
  }
  return s;
}

}  // namespace detail

/// True iff y is reachable from x by pair cancellations/insertions and
/// permutations without any intermediate sum exceeding `bound` entries.
/// A cancellation-first path through the minimal representative never
/// exceeds max(len(x), len(y)), so any bound at least that large decides
/// true equivalence. Throws BoundExceeded if an endpoint itself is longer
/// than the bound.
template <Semigroup S>
bool rewrite_closure_equiv(const FormalSum<S>& x, const FormalSum<S>& y,
                           std::size_t bound) {
  if (!same_instance(x.semigroup(), y.semigroup())) {
    throw HandleMismatch("rewrite closure across instances");
  }
  if (x.length() > bound || y.length() > bound) {
    throw BoundExceeded("endpoint longer than the search bound " +
                        std::to_string(bound));
  }
  auto dict = detail::element_dictionary<S>({&x, &y});
  detail::State start = detail::encode(x, dict);
  detail::State goal = detail::encode(y, dict);
  if (start == goal) {
    return true;
  }

  const std::size_t symbols = dict.size() * 2;
  std::set<detail::State> seen{start};
  std::deque<detail::State> frontier{start};
  auto visit = [&](detail::State&& next) {
    if (next == goal) {
      return true;
    }
    if (seen.insert(next).second) {
      frontier.push_back(std::move(next));
    }
    return false;
  };

  while (!frontier.empty()) {
    detail::State cur = std::move(frontier.front());
    frontier.pop_front();
    const std::size_t n = cur.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (cur[i] != cur[i + 1]) {
        detail::State next = cur;
        std::swap(next[i], next[i + 1]);
        if (visit(std::move(next))) {
          return true;
        }
      }
      if (detail::cancels(cur[i], cur[i + 1])) {
        detail::State next;
        next.reserve(n - 2);
        next.insert(next.end(), cur.begin(), cur.begin() + i);
        next.insert(next.end(), cur.begin() + i + 2, cur.end());
        if (visit(std::move(next))) {
          return true;
        }
      }
    }
    if (n + 2 <= bound) {
      for (std::size_t d = 0; d < symbols; d += 2) {
        for (std::size_t p = 0; p <= n; ++p) {
          detail::State next;
          next.reserve(n + 2);
          next.insert(next.end(), cur.begin(), cur.begin() + p);
          next.push_back(static_cast<std::uint16_t>(d));
          next.push_back(static_cast<std::uint16_t>(d + 1));
          next.insert(next.end(), cur.begin() + p, cur.end());
          if (visit(std::move(next))) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

/// Bulk form for exhaustive grids: partitions `sums` into bounded-closure
/// classes by running union-find over the entire state space of sums with
/// at most `bound` entries over the elements present. Returns one class
/// index per input, labelled in first-occurrence order.
template <Semigroup S>
std::vector<std::size_t> rewrite_closure_classes(
    const std::vector<FormalSum<S>>& sums, std::size_t bound) {
  std::vector<const FormalSum<S>*> ptrs;
  for (const auto& fs : sums) {
    if (fs.length() > bound) {
      throw BoundExceeded("input sum longer than the search bound");
    }
    ptrs.push_back(&fs);
  }
  auto dict = detail::element_dictionary<S>(ptrs);
  const std::size_t symbols = std::max<std::size_t>(1, dict.size() * 2);

  // mixed-radix indexing of all states with length 0..bound
  std::vector<std::size_t> offset(bound + 2, 0);
  std::vector<std::size_t> pow(bound + 1, 1);
  for (std::size_t l = 1; l <= bound; ++l) {
    pow[l] = pow[l - 1] * symbols;
  }
  for (std::size_t l = 0; l <= bound; ++l) {
    offset[l + 1] = offset[l] + pow[l];
  }
  const std::size_t total = offset[bound + 1];
  if (total > 4'000'000) {
    throw BoundExceeded("state space of " + std::to_string(total) +
                        " sums is too large");
  }

  auto index_of = [&](const detail::State& s) {
    std::size_t ix = offset[s.size()];
    std::size_t mult = 1;
    for (std::size_t i = s.size(); i-- > 0;) {
      ix += s[i] * mult;
      mult *= symbols;
    }
    return ix;
  };

  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[b] = a;
    }
  };

  detail::State digits;
  for (std::size_t len = 1; len <= bound; ++len) {
    digits.assign(len, 0);
    for (std::size_t ix = offset[len]; ix < offset[len + 1]; ++ix) {
      // swap and cancel edges; insertions are the reverse cancel edges
      for (std::size_t i = 0; i + 1 < len; ++i) {
        if (digits[i] != digits[i + 1]) {
          detail::State other = digits;
          std::swap(other[i], other[i + 1]);
          unite(ix, index_of(other));
        }
        if (detail::cancels(digits[i], digits[i + 1])) {
          detail::State shorter;
          shorter.insert(shorter.end(), digits.begin(), digits.begin() + i);
          shorter.insert(shorter.end(), digits.begin() + i + 2, digits.end());
          unite(ix, index_of(shorter));
        }
      }
      // odometer step
      for (std::size_t pos = len; pos-- > 0;) {
        if (++digits[pos] < symbols) {
          break;
        }
        digits[pos] = 0;
      }
    }
  }

  std::vector<std::size_t> classes;
  std::map<std::size_t, std::size_t> label;
  for (const auto& fs : sums) {
    std::size_t root = find(index_of(detail::encode(fs, dict)));
    auto [it, fresh] = label.emplace(root, label.size());
    classes.push_back(it->second);
  }
  return classes;
}

}  // namespace sgring::oracle
