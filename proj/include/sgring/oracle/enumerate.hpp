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
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sgring/canonical_sum.hpp"
#include "sgring/cayley.hpp"
#include "sgring/errors.hpp"
#include "sgring/semigroup.hpp"

namespace sgring::oracle {

/// Yields every associative table among all n^(n*n) candidate binary
/// operations on n elements, in odometer order. Capped at n = 3 to keep the
/// audit suite fast; order 3 already means filtering 19683 candidates.
inline std::vector<CayleyTable> enumerate_semigroups(unsigned n) {
  if (n < 1 || n > 3) {
    throw MalformedSpec("semigroup enumeration supports orders 1..3");
  }
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<std::uint32_t> op(cells, 0);
  auto at = [&](std::uint32_t i, std::uint32_t j) { return op[i * n + j]; };

  std::vector<CayleyTable> found;
  for (;;) {
    bool associative = true;
    for (std::uint32_t a = 0; a < n && associative; ++a) {
      for (std::uint32_t b = 0; b < n && associative; ++b) {
        for (std::uint32_t c = 0; c < n; ++c) {
          if (at(at(a, b), c) != at(a, at(b, c))) {
            associative = false;
            break;
          }
        }
      }
    }
    if (associative) {
      std::vector<std::vector<long long>> raw(n, std::vector<long long>(n));
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
          raw[i][j] = at(i, j);
        }
      }
      found.push_back(validate_cayley(raw));
    }
    // odometer over the table cells
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++op[pos] < n) {
        break;
      }
      op[pos] = 0;
      if (pos == 0) {
        return found;
      }
    }
  }
}

/// Searches the box (support <= max_support over `pool`, 0 < |coeff| <=
/// coeff_bound) for nonzero x, y with x*y = 0. Deterministic enumeration
/// order pins which witness is "least": supports by size then index-lex,
/// coefficients through the sequence 1, -1, 2, -2, ...; x outermost, y
/// rescanned from the start for each x.
template <Semigroup S>
std::optional<std::pair<CanonicalSum<S>, CanonicalSum<S>>> zero_divisor_search(
    const Handle<S>& h, std::vector<typename S::element_type> pool,
    unsigned max_support, unsigned coeff_bound) {
  using element_type = typename S::element_type;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pool.empty() || coeff_bound == 0) {
    return std::nullopt;
  }

  std::vector<Int> coeff_values;
  for (unsigned m = 1; m <= coeff_bound; ++m) {
    coeff_values.emplace_back(static_cast<long>(m));
    coeff_values.emplace_back(-static_cast<long>(m));
  }

  std::vector<CanonicalSum<S>> candidates;
  std::vector<std::size_t> support;
  auto emit_support = [&]() {
    std::vector<std::size_t> pick(support.size(), 0);
    for (;;) {
      std::vector<std::pair<element_type, Int>> terms;
      for (std::size_t i = 0; i < support.size(); ++i) {
        terms.emplace_back(pool[support[i]], coeff_values[pick[i]]);
      }
      candidates.emplace_back(h, terms);
      std::size_t pos = pick.size();
      while (pos > 0) {
        --pos;
        if (++pick[pos] < coeff_values.size()) {
          break;
        }
        pick[pos] = 0;
        if (pos == 0) {
          return;
        }
      }
    }
  };
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from,
                                                             std::size_t left) {
    if (left == 0) {
      emit_support();
      return;
    }
    for (std::size_t i = from; i + left <= pool.size(); ++i) {
      support.push_back(i);
      choose(i + 1, left - 1);
      support.pop_back();
    }
  };
  for (unsigned size = 1; size <= max_support && size <= pool.size(); ++size) {
    choose(0, size);
  }

  for (const CanonicalSum<S>& x : candidates) {
    for (const CanonicalSum<S>& y : candidates) {
      if ((x * y).is_zero()) {
        return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

/// Finite instances search their whole carrier.
template <FiniteSemigroup S>
std::optional<std::pair<CanonicalSum<S>, CanonicalSum<S>>> zero_divisor_search(
    const Handle<S>& h, unsigned max_support, unsigned coeff_bound) {
  return zero_divisor_search(h, h->carrier(), max_support, coeff_bound);
}

}  // namespace sgring::oracle
