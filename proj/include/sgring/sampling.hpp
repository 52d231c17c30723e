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

#include <utility>
#include <vector>

#include "sgring/canonical_sum.hpp"
#include "sgring/fraction.hpp"
#include "sgring/random.hpp"
#include "sgring/semigroup.hpp"

namespace sgring {

/// Random ring element with support at most max_support and coefficient
/// magnitudes in [1, coeff_bound]. Colliding draws merge and may cancel,
/// so smaller supports (including zero) occur naturally.
template <Semigroup S>
CanonicalSum<S> random_sum(const Handle<S>& h, Prng& rng, unsigned max_support,
                           unsigned coeff_bound) {
  std::vector<std::pair<typename S::element_type, Int>> terms;
  unsigned k = static_cast<unsigned>(rng.below(max_support + 1));
  for (unsigned i = 0; i < k; ++i) {
    long mag = 1 + static_cast<long>(rng.below(coeff_bound));
    terms.emplace_back(h->sample(rng), Int(rng.coin() ? mag : -mag));
  }
  return CanonicalSum<S>(h, terms);
}

template <Semigroup S>
CanonicalSum<S> random_nonzero_sum(const Handle<S>& h, Prng& rng,
                                   unsigned max_support, unsigned coeff_bound) {
  for (;;) {
    CanonicalSum<S> x = random_sum(h, rng, max_support, coeff_bound);
    if (!x.is_zero()) {
      return x;
    }
  }
}

template <Semigroup S>
Fraction<S> random_fraction(const Handle<S>& h, Prng& rng, unsigned max_support,
                            unsigned coeff_bound) {
  CanonicalSum<S> num = random_sum(h, rng, max_support, coeff_bound);
  CanonicalSum<S> den = random_nonzero_sum(h, rng, max_support, coeff_bound);
  return Fraction<S>(std::move(num), std::move(den));
}

}  // namespace sgring
