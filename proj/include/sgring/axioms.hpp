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
#include <sstream>
#include <string>
#include <vector>

#include "sgring/canonical_sum.hpp"
#include "sgring/fraction.hpp"
#include "sgring/random.hpp"
#include "sgring/sampling.hpp"
#include "sgring/semigroup.hpp"

namespace sgring {

struct LawResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t aborted = 0;  // samples stopped by ZeroDivisorDetected
  std::string detail;       // first failure, witness, or abort reason

  bool pass() const { return failures == 0 && aborted == 0; }
};

/// Seeded property run over one instance: the ring laws, the embedding
/// homomorphism law, commutativity transfer, and (for commutative
/// instances) the fraction-field laws. Output is deterministic for a fixed
/// seed, so reports can be compared byte for byte.
struct AxiomReport {
  std::string instance;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  unsigned max_support = 4;
  unsigned coeff_bound = 5;
  std::vector<LawResult> ring_laws;
  std::vector<LawResult> field_laws;  // empty for noncommutative instances

  bool pass() const {
    for (const LawResult& law : ring_laws) {
      if (!law.pass()) {
        return false;
      }
    }
    for (const LawResult& law : field_laws) {
      if (!law.pass()) {
        return false;
      }
    }
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    os << "axioms over " << instance << " (samples=" << samples
       << ", seed=" << seed << ", max-support=" << max_support
       << ", coeff-bound=" << coeff_bound << ")\n";
    os << "ring laws:\n";
    auto emit = [&os](const LawResult& law) {
      os << "  " << law.name << ": " << (law.pass() ? "pass" : "FAIL") << " ("
         << (law.checked - law.failures - law.aborted) << "/" << law.checked
         << ")";
      if (!law.detail.empty()) {
        os << " [" << law.detail << "]";
      }
      os << "\n";
    };
    for (const LawResult& law : ring_laws) {
      emit(law);
    }
    if (field_laws.empty()) {
      os << "field laws: skipped (noncommutative instance)\n";
    } else {
      os << "field laws:\n";
      for (const LawResult& law : field_laws) {
        emit(law);
      }
    }
    os << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }
};

namespace detail {

template <typename Sample>
LawResult run_law(const std::string& name, std::size_t samples,
                  std::uint64_t seed, std::uint64_t ordinal, Sample&& sample) {
  LawResult law;
  law.name = name;
  Prng rng(seed * 0x100000001b3ULL + ordinal);
  for (std::size_t i = 0; i < samples; ++i) {
    ++law.checked;
    try {
      std::string failure = sample(rng);
      if (!failure.empty()) {
        ++law.failures;
        if (law.detail.empty()) {
          law.detail = failure;
        }
      }
    } catch (const ZeroDivisorDetected& e) {
      ++law.aborted;
      if (law.detail.empty()) {
        law.detail = e.what();
      }
    }
  }
  return law;
}

}  // namespace detail

template <Semigroup S>
AxiomReport check_axioms(const Handle<S>& h, std::size_t samples,
                         std::uint64_t seed, unsigned max_support = 4,
                         unsigned coeff_bound = 5) {
  AxiomReport report;
  report.instance = h->id();
  report.seed = seed;
  report.samples = samples;
  report.max_support = max_support;
  report.coeff_bound = coeff_bound;

  auto sum = [&](Prng& rng) {
    return random_sum(h, rng, max_support, coeff_bound);
  };
  std::uint64_t ordinal = 0;
  auto law = [&](const std::string& name, auto&& body) {
    return detail::run_law(name, samples, seed, ++ordinal, body);
  };

  report.ring_laws.push_back(law("add-associativity", [&](Prng& rng) {
    auto x = sum(rng), y = sum(rng), z = sum(rng);
    return (x + y) + z == x + (y + z)
               ? std::string()
               : "x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z);
  }));
  report.ring_laws.push_back(law("add-commutativity", [&](Prng& rng) {
    auto x = sum(rng), y = sum(rng);
    return x + y == y + x ? std::string()
                          : "x=" + to_string(x) + " y=" + to_string(y);
  }));
  report.ring_laws.push_back(law("add-zero", [&](Prng& rng) {
    auto x = sum(rng);
    return x + CanonicalSum<S>::zero(h) == x ? std::string() : to_string(x);
  }));
  report.ring_laws.push_back(law("add-inverse", [&](Prng& rng) {
    auto x = sum(rng);
    return (x + (-x)).is_zero() ? std::string() : to_string(x);
  }));
  report.ring_laws.push_back(law("mul-associativity", [&](Prng& rng) {
    auto x = sum(rng), y = sum(rng), z = sum(rng);
    return (x * y) * z == x * (y * z)
               ? std::string()
               : "x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z);
  }));
  report.ring_laws.push_back(law("left-distributivity", [&](Prng& rng) {
    auto a = sum(rng), x = sum(rng), y = sum(rng);
    return a * (x + y) == a * x + a * y
               ? std::string()
               : "a=" + to_string(a) + " x=" + to_string(x) + " y=" + to_string(y);
  }));
  report.ring_laws.push_back(law("right-distributivity", [&](Prng& rng) {
    auto a = sum(rng), x = sum(rng), y = sum(rng);
    return (x + y) * a == x * a + y * a
               ? std::string()
               : "a=" + to_string(a) + " x=" + to_string(x) + " y=" + to_string(y);
  }));
  report.ring_laws.push_back(law("embed-homomorphism", [&](Prng& rng) {
    auto a = h->sample(rng);
    auto b = h->sample(rng);
    return embed(h, a) * embed(h, b) == embed(h, h->op(a, b))
               ? std::string()
               : "a=" + h->print(a) + " b=" + h->print(b);
  }));

  if (h->commutative()) {
    report.ring_laws.push_back(law("mul-commutativity", [&](Prng& rng) {
      auto x = sum(rng), y = sum(rng);
      return x * y == y * x ? std::string()
                            : "x=" + to_string(x) + " y=" + to_string(y);
    }));
  } else {
    // commutativity transfer: a noncommutative instance must yield a
    // concrete witness pair
    LawResult witness;
    witness.name = "noncommutativity-witness";
    Prng rng(seed * 0x100000001b3ULL + 99);
    witness.checked = samples;
    witness.failures = 1;
    witness.detail = "no witness found";
    for (std::size_t i = 0; i < samples; ++i) {
      auto x = random_sum(h, rng, max_support, coeff_bound);
      auto y = random_sum(h, rng, max_support, coeff_bound);
      if (x * y != y * x) {
        witness.failures = 0;
        witness.detail = "x=" + to_string(x) + " y=" + to_string(y);
        break;
      }
    }
    report.ring_laws.push_back(witness);
  }

  if (!h->commutative()) {
    return report;
  }

  auto frac = [&](Prng& rng) {
    return random_fraction(h, rng, max_support, coeff_bound);
  };
  auto show2 = [](const Fraction<S>& a, const Fraction<S>& b) {
    return "a=" + to_string(a) + " b=" + to_string(b);
  };

  report.field_laws.push_back(law("frac-add-associativity", [&](Prng& rng) {
    auto a = frac(rng), b = frac(rng), c = frac(rng);
    return equivalent((a + b) + c, a + (b + c)) ? std::string() : show2(a, b);
  }));
  report.field_laws.push_back(law("frac-add-commutativity", [&](Prng& rng) {
    auto a = frac(rng), b = frac(rng);
    return equivalent(a + b, b + a) ? std::string() : show2(a, b);
  }));
  report.field_laws.push_back(law("frac-add-zero", [&](Prng& rng) {
    auto a = frac(rng);
    return equivalent(a + Fraction<S>::zero(h), a) ? std::string()
                                                   : to_string(a);
  }));
  report.field_laws.push_back(law("frac-add-inverse", [&](Prng& rng) {
    auto a = frac(rng);
    return equivalent(a + (-a), Fraction<S>::zero(h)) ? std::string()
                                                      : to_string(a);
  }));
  report.field_laws.push_back(law("frac-mul-associativity", [&](Prng& rng) {
    auto a = frac(rng), b = frac(rng), c = frac(rng);
    return equivalent((a * b) * c, a * (b * c)) ? std::string() : show2(a, b);
  }));
  report.field_laws.push_back(law("frac-mul-commutativity", [&](Prng& rng) {
    auto a = frac(rng), b = frac(rng);
    return equivalent(a * b, b * a) ? std::string() : show2(a, b);
  }));
  report.field_laws.push_back(law("frac-mul-one", [&](Prng& rng) {
    auto a = frac(rng);
    return equivalent(a * Fraction<S>::one(h), a) ? std::string()
                                                  : to_string(a);
  }));
  report.field_laws.push_back(law("frac-distributivity", [&](Prng& rng) {
    auto a = frac(rng), b = frac(rng), c = frac(rng);
    return equivalent(a * (b + c), a * b + a * c) ? std::string() : show2(a, b);
  }));
  report.field_laws.push_back(law("frac-mul-inverse", [&](Prng& rng) {
    Fraction<S> a = frac(rng);
    while (a.is_zero()) {
      a = frac(rng);
    }
    return equivalent(a * a.inverse(), Fraction<S>::one(h)) ? std::string()
                                                            : to_string(a);
  }));
  report.field_laws.push_back(law("frac-scale-invariance", [&](Prng& rng) {
    auto p = random_sum(h, rng, max_support, coeff_bound);
    auto q = random_nonzero_sum(h, rng, max_support, coeff_bound);
    auto r = random_nonzero_sum(h, rng, max_support, coeff_bound);
    Fraction<S> plain(p, q);
    Fraction<S> scaled(detail::checked_mul(r, p), detail::checked_mul(r, q));
    return equivalent(plain, scaled)
               ? std::string()
               : "p=" + to_string(p) + " q=" + to_string(q) + " r=" + to_string(r);
  }));

  return report;
}

}  // namespace sgring
