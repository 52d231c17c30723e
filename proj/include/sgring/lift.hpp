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
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgring/canonical_sum.hpp"
#include "sgring/errors.hpp"
#include "sgring/fraction.hpp"
#include "sgring/numbers.hpp"
#include "sgring/oracle/polynomial.hpp"
#include "sgring/random.hpp"
#include "sgring/sampling.hpp"
#include "sgring/semigroup.hpp"

namespace sgring {

// ---------------------------------------------------------------------------
// Abstract target structures
// ---------------------------------------------------------------------------

/// A ring the lift machinery can compute in, described by its operations
/// alone. Ring laws are spot-checked by tests, never assumed proven.
template <typename V>
struct RingOps {
  std::string name;
  V zero;
  std::function<V(const V&, const V&)> add;
  std::function<V(const V&, const V&)> mul;
  std::function<V(const V&)> neg;
  std::function<bool(const V&, const V&)> equal;
  std::function<std::string(const V&)> show;
};

/// A field target: the ring plus one and a partial inverse (defined on
/// nonzero values).
template <typename V>
struct FieldOps : RingOps<V> {
  V one;
  std::function<V(const V&)> inv;
};

inline RingOps<Int> integer_ring() {
  return RingOps<Int>{
      "int",
      Int(0),
      [](const Int& a, const Int& b) { return Int(a + b); },
      [](const Int& a, const Int& b) { return Int(a * b); },
      [](const Int& a) { return Int(-a); },
      [](const Int& a, const Int& b) { return a == b; },
      [](const Int& a) { return a.get_str(); }};
}

inline FieldOps<Rational> rational_field() {
  FieldOps<Rational> f;
  f.name = "rat";
  f.zero = Rational();
  f.add = [](const Rational& a, const Rational& b) { return a + b; };
  f.mul = [](const Rational& a, const Rational& b) { return a * b; };
  f.neg = [](const Rational& a) { return -a; };
  f.equal = [](const Rational& a, const Rational& b) { return a == b; };
  f.show = [](const Rational& a) { return a.str(); };
  f.one = Rational(Int(1));
  f.inv = [](const Rational& a) { return a.inverse(); };
  return f;
}

inline FieldOps<oracle::RatFunction> ratfunc_field() {
  using oracle::RatFunction;
  FieldOps<RatFunction> f;
  f.name = "ratfunc";
  f.zero = RatFunction::zero();
  f.add = [](const RatFunction& a, const RatFunction& b) { return a + b; };
  f.mul = [](const RatFunction& a, const RatFunction& b) { return a * b; };
  f.neg = [](const RatFunction& a) { return -a; };
  f.equal = [](const RatFunction& a, const RatFunction& b) { return a == b; };
  f.show = [](const RatFunction& a) { return a.str(); };
  f.one = RatFunction::one();
  f.inv = [](const RatFunction& a) { return a.inverse(); };
  return f;
}

// ---------------------------------------------------------------------------
// Semigroup homomorphism specifications
// ---------------------------------------------------------------------------

/// Candidate semigroup homomorphism from an instance into a target carrier.
/// The map is total on the elements actually used; the generator-based
/// builder extends finitely many images multiplicatively.
template <Semigroup S, typename V>
struct HomSpec {
  Handle<S> source;
  std::function<V(const typename S::element_type&)> map;
};

/// Extends images of generators to the whole instance along each element's
/// generator decomposition. Elements whose decomposition touches an unmapped
/// generator raise UnknownGenerator at application time.
template <Semigroup S, typename V>
HomSpec<S, V> hom_from_generators(
    Handle<S> source, const RingOps<V>& target,
    std::vector<std::pair<typename S::element_type, V>> images) {
  using element_type = typename S::element_type;
  auto table = std::make_shared<std::map<element_type, V>>();
  for (auto& [el, v] : images) {
    table->emplace(std::move(el), std::move(v));
  }
  Handle<S> h = source;
  auto mul = target.mul;
  std::function<V(const element_type&)> map =
      [h, table, mul](const element_type& el) -> V {
    auto direct = table->find(el);
    if (direct != table->end()) {
      return direct->second;
    }
    std::vector<element_type> parts = h->decompose(el);
    std::optional<V> acc;
    for (const element_type& part : parts) {
      auto it = table->find(part);
      if (it == table->end()) {
        throw UnknownGenerator("no image for generator '" + h->print(part) +
                               "' of " + h->id());
      }
      acc = acc ? mul(*acc, it->second) : it->second;
    }
    if (!acc) {
      throw UnknownGenerator("empty decomposition over " + h->id());
    }
    return *acc;
  };
  return HomSpec<S, V>{std::move(source), std::move(map)};
}

// ---------------------------------------------------------------------------
// Homomorphism property checks
// ---------------------------------------------------------------------------

struct HomViolation {
  std::string left;      // printed source operands
  std::string right;
  std::string mapped;    // f(a*b)
  std::string composed;  // f(a)*f(b)
};

struct HomReport {
  std::string instance;
  std::string target;
  std::size_t pairs_checked = 0;
  bool exhaustive = false;
  std::vector<HomViolation> violations;

  bool pass() const { return violations.empty(); }

  std::string str() const {
    std::ostringstream os;
    os << "semigroup-hom " << instance << " -> " << target << ": "
       << (pass() ? "pass" : "FAIL") << " (" << pairs_checked << " pairs"
       << (exhaustive ? ", exhaustive" : "") << ")";
    for (const HomViolation& v : violations) {
      os << "\n  violation: f(" << v.left << "*" << v.right << ") = " << v.mapped
         << " but f(" << v.left << ")*f(" << v.right << ") = " << v.composed;
    }
    return os.str();
  }
};

/// Checks f(a*b) = f(a)*f(b); exhaustively over finite carriers, sampled
/// otherwise. At most 8 violations are recorded.
template <Semigroup S, typename V>
HomReport check_semigroup_hom(const HomSpec<S, V>& spec,
                              const RingOps<V>& target, std::size_t samples,
                              std::uint64_t seed) {
  using element_type = typename S::element_type;
  HomReport report;
  report.instance = spec.source->id();
  report.target = target.name;

  auto check_pair = [&](const element_type& a, const element_type& b) {
    V mapped = spec.map(spec.source->op(a, b));
    V composed = target.mul(spec.map(a), spec.map(b));
    ++report.pairs_checked;
    if (!target.equal(mapped, composed) && report.violations.size() < 8) {
      report.violations.push_back(HomViolation{spec.source->print(a),
                                               spec.source->print(b),
                                               target.show(mapped),
                                               target.show(composed)});
    }
  };

  if constexpr (FiniteSemigroup<S>) {
    report.exhaustive = true;
    std::vector<element_type> all = spec.source->carrier();
    for (const element_type& a : all) {
      for (const element_type& b : all) {
        check_pair(a, b);
      }
    }
  } else {
    Prng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      check_pair(spec.source->sample(rng), spec.source->sample(rng));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// The ring lift f#
// ---------------------------------------------------------------------------

/// c-fold target addition realized with add/neg only (binary doubling), so
/// targets need not expose integer scaling.
template <typename V>
V coefficient_action(const RingOps<V>& target, const V& value, const Int& c) {
  int s = sgn(c);
  if (s == 0) {
    return target.zero;
  }
  Int n = abs(c);
  V acc = target.zero;
  V power = value;
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(n.get_mpz_t(), i)) {
      acc = target.add(acc, power);
    }
    if (i + 1 < bits) {
      power = target.add(power, power);
    }
  }
  return s < 0 ? target.neg(acc) : acc;
}

/// The unique ring homomorphism extending a semigroup homomorphism f:
/// the signed sum of images, with zero mapping to the target zero. Values
/// are determined entirely by f on the generators.
template <Semigroup S, typename V>
class RingLift {
 public:
  RingLift(HomSpec<S, V> spec, RingOps<V> target)
      : spec_(std::move(spec)), target_(std::move(target)) {}

  V operator()(const CanonicalSum<S>& x) const {
    if (!same_instance(x.semigroup(), spec_.source)) {
      throw HandleMismatch("lift applied to a sum over " +
                           x.semigroup()->id() + ", expected " +
                           spec_.source->id());
    }
    V acc = target_.zero;
    for (const auto& [el, c] : x.coeffs()) {
      acc = target_.add(acc, coefficient_action(target_, spec_.map(el), c));
    }
    return acc;
  }

  const HomSpec<S, V>& spec() const { return spec_; }
  const RingOps<V>& target() const { return target_; }

 private:
  HomSpec<S, V> spec_;
  RingOps<V> target_;
};

struct LawViolation {
  std::string law;
  std::string detail;
};

struct RingHomReport {
  std::string instance;
  std::string target;
  std::size_t pairs_checked = 0;
  std::size_t generators_checked = 0;
  std::vector<LawViolation> violations;

  bool pass() const { return violations.empty(); }

  std::string str() const {
    std::ostringstream os;
    os << "ring-hom " << instance << " -> " << target << ": "
       << (pass() ? "pass" : "FAIL") << " (" << pairs_checked
       << " pairs, diagram on " << generators_checked << " generators)";
    for (const LawViolation& v : violations) {
      os << "\n  " << v.law << ": " << v.detail;
    }
    return os.str();
  }
};

/// Random-pair additivity/multiplicativity check for a lifted map, plus the
/// commuting-diagram identity f = f#(e1(g)) on every generator.
template <Semigroup S, typename V>
RingHomReport check_ring_hom(const RingLift<S, V>& lift, std::size_t samples,
                             std::uint64_t seed, unsigned max_support = 4,
                             unsigned coeff_bound = 5) {
  const auto& h = lift.spec().source;
  const RingOps<V>& t = lift.target();
  RingHomReport report;
  report.instance = h->id();
  report.target = t.name;

  auto record = [&](const char* law, const std::string& detail) {
    if (report.violations.size() < 8) {
      report.violations.push_back(LawViolation{law, detail});
    }
  };

  Prng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    CanonicalSum<S> x = random_sum(h, rng, max_support, coeff_bound);
    CanonicalSum<S> y = random_sum(h, rng, max_support, coeff_bound);
    ++report.pairs_checked;
    V sum_image = lift(x + y);
    V sum_composed = t.add(lift(x), lift(y));
    if (!t.equal(sum_image, sum_composed)) {
      record("additivity", "f#(x+y) = " + t.show(sum_image) +
                               " but f#(x)+f#(y) = " + t.show(sum_composed) +
                               " for x = " + to_string(x) +
                               ", y = " + to_string(y));
    }
    V prod_image = lift(x * y);
    V prod_composed = t.mul(lift(x), lift(y));
    if (!t.equal(prod_image, prod_composed)) {
      record("multiplicativity",
             "f#(x*y) = " + t.show(prod_image) + " but f#(x)*f#(y) = " +
                 t.show(prod_composed) + " for x = " + to_string(x) +
                 ", y = " + to_string(y));
    }
  }

  for (const auto& g : h->generators()) {
    ++report.generators_checked;
    V lifted = lift(embed(h, g));
    V direct = lift.spec().map(g);
    if (!t.equal(lifted, direct)) {
      record("diagram",
             "f#(e1(" + h->print(g) + ")) = " + t.show(lifted) +
                 " but f(" + h->print(g) + ") = " + t.show(direct));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// The field lift g^nabla
// ---------------------------------------------------------------------------

/// The unique field homomorphism extending a semigroup homomorphism g into
/// a field: the lifted numerator divided by the lifted denominator. The
/// construction requires a commutative source; injectivity of the ring lift
/// is undecidable in general, so it is replaced by a per-application check
/// that the denominator does not map to zero.
template <Semigroup S, typename V>
class FieldLift {
 public:
  FieldLift(HomSpec<S, V> spec, FieldOps<V> target)
      : ring_lift_(HomSpec<S, V>{spec.source, spec.map},
                   static_cast<const RingOps<V>&>(target)),
        field_(std::move(target)) {
    if (!ring_lift_.spec().source->commutative()) {
      throw NoncommutativeSemigroup(
          "field lift requires a commutative source; " +
          ring_lift_.spec().source->id() + " is not");
    }
  }

  /// g# on ring elements (the composite with the fraction embedding).
  V operator()(const CanonicalSum<S>& x) const { return ring_lift_(x); }

  V operator()(const Fraction<S>& w) const {
    V den = ring_lift_(w.den());
    if (field_.equal(den, field_.zero)) {
      throw DenominatorMapsToZero("denominator " + to_string(w.den()) +
                                  " maps to 0 in " + field_.name);
    }
    V num = ring_lift_(w.num());
    return field_.mul(num, field_.inv(den));
  }

  const RingLift<S, V>& ring_lift() const { return ring_lift_; }
  const FieldOps<V>& target() const { return field_; }

 private:
  RingLift<S, V> ring_lift_;
  FieldOps<V> field_;
};

}  // namespace sgring
