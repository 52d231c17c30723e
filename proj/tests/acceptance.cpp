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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails. argv[1] must be the
// path to the sgr binary (used by the CLI determinism criterion).

#include <sys/wait.h>

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "sgring/sgring.hpp"

using namespace sgring;

namespace {

struct Runner {
  int failures = 0;

  void run(const std::string& name, const std::function<std::string()>& body) {
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("unexpected exception: ") + e.what();
    }
    if (detail.empty()) {
      std::cout << "[PASS] " << name << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << name << ": " << detail << "\n";
    }
  }
};

Handle<FreeSemigroup> free_ab() {
  return std::make_shared<const FreeSemigroup>(
      std::vector<std::string>{"a", "b"});
}
Handle<FreeCommutativeSemigroup> freecomm_x() {
  return std::make_shared<const FreeCommutativeSemigroup>(
      std::vector<std::string>{"x"}, false);
}
Handle<FreeCommutativeSemigroup> freecomm_xy() {
  return std::make_shared<const FreeCommutativeSemigroup>(
      std::vector<std::string>{"x", "y"}, false);
}
Handle<FreeCommutativeSemigroup> monoid_x() {
  return std::make_shared<const FreeCommutativeSemigroup>(
      std::vector<std::string>{"x"}, true);
}
Handle<TableSemigroup> z2() {
  return std::make_shared<const TableSemigroup>(
      validate_cayley({{0, 1}, {1, 0}}, {"e", "g"}));
}

// ---------------------------------------------------------------------------

std::string normal_form_exhaustive() {
  auto h = free_ab();
  Word a = *h->parse_element("a");
  Word b = *h->parse_element("b");
  std::vector<SignedEntry<FreeSemigroup>> atoms = {
      {Sign::plus, a}, {Sign::minus, a}, {Sign::plus, b}, {Sign::minus, b}};

  std::vector<FormalSum<FreeSemigroup>> grid;
  grid.emplace_back(h);
  std::size_t level_start = 0;
  for (int len = 1; len <= 4; ++len) {
    std::size_t level_end = grid.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (const auto& atom : atoms) {
        auto entries = grid[i].entries();
        entries.push_back(atom);
        grid.emplace_back(h, entries);
      }
    }
    level_start = level_end;
  }
  if (grid.size() != 341) {
    return "grid has " + std::to_string(grid.size()) + " sums, expected 341";
  }

  std::vector<std::size_t> classes = oracle::rewrite_closure_classes(grid, 6);
  std::vector<CanonicalSum<FreeSemigroup>> norms;
  norms.reserve(grid.size());
  for (const auto& fs : grid) {
    norms.push_back(normalize(fs));
  }
  std::size_t mismatches = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      ++pairs;
      if ((norms[i] == norms[j]) != (classes[i] == classes[j])) {
        ++mismatches;
      }
    }
  }
  if (mismatches != 0) {
    return std::to_string(mismatches) + " of " + std::to_string(pairs) +
           " pairs disagree with the rewrite-closure oracle";
  }
  // tie the pairwise search itself in on a random subsample
  Prng rng(500);
  for (int k = 0; k < 300; ++k) {
    std::size_t i = rng.below(grid.size());
    std::size_t j = rng.below(grid.size());
    if (oracle::rewrite_closure_equiv(grid[i], grid[j], 6) !=
        (norms[i] == norms[j])) {
      return "pairwise closure disagrees with normalize on " +
             to_string(grid[i]) + " vs " + to_string(grid[j]);
    }
  }
  return {};
}

template <Semigroup S>
std::string ring_axioms_on(const Handle<S>& h, std::uint64_t seed) {
  Prng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    auto x = random_sum(h, rng, 4, 5);
    auto y = random_sum(h, rng, 4, 5);
    auto z = random_sum(h, rng, 4, 5);
    if ((x + y) + z != x + (y + z)) {
      return h->id() + ": add-associativity failed";
    }
    if (x + y != y + x) {
      return h->id() + ": add-commutativity failed";
    }
    if ((x * y) * z != x * (y * z)) {
      return h->id() + ": mul-associativity failed";
    }
    if (x * (y + z) != x * y + x * z) {
      return h->id() + ": left distributivity failed";
    }
    if ((y + z) * x != y * x + z * x) {
      return h->id() + ": right distributivity failed";
    }
  }
  return {};
}

std::string ring_axioms() {
  std::string r;
  r = ring_axioms_on(free_ab(), 1001);
  if (!r.empty()) {
    return r;
  }
  r = ring_axioms_on(freecomm_xy(), 1002);
  if (!r.empty()) {
    return r;
  }
  r = ring_axioms_on(std::make_shared<const NaturalsAdd>(), 1003);
  if (!r.empty()) {
    return r;
  }
  std::vector<CayleyTable> tables = oracle::enumerate_semigroups(2);
  if (tables.size() != 8) {
    return "expected 8 associative order-2 tables, enumerator yielded " +
           std::to_string(tables.size());
  }
  std::uint64_t seed = 1100;
  for (const CayleyTable& t : tables) {
    auto h = std::make_shared<const TableSemigroup>(t);
    r = ring_axioms_on(h, ++seed);
    if (!r.empty()) {
      return r;
    }
  }
  return {};
}

template <Semigroup S>
std::string no_commutativity_counterexample(const Handle<S>& h,
                                            std::uint64_t seed) {
  Prng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    auto x = random_sum(h, rng, 4, 5);
    auto y = random_sum(h, rng, 4, 5);
    if (x * y != y * x) {
      return h->id() + ": commutative instance has noncommuting sums " +
             to_string(x) + " and " + to_string(y);
    }
  }
  return {};
}

std::string commutativity_transfer() {
  auto h = free_ab();
  Prng rng(2001);
  bool witness_found = false;
  std::string witness;
  for (int i = 0; i < 1000 && !witness_found; ++i) {
    auto x = random_sum(h, rng, 4, 5);
    auto y = random_sum(h, rng, 4, 5);
    if (x * y != y * x) {
      witness_found = true;
      witness = "x = " + to_string(x) + ", y = " + to_string(y);
    }
  }
  if (!witness_found) {
    return "no noncommutativity witness found over free:a,b in 1000 samples";
  }

  std::string r;
  r = no_commutativity_counterexample(freecomm_xy(), 2002);
  if (!r.empty()) {
    return r;
  }
  r = no_commutativity_counterexample(std::make_shared<const NaturalsAdd>(),
                                      2003);
  if (!r.empty()) {
    return r;
  }
  r = no_commutativity_counterexample(std::make_shared<const NaturalsMax>(),
                                      2004);
  if (!r.empty()) {
    return r;
  }
  r = no_commutativity_counterexample(monoid_x(), 2005);
  if (!r.empty()) {
    return r;
  }
  std::uint64_t seed = 2100;
  for (const CayleyTable& t : oracle::enumerate_semigroups(2)) {
    if (!t.commutative) {
      continue;
    }
    r = no_commutativity_counterexample(
        std::make_shared<const TableSemigroup>(t), ++seed);
    if (!r.empty()) {
      return r;
    }
  }
  return {};
}

std::string polynomial_oracle() {
  auto nat = std::make_shared<const NaturalsAdd>();
  Prng rng(3001);
  for (int i = 0; i < 500; ++i) {
    auto x = random_sum(nat, rng, 4, 5);
    auto y = random_sum(nat, rng, 4, 5);
    if (oracle::to_poly(x + y) != oracle::to_poly(x) + oracle::to_poly(y)) {
      return "to_poly does not intertwine addition for x = " + to_string(x) +
             ", y = " + to_string(y);
    }
    if (oracle::to_poly(x * y) != oracle::to_poly(x) * oracle::to_poly(y)) {
      return "to_poly does not intertwine multiplication for x = " +
             to_string(x) + ", y = " + to_string(y);
    }
  }
  return {};
}

template <Semigroup S>
std::string field_axioms_on(const Handle<S>& h, std::uint64_t seed) {
  Prng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    Fraction<S> a = random_fraction(h, rng, 3, 4);
    Fraction<S> b = random_fraction(h, rng, 3, 4);
    Fraction<S> c = random_fraction(h, rng, 3, 4);
    if (!equivalent((a + b) + c, a + (b + c))) {
      return h->id() + ": fraction add-associativity failed";
    }
    if (!equivalent(a + b, b + a)) {
      return h->id() + ": fraction add-commutativity failed";
    }
    if (!equivalent((a * b) * c, a * (b * c))) {
      return h->id() + ": fraction mul-associativity failed";
    }
    if (!equivalent(a * b, b * a)) {
      return h->id() + ": fraction mul-commutativity failed";
    }
    if (!equivalent(a * (b + c), a * b + a * c)) {
      return h->id() + ": fraction distributivity failed";
    }
    if (!equivalent(a + Fraction<S>::zero(h), a)) {
      return h->id() + ": fraction additive identity failed";
    }
    if (!equivalent(a + (-a), Fraction<S>::zero(h))) {
      return h->id() + ": fraction additive inverse failed";
    }
    if (!equivalent(a * Fraction<S>::one(h), a)) {
      return h->id() + ": fraction multiplicative identity failed";
    }
  }
  for (int i = 0; i < 200; ++i) {
    Fraction<S> a = random_fraction(h, rng, 3, 4);
    while (a.is_zero()) {
      a = random_fraction(h, rng, 3, 4);
    }
    if (!equivalent(a * a.inverse(), Fraction<S>::one(h))) {
      return h->id() + ": nonzero fraction without working inverse";
    }
  }
  return {};
}

std::string field_axioms() {
  auto nat = std::make_shared<const NaturalsAdd>();
  std::string r = field_axioms_on<NaturalsAdd>(nat, 4001);
  if (!r.empty()) {
    return r;
  }
  r = field_axioms_on<FreeCommutativeSemigroup>(freecomm_x(), 4002);
  if (!r.empty()) {
    return r;
  }

  // fraction arithmetic against the exact rational-function oracle
  auto mirror = [](const Fraction<NaturalsAdd>& f) {
    return oracle::RatFunction(oracle::to_poly(f.num()),
                               oracle::to_poly(f.den()));
  };
  Prng rng(4003);
  for (int i = 0; i < 500; ++i) {
    Fraction<NaturalsAdd> a = random_fraction(nat, rng, 3, 4);
    Fraction<NaturalsAdd> b = random_fraction(nat, rng, 3, 4);
    if (mirror(a + b) != mirror(a) + mirror(b)) {
      return "fracAdd disagrees with the rational-function oracle";
    }
    if (mirror(a * b) != mirror(a) * mirror(b)) {
      return "fracMul disagrees with the rational-function oracle";
    }
    if (equivalent(a, b) != (mirror(a) == mirror(b))) {
      return "fracEquals disagrees with the rational-function oracle";
    }
  }
  return {};
}

template <Semigroup S>
std::string scale_invariance_on(const Handle<S>& h, std::uint64_t seed) {
  Prng rng(seed);
  for (int i = 0; i < 500; ++i) {
    auto p = random_sum(h, rng, 3, 4);
    auto q = random_nonzero_sum(h, rng, 3, 4);
    auto r = random_nonzero_sum(h, rng, 3, 4);
    if (!equivalent(Fraction<S>(p, q), Fraction<S>(r * p, r * q))) {
      return h->id() + ": p/q not equal to (r*p)/(r*q) for p = " + to_string(p) +
             ", q = " + to_string(q) + ", r = " + to_string(r);
    }
  }
  return {};
}

std::string scale_invariance() {
  std::string r =
      scale_invariance_on<NaturalsAdd>(std::make_shared<const NaturalsAdd>(), 5001);
  if (!r.empty()) {
    return r;
  }
  return scale_invariance_on<FreeCommutativeSemigroup>(freecomm_x(), 5002);
}

std::string ring_lift_property() {
  auto nat = std::make_shared<const NaturalsAdd>();
  auto spec = hom_from_generators<NaturalsAdd, Int>(nat, integer_ring(),
                                                    {{Nat{1}, Int(2)}});
  RingLift<NaturalsAdd, Int> lift(spec, integer_ring());

  RingHomReport report = check_ring_hom(lift, 1000, 6001);
  if (!report.pass()) {
    return "lifted exponential map failed check_ring_hom:\n" + report.str();
  }
  for (unsigned long n = 1; n <= 20; ++n) {
    Int expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, n);
    if (lift(embed(nat, Nat{n})) != expected) {
      return "f#(e1(" + std::to_string(n) + ")) != 2^" + std::to_string(n);
    }
  }
  Prng rng(6004);
  for (int i = 0; i < 1000; ++i) {
    Nat s = nat->sample(rng);
    if (lift(embed(nat, s)) != spec.map(s)) {
      return "diagram f = f#(e1(.)) broke at element " + std::to_string(s);
    }
  }

  HomSpec<NaturalsAdd, Int> mutated{nat, [](const Nat& n) {
                                      if (n == 2) {
                                        return Int(5);
                                      }
                                      Int r;
                                      mpz_ui_pow_ui(r.get_mpz_t(), 2,
                                                    static_cast<unsigned long>(n));
                                      return r;
                                    }};
  if (check_semigroup_hom(mutated, integer_ring(), 500, 6002).pass()) {
    return "mutated generator map was not detected as non-homomorphic";
  }
  RingLift<NaturalsAdd, Int> bad_lift(mutated, integer_ring());
  if (check_ring_hom(bad_lift, 500, 6003).pass()) {
    return "mutated lift passed check_ring_hom";
  }
  return {};
}

std::string field_lift_property() {
  using oracle::RatFunction;
  auto nat = std::make_shared<const NaturalsAdd>();
  FieldOps<RatFunction> field = ratfunc_field();
  auto spec = hom_from_generators<NaturalsAdd, RatFunction>(
      nat, field, {{Nat{1}, RatFunction::variable()}});
  FieldLift<NaturalsAdd, RatFunction> lift(spec, field);

  Prng rng(7001);
  for (int i = 0; i < 200; ++i) {
    auto x = random_sum(nat, rng, 3, 4);
    if (!(lift(to_fraction(x)) == lift(x))) {
      return "g-nabla after e2 differs from g# at x = " + to_string(x);
    }
    auto p = random_sum(nat, rng, 3, 4);
    auto q = random_nonzero_sum(nat, rng, 3, 4);
    auto r = random_nonzero_sum(nat, rng, 3, 4);
    if (!(lift(Fraction<NaturalsAdd>(r * p, r * q)) ==
          lift(Fraction<NaturalsAdd>(p, q)))) {
      return "g-nabla is not constant on the scale move at p = " + to_string(p);
    }
  }

  FieldOps<Rational> rat = rational_field();
  auto eval2 = hom_from_generators<NaturalsAdd, Rational>(
      nat, rat, {{Nat{1}, Rational(Int(2))}});
  FieldLift<NaturalsAdd, Rational> eval_lift(eval2, rat);
  CanonicalSum<NaturalsAdd> kernel(nat, {{Nat{2}, Int(1)}, {Nat{1}, Int(-2)}});
  if (!(eval_lift(kernel) == Rational())) {
    return "x^2 - 2x does not evaluate to 0 at 2";
  }
  try {
    (void)eval_lift(Fraction<NaturalsAdd>(embed(nat, Nat{1}), kernel));
    return "denominator in the kernel did not raise DenominatorMapsToZero";
  } catch (const DenominatorMapsToZero&) {
  }
  return {};
}

std::string zero_divisor_audit() {
  auto h = z2();
  auto witness = oracle::zero_divisor_search(h, 2, 1);
  if (!witness) {
    return "no zero-divisor witness found over the z2 table";
  }
  CanonicalSum<TableSemigroup> expected_x(h, {{TableIndex{0}, Int(1)},
                                              {TableIndex{1}, Int(1)}});
  CanonicalSum<TableSemigroup> expected_y(h, {{TableIndex{0}, Int(1)},
                                              {TableIndex{1}, Int(-1)}});
  if (witness->first != expected_x || witness->second != expected_y) {
    return "witness is (" + to_string(witness->first) + ", " +
           to_string(witness->second) + "), expected (+e +g, +e -g)";
  }
  if (!(witness->first * witness->second).is_zero()) {
    return "witness product is not zero";
  }

  auto unit = *unit_of(h);
  try {
    (void)(Fraction<TableSemigroup>(expected_x, unit) *
           Fraction<TableSemigroup>(expected_y, unit));
    return "fraction multiplication over z2 did not raise ZeroDivisorDetected";
  } catch (const ZeroDivisorDetected&) {
  }
  try {
    (void)equivalent(Fraction<TableSemigroup>(unit, expected_x),
                     Fraction<TableSemigroup>(expected_y, unit));
    return "fraction equality over z2 did not raise ZeroDivisorDetected";
  } catch (const ZeroDivisorDetected&) {
  }
  return {};
}

template <Semigroup S>
std::string check_unit(const Handle<S>& h, bool expect_unit,
                       std::uint64_t seed) {
  auto unit = unit_of(h);
  if (unit.has_value() != expect_unit) {
    return h->id() + ": unit_of " +
           (unit ? "present" : "absent") + ", expected " +
           (expect_unit ? "present" : "absent");
  }
  if (unit) {
    Prng rng(seed);
    for (int i = 0; i < 200; ++i) {
      auto x = random_sum(h, rng, 4, 5);
      if (*unit * x != x || x * *unit != x) {
        return h->id() + ": unit does not act trivially on " + to_string(x);
      }
    }
  }
  return {};
}

std::string unit_detection() {
  std::string r;
  r = check_unit(free_ab(), false, 8001);
  if (!r.empty()) {
    return r;
  }
  r = check_unit(freecomm_xy(), false, 8002);
  if (!r.empty()) {
    return r;
  }
  r = check_unit(monoid_x(), true, 8003);
  if (!r.empty()) {
    return r;
  }
  r = check_unit(std::make_shared<const NaturalsAdd>(), false, 8004);
  if (!r.empty()) {
    return r;
  }
  r = check_unit(std::make_shared<const NaturalsMax>(), true, 8005);
  if (!r.empty()) {
    return r;
  }
  r = check_unit(z2(), true, 8006);
  if (!r.empty()) {
    return r;
  }
  auto constant = std::make_shared<const TableSemigroup>(
      validate_cayley({{0, 0}, {0, 0}}));
  return check_unit(constant, false, 8007);
}

std::string run_command(const std::string& command, int& exit_code) {
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) {
    exit_code = -1;
    return {};
  }
  std::string output;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    output.append(buffer, n);
  }
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

std::string cli_determinism(const std::string& sgr_path) {
  const std::string command =
      sgr_path + " axioms --semigroup free:a,b --samples 200 --seed 7";
  int code1 = 0;
  int code2 = 0;
  std::string first = run_command(command, code1);
  std::string second = run_command(command, code2);
  if (code1 != 0 || code2 != 0) {
    return "axioms run exited with " + std::to_string(code1) + " / " +
           std::to_string(code2) + "\n" + first;
  }
  if (first != second) {
    return "two runs with the same seed produced different reports";
  }
  if (first.find("result: PASS") == std::string::npos) {
    return "axioms report did not pass:\n" + first;
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-sgr>\n";
    return 2;
  }
  std::string sgr_path = argv[1];

  Runner runner;
  runner.run(
      "normal-form correctness (free:a,b, all 341 sums of length <= 4)",
      normal_form_exhaustive);
  runner.run("ring axioms (free:a,b, freecomm:x,y, nat+, all order-2 tables; "
             "1000 triples each)",
             ring_axioms);
  runner.run("commutativity transfer (witness over free:a,b; 1000 clean "
             "samples over commutative instances)",
             commutativity_transfer);
  runner.run("polynomial-oracle isomorphism (nat+, 500 pairs)",
             polynomial_oracle);
  runner.run("field axioms (nat+ and freecomm:x, 1000 triples, 200 inverses, "
             "500 oracle pairs)",
             field_axioms);
  runner.run("scale invariance of fraction equality (500 samples per "
             "instance)",
             scale_invariance);
  runner.run("ring-lift universal property (2^n, 1000 pairs, n = 1..20, mutation "
             "detected)",
             ring_lift_property);
  runner.run("field-lift universal property (t^n, 200 samples; kernel denominator "
             "detected)",
             field_lift_property);
  runner.run("zero-divisor audit (z2 witness; fraction guard)",
             zero_divisor_audit);
  runner.run("unit detection (present iff the semigroup has an identity)",
             unit_detection);
  runner.run("CLI determinism (sgr axioms --seed 7, byte-identical reports)",
             [&] { return cli_determinism(sgr_path); });

  if (runner.failures != 0) {
    std::cout << runner.failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
