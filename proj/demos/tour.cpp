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

// A short tour: build a ring over a semigroup, compute, form fractions,
// and lift a generator map into the integers.

#include <iostream>

#include "sgring/sgring.hpp"

int main() {
  using namespace sgring;

  // the free semigroup on {a, b} and two ring elements
  auto free2 = std::make_shared<const FreeSemigroup>(
      std::vector<std::string>{"a", "b"});
  auto a = embed(free2, *free2->parse_element("a"));
  auto b = embed(free2, *free2->parse_element("b"));
  std::cout << "(a+b)*(a-b) = " << (a + b) * (a - b) << "\n";

  // the same computation through the expression parser
  auto ast = parse_expr("(a + b)*(a - b)");
  std::cout << "parsed:       " << to_string(eval_expr(ast, free2)) << "\n";

  // fractions over the commutative instance (N>=1, +)
  auto nat = std::make_shared<const NaturalsAdd>();
  Fraction<NaturalsAdd> f(embed(nat, Nat{1}), embed(nat, Nat{2}));  // x/x^2
  std::cout << "x/x^2 + x/x^2 = " << (f + f) << "\n";
  std::cout << "  equals 2/x?  "
            << (equivalent(f + f, Fraction<NaturalsAdd>(
                                      scale(embed(nat, Nat{1}), Int(2)),
                                      embed(nat, Nat{2})))
                    ? "yes"
                    : "no")
            << "\n";

  // lift n -> 2^n to the unique ring homomorphism into the integers
  auto spec = hom_from_generators<NaturalsAdd, Int>(nat, integer_ring(),
                                                    {{Nat{1}, Int(2)}});
  RingLift<NaturalsAdd, Int> lift(spec, integer_ring());
  auto x = CanonicalSum<NaturalsAdd>(nat, {{Nat{1}, Int(1)}, {Nat{2}, Int(1)}});
  std::cout << "f#(" << x << ") = " << lift(x).get_str() << "\n";
  return 0;
}
