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

#include <doctest.h>

#include "test_helpers.hpp"

using namespace sgring;

TEST_CASE("normalize cancels opposite pairs and forgets order") {
  auto h = test::free_ab();
  CHECK(normalize(test::formal(h, {{'+', "a"}, {'-', "a"}})).is_zero());
  CHECK(normalize(FormalSum<FreeSemigroup>(h)).is_zero());

  auto s = normalize(test::formal(h, {{'+', "a"}, {'+', "b"}, {'+', "a"}}));
  CHECK(s == test::sum_of(h, {{"a", 2}, {"b", 1}}));
}

TEST_CASE("minimal representative inverts normalize") {
  auto h = test::free_ab();
  CHECK(minimal_representative(CanonicalSum<FreeSemigroup>::zero(h)).empty());

  auto s = test::sum_of(h, {{"a", 2}, {"b", -1}});
  FormalSum<FreeSemigroup> rep = minimal_representative(s);
  CHECK(to_string(rep) == "<+a +a -b>");
  CHECK(rep.length() == 3);
  CHECK(normalize(rep) == s);

  auto single = test::sum_of(h, {{"a", 1}});
  CHECK(to_string(minimal_representative(single)) == "<+a>");

  Prng rng(11);
  for (int i = 0; i < 200; ++i) {
    auto x = random_sum(h, rng, 4, 5);
    CHECK(normalize(minimal_representative(x)) == x);
    Int total = 0;
    for (const auto& [el, c] : x.coeffs()) {
      total += abs(c);
    }
    CHECK(Int(static_cast<long>(minimal_representative(x).length())) == total);
  }
}

TEST_CASE("addition is the pointwise coefficient sum") {
  auto h = test::free_ab();
  auto a = test::sum_of(h, {{"a", 1}});
  CHECK((a + (-a)).is_zero());

  auto b3 = test::sum_of(h, {{"b", 3}});
  CHECK(CanonicalSum<FreeSemigroup>::zero(h) + b3 == b3);

  CHECK(test::sum_of(h, {{"a", 2}, {"b", -1}}) + b3 ==
        test::sum_of(h, {{"a", 2}, {"b", 2}}));
}

TEST_CASE("addition agrees with concatenate-then-normalize") {
  auto h = test::free_ab();
  Prng rng(13);
  for (int i = 0; i < 300; ++i) {
    auto x = random_sum(h, rng, 4, 5);
    auto y = random_sum(h, rng, 4, 5);
    CHECK(x + y == normalize(concat(minimal_representative(x),
                                    minimal_representative(y))));
  }
}

TEST_CASE("negation flips every coefficient") {
  auto h = test::free_ab();
  CHECK((-CanonicalSum<FreeSemigroup>::zero(h)).is_zero());
  CHECK(-test::sum_of(h, {{"a", 2}}) == test::sum_of(h, {{"a", -2}}));
  CHECK(-test::sum_of(h, {{"a", 1}, {"b", -3}}) ==
        test::sum_of(h, {{"a", -1}, {"b", 3}}));
}

TEST_CASE("multiplication expands the double sum") {
  auto h = test::free_ab();
  auto lhs = test::sum_of(h, {{"a", 1}, {"b", 1}});
  auto rhs = test::sum_of(h, {{"a", 1}, {"b", -1}});
  CHECK(lhs * rhs ==
        test::sum_of(h, {{"aa", 1}, {"ab", -1}, {"ba", 1}, {"bb", -1}}));

  CHECK((lhs * CanonicalSum<FreeSemigroup>::zero(h)).is_zero());
  CHECK((CanonicalSum<FreeSemigroup>::zero(h) * rhs).is_zero());

  auto nat = test::nat_add();
  auto x = test::sum_of(nat, {{"1", 1}});
  CHECK(x * x == test::sum_of(nat, {{"2", 1}}));
}

TEST_CASE("equality is structural on normal forms") {
  auto h = test::free_ab();
  CHECK(normalize(test::formal(h, {{'+', "a"}, {'-', "a"}})) ==
        normalize(FormalSum<FreeSemigroup>(h)));
  CHECK(test::sum_of(h, {{"a", 1}}) != test::sum_of(h, {{"b", 1}}));
  CHECK(normalize(test::formal(h, {{'+', "a"}, {'+', "b"}})) ==
        normalize(test::formal(h, {{'+', "b"}, {'+', "a"}})));

  auto other = std::make_shared<const FreeSemigroup>(
      std::vector<std::string>{"a", "c"});
  CHECK_THROWS_AS((void)(test::sum_of(h, {{"a", 1}}) ==
                         test::sum_of(other, {{"a", 1}})),
                  HandleMismatch);
  CHECK_THROWS_AS((void)(test::sum_of(h, {{"a", 1}}) +
                         test::sum_of(other, {{"a", 1}})),
                  HandleMismatch);
}

TEST_CASE("embed is multiplicative") {
  auto nat = test::nat_add();
  CHECK(embed(nat, Nat{1}) == test::sum_of(nat, {{"1", 1}}));

  auto h = test::free_ab();
  Word a = *h->parse_element("a");
  Word b = *h->parse_element("b");
  CHECK(embed(h, a) * embed(h, b) == embed(h, *h->parse_element("ab")));

  auto z2 = test::z2();
  CHECK(embed(z2, TableIndex{1}) == test::sum_of(z2, {{"g", 1}}));
  CHECK_THROWS_AS(embed(h, Word{{9}}), ForeignElement);
}

namespace {

template <Semigroup S>
void check_embed_hom(const Handle<S>& h, int samples) {
  Prng rng(17);
  for (int i = 0; i < samples; ++i) {
    auto a = h->sample(rng);
    auto b = h->sample(rng);
    REQUIRE(embed(h, a) * embed(h, b) == embed(h, h->op(a, b)));
  }
}

}  // namespace

TEST_CASE("embedding homomorphism law across instances") {
  check_embed_hom(test::free_ab(), 1000);
  check_embed_hom(test::freecomm_xy(), 1000);
  check_embed_hom(test::nat_add(), 1000);
  check_embed_hom(test::nat_max(), 1000);
  check_embed_hom(test::z2(), 1000);
}

TEST_CASE("unit_of mirrors the semigroup identity") {
  auto mono = test::monoid_x();
  auto unit = unit_of(mono);
  REQUIRE(unit.has_value());
  auto x5 = test::sum_of(mono, {{"x", 5}});
  CHECK(*unit * x5 == x5);
  CHECK(x5 * *unit == x5);

  CHECK_FALSE(unit_of(test::nat_add()).has_value());

  auto z2unit = unit_of(test::z2());
  REQUIRE(z2unit.has_value());
  CHECK(*z2unit == test::sum_of(test::z2(), {{"e", 1}}));
}

TEST_CASE("is_zero") {
  auto h = test::free_ab();
  CHECK(CanonicalSum<FreeSemigroup>::zero(h).is_zero());
  CHECK_FALSE(test::sum_of(h, {{"a", 1}}).is_zero());
  CHECK(normalize(test::formal(h, {{'+', "a"}, {'-', "a"}, {'+', "b"}, {'-', "b"}}))
            .is_zero());
}

namespace {

template <Semigroup S>
void check_abelian_group(const Handle<S>& h, int samples) {
  Prng rng(19);
  auto zero = CanonicalSum<S>::zero(h);
  for (int i = 0; i < samples; ++i) {
    auto x = random_sum(h, rng, 4, 5);
    auto y = random_sum(h, rng, 4, 5);
    auto z = random_sum(h, rng, 4, 5);
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE(x + y == y + x);
    REQUIRE(x + zero == x);
    REQUIRE((x + (-x)).is_zero());
  }
}

template <Semigroup S>
void check_ring_laws(const Handle<S>& h, int samples) {
  Prng rng(23);
  for (int i = 0; i < samples; ++i) {
    auto a = random_sum(h, rng, 4, 5);
    auto x = random_sum(h, rng, 4, 5);
    auto y = random_sum(h, rng, 4, 5);
    REQUIRE((a * x) * y == a * (x * y));
    REQUIRE(a * (x + y) == a * x + a * y);
    REQUIRE((x + y) * a == x * a + y * a);
  }
}

}  // namespace

TEST_CASE("the additive structure is an abelian group on every built-in") {
  check_abelian_group(test::free_ab(), 200);
  check_abelian_group(test::freecomm_xy(), 200);
  check_abelian_group(test::monoid_x(), 200);
  check_abelian_group(test::nat_add(), 200);
  check_abelian_group(test::nat_max(), 200);
  check_abelian_group(test::z2(), 200);
}

TEST_CASE("multiplication is associative and distributes") {
  check_ring_laws(test::free_ab(), 150);
  check_ring_laws(test::freecomm_xy(), 150);
  check_ring_laws(test::monoid_x(), 150);
  check_ring_laws(test::nat_add(), 150);
  check_ring_laws(test::nat_max(), 150);
  check_ring_laws(test::z2(), 150);
}

TEST_CASE("commutativity transfers from the semigroup") {
  auto h = test::free_ab();
  auto x = test::sum_of(h, {{"a", 1}});
  auto y = test::sum_of(h, {{"b", 1}});
  CHECK(x * y != y * x);  // concrete witness over a noncommutative instance

  Prng rng(29);
  auto nat = test::nat_add();
  for (int i = 0; i < 1000; ++i) {
    auto u = random_sum(nat, rng, 4, 5);
    auto v = random_sum(nat, rng, 4, 5);
    REQUIRE(u * v == v * u);
  }
}

TEST_CASE("normal-form equality matches the rewrite-closure oracle") {
  // exhaustive over length <= 3 from {+a,-a,+b,-b}; the acceptance suite
  // runs the full length-4 grid
  auto h = test::free_ab();
  Word a = *h->parse_element("a");
  Word b = *h->parse_element("b");
  std::vector<SignedEntry<FreeSemigroup>> atoms = {
      {Sign::plus, a}, {Sign::minus, a}, {Sign::plus, b}, {Sign::minus, b}};

  std::vector<FormalSum<FreeSemigroup>> grid;
  grid.emplace_back(h);
  std::size_t start = 0;
  for (int len = 1; len <= 3; ++len) {
    std::size_t end = grid.size();
    for (std::size_t i = start; i < end; ++i) {
      for (const auto& atom : atoms) {
        auto entries = grid[i].entries();
        entries.push_back(atom);
        grid.emplace_back(h, entries);
      }
    }
    start = end;
  }
  REQUIRE(grid.size() == 1 + 4 + 16 + 64);

  std::vector<std::size_t> classes = oracle::rewrite_closure_classes(grid, 5);
  std::vector<CanonicalSum<FreeSemigroup>> norms;
  for (const auto& fs : grid) {
    norms.push_back(normalize(fs));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      REQUIRE((norms[i] == norms[j]) == (classes[i] == classes[j]));
    }
  }
}

TEST_CASE("canonical printing matches the documented format") {
  auto h = test::free_ab();
  CHECK(to_string(CanonicalSum<FreeSemigroup>::zero(h)) == "0");
  auto s = test::sum_of(h, {{"ab", 2}, {"ba", -1}});
  CHECK(to_string(s) == "+2\xc2\xb7"
                        "ab -ba");

  auto nat = test::nat_add();
  CHECK(to_string(test::sum_of(nat, {{"3", 1}, {"1", -2}})) ==
        "-2\xc2\xb7"
        "1 +3");
}

TEST_CASE("scaling is k-fold addition") {
  auto h = test::free_ab();
  auto x = test::sum_of(h, {{"a", 1}, {"b", -2}});
  CHECK(scale(x, Int(3)) == x + x + x);
  CHECK(scale(x, Int(0)).is_zero());
  CHECK(scale(x, Int(-1)) == -x);
}
