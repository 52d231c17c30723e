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

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "sgring/sgring.hpp"

namespace {

using namespace sgring;

// ---------------------------------------------------------------------------
// Target value literals for `lift --map`
// ---------------------------------------------------------------------------

Int parse_int_literal(const std::string& text) {
  if (text.empty()) {
    throw MalformedSpec("empty integer literal");
  }
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) {
    throw MalformedSpec("bad integer literal '" + text + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw MalformedSpec("bad integer literal '" + text + "'");
    }
  }
  return Int(text);
}

Rational parse_rational_literal(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_int_literal(text));
  }
  return Rational(parse_int_literal(text.substr(0, slash)),
                  parse_int_literal(text.substr(slash + 1)));
}

// polynomial in t with integer coefficients, e.g. "t^2-2t+1", "-3t", "5"
oracle::IntPolynomial parse_poly_literal(const std::string& text) {
  std::vector<Int> coeffs;
  auto bump = [&](std::size_t deg, const Int& c) {
    if (coeffs.size() <= deg) {
      coeffs.resize(deg + 1, Int(0));
    }
    coeffs[deg] += c;
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip_ws();
  bool any = false;
  int sign = 1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  for (;;) {
    skip_ws();
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
    }
    std::size_t degree = 0;
    bool has_var = false;
    skip_ws();
    if (i < text.size() && text[i] == 't') {
      has_var = true;
      degree = 1;
      ++i;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string exp;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
          exp += text[i++];
        }
        if (exp.empty()) {
          throw MalformedSpec("bad exponent in polynomial '" + text + "'");
        }
        degree = std::stoul(exp);
      }
    }
    if (digits.empty() && !has_var) {
      throw MalformedSpec("bad polynomial literal '" + text + "'");
    }
    Int coefficient = digits.empty() ? Int(1) : Int(digits);
    bump(degree, sign * coefficient);
    any = true;
    skip_ws();
    if (i >= text.size()) {
      break;
    }
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      continue;
    }
    throw MalformedSpec("bad polynomial literal '" + text + "'");
  }
  if (!any) {
    throw MalformedSpec("empty polynomial literal");
  }
  return oracle::IntPolynomial(std::move(coeffs));
}

std::string strip_outer_parens(std::string s) {
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) {
      t.erase(t.begin());
    }
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) {
      t.pop_back();
    }
  };
  trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') {
        ++depth;
      } else if (s[i] == ')') {
        --depth;
        if (depth == 0 && i + 1 != s.size()) {
          wraps = false;
          break;
        }
      }
    }
    if (!wraps) {
      break;
    }
    s = s.substr(1, s.size() - 2);
    trim(s);
  }
  return s;
}

oracle::RatFunction parse_ratfunc_literal(const std::string& text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    } else if (text[i] == '/' && depth == 0) {
      return oracle::RatFunction(
          parse_poly_literal(strip_outer_parens(text.substr(0, i))),
          parse_poly_literal(strip_outer_parens(text.substr(i + 1))));
    }
  }
  return oracle::RatFunction::from_poly(
      parse_poly_literal(strip_outer_parens(text)));
}

std::vector<std::pair<std::string, std::string>> split_map(
    const std::string& text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      comma = text.size();
    }
    std::string item = text.substr(start, comma - start);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw MalformedSpec("map entry '" + item + "' is not of the form g=v");
    }
    entries.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    start = comma + 1;
  }
  if (entries.empty()) {
    throw MalformedSpec("empty generator map");
  }
  return entries;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_eval(const std::string& descriptor, const std::string& text) {
  ExprPtr ast = parse_expr(text);
  return with_instance(descriptor, [&](const auto& h) {
    std::cout << to_string(eval_expr(ast, h)) << "\n";
    return 0;
  });
}

int cmd_check_table(const std::string& path) {
  CayleyTable t = load_cayley_file(path);
  std::cout << "table: " << path << "\n";
  std::cout << "order: " << t.order << "\n";
  std::cout << "elements:";
  for (const auto& name : t.names) {
    std::cout << " " << name;
  }
  std::cout << "\n";
  std::cout << "associative: yes\n";
  std::cout << "commutative: " << (t.commutative ? "yes" : "no") << "\n";
  if (t.identity) {
    std::cout << "identity: " << t.names[*t.identity] << "\n";
  } else {
    std::cout << "identity: none\n";
  }
  return 0;
}

int cmd_axioms(const std::string& descriptor, std::size_t samples,
               std::uint64_t seed, unsigned max_support, unsigned coeff_bound) {
  return with_instance(descriptor, [&](const auto& h) {
    AxiomReport report = check_axioms(h, samples, seed, max_support, coeff_bound);
    std::cout << report.str();
    return report.pass() ? 0 : 1;
  });
}

template <Semigroup S>
int run_audit(const Handle<S>& h, unsigned max_support, unsigned coeff_bound) {
  std::vector<typename S::element_type> pool;
  if constexpr (FiniteSemigroup<S>) {
    pool = h->carrier();
  } else {
    // generators plus their pairwise products
    pool = h->generators();
    std::vector<typename S::element_type> gens = pool;
    for (const auto& a : gens) {
      for (const auto& b : gens) {
        pool.push_back(h->op(a, b));
      }
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  std::cout << "zero-divisor audit over " << h->id() << "\n";
  std::cout << "box: support <= " << max_support << ", |coeff| <= "
            << coeff_bound << ", pool size " << pool.size() << "\n";
  auto witness = oracle::zero_divisor_search(h, pool, max_support, coeff_bound);
  if (witness) {
    std::cout << "witness: x = " << to_string(witness->first)
              << ", y = " << to_string(witness->second) << "  (x*y = 0)\n";
    return 1;
  }
  std::cout << "no witness in the search box\n";
  return 0;
}

int cmd_audit(const std::string& table_path, const std::string& descriptor,
              unsigned max_support, unsigned coeff_bound) {
  if (!table_path.empty()) {
    auto h = std::make_shared<const TableSemigroup>(load_cayley_file(table_path));
    return run_audit<TableSemigroup>(h, max_support, coeff_bound);
  }
  return with_instance(descriptor, [&](const auto& h) {
    return run_audit(h, max_support, coeff_bound);
  });
}

template <Semigroup S, typename V>
int run_lift_in(const Handle<S>& h, const RingOps<V>& ring,
                const std::optional<FieldOps<V>>& field, const ExprPtr& ast,
                const std::vector<std::pair<std::string, std::string>>& raw_map,
                const std::function<V(const std::string&)>& parse_value,
                bool check_diagram, std::size_t samples, std::uint64_t seed) {
  std::vector<std::pair<typename S::element_type, V>> images;
  for (const auto& [key, value] : raw_map) {
    auto el = h->parse_element(key);
    if (!el) {
      throw UnknownGenerator("map key '" + key + "' does not name an element of " +
                             h->id());
    }
    images.emplace_back(*el, parse_value(value));
  }
  HomSpec<S, V> spec = hom_from_generators(h, ring, std::move(images));

  int rc = 0;
  if (check_diagram) {
    HomReport hom = check_semigroup_hom(spec, ring, samples, seed);
    std::cout << hom.str() << "\n";
    RingLift<S, V> lift(spec, ring);
    RingHomReport ring_report = check_ring_hom(lift, samples, seed);
    std::cout << ring_report.str() << "\n";
    if (!hom.pass() || !ring_report.pass()) {
      rc = 1;
    }
  }

  Value<S> value = eval_expr(ast, h);
  if (std::holds_alternative<CanonicalSum<S>>(value)) {
    RingLift<S, V> lift(spec, ring);
    std::cout << ring.show(lift(std::get<CanonicalSum<S>>(value))) << "\n";
    return rc;
  }
  if (!field) {
    std::cerr << "error: lifting a fraction needs a field target (rat or "
                 "ratfunc)\n";
    return 2;
  }
  FieldLift<S, V> lift(spec, *field);
  std::cout << field->show(lift(std::get<Fraction<S>>(value))) << "\n";
  return rc;
}

int cmd_lift(const std::string& descriptor, const std::string& map_text,
             const std::string& target, const std::string& expr_text,
             bool check_diagram, std::size_t samples, std::uint64_t seed) {
  ExprPtr ast = parse_expr(expr_text);
  auto raw_map = split_map(map_text);
  return with_instance(descriptor, [&](const auto& h) {
    using S = std::decay_t<decltype(*h)>;
    if (target == "int") {
      return run_lift_in<S, Int>(h, integer_ring(), std::nullopt, ast, raw_map,
                                 parse_int_literal, check_diagram, samples,
                                 seed);
    }
    if (target == "rat") {
      FieldOps<Rational> f = rational_field();
      return run_lift_in<S, Rational>(h, f, f, ast, raw_map,
                                      parse_rational_literal, check_diagram,
                                      samples, seed);
    }
    if (target == "ratfunc") {
      FieldOps<oracle::RatFunction> f = ratfunc_field();
      return run_lift_in<S, oracle::RatFunction>(h, f, f, ast, raw_map,
                                                 parse_ratfunc_literal,
                                                 check_diagram, samples, seed);
    }
    std::cerr << "error: unknown lift target '" << target
              << "' (expected int, rat or ratfunc)\n";
    return 2;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"formal signed sums over a semigroup: ring and fraction-field "
               "arithmetic, axiom audits, and homomorphism lifts"};
  app.require_subcommand(1);

  std::string semigroup;
  std::string expr_text;
  std::string table_path;
  std::string map_text;
  std::string target = "int";
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned max_support = 4;
  unsigned coeff_bound = 5;
  unsigned audit_max_support = 2;
  unsigned audit_coeff_bound = 2;
  std::size_t lift_samples = 200;
  bool check_diagram = false;
  int rc = 0;

  auto* normalize = app.add_subcommand(
      "normalize", "evaluate an expression and print its canonical form");
  normalize->add_option("--semigroup", semigroup, "instance descriptor")
      ->required();
  normalize->add_option("expr", expr_text, "expression")->required();
  normalize->callback([&] { rc = cmd_eval(semigroup, expr_text); });

  auto* eval = app.add_subcommand(
      "eval", "evaluate an expression to a canonical sum or fraction");
  eval->add_option("--semigroup", semigroup, "instance descriptor")->required();
  eval->add_option("expr", expr_text, "expression")->required();
  eval->callback([&] { rc = cmd_eval(semigroup, expr_text); });

  auto* check = app.add_subcommand("check-table",
                                   "validate a Cayley table file");
  check->add_option("path", table_path, "table file")->required();
  check->callback([&] { rc = cmd_check_table(table_path); });

  auto* axioms = app.add_subcommand(
      "axioms", "seeded property run of the ring and field laws");
  axioms->add_option("--semigroup", semigroup, "instance descriptor")
      ->required();
  axioms->add_option("--samples", samples, "samples per law");
  axioms->add_option("--seed", seed, "PRNG seed");
  axioms->add_option("--max-support", max_support, "max support of sampled sums");
  axioms->add_option("--coeff-bound", coeff_bound, "max |coefficient|");
  axioms->callback(
      [&] { rc = cmd_axioms(semigroup, samples, seed, max_support, coeff_bound); });

  auto* audit = app.add_subcommand("audit", "claim audits");
  auto* zd = audit->add_subcommand("zero-divisors",
                                   "search for nonzero x, y with x*y = 0");
  auto* opt_table = zd->add_option("--table", table_path, "table file");
  auto* opt_sg = zd->add_option("--semigroup", semigroup, "instance descriptor");
  opt_table->excludes(opt_sg);
  zd->add_option("--max-support", audit_max_support,
                 "max support of candidates");
  zd->add_option("--coeff-bound", audit_coeff_bound, "max |coefficient|");
  zd->callback([&] {
    if (table_path.empty() && semigroup.empty()) {
      throw CLI::ValidationError("audit zero-divisors",
                                 "needs --table or --semigroup");
    }
    rc = cmd_audit(table_path, semigroup, audit_max_support, audit_coeff_bound);
  });

  auto* lift = app.add_subcommand(
      "lift", "lift a generator map to a ring/field homomorphism and apply it");
  lift->add_option("--semigroup", semigroup, "instance descriptor")->required();
  lift->add_option("--map", map_text, "generator images g1=v1,g2=v2,...")
      ->required();
  lift->add_option("--target", target, "int | rat | ratfunc");
  lift->add_option("--samples", lift_samples, "samples for --check-diagram");
  lift->add_option("--seed", seed, "PRNG seed for --check-diagram");
  lift->add_flag("--check-diagram", check_diagram,
                 "verify the homomorphism laws and f = f#(e1(g))");
  lift->add_option("expr", expr_text, "expression to lift")->required();
  lift->callback([&] {
    rc = cmd_lift(semigroup, map_text, target, expr_text, check_diagram,
                  lift_samples, seed);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const sgring::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
