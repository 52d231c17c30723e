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
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sgring/errors.hpp"

namespace sgring {

/// Fully validated multiplication table of a finite semigroup.
/// Entry at(i, j) is the index of row_element * column_element.
struct CayleyTable {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> entries;  // row-major, order * order
  std::vector<std::string> names;      // one per element
  bool commutative = false;
  std::optional<std::uint32_t> identity;

  std::uint32_t at(std::uint32_t i, std::uint32_t j) const {
    return entries[static_cast<std::size_t>(i) * order + j];
  }
};

namespace detail {

inline bool valid_element_name(const std::string& name) {
  if (name.empty()) {
    return false;
  }
  static const std::string reserved = "+-*/()[]{}.^=,:;\"'";
  for (char c : name) {
    if (static_cast<unsigned char>(c) <= ' ') {
      return false;
    }
    if (reserved.find(c) != std::string::npos) {
      return false;
    }
  }
  // U+00B7 is the coefficient separator in canonical printing
  if (name.find("\xc2\xb7") != std::string::npos) {
    return false;
  }
  return true;
}

inline void check_element_names(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!valid_element_name(names[i])) {
      throw MalformedSpec("invalid element name '" + names[i] + "'");
    }
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) {
        throw MalformedSpec("duplicate element name '" + names[i] + "'");
      }
    }
  }
}

}  // namespace detail

/// Validates a raw index matrix as a semigroup table: every entry must lie
/// in [0, n) and the operation must be associative over all n^3 triples
/// (brute force; n stays small enough that Light's test is not worth it).
/// Commutativity and an identity element are detected by exhaustive scan.
inline CayleyTable validate_cayley(
    const std::vector<std::vector<long long>>& raw,
    std::vector<std::string> names = {}) {
  if (raw.empty()) {
    throw MalformedSpec("empty table");
  }
  const std::size_t n = raw.size();
  CayleyTable t;
  t.order = static_cast<std::uint32_t>(n);
  t.entries.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw MalformedSpec("row " + std::to_string(i) + " has " +
                          std::to_string(raw[i].size()) + " entries, expected " +
                          std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (raw[i][j] < 0 || raw[i][j] >= static_cast<long long>(n)) {
        throw EntryOutOfRange(i, j,
                              "entry " + std::to_string(raw[i][j]) + " at (" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  ") not in [0," + std::to_string(n) + ")");
      }
      t.entries[i * n + j] = static_cast<std::uint32_t>(raw[i][j]);
    }
  }

  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("g" + std::to_string(i));
    }
  }
  if (names.size() != n) {
    throw MalformedSpec("expected " + std::to_string(n) + " element names, got " +
                        std::to_string(names.size()));
  }
  detail::check_element_names(names);
  t.names = std::move(names);

  // lexicographic triple order, so the first witness is deterministic
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) {
          std::ostringstream msg;
          msg << "witness (" << a << "," << b << "," << c << "): ("
              << t.names[a] << "*" << t.names[b] << ")*" << t.names[c]
              << " = " << t.names[t.at(t.at(a, b), c)] << " but " << t.names[a]
              << "*(" << t.names[b] << "*" << t.names[c]
              << ") = " << t.names[t.at(a, t.at(b, c))];
          throw NotAssociative(a, b, c, msg.str());
        }
      }
    }
  }

  t.commutative = true;
  for (std::uint32_t a = 0; a < n && t.commutative; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (t.at(a, b) != t.at(b, a)) {
        t.commutative = false;
        break;
      }
    }
  }

  for (std::uint32_t e = 0; e < n; ++e) {
    bool is_identity = true;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (t.at(e, a) != a || t.at(a, e) != a) {
        is_identity = false;
        break;
      }
    }
    if (is_identity) {
      t.identity = e;
      break;
    }
  }
  return t;
}

/// Text format:
///   elements: e0 e1 ... e{n-1}
///   table:
///   <n rows of n element names; row i column j gives row*column>
inline CayleyTable load_cayley_table(std::istream& in,
                                     const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) {
    throw MalformedSpec(origin + ": empty file");
  }
  std::istringstream head(line);
  std::string keyword;
  head >> keyword;
  if (keyword != "elements:") {
    throw MalformedSpec(origin + ": line 1 must start with 'elements:'");
  }
  std::vector<std::string> names;
  for (std::string name; head >> name;) {
    names.push_back(name);
  }
  if (names.empty()) {
    throw MalformedSpec(origin + ": no element names");
  }
  detail::check_element_names(names);

  if (!std::getline(in, line)) {
    throw MalformedSpec(origin + ": missing 'table:' line");
  }
  {
    std::istringstream marker(line);
    std::string word;
    marker >> word;
    if (word != "table:") {
      throw MalformedSpec(origin + ": line 2 must be 'table:'");
    }
  }

  const std::size_t n = names.size();
  auto index_of = [&](const std::string& name) -> std::size_t {
    for (std::size_t k = 0; k < n; ++k) {
      if (names[k] == name) {
        return k;
      }
    }
    return n;
  };

  std::vector<std::vector<long long>> raw;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw MalformedSpec(origin + ": expected " + std::to_string(n) +
                          " table rows, got " + std::to_string(i));
    }
    std::istringstream row(line);
    std::vector<long long> entries;
    for (std::string cell; row >> cell;) {
      std::size_t k = index_of(cell);
      if (k == n) {
        throw MalformedSpec(origin + ": row " + std::to_string(i + 1) +
                            ": unknown element name '" + cell + "'");
      }
      entries.push_back(static_cast<long long>(k));
    }
    if (entries.size() != n) {
      throw MalformedSpec(origin + ": row " + std::to_string(i + 1) + " has " +
                          std::to_string(entries.size()) +
                          " entries, expected " + std::to_string(n));
    }
    raw.push_back(std::move(entries));
  }
  return validate_cayley(raw, names);
}

inline CayleyTable load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw MalformedSpec("cannot open table file '" + path + "'");
  }
  return load_cayley_table(in, path);
}

}  // namespace sgring
