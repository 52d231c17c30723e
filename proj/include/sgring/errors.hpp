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

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgring {

/// Root of the library's exception hierarchy. Every error carries the
/// condition name in what(), so CLI surfaces can report it verbatim.
class Error : public std::runtime_error {
 public:
  Error(const std::string& name, const std::string& detail)
      : std::runtime_error(detail.empty() ? name : name + ": " + detail),
        name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct EntryOutOfRange : Error {
  EntryOutOfRange(std::size_t row, std::size_t col, const std::string& detail)
      : Error("EntryOutOfRange", detail), row(row), col(col) {}
  std::size_t row;
  std::size_t col;
};

struct NotAssociative : Error {
  NotAssociative(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                 const std::string& detail)
      : Error("NotAssociative", detail), witness{a, b, c} {}
  std::array<std::uint32_t, 3> witness;
};

struct ForeignElement : Error {
  explicit ForeignElement(const std::string& detail)
      : Error("ForeignElement", detail) {}
};

struct UnknownInstance : Error {
  explicit UnknownInstance(const std::string& detail)
      : Error("UnknownInstance", detail) {}
};

struct MalformedSpec : Error {
  explicit MalformedSpec(const std::string& detail)
      : Error("MalformedSpec", detail) {}
};

struct HandleMismatch : Error {
  explicit HandleMismatch(const std::string& detail)
      : Error("HandleMismatch", detail) {}
};

struct ZeroDenominator : Error {
  explicit ZeroDenominator(const std::string& detail)
      : Error("ZeroDenominator", detail) {}
};

struct NoncommutativeSemigroup : Error {
  explicit NoncommutativeSemigroup(const std::string& detail)
      : Error("NoncommutativeSemigroup", detail) {}
};

/// The fraction field construction silently assumes R(H) has no zero
/// divisors; whenever a fraction operation multiplies two nonzero ring
/// elements and gets zero, the domain hypothesis has failed and the
/// operation aborts with this error instead of returning inconsistent
/// results.
struct ZeroDivisorDetected : Error {
  explicit ZeroDivisorDetected(const std::string& detail)
      : Error("ZeroDivisorDetected", detail) {}
};

struct DivisionByZeroClass : Error {
  explicit DivisionByZeroClass(const std::string& detail)
      : Error("DivisionByZeroClass", detail) {}
};

/// Runtime surrogate for the injectivity hypothesis of the field lift:
/// the lifted denominator hit 0 in the target field.
struct DenominatorMapsToZero : Error {
  explicit DenominatorMapsToZero(const std::string& detail)
      : Error("DenominatorMapsToZero", detail) {}
};

struct SyntaxError : Error {
  SyntaxError(std::size_t position, const std::string& detail)
      : Error("SyntaxError",
              detail + " (at position " + std::to_string(position + 1) + ")"),
        position(position) {}
  std::size_t position;  // 0-based byte offset into the input
};

struct UnknownGenerator : Error {
  explicit UnknownGenerator(const std::string& detail)
      : Error("UnknownGenerator", detail) {}
};

struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& detail)
      : Error("BoundExceeded", detail) {}
};

}  // namespace sgring
