// Copyright 2026 The dill-series Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// A small s-expression language over the model operations.
//
//   program := (let NAME term)* term
//   term    := NUMBER | VECTOR | NAME | SERIES | (OP term*)
//   VECTOR  := [re, im, re, im, ...]            complex entries as pairs
//   SERIES  := (series :dom m :cod n :deg D [:poly] {ENTRY*})
//   ENTRY   := (a_1, ..., a_m)[@j] -> re | (a_1, ..., a_m)[@j] -> [re, im]
//
// Line comments start with ';'. Arguments documented as natural numbers
// (degrees, splits, arities) must be written as literals; the checker uses
// them to infer shapes before anything is evaluated.

#ifndef DILL_DSL_HPP
#define DILL_DSL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dill/calculus.hpp"
#include "dill/exponential.hpp"
#include "dill/series.hpp"

namespace dill {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
  std::string to_string() const;
};

struct CoeffKey {
  std::size_t out = 0;
  std::vector<std::uint32_t> alpha;
  auto operator<=>(const CoeffKey&) const = default;
};

struct SeriesLiteral {
  std::size_t dom = 0;
  std::size_t cod = 0;
  unsigned deg = 0;
  bool poly = false;
  std::map<CoeffKey, Complex, std::less<>> coeffs;
  bool operator==(const SeriesLiteral& other) const;
};

struct Term {
  enum class Kind { kNumber, kVector, kSeries, kIdent, kCall };

  Kind kind = Kind::kNumber;
  Location loc;
  double number = 0.0;
  Vector vector;
  SeriesLiteral series;
  std::string name;  // identifier or operator
  std::vector<Term> args;

  /// Structural equality; locations are ignored.
  bool operator==(const Term& other) const;
};

struct Binding {
  std::string name;
  Term term;
  Location loc;
  bool operator==(const Binding& other) const { return name == other.name && term == other.term; }
};

struct Program {
  std::vector<Binding> bindings;
  Term result;
  bool operator==(const Program&) const = default;
};

/// Throws Error "syntax error at line L, column C: ...".
Program parse_program(std::string_view source);
Term parse_term(std::string_view source);

/// Canonical text: single spaces, shortest round-trip numbers, sorted
/// coefficient maps. parse(print(t)) == t.
std::string print_term(const Term& term);
std::string print_program(const Program& program);

/// Static shape of a term. Degrees and polynomial flags may be unknown when
/// they depend on coefficient values.
struct Type {
  enum class Kind { kScalar, kVector, kSeries, kNest, kDist, kOperator, kBool };

  Kind kind = Kind::kScalar;
  std::size_t dim = 0;    // vector length, series / distribution domain, nest outer dim
  std::size_t inner = 0;  // nest inner dim
  std::size_t cod = 0;    // series / nest codomain
  std::optional<unsigned> degree;
  std::optional<bool> poly;
  std::optional<Space> source;
  std::optional<Space> target;

  std::string describe() const;
};

using Value = std::variant<Complex, Vector, TruncatedSeries, CurriedSeries, Distribution, LinearOperator, bool>;

/// Type of the result; throws Error naming the offending sub-term.
Type typecheck(const Program& program);
/// Typechecks, then evaluates. Delegated errors carry the term location.
Value evaluate(const Program& program);
Value evaluate_source(std::string_view source);

std::string value_to_json(const Value& value);

/// Operator names accepted in call position.
const std::vector<std::string>& dsl_operators();

}  // namespace dill

#endif  // DILL_DSL_HPP
