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


#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <set>

#include "dill/dsl.hpp"
#include "dill/error.hpp"
#include "support.hpp"

using dill::Complex;
using dill::Term;
using dill::Value;

namespace {

std::string error_of(const std::string& src) {
  try {
    dill::evaluate_source(src);
  } catch (const dill::Error& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

// ---- random terms for the round-trip property

class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : gen_(seed) {}

  double number() {
    switch (gen_.below(5)) {
      case 0: return static_cast<double>(gen_.range(0, 9));
      case 1: return -gen_.real(0, 100);
      case 2: return gen_.real(-1, 1) * 1e-300;
      case 3: return gen_.real(-1, 1) * 1e200;
      default: return gen_.real(-2, 2);
    }
  }

  Term term(int depth) {
    Term t;
    const std::size_t pick = depth <= 0 ? gen_.below(4) : gen_.below(6);
    if (pick == 0) {
      t.kind = Term::Kind::kNumber;
      t.number = number();
    } else if (pick == 1) {
      t.kind = Term::Kind::kVector;
      for (std::size_t i = gen_.below(4); i > 0; --i) t.vector.emplace_back(number(), number());
    } else if (pick == 2) {
      t.kind = Term::Kind::kIdent;
      static const char* names[] = {"f", "g2", "x_y", "d-1", "ok?"};
      t.name = names[gen_.below(5)];
    } else if (pick == 3) {
      t.kind = Term::Kind::kSeries;
      auto& s = t.series;
      s.dom = gen_.range(1, 3);
      s.cod = gen_.range(1, 2);
      s.deg = static_cast<unsigned>(gen_.range(0, 4));
      s.poly = gen_.below(2) == 0;
      const auto basis = dill::MonomialBasis::get(s.dom, s.deg);
      for (std::size_t i = gen_.below(6); i > 0; --i) {
        const auto e = (*basis)[gen_.below(basis->size())].exponents();
        dill::CoeffKey key{gen_.below(s.cod), std::vector<std::uint32_t>(e.begin(), e.end())};
        s.coeffs[key] = gen_.below(2) ? Complex(number(), 0.0) : Complex(number(), number());
      }
    } else {
      t.kind = Term::Kind::kCall;
      const auto& ops = dill::dsl_operators();
      t.name = ops[gen_.below(ops.size())];
      for (std::size_t i = gen_.below(4); i > 0; --i) t.args.push_back(term(depth - 1));
    }
    return t;
  }

 private:
  testing_support::Gen gen_;
};

}  // namespace

TEST_CASE("parse examples") {
  const Term t = dill::parse_term("(eval (series :dom 1 :cod 1 :deg 2 {(2)->1.0}) [2.0,0.0])");
  CHECK(t.kind == Term::Kind::kCall);
  CHECK(t.name == "eval");
  REQUIRE(t.args.size() == 2);
  CHECK(t.args[0].kind == Term::Kind::kSeries);
  CHECK(t.args[0].series.coeffs.size() == 1);
  CHECK(t.args[1].vector == dill::Vector{2.0});

  const Term c = dill::parse_term("(conv (dirac [1.0,0.0] 3) (dirac [1.0,0.0] 3))");
  CHECK(c.name == "conv");
  CHECK(c.args[0] == c.args[1]);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    dill::parse_term("(compose f");
    FAIL("expected a syntax error");
  } catch (const dill::Error& e) {
    CHECK(contains(e.what(), "end of input"));
    CHECK(contains(e.what(), "line 1, column 11"));
  }
  const std::string multi = error_of("; comment\n(let f (series :dom 1 :cod 1 :deg 2 {(2)->1.0}))\n(eval f [1.0, 0.0 @])");
  CHECK(contains(multi, "line 3, column 19"));
  CHECK(contains(error_of("(frobnicate 1)"), "unknown operator 'frobnicate'"));
  CHECK(contains(error_of("[1.0]"), "pairs"));
  CHECK(contains(error_of("(series :dom 1 :cod 1 :deg 1 {(2)->1})"), "exceeds :deg"));
  CHECK(contains(error_of("(series :dom 1 :cod 1 :deg 1 {(1)->1, (1)->2})"), "duplicate"));
  CHECK(contains(error_of("(series :dom 2 :cod 1 :deg 1 {(1)->1})"), "multi-index"));
  CHECK(contains(error_of("1 2"), "after the result"));
  CHECK(contains(error_of("(let x 1)"), "result expression"));
  CHECK(contains(error_of("(add (let x 1) 2)"), "top level"));
  CHECK(contains(error_of("1.2.3"), "malformed number"));
}

TEST_CASE("whitespace and comments do not matter") {
  const Term a = dill::parse_term("(eval (series :dom 1 :cod 1 :deg 2 {(2)->1.0}) [2.0,0.0])");
  const Term b = dill::parse_term(" ( eval ; the point follows\n\t(series :deg 2 :cod 1 :dom 1 { ( 2 ) -> 1 })\n [ 2 0 ] ) ");
  CHECK(a == b);
}

TEST_CASE("property: printing then parsing is the identity") {
  TermGen gen(81);
  for (int trial = 0; trial < 300; ++trial) {
    const Term t = gen.term(3);
    const std::string text = dill::print_term(t);
    CAPTURE(text);
    const Term back = dill::parse_term(text);
    CHECK(back == t);
    CHECK(dill::print_term(back) == text);
  }
  dill::Program p;
  p.bindings.push_back({"f", gen.term(2), {}});
  p.bindings.push_back({"g", gen.term(2), {}});
  p.result = gen.term(2);
  CHECK(dill::parse_program(dill::print_program(p)) == p);
}

TEST_CASE("evaluation examples") {
  const Value sq = dill::evaluate_source("(eval (series :dom 1 :cod 1 :deg 2 {(2)->1.0}) [2.0,0.0])");
  CHECK(std::get<Complex>(sq) == Complex(4.0));
  const Value eq = dill::evaluate_source("(equal (conv (dirac [1,0] 3) (dirac [1,0] 3)) (dirac [2,0] 3))");
  CHECK(std::get<bool>(eq));
  const Value ne = dill::evaluate_source("(equal (conv (dirac [1,0] 3) (dirac [1,0] 3)) (dirac [3,0] 3))");
  CHECK_FALSE(std::get<bool>(ne));
  const Value th = dill::evaluate_source("(apply (theta 2 [1,0] 2) (series :dom 1 :cod 1 :deg 2 {(2)->3}))");
  CHECK(std::get<Complex>(th) == Complex(6.0));
  const Value nest = dill::evaluate_source("(curry (series :dom 2 :cod 1 :deg 2 {(1,1)->1}) 1)");
  const auto j = nlohmann::json::parse(dill::value_to_json(nest));
  CHECK(j.at("outer_dim") == 1);
  CHECK(j.at("inner_dim") == 1);
}

TEST_CASE("type errors name the offending sub-term") {
  const std::string e1 = error_of("(let f (series :dom 2 :cod 1 :deg 2 {}))\n(eval f [1,0])");
  CHECK(contains(e1, "type error at line 2, column 1"));
  CHECK(contains(e1, "(eval f [1,0])"));
  const std::string e2 = error_of("(add 1 (compose (series :dom 1 :cod 1 :deg 2 {}) (series :dom 2 :cod 2 :deg 2 {})))");
  CHECK(contains(e2, "column 8"));
  CHECK(contains(e2, "C^2"));
  CHECK(contains(e2, "C^1"));
  CHECK(contains(error_of("(eval g [1,0])"), "unbound name 'g'"));
  CHECK(contains(error_of("(let f 1)\n(let f 2)\nf"), "already bound"));
  CHECK(contains(error_of("(curry (series :dom 2 :cod 1 :deg 1 {}) x)"), "natural-number literal"));
  CHECK(contains(error_of("(diff)"), "takes 1 arguments"));
}

TEST_CASE("delegated errors surface with the term location") {
  // Not visible to the checker: the series degree only drops at runtime.
  const std::string e = error_of(
      "(let f (truncate (series :dom 1 :cod 1 :deg 3 :poly {(3)->1}) 2))\n"
      "(apply (dirac [1,0] 3) f)");
  CHECK(contains(e, "line 2, column 1"));
  CHECK(contains(e, "(apply"));
}

TEST_CASE("evaluation is referentially transparent") {
  const std::string src =
      "(let f (series :dom 2 :cod 1 :deg 3 {(1,0)->[0.3,-1.1], (1,2)->2.5, (0,1)->1e-3}))\n"
      "(let g (compose f (series :dom 2 :cod 2 :deg 3 {(1,0)@0->1, (1,1)@1->[0,1], (0,2)@0->0.25})))\n"
      "(dir (mul g g) [0.2,0.1,-0.3,0.4] [1,0,0,1])";
  const std::string a = dill::value_to_json(dill::evaluate_source(src));
  const std::string b = dill::value_to_json(dill::evaluate_source(src));
  CHECK(a == b);
  CHECK(dill::value_to_json(dill::evaluate_source(dill::print_program(dill::parse_program(src)))) == a);
}

TEST_CASE("every model operation is reachable from the language") {
  const std::string f = "(series :dom 1 :cod 1 :deg 2 {(1)->1, (2)->[0,1]})";
  const std::string f2 = "(series :dom 2 :cod 1 :deg 2 {(1,1)->1})";
  const std::string p = "(series :dom 1 :cod 1 :deg 2 :poly {(1)->2})";
  const std::string g0 = "(series :dom 1 :cod 1 :deg 2 {(1)->1})";
  const std::vector<std::pair<std::string, std::string>> programs = {
      {"compose", "(compose " + f + " " + g0 + ")"},
      {"curry", "(curry " + f2 + " 1)"},
      {"uncurry", "(uncurry (curry " + f2 + " 1))"},
      {"diff", "(diff " + f + ")"},
      {"partial", "(partial " + f2 + " 1)"},
      {"dir", "(dir " + f + " [1,0] [0,1])"},
      {"eval", "(eval (curry " + f2 + " 1) [1,0])"},
      {"part", "(part " + f + " 2)"},
      {"truncate", "(truncate " + f + " 1)"},
      {"add", "(add " + f + " " + f + ")"},
      {"scale", "(scale [0,1] (dirac [1,0] 2))"},
      {"mul", "(mul " + f + " " + f + ")"},
      {"identity", "(identity 2 3)"},
      {"dirac", "(dirac [1,0,2,0] 2)"},
      {"theta", "(theta 1 [1,0] 2)"},
      {"coder", "(coder [0,1] 2)"},
      {"conv", "(conv (coder [1,0] 2) (coder [1,0] 2))"},
      {"taylor", "(taylor [0.5,0.5,1,0] 4)"},
      {"bang", "(bang " + p + " 3)"},
      {"hat", "(hat " + f + ")"},
      {"check", "(check (hat " + f + "))"},
      {"apply", "(apply (bang " + p + " 2) (dirac [1,0] 2))"},
      {"counit", "(apply (counit 1 2) (dirac [3,0] 2))"},
      {"rho", "(apply (rho 1 2 2) (dirac [1,0] 2))"},
      {"contract", "(apply (contract 1 2) (dirac [1,0] 2))"},
      {"weaken", "(apply (weaken 1 2) (dirac [1,0] 2))"},
      {"cocontract", "(apply (cocontract 1 2) (apply (contract 1 2) (dirac [1,0] 2)))"},
      {"coweaken", "(apply (coweaken 1 2) [1,0])"},
      {"m2", "(m2 1 1 2)"},
      {"m2inv", "(matmul (m2inv 1 1 2) (m2 1 1 2))"},
      {"swap", "(swap 1 2 2)"},
      {"tensor", "(tensor (bang " + p + " 2) (contract 1 2))"},
      {"matmul", "(matmul (counit 1 2) (bang " + p + " 2))"},
      {"equal", "(equal (check (hat " + f + ")) " + f + ")"},
  };
  std::set<std::string> covered;
  for (const auto& [op, src] : programs) {
    CAPTURE(src);
    std::string out;
    CHECK_NOTHROW(out = dill::value_to_json(dill::evaluate_source(src)));
    CHECK(nlohmann::json::accept(out));
    covered.insert(op);
  }
  for (const auto& op : dill::dsl_operators()) {
    CAPTURE(op);
    CHECK(covered.count(op) == 1);
  }
  // Operations named by the model must all be operators of the language.
  for (const char* op : {"compose", "curry", "uncurry", "diff", "eval", "dirac", "theta", "conv", "coder", "bang", "hat",
                         "check", "add", "scale", "mul"}) {
    CAPTURE(op);
    CHECK(std::find(dill::dsl_operators().begin(), dill::dsl_operators().end(), op) != dill::dsl_operators().end());
  }
}

TEST_CASE("language results match direct library calls") {
  const auto counit = std::get<dill::Vector>(dill::evaluate_source("(apply (counit 2 2) (dirac [1,0,0,2] 2))"));
  CHECK(counit == dill::Vector{1.0, Complex(0, 2)});
  CHECK(std::get<bool>(dill::evaluate_source("(equal (hat (check (counit 2 2))) (counit 2 2))")));
  const auto d = std::get<dill::Distribution>(dill::evaluate_source("(conv (coder [1,0] 2) (coder [1,0] 2))"));
  CHECK(d == dill::convolve(dill::codereliction(dill::Vector{1.0}, 2), dill::codereliction(dill::Vector{1.0}, 2)));
}
