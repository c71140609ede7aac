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


#include "dill/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>
#include <utility>

#include "dill/error.hpp"
#include "dill/io.hpp"

namespace dill {

std::string Location::to_string() const {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

bool SeriesLiteral::operator==(const SeriesLiteral& other) const {
  return dom == other.dom && cod == other.cod && deg == other.deg && poly == other.poly && coeffs == other.coeffs;
}

bool Term::operator==(const Term& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::kNumber:
      return number == other.number;
    case Kind::kVector:
      return vector == other.vector;
    case Kind::kSeries:
      return series == other.series;
    case Kind::kIdent:
      return name == other.name;
    case Kind::kCall:
      return name == other.name && args == other.args;
  }
  return false;
}

namespace {

// ---------------------------------------------------------------- operators

struct OpSig {
  const char* name;
  std::size_t arity;
  const char* usage;
};

const std::vector<OpSig>& op_table() {
  static const std::vector<OpSig> table = {
      {"compose", 2, "(compose F G)"},
      {"curry", 2, "(curry F k)"},
      {"uncurry", 1, "(uncurry N)"},
      {"diff", 1, "(diff F)"},
      {"partial", 2, "(partial F i)"},
      {"dir", 3, "(dir F X V)"},
      {"eval", 2, "(eval F X)"},
      {"part", 2, "(part F k)"},
      {"truncate", 2, "(truncate F n)"},
      {"add", 2, "(add A B)"},
      {"scale", 2, "(scale S A)"},
      {"mul", 2, "(mul A B)"},
      {"identity", 2, "(identity m D)"},
      {"dirac", 2, "(dirac X D)"},
      {"theta", 3, "(theta n X D)"},
      {"coder", 2, "(coder V D)"},
      {"conv", 2, "(conv A B)"},
      {"taylor", 2, "(taylor X D)"},
      {"bang", 2, "(bang F D)"},
      {"hat", 1, "(hat F)"},
      {"check", 1, "(check G)"},
      {"apply", 2, "(apply A B)"},
      {"counit", 2, "(counit m D)"},
      {"rho", 3, "(rho m Douter Dinner)"},
      {"contract", 2, "(contract m D)"},
      {"weaken", 2, "(weaken m D)"},
      {"cocontract", 2, "(cocontract m D)"},
      {"coweaken", 2, "(coweaken m D)"},
      {"m2", 3, "(m2 a b D)"},
      {"m2inv", 3, "(m2inv a b D)"},
      {"swap", 3, "(swap a b D)"},
      {"tensor", 2, "(tensor A B)"},
      {"matmul", 2, "(matmul A B)"},
      {"equal", 2, "(equal A B)"},
  };
  return table;
}

const OpSig* find_op(std::string_view name) {
  for (const auto& op : op_table()) {
    if (name == op.name) return &op;
  }
  return nullptr;
}

// ---------------------------------------------------------------- lexer

enum class Tok { kLParen, kRParen, kLBracket, kRBracket, kLBrace, kRBrace, kComma, kArrow, kAt, kNumber, kKeyword, kIdent, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  double number = 0.0;
  Location loc;
};

[[noreturn]] void syntax_error(const Location& loc, const std::string& msg) {
  throw Error("syntax error at " + loc.to_string() + ": " + msg);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '?' || c == '!' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.loc = here();
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    auto single = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      advance();
      return t;
    };
    switch (c) {
      case '(': return single(Tok::kLParen);
      case ')': return single(Tok::kRParen);
      case '[': return single(Tok::kLBracket);
      case ']': return single(Tok::kRBracket);
      case '{': return single(Tok::kLBrace);
      case '}': return single(Tok::kRBrace);
      case ',': return single(Tok::kComma);
      case '@': return single(Tok::kAt);
      default: break;
    }
    if (c == '-' && peek(1) == '>') {
      advance();
      advance();
      t.kind = Tok::kArrow;
      t.text = "->";
      return t;
    }
    if (starts_number()) return lex_number(t);
    if (c == ':') {
      advance();
      std::string word;
      while (pos_ < src_.size() && ident_char(src_[pos_])) word += take();
      if (word.empty()) syntax_error(t.loc, "expected a keyword after ':'");
      t.kind = Tok::kKeyword;
      t.text = word;
      return t;
    }
    if (ident_start(c)) {
      std::string word;
      while (pos_ < src_.size() && ident_char(src_[pos_])) word += take();
      t.kind = Tok::kIdent;
      t.text = word;
      return t;
    }
    syntax_error(t.loc, std::string("unexpected character '") + c + "'");
  }

 private:
  char peek(std::size_t ahead) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }
  Location here() const { return {line_, col_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  char take() {
    const char c = src_[pos_];
    advance();
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool starts_number() const {
    auto digitish = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    const char c = peek(0);
    if (digitish(c)) return true;
    if (c == '.') return digitish(peek(1));
    if (c == '-' || c == '+') return digitish(peek(1)) || (peek(1) == '.' && digitish(peek(2)));
    return false;
  }

  Token lex_number(Token t) {
    std::string text;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      const bool exp_sign = (c == '-' || c == '+') && !text.empty() && (text.back() == 'e' || text.back() == 'E');
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' || exp_sign ||
          ((c == '-' || c == '+') && text.empty())) {
        text += take();
      } else {
        break;
      }
    }
    // from_chars rejects a leading '+'.
    const std::size_t skip = text[0] == '+' ? 1 : 0;
    double v = 0.0;
    const char* first = text.data() + skip;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) syntax_error(t.loc, "malformed number '" + text + "'");
    t.kind = Tok::kNumber;
    t.text = text;
    t.number = v;
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// ---------------------------------------------------------------- parser

std::string describe_token(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  if (t.kind == Tok::kKeyword) return "':" + t.text + "'";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { cur_ = lex_.next(); }

  bool at_end() const { return cur_.kind == Tok::kEnd; }
  const Token& current() const { return cur_; }

  // A top-level form: either a let binding or a term.
  std::variant<Binding, Term> form() {
    if (cur_.kind == Tok::kLParen) {
      const Location open = cur_.loc;
      shift();
      if (cur_.kind == Tok::kIdent && cur_.text == "let") {
        shift();
        if (cur_.kind != Tok::kIdent) syntax_error(cur_.loc, "expected a name after 'let', got " + describe_token(cur_));
        Binding b;
        b.name = cur_.text;
        b.loc = open;
        shift();
        b.term = term();
        expect(Tok::kRParen, "')' closing let");
        return b;
      }
      return call_body(open);
    }
    return term();
  }

  Term term() {
    Term t;
    t.loc = cur_.loc;
    switch (cur_.kind) {
      case Tok::kNumber:
        t.kind = Term::Kind::kNumber;
        t.number = cur_.number;
        shift();
        return t;
      case Tok::kIdent:
        t.kind = Term::Kind::kIdent;
        t.name = cur_.text;
        shift();
        return t;
      case Tok::kLBracket:
        t.kind = Term::Kind::kVector;
        t.vector = vector_literal();
        return t;
      case Tok::kLParen: {
        shift();
        return call_body(t.loc);
      }
      default:
        syntax_error(cur_.loc, "expected a term, got " + describe_token(cur_));
    }
  }

  void expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind) syntax_error(cur_.loc, "expected " + what + ", got " + describe_token(cur_));
    shift();
  }

 private:
  void shift() { cur_ = lex_.next(); }

  // After '('.
  Term call_body(const Location& open) {
    if (cur_.kind != Tok::kIdent) syntax_error(cur_.loc, "expected an operator name, got " + describe_token(cur_));
    Term t;
    t.loc = open;
    if (cur_.text == "series") {
      shift();
      t.kind = Term::Kind::kSeries;
      t.series = series_body(open);
      return t;
    }
    if (cur_.text == "let") syntax_error(cur_.loc, "'let' is only allowed at top level");
    if (!find_op(cur_.text)) syntax_error(cur_.loc, "unknown operator '" + cur_.text + "'");
    t.kind = Term::Kind::kCall;
    t.name = cur_.text;
    shift();
    while (cur_.kind != Tok::kRParen) {
      if (cur_.kind == Tok::kEnd) syntax_error(cur_.loc, "unexpected end of input, expected ')' closing '(" + t.name + "'");
      t.args.push_back(term());
    }
    shift();
    return t;
  }

  double number(const std::string& what) {
    if (cur_.kind != Tok::kNumber) syntax_error(cur_.loc, "expected " + what + ", got " + describe_token(cur_));
    const double v = cur_.number;
    shift();
    return v;
  }

  std::size_t natural(const std::string& what) {
    const Location loc = cur_.loc;
    const double v = number(what);
    if (v < 0 || v != std::floor(v) || v > std::numeric_limits<std::uint32_t>::max()) {
      syntax_error(loc, what + " must be a natural number");
    }
    return static_cast<std::size_t>(v);
  }

  Vector vector_literal() {
    const Location open = cur_.loc;
    shift();
    std::vector<double> parts;
    while (cur_.kind != Tok::kRBracket) {
      if (cur_.kind == Tok::kComma && !parts.empty()) {
        shift();
        continue;
      }
      parts.push_back(number("a number inside '['"));
    }
    shift();
    if (parts.size() % 2 != 0) {
      syntax_error(open, "vector literal needs [re, im] pairs, got " + std::to_string(parts.size()) + " numbers");
    }
    Vector v;
    for (std::size_t i = 0; i < parts.size(); i += 2) v.emplace_back(parts[i], parts[i + 1]);
    return v;
  }

  SeriesLiteral series_body(const Location& open) {
    SeriesLiteral s;
    bool have_dom = false, have_cod = false, have_deg = false;
    while (cur_.kind == Tok::kKeyword) {
      const std::string key = cur_.text;
      const Location loc = cur_.loc;
      shift();
      if (key == "dom") {
        s.dom = natural(":dom");
        have_dom = true;
      } else if (key == "cod") {
        s.cod = natural(":cod");
        have_cod = true;
      } else if (key == "deg") {
        s.deg = static_cast<unsigned>(natural(":deg"));
        have_deg = true;
      } else if (key == "poly") {
        s.poly = true;
      } else {
        syntax_error(loc, "unknown series field ':" + key + "'");
      }
    }
    if (!have_dom || !have_cod || !have_deg) syntax_error(open, "series literal needs :dom, :cod and :deg");
    if (s.dom == 0 || s.cod == 0) syntax_error(open, "series dimensions must be at least 1");
    if (cur_.kind == Tok::kLBrace) {
      shift();
      while (cur_.kind != Tok::kRBrace) {
        if (cur_.kind == Tok::kComma) {
          shift();
          continue;
        }
        entry(s);
      }
      shift();
    }
    expect(Tok::kRParen, "')' closing series");
    return s;
  }

  void entry(SeriesLiteral& s) {
    const Location loc = cur_.loc;
    expect(Tok::kLParen, "'(' starting a multi-index");
    CoeffKey key;
    unsigned total = 0;
    while (cur_.kind != Tok::kRParen) {
      if (cur_.kind == Tok::kComma && !key.alpha.empty()) {
        shift();
        continue;
      }
      const auto a = static_cast<std::uint32_t>(natural("an exponent"));
      key.alpha.push_back(a);
      total += a;
    }
    shift();
    if (cur_.kind == Tok::kAt) {
      shift();
      key.out = natural("an output index after '@'");
    }
    expect(Tok::kArrow, "'->'");
    Complex value;
    if (cur_.kind == Tok::kLBracket) {
      const Location vloc = cur_.loc;
      const Vector v = vector_literal();
      if (v.size() != 1) syntax_error(vloc, "coefficient must be a number or a single [re, im] pair");
      value = v[0];
    } else {
      value = number("a coefficient");
    }
    if (key.alpha.size() != s.dom) {
      syntax_error(loc, "multi-index has " + std::to_string(key.alpha.size()) + " entries, series domain is C^" +
                            std::to_string(s.dom));
    }
    if (key.out >= s.cod) {
      syntax_error(loc, "output index " + std::to_string(key.out) + " out of range for C^" + std::to_string(s.cod));
    }
    if (total > s.deg) {
      syntax_error(loc, "monomial of degree " + std::to_string(total) + " exceeds :deg " + std::to_string(s.deg));
    }
    if (!s.coeffs.emplace(std::move(key), value).second) syntax_error(loc, "duplicate coefficient");
  }

  Lexer lex_;
  Token cur_;
};

// ---------------------------------------------------------------- printer

std::string fmt_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0 && !std::signbit(z.imag())) return fmt_number(z.real());
  return "[" + fmt_number(z.real()) + "," + fmt_number(z.imag()) + "]";
}

void print_into(const Term& t, std::string& out) {
  switch (t.kind) {
    case Term::Kind::kNumber:
      out += fmt_number(t.number);
      return;
    case Term::Kind::kIdent:
      out += t.name;
      return;
    case Term::Kind::kVector: {
      out += '[';
      for (std::size_t i = 0; i < t.vector.size(); ++i) {
        if (i) out += ',';
        out += fmt_number(t.vector[i].real()) + "," + fmt_number(t.vector[i].imag());
      }
      out += ']';
      return;
    }
    case Term::Kind::kSeries: {
      const SeriesLiteral& s = t.series;
      out += "(series :dom " + std::to_string(s.dom) + " :cod " + std::to_string(s.cod) + " :deg " +
             std::to_string(s.deg);
      if (s.poly) out += " :poly";
      out += " {";
      bool first = true;
      for (const auto& [key, value] : s.coeffs) {
        if (!first) out += ", ";
        first = false;
        out += '(';
        for (std::size_t i = 0; i < key.alpha.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(key.alpha[i]);
        }
        out += ')';
        if (s.cod > 1) out += "@" + std::to_string(key.out);
        out += "->" + fmt_complex(value);
      }
      out += "})";
      return;
    }
    case Term::Kind::kCall:
      out += '(' + t.name;
      for (const Term& a : t.args) {
        out += ' ';
        print_into(a, out);
      }
      out += ')';
      return;
  }
}

}  // namespace

Program parse_program(std::string_view source) {
  Parser p(source);
  Program prog;
  bool have_result = false;
  while (!p.at_end()) {
    if (have_result) syntax_error(p.current().loc, "unexpected " + describe_token(p.current()) + " after the result expression");
    auto form = p.form();
    if (auto* b = std::get_if<Binding>(&form)) {
      prog.bindings.push_back(std::move(*b));
    } else {
      prog.result = std::move(std::get<Term>(form));
      have_result = true;
    }
  }
  if (!have_result) syntax_error(p.current().loc, "unexpected end of input, expected a result expression");
  return prog;
}

Term parse_term(std::string_view source) {
  Parser p(source);
  Term t = p.term();
  if (!p.at_end()) syntax_error(p.current().loc, "unexpected " + describe_token(p.current()) + " after the term");
  return t;
}

std::string print_term(const Term& term) {
  std::string out;
  print_into(term, out);
  return out;
}

std::string print_program(const Program& program) {
  std::string out;
  for (const Binding& b : program.bindings) out += "(let " + b.name + " " + print_term(b.term) + ")\n";
  out += print_term(program.result) + "\n";
  return out;
}

const std::vector<std::string>& dsl_operators() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& op : op_table()) v.emplace_back(op.name);
    return v;
  }();
  return names;
}

// ---------------------------------------------------------------- types

std::string Type::describe() const {
  auto deg = [&] { return degree ? std::to_string(*degree) : std::string("?"); };
  switch (kind) {
    case Kind::kScalar:
      return "scalar";
    case Kind::kVector:
      return "vector in C^" + std::to_string(dim);
    case Kind::kSeries:
      return "series C^" + std::to_string(dim) + " -> C^" + std::to_string(cod) + " of degree " + deg();
    case Kind::kNest:
      return "curried series C^" + std::to_string(dim) + " -> (C^" + std::to_string(inner) + " -> C^" +
             std::to_string(cod) + ") of degree " + deg();
    case Kind::kDist:
      return "distribution on !C^" + std::to_string(dim) + " of degree " + deg();
    case Kind::kOperator:
      return "operator " + (source ? source->label() : std::string("?")) + " -> " +
             (target ? target->label() : std::string("?"));
    case Kind::kBool:
      return "boolean";
  }
  return "?";
}

namespace {

std::string excerpt(const Term& t) {
  std::string s = print_term(t);
  if (s.size() > 72) s = s.substr(0, 69) + "...";
  return s;
}

// Carries the location of the innermost failing term.
class LocatedError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void type_error(const Term& t, const std::string& msg) {
  throw LocatedError("type error at " + t.loc.to_string() + " in " + excerpt(t) + ": " + msg);
}

Type scalar_type() { return Type{}; }
Type vector_type(std::size_t n) {
  Type t;
  t.kind = Type::Kind::kVector;
  t.dim = n;
  return t;
}
Type series_type(std::size_t m, std::size_t n, std::optional<unsigned> d, std::optional<bool> poly) {
  Type t;
  t.kind = Type::Kind::kSeries;
  t.dim = m;
  t.cod = n;
  t.degree = d;
  t.poly = poly;
  return t;
}
Type dist_type(std::size_t m, std::optional<unsigned> d) {
  Type t;
  t.kind = Type::Kind::kDist;
  t.dim = m;
  t.degree = d;
  return t;
}
Type operator_type(std::optional<Space> s, std::optional<Space> g) {
  Type t;
  t.kind = Type::Kind::kOperator;
  t.source = std::move(s);
  t.target = std::move(g);
  return t;
}
Type bool_type() {
  Type t;
  t.kind = Type::Kind::kBool;
  return t;
}
// eval-like results: a scalar when the codomain is C.
Type point_type(std::size_t n) { return n == 1 ? scalar_type() : vector_type(n); }

std::optional<unsigned> min_opt(std::optional<unsigned> a, std::optional<unsigned> b) {
  if (a && b) return std::min(*a, *b);
  return std::nullopt;
}

// Literal natural-number argument.
std::size_t literal_nat(const Term& t, const Term& parent, const char* what) {
  if (t.kind != Term::Kind::kNumber || t.number < 0 || t.number != std::floor(t.number) ||
      t.number > std::numeric_limits<std::uint32_t>::max()) {
    type_error(parent, std::string(what) + " must be a natural-number literal, got " + excerpt(t));
  }
  return static_cast<std::size_t>(t.number);
}

using TypeEnv = std::unordered_map<std::string, Type>;

class Checker {
 public:
  explicit Checker(const TypeEnv& env) : env_(env) {}

  Type check(const Term& t) {
    switch (t.kind) {
      case Term::Kind::kNumber:
        return scalar_type();
      case Term::Kind::kVector:
        return vector_type(t.vector.size());
      case Term::Kind::kSeries:
        return series_type(t.series.dom, t.series.cod, t.series.deg, t.series.poly);
      case Term::Kind::kIdent: {
        const auto it = env_.find(t.name);
        if (it == env_.end()) type_error(t, "unbound name '" + t.name + "'");
        return it->second;
      }
      case Term::Kind::kCall:
        return check_call(t);
    }
    type_error(t, "unknown term");
  }

 private:
  Type check_call(const Term& t) {
    const OpSig* op = find_op(t.name);
    if (!op) type_error(t, "unknown operator '" + t.name + "'");
    const bool optional_tol = t.name == "equal" && t.args.size() == 3;
    if (t.args.size() != op->arity && !optional_tol) {
      type_error(t, std::string(op->usage) + " takes " + std::to_string(op->arity) + " arguments, got " +
                        std::to_string(t.args.size()));
    }
    const std::string& n = t.name;
    auto arg = [&](std::size_t i) { return check(t.args[i]); };
    auto nat = [&](std::size_t i, const char* what) { return literal_nat(t.args[i], t, what); };
    auto want = [&](std::size_t i, Type::Kind kind, const char* what) {
      Type a = arg(i);
      if (a.kind != kind) type_error(t, std::string("argument ") + std::to_string(i + 1) + " must be " + what + ", got " + a.describe());
      return a;
    };
    auto series = [&](std::size_t i) { return want(i, Type::Kind::kSeries, "a series"); };
    // Vectors of length 1 and scalars are interchangeable as points.
    auto point = [&](std::size_t i) -> std::size_t {
      Type a = arg(i);
      if (a.kind == Type::Kind::kScalar) return 1;
      if (a.kind != Type::Kind::kVector) {
        type_error(t, "argument " + std::to_string(i + 1) + " must be a vector, got " + a.describe());
      }
      return a.dim;
    };
    auto scalar = [&](std::size_t i) {
      if (point(i) != 1) type_error(t, "argument " + std::to_string(i + 1) + " must be a scalar");
    };
    auto deg_arg = [&](std::size_t i) { return static_cast<unsigned>(nat(i, "degree")); };
    auto dim_arg = [&](std::size_t i) {
      const std::size_t d = nat(i, "dimension");
      if (d == 0) type_error(t, "dimension must be at least 1");
      return d;
    };

    if (n == "compose") {
      const Type f = series(0), g = series(1);
      if (g.cod != f.dim) {
        type_error(t, "inner series lands in C^" + std::to_string(g.cod) + " but outer series is defined on C^" +
                          std::to_string(f.dim));
      }
      std::optional<unsigned> d;
      if (f.poly) d = *f.poly ? g.degree : min_opt(f.degree, g.degree);
      std::optional<bool> poly;
      if ((f.poly && !*f.poly) || (g.poly && !*g.poly)) poly = false;
      return series_type(g.dim, f.cod, d, poly);
    }
    if (n == "curry") {
      const Type f = series(0);
      const std::size_t k = nat(1, "split");
      if (k == 0 || k >= f.dim) {
        type_error(t, "split " + std::to_string(k) + " must lie strictly between 0 and the domain dimension " +
                          std::to_string(f.dim));
      }
      Type r;
      r.kind = Type::Kind::kNest;
      r.dim = k;
      r.inner = f.dim - k;
      r.cod = f.cod;
      r.degree = f.degree;
      r.poly = f.poly;
      return r;
    }
    if (n == "uncurry") {
      const Type nest = want(0, Type::Kind::kNest, "a curried series");
      return series_type(nest.dim + nest.inner, nest.cod, nest.degree, nest.poly);
    }
    if (n == "diff") {
      const Type f = series(0);
      if (f.degree && *f.degree == 0) type_error(t, "cannot differentiate a degree-0 truncation");
      return series_type(f.dim, f.cod * f.dim, f.degree ? std::optional<unsigned>(*f.degree - 1) : std::nullopt, f.poly);
    }
    if (n == "partial") {
      const Type f = series(0);
      const std::size_t i = nat(1, "coordinate");
      if (i >= f.dim) type_error(t, "coordinate " + std::to_string(i) + " out of range for C^" + std::to_string(f.dim));
      std::optional<unsigned> d;
      if (f.degree) d = *f.degree == 0 ? 0 : *f.degree - 1;
      return series_type(f.dim, f.cod, d, f.poly);
    }
    if (n == "dir") {
      const Type f = series(0);
      for (std::size_t i : {1u, 2u}) {
        if (point(i) != f.dim) type_error(t, "argument " + std::to_string(i + 1) + " must lie in C^" + std::to_string(f.dim));
      }
      return point_type(f.cod);
    }
    if (n == "eval") {
      const Type f = arg(0);
      const std::size_t x = point(1);
      if (f.kind == Type::Kind::kSeries) {
        if (x != f.dim) type_error(t, "point in C^" + std::to_string(x) + " but series is defined on C^" + std::to_string(f.dim));
        return point_type(f.cod);
      }
      if (f.kind == Type::Kind::kNest) {
        if (x != f.dim) {
          type_error(t, "point in C^" + std::to_string(x) + " but the outer variable lives in C^" + std::to_string(f.dim));
        }
        return series_type(f.inner, f.cod, f.degree, std::nullopt);
      }
      type_error(t, "eval expects a series or curried series, got " + f.describe());
    }
    if (n == "part" || n == "truncate") {
      const Type f = series(0);
      const std::size_t k = nat(1, "order");
      if (f.degree && k > *f.degree) {
        type_error(t, "order " + std::to_string(k) + " exceeds truncation degree " + std::to_string(*f.degree));
      }
      if (n == "part") return series_type(f.dim, f.cod, f.degree, true);
      return series_type(f.dim, f.cod, static_cast<unsigned>(k), std::nullopt);
    }
    if (n == "add") {
      const Type a = arg(0), b = arg(1);
      if (a.kind != b.kind) type_error(t, "cannot add " + a.describe() + " and " + b.describe());
      switch (a.kind) {
        case Type::Kind::kScalar:
          return a;
        case Type::Kind::kVector:
          if (a.dim != b.dim) type_error(t, "cannot add " + a.describe() + " and " + b.describe());
          return a;
        case Type::Kind::kSeries: {
          if (a.dim != b.dim || a.cod != b.cod) type_error(t, "cannot add " + a.describe() + " and " + b.describe());
          std::optional<unsigned> d;
          std::optional<bool> poly;
          if (a.poly && b.poly) {
            poly = *a.poly && *b.poly;
            if (a.degree && b.degree) d = *poly ? std::max(*a.degree, *b.degree) : std::min(*a.degree, *b.degree);
          }
          return series_type(a.dim, a.cod, d, poly);
        }
        case Type::Kind::kDist:
          if (a.dim != b.dim) type_error(t, "cannot add " + a.describe() + " and " + b.describe());
          if (a.degree && b.degree && *a.degree != *b.degree) {
            type_error(t, "cannot add " + a.describe() + " and " + b.describe());
          }
          return a;
        default:
          type_error(t, "add is not defined on " + a.describe());
      }
    }
    if (n == "scale") {
      scalar(0);
      Type b = arg(1);
      if (b.kind == Type::Kind::kNest || b.kind == Type::Kind::kBool || b.kind == Type::Kind::kOperator) {
        type_error(t, "scale is not defined on " + b.describe());
      }
      return b;
    }
    if (n == "mul") {
      const Type a = arg(0), b = arg(1);
      if (a.kind == Type::Kind::kScalar && b.kind == Type::Kind::kScalar) return a;
      if (a.kind != Type::Kind::kSeries || b.kind != Type::Kind::kSeries || a.cod != 1 || b.cod != 1 || a.dim != b.dim) {
        type_error(t, "mul needs two scalars or two scalar series on the same space, got " + a.describe() + " and " +
                          b.describe());
      }
      std::optional<bool> poly;
      if ((a.poly && !*a.poly) || (b.poly && !*b.poly)) poly = false;
      return series_type(a.dim, 1, min_opt(a.degree, b.degree), poly);
    }
    if (n == "identity") {
      const std::size_t m = dim_arg(0);
      const unsigned d = deg_arg(1);
      return series_type(m, m, d, d >= 1);
    }
    if (n == "dirac") return dist_type(point(0), deg_arg(1));
    if (n == "theta") {
      const std::size_t k = nat(0, "order");
      const std::size_t m = point(1);
      const unsigned d = deg_arg(2);
      if (k > d) type_error(t, "order " + std::to_string(k) + " exceeds degree " + std::to_string(d));
      return dist_type(m, d);
    }
    if (n == "coder") {
      const std::size_t m = point(0);
      const unsigned d = deg_arg(1);
      if (d == 0) type_error(t, "codereliction needs degree at least 1");
      return dist_type(m, d);
    }
    if (n == "conv") {
      const Type a = want(0, Type::Kind::kDist, "a distribution"), b = want(1, Type::Kind::kDist, "a distribution");
      if (a.dim != b.dim) type_error(t, "cannot convolve " + a.describe() + " with " + b.describe());
      return dist_type(a.dim, min_opt(a.degree, b.degree));
    }
    if (n == "taylor") {
      point(0);
      deg_arg(1);
      return bool_type();
    }
    if (n == "bang") {
      const Type f = series(0);
      const unsigned d = deg_arg(1);
      if (f.degree && f.poly && !*f.poly && *f.degree < d) {
        type_error(t, "degree " + std::to_string(d) + " exceeds the truncation degree " + std::to_string(*f.degree) +
                          " of a non-polynomial series");
      }
      return operator_type(Space::bang({f.dim}, d), Space::bang({f.cod}, d));
    }
    if (n == "hat") {
      const Type f = series(0);
      std::optional<Space> s;
      if (f.degree) s = Space::bang({f.dim}, *f.degree);
      return operator_type(s, Space::vector(f.cod));
    }
    if (n == "check") {
      const Type g = want(0, Type::Kind::kOperator, "an operator");
      if (g.source && (g.source->kind != Space::Kind::kBang || g.source->dims.size() != 1)) {
        type_error(t, "check needs an operator out of a single !C^m, got " + g.describe());
      }
      if (g.target && g.target->kind != Space::Kind::kVector) {
        type_error(t, "check needs an operator into C^n, got " + g.describe());
      }
      if (g.source && g.target) return series_type(g.source->dims[0], g.target->dims[0], g.source->degree, std::nullopt);
      type_error(t, "cannot infer the shape of " + g.describe());
    }
    if (n == "apply") {
      const Type a = arg(0), b = arg(1);
      if (a.kind == Type::Kind::kDist) {
        if (b.kind != Type::Kind::kSeries) type_error(t, "a distribution applies to a series, got " + b.describe());
        if (a.dim != b.dim) type_error(t, "cannot apply " + a.describe() + " to " + b.describe());
        return point_type(b.cod);
      }
      if (a.kind == Type::Kind::kOperator) {
        if (b.kind == Type::Kind::kDist) {
          if (a.source && b.degree && !(*a.source == Space::bang({b.dim}, *b.degree))) {
            type_error(t, "operator source " + a.source->label() + " does not match " + b.describe());
          }
        } else if (b.kind == Type::Kind::kVector || b.kind == Type::Kind::kScalar) {
          const std::size_t len = b.kind == Type::Kind::kScalar ? 1 : b.dim;
          if (a.source && a.source->size() != len) {
            type_error(t, "operator source " + a.source->label() + " has dimension " + std::to_string(a.source->size()) +
                              ", argument has " + std::to_string(len));
          }
        } else {
          type_error(t, "an operator applies to a distribution or a coordinate vector, got " + b.describe());
        }
        if (!a.target) return vector_type(0);
        if (a.target->kind == Space::Kind::kBang && a.target->dims.size() == 1) {
          return dist_type(a.target->dims[0], a.target->degree);
        }
        return point_type(a.target->size());
      }
      type_error(t, "apply expects a distribution or an operator first, got " + a.describe());
    }
    if (n == "counit") {
      const std::size_t m = dim_arg(0);
      return operator_type(Space::bang({m}, deg_arg(1)), Space::vector(m));
    }
    if (n == "rho") {
      const std::size_t m = dim_arg(0);
      const unsigned outer = deg_arg(1), inner = deg_arg(2);
      const std::size_t inner_size = MonomialBasis::get(m, inner)->size();
      return operator_type(Space::bang({m}, inner), Space::bang({inner_size}, outer));
    }
    if (n == "contract") {
      const std::size_t m = dim_arg(0);
      const unsigned d = deg_arg(1);
      return operator_type(Space::bang({m}, d), Space::bang({m, m}, d));
    }
    if (n == "weaken") {
      const std::size_t m = dim_arg(0);
      const unsigned d = deg_arg(1);
      return operator_type(Space::bang({m}, d), Space::bang({}, d));
    }
    if (n == "cocontract") {
      const std::size_t m = dim_arg(0);
      const unsigned d = deg_arg(1);
      return operator_type(Space::bang({m, m}, d), Space::bang({m}, d));
    }
    if (n == "coweaken") {
      const std::size_t m = dim_arg(0);
      const unsigned d = deg_arg(1);
      return operator_type(Space::bang({}, d), Space::bang({m}, d));
    }
    if (n == "m2" || n == "m2inv" || n == "swap") {
      const std::size_t a = dim_arg(0), b = dim_arg(1);
      const unsigned d = deg_arg(2);
      if (n == "m2") return operator_type(Space::bang({a, b}, d), Space::bang({a + b}, d));
      if (n == "m2inv") return operator_type(Space::bang({a + b}, d), Space::bang({a, b}, d));
      return operator_type(Space::bang({a, b}, d), Space::bang({b, a}, d));
    }
    if (n == "tensor") {
      const Type a = want(0, Type::Kind::kOperator, "an operator"), b = want(1, Type::Kind::kOperator, "an operator");
      if (!a.source || !a.target || !b.source || !b.target) type_error(t, "tensor needs operators of known shape");
      for (const Space* s : {&*a.source, &*a.target, &*b.source, &*b.target}) {
        if (s->kind != Space::Kind::kBang || s->degree != a.source->degree) {
          type_error(t, "tensor needs maps between bang spaces of one degree, got " + a.describe() + " and " + b.describe());
        }
      }
      auto cat = [](const Space& x, const Space& y) {
        std::vector<std::size_t> dims = x.dims;
        dims.insert(dims.end(), y.dims.begin(), y.dims.end());
        return Space::bang(std::move(dims), x.degree);
      };
      return operator_type(cat(*a.source, *b.source), cat(*a.target, *b.target));
    }
    if (n == "matmul") {
      const Type a = want(0, Type::Kind::kOperator, "an operator"), b = want(1, Type::Kind::kOperator, "an operator");
      if (a.source && b.target && !(*a.source == *b.target)) {
        type_error(t, "cannot compose " + a.describe() + " after " + b.describe());
      }
      return operator_type(b.source, a.target);
    }
    if (n == "equal") {
      const Type a = arg(0), b = arg(1);
      if (t.args.size() == 3 && t.args[2].kind != Term::Kind::kNumber) type_error(t, "tolerance must be a number literal");
      const bool points = (a.kind == Type::Kind::kScalar || a.kind == Type::Kind::kVector) &&
                          (b.kind == Type::Kind::kScalar || b.kind == Type::Kind::kVector);
      if (a.kind != b.kind && !points) type_error(t, "cannot compare " + a.describe() + " with " + b.describe());
      return bool_type();
    }
    type_error(t, "unknown operator '" + n + "'");
  }

  const TypeEnv& env_;
};

// ---------------------------------------------------------------- evaluator

using ValueEnv = std::unordered_map<std::string, Value>;

Vector as_point(const Value& v) {
  if (const auto* z = std::get_if<Complex>(&v)) return Vector{*z};
  return std::get<Vector>(v);
}

Complex as_scalar(const Value& v) { return as_point(v).at(0); }

Value point_value(Vector v) {
  if (v.size() == 1) return v[0];
  return v;
}

double scaled_gap(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double scaled_gap(std::span<const Complex> a, std::span<const Complex> b) {
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, scaled_gap(a[i], b[i]));
  return err;
}

bool values_equal(const Value& a, const Value& b, double tol) {
  if ((std::holds_alternative<Complex>(a) || std::holds_alternative<Vector>(a)) &&
      (std::holds_alternative<Complex>(b) || std::holds_alternative<Vector>(b))) {
    const Vector x = as_point(a), y = as_point(b);
    return x.size() == y.size() && scaled_gap(x, y) <= tol;
  }
  if (a.index() != b.index()) return false;
  if (const auto* f = std::get_if<TruncatedSeries>(&a)) {
    const auto& g = std::get<TruncatedSeries>(b);
    if (f->domain_dim() != g.domain_dim() || f->codomain_dim() != g.codomain_dim() || f->degree() != g.degree()) return false;
    return scaled_gap(f->coefficients(), g.coefficients()) <= tol;
  }
  if (const auto* f = std::get_if<CurriedSeries>(&a)) {
    const auto& g = std::get<CurriedSeries>(b);
    if (f->outer_dim() != g.outer_dim() || f->inner_dim() != g.inner_dim() || f->codomain_dim() != g.codomain_dim() ||
        f->degree() != g.degree()) {
      return false;
    }
    for (std::size_t i = 0; i < f->outer_basis().size(); ++i) {
      if (scaled_gap(f->inner(i).coefficients(), g.inner(i).coefficients()) > tol) return false;
    }
    return true;
  }
  if (const auto* d = std::get_if<Distribution>(&a)) {
    const auto& e = std::get<Distribution>(b);
    return d->dim() == e.dim() && d->degree() == e.degree() && scaled_gap(d->coefficients(), e.coefficients()) <= tol;
  }
  if (const auto* p = std::get_if<LinearOperator>(&a)) {
    const auto& q = std::get<LinearOperator>(b);
    return p->source() == q.source() && p->target() == q.target() && scaled_gap(p->data(), q.data()) <= tol;
  }
  return std::get<bool>(a) == std::get<bool>(b);
}

class Evaluator {
 public:
  explicit Evaluator(const ValueEnv& env) : env_(env) {}

  Value eval(const Term& t) {
    switch (t.kind) {
      case Term::Kind::kNumber:
        return Complex(t.number);
      case Term::Kind::kVector:
        return t.vector;
      case Term::Kind::kIdent:
        return env_.at(t.name);
      case Term::Kind::kSeries: {
        const SeriesLiteral& s = t.series;
        return located(t, [&]() -> Value {
          TruncatedSeries f(s.dom, s.cod, s.deg, s.poly);
          for (const auto& [key, value] : s.coeffs) f.set_coeff(key.out, MultiIndex(key.alpha), value);
          return f;
        });
      }
      case Term::Kind::kCall: {
        std::vector<Value> args;
        args.reserve(t.args.size());
        for (const Term& a : t.args) args.push_back(eval(a));
        return located(t, [&] { return call(t, args); });
      }
    }
    throw InvariantViolation("unknown term kind");
  }

 private:
  template <class F>
  Value located(const Term& t, F&& body) {
    try {
      return body();
    } catch (const LocatedError&) {
      throw;
    } catch (const Error& e) {
      throw LocatedError("error at " + t.loc.to_string() + " in " + excerpt(t) + ": " + e.what());
    }
  }

  static unsigned nat(const Term& t, std::size_t i) { return static_cast<unsigned>(t.args[i].number); }

  Value call(const Term& t, const std::vector<Value>& a) {
    const std::string& n = t.name;
    auto series = [&](std::size_t i) -> const TruncatedSeries& { return std::get<TruncatedSeries>(a[i]); };
    auto dist = [&](std::size_t i) -> const Distribution& { return std::get<Distribution>(a[i]); };
    auto op = [&](std::size_t i) -> const LinearOperator& { return std::get<LinearOperator>(a[i]); };

    if (n == "compose") return compose(series(0), series(1));
    if (n == "curry") return curry(series(0), nat(t, 1));
    if (n == "uncurry") return uncurry(std::get<CurriedSeries>(a[0]));
    if (n == "diff") return derivative_series(series(0));
    if (n == "partial") return series(0).partial_derivative(nat(t, 1));
    if (n == "dir") return point_value(series(0).directional_derivative(as_point(a[1]), as_point(a[2])));
    if (n == "eval") {
      if (const auto* nest = std::get_if<CurriedSeries>(&a[0])) return nest->evaluate_outer(as_point(a[1]));
      return point_value(series(0).evaluate(as_point(a[1])));
    }
    if (n == "part") return series(0).homogeneous_part(nat(t, 1));
    if (n == "truncate") return series(0).truncate(nat(t, 1));
    if (n == "add") {
      if (std::holds_alternative<TruncatedSeries>(a[0])) return add(series(0), series(1));
      if (std::holds_alternative<Distribution>(a[0])) return dist(0) + dist(1);
      if (std::holds_alternative<Complex>(a[0])) return std::get<Complex>(a[0]) + std::get<Complex>(a[1]);
      Vector v = std::get<Vector>(a[0]);
      const Vector& w = std::get<Vector>(a[1]);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
      return v;
    }
    if (n == "scale") {
      const Complex s = as_scalar(a[0]);
      if (std::holds_alternative<TruncatedSeries>(a[1])) return scale(series(1), s);
      if (std::holds_alternative<Distribution>(a[1])) return dist(1).scaled(s);
      if (std::holds_alternative<Complex>(a[1])) return s * std::get<Complex>(a[1]);
      Vector v = std::get<Vector>(a[1]);
      for (Complex& z : v) z *= s;
      return v;
    }
    if (n == "mul") {
      if (std::holds_alternative<Complex>(a[0])) return std::get<Complex>(a[0]) * std::get<Complex>(a[1]);
      return pointwise_multiply(series(0), series(1));
    }
    if (n == "identity") return TruncatedSeries::identity(nat(t, 0), nat(t, 1));
    if (n == "dirac") return dirac(as_point(a[0]), nat(t, 1));
    if (n == "theta") return theta(nat(t, 0), as_point(a[1]), nat(t, 2));
    if (n == "coder") return codereliction(as_point(a[0]), nat(t, 1));
    if (n == "conv") return convolve(dist(0), dist(1));
    if (n == "taylor") return delta_taylor_check(as_point(a[0]), nat(t, 1));
    if (n == "bang") return bang_map(series(0), nat(t, 1));
    if (n == "hat") return hat(series(0));
    if (n == "check") return check(op(0));
    if (n == "apply") {
      if (std::holds_alternative<Distribution>(a[0])) return point_value(dist(0).apply(series(1)));
      const LinearOperator& g = op(0);
      Vector coords;
      if (const auto* d = std::get_if<Distribution>(&a[1])) {
        if (!(g.source() == d->space())) {
          throw Error("operator source " + g.source().label() + " does not match the distribution space " +
                      d->space().label());
        }
        coords.assign(d->coefficients().begin(), d->coefficients().end());
      } else {
        coords = as_point(a[1]);
      }
      if (coords.size() != g.cols()) {
        throw Error("operator expects " + std::to_string(g.cols()) + " coordinates, got " + std::to_string(coords.size()));
      }
      Vector out = g.apply(coords);
      const Space& tgt = g.target();
      if (tgt.kind == Space::Kind::kBang && tgt.dims.size() == 1) return Distribution(tgt.dims[0], tgt.degree, out);
      return point_value(std::move(out));
    }
    if (n == "counit") return counit(nat(t, 0), nat(t, 1));
    if (n == "rho") return comultiplication(nat(t, 0), nat(t, 1), nat(t, 2));
    if (n == "contract") return contraction(nat(t, 0), nat(t, 1));
    if (n == "weaken") return weakening(nat(t, 0), nat(t, 1));
    if (n == "cocontract") return cocontraction(nat(t, 0), nat(t, 1));
    if (n == "coweaken") return coweakening(nat(t, 0), nat(t, 1));
    if (n == "m2") return monoidal(nat(t, 0), nat(t, 1), nat(t, 2));
    if (n == "m2inv") return monoidal_inverse(nat(t, 0), nat(t, 1), nat(t, 2));
    if (n == "swap") return swap_operator(nat(t, 0), nat(t, 1), nat(t, 2));
    if (n == "tensor") {
      const std::vector<LinearOperator> factors{op(0), op(1)};
      return tensor_product(factors, op(0).source().degree);
    }
    if (n == "matmul") return compose(op(0), op(1));
    if (n == "equal") return values_equal(a[0], a[1], t.args.size() == 3 ? t.args[2].number : 1e-12);
    throw InvariantViolation("operator '" + n + "' passed the checker but has no evaluator");
  }

  const ValueEnv& env_;
};

}  // namespace

Type typecheck(const Program& program) {
  TypeEnv env;
  for (const Binding& b : program.bindings) {
    if (env.count(b.name)) {
      throw LocatedError("type error at " + b.loc.to_string() + ": '" + b.name + "' is already bound");
    }
    Type ty = Checker(env).check(b.term);
    env.emplace(b.name, std::move(ty));
  }
  return Checker(env).check(program.result);
}

Value evaluate(const Program& program) {
  typecheck(program);
  ValueEnv env;
  for (const Binding& b : program.bindings) {
    Value v = Evaluator(env).eval(b.term);
    env.emplace(b.name, std::move(v));
  }
  return Evaluator(env).eval(program.result);
}

Value evaluate_source(std::string_view source) { return evaluate(parse_program(source)); }

std::string value_to_json(const Value& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Complex>) {
          return scalar_to_json(v);
        } else if constexpr (std::is_same_v<T, Vector>) {
          return vector_to_json(v);
        } else if constexpr (std::is_same_v<T, TruncatedSeries>) {
          return series_to_json(v);
        } else if constexpr (std::is_same_v<T, CurriedSeries>) {
          return nest_to_json(v);
        } else if constexpr (std::is_same_v<T, Distribution>) {
          return distribution_to_json(v);
        } else if constexpr (std::is_same_v<T, LinearOperator>) {
          return operator_to_json(v);
        } else {
          return v ? "true" : "false";
        }
      },
      value);
}

}  // namespace dill
