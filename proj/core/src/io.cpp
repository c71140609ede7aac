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


#include "dill/io.hpp"

#include <json.hpp>

#include <cmath>
#include <set>
#include <utility>

#include "dill/error.hpp"

namespace dill {

namespace {

using nlohmann::json;

json parse_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

// Reads a required field with a readable error instead of a library exception.
template <typename T>
T field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string(what) + " JSON lacks field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(std::string(what) + " JSON field '" + key + "' has the wrong type");
  }
}

json alpha_json(const MultiIndex& a) { return json(std::vector<std::uint32_t>(a.exponents().begin(), a.exponents().end())); }

MultiIndex alpha_from(const json& j, std::size_t dim, const char* what) {
  const auto e = field<std::vector<std::uint32_t>>(j, "alpha", what);
  if (e.size() != dim) {
    throw Error(std::string(what) + " JSON: multi-index of length " + std::to_string(e.size()) + ", expected " +
                std::to_string(dim));
  }
  return MultiIndex(e);
}

Complex value_from(const json& j, const char* what) {
  const double re = field<double>(j, "re", what);
  const double im = j.contains("im") ? field<double>(j, "im", what) : 0.0;
  return {re, im};
}

json series_json(const TruncatedSeries& f) {
  json j;
  j["domain_dim"] = f.domain_dim();
  j["codomain_dim"] = f.codomain_dim();
  j["degree"] = f.degree();
  if (f.is_polynomial()) j["polynomial"] = true;
  json coeffs = json::array();
  for (std::size_t out = 0; out < f.codomain_dim(); ++out) {
    for (std::size_t a = 0; a < f.basis().size(); ++a) {
      const Complex c = f.at(out, a);
      if (c == Complex{}) continue;
      coeffs.push_back({{"out", out}, {"alpha", alpha_json(f.basis()[a])}, {"re", c.real()}, {"im", c.imag()}});
    }
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

json space_json(const Space& s) {
  if (s.kind == Space::Kind::kVector) return {{"kind", "vector"}, {"dim", s.dims.at(0)}};
  return {{"kind", "bang"}, {"dims", s.dims}, {"degree", s.degree}};
}

Space space_from(const json& j) {
  const auto kind = field<std::string>(j, "kind", "space");
  if (kind == "vector") return Space::vector(field<std::size_t>(j, "dim", "space"));
  if (kind == "bang") {
    return Space::bang(field<std::vector<std::size_t>>(j, "dims", "space"), field<unsigned>(j, "degree", "space"));
  }
  throw Error("space JSON: unknown kind '" + kind + "'");
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string series_to_json(const TruncatedSeries& f, int indent) { return dump(series_json(f), indent); }

TruncatedSeries series_from_json(const std::string& text) {
  const json j = parse_text(text, "series");
  const auto m = field<std::size_t>(j, "domain_dim", "series");
  const auto n = field<std::size_t>(j, "codomain_dim", "series");
  const auto D = field<unsigned>(j, "degree", "series");
  const bool poly = j.contains("polynomial") && field<bool>(j, "polynomial", "series");
  TruncatedSeries f(m, n, D, poly);
  const auto coeffs = field<json>(j, "coeffs", "series");
  if (!coeffs.is_array()) throw Error("series JSON field 'coeffs' must be an array");
  std::set<std::pair<std::size_t, MultiIndex>> seen;
  for (const auto& c : coeffs) {
    const auto out = field<std::size_t>(c, "out", "series coefficient");
    const MultiIndex alpha = alpha_from(c, m, "series coefficient");
    if (alpha.degree() > D) {
      throw Error("series JSON: coefficient " + alpha.to_string() + " exceeds degree " + std::to_string(D));
    }
    if (!seen.emplace(out, alpha).second) {
      throw Error("series JSON: duplicate coefficient for output " + std::to_string(out) + " at " + alpha.to_string());
    }
    f.set_coeff(out, alpha, value_from(c, "series coefficient"));
  }
  return f;
}

std::string distribution_to_json(const Distribution& d, int indent) {
  json j;
  j["dim"] = d.dim();
  j["degree"] = d.degree();
  json coeffs = json::array();
  for (std::size_t a = 0; a < d.basis().size(); ++a) {
    const Complex c = d.at(a);
    if (c == Complex{}) continue;
    coeffs.push_back({{"alpha", alpha_json(d.basis()[a])}, {"re", c.real()}, {"im", c.imag()}});
  }
  j["coeffs"] = std::move(coeffs);
  return dump(j, indent);
}

Distribution distribution_from_json(const std::string& text) {
  const json j = parse_text(text, "distribution");
  const auto m = field<std::size_t>(j, "dim", "distribution");
  const auto D = field<unsigned>(j, "degree", "distribution");
  Distribution d(m, D);
  std::set<MultiIndex> seen;
  for (const auto& c : field<json>(j, "coeffs", "distribution")) {
    const MultiIndex alpha = alpha_from(c, m, "distribution coefficient");
    if (alpha.degree() > D) {
      throw Error("distribution JSON: coefficient " + alpha.to_string() + " exceeds degree " + std::to_string(D));
    }
    if (!seen.insert(alpha).second) throw Error("distribution JSON: duplicate coefficient at " + alpha.to_string());
    d.set_coeff(alpha, value_from(c, "distribution coefficient"));
  }
  return d;
}

std::string operator_to_json(const LinearOperator& op, int indent) {
  json j;
  j["source"] = space_json(op.source());
  j["target"] = space_json(op.target());
  j["rows"] = op.rows();
  j["cols"] = op.cols();
  std::vector<double> re, im;
  re.reserve(op.data().size());
  im.reserve(op.data().size());
  for (Complex c : op.data()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return dump(j, indent);
}

LinearOperator operator_from_json(const std::string& text) {
  const json j = parse_text(text, "operator");
  LinearOperator op(space_from(field<json>(j, "source", "operator")), space_from(field<json>(j, "target", "operator")));
  const auto re = field<std::vector<double>>(j, "re", "operator");
  const auto im = field<std::vector<double>>(j, "im", "operator");
  if (re.size() != op.rows() * op.cols() || im.size() != re.size()) {
    throw Error("operator JSON: expected " + std::to_string(op.rows() * op.cols()) + " entries");
  }
  for (std::size_t r = 0; r < op.rows(); ++r) {
    for (std::size_t c = 0; c < op.cols(); ++c) op.at(r, c) = {re[r * op.cols() + c], im[r * op.cols() + c]};
  }
  return op;
}

std::string nest_to_json(const CurriedSeries& nest, int indent) {
  json j;
  j["outer_dim"] = nest.outer_dim();
  j["inner_dim"] = nest.inner_dim();
  j["codomain_dim"] = nest.codomain_dim();
  j["degree"] = nest.degree();
  if (nest.is_polynomial()) j["polynomial"] = true;
  json inner = json::array();
  for (std::size_t a = 0; a < nest.outer_basis().size(); ++a) {
    inner.push_back({{"alpha", alpha_json(nest.outer_basis()[a])}, {"series", series_json(nest.inner(a))}});
  }
  j["inner"] = std::move(inner);
  return dump(j, indent);
}

std::string scalar_to_json(Complex z) {
  if (z.imag() == 0.0) return json(z.real()).dump();
  return json::array({z.real(), z.imag()}).dump();
}

std::string vector_to_json(std::span<const Complex> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_to_json(v[i]);
  return s + "]";
}

std::string report_to_json_line(const LawReport& r) {
  json j;
  j["law"] = r.name;
  j["module"] = r.module;
  j["params"] = {{"max_dim", r.params.max_dim},
                 {"max_degree", r.params.max_degree},
                 {"seed", r.params.seed},
                 {"samples", r.params.samples}};
  // JSON has no infinity; a non-finite error is reported as null.
  j["max_error"] = std::isfinite(r.max_error) ? json(r.max_error) : json(nullptr);
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["runtime_ms"] = r.runtime_ms;
  return j.dump();
}

}  // namespace dill
