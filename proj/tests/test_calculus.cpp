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

#include "dill/calculus.hpp"
#include "dill/error.hpp"
#include "support.hpp"

using dill::Complex;
using dill::CurriedSeries;
using dill::MultiIndex;
using dill::TruncatedSeries;
using dill::Vector;
using testing_support::make_series;

namespace {

testing_support::Poly substitute_series(const TruncatedSeries& f, const TruncatedSeries& g, std::size_t out,
                                        unsigned degree) {
  std::vector<testing_support::Poly> gs;
  for (std::size_t i = 0; i < g.codomain_dim(); ++i) gs.push_back(testing_support::poly_from(g, i));
  return testing_support::substitute(testing_support::poly_from(f, out), gs, g.domain_dim(), degree);
}

double compose_gap(const TruncatedSeries& h, const TruncatedSeries& f, const TruncatedSeries& g) {
  double err = 0;
  for (std::size_t j = 0; j < f.codomain_dim(); ++j) {
    err = std::max(err, testing_support::gap(h, j, substitute_series(f, g, j, h.degree())));
  }
  return err;
}

// Jacobian of f at x as an n x m row-major matrix, read off derivative_series.
Vector jacobian(const TruncatedSeries& f, const Vector& x) { return dill::derivative_series(f).evaluate(x); }

}  // namespace

TEST_CASE("compose examples") {
  const auto id = TruncatedSeries::identity(2, 3);
  CHECK(dill::compose(id, id) == id);
  const auto f = make_series(1, 1, 4, {{0, {2}, 1.0}}, true);
  const auto g = make_series(1, 1, 4, {{0, {1}, 1.0}, {0, {2}, 1.0}}, true);
  const auto expect = make_series(1, 1, 4, {{0, {2}, 1.0}, {0, {3}, 2.0}, {0, {4}, 1.0}});
  CHECK(dill::max_coeff_difference(dill::compose(f, g), expect) == 0.0);
  CHECK(dill::max_coeff_difference(dill::compose_naive(f, g), expect) == 0.0);
}

TEST_CASE("compose edge cases") {
  const auto c = make_series(2, 1, 3, {{0, {0, 0}, Complex(2, 1)}});
  testing_support::Gen gen(41);
  const auto g = gen.series(3, 2, 3, true);
  for (const auto& h : {dill::compose(c, g), dill::compose_naive(c, g)}) {
    CHECK(h.coeff(0, MultiIndex{0, 0, 0}) == Complex(2, 1));
    for (std::size_t a = 1; a < h.basis().size(); ++a) CHECK(h.at(0, a) == Complex{});
  }
  const auto f = gen.series(2, 2, 3);
  const TruncatedSeries zero(3, 2, 3);
  for (const auto& h : {dill::compose(f, zero), dill::compose_naive(f, zero)}) {
    CHECK(h.evaluate(Vector{1.0, 2.0, 3.0}) == f.constant_term());
  }
  CHECK_THROWS_AS(dill::compose(f, gen.series(1, 3, 3, true)), dill::Error);
  // A constant term in g needs a polynomial f.
  CHECK_THROWS_AS(dill::compose(f, gen.series(3, 2, 3)), dill::Error);
}

TEST_CASE("compose reports both dimensions on mismatch") {
  testing_support::Gen gen(42);
  try {
    dill::compose(gen.series(2, 1, 2), gen.series(1, 3, 2, true));
    FAIL("expected a shape error");
  } catch (const dill::Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("C^3") != std::string::npos);
    CHECK(msg.find("C^2") != std::string::npos);
  }
}

TEST_CASE("property: compose agrees with direct substitution") {
  testing_support::Gen gen(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = gen.range(1, 3), n = gen.range(1, 3), p = gen.range(1, 3);
    const unsigned df = static_cast<unsigned>(gen.range(0, 5)), dg = static_cast<unsigned>(gen.range(0, 5));
    const auto f = gen.series(n, p, df);
    const auto g = gen.series(m, n, dg, true);
    const auto h = dill::compose(f, g);
    CHECK(h.degree() == std::min(df, dg));
    CHECK(compose_gap(h, f, g) < 1e-9);
    CHECK(dill::max_coeff_difference(h, dill::compose_naive(f, g)) < 1e-9);
  }
}

TEST_CASE("property: polynomial outer series keeps the inner degree") {
  testing_support::Gen gen(44);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = gen.polynomial(2, 1, static_cast<unsigned>(gen.range(0, 3)));
    const auto g = gen.series(2, 2, static_cast<unsigned>(gen.range(0, 5)));  // constant term allowed
    const auto h = dill::compose(f, g);
    CHECK(h.degree() == g.degree());
    CHECK(compose_gap(h, f, g) < 1e-12);
  }
}

TEST_CASE("property: compose is associative") {
  testing_support::Gen gen(45);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned d = static_cast<unsigned>(gen.range(1, 5));
    const auto f = gen.series(2, 2, d, true), g = gen.series(3, 2, d, true), h = gen.series(2, 3, d, true);
    CHECK(dill::max_coeff_difference(dill::compose(f, dill::compose(g, h)), dill::compose(dill::compose(f, g), h)) <
          1e-9);
  }
}

TEST_CASE("property: identity laws are exact") {
  testing_support::Gen gen(46);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = gen.range(1, 3), n = gen.range(1, 3);
    const unsigned d = static_cast<unsigned>(gen.range(1, 5));
    const auto f = gen.series(m, n, d);
    CHECK(dill::max_coeff_difference(dill::compose(TruncatedSeries::identity(n, d), f), f) <= testing_support::kExact);
    CHECK(dill::max_coeff_difference(dill::compose(f, TruncatedSeries::identity(m, d)), f) <= testing_support::kExact);
  }
}

TEST_CASE("curry examples") {
  const auto xy = make_series(2, 1, 2, {{0, {1, 1}, 1.0}});
  const CurriedSeries c = dill::curry(xy, 1);
  CHECK(c.outer_dim() == 1);
  CHECK(c.inner_dim() == 1);
  CHECK(c.inner(MultiIndex{1}) == make_series(1, 1, 1, {{0, {1}, 1.0}}));
  CHECK(c.inner(MultiIndex{0}) == TruncatedSeries(1, 1, 2));

  const auto sq = make_series(2, 1, 2, {{0, {2, 0}, 1.0}, {0, {0, 2}, 1.0}});
  const CurriedSeries s = dill::curry(sq, 1);
  CHECK(s.inner(MultiIndex{0}) == make_series(1, 1, 2, {{0, {2}, 1.0}}));
  CHECK(s.inner(MultiIndex{1}) == TruncatedSeries(1, 1, 1));
  CHECK(s.inner(MultiIndex{2}) == make_series(1, 1, 0, {{0, {0}, 1.0}}));

  const auto xonly = make_series(2, 2, 3, {{0, {1, 0}, 1.0}, {1, {3, 0}, 2.0}, {0, {0, 0}, 5.0}});
  const CurriedSeries x = dill::curry(xonly, 1);
  for (std::size_t a = 0; a < x.outer_basis().size(); ++a) {
    const auto& in = x.inner(a);
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t b = 1; b < in.basis().size(); ++b) CHECK(in.at(j, b) == Complex{});
    }
  }
  CHECK_THROWS_AS(dill::curry(xy, 0), dill::Error);
  CHECK_THROWS_AS(dill::curry(xy, 2), dill::Error);
}

TEST_CASE("uncurry examples") {
  const auto xy = make_series(2, 1, 2, {{0, {1, 1}, 1.0}});
  CHECK(dill::uncurry(dill::curry(xy, 1)) == xy);

  CurriedSeries nest(1, 1, 1, 3);
  for (std::size_t a = 0; a < nest.outer_basis().size(); ++a) nest.inner(a).at(0, 0) = Complex(1.0 + a);
  const auto f = dill::uncurry(nest);
  for (std::size_t a = 0; a < f.basis().size(); ++a) {
    if (f.basis()[a][1] != 0) CHECK(f.at(0, a) == Complex{});
  }
}

TEST_CASE("property: curry and uncurry are inverse") {
  testing_support::Gen gen(47);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m1 = gen.range(1, 3), m2 = gen.range(1, 4 - m1);
    const unsigned d = static_cast<unsigned>(gen.range(0, 5));
    const auto f = gen.series(m1 + m2, gen.range(1, 2), d);
    const auto c = dill::curry(f, m1);
    CHECK(dill::uncurry(c) == f);
    CHECK(dill::max_nest_difference(dill::curry(dill::uncurry(c), m1), c) == 0.0);
    CHECK(dill::max_nest_difference(dill::curry_via_multilinear(f, m1), c) <= testing_support::kExact);
  }
}

TEST_CASE("property: curried evaluation matches joint evaluation") {
  testing_support::Gen gen(48);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m1 = gen.range(1, 2), m2 = gen.range(1, 2);
    const auto f = gen.series(m1 + m2, 2, static_cast<unsigned>(gen.range(0, 5)));
    const Vector x = gen.point(m1, 0.5), y = gen.point(m2, 0.5);
    Vector xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    const Vector lhs = dill::curry(f, m1).evaluate_outer(x).evaluate(y);
    CHECK(testing_support::max_abs_diff(lhs, f.evaluate(xy)) < 1e-9);
  }
}

TEST_CASE("derivative examples") {
  const auto x2 = make_series(1, 1, 2, {{0, {2}, 1.0}});
  CHECK(dill::derivative_series(x2) == make_series(1, 1, 1, {{0, {1}, 2.0}}));
  const Vector a{1.0, 2.0, Complex(0, 3), 4.0, 5.0, 6.0};
  const auto lin = TruncatedSeries::linear(2, 3, a, 2);
  const auto d = dill::derivative_series(lin);
  CHECK(d.degree() == 1);
  CHECK(d.codomain_dim() == 6);
  const Vector anywhere = d.evaluate(Vector{Complex(1, 1), 2.0, -3.0});
  CHECK(anywhere == a);
}

TEST_CASE("chain rule spot check") {
  const auto f = make_series(1, 1, 2, {{0, {2}, 1.0}}, true);
  const auto g = make_series(1, 1, 2, {{0, {1}, 1.0}, {0, {2}, 1.0}}, true);
  const auto h = dill::compose(f, g.with_degree(4));
  const Vector x{1.0};
  const Complex lhs = jacobian(h, x)[0];
  const Complex rhs = jacobian(f, g.evaluate(x))[0] * jacobian(g, x)[0];
  CHECK(lhs == Complex(12.0));
  CHECK(rhs == Complex(12.0));
}

TEST_CASE("property: chain rule on polynomials") {
  testing_support::Gen gen(49);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = gen.range(1, 3), n = gen.range(1, 3), p = gen.range(1, 2);
    const unsigned a = static_cast<unsigned>(gen.range(1, 3)), b = static_cast<unsigned>(gen.range(1, 2));
    const auto f = gen.polynomial(n, p, a);
    const auto g = gen.polynomial(m, n, b, true);
    const auto h = dill::compose(f, g.with_degree(a * b));
    const Vector x = gen.point(m, 1);
    const Vector dh = jacobian(h, x), df = jacobian(f, g.evaluate(x)), dg = jacobian(g, x);
    Vector prod(p * m);
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < n; ++k) prod[j * m + i] += df[j * n + k] * dg[k * m + i];
      }
    }
    CHECK(testing_support::max_abs_diff(dh, prod) < 1e-8);
  }
}

TEST_CASE("effective degree") {
  CHECK(dill::effective_degree(make_series(2, 1, 5, {{0, {1, 1}, 1.0}})) == 2);
  CHECK(dill::effective_degree(TruncatedSeries(2, 1, 5)) == 0);
}
