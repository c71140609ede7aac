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

#include <numbers>

#include "dill/error.hpp"
#include "dill/series.hpp"
#include "support.hpp"

using dill::Complex;
using dill::MultiIndex;
using dill::TruncatedSeries;
using dill::Vector;
using testing_support::make_series;

namespace {

Complex eval1(const TruncatedSeries& f, std::initializer_list<Complex> x) {
  const Vector v(x);
  return f.evaluate(v).at(0);
}

bool is_zero(const TruncatedSeries& f) {
  for (Complex c : f.coefficients()) {
    if (c != Complex{}) return false;
  }
  return true;
}

// 64 equispaced points on |z| = r.
std::vector<Complex> circle(double r, int count = 64) {
  std::vector<Complex> pts;
  for (int i = 0; i < count; ++i) pts.push_back(std::polar(r, 2 * std::numbers::pi * i / count));
  return pts;
}

}  // namespace

TEST_CASE("evaluate examples") {
  CHECK(eval1(make_series(1, 1, 2, {{0, {2}, 1.0}}), {2.0}) == Complex(4.0));
  CHECK(eval1(make_series(2, 1, 2, {{0, {1, 1}, 3.0}}), {1.0, 2.0}) == Complex(6.0));
  const auto e = make_series(1, 1, 2, {{0, {0}, 1.0}, {0, {1}, 1.0}, {0, {2}, 0.5}});
  CHECK(eval1(e, {1.0}) == Complex(2.5));
  CHECK_THROWS_AS(e.evaluate(Vector{1.0, 2.0}), dill::Error);
}

TEST_CASE("evaluate agrees with the naive polynomial") {
  testing_support::Gen gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = gen.range(1, 3), n = gen.range(1, 2);
    const auto f = gen.series(m, n, static_cast<unsigned>(gen.range(0, 5)));
    const Vector x = gen.point(m, 1.0);
    const Vector y = f.evaluate(x);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(std::abs(y[j] - testing_support::eval(testing_support::poly_from(f, j), x)) < 1e-12);
    }
  }
}

TEST_CASE("homogeneous part examples") {
  const auto f = make_series(1, 1, 2, {{0, {0}, 1.0}, {0, {1}, 1.0}, {0, {2}, 1.0}});
  CHECK(f.homogeneous_part(1) == make_series(1, 1, 2, {{0, {1}, 1.0}}));
  CHECK(is_zero(make_series(1, 1, 3, {{0, {1}, 1.0}}).homogeneous_part(2)));
  const auto g = make_series(2, 1, 3, {{0, {2, 0}, 1.0}, {0, {1, 1}, 1.0}, {0, {0, 3}, 1.0}});
  CHECK(g.homogeneous_part(2) == make_series(2, 1, 3, {{0, {2, 0}, 1.0}, {0, {1, 1}, 1.0}}));
  CHECK_THROWS_AS(g.homogeneous_part(4), dill::Error);
}

TEST_CASE("pointwise product examples") {
  const auto x2 = make_series(1, 1, 2, {{0, {1}, 1.0}});
  CHECK(dill::pointwise_multiply(x2, x2) == make_series(1, 1, 2, {{0, {2}, 1.0}}));
  const auto x1 = make_series(1, 1, 1, {{0, {1}, 1.0}});
  CHECK(is_zero(dill::pointwise_multiply(x1, x1)));
  const auto p = make_series(1, 1, 2, {{0, {0}, 1.0}, {0, {1}, 1.0}});
  CHECK(dill::pointwise_multiply(p, p) == make_series(1, 1, 2, {{0, {0}, 1.0}, {0, {1}, 2.0}, {0, {2}, 1.0}}));
}

TEST_CASE("pointwise product agrees with the naive product") {
  testing_support::Gen gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = gen.range(1, 3);
    const unsigned d = static_cast<unsigned>(gen.range(0, 5));
    const auto f = gen.series(m, 1, d), g = gen.series(m, 1, d);
    const auto oracle = testing_support::mul(testing_support::poly_from(f, 0), testing_support::poly_from(g, 0), d);
    CHECK(testing_support::gap(dill::pointwise_multiply(f, g), 0, oracle) < 1e-14);
  }
}

TEST_CASE("adding the negation gives zero") {
  testing_support::Gen gen(6);
  const auto f = gen.series(2, 2, 4);
  CHECK(is_zero(dill::add(f, dill::scale(f, -1.0))));
  CHECK(is_zero(dill::subtract(f, f)));
  CHECK_THROWS_AS(dill::add(f, gen.series(1, 2, 4)), dill::Error);
}

TEST_CASE("partial derivative examples") {
  const auto x2 = make_series(1, 1, 2, {{0, {2}, 1.0}});
  CHECK(x2.partial_derivative(0) == make_series(1, 1, 1, {{0, {1}, 2.0}}));
  const auto x = make_series(2, 1, 1, {{0, {1, 0}, 1.0}});
  CHECK(is_zero(x.partial_derivative(1)));
  const auto f = make_series(2, 1, 3, {{0, {2, 1}, 1.0}, {0, {0, 3}, 1.0}});
  CHECK(f.partial_derivative(0) == make_series(2, 1, 2, {{0, {1, 1}, 2.0}}));
  CHECK_THROWS_AS(f.partial_derivative(2), dill::Error);
}

TEST_CASE("directional derivative examples") {
  const auto x2 = make_series(1, 1, 2, {{0, {2}, 1.0}});
  CHECK(x2.directional_derivative(Vector{1.0}, Vector{1.0}).at(0) == Complex(2.0));
  const auto x3 = make_series(1, 1, 3, {{0, {3}, 1.0}});
  CHECK(x3.directional_derivative(Vector{2.0}, Vector{1.0}).at(0) == Complex(12.0));

  testing_support::Gen gen(8);
  Vector a(6);
  for (auto& z : a) z = gen.disk();
  const auto lin = TruncatedSeries::linear(2, 3, a, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector x = gen.point(3, 1), v = gen.point(3, 1);
    const Vector d = lin.directional_derivative(x, v);
    for (std::size_t j = 0; j < 2; ++j) {
      Complex expect = 0;
      for (std::size_t i = 0; i < 3; ++i) expect += a[j * 3 + i] * v[i];
      CHECK(std::abs(d[j] - expect) < 1e-14);
    }
  }
}

TEST_CASE("property: reconstruction from homogeneous parts") {
  testing_support::Gen gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = gen.series(gen.range(1, 3), gen.range(1, 3), static_cast<unsigned>(gen.range(0, 6)));
    TruncatedSeries sum(f.domain_dim(), f.codomain_dim(), f.degree());
    for (unsigned k = 0; k <= f.degree(); ++k) sum = dill::add(sum, f.homogeneous_part(k));
    CHECK(dill::max_coeff_difference(sum, f) == 0.0);
  }
}

TEST_CASE("property: homogeneous parts scale with degree") {
  testing_support::Gen gen(22);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = gen.range(1, 3);
    const auto f = gen.series(m, 2, 6);
    const unsigned k = static_cast<unsigned>(gen.range(0, 6));
    const auto fk = f.homogeneous_part(k);
    const Vector x = gen.point(m, 1);
    const Complex lambda = gen.disk(2.0);
    Vector lx = x;
    for (auto& z : lx) z *= lambda;
    const Vector lhs = fk.evaluate(lx);
    Vector rhs = fk.evaluate(x);
    for (auto& z : rhs) z *= std::pow(lambda, static_cast<int>(k));
    CHECK(testing_support::rel_gap(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("property: directional derivative matches central differences") {
  testing_support::Gen gen(23);
  const double t = 1e-5;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = gen.range(1, 3), n = gen.range(1, 2);
    TruncatedSeries f(m, n, static_cast<unsigned>(gen.range(1, 4)), true);
    for (Complex& c : f.coefficients()) c = gen.disk();
    const Vector x = gen.point(m, 1), v = gen.point(m, 1);
    Vector xp = x, xm = x;
    for (std::size_t i = 0; i < m; ++i) {
      xp[i] += t * v[i];
      xm[i] -= t * v[i];
    }
    const Vector fp = f.evaluate(xp), fm = f.evaluate(xm);
    Vector fd(n);
    for (std::size_t j = 0; j < n; ++j) fd[j] = (fp[j] - fm[j]) / (2 * t);
    CHECK(testing_support::rel_gap(f.directional_derivative(x, v), fd) < 1e-6);
  }
}

TEST_CASE("property: sampled Cauchy inequality") {
  testing_support::Gen gen(24);
  for (int trial = 0; trial < 100; ++trial) {
    TruncatedSeries f(1, 1, static_cast<unsigned>(gen.range(0, 8)));
    for (Complex& c : f.coefficients()) c = gen.disk();
    for (double r : {0.5, 1.0}) {
      const auto pts = circle(r);
      double bound = 0;
      for (Complex z : pts) bound = std::max(bound, std::abs(f.evaluate(Vector{z})[0]));
      for (unsigned k = 0; k <= f.degree(); ++k) {
        const auto fk = f.homogeneous_part(k);
        double top = 0;
        for (Complex z : pts) top = std::max(top, std::abs(fk.evaluate(Vector{z})[0]));
        CHECK(top <= bound + 1e-9);
      }
    }
  }
}

TEST_CASE("property: partial sums approach the full sum geometrically") {
  testing_support::Gen gen(25);
  for (int trial = 0; trial < 60; ++trial) {
    TruncatedSeries f(1, 1, 8);
    for (Complex& c : f.coefficients()) c = gen.disk();
    const Complex x = gen.disk(0.25);
    // M bounds |f| on the circle of radius 2|x|; Cauchy then gives
    // |f_k(x)| <= M 2^-k and the tail after N is at most M 2^-N.
    double m_bound = 0;
    for (Complex z : circle(2 * std::abs(x), 256)) m_bound = std::max(m_bound, std::abs(f.evaluate(Vector{z})[0]));
    const Complex full = f.evaluate(Vector{x})[0];
    for (unsigned N = 0; N <= 8; ++N) {
      const Complex partial = f.truncate(N).evaluate(Vector{x})[0];
      CHECK(std::abs(full - partial) <= m_bound * std::ldexp(1.0, -static_cast<int>(N)) + 1e-12);
    }
  }
}

TEST_CASE("degree changes respect the polynomial flag") {
  const auto f = make_series(1, 1, 2, {{0, {2}, 1.0}});
  CHECK_THROWS_AS(f.with_degree(3), dill::Error);
  auto p = f;
  p.set_polynomial(true);
  const auto q = p.with_degree(4);
  CHECK(q.degree() == 4);
  CHECK(q.is_polynomial());
  CHECK(q.coeff(0, MultiIndex{2}) == Complex(1.0));
  CHECK_FALSE(p.truncate(1).is_polynomial());
  CHECK_THROWS_AS(f.truncate(3), dill::Error);
}

TEST_CASE("sum of a polynomial and a truncation") {
  auto p = make_series(1, 1, 1, {{0, {1}, 1.0}}, true);
  const auto f = make_series(1, 1, 3, {{0, {3}, 1.0}});
  const auto s = dill::add(p, f);
  CHECK(s.degree() == 1);
  CHECK_FALSE(s.is_polynomial());
  p = make_series(1, 1, 3, {{0, {3}, 2.0}}, true);
  const auto q = dill::add(make_series(1, 1, 1, {{0, {1}, 1.0}}, true), p);
  CHECK(q.degree() == 3);
  CHECK(q.is_polynomial());
}

TEST_CASE("identity, constant and linear constructors") {
  const auto id = TruncatedSeries::identity(2, 3);
  const Vector x{Complex(1, 2), Complex(-3, 0.5)};
  CHECK(id.evaluate(x) == x);
  const auto c = TruncatedSeries::constant(2, Vector{Complex(4, 1)}, 3);
  CHECK(c.evaluate(x).at(0) == Complex(4, 1));
  CHECK(c.has_zero_constant_term() == false);
  CHECK_THROWS_AS(TruncatedSeries::linear(2, 2, Vector{1.0}, 1), dill::Error);
  CHECK_THROWS_AS(TruncatedSeries(0, 1, 1), dill::Error);
}
