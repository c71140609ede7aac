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

#include "dill/error.hpp"
#include "dill/multilinear.hpp"
#include "support.hpp"

using dill::Complex;
using dill::MultiIndex;
using dill::SymmetricMultilinear;
using dill::TruncatedSeries;
using dill::Vector;
using testing_support::make_series;

namespace {

Complex apply1(const SymmetricMultilinear& t, std::vector<Vector> args) { return t.apply(args).at(0); }

// 1/(k! 2^k) sum over signs e of e_1...e_k f(sum e_i x_i): a second,
// sign-based polarisation used only as an oracle.
Vector sign_polarization(const TruncatedSeries& fk, const std::vector<Vector>& xs) {
  const std::size_t k = xs.size(), m = fk.domain_dim();
  Vector acc(fk.codomain_dim());
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Vector p(m);
    double sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const double e = (mask >> i & 1) ? -1.0 : 1.0;
      sign *= e;
      for (std::size_t c = 0; c < m; ++c) p[c] += e * xs[i][c];
    }
    const Vector y = fk.evaluate(p);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += sign * y[j];
  }
  const double norm = static_cast<double>(dill::factorial(static_cast<unsigned>(k))) * std::ldexp(1.0, static_cast<int>(k));
  for (auto& z : acc) z /= norm;
  return acc;
}

}  // namespace

TEST_CASE("from_monomial examples") {
  const auto xy = dill::from_monomial(make_series(2, 1, 2, {{0, {1, 1}, 1.0}}), 2);
  const Complex a(1, 2), b(-1, 0.5), c(3, -1), d(0.25, 4);
  CHECK(std::abs(apply1(xy, {{a, b}, {c, d}}) - (a * d + b * c) / 2.0) < 1e-15);

  const auto sq = dill::from_monomial(make_series(1, 1, 2, {{0, {2}, 1.0}}), 2);
  CHECK(std::abs(apply1(sq, {{a}, {c}}) - a * c) < 1e-15);

  const auto x2 = dill::from_monomial(make_series(2, 1, 2, {{0, {2, 0}, 1.0}}), 2);
  CHECK(std::abs(apply1(x2, {{a, b}, {c, d}}) - a * c) < 1e-15);
}

TEST_CASE("polarization examples") {
  testing_support::Gen gen(31);
  const auto f2 = gen.homogeneous(2, 1, 2);
  const Vector x1 = gen.point(2, 1), x2 = gen.point(2, 1);
  Vector s(2);
  for (std::size_t i = 0; i < 2; ++i) s[i] = x1[i] + x2[i];
  const Complex half = 0.5 * (f2.evaluate(s)[0] - f2.evaluate(x1)[0] - f2.evaluate(x2)[0]);
  CHECK(std::abs(apply1(dill::polarize(f2, 2), {x1, x2}) - half) < 1e-12);

  const auto f1 = gen.homogeneous(3, 2, 1);
  const Vector v = gen.point(3, 1);
  CHECK(testing_support::max_abs_diff(dill::polarize(f1, 1).apply(std::vector<Vector>{v}), f1.evaluate(v)) < 1e-15);

  const auto cube = make_series(1, 1, 3, {{0, {3}, 1.0}}, true);
  CHECK(std::abs(apply1(dill::polarize(cube, 3), {{1.0}, {1.0}, {1.0}}) - Complex(1.0)) < 1e-12);
}

TEST_CASE("apply examples") {
  const auto xy = dill::from_monomial(make_series(2, 1, 2, {{0, {1, 1}, 1.0}}), 2);
  CHECK(apply1(xy, {{1.0, 0.0}, {0.0, 1.0}}) == Complex(0.5));
  CHECK(apply1(xy, {{0.0, 0.0}, {3.0, 7.0}}) == Complex(0.0));
  CHECK_THROWS_AS(xy.apply(std::vector<Vector>{{1.0, 0.0}}), dill::Error);
}

TEST_CASE("property: polarization agrees with the coefficient formula and the sign formula") {
  testing_support::Gen gen(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = gen.range(1, 3), n = gen.range(1, 2);
    const unsigned k = static_cast<unsigned>(gen.range(1, 4));
    const auto fk = gen.homogeneous(m, n, k);
    const auto p = dill::polarize(fk, k);
    const auto q = dill::from_monomial(fk, k);
    CHECK(dill::max_entry_difference(p, q) < 1e-9);
    std::vector<Vector> xs;
    for (unsigned i = 0; i < k; ++i) xs.push_back(gen.point(m, 1));
    CHECK(testing_support::max_abs_diff(q.apply(xs), sign_polarization(fk, xs)) < 1e-12);
  }
}

TEST_CASE("property: apply is symmetric") {
  testing_support::Gen gen(33);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = gen.range(1, 3);
    const unsigned k = static_cast<unsigned>(gen.range(2, 4));
    const auto t = dill::from_monomial(gen.homogeneous(m, 2, k), k);
    std::vector<Vector> xs;
    for (unsigned i = 0; i < k; ++i) xs.push_back(gen.point(m, 1));
    const Vector base = t.apply(xs);
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<Vector> ys;
      for (std::size_t i : perm) ys.push_back(xs[i]);
      CHECK(testing_support::max_abs_diff(t.apply(ys), base) < 1e-12);
    }
  }
}

TEST_CASE("property: apply is linear in each slot") {
  testing_support::Gen gen(34);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = gen.range(1, 3);
    const unsigned k = static_cast<unsigned>(gen.range(1, 4));
    const auto t = dill::from_monomial(gen.homogeneous(m, 2, k), k);
    std::vector<Vector> xs;
    for (unsigned i = 0; i < k; ++i) xs.push_back(gen.point(m, 1));
    const std::size_t slot = gen.below(k);
    const Vector u = gen.point(m, 1), v = gen.point(m, 1);
    const Complex a = gen.disk(), b = gen.disk();
    Vector mix(m);
    for (std::size_t i = 0; i < m; ++i) mix[i] = a * u[i] + b * v[i];
    auto with = [&](const Vector& w) {
      auto ys = xs;
      ys[slot] = w;
      return t.apply(ys);
    };
    const Vector lhs = with(mix), tu = with(u), tv = with(v);
    Vector rhs(lhs.size());
    for (std::size_t j = 0; j < rhs.size(); ++j) rhs[j] = a * tu[j] + b * tv[j];
    CHECK(testing_support::max_abs_diff(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("property: diagonal recovers the monomial") {
  testing_support::Gen gen(35);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = gen.range(1, 3);
    const unsigned k = static_cast<unsigned>(gen.range(1, 4));
    const auto fk = gen.homogeneous(m, 2, k);
    const auto t = dill::from_monomial(fk, k);
    CHECK(dill::max_coeff_difference(t.to_monomial(k), fk) < 1e-12);
    const Vector x = gen.point(m, 1);
    CHECK(testing_support::max_abs_diff(t.apply(std::vector<Vector>(k, x)), fk.evaluate(x)) < 1e-12);
  }
}
