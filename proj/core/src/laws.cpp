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


#include "dill/laws.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <numbers>
#include <set>

#include "dill/calculus.hpp"
#include "dill/error.hpp"
#include "dill/exponential.hpp"
#include "dill/multiindex.hpp"
#include "dill/multilinear.hpp"
#include "dill/sampling.hpp"
#include "dill/series.hpp"

namespace dill {

namespace {

// Largest degree for laws that materialise four-fold tensor bases.
constexpr unsigned kTensorLawMaxDegree = 5;
constexpr unsigned kCauchySamples = 64;

struct Ctx {
  const LawConfig& cfg;
  Rng rng;
  LawParams params;

  // Declares the sizes this law runs at and returns them.
  void cap(std::size_t dim, unsigned degree) {
    params.max_dim = dim;
    params.max_degree = degree;
  }
  std::size_t dim() { return uniform_index(rng, 1, params.max_dim); }
  unsigned deg(unsigned lo = 1) { return static_cast<unsigned>(uniform_index(rng, lo, params.max_degree)); }
  unsigned samples() const { return params.samples; }

  TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) const {
    TruncatedSeries h = dill::compose(f, g);
    if (cfg.compose_perturbation != 0.0 && h.degree() >= 1) {
      h.add_to_coeff(0, MultiIndex::unit(h.domain_dim(), 0), cfg.compose_perturbation);
    }
    return h;
  }
};

std::size_t cfg_dim(const Ctx& c, std::size_t cap) { return std::min(c.cfg.max_dim, cap); }
unsigned cfg_deg(const Ctx& c, unsigned cap) { return std::min(c.cfg.max_degree, cap); }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double rel(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) return INFINITY;
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, rel(a[i], b[i]));
  return e;
}

double rel(const Distribution& a, const Distribution& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) return INFINITY;
  return rel(a.coefficients(), b.coefficients());
}

double rel_series(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.domain_dim() != b.domain_dim() || a.codomain_dim() != b.codomain_dim() || a.degree() != b.degree()) {
    return INFINITY;
  }
  return rel(a.coefficients(), b.coefficients());
}

double identity_gap(const LinearOperator& a) {
  if (a.rows() != a.cols()) return INFINITY;
  double e = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) e = std::max(e, std::abs(a.at(r, c) - (r == c ? 1.0 : 0.0)));
  }
  return e;
}

// Coordinates of d_1 (x) ... (x) d_k in the jointly truncated tensor basis.
Vector tensor_vector(std::span<const Distribution> ds, unsigned degree) {
  std::vector<std::size_t> dims;
  for (const auto& d : ds) dims.push_back(d.dim());
  const auto tb = TensorBasis::get(dims, degree);
  Vector v(tb->size());
  for (std::size_t t = 0; t < tb->size(); ++t) {
    Complex p = 1.0;
    for (std::size_t i = 0; i < ds.size(); ++i) p *= ds[i].coeff((*tb)[t][i]);
    v[t] = p;
  }
  return v;
}

Vector concat(std::span<const Complex> a, std::span<const Complex> b) {
  Vector v(a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

// ---- multiindex --------------------------------------------------------

double law_enumerate_count(Ctx& c) {
  c.cap(4, 8);
  double bad = 0;
  for (std::size_t d = 1; d <= 4; ++d) {
    for (unsigned D = 0; D <= 8; ++D) {
      const auto v = enumerate(d, D);
      const std::set<MultiIndex> s(v.begin(), v.end());
      if (v.size() != binomial(d + D, D) || s.size() != v.size()) bad += 1;
    }
  }
  return bad;
}

double law_multinomial_factorial(Ctx& c) {
  c.cap(4, 8);
  double bad = 0;
  for (std::size_t d = 1; d <= 4; ++d) {
    for (const auto& a : enumerate(d, 8)) {
      if (multinomial(a) * factorial_product(a) != factorial(a.degree())) bad += 1;
    }
  }
  return bad;
}

double law_binom_symmetry(Ctx& c) {
  c.cap(3, 4);
  double bad = 0;
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto v = enumerate(d, 4);
    for (const auto& a : v) {
      for (const auto& b : v) {
        if (binom_componentwise(a, b) != binom_componentwise(b, a)) bad += 1;
      }
    }
  }
  return bad;
}

double law_composition_count(Ctx& c) {
  c.cap(6, 6);
  double bad = 0;
  for (unsigned m = 0; m <= 6; ++m) {
    for (unsigned n = 1; n <= 6; ++n) {
      if (weak_compositions(m, n).size() != binomial(m + n - 1, m)) bad += 1;
    }
  }
  return bad;
}

// ---- series ------------------------------------------------------------

double law_homogeneous_reconstruction(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const TruncatedSeries f = random_series(c.rng, c.dim(), c.dim(), c.deg(0));
    TruncatedSeries sum(f.domain_dim(), f.codomain_dim(), f.degree());
    for (unsigned k = 0; k <= f.degree(); ++k) sum = add(sum, f.homogeneous_part(k));
    e = std::max(e, max_coeff_difference(sum, f));
  }
  return e;
}

double law_homogeneity_scaling(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const TruncatedSeries f = random_series(c.rng, c.dim(), c.dim(), c.deg(0));
    const unsigned k = static_cast<unsigned>(uniform_index(c.rng, 0, f.degree()));
    const TruncatedSeries fk = f.homogeneous_part(k);
    const Complex lambda = random_disk(c.rng);
    const Vector x = random_vector(c.rng, f.domain_dim(), 1.0);
    Vector lx = x;
    for (auto& v : lx) v *= lambda;
    Vector rhs = fk.evaluate(x);
    for (auto& v : rhs) v *= std::pow(lambda, static_cast<int>(k));
    e = std::max(e, rel(fk.evaluate(lx), rhs));
  }
  return e;
}

double law_directional_derivative_fd(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, 4));
  constexpr double t = 1e-5;
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const TruncatedSeries f = random_polynomial(c.rng, c.dim(), c.dim(), c.deg());
    const Vector x = random_vector(c.rng, f.domain_dim(), 1.0);
    const Vector v = random_vector(c.rng, f.domain_dim(), 1.0);
    Vector xp = x, xm = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
      xp[i] += t * v[i];
      xm[i] -= t * v[i];
    }
    const Vector fp = f.evaluate(xp), fm = f.evaluate(xm);
    const Vector dd = f.directional_derivative(x, v);
    Vector fd(dd.size());
    for (std::size_t j = 0; j < fd.size(); ++j) fd[j] = (fp[j] - fm[j]) / (2.0 * t);
    e = std::max(e, rel(fd, dd));
  }
  return e;
}

std::vector<Complex> circle(double r, unsigned count) {
  std::vector<Complex> z(count);
  for (unsigned k = 0; k < count; ++k) z[k] = std::polar(r, 2.0 * std::numbers::pi * k / count);
  return z;
}

double law_cauchy_sampled(Ctx& c) {
  c.cap(1, cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const TruncatedSeries f = random_series(c.rng, 1, 1, c.deg());
    for (double r : {0.5, 1.0}) {
      const auto zs = circle(r, kCauchySamples);
      double big = 0.0;
      for (Complex z : zs) big = std::max(big, std::abs(f.evaluate(std::span(&z, 1))[0]));
      for (unsigned k = 0; k <= f.degree(); ++k) {
        const TruncatedSeries fk = f.homogeneous_part(k);
        for (Complex z : zs) e = std::max(e, std::abs(fk.evaluate(std::span(&z, 1))[0]) - big);
      }
    }
  }
  return std::max(e, 0.0);
}

double law_partial_sums_bound(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const TruncatedSeries f = random_series(c.rng, c.dim(), 1, c.deg());
    const Vector x = random_vector(c.rng, f.domain_dim(), 0.5);
    // Bound M for |f| on the complex line through 2x: |f_n(x)| <= M / 2^n.
    double big = 0.0;
    for (Complex z : circle(2.0, kCauchySamples)) {
      Vector zx = x;
      for (auto& v : zx) v *= z;
      big = std::max(big, std::abs(f.evaluate(zx)[0]));
    }
    const Complex fx = f.evaluate(x)[0];
    for (unsigned n = 0; n <= f.degree(); ++n) {
      const double gap = std::abs(fx - f.truncate(n).evaluate(x)[0]);
      e = std::max(e, gap - big * std::ldexp(1.0, -static_cast<int>(n)));
    }
  }
  return std::max(e, 0.0);
}

// ---- multilinear -------------------------------------------------------

double law_polarization_fidelity(Ctx& c) {
  c.cap(cfg_dim(c, 3), cfg_deg(c, 4));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const unsigned k = c.deg(0);
    const TruncatedSeries fk = random_homogeneous(c.rng, c.dim(), c.dim(), k, k);
    e = std::max(e, max_entry_difference(polarize(fk, k), from_monomial(fk, k)));
  }
  return e;
}

double law_multilinear_symmetry(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const unsigned k = c.deg();
    const auto t = from_monomial(random_homogeneous(c.rng, c.dim(), c.dim(), k, k), k);
    std::vector<Vector> args;
    for (unsigned i = 0; i < k; ++i) args.push_back(random_vector(c.rng, t.domain_dim(), 1.0));
    std::vector<Vector> perm = args;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[uniform_index(c.rng, 0, i - 1)]);
    e = std::max(e, rel(t.apply(perm), t.apply(args)));
  }
  return e;
}

double law_multilinear_linearity(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const unsigned k = c.deg();
    const auto t = from_monomial(random_homogeneous(c.rng, c.dim(), c.dim(), k, k), k);
    std::vector<Vector> args;
    for (unsigned i = 0; i < k; ++i) args.push_back(random_vector(c.rng, t.domain_dim(), 1.0));
    const std::size_t slot = uniform_index(c.rng, 0, k - 1);
    const Complex a = random_disk(c.rng), b = random_disk(c.rng);
    const Vector u = random_vector(c.rng, t.domain_dim(), 1.0), v = random_vector(c.rng, t.domain_dim(), 1.0);
    Vector mix(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) mix[i] = a * u[i] + b * v[i];
    auto with = [&](const Vector& w) {
      auto xs = args;
      xs[slot] = w;
      return t.apply(xs);
    };
    const Vector lhs = with(mix), tu = with(u), tv = with(v);
    Vector rhs(lhs.size());
    for (std::size_t j = 0; j < rhs.size(); ++j) rhs[j] = a * tu[j] + b * tv[j];
    e = std::max(e, rel(lhs, rhs));
  }
  return e;
}

double law_multilinear_roundtrip(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const unsigned D = c.deg();
    const unsigned k = static_cast<unsigned>(uniform_index(c.rng, 0, D));
    const TruncatedSeries fk = random_homogeneous(c.rng, c.dim(), c.dim(), k, D);
    const auto t = from_monomial(fk, k);
    e = std::max(e, max_coeff_difference(t.to_monomial(D), fk));
    const Vector x = random_vector(c.rng, fk.domain_dim(), 1.0);
    const std::vector<Vector> diag(k, x);
    e = std::max(e, rel(t.apply(diag), fk.evaluate(x)));
  }
  return e;
}

// ---- calculus ----------------------------------------------------------

double law_compose_oracle(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t n = c.dim(), m = c.dim(), p = c.dim();
    const TruncatedSeries f = random_series(c.rng, m, n, c.deg());
    const TruncatedSeries g = random_series(c.rng, p, m, c.deg(), true);
    e = std::max(e, rel_series(c.compose(f, g), compose_naive(f, g)));
  }
  return e;
}

double law_compose_associativity(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t n = c.dim(), m = c.dim(), p = c.dim(), q = c.dim();
    const unsigned D = c.deg();
    const TruncatedSeries f = random_series(c.rng, m, n, D, true);
    const TruncatedSeries g = random_series(c.rng, p, m, D, true);
    const TruncatedSeries h = random_series(c.rng, q, p, D, true);
    e = std::max(e, rel_series(c.compose(f, c.compose(g, h)), c.compose(c.compose(f, g), h)));
  }
  return e;
}

double law_compose_identity(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const TruncatedSeries f = random_series(c.rng, c.dim(), c.dim(), c.deg());
    const auto left = TruncatedSeries::identity(f.codomain_dim(), f.degree());
    const auto right = TruncatedSeries::identity(f.domain_dim(), f.degree());
    e = std::max({e, max_coeff_difference(c.compose(left, f), f), max_coeff_difference(c.compose(f, right), f)});
  }
  return e;
}

double law_compose_polynomial_constant(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t n = c.dim(), m = c.dim(), p = c.dim();
    const TruncatedSeries f = random_polynomial(c.rng, m, n, c.deg());
    const TruncatedSeries g = random_series(c.rng, p, m, c.deg());
    e = std::max(e, rel_series(c.compose(f, g), compose_naive(f, g)));
  }
  return e;
}

std::pair<std::size_t, std::size_t> split_dims(Ctx& c) {
  const std::size_t total = uniform_index(c.rng, 2, c.params.max_dim);
  const std::size_t split = uniform_index(c.rng, 1, total - 1);
  return {total, split};
}

double law_curry_uncurry(Ctx& c) {
  c.cap(4, cfg_deg(c, 5));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const auto [m, split] = split_dims(c);
    const TruncatedSeries f = random_series(c.rng, m, c.dim(), c.deg(0));
    e = std::max(e, max_coeff_difference(uncurry(curry(f, split)), f));
  }
  return e;
}

double law_uncurry_curry(Ctx& c) {
  c.cap(4, cfg_deg(c, 5));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const auto [m, split] = split_dims(c);
    const std::size_t n = uniform_index(c.rng, 1, 3);
    const unsigned D = c.deg(0);
    CurriedSeries nest(split, m - split, n, D);
    for (std::size_t a = 0; a < nest.outer_basis().size(); ++a) {
      TruncatedSeries& inner = nest.inner(a);
      for (auto& x : inner.coefficients()) x = random_disk(c.rng);
    }
    e = std::max(e, max_nest_difference(curry(uncurry(nest), split), nest));
  }
  return e;
}

double law_curry_multilinear(Ctx& c) {
  c.cap(4, cfg_deg(c, 5));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const auto [m, split] = split_dims(c);
    const TruncatedSeries f = random_series(c.rng, m, c.dim() % 3 + 1, c.deg(0));
    e = std::max(e, max_nest_difference(curry_via_multilinear(f, split), curry(f, split)));
  }
  return e;
}

double law_curry_naturality(Ctx& c) {
  c.cap(4, cfg_deg(c, 5));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const auto [m, split] = split_dims(c);
    const TruncatedSeries f = random_series(c.rng, m, c.dim() % 3 + 1, c.deg(0));
    const Vector x = random_vector(c.rng, split, 0.5), y = random_vector(c.rng, m - split, 0.5);
    const Vector nested = curry(f, split).evaluate_outer(x).evaluate(y);
    e = std::max(e, rel(nested, f.evaluate(concat(x, y))));
  }
  return e;
}

double law_chain_rule(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), 6);
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t n = c.dim(), m = c.dim(), p = c.dim();
    const unsigned a = static_cast<unsigned>(uniform_index(c.rng, 1, 3));
    const unsigned b = static_cast<unsigned>(uniform_index(c.rng, 1, 2));
    const TruncatedSeries f = random_polynomial(c.rng, m, n, a);
    // Degree a*b holds the whole composite, so the identity is exact.
    const TruncatedSeries g = random_polynomial(c.rng, p, m, b, true).with_degree(a * b);
    const TruncatedSeries h = c.compose(f, g);
    const Vector x = random_vector(c.rng, p, 0.5);
    const Vector dh = derivative_series(h).evaluate(x);
    const Vector df = derivative_series(f).evaluate(g.evaluate(x));
    const Vector dg = derivative_series(g).evaluate(x);
    Vector prod(n * p);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t i = 0; i < m; ++i) prod[j * p + k] += df[j * m + i] * dg[i * p + k];
      }
    }
    e = std::max(e, rel(dh, prod));
  }
  return e;
}

// ---- exponential: distributions ----------------------------------------

double law_dirac_action(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const TruncatedSeries f = random_polynomial(c.rng, c.dim(), c.dim(), c.deg(0));
    const Vector x = random_vector(c.rng, f.domain_dim(), 1.0);
    e = std::max(e, rel(dirac(x, f.degree()).apply(f), f.evaluate(x)));
  }
  return e;
}

double law_theta_extraction(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const TruncatedSeries f = random_series(c.rng, c.dim(), c.dim(), c.deg(0));
    const unsigned n = static_cast<unsigned>(uniform_index(c.rng, 0, f.degree()));
    const Vector x = random_vector(c.rng, f.domain_dim(), 1.0);
    Vector rhs = f.homogeneous_part(n).evaluate(x);
    for (auto& v : rhs) v *= static_cast<double>(factorial(n));
    e = std::max(e, rel(theta(n, x, f.degree()).apply(f), rhs));
  }
  return e;
}

double law_theta_induction(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const unsigned D = c.deg(0);
    const unsigned n = static_cast<unsigned>(uniform_index(c.rng, 0, D));
    const Vector x = random_vector(c.rng, c.dim(), 1.0);
    e = std::max(e, rel(theta_inductive(n, x, D), theta(n, x, D)));
  }
  return e;
}

double law_delta_taylor(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const Vector x = random_vector(c.rng, c.dim(), 1.0);
    e = std::max(e, delta_taylor_error(x, c.deg(0)));
  }
  return e;
}

double law_deltas_span(Ctx& c) {
  c.cap(1, cfg_deg(c, 4));
  double e = 0.0;
  for (unsigned D = 0; D <= c.params.max_degree; ++D) {
    const std::size_t k = D + 1;
    const auto pts = circle(1.0, static_cast<unsigned>(k));
    Eigen::MatrixXcd V(k, k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t j = 0; j < k; ++j) V(a, j) = std::pow(pts[j], static_cast<int>(a));
    }
    const Eigen::MatrixXcd W = V.partialPivLu().solve(Eigen::MatrixXcd::Identity(k, k));
    for (std::size_t a = 0; a < k; ++a) {
      Distribution sum(1, D);
      for (std::size_t j = 0; j < k; ++j) sum = sum + dirac(std::span(&pts[j], 1), D).scaled(W(j, a));
      Distribution unit(1, D);
      unit.at(a) = 1.0;
      e = std::max(e, max_difference(sum, unit));
    }
  }
  return e;
}

double law_convolution_commutative(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t m = c.dim();
    const unsigned D = c.deg(0);
    const Distribution a = random_distribution(c.rng, m, D), b = random_distribution(c.rng, m, D);
    e = std::max(e, rel(convolve(a, b), convolve(b, a)));
  }
  return e;
}

double law_convolution_associative(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t m = c.dim();
    const unsigned D = c.deg(0);
    const Distribution a = random_distribution(c.rng, m, D), b = random_distribution(c.rng, m, D),
                       d = random_distribution(c.rng, m, D);
    e = std::max(e, rel(convolve(a, convolve(b, d)), convolve(convolve(a, b), d)));
  }
  return e;
}

double law_convolution_unit(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t m = c.dim();
    const unsigned D = c.deg(0);
    const Distribution d = random_distribution(c.rng, m, D);
    const Distribution unit(m, D, coweakening(m, D).apply(Vector{1.0}));
    e = std::max({e, max_difference(convolve(unit, d), d), max_difference(convolve(d, unit), d)});
  }
  return e;
}

double law_cocontraction_is_convolution(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (std::size_t m = 1; m <= c.params.max_dim; ++m) {
    for (unsigned D = 0; D <= c.params.max_degree; ++D) {
      const LinearOperator nabla = cocontraction(m, D);
      const auto tb = TensorBasis::get({m, m}, D);
      for (std::size_t t = 0; t < tb->size(); ++t) {
        Distribution a(m, D), b(m, D);
        a.set_coeff((*tb)[t][0], 1.0);
        b.set_coeff((*tb)[t][1], 1.0);
        Vector col(nabla.rows());
        for (std::size_t r = 0; r < col.size(); ++r) col[r] = nabla.at(r, t);
        e = std::max(e, rel(col, convolve(a, b).coefficients()));
      }
    }
  }
  return e;
}

double law_dirac_convolution(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t m = c.dim();
    const unsigned D = c.deg(0);
    const Vector x = random_vector(c.rng, m, 1.0), y = random_vector(c.rng, m, 1.0);
    Vector xy(m);
    for (std::size_t i = 0; i < m; ++i) xy[i] = x[i] + y[i];
    e = std::max(e, rel(convolve(dirac(x, D), dirac(y, D)), dirac(xy, D)));
  }
  return e;
}

// (D1 * D2) f against D1(x -> D2(y -> f(x + y))) built from compose and curry.
double law_convolution_nested(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t m = c.dim();
    const unsigned D = c.deg(0);
    const TruncatedSeries f = random_polynomial(c.rng, m, c.dim(), D);
    const Distribution d1 = random_distribution(c.rng, m, D), d2 = random_distribution(c.rng, m, D);
    Vector sum_matrix(m * 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      sum_matrix[i * 2 * m + i] = 1.0;
      sum_matrix[i * 2 * m + m + i] = 1.0;
    }
    TruncatedSeries add_map = TruncatedSeries::linear(m, 2 * m, sum_matrix, std::max(D, 1u));
    add_map.set_polynomial(true);
    const CurriedSeries nest = curry(c.compose(f, add_map).with_degree(std::max(D, 1u)), m);
    TruncatedSeries outer(m, f.codomain_dim(), nest.degree());
    for (std::size_t a = 0; a < nest.outer_basis().size(); ++a) {
      TruncatedSeries inner = nest.inner(a);
      inner.set_polynomial(nest.is_polynomial());
      const Vector v = d2.apply(inner);
      for (std::size_t j = 0; j < v.size(); ++j) outer.at(j, a) = v[j];
    }
    outer.set_polynomial(nest.is_polynomial());
    e = std::max(e, rel(d1.apply(outer), convolve(d1, d2).apply(f)));
  }
  return e;
}

// ---- exponential: comonad ----------------------------------------------

template <typename Fn>
double over_rho_sizes(Ctx& c, Fn fn) {
  c.cap(cfg_dim(c, kRhoLawMaxDim), cfg_deg(c, kRhoLawMaxDegree));
  double e = 0.0;
  for (std::size_t m = 1; m <= c.params.max_dim; ++m) {
    for (unsigned D = 1; D <= c.params.max_degree; ++D) e = std::max(e, fn(m, D));
  }
  return e;
}

double law_comonad_counit_outer(Ctx& c) {
  return over_rho_sizes(c, [](std::size_t m, unsigned D) {
    const LinearOperator rho = comultiplication(m, D, D);
    return identity_gap(compose(counit(rho.target().dims[0], D), rho));
  });
}

double law_comonad_counit_inner(Ctx& c) {
  return over_rho_sizes(c, [](std::size_t m, unsigned D) {
    const LinearOperator rho = comultiplication(m, D, D);
    const LinearOperator bang_eps = bang_map(as_linear_series(counit(m, D), D), D);
    return identity_gap(compose(bang_eps, rho));
  });
}

// Compared on rows B of !!!E with sum_b B_b |b| <= D: the remaining rows
// correspond to terms the inner truncation of !!E has already discarded.
double law_comonad_coassociativity(Ctx& c) {
  return over_rho_sizes(c, [](std::size_t m, unsigned D) {
    const LinearOperator rho = comultiplication(m, D, D);
    const std::size_t n = rho.target().dims[0];
    const LinearOperator lhs = compose(comultiplication(n, D, D), rho);
    const LinearOperator rhs = compose(bang_map(as_linear_series(rho, D), D), rho);
    const auto mid = MonomialBasis::get(n, D);
    const auto top = MonomialBasis::get(mid->size(), D);
    double e = 0.0;
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
      const MultiIndex& big = (*top)[r];
      unsigned weight = 0;
      for (std::size_t b = 0; b < big.dim(); ++b) weight += big[b] * (*mid)[b].degree();
      if (weight > D) continue;
      for (std::size_t col = 0; col < lhs.cols(); ++col) e = std::max(e, std::abs(lhs.at(r, col) - rhs.at(r, col)));
    }
    return e;
  });
}

// ---- exponential: bialgebra --------------------------------------------

template <typename Fn>
double over_tensor_sizes(Ctx& c, Fn fn) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kTensorLawMaxDegree));
  double e = 0.0;
  for (std::size_t m = 1; m <= c.params.max_dim; ++m) {
    for (unsigned D = 0; D <= c.params.max_degree; ++D) e = std::max(e, fn(m, D));
  }
  return e;
}

LinearOperator id_bang(std::size_t m, unsigned D) { return LinearOperator::identity(Space::bang({m}, D)); }

LinearOperator tensor(std::initializer_list<LinearOperator> ops, unsigned D) {
  const std::vector<LinearOperator> v(ops);
  return tensor_product(v, D);
}

double law_contraction_coassociative(Ctx& c) {
  return over_tensor_sizes(c, [](std::size_t m, unsigned D) {
    const auto delta = contraction(m, D);
    const auto id = id_bang(m, D);
    return max_difference(compose(tensor({delta, id}, D), delta), compose(tensor({id, delta}, D), delta));
  });
}

double law_contraction_counit(Ctx& c) {
  return over_tensor_sizes(c, [](std::size_t m, unsigned D) {
    const auto delta = contraction(m, D);
    const auto id = id_bang(m, D);
    const auto e = weakening(m, D);
    return std::max(identity_gap(compose(tensor({e, id}, D), delta)), identity_gap(compose(tensor({id, e}, D), delta)));
  });
}

double law_contraction_cocommutative(Ctx& c) {
  return over_tensor_sizes(c, [](std::size_t m, unsigned D) {
    const auto delta = contraction(m, D);
    return max_difference(compose(swap_operator(m, m, D), delta), delta);
  });
}

double law_cocontraction_associative(Ctx& c) {
  return over_tensor_sizes(c, [](std::size_t m, unsigned D) {
    const auto nabla = cocontraction(m, D);
    const auto id = id_bang(m, D);
    return max_difference(compose(nabla, tensor({nabla, id}, D)), compose(nabla, tensor({id, nabla}, D)));
  });
}

double law_cocontraction_unit(Ctx& c) {
  return over_tensor_sizes(c, [](std::size_t m, unsigned D) {
    const auto nabla = cocontraction(m, D);
    const auto id = id_bang(m, D);
    const auto unit = coweakening(m, D);
    return std::max(identity_gap(compose(nabla, tensor({unit, id}, D))),
                    identity_gap(compose(nabla, tensor({id, unit}, D))));
  });
}

double law_bialgebra_compatibility(Ctx& c) {
  return over_tensor_sizes(c, [](std::size_t m, unsigned D) {
    const auto delta = contraction(m, D);
    const auto nabla = cocontraction(m, D);
    const LinearOperator lhs = compose(delta, nabla);
    const std::size_t middle_swap[4] = {0, 2, 1, 3};
    const LinearOperator split = permute_target_factors(tensor({delta, delta}, D), middle_swap);
    const LinearOperator rhs = compose(tensor({nabla, nabla}, D), split);
    return max_difference(lhs, rhs);
  });
}

double law_monoidal_bijection(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (std::size_t a = 1; a <= c.params.max_dim; ++a) {
    for (std::size_t b = 1; b <= c.params.max_dim; ++b) {
      for (unsigned D = 0; D <= c.params.max_degree; ++D) {
        const LinearOperator m2 = monoidal(a, b, D);
        if (m2.rows() != m2.cols()) return INFINITY;
        // A permutation matrix: a single 1 in every row and column.
        std::vector<int> row(m2.rows(), 0), col(m2.cols(), 0);
        for (std::size_t r = 0; r < m2.rows(); ++r) {
          for (std::size_t k = 0; k < m2.cols(); ++k) {
            const Complex v = m2.at(r, k);
            if (v == Complex{}) continue;
            if (v != Complex{1.0}) e = std::max(e, std::abs(v - 1.0));
            ++row[r];
            ++col[k];
          }
        }
        for (int x : row) e = std::max(e, std::abs(x - 1.0));
        for (int x : col) e = std::max(e, std::abs(x - 1.0));
        const LinearOperator inv = monoidal_inverse(a, b, D);
        e = std::max({e, identity_gap(compose(inv, m2)), identity_gap(compose(m2, inv))});
        // m2(delta_x (x) delta_y) = delta_(x,y)
        const Vector x = random_vector(c.rng, a, 1.0), y = random_vector(c.rng, b, 1.0);
        const Distribution ds[2] = {dirac(x, D), dirac(y, D)};
        e = std::max(e, rel(m2.apply(tensor_vector(ds, D)), dirac(concat(x, y), D).coefficients()));
      }
    }
  }
  return e;
}

// rho_{E x F} o m2 followed by !<!pi1, !pi2>, against m2_{!E,!F} o (rho (x) rho).
double law_monoidal_strength(Ctx& c) {
  c.cap(1, cfg_deg(c, kRhoLawMaxDegree));
  double e = 0.0;
  for (unsigned D = 1; D <= c.params.max_degree; ++D) {
    const LinearOperator rho = comultiplication(1, D, D);
    const std::size_t n = rho.target().dims[0];
    const LinearOperator rhs = compose(monoidal(n, n, D), tensor({rho, rho}, D));
    const LinearOperator rho_pair = comultiplication(2, D, D);
    const std::size_t big = rho_pair.target().dims[0];
    TruncatedSeries p1(2, 1, D, true), p2(2, 1, D, true);
    p1.set_coeff(0, MultiIndex{1, 0}, 1.0);
    p2.set_coeff(0, MultiIndex{0, 1}, 1.0);
    const LinearOperator b1 = bang_map(p1, D), b2 = bang_map(p2, D);
    LinearOperator pair(Space::vector(big), Space::vector(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < big; ++k) {
        pair.at(r, k) = b1.at(r, k);
        pair.at(n + r, k) = b2.at(r, k);
      }
    }
    const LinearOperator lhs =
        compose(bang_map(as_linear_series(pair, D), D), compose(rho_pair, monoidal(1, 1, D)));
    e = std::max(e, max_difference(lhs, rhs));
  }
  return e;
}

// ---- exponential: codereliction ----------------------------------------

double law_coder_counit(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (std::size_t m = 1; m <= c.params.max_dim; ++m) {
    for (unsigned D = 1; D <= c.params.max_degree; ++D) {
      e = std::max(e, identity_gap(compose(counit(m, D), codereliction_operator(m, D))));
      const Vector v = random_vector(c.rng, m, 1.0);
      e = std::max(e, rel(counit(m, D).apply(codereliction(v, D).coefficients()), v));
    }
  }
  return e;
}

// rho(coder v) = nabla(coder_{!E}(coder v) (x) rho(delta_0)).
double law_coder_rho_nabla(Ctx& c) {
  c.cap(1, cfg_deg(c, kRhoLawMaxDegree));
  double e = 0.0;
  for (unsigned D = 1; D <= c.params.max_degree; ++D) {
    for (unsigned s = 0; s < c.samples(); ++s) {
      const std::size_t m = 1;
      const LinearOperator rho = comultiplication(m, D, D);
      const std::size_t n = rho.target().dims[0];
      const Vector v = random_vector(c.rng, m, 1.0);
      const Distribution cv = codereliction(v, D);
      const Distribution lhs = apply(rho, cv);
      const Distribution lifted(n, D, codereliction_operator(n, D).apply(cv.coefficients()));
      const Distribution dug = apply(rho, dirac(Vector(m), D));
      const Distribution pair[2] = {lifted, dug};
      const Distribution rhs(n, D, cocontraction(n, D).apply(tensor_vector(pair, D)));
      e = std::max(e, rel(lhs, rhs));
    }
  }
  return e;
}

// phi o (coder (x) 1) = coder_{E (x) F} o (1 (x) eps_F) on E (x) !F, where
// phi(delta_x (x) delta_y) = delta_{x (x) y}.
double law_coder_strength(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (std::size_t a = 1; a <= c.params.max_dim; ++a) {
    for (std::size_t b = 1; b <= c.params.max_dim; ++b) {
      for (unsigned D = 1; D <= c.params.max_degree; ++D) {
        const auto fb = MonomialBasis::get(b, D - 1);
        const std::size_t kb = fb->size();
        const Space src = Space::vector(a * kb);
        const auto pairs = TensorBasis::get({a, b}, D);
        const auto prod = MonomialBasis::get(a * b, D);

        LinearOperator phi(Space::bang({a, b}, D), Space::bang({a * b}, D));
        for (std::size_t t = 0; t < pairs->size(); ++t) {
          const MultiIndex& alpha = (*pairs)[t][0];
          const MultiIndex& beta = (*pairs)[t][1];
          if (alpha.degree() != beta.degree()) continue;
          const unsigned k = alpha.degree();
          for (std::size_t g = prod->degree_begin(k); g < prod->degree_end(k); ++g) {
            const MultiIndex& gamma = (*prod)[g];
            bool ok = true;
            for (std::size_t i = 0; i < a && ok; ++i) {
              unsigned rs = 0;
              for (std::size_t j = 0; j < b; ++j) rs += gamma[i * b + j];
              ok = rs == alpha[i];
            }
            for (std::size_t j = 0; j < b && ok; ++j) {
              unsigned cs = 0;
              for (std::size_t i = 0; i < a; ++i) cs += gamma[i * b + j];
              ok = cs == beta[j];
            }
            if (ok) phi.at(g, t) = 1.0;
          }
        }
        LinearOperator coder_left(src, Space::bang({a, b}, D));
        LinearOperator eps_right(src, Space::vector(a * b));
        for (std::size_t i = 0; i < a; ++i) {
          for (std::size_t q = 0; q < kb; ++q) {
            const MultiIndex parts[2] = {MultiIndex::unit(a, i), (*fb)[q]};
            coder_left.at(pairs->index_of(parts), i * kb + q) = 1.0;
            const MultiIndex& beta = (*fb)[q];
            if (beta.degree() != 1) continue;
            std::size_t j = 0;
            while (beta[j] == 0) ++j;
            eps_right.at(i * b + j, i * kb + q) = 1.0;
          }
        }
        e = std::max(e, max_difference(compose(phi, coder_left), compose(codereliction_operator(a * b, D), eps_right)));
      }
    }
  }
  return e;
}

double law_coder_finite_difference(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  constexpr double t = 1e-6;
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t m = c.dim();
    const unsigned D = c.deg();
    const Vector v = random_vector(c.rng, m, 1.0);
    Vector tv = v;
    for (auto& x : tv) x *= t;
    const Distribution fd = (dirac(tv, D) + dirac(Vector(m), D).scaled(-1.0)).scaled(1.0 / t);
    e = std::max(e, max_difference(fd, codereliction(v, D)));
  }
  return e;
}

double law_coder_derivative(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const TruncatedSeries f = random_series(c.rng, c.dim(), c.dim(), c.deg());
    const Vector v = random_vector(c.rng, f.domain_dim(), 1.0);
    e = std::max(e, rel(codereliction(v, f.degree()).apply(f), f.directional_derivative(Vector(f.domain_dim()), v)));
  }
  return e;
}

// ---- exponential: functor and adjunction -------------------------------

double law_bang_identity(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (std::size_t m = 1; m <= c.params.max_dim; ++m) {
    for (unsigned D = 1; D <= c.params.max_degree; ++D) {
      e = std::max(e, identity_gap(bang_map(TruncatedSeries::identity(m, D), D)));
    }
  }
  return e;
}

double law_bang_functoriality(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t n = c.dim(), m = c.dim(), p = c.dim();
    const unsigned D = c.deg();
    const TruncatedSeries f = random_series(c.rng, m, n, D);
    const TruncatedSeries g = random_series(c.rng, p, m, D, true);
    e = std::max(e, max_difference(bang_map(c.compose(f, g), D), compose(bang_map(f, D), bang_map(g, D))));
  }
  return e;
}

double law_bang_dirac(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t m = c.dim(), n = c.dim();
    const unsigned D = c.deg();
    // Affine maps: every power f^beta has degree |beta| <= D, so no truncation.
    TruncatedSeries f = random_polynomial(c.rng, m, n, 1).with_degree(D);
    const Vector x = random_vector(c.rng, m, 1.0);
    e = std::max(e, rel(apply(bang_map(f, D), dirac(x, D)), dirac(f.evaluate(x), D)));
  }
  return e;
}

double law_adjunction_naturality(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t n = c.dim(), m = c.dim(), p = c.dim();
    const unsigned D = c.deg();
    const TruncatedSeries f = random_series(c.rng, m, n, D);
    const TruncatedSeries g = random_series(c.rng, p, m, D, true);
    e = std::max(e, max_difference(compose(hat(f), bang_map(g, D)), hat(c.compose(f, g))));
  }
  return e;
}

LinearOperator random_functional(Rng& rng, std::size_t m, std::size_t n, unsigned D) {
  LinearOperator g(Space::bang({m}, D), Space::vector(n));
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t k = 0; k < g.cols(); ++k) g.at(r, k) = random_disk(rng);
  }
  return g;
}

double law_hat_check_roundtrip(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const TruncatedSeries f = random_series(c.rng, c.dim(), c.dim(), c.deg(0));
    e = std::max(e, max_coeff_difference(check(hat(f)), f));
    const LinearOperator g = random_functional(c.rng, c.dim(), c.dim(), c.deg(0));
    e = std::max(e, max_difference(hat(check(g)), g));
  }
  return e;
}

// check(g) = sum_k g(theta_k) / k!, with theta_k built as a series in x by
// repeated convolution with theta_1 (coefficients multiplied as series).
double law_check_theta_series(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (unsigned s = 0; s < c.samples(); ++s) {
    const std::size_t m = c.dim(), n = c.dim();
    const unsigned D = c.deg(0);
    const LinearOperator g = random_functional(c.rng, m, n, D);
    const auto basis = MonomialBasis::get(m, D);
    using DistSeries = std::vector<TruncatedSeries>;
    const TruncatedSeries zero(m, 1, D);
    DistSeries theta1(basis->size(), zero), theta_k(basis->size(), zero);
    if (D >= 1) {
      for (std::size_t i = 0; i < m; ++i) {
        theta1[basis->index_of(MultiIndex::unit(m, i))].set_coeff(0, MultiIndex::unit(m, i), 1.0);
      }
    }
    theta_k[0].set_coeff(0, MultiIndex::zero(m), 1.0);
    TruncatedSeries sum(m, n, D);
    for (unsigned k = 0; k <= D; ++k) {
      if (k >= 1) {
        DistSeries next(basis->size(), zero);
        for (std::size_t gi = 0; gi < basis->size(); ++gi) {
          const MultiIndex& gamma = (*basis)[gi];
          for (std::size_t ai = 0; ai < basis->size(); ++ai) {
            const MultiIndex& alpha = (*basis)[ai];
            if (!alpha.divides(gamma)) continue;
            const MultiIndex beta = gamma - alpha;
            const double w = static_cast<double>(binom_componentwise(alpha, beta));
            next[gi] = add(next[gi], scale(pointwise_multiply(theta1[ai], theta_k[basis->index_of(beta)]), w));
          }
        }
        theta_k = std::move(next);
      }
      const double inv = 1.0 / static_cast<double>(factorial(k));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t gi = 0; gi < basis->size(); ++gi) {
          const Complex w = g.at(j, gi) * inv;
          if (w == Complex{}) continue;
          for (std::size_t a = 0; a < basis->size(); ++a) sum.at(j, a) += w * theta_k[gi].at(0, a);
        }
      }
    }
    e = std::max(e, rel_series(sum, check(g)));
  }
  return e;
}

double law_check_counit(Ctx& c) {
  c.cap(cfg_dim(c, kLawMaxDim), cfg_deg(c, kLawMaxDegree));
  double e = 0.0;
  for (std::size_t m = 1; m <= c.params.max_dim; ++m) {
    for (unsigned D = 1; D <= c.params.max_degree; ++D) {
      e = std::max(e, max_coeff_difference(check(counit(m, D)), TruncatedSeries::identity(m, D)));
    }
  }
  return e;
}

// ---- registry ----------------------------------------------------------

constexpr double kExact = 1e-12;
constexpr double kFloat = 1e-9;

struct Entry {
  LawInfo info;
  double (*fn)(Ctx&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> laws = {
      {{"enumerate_count", "multiindex", kExact, "enumerate(d, D) has binom(d+D, D) distinct elements"},
       law_enumerate_count},
      {{"multinomial_factorial", "multiindex", kExact, "multinomial(a) * prod a_i! = |a|!"}, law_multinomial_factorial},
      {{"binom_symmetry", "multiindex", kExact, "binom_componentwise is symmetric"}, law_binom_symmetry},
      {{"composition_count", "calculus", kExact, "#{k_1+..+k_n = m} = binom(m+n-1, m)"}, law_composition_count},
      {{"homogeneous_reconstruction", "series", kExact, "f = sum_k f_k"}, law_homogeneous_reconstruction},
      {{"homogeneity_scaling", "series", kFloat, "f_k(lambda x) = lambda^k f_k(x)"}, law_homogeneity_scaling},
      {{"directional_derivative_fd", "series", 1e-6, "df(x)v matches a central difference"},
       law_directional_derivative_fd},
      {{"cauchy_sampled", "series", kFloat, "max |f_k| <= max |f| on sampled circles"}, law_cauchy_sampled},
      {{"partial_sums_bound", "series", kExact, "|f(x) - S_N(x)| <= M 2^-N with M = max |f| on the 2x circle"},
       law_partial_sums_bound},
      {{"polarization_fidelity", "multilinear", kFloat, "polarize = from_monomial"}, law_polarization_fidelity},
      {{"multilinear_symmetry", "multilinear", kExact, "apply is invariant under argument permutation"},
       law_multilinear_symmetry},
      {{"multilinear_linearity", "multilinear", kFloat, "apply is linear in each slot"}, law_multilinear_linearity},
      {{"multilinear_roundtrip", "multilinear", kExact, "diagonal of from_monomial(f_k) is f_k"},
       law_multilinear_roundtrip},
      {{"compose_oracle", "calculus", kFloat, "compose = compose_naive when g(0) = 0"}, law_compose_oracle},
      {{"compose_associativity", "calculus", kFloat, "f o (g o h) = (f o g) o h"}, law_compose_associativity},
      {{"compose_identity", "calculus", kExact, "id o f = f o id = f"}, law_compose_identity},
      {{"compose_polynomial_constant", "calculus", kFloat, "compose = compose_naive for polynomial f, g(0) != 0"},
       law_compose_polynomial_constant},
      {{"curry_uncurry", "calculus", kExact, "uncurry o curry = id"}, law_curry_uncurry},
      {{"uncurry_curry", "calculus", kExact, "curry o uncurry = id"}, law_uncurry_curry},
      {{"curry_multilinear", "calculus", kFloat, "curry agrees with the binomial multilinear construction"},
       law_curry_multilinear},
      {{"curry_naturality", "calculus", kFloat, "curry(f)(x)(y) = f(x, y)"}, law_curry_naturality},
      {{"chain_rule", "calculus", 1e-8, "d(f o g)(x) = df(g(x)) dg(x)"}, law_chain_rule},
      {{"dirac_action", "exponential", kExact, "delta_x f = f(x)"}, law_dirac_action},
      {{"theta_extraction", "exponential", kExact, "theta_n(x) f = n! f_n(x)"}, law_theta_extraction},
      {{"theta_induction", "exponential", kExact, "theta_{n+1} = theta_1 * theta_n"}, law_theta_induction},
      {{"delta_taylor", "exponential", kExact, "delta_x = sum_n theta_n(x) / n!"}, law_delta_taylor},
      {{"deltas_span", "exponential", kFloat, "deltas at D+1 points span !C at degree D"}, law_deltas_span},
      {{"convolution_commutative", "exponential", kExact, "a * b = b * a"}, law_convolution_commutative},
      {{"convolution_associative", "exponential", kExact, "a * (b * c) = (a * b) * c"}, law_convolution_associative},
      {{"convolution_unit", "exponential", kExact, "m0(1) * d = d"}, law_convolution_unit},
      {{"cocontraction_is_convolution", "exponential", kExact, "nabla on basis pairs equals convolve"},
       law_cocontraction_is_convolution},
      {{"dirac_convolution", "exponential", kExact, "delta_x * delta_y = delta_{x+y}"}, law_dirac_convolution},
      {{"convolution_nested", "exponential", kFloat, "(a * b) f = a(x -> b(y -> f(x + y)))"}, law_convolution_nested},
      {{"comonad_counit_outer", "exponential", kExact, "eps_{!E} o rho = id"}, law_comonad_counit_outer},
      {{"comonad_counit_inner", "exponential", kExact, "!eps_E o rho = id"}, law_comonad_counit_inner},
      {{"comonad_coassociativity", "exponential", kExact, "rho_{!E} o rho = !rho o rho"}, law_comonad_coassociativity},
      {{"contraction_coassociative", "exponential", kExact, "(Delta x id) Delta = (id x Delta) Delta"},
       law_contraction_coassociative},
      {{"contraction_counit", "exponential", kExact, "(e x id) Delta = id = (id x e) Delta"}, law_contraction_counit},
      {{"contraction_cocommutative", "exponential", kExact, "swap o Delta = Delta"}, law_contraction_cocommutative},
      {{"cocontraction_associative", "exponential", kExact, "nabla (nabla x id) = nabla (id x nabla)"},
       law_cocontraction_associative},
      {{"cocontraction_unit", "exponential", kExact, "nabla (m0 x id) = id = nabla (id x m0)"},
       law_cocontraction_unit},
      {{"bialgebra_compatibility", "exponential", kExact,
        "Delta nabla = (nabla x nabla)(id x swap x id)(Delta x Delta)"},
       law_bialgebra_compatibility},
      {{"monoidal_bijection", "exponential", kExact, "m2 is a basis bijection with inverse delta_z -> delta_pi1z x delta_pi2z"},
       law_monoidal_bijection},
      {{"monoidal_strength", "exponential", kExact, "!<!pi1,!pi2> rho m2 = m2 (rho x rho)"}, law_monoidal_strength},
      {{"coder_counit", "exponential", kExact, "eps o coder = id"}, law_coder_counit},
      {{"coder_rho_nabla", "exponential", kExact, "rho coder = nabla (coder coder x rho m0)"}, law_coder_rho_nabla},
      {{"coder_strength", "exponential", kExact, "phi (coder x 1) = coder (1 x eps)"}, law_coder_strength},
      {{"coder_finite_difference", "exponential", 1e-5, "(delta_{tv} - delta_0) / t -> coder(v)"},
       law_coder_finite_difference},
      {{"coder_derivative", "exponential", kExact, "coder(v) f = df(0) v"}, law_coder_derivative},
      {{"bang_identity", "exponential", kExact, "!id = id"}, law_bang_identity},
      {{"bang_functoriality", "exponential", kFloat, "!(f o g) = !f !g when g(0) = 0"}, law_bang_functoriality},
      {{"bang_dirac", "exponential", kExact, "!f delta_x = delta_{f(x)} for affine f"}, law_bang_dirac},
      {{"adjunction_naturality", "exponential", kFloat, "hat(f) !g = hat(f o g)"}, law_adjunction_naturality},
      {{"hat_check_roundtrip", "exponential", kExact, "check hat = id, hat check = id"}, law_hat_check_roundtrip},
      {{"check_theta_series", "exponential", kExact, "check(g) = sum_k g(theta_k) / k!"}, law_check_theta_series},
      {{"check_counit", "exponential", kExact, "check(eps) = id"}, law_check_counit},
  };
  return laws;
}

LawReport run_entry(const Entry& entry, const LawConfig& config) {
  Ctx ctx{config, make_rng(config.seed, entry.info.name), LawParams{}};
  ctx.params.seed = config.seed;
  ctx.params.samples = config.samples;
  ctx.params.max_dim = config.max_dim;
  ctx.params.max_degree = config.max_degree;
  LawReport report;
  report.name = entry.info.name;
  report.module = entry.info.module;
  auto it = config.tolerance_overrides.find(entry.info.name);
  report.tolerance = it == config.tolerance_overrides.end() ? entry.info.tolerance : it->second;
  const auto start = std::chrono::steady_clock::now();
  double err = entry.fn(ctx);
  const auto stop = std::chrono::steady_clock::now();
  if (std::isnan(err)) err = INFINITY;
  report.params = ctx.params;
  report.max_error = err;
  report.pass = err <= report.tolerance;
  report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

}  // namespace

const std::vector<LawInfo>& law_catalog() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

void validate_config(const LawConfig& config) {
  std::vector<std::string> problems;
  if (config.max_dim < 1 || config.max_dim > kLawMaxDim) {
    problems.push_back("dim must be in [1, " + std::to_string(kLawMaxDim) + "], got " +
                       std::to_string(config.max_dim));
  }
  if (config.max_degree < 1 || config.max_degree > kLawMaxDegree) {
    problems.push_back("degree must be in [1, " + std::to_string(kLawMaxDegree) + "], got " +
                       std::to_string(config.max_degree));
  }
  if (config.max_degree > max_series_degree()) {
    problems.push_back("degree " + std::to_string(config.max_degree) + " exceeds DILL_SERIES_MAX_DEGREE = " +
                       std::to_string(max_series_degree()));
  }
  if (max_series_degree() < 6) {
    problems.push_back("DILL_SERIES_MAX_DEGREE must be at least 6 for the chain-rule law, got " +
                       std::to_string(max_series_degree()));
  }
  if (config.samples < 1 || config.samples > 10000) {
    problems.push_back("samples must be in [1, 10000], got " + std::to_string(config.samples));
  }
  if (!std::isfinite(config.compose_perturbation)) problems.push_back("compose perturbation must be finite");
  for (const auto& [name, tol] : config.tolerance_overrides) {
    const bool known = std::any_of(registry().begin(), registry().end(),
                                   [&](const Entry& e) { return e.info.name == name; });
    if (!known) problems.push_back("tolerance override for unknown law '" + name + "'");
    if (!(tol >= 0.0) || !std::isfinite(tol)) problems.push_back("tolerance for '" + name + "' must be finite and >= 0");
  }
  if (!problems.empty()) {
    std::string msg = "invalid law configuration:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw Error(msg);
  }
}

LawReport run_law(std::string_view name, const LawConfig& config) {
  validate_config(config);
  for (const auto& e : registry()) {
    if (e.info.name == name) return run_entry(e, config);
  }
  throw Error("unknown law '" + std::string(name) + "'");
}

std::vector<LawReport> run_suite(const LawConfig& config) {
  validate_config(config);
  const auto& laws = registry();
  std::vector<LawReport> reports;
  reports.reserve(laws.size());
  if (!config.parallel) {
    for (const auto& e : laws) reports.push_back(run_entry(e, config));
    return reports;
  }
  std::vector<std::future<LawReport>> pending;
  pending.reserve(laws.size());
  for (const auto& e : laws) pending.push_back(std::async(std::launch::async, run_entry, std::cref(e), std::cref(config)));
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

std::string summary_table(std::span<const LawReport> reports) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-30s %-12s %3s %3s %12s %9s %6s %10s\n", "law", "module", "m", "D", "max_error",
                "tol", "result", "ms");
  out += line;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-30s %-12s %3zu %3u %12.3e %9.1e %6s %10.2f\n", r.name.c_str(),
                  r.module.c_str(), r.params.max_dim, r.params.max_degree, r.max_error, r.tolerance,
                  r.pass ? "PASS" : "FAIL", r.runtime_ms);
    out += line;
    passed += r.pass ? 1 : 0;
  }
  std::snprintf(line, sizeof line, "%zu/%zu laws passed\n", passed, reports.size());
  out += line;
  return out;
}

}  // namespace dill
