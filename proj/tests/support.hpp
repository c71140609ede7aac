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


// Shared test helpers: hand-rolled random generators and a naive sparse
// polynomial model used as an independent oracle.

#ifndef DILL_TESTS_SUPPORT_HPP
#define DILL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "dill/calculus.hpp"
#include "dill/multiindex.hpp"
#include "dill/series.hpp"

namespace testing_support {

// "Exact" identities hold up to rounding: scaled error at most this.
inline constexpr double kExact = 1e-12;

using dill::Complex;
using dill::MultiIndex;
using dill::TruncatedSeries;
using dill::Vector;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::size_t range(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // Rejection sampling on the unit disk.
  Complex disk(double radius = 1.0) {
    for (;;) {
      const double a = real(-1, 1), b = real(-1, 1);
      if (a * a + b * b <= 1) return {radius * a, radius * b};
    }
  }

  Vector point(std::size_t dim, double radius) {
    Vector v(dim);
    for (auto& z : v) z = disk(radius);
    return v;
  }

  // Coefficients in the unit disk, damped by 1/(|alpha|+1)! so evaluation
  // near the unit ball stays O(1).
  TruncatedSeries series(std::size_t m, std::size_t n, unsigned degree, bool zero_constant = false) {
    TruncatedSeries f(m, n, degree);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0; a < f.basis().size(); ++a) {
        const unsigned k = f.basis()[a].degree();
        if (k == 0 && zero_constant) continue;
        f.at(j, a) = disk() / static_cast<double>(dill::factorial(k + 1));
      }
    }
    return f;
  }

  TruncatedSeries polynomial(std::size_t m, std::size_t n, unsigned degree, bool zero_constant = false) {
    TruncatedSeries f = series(m, n, degree, zero_constant);
    f.set_polynomial(true);
    return f;
  }

  TruncatedSeries homogeneous(std::size_t m, std::size_t n, unsigned k) {
    TruncatedSeries f(m, n, k, true);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = f.basis().degree_begin(k); a < f.basis().degree_end(k); ++a) f.at(j, a) = disk();
    }
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// ---- naive polynomials: exponent vector -> coefficient

using Exp = std::vector<unsigned>;
using Poly = std::map<Exp, Complex>;

inline Poly poly_from(const TruncatedSeries& f, std::size_t out) {
  Poly p;
  for (std::size_t a = 0; a < f.basis().size(); ++a) {
    const Complex c = f.at(out, a);
    if (c == Complex{}) continue;
    const auto e = f.basis()[a].exponents();
    p[Exp(e.begin(), e.end())] = c;
  }
  return p;
}

inline unsigned total(const Exp& e) {
  unsigned s = 0;
  for (unsigned v : e) s += v;
  return s;
}

inline Poly truncate(const Poly& p, unsigned degree) {
  Poly r;
  for (const auto& [e, c] : p) {
    if (total(e) <= degree) r[e] = c;
  }
  return r;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b) r[e] += c;
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, unsigned degree) {
  Poly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exp e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (total(e) <= degree) r[e] += ca * cb;
    }
  }
  return r;
}

inline Poly one(std::size_t dim) { return Poly{{Exp(dim, 0), Complex(1.0)}}; }

// f(g_1, ..., g_m) by direct substitution, truncated at `degree`.
inline Poly substitute(const Poly& f, const std::vector<Poly>& g, std::size_t inner_dim, unsigned degree) {
  Poly r;
  for (const auto& [e, c] : f) {
    Poly term = one(inner_dim);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned p = 0; p < e[i]; ++p) term = mul(term, g[i], degree);
    }
    for (const auto& [te, tc] : term) r[te] += c * tc;
  }
  return r;
}

inline Complex eval(const Poly& p, std::span<const Complex> x) {
  Complex s = 0;
  for (const auto& [e, c] : p) {
    Complex t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= std::pow(x[i], static_cast<int>(e[i]));
    s += t;
  }
  return s;
}

inline double poly_gap(const Poly& a, const Poly& b) {
  double err = 0;
  for (const auto& [e, c] : a) {
    const auto it = b.find(e);
    err = std::max(err, std::abs(c - (it == b.end() ? Complex{} : it->second)));
  }
  for (const auto& [e, c] : b) {
    if (!a.count(e)) err = std::max(err, std::abs(c));
  }
  return err;
}

// Coefficients of series f against the naive polynomial of output j.
inline double gap(const TruncatedSeries& f, std::size_t out, const Poly& p) { return poly_gap(poly_from(f, out), p); }

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double err = 0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  return err;
}

inline double rel_gap(std::span<const Complex> a, std::span<const Complex> b) {
  double err = 0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
  return err;
}

// Series from a handful of (output, exponents, value) triples.
struct Term {
  std::size_t out;
  std::vector<std::uint32_t> alpha;
  Complex value;
};

inline TruncatedSeries make_series(std::size_t m, std::size_t n, unsigned degree, std::initializer_list<Term> terms,
                                   bool polynomial = false) {
  TruncatedSeries f(m, n, degree, polynomial);
  for (const Term& t : terms) f.set_coeff(t.out, MultiIndex(t.alpha), t.value);
  return f;
}

}  // namespace testing_support

#endif  // DILL_TESTS_SUPPORT_HPP
