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

#include "dill/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "dill/error.hpp"

namespace dill {

namespace {

std::string shape_of(const TruncatedSeries& f) {
  return "C^" + std::to_string(f.domain_dim()) + " -> C^" + std::to_string(f.codomain_dim()) + " (degree " +
         std::to_string(f.degree()) + ")";
}

void require_same_maps(const TruncatedSeries& f, const TruncatedSeries& g, const char* op) {
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim()) {
    throw Error(std::string(op) + ": shape mismatch " + shape_of(f) + " vs " + shape_of(g));
  }
}

}  // namespace

unsigned max_series_degree() {
  static const unsigned cap = [] {
    const char* env = std::getenv("DILL_SERIES_MAX_DEGREE");
    if (env == nullptr || *env == '\0') return 8u;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0') return 8u;
    return static_cast<unsigned>(v);
  }();
  return cap;
}

FiniteSpace::FiniteSpace(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw Error("empty space");
}

TruncatedSeries::TruncatedSeries(std::size_t domain_dim, std::size_t codomain_dim, unsigned degree, bool polynomial)
    : m_(FiniteSpace(domain_dim).dim()), n_(FiniteSpace(codomain_dim).dim()), polynomial_(polynomial) {
  if (degree > max_series_degree()) {
    throw Error("degree " + std::to_string(degree) + " exceeds the global cap " + std::to_string(max_series_degree()) +
                " (DILL_SERIES_MAX_DEGREE)");
  }
  basis_ = MonomialBasis::get(m_, degree);
  coeffs_.assign(n_ * basis_->size(), Complex{});
}

TruncatedSeries TruncatedSeries::identity(std::size_t dim, unsigned degree) {
  TruncatedSeries f(dim, dim, degree, true);
  if (degree == 0) {
    f.set_polynomial(false);
    return f;
  }
  for (std::size_t i = 0; i < dim; ++i) f.set_coeff(i, MultiIndex::unit(dim, i), 1.0);
  return f;
}

TruncatedSeries TruncatedSeries::linear(std::size_t codomain_dim, std::size_t domain_dim,
                                        std::span<const Complex> matrix, unsigned degree) {
  if (matrix.size() != codomain_dim * domain_dim) {
    throw Error("linear: matrix has " + std::to_string(matrix.size()) + " entries, expected " +
                std::to_string(codomain_dim * domain_dim));
  }
  TruncatedSeries f(domain_dim, codomain_dim, degree, degree >= 1);
  if (degree == 0) return f;
  for (std::size_t j = 0; j < codomain_dim; ++j) {
    for (std::size_t i = 0; i < domain_dim; ++i) f.set_coeff(j, MultiIndex::unit(domain_dim, i), matrix[j * domain_dim + i]);
  }
  return f;
}

TruncatedSeries TruncatedSeries::constant(std::size_t domain_dim, std::span<const Complex> value, unsigned degree) {
  TruncatedSeries f(domain_dim, value.size(), degree, true);
  for (std::size_t j = 0; j < value.size(); ++j) f.at(j, 0) = value[j];
  return f;
}

Complex TruncatedSeries::coeff(std::size_t out, const MultiIndex& alpha) const {
  if (out >= n_) throw Error("output index " + std::to_string(out) + " out of range for codomain C^" + std::to_string(n_));
  if (alpha.dim() != m_) {
    throw Error("multi-index " + alpha.to_string() + " has wrong dimension for domain C^" + std::to_string(m_));
  }
  auto pos = basis_->find(alpha);
  return pos ? at(out, *pos) : Complex{};
}

void TruncatedSeries::set_coeff(std::size_t out, const MultiIndex& alpha, Complex value) {
  if (out >= n_) throw Error("output index " + std::to_string(out) + " out of range for codomain C^" + std::to_string(n_));
  at(out, basis_->index_of(alpha)) = value;
}

void TruncatedSeries::add_to_coeff(std::size_t out, const MultiIndex& alpha, Complex value) {
  if (out >= n_) throw Error("output index " + std::to_string(out) + " out of range for codomain C^" + std::to_string(n_));
  at(out, basis_->index_of(alpha)) += value;
}

Vector TruncatedSeries::evaluate(std::span<const Complex> x) const {
  if (x.size() != m_) {
    throw Error("evaluate: point has length " + std::to_string(x.size()) + ", expected " + std::to_string(m_));
  }
  const unsigned d = degree();
  // powers[i * (d + 1) + k] = x_i^k
  std::vector<Complex> powers(m_ * (d + 1));
  for (std::size_t i = 0; i < m_; ++i) {
    powers[i * (d + 1)] = 1.0;
    for (unsigned k = 1; k <= d; ++k) powers[i * (d + 1) + k] = powers[i * (d + 1) + k - 1] * x[i];
  }
  std::vector<Complex> monomials(basis_->size());
  for (std::size_t a = 0; a < basis_->size(); ++a) {
    const MultiIndex& alpha = (*basis_)[a];
    Complex v = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (alpha[i] != 0) v *= powers[i * (d + 1) + alpha[i]];
    }
    monomials[a] = v;
  }
  Vector out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Complex s{};
    for (std::size_t a = 0; a < basis_->size(); ++a) s += at(j, a) * monomials[a];
    out[j] = s;
  }
  return out;
}

Vector TruncatedSeries::constant_term() const {
  Vector v(n_);
  for (std::size_t j = 0; j < n_; ++j) v[j] = at(j, 0);
  return v;
}

bool TruncatedSeries::has_zero_constant_term() const {
  for (std::size_t j = 0; j < n_; ++j) {
    if (at(j, 0) != Complex{}) return false;
  }
  return true;
}

TruncatedSeries TruncatedSeries::component(std::size_t j) const {
  if (j >= n_) throw Error("component " + std::to_string(j) + " out of range for codomain C^" + std::to_string(n_));
  TruncatedSeries f(m_, 1, degree(), polynomial_);
  std::copy_n(coeffs_.begin() + static_cast<std::ptrdiff_t>(j * basis_->size()), basis_->size(), f.coeffs_.begin());
  return f;
}

TruncatedSeries TruncatedSeries::homogeneous_part(unsigned k) const {
  if (k > degree()) {
    throw Error("homogeneous_part: degree " + std::to_string(k) + " exceeds truncation degree " +
                std::to_string(degree()));
  }
  TruncatedSeries f(m_, n_, degree(), true);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t a = basis_->degree_begin(k); a < basis_->degree_end(k); ++a) f.at(j, a) = at(j, a);
  }
  return f;
}

TruncatedSeries TruncatedSeries::truncate(unsigned n) const {
  if (n > degree()) {
    throw Error("truncate: order " + std::to_string(n) + " exceeds truncation degree " + std::to_string(degree()));
  }
  return with_degree(n);
}

TruncatedSeries TruncatedSeries::with_degree(unsigned n) const {
  if (n > degree() && !polynomial_) {
    throw Error("cannot raise the degree of a truncated (non-polynomial) series from " + std::to_string(degree()) +
                " to " + std::to_string(n));
  }
  bool dropped = false;
  TruncatedSeries f(m_, n_, n);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t a = 0; a < basis_->size(); ++a) {
      if ((*basis_)[a].degree() <= n) {
        f.at(j, a) = at(j, a);  // graded order: positions below the cut coincide
      } else if (at(j, a) != Complex{}) {
        dropped = true;
      }
    }
  }
  f.polynomial_ = polynomial_ && !dropped;
  return f;
}

TruncatedSeries TruncatedSeries::partial_derivative(std::size_t i) const {
  if (i >= m_) {
    throw Error("partial_derivative: coordinate " + std::to_string(i) + " out of range for domain C^" +
                std::to_string(m_));
  }
  const unsigned d = degree();
  if (d == 0) return TruncatedSeries(m_, n_, 0, polynomial_);
  TruncatedSeries f(m_, n_, d - 1, polynomial_);
  const MultiIndex unit = MultiIndex::unit(m_, i);
  const auto& target = f.basis();
  for (std::size_t a = 0; a < target.size(); ++a) {
    const MultiIndex& alpha = target[a];
    const std::size_t src = basis_->index_of(alpha + unit);
    const double factor = static_cast<double>(alpha[i] + 1);
    for (std::size_t j = 0; j < n_; ++j) f.at(j, a) = factor * at(j, src);
  }
  return f;
}

Vector TruncatedSeries::directional_derivative(std::span<const Complex> x, std::span<const Complex> v) const {
  if (x.size() != m_ || v.size() != m_) {
    throw Error("directional_derivative: point and direction must have length " + std::to_string(m_) + ", got " +
                std::to_string(x.size()) + " and " + std::to_string(v.size()));
  }
  Vector out(n_);
  for (std::size_t i = 0; i < m_; ++i) {
    if (v[i] == Complex{}) continue;
    const Vector di = partial_derivative(i).evaluate(x);
    for (std::size_t j = 0; j < n_; ++j) out[j] += v[i] * di[j];
  }
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return m_ == other.m_ && n_ == other.n_ && degree() == other.degree() && coeffs_ == other.coeffs_;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_maps(f, g, "add");
  const bool both_poly = f.is_polynomial() && g.is_polynomial();
  const unsigned d = both_poly ? std::max(f.degree(), g.degree()) : std::min(f.degree(), g.degree());
  TruncatedSeries a = f.with_degree(d);
  TruncatedSeries b = g.with_degree(d);
  auto out = a.coefficients();
  auto in = b.coefficients();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += in[k];
  a.set_polynomial(both_poly);
  return a;
}

TruncatedSeries subtract(const TruncatedSeries& f, const TruncatedSeries& g) { return add(f, scale(g, -1.0)); }

TruncatedSeries scale(const TruncatedSeries& f, Complex s) {
  TruncatedSeries r = f;
  for (Complex& c : r.coefficients()) c *= s;
  return r;
}

bool accumulate_product(const MonomialBasis& basis, std::span<const Complex> a, std::span<const Complex> b,
                        std::span<Complex> out) {
  bool dropped = false;
  const std::size_t n = basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == Complex{}) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == Complex{}) continue;
      const std::size_t k = basis.sum_index(i, j);
      if (k == MonomialBasis::npos) {
        dropped = true;
        continue;
      }
      out[k] += a[i] * b[j];
    }
  }
  return dropped;
}

TruncatedSeries pointwise_multiply(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.codomain_dim() != 1 || g.codomain_dim() != 1) {
    throw Error("pointwise_multiply: requires scalar series, got " + shape_of(f) + " and " + shape_of(g));
  }
  require_same_maps(f, g, "pointwise_multiply");
  const unsigned d = std::min(f.degree(), g.degree());
  const TruncatedSeries a = f.truncate(d);
  const TruncatedSeries b = g.truncate(d);
  TruncatedSeries r(f.domain_dim(), 1, d);
  // Dropping happens either in truncate() or in the product itself.
  const bool dropped = accumulate_product(r.basis(), a.coefficients(), b.coefficients(), r.coefficients());
  r.set_polynomial(a.is_polynomial() && b.is_polynomial() && !dropped);
  return r;
}

double max_coeff_difference(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_maps(f, g, "max_coeff_difference");
  const TruncatedSeries& big = f.degree() >= g.degree() ? f : g;
  const TruncatedSeries& small = f.degree() >= g.degree() ? g : f;
  double err = 0.0;
  const std::size_t small_size = small.basis().size();
  for (std::size_t j = 0; j < big.codomain_dim(); ++j) {
    for (std::size_t a = 0; a < big.basis().size(); ++a) {
      const Complex other = a < small_size ? small.at(j, a) : Complex{};
      err = std::max(err, std::abs(big.at(j, a) - other));
    }
  }
  return err;
}

}  // namespace dill
