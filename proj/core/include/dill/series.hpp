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

#ifndef DILL_SERIES_HPP
#define DILL_SERIES_HPP

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dill/multiindex.hpp"

namespace dill {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Global cap on truncation degrees, read once from DILL_SERIES_MAX_DEGREE
/// (default 8).
unsigned max_series_degree();

/// The space C^dim. dim >= 1.
class FiniteSpace {
 public:
  explicit FiniteSpace(std::size_t dim);
  std::size_t dim() const noexcept { return dim_; }
  bool operator==(const FiniteSpace&) const = default;

 private:
  std::size_t dim_;
};

/// A map C^m -> C^n given by its Taylor coefficients c_{j,alpha} for |alpha| <= D.
///
/// Storage is dense: output-major, then the graded order of MonomialBasis.
/// The `polynomial` flag records that every coefficient above D is known to be
/// zero, i.e. the table is the whole function and not a truncation of it. Only
/// flagged series may be composed after an inner series with a nonzero constant
/// term.
class TruncatedSeries {
 public:
  /// The zero series.
  TruncatedSeries(std::size_t domain_dim, std::size_t codomain_dim, unsigned degree, bool polynomial = false);

  static TruncatedSeries identity(std::size_t dim, unsigned degree);
  /// x -> A x with A given row-major (codomain_dim rows, domain_dim columns).
  static TruncatedSeries linear(std::size_t codomain_dim, std::size_t domain_dim, std::span<const Complex> matrix,
                                unsigned degree);
  static TruncatedSeries constant(std::size_t domain_dim, std::span<const Complex> value, unsigned degree);

  std::size_t domain_dim() const noexcept { return m_; }
  std::size_t codomain_dim() const noexcept { return n_; }
  unsigned degree() const noexcept { return basis_->degree(); }
  bool is_polynomial() const noexcept { return polynomial_; }
  const MonomialBasis& basis() const noexcept { return *basis_; }
  const std::shared_ptr<const MonomialBasis>& basis_ptr() const noexcept { return basis_; }

  /// Coefficient of x^alpha in output j; zero when |alpha| > degree.
  Complex coeff(std::size_t out, const MultiIndex& alpha) const;
  void set_coeff(std::size_t out, const MultiIndex& alpha, Complex value);
  void add_to_coeff(std::size_t out, const MultiIndex& alpha, Complex value);

  /// Coefficient at position `index` of the basis.
  Complex at(std::size_t out, std::size_t index) const { return coeffs_[out * basis_->size() + index]; }
  Complex& at(std::size_t out, std::size_t index) { return coeffs_[out * basis_->size() + index]; }
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }
  std::span<Complex> coefficients() noexcept { return coeffs_; }

  void set_polynomial(bool polynomial) noexcept { polynomial_ = polynomial; }

  /// (sum_alpha c_{j,alpha} x^alpha)_j, exact polynomial evaluation of the table.
  Vector evaluate(std::span<const Complex> x) const;
  /// Values at 0: the alpha = 0 coefficients.
  Vector constant_term() const;
  bool has_zero_constant_term() const;

  /// Scalar series of output j.
  TruncatedSeries component(std::size_t j) const;
  /// Keeps exactly the coefficients with |alpha| = k. Requires k <= degree.
  TruncatedSeries homogeneous_part(unsigned k) const;
  /// Drops every coefficient above degree n. Requires n <= degree.
  TruncatedSeries truncate(unsigned n) const;
  /// Same function at another truncation degree. Raising the degree is only
  /// allowed for polynomial series, whose extra coefficients are known zeros.
  TruncatedSeries with_degree(unsigned n) const;

  /// Coefficient of alpha in the result is (alpha_i + 1) * c_{alpha + e_i};
  /// the result has degree D - 1 (degree 0 stays 0 and is the zero series).
  TruncatedSeries partial_derivative(std::size_t i) const;
  /// sum_i v_i * (d_i f)(x).
  Vector directional_derivative(std::span<const Complex> x, std::span<const Complex> v) const;

  bool operator==(const TruncatedSeries& other) const;

 private:
  std::size_t m_;
  std::size_t n_;
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<Complex> coeffs_;
  bool polynomial_ = false;
};

/// Coefficientwise sum, truncated at min(D_f, D_g) unless both operands are
/// polynomials, in which case the larger degree is kept.
TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries subtract(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const TruncatedSeries& f, Complex s);
/// Cauchy product of two scalar series, truncated at min(D_f, D_g). The result is
/// flagged polynomial only when both inputs are and nothing nonzero was dropped.
TruncatedSeries pointwise_multiply(const TruncatedSeries& f, const TruncatedSeries& g);

/// max |f_{j,alpha} - g_{j,alpha}| over the union of both tables (missing
/// entries read as zero). Shapes must agree apart from the degree.
double max_coeff_difference(const TruncatedSeries& f, const TruncatedSeries& g);

/// Multiplies two single-output coefficient tables over the same basis into
/// `out` (accumulating), dropping products above the basis degree. Returns
/// true when a nonzero product was dropped.
bool accumulate_product(const MonomialBasis& basis, std::span<const Complex> a, std::span<const Complex> b,
                        std::span<Complex> out);

}  // namespace dill

#endif  // DILL_SERIES_HPP
