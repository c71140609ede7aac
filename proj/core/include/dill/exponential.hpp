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

// Finite-rank exponential: the truncated distribution space !E over E = C^m.
//
// !E at degree D has basis eps_alpha (|alpha| <= D), where eps_alpha sends a
// scalar series to its raw coefficient c_alpha. With this normalisation the
// Dirac delta is delta_x = sum_alpha x^alpha eps_alpha, contraction carries no
// binomials and cocontraction / convolution carry prod_i binom(a_i+b_i, a_i).
//
// Tensor products of such spaces are truncated jointly: the basis of
// !E_1 (x) ... (x) !E_k at degree D is the set of tuples (alpha_1, ..., alpha_k)
// with |alpha_1| + ... + |alpha_k| <= D. Every structure map below is graded,
// so it restricts exactly to these bases.

#ifndef DILL_EXPONENTIAL_HPP
#define DILL_EXPONENTIAL_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dill/series.hpp"

namespace dill {

/// Tuples (alpha_1, ..., alpha_k), alpha_i over C^{dims[i]}, of total degree
/// <= degree. Ordered by alpha_1 in graded order, then recursively by the rest.
/// With no factors the basis has exactly one element (the unit space C).
class TensorBasis {
 public:
  static std::shared_ptr<const TensorBasis> get(const std::vector<std::size_t>& dims, unsigned degree);

  TensorBasis(std::vector<std::size_t> dims, unsigned degree);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  const std::vector<MultiIndex>& operator[](std::size_t i) const { return tuples_[i]; }

  std::optional<std::size_t> find(std::span<const MultiIndex> parts) const;
  std::size_t index_of(std::span<const MultiIndex> parts) const;

 private:
  std::vector<std::size_t> dims_;
  unsigned degree_;
  std::vector<std::vector<MultiIndex>> tuples_;
  std::map<MultiIndex, std::size_t> lookup_;  // keyed by the concatenation
};

/// Source or target of a LinearOperator: either a plain C^k, or a (possibly
/// empty) tensor product of truncated exponentials !C^{d_1} (x) ... at degree D.
struct Space {
  enum class Kind { kVector, kBang };

  static Space vector(std::size_t dim);
  static Space bang(std::vector<std::size_t> dims, unsigned degree);

  std::size_t size() const;
  std::string label() const;
  bool operator==(const Space&) const = default;

  Kind kind = Kind::kVector;
  std::vector<std::size_t> dims;
  unsigned degree = 0;
};

/// Upper bound on rows * cols of any operator matrix.
inline constexpr std::size_t kMaxOperatorEntries = 16'000'000;

/// Dense complex matrix of a linear map between two spaces, in the canonical
/// bases of those spaces. Row index = target basis position.
class LinearOperator {
 public:
  LinearOperator(Space source, Space target);

  static LinearOperator identity(const Space& space);

  const Space& source() const noexcept { return source_; }
  const Space& target() const noexcept { return target_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Complex& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Complex> data() const noexcept { return data_; }

  Vector apply(std::span<const Complex> v) const;

 private:
  Space source_;
  Space target_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/// a o b. Requires b.target() == a.source().
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
/// Largest entrywise |a - b|; sources and targets must agree.
double max_difference(const LinearOperator& a, const LinearOperator& b);
/// Factorwise tensor product. Every factor must map between bang spaces at the
/// given degree; the result maps the concatenated source factors to the
/// concatenated target factors, truncated at total degree `degree`.
LinearOperator tensor_product(std::span<const LinearOperator> factors, unsigned degree);
/// Symmetry !C^a (x) !C^b -> !C^b (x) !C^a.
LinearOperator swap_operator(std::size_t a, std::size_t b, unsigned degree);

/// op followed by a reordering of its target tensor factors: factor i of the
/// result is factor perm[i] of op.target(). Cheaper than composing with a
/// permutation matrix.
LinearOperator permute_target_factors(const LinearOperator& op, std::span<const std::size_t> perm);

/// An element sum_alpha d_alpha eps_alpha of !C^m truncated at degree D.
class Distribution {
 public:
  Distribution(std::size_t dim, unsigned degree);
  /// Reads the coordinates of a vector in Space::bang({dim}, degree).
  Distribution(std::size_t dim, unsigned degree, std::span<const Complex> coeffs);

  std::size_t dim() const noexcept { return basis_->dim(); }
  unsigned degree() const noexcept { return basis_->degree(); }
  const MonomialBasis& basis() const noexcept { return *basis_; }
  Space space() const { return Space::bang({dim()}, degree()); }

  Complex coeff(const MultiIndex& alpha) const;
  void set_coeff(const MultiIndex& alpha, Complex value);
  Complex at(std::size_t i) const { return coeffs_[i]; }
  Complex& at(std::size_t i) { return coeffs_[i]; }
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  /// sum_alpha d_alpha c_alpha(f) for each output of f. A non-polynomial f of
  /// lower degree is rejected if the distribution reaches past that degree.
  Vector apply(const TruncatedSeries& f) const;
  /// Scalar form for f: C^m -> C.
  Complex apply_scalar(const TruncatedSeries& f) const;

  Distribution operator+(const Distribution& other) const;
  Distribution scaled(Complex s) const;
  bool operator==(const Distribution& other) const;

 private:
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<Complex> coeffs_;
};

double max_difference(const Distribution& a, const Distribution& b);
/// op(d), read back as a distribution; op.target() must be a single bang factor.
Distribution apply(const LinearOperator& op, const Distribution& d);

/// delta_x: d_alpha = x^alpha.
Distribution dirac(std::span<const Complex> x, unsigned degree);
/// theta_n(x) = n! sum_{|alpha| = n} x^alpha eps_alpha, so that
/// theta_n(x) f = n! f_n(x). Requires n <= degree.
Distribution theta(unsigned n, std::span<const Complex> x, unsigned degree);
/// theta_0 = delta_0, theta_1 = coder(x), theta_{n+1} = theta_1 * theta_n.
Distribution theta_inductive(unsigned n, std::span<const Complex> x, unsigned degree);
/// coder(v) = sum_i v_i eps_{e_i}, the derivative of t -> delta_{tv} at 0.
Distribution codereliction(std::span<const Complex> v, unsigned degree);
/// (a * b)_gamma = sum_{alpha + beta = gamma} binom(alpha+beta, alpha) a_alpha b_beta.
Distribution convolve(const Distribution& a, const Distribution& b);

/// Largest coefficient gap between dirac(x) and sum_{n <= D} theta(n, x) / n!.
double delta_taylor_error(std::span<const Complex> x, unsigned degree);
/// delta_taylor_error(x, degree) <= tolerance.
bool delta_taylor_check(std::span<const Complex> x, unsigned degree, double tolerance = 1e-12);

/// !f : !C^m -> !C^n at degree D, entry (beta, alpha) = [x^alpha] f(x)^beta.
/// Requires f.degree() >= D or a polynomial f.
LinearOperator bang_map(const TruncatedSeries& f, unsigned degree);
/// The matrix of op as a linear polynomial series C^cols -> C^rows.
TruncatedSeries as_linear_series(const LinearOperator& op, unsigned degree);

/// Upper bound on rows * cols of comultiplication matrices.
inline constexpr std::size_t kMaxComultiplicationEntries = 4'000'000;

/// Dereliction eps_E : !C^m -> C^m, eps_{e_i} -> e_i.
LinearOperator counit(std::size_t dim, unsigned degree);
/// Digging rho_E : !C^m (inner degree) -> !!C^m (outer degree over the
/// coordinates of !C^m), delta_x -> delta_{delta_x}. Entry (A, gamma) is 1 when
/// sum_alpha A_alpha alpha = gamma. Size-gated by kMaxComultiplicationEntries.
LinearOperator comultiplication(std::size_t dim, unsigned outer_degree, unsigned inner_degree);

/// Delta: eps_gamma -> sum_{alpha+beta=gamma} eps_alpha (x) eps_beta.
LinearOperator contraction(std::size_t dim, unsigned degree);
/// e: eps_alpha -> [alpha = 0].
LinearOperator weakening(std::size_t dim, unsigned degree);
/// nabla: eps_alpha (x) eps_beta -> binom(alpha+beta, alpha) eps_{alpha+beta}.
LinearOperator cocontraction(std::size_t dim, unsigned degree);
/// m0: 1 -> eps_0 = delta_0.
LinearOperator coweakening(std::size_t dim, unsigned degree);
/// m2: !C^a (x) !C^b -> !C^{a+b}, eps_alpha (x) eps_beta -> eps_{(alpha, beta)}.
LinearOperator monoidal(std::size_t a, std::size_t b, unsigned degree);
/// (m2)^-1: delta_z -> delta_{pi_1 z} (x) delta_{pi_2 z}.
LinearOperator monoidal_inverse(std::size_t a, std::size_t b, unsigned degree);
/// coder as an operator C^m -> !C^m.
LinearOperator codereliction_operator(std::size_t dim, unsigned degree);

/// f-hat : !C^m -> C^n with column alpha the coefficient vector c_{., alpha}.
LinearOperator hat(const TruncatedSeries& f);
/// g-check : x -> g(delta_x), as a series of the source degree.
TruncatedSeries check(const LinearOperator& g);

}  // namespace dill

#endif  // DILL_EXPONENTIAL_HPP
