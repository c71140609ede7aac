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

#ifndef DILL_CALCULUS_HPP
#define DILL_CALCULUS_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dill/series.hpp"

namespace dill {

/// f o g for f: C^m -> C^n and g: C^p -> C^m.
///
/// The homogeneous part of degree d of the result is
///   h_d = sum_n sum_{k_1 + ... + k_n = d} f~_n(g_{k_1}, ..., g_{k_n})
/// with f~_n the symmetric n-linear representative of f_n and g_k the
/// homogeneous parts of g. Truncations only compose exactly when g(0) = 0; a
/// nonzero constant term is accepted only for a polynomial f.
///
/// Output degree: D_g when f is a polynomial, otherwise min(D_f, D_g).
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Same contract as compose, computed by substituting g into every monomial of
/// f with repeated pointwise products. Kept as an independent oracle.
TruncatedSeries compose_naive(const TruncatedSeries& f, const TruncatedSeries& g);

/// Largest degree carrying a nonzero coefficient (0 for the zero series).
unsigned effective_degree(const TruncatedSeries& f);

/// A series C^{m1} -> S(C^{m2}, C^n): for every outer multi-index alpha with
/// |alpha| <= D, an inner series over C^{m2} of degree D - |alpha|.
class CurriedSeries {
 public:
  /// Zero nest.
  CurriedSeries(std::size_t outer_dim, std::size_t inner_dim, std::size_t codomain_dim, unsigned degree,
                bool polynomial = false);
  /// Validates that `inner` matches the outer basis: one series per outer
  /// index, each over C^{inner_dim} into C^{codomain_dim} with degree D - |alpha|.
  CurriedSeries(std::size_t outer_dim, unsigned degree, std::vector<TruncatedSeries> inner, bool polynomial = false);

  std::size_t outer_dim() const noexcept { return outer_->dim(); }
  std::size_t inner_dim() const noexcept { return inner_dim_; }
  std::size_t codomain_dim() const noexcept { return codomain_dim_; }
  unsigned degree() const noexcept { return outer_->degree(); }
  bool is_polynomial() const noexcept { return polynomial_; }
  const MonomialBasis& outer_basis() const noexcept { return *outer_; }

  const TruncatedSeries& inner(std::size_t outer_index) const { return inner_.at(outer_index); }
  TruncatedSeries& inner(std::size_t outer_index) { return inner_.at(outer_index); }
  const TruncatedSeries& inner(const MultiIndex& alpha) const { return inner_.at(outer_->index_of(alpha)); }

  /// y -> f(x, y) as a series of degree D over C^{m2}.
  TruncatedSeries evaluate_outer(std::span<const Complex> x) const;

 private:
  std::shared_ptr<const MonomialBasis> outer_;
  std::size_t inner_dim_;
  std::size_t codomain_dim_;
  std::vector<TruncatedSeries> inner_;
  bool polynomial_;
};

/// Splits the domain C^m as C^split x C^{m - split} and re-indexes
/// coefficients: inner(alpha) at beta is c_{(alpha, beta)}.
CurriedSeries curry(const TruncatedSeries& f, std::size_t split);
/// Inverse re-indexing.
TruncatedSeries uncurry(const CurriedSeries& nest);

/// Builds the curried nest from the multilinear form instead:
///   inner part of bidegree (n, m) = binom(n+m, n) f~_{n+m}((x,0)^n, (0,y)^m),
/// expanded over basis vectors. Used to check that curry agrees with it.
CurriedSeries curry_via_multilinear(const TruncatedSeries& f, std::size_t split);

/// Largest coefficient difference between two nests of the same shape.
double max_nest_difference(const CurriedSeries& a, const CurriedSeries& b);

/// df as a series C^m -> C^{n*m}; output j*m + i is d_i f_j. Degree D - 1.
TruncatedSeries derivative_series(const TruncatedSeries& f);

}  // namespace dill

#endif  // DILL_CALCULUS_HPP
