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

#ifndef DILL_MULTILINEAR_HPP
#define DILL_MULTILINEAR_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dill/series.hpp"

namespace dill {

/// A symmetric k-linear map (C^m)^k -> C^n.
///
/// Symmetry is structural: one entry is stored per sorted coordinate tuple
/// (i_1 <= ... <= i_k), addressed by its multiplicity vector alpha with
/// |alpha| = k. The entry is the value on (e_{i_1}, ..., e_{i_k}).
class SymmetricMultilinear {
 public:
  SymmetricMultilinear(unsigned arity, std::size_t domain_dim, std::size_t codomain_dim);

  unsigned arity() const noexcept { return arity_; }
  std::size_t domain_dim() const noexcept { return m_; }
  std::size_t codomain_dim() const noexcept { return n_; }

  /// Multiplicity vectors of the stored tuples, in graded order.
  std::size_t entry_count() const noexcept { return count_; }
  const MultiIndex& multiplicity(std::size_t e) const { return (*basis_)[offset_ + e]; }

  Complex entry(std::size_t out, std::size_t e) const { return entries_[out * count_ + e]; }
  Complex& entry(std::size_t out, std::size_t e) { return entries_[out * count_ + e]; }
  /// Entry on a coordinate tuple in any order.
  Complex entry_on(std::size_t out, std::span<const std::size_t> tuple) const;
  /// Entry on the sorted tuple with multiplicity vector alpha.
  Complex entry_for(std::size_t out, const MultiIndex& alpha) const;
  void set_entry_for(std::size_t out, const MultiIndex& alpha, Complex value);

  /// f~(args_1, ..., args_k), expanded by multilinearity over all ordered
  /// coordinate tuples.
  Vector apply(std::span<const Vector> args) const;

  /// The k-monomial x -> f~(x, ..., x) as a homogeneous series of the given
  /// truncation degree (>= arity).
  TruncatedSeries to_monomial(unsigned degree) const;

 private:
  std::size_t position(const MultiIndex& alpha) const;

  unsigned arity_;
  std::size_t m_;
  std::size_t n_;
  std::shared_ptr<const MonomialBasis> basis_;
  std::size_t offset_ = 0;
  std::size_t count_ = 0;
  std::vector<Complex> entries_;
};

/// Symmetric representative from the coefficient formula:
/// entry(alpha) = c_alpha * prod(alpha_i!) / k!. Throws when fk has a nonzero
/// coefficient of degree other than k.
SymmetricMultilinear from_monomial(const TruncatedSeries& fk, unsigned k);
/// As above with k read off the nonzero coefficients (zero series: k = 0).
SymmetricMultilinear from_monomial(const TruncatedSeries& fk);

/// Largest arity accepted by polarize (its cost is 2^k evaluations per entry).
inline constexpr unsigned kMaxPolarizationArity = 8;

/// Symmetric representative from the alternating sum
///   f~(x_1..x_k) = 1/k! sum_{eps in {0,1}^k} (-1)^(k - |eps|) f_k(sum_j eps_j x_j)
/// evaluated on basis vectors.
SymmetricMultilinear polarize(const TruncatedSeries& fk, unsigned k);
SymmetricMultilinear polarize(const TruncatedSeries& fk);

/// Largest |a - b| over all entries; shapes must agree.
double max_entry_difference(const SymmetricMultilinear& a, const SymmetricMultilinear& b);

}  // namespace dill

#endif  // DILL_MULTILINEAR_HPP
