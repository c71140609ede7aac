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

#ifndef DILL_MULTIINDEX_HPP
#define DILL_MULTIINDEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dill {

/// Exponent vector over the coordinates of C^dim.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint32_t> exponents);
  MultiIndex(std::initializer_list<std::uint32_t> exponents);

  static MultiIndex zero(std::size_t dim);
  static MultiIndex unit(std::size_t dim, std::size_t i);

  std::size_t dim() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  /// Componentwise sum; dimensions must agree.
  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; requires other <= *this componentwise.
  MultiIndex operator-(const MultiIndex& other) const;
  /// True when every entry of *this is <= the matching entry of other.
  bool divides(const MultiIndex& other) const;

  /// (a, b) as one index over dim(a) + dim(b) coordinates.
  static MultiIndex concat(const MultiIndex& a, const MultiIndex& b);
  /// Coordinates [first, first + count).
  MultiIndex slice(std::size_t first, std::size_t count) const;

  std::string to_string() const;

  bool operator==(const MultiIndex& other) const noexcept { return exps_ == other.exps_; }
  /// Plain lexicographic comparison of the exponent vectors (for use as a map key).
  std::strong_ordering operator<=>(const MultiIndex& other) const noexcept {
    return exps_ <=> other.exps_;
  }

 private:
  std::vector<std::uint32_t> exps_;
  unsigned degree_ = 0;
};

/// All multi-indices of the given dimension with degree <= max_degree, in graded
/// order: degree ascending, then descending lexicographic within a degree, so
/// (1,0) precedes (0,1).
std::vector<MultiIndex> enumerate(std::size_t dim, unsigned max_degree);

/// Weak compositions of `total` into `parts` ordered parts (entries >= 0).
std::vector<std::vector<unsigned>> weak_compositions(unsigned total, unsigned parts);

// Exact integer combinatorics. All of these throw dill::Error on overflow.
std::uint64_t factorial(unsigned n);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
/// |alpha|! / prod alpha_i!
std::uint64_t multinomial(const MultiIndex& alpha);
/// prod_i binom(alpha_i + beta_i, alpha_i)
std::uint64_t binom_componentwise(const MultiIndex& alpha, const MultiIndex& beta);
/// prod_i alpha_i!
std::uint64_t factorial_product(const MultiIndex& alpha);

/// Canonical graded basis of monomials x^alpha, |alpha| <= degree, over C^dim.
/// Instances are immutable and shared; obtain them with MonomialBasis::get.
class MonomialBasis {
 public:
  static std::shared_ptr<const MonomialBasis> get(std::size_t dim, unsigned degree);

  MonomialBasis(std::size_t dim, unsigned degree);

  std::size_t dim() const noexcept { return dim_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return indices_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return indices_[i]; }
  const std::vector<MultiIndex>& indices() const noexcept { return indices_; }

  /// Position of alpha, or nullopt when |alpha| > degree or the dimension differs.
  std::optional<std::size_t> find(const MultiIndex& alpha) const;
  /// Position of alpha; throws dill::Error when absent.
  std::size_t index_of(const MultiIndex& alpha) const;

  /// Positions [begin, end) of the indices with degree exactly k.
  std::size_t degree_begin(unsigned k) const { return offsets_.at(k); }
  std::size_t degree_end(unsigned k) const { return offsets_.at(k + 1); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  /// Position of indices()[i] + indices()[j], or npos when it exceeds the degree.
  /// The table is built on first use.
  std::size_t sum_index(std::size_t i, std::size_t j) const;

 private:
  void build_sum_table() const;

  mutable std::once_flag sum_once_;
  mutable std::vector<std::size_t> sum_table_;
  std::size_t dim_;
  unsigned degree_;
  std::vector<MultiIndex> indices_;
  std::vector<std::size_t> offsets_;
  std::map<MultiIndex, std::size_t> lookup_;
};

}  // namespace dill

#endif  // DILL_MULTIINDEX_HPP
