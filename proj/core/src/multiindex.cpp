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

#include "dill/multiindex.hpp"

#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "dill/error.hpp"

namespace dill {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw Error("integer overflow in combinatorial coefficient");
  }
  return a * b;
}

// Appends every index of degree exactly `remaining` over coordinates [pos, dim)
// to `out`, with the prefix already fixed in `scratch`.
void enumerate_degree(std::vector<std::uint32_t>& scratch, std::size_t pos, unsigned remaining,
                      std::vector<MultiIndex>& out) {
  if (pos + 1 == scratch.size()) {
    scratch[pos] = remaining;
    out.emplace_back(scratch);
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    scratch[pos] = v;
    enumerate_degree(scratch, pos + 1, remaining - v, out);
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<std::uint32_t> exponents)
    : exps_(std::move(exponents)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

MultiIndex::MultiIndex(std::initializer_list<std::uint32_t> exponents)
    : MultiIndex(std::vector<std::uint32_t>(exponents)) {}

MultiIndex MultiIndex::zero(std::size_t dim) { return MultiIndex(std::vector<std::uint32_t>(dim, 0)); }

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t i) {
  if (i >= dim) throw Error("unit index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim));
  std::vector<std::uint32_t> e(dim, 0);
  e[i] = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dim() != other.dim()) {
    throw Error("multi-index dimension mismatch: " + std::to_string(dim()) + " vs " + std::to_string(other.dim()));
  }
  std::vector<std::uint32_t> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!other.divides(*this)) throw Error("multi-index subtraction underflow: " + to_string() + " - " + other.to_string());
  std::vector<std::uint32_t> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
  return MultiIndex(std::move(e));
}

bool MultiIndex::divides(const MultiIndex& other) const {
  if (dim() != other.dim()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::concat(const MultiIndex& a, const MultiIndex& b) {
  std::vector<std::uint32_t> e(a.exps_);
  e.insert(e.end(), b.exps_.begin(), b.exps_.end());
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::slice(std::size_t first, std::size_t count) const {
  if (first + count > dim()) throw Error("multi-index slice out of range");
  return MultiIndex(std::vector<std::uint32_t>(exps_.begin() + static_cast<std::ptrdiff_t>(first),
                                               exps_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
  os << ')';
  return os.str();
}

std::vector<MultiIndex> enumerate(std::size_t dim, unsigned max_degree) {
  if (dim == 0) throw Error("empty space");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(binomial(dim + max_degree, max_degree)));
  std::vector<std::uint32_t> scratch(dim, 0);
  for (unsigned d = 0; d <= max_degree; ++d) enumerate_degree(scratch, 0, d, out);
  return out;
}

std::vector<std::vector<unsigned>> weak_compositions(unsigned total, unsigned parts) {
  std::vector<std::vector<unsigned>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> scratch(parts, 0);
  std::vector<MultiIndex> as_indices;
  enumerate_degree(scratch, 0, total, as_indices);
  out.reserve(as_indices.size());
  for (const auto& a : as_indices) out.emplace_back(a.exponents().begin(), a.exponents().end());
  return out;
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i; divide first by the gcd to delay overflow.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(r, i);
    r = checked_mul(r / g, num / (i / g));
  }
  return r;
}

std::uint64_t multinomial(const MultiIndex& alpha) {
  std::uint64_t r = 1;
  std::uint64_t running = 0;
  for (std::uint32_t a : alpha.exponents()) {
    running += a;
    r = checked_mul(r, binomial(running, a));
  }
  return r;
}

std::uint64_t binom_componentwise(const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.dim() != beta.dim()) {
    throw Error("binom_componentwise: dimension mismatch " + std::to_string(alpha.dim()) + " vs " +
                std::to_string(beta.dim()));
  }
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < alpha.dim(); ++i) r = checked_mul(r, binomial(alpha[i] + beta[i], alpha[i]));
  return r;
}

std::uint64_t factorial_product(const MultiIndex& alpha) {
  std::uint64_t r = 1;
  for (std::uint32_t a : alpha.exponents()) r = checked_mul(r, factorial(a));
  return r;
}

MonomialBasis::MonomialBasis(std::size_t dim, unsigned degree)
    : dim_(dim), degree_(degree), indices_(enumerate(dim, degree)) {
  offsets_.assign(degree + 2, 0);
  for (const auto& a : indices_) ++offsets_[a.degree() + 1];
  for (std::size_t k = 1; k < offsets_.size(); ++k) offsets_[k] += offsets_[k - 1];
  for (std::size_t i = 0; i < indices_.size(); ++i) lookup_.emplace(indices_[i], i);
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(std::size_t dim, unsigned degree) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<const MonomialBasis>> cache;
  const std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{dim, degree}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(dim, degree);
  return slot;
}

std::optional<std::size_t> MonomialBasis::find(const MultiIndex& alpha) const {
  if (alpha.dim() != dim_ || alpha.degree() > degree_) return std::nullopt;
  auto it = lookup_.find(alpha);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t MonomialBasis::index_of(const MultiIndex& alpha) const {
  auto pos = find(alpha);
  if (!pos) {
    throw Error("multi-index " + alpha.to_string() + " not in basis of dimension " + std::to_string(dim_) +
                " and degree " + std::to_string(degree_));
  }
  return *pos;
}

void MonomialBasis::build_sum_table() const {
  const std::size_t n = indices_.size();
  sum_table_.assign(n * n, npos);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (indices_[i].degree() + indices_[j].degree() > degree_) continue;
      sum_table_[i * n + j] = lookup_.at(indices_[i] + indices_[j]);
    }
  }
}

std::size_t MonomialBasis::sum_index(std::size_t i, std::size_t j) const {
  std::call_once(sum_once_, [this] { build_sum_table(); });
  return sum_table_[i * indices_.size() + j];
}

}  // namespace dill
