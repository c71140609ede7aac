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

#include "dill/multilinear.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "dill/error.hpp"

namespace dill {

namespace {

void require_homogeneous(const TruncatedSeries& fk, unsigned k) {
  if (k > fk.degree()) {
    throw Error("monomial of degree " + std::to_string(k) + " does not fit a series truncated at degree " +
                std::to_string(fk.degree()));
  }
  const auto& basis = fk.basis();
  for (std::size_t j = 0; j < fk.codomain_dim(); ++j) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
      if (basis[a].degree() != k && fk.at(j, a) != Complex{}) {
        throw Error("series is not homogeneous of degree " + std::to_string(k) + ": nonzero coefficient at " +
                    basis[a].to_string());
      }
    }
  }
}

unsigned infer_degree(const TruncatedSeries& fk) {
  std::optional<unsigned> k;
  const auto& basis = fk.basis();
  for (std::size_t j = 0; j < fk.codomain_dim(); ++j) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
      if (fk.at(j, a) == Complex{}) continue;
      if (k && *k != basis[a].degree()) {
        throw Error("series is not homogeneous: nonzero coefficients of degrees " + std::to_string(*k) + " and " +
                    std::to_string(basis[a].degree()));
      }
      k = basis[a].degree();
    }
  }
  return k.value_or(0);
}

// Accumulates coefficient * prod_l args[l][i_l] over all ordered tuples into
// `out`, tracking the multiplicity vector of the tuple in `counts`.
void expand(const SymmetricMultilinear& t, std::span<const Vector> args, std::size_t slot,
            std::vector<std::uint32_t>& counts, Complex weight, Vector& out) {
  if (slot == args.size()) {
    const MultiIndex alpha(counts);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += weight * t.entry_for(j, alpha);
    return;
  }
  const Vector& v = args[slot];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == Complex{}) continue;
    ++counts[i];
    expand(t, args, slot + 1, counts, weight * v[i], out);
    --counts[i];
  }
}

}  // namespace

SymmetricMultilinear::SymmetricMultilinear(unsigned arity, std::size_t domain_dim, std::size_t codomain_dim)
    : arity_(arity), m_(FiniteSpace(domain_dim).dim()), n_(FiniteSpace(codomain_dim).dim()) {
  basis_ = MonomialBasis::get(m_, arity_);
  offset_ = basis_->degree_begin(arity_);
  count_ = basis_->degree_end(arity_) - offset_;
  entries_.assign(n_ * count_, Complex{});
}

std::size_t SymmetricMultilinear::position(const MultiIndex& alpha) const {
  if (alpha.dim() != m_ || alpha.degree() != arity_) {
    throw Error("multiplicity vector " + alpha.to_string() + " does not describe a " + std::to_string(arity_) +
                "-tuple over C^" + std::to_string(m_));
  }
  return basis_->index_of(alpha) - offset_;
}

Complex SymmetricMultilinear::entry_on(std::size_t out, std::span<const std::size_t> tuple) const {
  if (tuple.size() != arity_) throw Error("tuple length differs from arity " + std::to_string(arity_));
  std::vector<std::uint32_t> counts(m_, 0);
  for (std::size_t i : tuple) {
    if (i >= m_) throw Error("coordinate " + std::to_string(i) + " out of range for C^" + std::to_string(m_));
    ++counts[i];
  }
  return entry_for(out, MultiIndex(std::move(counts)));
}

Complex SymmetricMultilinear::entry_for(std::size_t out, const MultiIndex& alpha) const {
  return entry(out, position(alpha));
}

void SymmetricMultilinear::set_entry_for(std::size_t out, const MultiIndex& alpha, Complex value) {
  entry(out, position(alpha)) = value;
}

Vector SymmetricMultilinear::apply(std::span<const Vector> args) const {
  if (args.size() != arity_) {
    throw Error("apply: expected " + std::to_string(arity_) + " arguments, got " + std::to_string(args.size()));
  }
  for (const Vector& v : args) {
    if (v.size() != m_) {
      throw Error("apply: argument has length " + std::to_string(v.size()) + ", expected " + std::to_string(m_));
    }
  }
  Vector out(n_);
  std::vector<std::uint32_t> counts(m_, 0);
  expand(*this, args, 0, counts, 1.0, out);
  return out;
}

TruncatedSeries SymmetricMultilinear::to_monomial(unsigned degree) const {
  if (degree < arity_) {
    throw Error("to_monomial: degree " + std::to_string(degree) + " below arity " + std::to_string(arity_));
  }
  TruncatedSeries f(m_, n_, degree, true);
  for (std::size_t e = 0; e < count_; ++e) {
    const MultiIndex& alpha = multiplicity(e);
    const double mult = static_cast<double>(multinomial(alpha));
    for (std::size_t j = 0; j < n_; ++j) f.set_coeff(j, alpha, entry(j, e) * mult);
  }
  return f;
}

SymmetricMultilinear from_monomial(const TruncatedSeries& fk, unsigned k) {
  require_homogeneous(fk, k);
  SymmetricMultilinear t(k, fk.domain_dim(), fk.codomain_dim());
  for (std::size_t e = 0; e < t.entry_count(); ++e) {
    const MultiIndex& alpha = t.multiplicity(e);
    // c_alpha * prod(alpha_i!) / k!  ==  c_alpha / multinomial(alpha)
    const double mult = static_cast<double>(multinomial(alpha));
    for (std::size_t j = 0; j < fk.codomain_dim(); ++j) t.entry(j, e) = fk.coeff(j, alpha) / mult;
  }
  return t;
}

SymmetricMultilinear from_monomial(const TruncatedSeries& fk) { return from_monomial(fk, infer_degree(fk)); }

SymmetricMultilinear polarize(const TruncatedSeries& fk, unsigned k) {
  if (k > kMaxPolarizationArity) {
    throw Error("polarize: arity " + std::to_string(k) + " exceeds the limit " +
                std::to_string(kMaxPolarizationArity));
  }
  require_homogeneous(fk, k);
  const std::size_t m = fk.domain_dim();
  SymmetricMultilinear t(k, m, fk.codomain_dim());
  const double inv_fact = 1.0 / static_cast<double>(factorial(k));
  std::vector<std::size_t> tuple;
  for (std::size_t e = 0; e < t.entry_count(); ++e) {
    const MultiIndex& alpha = t.multiplicity(e);
    tuple.clear();
    for (std::size_t i = 0; i < m; ++i) tuple.insert(tuple.end(), alpha[i], i);
    Vector acc(fk.codomain_dim());
    Vector point(m);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::fill(point.begin(), point.end(), Complex{});
      unsigned ones = 0;
      for (unsigned s = 0; s < k; ++s) {
        if (mask & (1u << s)) {
          point[tuple[s]] += 1.0;
          ++ones;
        }
      }
      const double sign = ((k - ones) % 2 == 0) ? 1.0 : -1.0;
      const Vector value = fk.evaluate(point);
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += sign * value[j];
    }
    for (std::size_t j = 0; j < acc.size(); ++j) t.entry(j, e) = acc[j] * inv_fact;
  }
  return t;
}

SymmetricMultilinear polarize(const TruncatedSeries& fk) { return polarize(fk, infer_degree(fk)); }

double max_entry_difference(const SymmetricMultilinear& a, const SymmetricMultilinear& b) {
  if (a.arity() != b.arity() || a.domain_dim() != b.domain_dim() || a.codomain_dim() != b.codomain_dim()) {
    throw Error("max_entry_difference: shape mismatch");
  }
  double err = 0.0;
  for (std::size_t j = 0; j < a.codomain_dim(); ++j) {
    for (std::size_t e = 0; e < a.entry_count(); ++e) err = std::max(err, std::abs(a.entry(j, e) - b.entry(j, e)));
  }
  return err;
}

}  // namespace dill
