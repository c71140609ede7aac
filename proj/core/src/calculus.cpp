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

#include "dill/calculus.hpp"

#include <algorithm>
#include <string>

#include "dill/error.hpp"
#include "dill/multilinear.hpp"

namespace dill {

namespace {

struct CompositionPlan {
  unsigned degree;
  bool inner_vanishes_at_zero;
  bool polynomial;
};

CompositionPlan plan_composition(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g.codomain_dim() != f.domain_dim()) {
    throw Error("compose: inner series lands in C^" + std::to_string(g.codomain_dim()) +
                " but outer series is defined on C^" + std::to_string(f.domain_dim()));
  }
  const bool g0 = g.has_zero_constant_term();
  if (!g0 && !f.is_polynomial()) throw Error("constant term requires polynomial outer series");
  const unsigned d = f.is_polynomial() ? g.degree() : std::min(f.degree(), g.degree());
  const bool poly = f.is_polynomial() && g.is_polynomial() && effective_degree(f) * effective_degree(g) <= d;
  return {d, g0, poly};
}

// Scalar coefficient tables of the homogeneous parts g_k, one per component:
// parts[k][i] is the table of (g_k)_i over the basis of degree d.
std::vector<std::vector<std::vector<Complex>>> homogeneous_tables(const TruncatedSeries& g, unsigned d) {
  const TruncatedSeries gd = g.truncate(d);
  const auto& basis = gd.basis();
  std::vector<std::vector<std::vector<Complex>>> parts(d + 1);
  for (unsigned k = 0; k <= d; ++k) {
    parts[k].assign(gd.codomain_dim(), std::vector<Complex>(basis.size()));
    for (std::size_t i = 0; i < gd.codomain_dim(); ++i) {
      for (std::size_t a = basis.degree_begin(k); a < basis.degree_end(k); ++a) parts[k][i][a] = gd.at(i, a);
    }
  }
  return parts;
}

bool is_zero(const std::vector<Complex>& t) {
  return std::all_of(t.begin(), t.end(), [](const Complex& c) { return c == Complex{}; });
}

// Sums f~_n(g_{k_1}, ..., g_{k_n}) into `out` by expanding over ordered
// coordinate tuples (i_1, ..., i_n); `acc` carries prod_{l < slot} (g_{k_l})_{i_l}.
class MultilinearContraction {
 public:
  MultilinearContraction(const SymmetricMultilinear& t, const std::vector<std::vector<std::vector<Complex>>>& parts,
                         const MonomialBasis& basis, TruncatedSeries& out)
      : t_(t), parts_(parts), basis_(basis), out_(out), counts_(t.domain_dim(), 0) {}

  void run(std::span<const unsigned> composition) {
    composition_ = composition;
    std::vector<Complex> one(basis_.size());
    one[0] = 1.0;
    recurse(0, one);
  }

 private:
  void recurse(std::size_t slot, const std::vector<Complex>& acc) {
    if (slot == composition_.size()) {
      const MultiIndex alpha(counts_);
      for (std::size_t j = 0; j < out_.codomain_dim(); ++j) {
        const Complex w = t_.entry_for(j, alpha);
        if (w == Complex{}) continue;
        for (std::size_t a = 0; a < acc.size(); ++a) out_.at(j, a) += w * acc[a];
      }
      return;
    }
    const auto& factors = parts_[composition_[slot]];
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (is_zero(factors[i])) continue;
      std::vector<Complex> next(basis_.size());
      accumulate_product(basis_, acc, factors[i], next);
      ++counts_[i];
      recurse(slot + 1, next);
      --counts_[i];
    }
  }

  const SymmetricMultilinear& t_;
  const std::vector<std::vector<std::vector<Complex>>>& parts_;
  const MonomialBasis& basis_;
  TruncatedSeries& out_;
  std::vector<std::uint32_t> counts_;
  std::span<const unsigned> composition_;
};

}  // namespace

unsigned effective_degree(const TruncatedSeries& f) {
  unsigned d = 0;
  const auto& basis = f.basis();
  for (std::size_t j = 0; j < f.codomain_dim(); ++j) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
      if (f.at(j, a) != Complex{}) d = std::max(d, basis[a].degree());
    }
  }
  return d;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  const CompositionPlan plan = plan_composition(f, g);
  const unsigned d = plan.degree;
  TruncatedSeries h(g.domain_dim(), f.codomain_dim(), d);
  const auto parts = homogeneous_tables(g, d);
  // With g(0) = 0 every g_{k_i} in a nonzero term has k_i >= 1, so n <= d.
  const unsigned max_n = plan.inner_vanishes_at_zero ? std::min(d, f.degree()) : effective_degree(f);
  for (unsigned n = 0; n <= max_n; ++n) {
    const SymmetricMultilinear fn = from_monomial(f.homogeneous_part(n), n);
    MultilinearContraction contraction(fn, parts, h.basis(), h);
    for (unsigned m = 0; m <= d; ++m) {
      for (const auto& ks : weak_compositions(m, n)) {
        if (plan.inner_vanishes_at_zero && std::find(ks.begin(), ks.end(), 0u) != ks.end()) continue;
        contraction.run(ks);
      }
    }
  }
  h.set_polynomial(plan.polynomial);
  return h;
}

TruncatedSeries compose_naive(const TruncatedSeries& f, const TruncatedSeries& g) {
  const CompositionPlan plan = plan_composition(f, g);
  const unsigned d = plan.degree;
  const TruncatedSeries gd = g.truncate(d);
  const unsigned top = f.is_polynomial() ? effective_degree(f) : f.degree();

  // powers[i][k] = (g_i)^k truncated at d
  std::vector<std::vector<TruncatedSeries>> powers(gd.codomain_dim());
  for (std::size_t i = 0; i < gd.codomain_dim(); ++i) {
    TruncatedSeries one(gd.domain_dim(), 1, d);
    one.at(0, 0) = 1.0;
    powers[i].push_back(one);
    const TruncatedSeries gi = gd.component(i);
    for (unsigned k = 1; k <= top; ++k) powers[i].push_back(pointwise_multiply(powers[i].back(), gi));
  }

  TruncatedSeries h(g.domain_dim(), f.codomain_dim(), d);
  const auto& fb = f.basis();
  for (std::size_t a = 0; a < fb.size(); ++a) {
    const MultiIndex& alpha = fb[a];
    if (alpha.degree() > top) break;
    bool any = false;
    for (std::size_t j = 0; j < f.codomain_dim(); ++j) any = any || f.at(j, a) != Complex{};
    if (!any) continue;
    TruncatedSeries term = powers[0][alpha[0]];
    for (std::size_t i = 1; i < alpha.dim(); ++i) term = pointwise_multiply(term, powers[i][alpha[i]]);
    for (std::size_t j = 0; j < f.codomain_dim(); ++j) {
      const Complex c = f.at(j, a);
      if (c == Complex{}) continue;
      for (std::size_t b = 0; b < term.basis().size(); ++b) h.at(j, b) += c * term.at(0, b);
    }
  }
  h.set_polynomial(plan.polynomial);
  return h;
}

CurriedSeries::CurriedSeries(std::size_t outer_dim, std::size_t inner_dim, std::size_t codomain_dim, unsigned degree,
                             bool polynomial)
    : outer_(MonomialBasis::get(FiniteSpace(outer_dim).dim(), degree)),
      inner_dim_(FiniteSpace(inner_dim).dim()),
      codomain_dim_(FiniteSpace(codomain_dim).dim()),
      polynomial_(polynomial) {
  inner_.reserve(outer_->size());
  for (const auto& alpha : outer_->indices()) inner_.emplace_back(inner_dim, codomain_dim, degree - alpha.degree());
}

CurriedSeries::CurriedSeries(std::size_t outer_dim, unsigned degree, std::vector<TruncatedSeries> inner,
                             bool polynomial)
    : outer_(MonomialBasis::get(FiniteSpace(outer_dim).dim(), degree)), polynomial_(polynomial) {
  if (inner.size() != outer_->size()) {
    throw Error("inconsistent nesting: " + std::to_string(inner.size()) + " inner series for " +
                std::to_string(outer_->size()) + " outer indices");
  }
  if (inner.empty()) throw Error("inconsistent nesting: no inner series");
  inner_dim_ = inner.front().domain_dim();
  codomain_dim_ = inner.front().codomain_dim();
  for (std::size_t a = 0; a < inner.size(); ++a) {
    const MultiIndex& alpha = (*outer_)[a];
    const TruncatedSeries& s = inner[a];
    if (s.domain_dim() != inner_dim_ || s.codomain_dim() != codomain_dim_ || s.degree() != degree - alpha.degree()) {
      throw Error("inconsistent nesting at outer index " + alpha.to_string() + ": expected C^" +
                  std::to_string(inner_dim_) + " -> C^" + std::to_string(codomain_dim_) + " of degree " +
                  std::to_string(degree - alpha.degree()) + ", got C^" + std::to_string(s.domain_dim()) + " -> C^" +
                  std::to_string(s.codomain_dim()) + " of degree " + std::to_string(s.degree()));
    }
  }
  inner_ = std::move(inner);
}

TruncatedSeries CurriedSeries::evaluate_outer(std::span<const Complex> x) const {
  if (x.size() != outer_dim()) {
    throw Error("evaluate_outer: point has length " + std::to_string(x.size()) + ", expected " +
                std::to_string(outer_dim()));
  }
  TruncatedSeries r(inner_dim_, codomain_dim_, degree());
  for (std::size_t a = 0; a < outer_->size(); ++a) {
    const MultiIndex& alpha = (*outer_)[a];
    Complex w = 1.0;
    for (std::size_t i = 0; i < alpha.dim(); ++i) {
      for (std::uint32_t p = 0; p < alpha[i]; ++p) w *= x[i];
    }
    const TruncatedSeries& s = inner_[a];
    for (std::size_t j = 0; j < codomain_dim_; ++j) {
      // The inner basis is a graded prefix of r's basis.
      for (std::size_t b = 0; b < s.basis().size(); ++b) r.at(j, b) += w * s.at(j, b);
    }
  }
  return r;
}

CurriedSeries curry(const TruncatedSeries& f, std::size_t split) {
  const std::size_t m = f.domain_dim();
  if (split == 0 || split >= m) {
    throw Error("curry: split " + std::to_string(split) + " must leave both factors nonempty in C^" +
                std::to_string(m));
  }
  CurriedSeries nest(split, m - split, f.codomain_dim(), f.degree(), f.is_polynomial());
  const auto& basis = f.basis();
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const MultiIndex& gamma = basis[c];
    const MultiIndex alpha = gamma.slice(0, split);
    const MultiIndex beta = gamma.slice(split, m - split);
    TruncatedSeries& inner = nest.inner(nest.outer_basis().index_of(alpha));
    const std::size_t b = inner.basis().index_of(beta);
    for (std::size_t j = 0; j < f.codomain_dim(); ++j) inner.at(j, b) = f.at(j, c);
  }
  return nest;
}

TruncatedSeries uncurry(const CurriedSeries& nest) {
  // Re-validate: a nest assembled by hand must still be consistent.
  std::vector<TruncatedSeries> inners;
  inners.reserve(nest.outer_basis().size());
  for (std::size_t a = 0; a < nest.outer_basis().size(); ++a) inners.push_back(nest.inner(a));
  const CurriedSeries checked(nest.outer_dim(), nest.degree(), std::move(inners), nest.is_polynomial());

  const std::size_t m1 = checked.outer_dim();
  TruncatedSeries f(m1 + checked.inner_dim(), checked.codomain_dim(), checked.degree(), checked.is_polynomial());
  for (std::size_t a = 0; a < checked.outer_basis().size(); ++a) {
    const MultiIndex& alpha = checked.outer_basis()[a];
    const TruncatedSeries& inner = checked.inner(a);
    for (std::size_t b = 0; b < inner.basis().size(); ++b) {
      const std::size_t c = f.basis().index_of(MultiIndex::concat(alpha, inner.basis()[b]));
      for (std::size_t j = 0; j < f.codomain_dim(); ++j) f.at(j, c) = inner.at(j, b);
    }
  }
  return f;
}

CurriedSeries curry_via_multilinear(const TruncatedSeries& f, std::size_t split) {
  const std::size_t m = f.domain_dim();
  if (split == 0 || split >= m) {
    throw Error("curry: split " + std::to_string(split) + " must leave both factors nonempty in C^" +
                std::to_string(m));
  }
  const std::size_t m1 = split;
  const std::size_t m2 = m - split;
  CurriedSeries nest(m1, m2, f.codomain_dim(), f.degree(), f.is_polynomial());

  for (unsigned k = 0; k <= f.degree(); ++k) {
    const SymmetricMultilinear fk = from_monomial(f.homogeneous_part(k), k);
    for (unsigned nx = 0; nx <= k; ++nx) {
      const double weight = static_cast<double>(binomial(k, nx));
      // Odometer over ordered tuples: x-slots range over [0, m1), y-slots over [0, m2).
      std::vector<std::size_t> tuple(k, 0);
      while (true) {
        std::vector<Vector> args;
        args.reserve(k);
        std::vector<std::uint32_t> ax(m1, 0);
        std::vector<std::uint32_t> by(m2, 0);
        for (unsigned s = 0; s < k; ++s) {
          Vector e(m);
          if (s < nx) {
            e[tuple[s]] = 1.0;
            ++ax[tuple[s]];
          } else {
            e[m1 + tuple[s]] = 1.0;
            ++by[tuple[s]];
          }
          args.push_back(std::move(e));
        }
        const Vector value = fk.apply(args);
        TruncatedSeries& inner = nest.inner(nest.outer_basis().index_of(MultiIndex(ax)));
        const std::size_t b = inner.basis().index_of(MultiIndex(by));
        for (std::size_t j = 0; j < f.codomain_dim(); ++j) inner.at(j, b) += weight * value[j];

        unsigned s = 0;
        for (; s < k; ++s) {
          const std::size_t limit = s < nx ? m1 : m2;
          if (++tuple[s] < limit) break;
          tuple[s] = 0;
        }
        if (s == k) break;
      }
    }
  }
  return nest;
}

double max_nest_difference(const CurriedSeries& a, const CurriedSeries& b) {
  if (a.outer_dim() != b.outer_dim() || a.inner_dim() != b.inner_dim() || a.codomain_dim() != b.codomain_dim() ||
      a.degree() != b.degree()) {
    throw Error("max_nest_difference: shape mismatch");
  }
  double err = 0.0;
  for (std::size_t i = 0; i < a.outer_basis().size(); ++i) err = std::max(err, max_coeff_difference(a.inner(i), b.inner(i)));
  return err;
}

TruncatedSeries derivative_series(const TruncatedSeries& f) {
  if (f.degree() == 0) throw Error("derivative_series: requires degree >= 1");
  const std::size_t m = f.domain_dim();
  const std::size_t n = f.codomain_dim();
  TruncatedSeries df(m, n * m, f.degree() - 1, f.is_polynomial());
  for (std::size_t i = 0; i < m; ++i) {
    const TruncatedSeries di = f.partial_derivative(i);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0; a < di.basis().size(); ++a) df.at(j * m + i, a) = di.at(j, a);
    }
  }
  return df;
}

}  // namespace dill
