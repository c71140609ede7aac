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


#include "dill/exponential.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <string>
#include <utility>

#include "dill/error.hpp"

namespace dill {

namespace {

MultiIndex concat_all(std::span<const MultiIndex> parts) {
  std::vector<std::uint32_t> e;
  for (const auto& p : parts) e.insert(e.end(), p.exponents().begin(), p.exponents().end());
  return MultiIndex(std::move(e));
}

void enumerate_tuples(const std::vector<std::size_t>& dims, std::size_t slot, unsigned budget,
                      std::vector<MultiIndex>& prefix, std::vector<std::vector<MultiIndex>>& out) {
  if (slot == dims.size()) {
    out.push_back(prefix);
    return;
  }
  const auto basis = MonomialBasis::get(dims[slot], budget);
  for (std::size_t i = 0; i < basis->size(); ++i) {
    prefix.push_back((*basis)[i]);
    enumerate_tuples(dims, slot + 1, budget - (*basis)[i].degree(), prefix, out);
    prefix.pop_back();
  }
}

// All beta with beta <= gamma componentwise.
void sub_indices(const MultiIndex& gamma, std::size_t i, std::vector<std::uint32_t>& cur,
                 const std::function<void(const MultiIndex&)>& visit) {
  if (i == gamma.dim()) {
    visit(MultiIndex(cur));
    return;
  }
  for (std::uint32_t k = 0; k <= gamma[i]; ++k) {
    cur[i] = k;
    sub_indices(gamma, i + 1, cur, visit);
  }
}

void for_each_sub_index(const MultiIndex& gamma, const std::function<void(const MultiIndex&)>& visit) {
  std::vector<std::uint32_t> cur(gamma.dim(), 0);
  sub_indices(gamma, 0, cur, visit);
}

const TensorBasis& single_bang_basis(const Space& s, const char* what) {
  if (s.kind != Space::Kind::kBang || s.dims.size() != 1) {
    throw Error(std::string(what) + ": expected a single exponential space, got " + s.label());
  }
  return *TensorBasis::get(s.dims, s.degree);
}

Complex monomial(std::span<const Complex> x, const MultiIndex& alpha) {
  Complex r = 1.0;
  for (std::size_t i = 0; i < alpha.dim(); ++i) {
    for (std::uint32_t k = 0; k < alpha[i]; ++k) r *= x[i];
  }
  return r;
}

}  // namespace

// ---- TensorBasis -------------------------------------------------------

TensorBasis::TensorBasis(std::vector<std::size_t> dims, unsigned degree) : dims_(std::move(dims)), degree_(degree) {
  for (std::size_t d : dims_) {
    if (d == 0) throw Error("tensor factor over the empty space");
  }
  std::vector<MultiIndex> prefix;
  enumerate_tuples(dims_, 0, degree_, prefix, tuples_);
  for (std::size_t i = 0; i < tuples_.size(); ++i) lookup_.emplace(concat_all(tuples_[i]), i);
}

std::shared_ptr<const TensorBasis> TensorBasis::get(const std::vector<std::size_t>& dims, unsigned degree) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<std::size_t>, unsigned>, std::shared_ptr<const TensorBasis>> cache;
  const std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{dims, degree}];
  if (!slot) slot = std::make_shared<const TensorBasis>(dims, degree);
  return slot;
}

std::optional<std::size_t> TensorBasis::find(std::span<const MultiIndex> parts) const {
  if (parts.size() != dims_.size()) return std::nullopt;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].dim() != dims_[i]) return std::nullopt;
  }
  auto it = lookup_.find(concat_all(parts));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t TensorBasis::index_of(std::span<const MultiIndex> parts) const {
  if (auto i = find(parts)) return *i;
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " (x) ") + p.to_string();
  throw Error("tuple " + s + " is not in the tensor basis at degree " + std::to_string(degree_));
}

// ---- Space -------------------------------------------------------------

Space Space::vector(std::size_t dim) {
  if (dim == 0) throw Error("vector space of dimension 0");
  return Space{Kind::kVector, {dim}, 0};
}

Space Space::bang(std::vector<std::size_t> dims, unsigned degree) {
  for (std::size_t d : dims) {
    if (d == 0) throw Error("exponential of the empty space");
  }
  return Space{Kind::kBang, std::move(dims), degree};
}

std::size_t Space::size() const {
  if (kind == Kind::kVector) return dims.at(0);
  return TensorBasis::get(dims, degree)->size();
}

std::string Space::label() const {
  if (kind == Kind::kVector) return "C^" + std::to_string(dims.at(0));
  std::string s;
  for (std::size_t d : dims) s += (s.empty() ? "" : " (x) ") + ("!C^" + std::to_string(d));
  if (dims.empty()) s = "C";
  if (dims.size() > 1) s = "(" + s + ")";
  return s + "[D=" + std::to_string(degree) + "]";
}

// ---- LinearOperator ----------------------------------------------------

LinearOperator::LinearOperator(Space source, Space target)
    : source_(std::move(source)), target_(std::move(target)), rows_(target_.size()), cols_(source_.size()) {
  if (cols_ != 0 && rows_ > kMaxOperatorEntries / cols_) {
    throw Error("operator " + source_.label() + " -> " + target_.label() + " has " + std::to_string(rows_) + " x " +
                std::to_string(cols_) + " entries, above the limit " + std::to_string(kMaxOperatorEntries));
  }
  data_.assign(rows_ * cols_, Complex{});
}

LinearOperator LinearOperator::identity(const Space& space) {
  LinearOperator op(space, space);
  for (std::size_t i = 0; i < op.rows(); ++i) op.at(i, i) = 1.0;
  return op;
}

Vector LinearOperator::apply(std::span<const Complex> v) const {
  if (v.size() != cols_) {
    throw Error("operator on " + source_.label() + " applied to a vector of length " + std::to_string(v.size()));
  }
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < cols_; ++c) acc += data_[r * cols_ + c] * v[c];
    out[r] = acc;
  }
  return out;
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  if (!(b.target() == a.source())) {
    throw Error("cannot compose " + a.source().label() + " -> " + a.target().label() + " after " +
                b.source().label() + " -> " + b.target().label());
  }
  LinearOperator out(b.source(), a.target());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex x = a.at(r, k);
      if (x == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, c) += x * b.at(k, c);
    }
  }
  return out;
}

double max_difference(const LinearOperator& a, const LinearOperator& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) {
    throw Error("max_difference: operators " + a.source().label() + " -> " + a.target().label() + " and " +
                b.source().label() + " -> " + b.target().label() + " differ in shape");
  }
  double err = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) err = std::max(err, std::abs(a.data()[i] - b.data()[i]));
  return err;
}

LinearOperator tensor_product(std::span<const LinearOperator> factors, unsigned degree) {
  std::vector<std::size_t> src_dims, dst_dims;
  for (const auto& f : factors) {
    if (f.source().kind != Space::Kind::kBang || f.target().kind != Space::Kind::kBang ||
        f.source().degree != degree || f.target().degree != degree) {
      throw Error("tensor_product: factor " + f.source().label() + " -> " + f.target().label() +
                  " is not a map of exponentials at degree " + std::to_string(degree));
    }
    src_dims.insert(src_dims.end(), f.source().dims.begin(), f.source().dims.end());
    dst_dims.insert(dst_dims.end(), f.target().dims.begin(), f.target().dims.end());
  }
  LinearOperator out(Space::bang(src_dims, degree), Space::bang(dst_dims, degree));
  const auto src = TensorBasis::get(src_dims, degree);
  const auto dst = TensorBasis::get(dst_dims, degree);

  std::vector<std::vector<std::pair<std::size_t, Complex>>> columns(factors.size());
  std::vector<MultiIndex> target_parts;
  for (std::size_t s = 0; s < src->size(); ++s) {
    const auto& parts = (*src)[s];
    std::size_t at = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      const std::size_t k = f.source().dims.size();
      const auto fsrc = TensorBasis::get(f.source().dims, degree);
      const std::size_t col = fsrc->index_of(std::span<const MultiIndex>(parts).subspan(at, k));
      at += k;
      columns[i].clear();
      for (std::size_t r = 0; r < f.rows(); ++r) {
        if (f.at(r, col) != Complex{}) columns[i].emplace_back(r, f.at(r, col));
      }
    }
    // Cartesian product of the factor columns, pruned by total degree.
    std::function<void(std::size_t, unsigned, Complex)> walk = [&](std::size_t i, unsigned deg, Complex w) {
      if (i == factors.size()) {
        out.at(dst->index_of(target_parts), s) += w;
        return;
      }
      const auto fdst = TensorBasis::get(factors[i].target().dims, degree);
      for (const auto& [r, v] : columns[i]) {
        const auto& tparts = (*fdst)[r];
        unsigned d = deg;
        for (const auto& p : tparts) d += p.degree();
        if (d > degree) continue;
        target_parts.insert(target_parts.end(), tparts.begin(), tparts.end());
        walk(i + 1, d, w * v);
        target_parts.resize(target_parts.size() - tparts.size());
      }
    };
    target_parts.clear();
    walk(0, 0, 1.0);
  }
  return out;
}

LinearOperator swap_operator(std::size_t a, std::size_t b, unsigned degree) {
  LinearOperator out(Space::bang({a, b}, degree), Space::bang({b, a}, degree));
  const auto src = TensorBasis::get({a, b}, degree);
  const auto dst = TensorBasis::get({b, a}, degree);
  for (std::size_t s = 0; s < src->size(); ++s) {
    const MultiIndex swapped[2] = {(*src)[s][1], (*src)[s][0]};
    out.at(dst->index_of(swapped), s) = 1.0;
  }
  return out;
}

LinearOperator permute_target_factors(const LinearOperator& op, std::span<const std::size_t> perm) {
  const Space& t = op.target();
  if (t.kind != Space::Kind::kBang || perm.size() != t.dims.size()) {
    throw Error("permute_target_factors: permutation does not match " + t.label());
  }
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::size_t> dims(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || seen[perm[i]]) throw Error("permute_target_factors: not a permutation");
    seen[perm[i]] = true;
    dims[i] = t.dims[perm[i]];
  }
  LinearOperator out(op.source(), Space::bang(dims, t.degree));
  const auto src = TensorBasis::get(t.dims, t.degree);
  const auto dst = TensorBasis::get(dims, t.degree);
  std::vector<MultiIndex> parts(perm.size());
  for (std::size_t r = 0; r < src->size(); ++r) {
    for (std::size_t i = 0; i < perm.size(); ++i) parts[i] = (*src)[r][perm[i]];
    const std::size_t nr = dst->index_of(parts);
    for (std::size_t c = 0; c < op.cols(); ++c) out.at(nr, c) = op.at(r, c);
  }
  return out;
}

// ---- Distribution ------------------------------------------------------

Distribution::Distribution(std::size_t dim, unsigned degree)
    : basis_(MonomialBasis::get(FiniteSpace(dim).dim(), degree)), coeffs_(basis_->size()) {}

Distribution::Distribution(std::size_t dim, unsigned degree, std::span<const Complex> coeffs)
    : Distribution(dim, degree) {
  if (coeffs.size() != coeffs_.size()) {
    throw Error("distribution on C^" + std::to_string(dim) + " at degree " + std::to_string(degree) + " needs " +
                std::to_string(coeffs_.size()) + " coefficients, got " + std::to_string(coeffs.size()));
  }
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

Complex Distribution::coeff(const MultiIndex& alpha) const {
  if (alpha.dim() != dim()) throw Error("multi-index " + alpha.to_string() + " has the wrong dimension");
  if (auto i = basis_->find(alpha)) return coeffs_[*i];
  return Complex{};
}

void Distribution::set_coeff(const MultiIndex& alpha, Complex value) { coeffs_[basis_->index_of(alpha)] = value; }

Vector Distribution::apply(const TruncatedSeries& f) const {
  if (f.domain_dim() != dim()) {
    throw Error("distribution on C^" + std::to_string(dim()) + " applied to a series on C^" +
                std::to_string(f.domain_dim()));
  }
  Vector out(f.codomain_dim());
  for (std::size_t a = 0; a < basis_->size(); ++a) {
    if (coeffs_[a] == Complex{}) continue;
    const MultiIndex& alpha = (*basis_)[a];
    if (alpha.degree() > f.degree() && !f.is_polynomial()) {
      throw Error("distribution reaches degree " + std::to_string(alpha.degree()) +
                  " but the series is only known up to degree " + std::to_string(f.degree()));
    }
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs_[a] * f.coeff(j, alpha);
  }
  return out;
}

Complex Distribution::apply_scalar(const TruncatedSeries& f) const {
  if (f.codomain_dim() != 1) throw Error("apply_scalar needs a scalar-valued series");
  return apply(f)[0];
}

Distribution Distribution::operator+(const Distribution& other) const {
  if (dim() != other.dim() || degree() != other.degree()) throw Error("adding distributions of different shape");
  Distribution out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

Distribution Distribution::scaled(Complex s) const {
  Distribution out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

bool Distribution::operator==(const Distribution& other) const {
  return dim() == other.dim() && degree() == other.degree() && coeffs_ == other.coeffs_;
}

double max_difference(const Distribution& a, const Distribution& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) throw Error("max_difference: distributions differ in shape");
  double err = 0.0;
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    err = std::max(err, std::abs(a.at(i) - b.at(i)));
  }
  return err;
}

Distribution apply(const LinearOperator& op, const Distribution& d) {
  if (!(op.source() == d.space())) {
    throw Error("operator on " + op.source().label() + " applied to an element of " + d.space().label());
  }
  single_bang_basis(op.target(), "apply");
  const Vector v = op.apply(d.coefficients());
  return Distribution(op.target().dims[0], op.target().degree, v);
}

Distribution dirac(std::span<const Complex> x, unsigned degree) {
  Distribution d(x.size(), degree);
  for (std::size_t a = 0; a < d.basis().size(); ++a) d.at(a) = monomial(x, d.basis()[a]);
  return d;
}

Distribution theta(unsigned n, std::span<const Complex> x, unsigned degree) {
  if (n > degree) {
    throw Error("theta_" + std::to_string(n) + " does not fit degree " + std::to_string(degree));
  }
  Distribution d(x.size(), degree);
  const double nf = static_cast<double>(factorial(n));
  const auto& basis = d.basis();
  for (std::size_t a = basis.degree_begin(n); a < basis.degree_end(n); ++a) d.at(a) = nf * monomial(x, basis[a]);
  return d;
}

Distribution codereliction(std::span<const Complex> v, unsigned degree) {
  if (degree == 0) throw Error("codereliction needs degree >= 1");
  Distribution d(v.size(), degree);
  for (std::size_t i = 0; i < v.size(); ++i) d.set_coeff(MultiIndex::unit(v.size(), i), v[i]);
  return d;
}

Distribution theta_inductive(unsigned n, std::span<const Complex> x, unsigned degree) {
  if (n > degree) {
    throw Error("theta_" + std::to_string(n) + " does not fit degree " + std::to_string(degree));
  }
  Distribution t = dirac(std::vector<Complex>(x.size()), degree);
  if (n == 0) return t;
  const Distribution t1 = codereliction(x, degree);
  t = t1;
  for (unsigned k = 1; k < n; ++k) t = convolve(t1, t);
  return t;
}

Distribution convolve(const Distribution& a, const Distribution& b) {
  if (a.dim() != b.dim()) throw Error("convolve: distributions over different spaces");
  const unsigned degree = std::min(a.degree(), b.degree());
  Distribution out(a.dim(), degree);
  const auto& basis = out.basis();
  for (std::size_t g = 0; g < basis.size(); ++g) {
    const MultiIndex& gamma = basis[g];
    Complex acc{};
    for_each_sub_index(gamma, [&](const MultiIndex& alpha) {
      const MultiIndex beta = gamma - alpha;
      const Complex x = a.coeff(alpha) * b.coeff(beta);
      if (x != Complex{}) acc += static_cast<double>(binom_componentwise(alpha, beta)) * x;
    });
    out.at(g) = acc;
  }
  return out;
}

double delta_taylor_error(std::span<const Complex> x, unsigned degree) {
  const Distribution delta = dirac(x, degree);
  Distribution sum(x.size(), degree);
  for (unsigned n = 0; n <= degree; ++n) {
    sum = sum + theta(n, x, degree).scaled(1.0 / static_cast<double>(factorial(n)));
  }
  double err = 0.0;
  for (std::size_t i = 0; i < delta.coefficients().size(); ++i) {
    err = std::max(err, std::abs(sum.at(i) - delta.at(i)) / std::max(1.0, std::abs(delta.at(i))));
  }
  return err;
}

bool delta_taylor_check(std::span<const Complex> x, unsigned degree, double tolerance) {
  return delta_taylor_error(x, degree) <= tolerance;
}

// ---- structure maps ----------------------------------------------------

LinearOperator bang_map(const TruncatedSeries& f, unsigned degree) {
  TruncatedSeries g = f;
  if (f.degree() >= degree) {
    g = f.truncate(degree);
  } else if (f.is_polynomial()) {
    g = f.with_degree(degree);
  } else {
    throw Error("!f at degree " + std::to_string(degree) + " needs a series of degree >= " +
                std::to_string(degree) + " or a polynomial; got degree " + std::to_string(f.degree()));
  }
  const std::size_t m = f.domain_dim();
  const std::size_t n = f.codomain_dim();
  LinearOperator out(Space::bang({m}, degree), Space::bang({n}, degree));
  const auto& src = g.basis();
  const auto dst = MonomialBasis::get(n, degree);

  // powers[b] = coefficients of f^beta_b over src, built by peeling one factor.
  std::vector<Vector> powers(dst->size(), Vector(src.size()));
  powers[0][0] = 1.0;
  for (std::size_t b = 1; b < dst->size(); ++b) {
    const MultiIndex& beta = (*dst)[b];
    std::size_t j = 0;
    while (beta[j] == 0) ++j;
    const std::size_t prev = dst->index_of(beta - MultiIndex::unit(n, j));
    std::span<const Complex> fj = g.coefficients().subspan(j * src.size(), src.size());
    accumulate_product(src, powers[prev], fj, powers[b]);
  }
  for (std::size_t b = 0; b < dst->size(); ++b) {
    for (std::size_t a = 0; a < src.size(); ++a) out.at(b, a) = powers[b][a];
  }
  return out;
}

TruncatedSeries as_linear_series(const LinearOperator& op, unsigned degree) {
  TruncatedSeries f = TruncatedSeries::linear(op.rows(), op.cols(), op.data(), degree);
  f.set_polynomial(true);
  return f;
}

LinearOperator counit(std::size_t dim, unsigned degree) {
  LinearOperator out(Space::bang({dim}, degree), Space::vector(dim));
  if (degree == 0) return out;
  const auto basis = MonomialBasis::get(dim, degree);
  for (std::size_t i = 0; i < dim; ++i) out.at(i, basis->index_of(MultiIndex::unit(dim, i))) = 1.0;
  return out;
}

LinearOperator comultiplication(std::size_t dim, unsigned outer_degree, unsigned inner_degree) {
  const auto inner = MonomialBasis::get(FiniteSpace(dim).dim(), inner_degree);
  const std::size_t n = inner->size();
  std::uint64_t rows = 0;
  bool too_big = false;
  try {
    rows = binomial(n + outer_degree, outer_degree);
    too_big = rows > kMaxComultiplicationEntries / n;
  } catch (const Error&) {
    too_big = true;
  }
  if (too_big) {
    throw Error("comultiplication on C^" + std::to_string(dim) + " at degrees (" + std::to_string(outer_degree) +
                ", " + std::to_string(inner_degree) + ") exceeds the size bound of " +
                std::to_string(kMaxComultiplicationEntries) + " matrix entries");
  }
  LinearOperator out(Space::bang({dim}, inner_degree), Space::bang({n}, outer_degree));
  const auto outer = MonomialBasis::get(n, outer_degree);
  std::vector<std::uint32_t> s(dim);
  for (std::size_t r = 0; r < outer->size(); ++r) {
    const MultiIndex& big = (*outer)[r];
    std::fill(s.begin(), s.end(), 0u);
    unsigned total = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (big[a] == 0) continue;
      const MultiIndex& alpha = (*inner)[a];
      for (std::size_t i = 0; i < dim; ++i) s[i] += big[a] * alpha[i];
      total += big[a] * alpha.degree();
    }
    if (total <= inner_degree) out.at(r, inner->index_of(MultiIndex(s))) = 1.0;
  }
  return out;
}

LinearOperator contraction(std::size_t dim, unsigned degree) {
  LinearOperator out(Space::bang({dim}, degree), Space::bang({dim, dim}, degree));
  const auto src = MonomialBasis::get(dim, degree);
  const auto dst = TensorBasis::get({dim, dim}, degree);
  for (std::size_t g = 0; g < src->size(); ++g) {
    const MultiIndex& gamma = (*src)[g];
    for_each_sub_index(gamma, [&](const MultiIndex& alpha) {
      const MultiIndex parts[2] = {alpha, gamma - alpha};
      out.at(dst->index_of(parts), g) = 1.0;
    });
  }
  return out;
}

LinearOperator weakening(std::size_t dim, unsigned degree) {
  LinearOperator out(Space::bang({dim}, degree), Space::bang({}, degree));
  out.at(0, 0) = 1.0;
  return out;
}

LinearOperator cocontraction(std::size_t dim, unsigned degree) {
  LinearOperator out(Space::bang({dim, dim}, degree), Space::bang({dim}, degree));
  const auto src = TensorBasis::get({dim, dim}, degree);
  const auto dst = MonomialBasis::get(dim, degree);
  for (std::size_t s = 0; s < src->size(); ++s) {
    const auto& p = (*src)[s];
    out.at(dst->index_of(p[0] + p[1]), s) = static_cast<double>(binom_componentwise(p[0], p[1]));
  }
  return out;
}

LinearOperator coweakening(std::size_t dim, unsigned degree) {
  LinearOperator out(Space::bang({}, degree), Space::bang({dim}, degree));
  out.at(0, 0) = 1.0;
  return out;
}

LinearOperator monoidal(std::size_t a, std::size_t b, unsigned degree) {
  LinearOperator out(Space::bang({a, b}, degree), Space::bang({a + b}, degree));
  const auto src = TensorBasis::get({a, b}, degree);
  const auto dst = MonomialBasis::get(a + b, degree);
  for (std::size_t s = 0; s < src->size(); ++s) {
    out.at(dst->index_of(MultiIndex::concat((*src)[s][0], (*src)[s][1])), s) = 1.0;
  }
  return out;
}

LinearOperator monoidal_inverse(std::size_t a, std::size_t b, unsigned degree) {
  LinearOperator out(Space::bang({a + b}, degree), Space::bang({a, b}, degree));
  const auto src = MonomialBasis::get(a + b, degree);
  const auto dst = TensorBasis::get({a, b}, degree);
  for (std::size_t g = 0; g < src->size(); ++g) {
    const MultiIndex& gamma = (*src)[g];
    const MultiIndex parts[2] = {gamma.slice(0, a), gamma.slice(a, b)};
    out.at(dst->index_of(parts), g) = 1.0;
  }
  return out;
}

LinearOperator codereliction_operator(std::size_t dim, unsigned degree) {
  if (degree == 0) throw Error("codereliction needs degree >= 1");
  LinearOperator out(Space::vector(dim), Space::bang({dim}, degree));
  const auto basis = MonomialBasis::get(dim, degree);
  for (std::size_t i = 0; i < dim; ++i) out.at(basis->index_of(MultiIndex::unit(dim, i)), i) = 1.0;
  return out;
}

LinearOperator hat(const TruncatedSeries& f) {
  LinearOperator out(Space::bang({f.domain_dim()}, f.degree()), Space::vector(f.codomain_dim()));
  for (std::size_t j = 0; j < f.codomain_dim(); ++j) {
    for (std::size_t a = 0; a < f.basis().size(); ++a) out.at(j, a) = f.at(j, a);
  }
  return out;
}

TruncatedSeries check(const LinearOperator& g) {
  single_bang_basis(g.source(), "check");
  if (g.target().kind != Space::Kind::kVector) {
    throw Error("check: target must be a plain vector space, got " + g.target().label());
  }
  TruncatedSeries f(g.source().dims[0], g.rows(), g.source().degree);
  for (std::size_t j = 0; j < g.rows(); ++j) {
    for (std::size_t a = 0; a < g.cols(); ++a) f.at(j, a) = g.at(j, a);
  }
  return f;
}

}  // namespace dill
