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


#include "dill/sampling.hpp"

#include <cmath>
#include <numbers>

namespace dill {

Rng make_rng(std::uint64_t seed, std::string_view label) {
  // FNV-1a over the label, mixed with the seed through splitmix64.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  z ^= z >> 31;
  return Rng(z);
}

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

namespace {

double unit_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Complex random_disk(Rng& rng) {
  const double r = std::sqrt(unit_real(rng));
  const double t = 2.0 * std::numbers::pi * unit_real(rng);
  return std::polar(r, t);
}

Vector random_vector(Rng& rng, std::size_t dim, double radius) {
  Vector v(dim);
  for (auto& c : v) c = radius * random_disk(rng);
  return v;
}

TruncatedSeries random_series(Rng& rng, std::size_t domain_dim, std::size_t codomain_dim, unsigned degree,
                              bool zero_constant) {
  TruncatedSeries f(domain_dim, codomain_dim, degree);
  const auto& basis = f.basis();
  for (std::size_t j = 0; j < codomain_dim; ++j) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const unsigned k = basis[a].degree();
      if (k == 0 && zero_constant) continue;
      f.at(j, a) = random_disk(rng) / (static_cast<double>(factorial(k)) + 1.0);
    }
  }
  return f;
}

TruncatedSeries random_homogeneous(Rng& rng, std::size_t domain_dim, std::size_t codomain_dim, unsigned k,
                                   unsigned degree) {
  TruncatedSeries f(domain_dim, codomain_dim, degree, true);
  const auto& basis = f.basis();
  for (std::size_t j = 0; j < codomain_dim; ++j) {
    for (std::size_t a = basis.degree_begin(k); a < basis.degree_end(k); ++a) f.at(j, a) = random_disk(rng);
  }
  return f;
}

TruncatedSeries random_polynomial(Rng& rng, std::size_t domain_dim, std::size_t codomain_dim, unsigned degree,
                                  bool zero_constant) {
  TruncatedSeries f = random_series(rng, domain_dim, codomain_dim, degree, zero_constant);
  f.set_polynomial(true);
  return f;
}

Distribution random_distribution(Rng& rng, std::size_t dim, unsigned degree) {
  Distribution d(dim, degree);
  for (std::size_t i = 0; i < d.coefficients().size(); ++i) d.at(i) = random_disk(rng);
  return d;
}

}  // namespace dill
