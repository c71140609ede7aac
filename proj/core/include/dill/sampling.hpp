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


// Seeded random inputs for property checks.

#ifndef DILL_SAMPLING_HPP
#define DILL_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "dill/exponential.hpp"
#include "dill/series.hpp"

namespace dill {

using Rng = std::mt19937_64;

/// Independent stream for (seed, label); stable across runs and platforms.
Rng make_rng(std::uint64_t seed, std::string_view label);

/// Uniform integer in [lo, hi].
std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi);
/// Uniform on the closed complex unit disk.
Complex random_disk(Rng& rng);
/// Coordinates uniform on the disk of the given radius.
Vector random_vector(Rng& rng, std::size_t dim, double radius);
/// Coefficients uniform on the unit disk scaled by 1 / (|alpha|! + 1).
TruncatedSeries random_series(Rng& rng, std::size_t domain_dim, std::size_t codomain_dim, unsigned degree,
                              bool zero_constant = false);
/// Only degree-k coefficients, unit-disk distributed (no scaling).
TruncatedSeries random_homogeneous(Rng& rng, std::size_t domain_dim, std::size_t codomain_dim, unsigned k,
                                   unsigned degree);
/// A polynomial of the given effective degree, flagged as such.
TruncatedSeries random_polynomial(Rng& rng, std::size_t domain_dim, std::size_t codomain_dim, unsigned degree,
                                  bool zero_constant = false);
Distribution random_distribution(Rng& rng, std::size_t dim, unsigned degree);

}  // namespace dill

#endif  // DILL_SAMPLING_HPP
