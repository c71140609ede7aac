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


// JSON serialization.
//
// Series:       {"domain_dim", "codomain_dim", "degree", ["polynomial": true],
//                "coeffs": [{"out", "alpha", "re", "im"}, ...]}
// Distribution: {"dim", "degree", "coeffs": [{"alpha", "re", "im"}, ...]}
// Operator:     {"source", "target", "rows", "cols", "re": [...], "im": [...]}
//               with spaces {"kind": "vector", "dim"} or
//               {"kind": "bang", "dims": [...], "degree"}; row-major data.
// Nest:         {"outer_dim", "inner_dim", "codomain_dim", "degree",
//                "inner": [{"alpha", "series"}, ...]}
//
// Only nonzero coefficients are written; readers treat missing ones as zero.

#ifndef DILL_IO_HPP
#define DILL_IO_HPP

#include <span>
#include <string>

#include "dill/calculus.hpp"
#include "dill/exponential.hpp"
#include "dill/laws.hpp"
#include "dill/series.hpp"

namespace dill {

std::string series_to_json(const TruncatedSeries& f, int indent = -1);
TruncatedSeries series_from_json(const std::string& text);

std::string distribution_to_json(const Distribution& d, int indent = -1);
Distribution distribution_from_json(const std::string& text);

std::string operator_to_json(const LinearOperator& op, int indent = -1);
LinearOperator operator_from_json(const std::string& text);

std::string nest_to_json(const CurriedSeries& nest, int indent = -1);

/// Complex scalar: a plain number when the imaginary part is zero, else [re, im].
std::string scalar_to_json(Complex z);
std::string vector_to_json(std::span<const Complex> v);

/// One JSON object per line.
std::string report_to_json_line(const LawReport& report);

}  // namespace dill

#endif  // DILL_IO_HPP
