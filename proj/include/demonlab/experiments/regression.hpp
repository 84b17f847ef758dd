// Copyright 2026 The demonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>

namespace demonlab::experiments {

struct RegressionResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;  // in [0, 1]
    std::size_t n_points = 0;
};

/// Ordinary least squares y = slope * x + intercept, R^2 = 1 - SS_res / SS_tot.
///
/// Constant y (SS_tot = 0 up to rounding) returns slope 0 and R^2 = 0 with
/// intercept = mean(y). Throws RegressionError on length mismatch, fewer
/// than two points, or x values that are all identical.
RegressionResult linear_regression(std::span<const double> xs, std::span<const double> ys);

/// Pearson correlation coefficient; 0 when either series is constant.
double pearson_correlation(std::span<const double> xs, std::span<const double> ys);

}  // namespace demonlab::experiments
