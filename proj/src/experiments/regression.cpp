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

#include "demonlab/experiments/regression.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "demonlab/common/error.hpp"

namespace demonlab::experiments {

namespace {

struct Moments {
    double mean_x = 0.0;
    double mean_y = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
};

Moments centered_moments(std::span<const double> xs, std::span<const double> ys) {
    Moments m;
    const auto n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        m.mean_x += xs[i];
        m.mean_y += ys[i];
    }
    m.mean_x /= n;
    m.mean_y /= n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - m.mean_x;
        const double dy = ys[i] - m.mean_y;
        m.sxx += dx * dx;
        m.syy += dy * dy;
        m.sxy += dx * dy;
    }
    return m;
}

// Sum of squares indistinguishable from rounding noise on values of this size.
bool negligible_spread(double ss, std::span<const double> values) {
    double peak = 0.0;
    for (double v : values) peak = std::max(peak, std::abs(v));
    const double eps = std::numeric_limits<double>::epsilon() * 16.0 * peak;
    return ss <= eps * eps * static_cast<double>(values.size());
}

}  // namespace

RegressionResult linear_regression(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw RegressionError(fmt::format("x and y lengths differ: {} vs {}", xs.size(), ys.size()));
    }
    if (xs.size() < 2) throw RegressionError("regression needs at least two points");
    const Moments m = centered_moments(xs, ys);
    if (negligible_spread(m.sxx, xs)) throw RegressionError("all x values are identical");

    RegressionResult r;
    r.n_points = xs.size();
    if (negligible_spread(m.syy, ys)) {
        r.intercept = m.mean_y;
        return r;
    }
    r.slope = m.sxy / m.sxx;
    r.intercept = m.mean_y - r.slope * m.mean_x;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (r.slope * xs[i] + r.intercept);
        ss_res += e * e;
    }
    r.r_squared = std::clamp(1.0 - ss_res / m.syy, 0.0, 1.0);
    return r;
}

double pearson_correlation(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw RegressionError("correlation needs two series of equal length >= 2");
    }
    const Moments m = centered_moments(xs, ys);
    if (negligible_spread(m.sxx, xs) || negligible_spread(m.syy, ys)) return 0.0;
    return m.sxy / std::sqrt(m.sxx * m.syy);
}

}  // namespace demonlab::experiments
