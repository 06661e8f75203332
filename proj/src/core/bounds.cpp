// irsnoma - IRS-assisted downlink NOMA simulator with imperfect phase compensation
// Copyright (C) 2026 the irsnoma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace irsnoma
{

double alpha1_lower(CsiSinr gamma1, double delta_rad, double r1_min)
{
    if (!(gamma1.value() > 0.0))
        throw std::invalid_argument("alpha1_lower: gamma1 must be positive");
    if (!(r1_min >= 0.0) || !std::isfinite(r1_min))
        throw std::invalid_argument("alpha1_lower: r1_min must be finite and non-negative");
    return (std::exp2(r1_min) - 1.0) / (gamma1.value() * sinc_sq(delta_rad));
}

double alpha1_upper(CsiSinr gamma2, double delta_rad, double r2_min)
{
    if (!(gamma2.value() > 0.0))
        throw std::invalid_argument("alpha1_upper: gamma2 must be positive");
    if (!(r2_min >= 0.0) || !std::isfinite(r2_min))
        throw std::invalid_argument("alpha1_upper: r2_min must be finite and non-negative");
    const double g2s = gamma2.value() * sinc_sq(delta_rad);
    const double pow2 = std::exp2(r2_min);
    return (g2s - (pow2 - 1.0)) / (pow2 * g2s);
}

AlphaBounds alpha_bounds(CsiSinr gamma1, CsiSinr gamma2, double delta_rad, const MinRates &mins)
{
    validate(mins);
    return {alpha1_lower(gamma1, delta_rad, mins.r1_min), alpha1_upper(gamma2, delta_rad, mins.r2_min)};
}

double sinc_sq_delta_ub(CsiSinr gamma1, CsiSinr gamma2, const MinRates &mins)
{
    if (gamma1.value() < gamma2.value())
        throw std::invalid_argument("sinc_sq_delta_ub: strong user must come first (gamma1 >= gamma2)");
    if (!(gamma2.value() > 0.0))
        throw std::invalid_argument("sinc_sq_delta_ub: SINRs must be positive");
    validate(mins);
    const double p1 = std::exp2(mins.r1_min);
    const double p2 = std::exp2(mins.r2_min);
    return (p1 - 1.0) * p2 / gamma1.value() + (p2 - 1.0) / gamma2.value();
}

std::optional<double> delta_ub(double sinc_sq_target)
{
    if (!(sinc_sq_target > 0.0) || !std::isfinite(sinc_sq_target))
        throw std::domain_error("delta_ub: target must be positive");
    if (sinc_sq_target > 1.0)
        return std::nullopt;
    if (sinc_sq_target == 1.0)
        return 0.0;

    // sinc^2 is strictly decreasing on [0, pi), from 1 toward 0, so bisection
    // on [0, pi] brackets the unique root. sin(x)^2/x^2 is evaluated directly
    // here; the half-open domain only matters for the returned value, which
    // stays below pi because the target is positive.
    constexpr double tol = 1e-9;
    constexpr int max_iter = 200;
    double lo = 0.0;
    double hi = pi;
    for (int i = 0; i < max_iter && (hi - lo) > tol; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        const double s = std::sin(mid) / mid;
        if (s * s >= sinc_sq_target)
            lo = mid;
        else
            hi = mid;
    }
    if ((hi - lo) > tol)
        throw std::runtime_error("delta_ub: bisection failed to converge");
    return 0.5 * (lo + hi);
}

bool pair_feasible(double delta_rad, double sinc_sq_ub)
{
    return sinc_sq(delta_rad) >= sinc_sq_ub - 1e-12 * std::abs(sinc_sq_ub);
}

FeasibilityReport assess_feasibility(CsiSinr gamma1, CsiSinr gamma2, const MinRates &mins, double delta_rad)
{
    FeasibilityReport report;
    report.sinc_sq_ub = sinc_sq_delta_ub(gamma1, gamma2, mins);
    if (!(report.sinc_sq_ub > 0.0))
        throw std::invalid_argument("assess_feasibility: at least one minimum rate must be positive");
    if (report.sinc_sq_ub <= 1.0)
        report.delta_ub = delta_ub(report.sinc_sq_ub);
    report.feasible_at_delta = pair_feasible(delta_rad, report.sinc_sq_ub);
    return report;
}

} // namespace irsnoma
