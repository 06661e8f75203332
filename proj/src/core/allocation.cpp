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

#include "allocation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace irsnoma
{

AllocationPolicy AllocationPolicy::fixed(double alpha1)
{
    if (!std::isfinite(alpha1) || !(alpha1 > 0.0) || !(alpha1 < 1.0))
        throw std::invalid_argument("AllocationPolicy: fixed alpha1 must lie strictly inside (0, 1)");
    return AllocationPolicy(PolicyKind::fixed, alpha1);
}

double AllocationPolicy::fixed_alpha1() const
{
    if (kind_ != PolicyKind::fixed)
        throw std::logic_error("AllocationPolicy: fixed_alpha1 queried on a non-fixed policy");
    return fixed_alpha1_;
}

PowerSplit mpa_split(CsiSinr gamma2, double delta_rad, double r2_min)
{
    const double upper = alpha1_upper(gamma2, delta_rad, r2_min);
    if (!(upper > 0.0) || !(upper < 1.0))
        throw infeasible_error("mpa_split: alpha1 upper bound " + std::to_string(upper) +
                               " is not strictly interior");
    return PowerSplit(upper);
}

PowerSplit fpa_split(const MinRates &mins)
{
    validate(mins);
    if (mins.r1_min == 0.0 && mins.r2_min == 0.0)
        throw std::invalid_argument("fpa_split: at least one minimum rate must be positive");
    const double a = std::exp2(mins.r1_min) - 1.0;
    const double b = std::exp2(mins.r2_min) - 1.0;
    const double alpha1 = a / (b + std::exp2(mins.r1_min) * a);
    return PowerSplit(alpha1);
}

OutageThresholds outage_thresholds(const PowerSplit &split, const MinRates &mins, double delta_rad)
{
    validate(mins);
    const double s = sinc_sq(delta_rad);
    const double a = std::exp2(mins.r1_min) - 1.0;
    const double b = std::exp2(mins.r2_min) - 1.0;
    const double weak_den = split.alpha2() - split.alpha1() * b;
    if (!(weak_den > 0.0))
        throw std::domain_error("outage_thresholds: alpha1 too aggressive, weak denominator " +
                                std::to_string(weak_den) + " is not positive");
    return {a / (split.alpha1() * s), b / (weak_den * s)};
}

ValidatedSplit validate_split(const PowerSplit &split, const AlphaBounds &bounds)
{
    if (!bounds.feasible())
        throw std::invalid_argument("validate_split: bounds must come from a feasible pair");
    if (split.alpha1() < bounds.lower)
        return {PowerSplit(bounds.lower), true};
    if (split.alpha1() > bounds.upper)
        return {PowerSplit(bounds.upper), true};
    return {split, false};
}

} // namespace irsnoma
