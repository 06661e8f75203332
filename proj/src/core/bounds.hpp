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

#ifndef IRSNOMA_CORE_BOUNDS_HPP
#define IRSNOMA_CORE_BOUNDS_HPP

#include <optional>

#include "rates.hpp"

namespace irsnoma
{

/// Feasible range for the strong user's power fraction. Values are returned
/// raw (possibly outside (0, 1)); downstream allocation interprets
/// infeasibility.
struct AlphaBounds
{
    double lower{0.0};
    double upper{1.0};

    bool feasible() const { return lower <= upper; }
};

/// Smallest alpha1 that still gives the strong user its minimum rate:
/// (2^r1 - 1) / (gamma1 * sinc^2(delta)). May exceed 1.
double alpha1_lower(CsiSinr gamma1, double delta_rad, double r1_min);

/// Largest alpha1 that still gives the weak user its minimum rate:
/// (gamma2*sinc^2(delta) - (2^r2 - 1)) / (2^r2 * gamma2 * sinc^2(delta)).
/// May be non-positive when the weak user cannot meet r2_min even alone.
double alpha1_upper(CsiSinr gamma2, double delta_rad, double r2_min);

AlphaBounds alpha_bounds(CsiSinr gamma1, CsiSinr gamma2, double delta_rad, const MinRates &mins);

/// Right-hand side of the phase-imperfection feasibility test:
/// (2^r1 - 1)*2^r2/gamma1 + (2^r2 - 1)/gamma2. A pair supports NOMA at
/// imperfection delta exactly when sinc^2(delta) is at least this value.
double sinc_sq_delta_ub(CsiSinr gamma1, CsiSinr gamma2, const MinRates &mins);

/// Inverts sinc^2 on [0, pi) by bisection to 1e-9 absolute. Returns the
/// unique delta with sinc^2(delta) == target, or nullopt when target > 1.
std::optional<double> delta_ub(double sinc_sq_target);

/// Non-strict feasibility test with a 1e-12 relative slack so that exact
/// boundary ties (equal-SINR pairs) classify as feasible regardless of
/// rounding direction.
bool pair_feasible(double delta_rad, double sinc_sq_ub);

struct FeasibilityReport
{
    double sinc_sq_ub{0.0};
    std::optional<double> delta_ub;
    bool feasible_at_delta{false};
};

FeasibilityReport assess_feasibility(CsiSinr gamma1, CsiSinr gamma2, const MinRates &mins, double delta_rad);

} // namespace irsnoma

#endif
