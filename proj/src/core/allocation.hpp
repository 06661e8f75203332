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

#ifndef IRSNOMA_CORE_ALLOCATION_HPP
#define IRSNOMA_CORE_ALLOCATION_HPP

#include "bounds.hpp"

namespace irsnoma
{

enum class PolicyKind
{
    mpa,  ///< maximum sum rate: alpha1 at its upper bound
    fpa,  ///< outage-balancing allocation from the minimum rates alone
    fixed ///< caller-supplied alpha1, for sweeps
};

class AllocationPolicy
{
  public:
    static AllocationPolicy mpa() { return AllocationPolicy(PolicyKind::mpa, 0.0); }
    static AllocationPolicy fpa() { return AllocationPolicy(PolicyKind::fpa, 0.0); }
    static AllocationPolicy fixed(double alpha1);

    PolicyKind kind() const { return kind_; }
    double fixed_alpha1() const;

  private:
    AllocationPolicy(PolicyKind kind, double alpha1) : kind_(kind), fixed_alpha1_(alpha1) {}

    PolicyKind kind_;
    double fixed_alpha1_;
};

/// Linear SINR levels below which each user of a pair is in outage.
struct OutageThresholds
{
    double strong_threshold{0.0};
    double weak_threshold{0.0};
};

/// Sum-rate-maximizing split: alpha1 at its upper bound, where the weak
/// user's rate lands exactly on its minimum. Throws infeasible_error when
/// that bound is not strictly interior.
PowerSplit mpa_split(CsiSinr gamma2, double delta_rad, double r2_min);

/// Outage-balancing split computed from the minimum rates alone:
/// alpha1 = (2^r1 - 1) / ((2^r2 - 1) + 2^r1 (2^r1 - 1)). Independent of the
/// SINRs and of delta.
PowerSplit fpa_split(const MinRates &mins);

/// SINR thresholds of the two outage events:
/// strong: (2^r1 - 1) / (alpha1 * sinc^2), weak: (2^r2 - 1) / ((alpha2 -
/// alpha1 (2^r2 - 1)) * sinc^2). The weak denominator must be positive.
OutageThresholds outage_thresholds(const PowerSplit &split, const MinRates &mins, double delta_rad);

struct ValidatedSplit
{
    PowerSplit split;
    bool clamped{false};
};

/// Clamps alpha1 into [bounds.lower, bounds.upper] and flags whether a clamp
/// occurred. Bounds must come from a feasible pair.
ValidatedSplit validate_split(const PowerSplit &split, const AlphaBounds &bounds);

} // namespace irsnoma

#endif
