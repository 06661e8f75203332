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

#ifndef IRSNOMA_CORE_RATES_HPP
#define IRSNOMA_CORE_RATES_HPP

#include "model.hpp"

namespace irsnoma
{

/// Power fractions of a two-user NOMA pair; alpha1 goes to the strong user.
/// Both fractions are strictly interior: the degenerate endpoints are
/// rejected at construction rather than clamped.
class PowerSplit
{
  public:
    explicit PowerSplit(double alpha1);

    double alpha1() const { return alpha1_; }
    double alpha2() const { return alpha2_; }

  private:
    double alpha1_;
    double alpha2_;
};

/// Minimum required rates for the strong and weak user, bits/s/Hz.
struct MinRates
{
    double r1_min{0.0};
    double r2_min{0.0};
};

void validate(const MinRates &mins);

struct NomaRates
{
    double strong{0.0};
    double weak{0.0};
};

struct NomaSinrs
{
    double strong{0.0};
    double weak{0.0};
};

/// OMA rate under the sinc^2 approximation; the 1/2 factor reflects the
/// half-bandwidth share of each OMA user.
double oma_rate(CsiSinr gamma, double delta_rad);

/// Two-user NOMA rates under the sinc^2 approximation. Requires the strong
/// user first (gamma1 >= gamma2); the ordering is rejected, never swapped.
NomaRates noma_rates(CsiSinr gamma1, CsiSinr gamma2, const PowerSplit &split, double delta_rad);

/// Achievable sum rate of a pair.
double sum_rate(const NomaRates &rates);

/// The SINR arguments of the NOMA rate expressions, without the log.
NomaSinrs approx_sinrs(CsiSinr gamma1, CsiSinr gamma2, const PowerSplit &split, double delta_rad);

/// OMA rate for one exact coherence realization (|sum e^{j theta}|^2 / N^2
/// in place of sinc^2).
double oma_rate_at_coherence(CsiSinr gamma, double coherence);

/// NOMA rates for one exact coherence realization.
NomaRates noma_rates_at_coherence(CsiSinr gamma1, CsiSinr gamma2, const PowerSplit &split, double coherence);

} // namespace irsnoma

#endif
