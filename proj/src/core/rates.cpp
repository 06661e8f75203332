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

#include "rates.hpp"

#include <cmath>
#include <stdexcept>

namespace irsnoma
{

namespace
{

void check_ordering(const CsiSinr &gamma1, const CsiSinr &gamma2)
{
    if (gamma1.value() < gamma2.value())
        throw std::invalid_argument("noma pair: strong user must come first (gamma1 >= gamma2)");
}

} // namespace

PowerSplit::PowerSplit(double alpha1) : alpha1_(alpha1), alpha2_(1.0 - alpha1)
{
    if (!std::isfinite(alpha1) || !(alpha1 > 0.0) || !(alpha1 < 1.0))
        throw std::invalid_argument("PowerSplit: alpha1 must lie strictly inside (0, 1)");
}

void validate(const MinRates &mins)
{
    if (!std::isfinite(mins.r1_min) || !std::isfinite(mins.r2_min) || mins.r1_min < 0.0 || mins.r2_min < 0.0)
        throw std::invalid_argument("MinRates: rates must be finite and non-negative");
}

double oma_rate(CsiSinr gamma, double delta_rad)
{
    return oma_rate_at_coherence(gamma, sinc_sq(delta_rad));
}

NomaRates noma_rates(CsiSinr gamma1, CsiSinr gamma2, const PowerSplit &split, double delta_rad)
{
    return noma_rates_at_coherence(gamma1, gamma2, split, sinc_sq(delta_rad));
}

double sum_rate(const NomaRates &rates)
{
    if (rates.strong < 0.0 || rates.weak < 0.0)
        throw std::invalid_argument("sum_rate: rates must be non-negative");
    return rates.strong + rates.weak;
}

NomaSinrs approx_sinrs(CsiSinr gamma1, CsiSinr gamma2, const PowerSplit &split, double delta_rad)
{
    check_ordering(gamma1, gamma2);
    const double s = sinc_sq(delta_rad);
    const double g1s = gamma1.value() * s;
    const double g2s = gamma2.value() * s;
    return {split.alpha1() * g1s, split.alpha2() * g2s / (split.alpha1() * g2s + 1.0)};
}

double oma_rate_at_coherence(CsiSinr gamma, double coherence)
{
    if (!(coherence >= 0.0) || !std::isfinite(coherence))
        throw std::domain_error("oma_rate: coherence must be finite and non-negative");
    return 0.5 * std::log2(1.0 + gamma.value() * coherence);
}

NomaRates noma_rates_at_coherence(CsiSinr gamma1, CsiSinr gamma2, const PowerSplit &split, double coherence)
{
    check_ordering(gamma1, gamma2);
    if (!(coherence >= 0.0) || !std::isfinite(coherence))
        throw std::domain_error("noma_rates: coherence must be finite and non-negative");
    const double g1c = gamma1.value() * coherence;
    const double g2c = gamma2.value() * coherence;
    const double strong = std::log2(1.0 + split.alpha1() * g1c);
    const double weak = std::log2(1.0 + split.alpha2() * g2c / (split.alpha1() * g2c + 1.0));
    return {strong, weak};
}

} // namespace irsnoma
