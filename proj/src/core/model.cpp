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

#include "model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irsnoma
{

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear)
{
    if (!(linear > 0.0))
        throw std::domain_error("linear_to_db: value must be positive");
    return 10.0 * std::log10(linear);
}

ArrayGeometry::ArrayGeometry(int elements, double spacing_ratio)
    : elements_(elements), side_(0), spacing_ratio_(spacing_ratio)
{
    if (elements < 1)
        throw std::invalid_argument("ArrayGeometry: element count must be positive");
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(elements))));
    if (side * side != elements)
        throw std::invalid_argument("ArrayGeometry: element count must be a perfect square, got " +
                                    std::to_string(elements));
    if (!(spacing_ratio > 0.0) || !std::isfinite(spacing_ratio))
        throw std::invalid_argument("ArrayGeometry: spacing ratio must be positive and finite");
    side_ = side;
}

PhaseNoiseModel::PhaseNoiseModel(double delta_rad) : delta_(delta_rad)
{
    if (!(delta_rad >= 0.0) || !(delta_rad < pi))
        throw std::domain_error("PhaseNoiseModel: delta must lie in [0, pi)");
}

LinkBudget::LinkBudget(double tx_power_w, double bs_irs_loss, double irs_user_loss, double interference_plus_noise_w)
    : tx_power_w_(tx_power_w), bs_irs_loss_(bs_irs_loss), irs_user_loss_(irs_user_loss),
      interference_plus_noise_w_(interference_plus_noise_w)
{
    auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!positive(tx_power_w))
        throw std::invalid_argument("LinkBudget: tx power must be positive");
    if (!positive(bs_irs_loss) || !positive(irs_user_loss))
        throw std::invalid_argument("LinkBudget: path-loss amplitudes must be positive");
    if (!positive(interference_plus_noise_w))
        throw std::invalid_argument("LinkBudget: interference-plus-noise power must be positive");
}

CsiSinr::CsiSinr(double value) : value_(value)
{
    if (!(value >= 0.0) || !std::isfinite(value))
        throw std::invalid_argument("CsiSinr: value must be finite and non-negative");
}

double sinc(double delta_rad)
{
    if (!(delta_rad >= 0.0) || !(delta_rad < pi))
        throw std::domain_error("sinc: delta must lie in [0, pi)");
    if (delta_rad < 1e-4)
    {
        const double d2 = delta_rad * delta_rad;
        return 1.0 - d2 / 6.0 + d2 * d2 / 120.0;
    }
    return std::sin(delta_rad) / delta_rad;
}

double sinc_sq(double delta_rad)
{
    const double s = sinc(delta_rad);
    return s * s;
}

std::vector<std::complex<double>> array_factor(const ArrayGeometry &geom, const SteeringAngles &angles)
{
    if (!std::isfinite(angles.azimuth_rad) || !std::isfinite(angles.elevation_rad))
        throw std::invalid_argument("array_factor: angles must be finite");

    const int side = geom.side();
    const double phase_unit = 2.0 * pi * geom.spacing_ratio();
    const double sa_se = std::sin(angles.azimuth_rad) * std::sin(angles.elevation_rad);
    const double ce = std::cos(angles.elevation_rad);

    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(geom.elements()));
    for (int y = 0; y < side; ++y)
        for (int x = 0; x < side; ++x)
        {
            const double phase = phase_unit * (x * sa_se + y * ce);
            out.emplace_back(std::cos(phase), std::sin(phase));
        }
    return out;
}

std::vector<double> sample_phase_errors(const PhaseNoiseModel &model, std::size_t n, RandomStream &rng)
{
    if (n == 0)
        throw std::invalid_argument("sample_phase_errors: n must be at least 1");
    std::vector<double> out(n);
    const double delta = model.delta();
    for (double &v : out)
        v = rng.uniform(-delta, delta);
    return out;
}

double normalized_coherence(std::span<const double> phase_errors)
{
    if (phase_errors.empty())
        throw std::invalid_argument("normalized_coherence: need at least one phase error");
    double re = 0.0;
    double im = 0.0;
    for (double theta : phase_errors)
    {
        re += std::cos(theta);
        im += std::sin(theta);
    }
    const double n = static_cast<double>(phase_errors.size());
    return (re * re + im * im) / (n * n);
}

double effective_gain_exact(const LinkBudget &link, int m_bs, std::span<const double> phase_errors)
{
    if (m_bs < 1)
        throw std::invalid_argument("effective_gain_exact: BS antenna count must be at least 1");
    const double cascade = link.irs_user_loss() * link.bs_irs_loss();
    const double n = static_cast<double>(phase_errors.size());
    const double coherent_power = normalized_coherence(phase_errors) * n * n;
    return cascade * cascade * coherent_power * static_cast<double>(m_bs);
}

CsiSinr csi_sinr(const LinkBudget &link, int m_bs, int n_irs)
{
    if (m_bs < 1 || n_irs < 1)
        throw std::invalid_argument("csi_sinr: antenna counts must be at least 1");
    const double cascade = link.irs_user_loss() * link.bs_irs_loss();
    const double n = static_cast<double>(n_irs);
    const double numerator = link.tx_power() * cascade * cascade * n * n * static_cast<double>(m_bs);
    return CsiSinr(numerator / link.interference_plus_noise());
}

} // namespace irsnoma
