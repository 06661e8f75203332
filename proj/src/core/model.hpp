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

#ifndef IRSNOMA_CORE_MODEL_HPP
#define IRSNOMA_CORE_MODEL_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rng.hpp"

namespace irsnoma
{

constexpr double pi = 3.14159265358979323846;

constexpr double deg_to_rad(double deg)
{
    return deg * pi / 180.0;
}

constexpr double rad_to_deg(double rad)
{
    return rad * 180.0 / pi;
}

/// Converts a dB power ratio to linear scale.
double db_to_linear(double db);

/// Converts a linear power ratio to dB.
double linear_to_db(double linear);

/// Square planar antenna array: element count (a perfect square) and the
/// element spacing as a fraction of the carrier wavelength.
class ArrayGeometry
{
  public:
    ArrayGeometry(int elements, double spacing_ratio);

    int elements() const { return elements_; }
    int side() const { return side_; }
    double spacing_ratio() const { return spacing_ratio_; }

  private:
    int elements_;
    int side_;
    double spacing_ratio_;
};

/// Beam steering direction. Angles are periodic, so no range is enforced
/// beyond finiteness.
struct SteeringAngles
{
    double azimuth_rad{0.0};
    double elevation_rad{0.0};
};

/// Residual per-element phase error after ideal compensation, uniform on
/// [-delta, delta] with delta in [0, pi).
class PhaseNoiseModel
{
  public:
    explicit PhaseNoiseModel(double delta_rad);

    double delta() const { return delta_; }

  private:
    double delta_;
};

/// Scalar link budget feeding the SINR expressions. Path losses are stored
/// as amplitude gains (not dB, not power); squaring happens inside the gain
/// formulas.
class LinkBudget
{
  public:
    LinkBudget(double tx_power_w, double bs_irs_loss, double irs_user_loss, double interference_plus_noise_w);

    double tx_power() const { return tx_power_w_; }
    double bs_irs_loss() const { return bs_irs_loss_; }
    double irs_user_loss() const { return irs_user_loss_; }
    double interference_plus_noise() const { return interference_plus_noise_w_; }

  private:
    double tx_power_w_;
    double bs_irs_loss_;
    double irs_user_loss_;
    double interference_plus_noise_w_;
};

/// A user's linear SINR under perfect phase compensation. This single scalar
/// drives all pairing and power-allocation decisions.
class CsiSinr
{
  public:
    explicit CsiSinr(double value);

    double value() const { return value_; }

  private:
    double value_;
};

/// sin(delta)/delta on [0, pi), with sinc(0) = 1. Uses a series expansion
/// below 1e-4 so the relative error stays under 1e-12 everywhere.
double sinc(double delta_rad);

/// Convenience for the ubiquitous sinc^2 attenuation factor.
double sinc_sq(double delta_rad);

/// Steering vector of a square planar array. The element for indices (x, y)
/// is exp(j*2*pi*spacing*(x*sin(az)*sin(el) + y*cos(el))); entries are
/// ordered row-major with y as the outer index and (0,0) first. Every entry
/// has unit modulus, so the squared norm is always the element count.
std::vector<std::complex<double>> array_factor(const ArrayGeometry &geom, const SteeringAngles &angles);

/// Draws n i.i.d. phase errors uniform on [-delta, delta].
std::vector<double> sample_phase_errors(const PhaseNoiseModel &model, std::size_t n, RandomStream &rng);

/// |sum_k exp(j*theta_k)|^2 / N^2 in [0, 1]; equals 1 for perfectly
/// compensated phases and concentrates around sinc^2(delta) for large N.
double normalized_coherence(std::span<const double> phase_errors);

/// Exact cascaded channel power gain |L_i*L_I|^2 * |sum_k exp(j*theta_k)|^2 * M
/// for one realization of the residual phase errors.
double effective_gain_exact(const LinkBudget &link, int m_bs, std::span<const double> phase_errors);

/// Perfect-compensation SINR: P_t * |L_i*L_I|^2 * N^2 * M / (I + sigma^2).
CsiSinr csi_sinr(const LinkBudget &link, int m_bs, int n_irs);

} // namespace irsnoma

#endif
