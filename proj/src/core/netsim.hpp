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

#ifndef IRSNOMA_CORE_NETSIM_HPP
#define IRSNOMA_CORE_NETSIM_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairing.hpp"

namespace irsnoma
{

enum class InterferenceMode
{
    geometric, ///< sum of direct-path received powers from all non-serving BSs
    fixed      ///< caller-supplied constant interference power (0 = noise-limited)
};

enum class Algorithm
{
    aup_mpa,
    aup_fpa,
    near_far
};

std::string_view algorithm_name(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

struct NetworkConfig
{
    double area_km2{1.0};
    double bs_density_per_km2{25.0};
    double user_density_per_km2{2000.0};
    int m_bs{8};
    int n_irs{32};
    double delta_rad{deg_to_rad(11.0)};
    double carrier_ghz{3.5};
    double tx_power_dbm{30.0};
    double noise_dbm{-94.0};
    double irs_offset_m{50.0};
    int drops{100};
    std::uint64_t seed{1};
    InterferenceMode interference_mode{InterferenceMode::geometric};
    double fixed_interference_w{0.0};

    /// When non-empty, geometry is bypassed: one BS serves users whose
    /// perfect-compensation SINRs are these dB values, and drops differ only
    /// in their phase-error realizations.
    std::vector<double> direct_sinr_db;
};

void validate_config(const NetworkConfig &config);

struct Vec2
{
    double x{0.0};
    double y{0.0};
};

/// One realization of BS/IRS/user positions on the square region, with each
/// user associated to the BS owning its nearest IRS.
struct Drop
{
    std::vector<Vec2> bs_positions;
    std::vector<Vec2> irs_positions;
    std::vector<Vec2> user_positions;
    std::vector<int> serving_bs;
    int resamples{0};
};

/// Draws Poisson-distributed BS and user counts, uniform positions, one IRS
/// per BS at the configured offset in a uniform random bearing, and
/// nearest-IRS association. Empty draws (no BS or no user) are resampled and
/// counted in Drop::resamples.
Drop deploy(const NetworkConfig &config, RandomStream &rng);

/// Urban-macro line-of-sight path loss, 28 + 22 log10(d_m) + 20 log10(f_GHz)
/// dB, returned as an amplitude gain. Distances below 1 m are out of domain.
double path_loss(double distance_m, double carrier_ghz);

enum class UserRole
{
    strong,
    weak,
    oma
};

std::string_view role_name(UserRole role);

struct UserRecord
{
    int drop_id{0};
    int bs_id{0};
    std::uint64_t user_id{0};
    UserRole role{UserRole::oma};
    double gamma_csi{0.0};
    double min_rate{0.0};
    double rate_approx{0.0};
    double rate_exact{0.0};
    /// rate_exact < min_rate, with 1e-12 slack absorbing the rounding noise
    /// of allocations that sit exactly on the minimum.
    bool outage{false};
};

/// One near-far group of two users (singletons are not groups). For an OMA
/// fallback group alpha1 is NaN.
struct PairRecord
{
    int drop_id{0};
    int bs_id{0};
    std::uint64_t strong_id{0};
    std::uint64_t weak_id{0};
    PairMode mode{PairMode::noma};
    double alpha1{0.0};
    double gamma1_db{0.0};
    double gamma2_db{0.0};
    double sinc_sq_ub{0.0};
    double asr_approx{0.0};
    double min_asr{0.0};
};

struct DropMetrics
{
    std::vector<UserRecord> users;
    std::vector<PairRecord> pairs;
};

/// Runs one algorithm over one BS population: pairing decisions, one
/// phase-error realization per pair (shared by both members) or per OMA
/// user, approximate and exact rates, and outage flags. Phase realizations
/// are derived from (phase_seed, bs_id, group) so they are identical across
/// algorithms evaluated on the same drop.
DropMetrics evaluate_population(const std::vector<User> &users, int drop_id, int bs_id, const NetworkConfig &config,
                                Algorithm algorithm, std::uint64_t phase_seed);

/// Evaluates a geometric drop: per-user CSI SINR from the cascaded link
/// budget (interference per the configured mode, torus metric for
/// interferer distances), then per-BS algorithm execution.
DropMetrics evaluate_drop(const Drop &drop, int drop_id, const NetworkConfig &config, Algorithm algorithm,
                          std::uint64_t phase_seed);

struct AlgorithmAggregate
{
    Algorithm algorithm{Algorithm::aup_mpa};
    std::vector<double> rates_approx; ///< sorted ascending, all users
    std::vector<double> rates_exact;  ///< sorted ascending, all users
    std::array<long, 3> outage_count{};
    std::array<long, 3> role_count{};
    double mean_asr{0.0};
    double min_required_asr{0.0};
    long pair_count{0};

    long samples(UserRole role) const { return role_count[static_cast<int>(role)]; }
    double outage_probability(UserRole role) const;
};

struct CampaignResult
{
    NetworkConfig config;
    std::vector<Algorithm> algorithms;
    std::vector<std::vector<DropMetrics>> drop_metrics; ///< [algorithm][drop]
    std::vector<AlgorithmAggregate> aggregates;         ///< [algorithm]
};

AlgorithmAggregate aggregate(Algorithm algorithm, const std::vector<DropMetrics> &drops);

/// Runs the full Monte Carlo campaign. Drops and phase realizations are
/// derived from (seed, drop index) only, so every algorithm sees the same
/// channel realizations and results do not depend on evaluation order.
CampaignResult run_campaign(const NetworkConfig &config, const std::vector<Algorithm> &algorithms);

/// Reads one dB value per line; blank lines are ignored. Throws parse_error
/// with file and line context on malformed content or an empty file.
std::vector<double> read_sinr_db_file(const std::string &path);

double dbm_to_watts(double dbm);

} // namespace irsnoma

#endif
