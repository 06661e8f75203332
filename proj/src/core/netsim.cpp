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

#include "netsim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace irsnoma
{

namespace
{

constexpr std::uint64_t k_deploy_tag = 0x6465706C;
constexpr std::uint64_t k_phase_tag = 0x70686173;
constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

// Allocations place boundary users exactly on their minimum rate, where the
// reconstructed rate differs from the minimum by a few ulps. The slack keeps
// the outage flag clean of rounding noise (it is orders of magnitude below
// any physical rate difference).
constexpr double k_outage_slack = 1e-12;

bool in_outage(double rate_exact, double min_rate)
{
    return rate_exact < min_rate - k_outage_slack;
}

double euclidean(const Vec2 &a, const Vec2 &b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

// Shortest distance on the square torus of side L; used for interferer
// distances so that region edges do not bias the interference field.
double torus_distance(const Vec2 &a, const Vec2 &b, double side)
{
    double dx = std::abs(a.x - b.x);
    double dy = std::abs(a.y - b.y);
    if (dx > side - dx)
        dx = side - dx;
    if (dy > side - dy)
        dy = side - dy;
    return std::sqrt(dx * dx + dy * dy);
}

// Far-field guard: the path-loss model is undefined below 1 m.
double clamp_distance(double d)
{
    return d < 1.0 ? 1.0 : d;
}

AllocationPolicy policy_for(Algorithm algorithm)
{
    return algorithm == Algorithm::aup_fpa ? AllocationPolicy::fpa() : AllocationPolicy::mpa();
}

} // namespace

std::string_view algorithm_name(Algorithm algorithm)
{
    switch (algorithm)
    {
    case Algorithm::aup_mpa:
        return "aup-mpa";
    case Algorithm::aup_fpa:
        return "aup-fpa";
    case Algorithm::near_far:
        return "near-far";
    }
    return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name)
{
    if (name == "aup-mpa")
        return Algorithm::aup_mpa;
    if (name == "aup-fpa")
        return Algorithm::aup_fpa;
    if (name == "near-far")
        return Algorithm::near_far;
    return std::nullopt;
}

std::string_view role_name(UserRole role)
{
    switch (role)
    {
    case UserRole::strong:
        return "strong";
    case UserRole::weak:
        return "weak";
    case UserRole::oma:
        return "oma";
    }
    return "unknown";
}

double dbm_to_watts(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

void validate_config(const NetworkConfig &config)
{
    if (config.m_bs < 1 || config.n_irs < 1)
        throw std::invalid_argument("config: antenna counts must be at least 1");
    if (!(config.delta_rad >= 0.0) || !(config.delta_rad < pi))
        throw std::invalid_argument("config: delta must lie in [0, pi)");
    if (config.drops < 1)
        throw std::invalid_argument("config: drop count must be at least 1");
    if (!(config.carrier_ghz > 0.0))
        throw std::invalid_argument("config: carrier frequency must be positive");

    if (!config.direct_sinr_db.empty())
    {
        for (double db : config.direct_sinr_db)
            if (!std::isfinite(db))
                throw std::invalid_argument("config: direct SINR values must be finite");
        return;
    }

    if (!(config.area_km2 > 0.0))
        throw std::invalid_argument("config: area must be positive");
    if (!(config.bs_density_per_km2 > 0.0) || !(config.user_density_per_km2 > 0.0))
        throw std::invalid_argument("config: densities must be positive");
    if (config.bs_density_per_km2 * config.area_km2 < 1.0 || config.user_density_per_km2 * config.area_km2 < 1.0)
        throw std::invalid_argument("config: expected BS and user counts must be at least 1");
    if (!(config.irs_offset_m >= 1.0))
        throw std::invalid_argument("config: IRS offset must be at least 1 m");
    if (!(config.fixed_interference_w >= 0.0))
        throw std::invalid_argument("config: fixed interference power must be non-negative");
}

double path_loss(double distance_m, double carrier_ghz)
{
    if (!(distance_m >= 1.0))
        throw std::domain_error("path_loss: distance must be at least 1 m");
    if (!(carrier_ghz > 0.0))
        throw std::invalid_argument("path_loss: carrier frequency must be positive");
    const double loss_db = 28.0 + 22.0 * std::log10(distance_m) + 20.0 * std::log10(carrier_ghz);
    return std::pow(10.0, -loss_db / 20.0);
}

Drop deploy(const NetworkConfig &config, RandomStream &rng)
{
    validate_config(config);
    const double side = std::sqrt(config.area_km2) * 1000.0;

    Drop drop;
    constexpr int max_resamples = 100000;
    std::uint64_t n_bs = 0;
    std::uint64_t n_users = 0;
    while (true)
    {
        n_bs = rng.poisson(config.bs_density_per_km2 * config.area_km2);
        n_users = rng.poisson(config.user_density_per_km2 * config.area_km2);
        if (n_bs > 0 && n_users > 0)
            break;
        if (++drop.resamples > max_resamples)
            throw std::runtime_error("deploy: exceeded resample budget for empty drops");
    }

    drop.bs_positions.reserve(n_bs);
    drop.irs_positions.reserve(n_bs);
    for (std::uint64_t b = 0; b < n_bs; ++b)
    {
        const Vec2 bs{rng.uniform(0.0, side), rng.uniform(0.0, side)};
        const double bearing = rng.uniform(0.0, 2.0 * pi);
        drop.bs_positions.push_back(bs);
        drop.irs_positions.push_back(
            Vec2{bs.x + config.irs_offset_m * std::cos(bearing), bs.y + config.irs_offset_m * std::sin(bearing)});
    }

    drop.user_positions.reserve(n_users);
    for (std::uint64_t u = 0; u < n_users; ++u)
        drop.user_positions.push_back(Vec2{rng.uniform(0.0, side), rng.uniform(0.0, side)});

    drop.serving_bs.reserve(n_users);
    for (const Vec2 &user : drop.user_positions)
    {
        int best = 0;
        double best_dist = euclidean(user, drop.irs_positions[0]);
        for (std::size_t b = 1; b < drop.irs_positions.size(); ++b)
        {
            const double d = euclidean(user, drop.irs_positions[b]);
            if (d < best_dist)
            {
                best = static_cast<int>(b);
                best_dist = d;
            }
        }
        drop.serving_bs.push_back(best);
    }
    return drop;
}

DropMetrics evaluate_population(const std::vector<User> &users, int drop_id, int bs_id, const NetworkConfig &config,
                                Algorithm algorithm, std::uint64_t phase_seed)
{
    DropMetrics metrics;
    if (users.empty())
        return metrics;

    const UserPopulation population{users};
    const std::vector<PairDecision> decisions =
        algorithm == Algorithm::near_far ? near_far_baseline(population, config.delta_rad)
                                         : aup(population, config.delta_rad, policy_for(algorithm));

    const PhaseNoiseModel noise(config.delta_rad);
    int previous_group = -1;
    int member_slot = 0;

    for (const PairDecision &decision : decisions)
    {
        member_slot = decision.group_index == previous_group ? member_slot + 1 : 0;
        previous_group = decision.group_index;

        RandomStream stream(derive_seed(
            phase_seed, {static_cast<std::uint64_t>(bs_id), static_cast<std::uint64_t>(decision.group_index),
                         static_cast<std::uint64_t>(member_slot)}));
        const std::vector<double> errors =
            sample_phase_errors(noise, static_cast<std::size_t>(config.n_irs), stream);
        const double coherence = normalized_coherence(errors);

        if (decision.mode == PairMode::noma)
        {
            const CsiSinr g1{decision.gamma_strong};
            const CsiSinr g2{decision.gamma_weak};
            const NomaRates approx = noma_rates(g1, g2, *decision.split, config.delta_rad);
            const NomaRates exact = noma_rates_at_coherence(g1, g2, *decision.split, coherence);

            metrics.users.push_back(UserRecord{drop_id, bs_id, decision.strong_id, UserRole::strong,
                                               decision.gamma_strong, decision.mins.r1_min, approx.strong,
                                               exact.strong, in_outage(exact.strong, decision.mins.r1_min)});
            metrics.users.push_back(UserRecord{drop_id, bs_id, *decision.weak_id, UserRole::weak,
                                               decision.gamma_weak, decision.mins.r2_min, approx.weak, exact.weak,
                                               in_outage(exact.weak, decision.mins.r2_min)});
            metrics.pairs.push_back(PairRecord{drop_id, bs_id, decision.strong_id, *decision.weak_id,
                                               PairMode::noma, decision.split->alpha1(),
                                               linear_to_db(decision.gamma_strong), linear_to_db(decision.gamma_weak),
                                               decision.sinc_sq_ub, approx.strong + approx.weak,
                                               decision.mins.r1_min + decision.mins.r2_min});
        }
        else
        {
            const CsiSinr gamma{decision.gamma_strong};
            const double approx = oma_rate(gamma, config.delta_rad);
            const double exact = oma_rate_at_coherence(gamma, coherence);
            metrics.users.push_back(UserRecord{drop_id, bs_id, decision.strong_id, UserRole::oma,
                                               decision.gamma_strong, decision.mins.r1_min, approx, exact,
                                               in_outage(exact, decision.mins.r1_min)});
        }
    }

    // Fold consecutive OMA fallback decisions of one infeasible group into a
    // single pair record so sum-rate statistics see every group of two.
    for (std::size_t i = 0; i + 1 < decisions.size(); ++i)
    {
        const PairDecision &first = decisions[i];
        const PairDecision &second = decisions[i + 1];
        if (first.mode == PairMode::oma && second.mode == PairMode::oma && first.group_index == second.group_index)
        {
            const double r1 = first.mins.r1_min;
            const double r2 = second.mins.r1_min;
            metrics.pairs.push_back(PairRecord{drop_id, bs_id, first.strong_id, second.strong_id, PairMode::oma,
                                               nan_value, linear_to_db(first.gamma_strong),
                                               linear_to_db(second.gamma_strong), first.sinc_sq_ub, r1 + r2,
                                               r1 + r2});
        }
    }
    return metrics;
}

DropMetrics evaluate_drop(const Drop &drop, int drop_id, const NetworkConfig &config, Algorithm algorithm,
                          std::uint64_t phase_seed)
{
    const double side = std::sqrt(config.area_km2) * 1000.0;
    const double tx_w = dbm_to_watts(config.tx_power_dbm);
    const double noise_w = dbm_to_watts(config.noise_dbm);
    const std::size_t n_bs = drop.bs_positions.size();

    std::vector<std::vector<User>> per_bs(n_bs);
    for (std::size_t u = 0; u < drop.user_positions.size(); ++u)
    {
        const int serving = drop.serving_bs[u];
        const Vec2 &user = drop.user_positions[u];

        const double bs_irs = path_loss(clamp_distance(euclidean(drop.bs_positions[serving],
                                                                 drop.irs_positions[serving])),
                                        config.carrier_ghz);
        const double irs_user =
            path_loss(clamp_distance(euclidean(drop.irs_positions[serving], user)), config.carrier_ghz);

        double interference = config.fixed_interference_w;
        if (config.interference_mode == InterferenceMode::geometric)
        {
            interference = 0.0;
            for (std::size_t b = 0; b < n_bs; ++b)
            {
                if (static_cast<int>(b) == serving)
                    continue;
                const double amp =
                    path_loss(clamp_distance(torus_distance(user, drop.bs_positions[b], side)), config.carrier_ghz);
                interference += tx_w * amp * amp;
            }
        }

        const LinkBudget link(tx_w, bs_irs, irs_user, interference + noise_w);
        per_bs[static_cast<std::size_t>(serving)].push_back(
            User{static_cast<std::uint64_t>(u), csi_sinr(link, config.m_bs, config.n_irs)});
    }

    DropMetrics metrics;
    for (std::size_t b = 0; b < n_bs; ++b)
    {
        DropMetrics bs_metrics =
            evaluate_population(per_bs[b], drop_id, static_cast<int>(b), config, algorithm, phase_seed);
        metrics.users.insert(metrics.users.end(), bs_metrics.users.begin(), bs_metrics.users.end());
        metrics.pairs.insert(metrics.pairs.end(), bs_metrics.pairs.begin(), bs_metrics.pairs.end());
    }
    return metrics;
}

double AlgorithmAggregate::outage_probability(UserRole role) const
{
    const long n = role_count[static_cast<int>(role)];
    return n == 0 ? 0.0 : static_cast<double>(outage_count[static_cast<int>(role)]) / static_cast<double>(n);
}

AlgorithmAggregate aggregate(Algorithm algorithm, const std::vector<DropMetrics> &drops)
{
    AlgorithmAggregate agg;
    agg.algorithm = algorithm;

    double asr_sum = 0.0;
    double min_asr_sum = 0.0;
    for (const DropMetrics &drop : drops)
    {
        for (const UserRecord &user : drop.users)
        {
            agg.rates_approx.push_back(user.rate_approx);
            agg.rates_exact.push_back(user.rate_exact);
            const int role = static_cast<int>(user.role);
            ++agg.role_count[role];
            if (user.outage)
                ++agg.outage_count[role];
        }
        for (const PairRecord &pair : drop.pairs)
        {
            asr_sum += pair.asr_approx;
            min_asr_sum += pair.min_asr;
            ++agg.pair_count;
        }
    }
    std::sort(agg.rates_approx.begin(), agg.rates_approx.end());
    std::sort(agg.rates_exact.begin(), agg.rates_exact.end());
    if (agg.pair_count > 0)
    {
        agg.mean_asr = asr_sum / static_cast<double>(agg.pair_count);
        agg.min_required_asr = min_asr_sum / static_cast<double>(agg.pair_count);
    }
    return agg;
}

CampaignResult run_campaign(const NetworkConfig &config, const std::vector<Algorithm> &algorithms)
{
    validate_config(config);
    if (algorithms.empty())
        throw std::invalid_argument("run_campaign: at least one algorithm required");

    CampaignResult result;
    result.config = config;
    result.algorithms = algorithms;
    result.drop_metrics.resize(algorithms.size());

    std::vector<User> direct_users;
    if (!config.direct_sinr_db.empty())
    {
        direct_users.reserve(config.direct_sinr_db.size());
        for (std::size_t i = 0; i < config.direct_sinr_db.size(); ++i)
            direct_users.push_back(
                User{static_cast<std::uint64_t>(i), CsiSinr(db_to_linear(config.direct_sinr_db[i]))});
    }

    for (int d = 0; d < config.drops; ++d)
    {
        const std::uint64_t drop_index = static_cast<std::uint64_t>(d);
        const std::uint64_t phase_seed = derive_seed(config.seed, {k_phase_tag, drop_index});

        if (!direct_users.empty())
        {
            for (std::size_t a = 0; a < algorithms.size(); ++a)
                result.drop_metrics[a].push_back(
                    evaluate_population(direct_users, d, 0, config, algorithms[a], phase_seed));
        }
        else
        {
            RandomStream deploy_stream(derive_seed(config.seed, {k_deploy_tag, drop_index}));
            const Drop drop = deploy(config, deploy_stream);
            for (std::size_t a = 0; a < algorithms.size(); ++a)
                result.drop_metrics[a].push_back(evaluate_drop(drop, d, config, algorithms[a], phase_seed));
        }
    }

    result.aggregates.reserve(algorithms.size());
    for (std::size_t a = 0; a < algorithms.size(); ++a)
        result.aggregates.push_back(aggregate(algorithms[a], result.drop_metrics[a]));
    return result;
}

std::vector<double> read_sinr_db_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open SINR file '" + path + "'");

    std::vector<double> values;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line))
    {
        ++line_number;
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos)
            continue;
        const auto end = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(begin, end - begin + 1);
        if (token[0] == '#')
            continue;

        std::size_t consumed = 0;
        double value = 0.0;
        try
        {
            value = std::stod(token, &consumed);
        }
        catch (const std::exception &)
        {
            consumed = 0;
        }
        if (consumed != token.size() || !std::isfinite(value))
            throw parse_error(path + ":" + std::to_string(line_number) + ": expected a dB value, got '" + token +
                              "'");
        values.push_back(value);
    }
    if (values.empty())
        throw parse_error(path + ": no SINR values found");
    return values;
}

} // namespace irsnoma
