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

#include "irsnoma.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "core/allocation.hpp"
#include "core/bounds.hpp"
#include "core/csv.hpp"
#include "core/errors.hpp"
#include "core/model.hpp"
#include "core/netsim.hpp"
#include "core/pairing.hpp"
#include "core/rates.hpp"

namespace
{

constexpr std::uint32_t k_pairing_magic = 0x50414952;
constexpr double k_nan = std::numeric_limits<double>::quiet_NaN();

thread_local std::string t_last_error;

void set_last_error(const char *what)
{
    try
    {
        t_last_error = what;
    }
    catch (...)
    {
    }
}

// Runs fn, translating C++ exceptions into status codes and recording the
// message for irsnoma_last_error().
template <typename Fn> irsnoma_status guarded(Fn &&fn)
{
    try
    {
        fn();
        return IRSNOMA_OK;
    }
    catch (const irsnoma::infeasible_error &e)
    {
        set_last_error(e.what());
        return IRSNOMA_E_INFEASIBLE;
    }
    catch (const irsnoma::parse_error &e)
    {
        set_last_error(e.what());
        return IRSNOMA_E_PARSE;
    }
    catch (const irsnoma::io_error &e)
    {
        set_last_error(e.what());
        return IRSNOMA_E_IO;
    }
    catch (const std::domain_error &e)
    {
        set_last_error(e.what());
        return IRSNOMA_E_DOMAIN;
    }
    catch (const std::invalid_argument &e)
    {
        set_last_error(e.what());
        return IRSNOMA_E_INVALID_ARGUMENT;
    }
    catch (const std::exception &e)
    {
        set_last_error(e.what());
        return IRSNOMA_E_INTERNAL;
    }
    catch (...)
    {
        set_last_error("unknown error");
        return IRSNOMA_E_INTERNAL;
    }
}

irsnoma_status require(bool condition, const char *message)
{
    if (condition)
        return IRSNOMA_OK;
    set_last_error(message);
    return IRSNOMA_E_INVALID_ARGUMENT;
}

std::vector<irsnoma::User> make_users(const double *gammas, const uint64_t *ids, size_t count)
{
    std::vector<irsnoma::User> users;
    users.reserve(count);
    for (size_t i = 0; i < count; ++i)
        users.push_back(irsnoma::User{ids != nullptr ? ids[i] : static_cast<uint64_t>(i),
                                      irsnoma::CsiSinr(gammas[i])});
    return users;
}

} // namespace

struct irsnoma_pairing
{
    std::uint32_t magic{k_pairing_magic};
    std::vector<irsnoma::PairDecision> decisions;
};

namespace
{

bool valid_pairing(const irsnoma_pairing *pairing)
{
    return pairing != nullptr && pairing->magic == k_pairing_magic;
}

} // namespace

extern "C"
{

const char *irsnoma_version(void)
{
    return "0.1.0";
}

const char *irsnoma_status_name(irsnoma_status status)
{
    switch (status)
    {
    case IRSNOMA_OK:
        return "ok";
    case IRSNOMA_E_INVALID_ARGUMENT:
        return "invalid argument";
    case IRSNOMA_E_DOMAIN:
        return "domain error";
    case IRSNOMA_E_INFEASIBLE:
        return "infeasible";
    case IRSNOMA_E_PARSE:
        return "parse error";
    case IRSNOMA_E_IO:
        return "io error";
    case IRSNOMA_E_INTERNAL:
        return "internal error";
    }
    return "unknown";
}

const char *irsnoma_last_error(void)
{
    return t_last_error.c_str();
}

irsnoma_status irsnoma_sinc(double delta_rad, double *out)
{
    if (irsnoma_status st = require(out != nullptr, "irsnoma_sinc: out is null"); st != IRSNOMA_OK)
        return st;
    return guarded([&] { *out = irsnoma::sinc(delta_rad); });
}

irsnoma_status irsnoma_oma_rate(double gamma_csi, double delta_rad, double *out)
{
    if (irsnoma_status st = require(out != nullptr, "irsnoma_oma_rate: out is null"); st != IRSNOMA_OK)
        return st;
    return guarded([&] { *out = irsnoma::oma_rate(irsnoma::CsiSinr(gamma_csi), delta_rad); });
}

irsnoma_status irsnoma_noma_rates(double gamma1, double gamma2, double alpha1, double delta_rad, double *out_strong,
                                  double *out_weak)
{
    if (irsnoma_status st = require(out_strong != nullptr && out_weak != nullptr, "irsnoma_noma_rates: out is null");
        st != IRSNOMA_OK)
        return st;
    return guarded([&] {
        const irsnoma::NomaRates rates = irsnoma::noma_rates(irsnoma::CsiSinr(gamma1), irsnoma::CsiSinr(gamma2),
                                                             irsnoma::PowerSplit(alpha1), delta_rad);
        *out_strong = rates.strong;
        *out_weak = rates.weak;
    });
}

irsnoma_status irsnoma_alpha1_lower(double gamma1, double delta_rad, double r1_min, double *out)
{
    if (irsnoma_status st = require(out != nullptr, "irsnoma_alpha1_lower: out is null"); st != IRSNOMA_OK)
        return st;
    return guarded([&] { *out = irsnoma::alpha1_lower(irsnoma::CsiSinr(gamma1), delta_rad, r1_min); });
}

irsnoma_status irsnoma_alpha1_upper(double gamma2, double delta_rad, double r2_min, double *out)
{
    if (irsnoma_status st = require(out != nullptr, "irsnoma_alpha1_upper: out is null"); st != IRSNOMA_OK)
        return st;
    return guarded([&] { *out = irsnoma::alpha1_upper(irsnoma::CsiSinr(gamma2), delta_rad, r2_min); });
}

irsnoma_status irsnoma_sinc_sq_delta_ub(double gamma1, double gamma2, double r1_min, double r2_min, double *out)
{
    if (irsnoma_status st = require(out != nullptr, "irsnoma_sinc_sq_delta_ub: out is null"); st != IRSNOMA_OK)
        return st;
    return guarded([&] {
        *out = irsnoma::sinc_sq_delta_ub(irsnoma::CsiSinr(gamma1), irsnoma::CsiSinr(gamma2),
                                         irsnoma::MinRates{r1_min, r2_min});
    });
}

irsnoma_status irsnoma_delta_ub(double sinc_sq_target, double *out_delta_rad, int *out_present)
{
    if (irsnoma_status st = require(out_delta_rad != nullptr && out_present != nullptr,
                                    "irsnoma_delta_ub: out is null");
        st != IRSNOMA_OK)
        return st;
    return guarded([&] {
        const std::optional<double> delta = irsnoma::delta_ub(sinc_sq_target);
        *out_present = delta.has_value() ? 1 : 0;
        *out_delta_rad = delta.value_or(k_nan);
    });
}

irsnoma_status irsnoma_pair_feasible(double delta_rad, double sinc_sq_ub, int *out)
{
    if (irsnoma_status st = require(out != nullptr, "irsnoma_pair_feasible: out is null"); st != IRSNOMA_OK)
        return st;
    return guarded([&] { *out = irsnoma::pair_feasible(delta_rad, sinc_sq_ub) ? 1 : 0; });
}

irsnoma_status irsnoma_mpa_split(double gamma2, double delta_rad, double r2_min, double *out_alpha1)
{
    if (irsnoma_status st = require(out_alpha1 != nullptr, "irsnoma_mpa_split: out is null"); st != IRSNOMA_OK)
        return st;
    return guarded(
        [&] { *out_alpha1 = irsnoma::mpa_split(irsnoma::CsiSinr(gamma2), delta_rad, r2_min).alpha1(); });
}

irsnoma_status irsnoma_fpa_split(double r1_min, double r2_min, double *out_alpha1)
{
    if (irsnoma_status st = require(out_alpha1 != nullptr, "irsnoma_fpa_split: out is null"); st != IRSNOMA_OK)
        return st;
    return guarded([&] { *out_alpha1 = irsnoma::fpa_split(irsnoma::MinRates{r1_min, r2_min}).alpha1(); });
}

irsnoma_status irsnoma_outage_thresholds(double alpha1, double r1_min, double r2_min, double delta_rad,
                                         double *out_strong, double *out_weak)
{
    if (irsnoma_status st = require(out_strong != nullptr && out_weak != nullptr,
                                    "irsnoma_outage_thresholds: out is null");
        st != IRSNOMA_OK)
        return st;
    return guarded([&] {
        const irsnoma::OutageThresholds thresholds = irsnoma::outage_thresholds(
            irsnoma::PowerSplit(alpha1), irsnoma::MinRates{r1_min, r2_min}, delta_rad);
        *out_strong = thresholds.strong_threshold;
        *out_weak = thresholds.weak_threshold;
    });
}

irsnoma_status irsnoma_clamp_split(double alpha1, double lower, double upper, double *out_alpha1, int *out_clamped)
{
    if (irsnoma_status st = require(out_alpha1 != nullptr && out_clamped != nullptr,
                                    "irsnoma_clamp_split: out is null");
        st != IRSNOMA_OK)
        return st;
    return guarded([&] {
        const irsnoma::ValidatedSplit vs =
            irsnoma::validate_split(irsnoma::PowerSplit(alpha1), irsnoma::AlphaBounds{lower, upper});
        *out_alpha1 = vs.split.alpha1();
        *out_clamped = vs.clamped ? 1 : 0;
    });
}

irsnoma_status irsnoma_pairing_aup(const double *gammas, const uint64_t *ids, size_t count, double delta_rad,
                                   irsnoma_policy policy, double fixed_alpha1, irsnoma_pairing **out)
{
    if (irsnoma_status st = require(out != nullptr, "irsnoma_pairing_aup: out is null"); st != IRSNOMA_OK)
        return st;
    if (irsnoma_status st = require(gammas != nullptr && count > 0, "irsnoma_pairing_aup: empty population");
        st != IRSNOMA_OK)
        return st;
    return guarded([&] {
        irsnoma::AllocationPolicy alloc = irsnoma::AllocationPolicy::mpa();
        switch (policy)
        {
        case IRSNOMA_POLICY_MPA:
            break;
        case IRSNOMA_POLICY_FPA:
            alloc = irsnoma::AllocationPolicy::fpa();
            break;
        case IRSNOMA_POLICY_FIXED:
            alloc = irsnoma::AllocationPolicy::fixed(fixed_alpha1);
            break;
        default:
            throw std::invalid_argument("irsnoma_pairing_aup: unknown policy");
        }
        auto handle = std::make_unique<irsnoma_pairing>();
        handle->decisions =
            irsnoma::aup(irsnoma::UserPopulation(make_users(gammas, ids, count)), delta_rad, alloc);
        *out = handle.release();
    });
}

irsnoma_status irsnoma_pairing_near_far(const double *gammas, const uint64_t *ids, size_t count, double delta_rad,
                                        irsnoma_pairing **out)
{
    if (irsnoma_status st = require(out != nullptr, "irsnoma_pairing_near_far: out is null"); st != IRSNOMA_OK)
        return st;
    if (irsnoma_status st = require(gammas != nullptr && count > 0, "irsnoma_pairing_near_far: empty population");
        st != IRSNOMA_OK)
        return st;
    return guarded([&] {
        auto handle = std::make_unique<irsnoma_pairing>();
        handle->decisions =
            irsnoma::near_far_baseline(irsnoma::UserPopulation(make_users(gammas, ids, count)), delta_rad);
        *out = handle.release();
    });
}

size_t irsnoma_pairing_count(const irsnoma_pairing *pairing)
{
    return valid_pairing(pairing) ? pairing->decisions.size() : 0;
}

irsnoma_status irsnoma_pairing_get(const irsnoma_pairing *pairing, size_t index, irsnoma_pair_decision *out)
{
    if (irsnoma_status st = require(valid_pairing(pairing), "irsnoma_pairing_get: invalid handle");
        st != IRSNOMA_OK)
        return st;
    if (irsnoma_status st = require(out != nullptr, "irsnoma_pairing_get: out is null"); st != IRSNOMA_OK)
        return st;
    if (irsnoma_status st = require(index < pairing->decisions.size(), "irsnoma_pairing_get: index out of range");
        st != IRSNOMA_OK)
        return st;

    const irsnoma::PairDecision &d = pairing->decisions[index];
    out->strong_id = d.strong_id;
    out->weak_id = d.weak_id.value_or(0);
    out->has_weak = d.weak_id.has_value() ? 1 : 0;
    out->is_noma = d.mode == irsnoma::PairMode::noma ? 1 : 0;
    out->alpha1 = d.split.has_value() ? d.split->alpha1() : k_nan;
    out->split_clamped = d.split_clamped ? 1 : 0;
    out->r1_min = d.mins.r1_min;
    out->r2_min = d.mins.r2_min;
    out->sinc_sq_ub = d.sinc_sq_ub;
    out->gamma_strong = d.gamma_strong;
    out->gamma_weak = d.gamma_weak;
    out->group_index = d.group_index;
    return IRSNOMA_OK;
}

void irsnoma_pairing_destroy(irsnoma_pairing *pairing)
{
    if (!valid_pairing(pairing))
        return;
    pairing->magic = 0;
    delete pairing;
}

irsnoma_status irsnoma_read_sinr_db_file(const char *path, double **out_values, size_t *out_count)
{
    if (irsnoma_status st = require(path != nullptr && out_values != nullptr && out_count != nullptr,
                                    "irsnoma_read_sinr_db_file: null argument");
        st != IRSNOMA_OK)
        return st;
    return guarded([&] {
        const std::vector<double> values = irsnoma::read_sinr_db_file(path);
        double *buffer = static_cast<double *>(std::malloc(values.size() * sizeof(double)));
        if (buffer == nullptr)
            throw std::bad_alloc();
        std::memcpy(buffer, values.data(), values.size() * sizeof(double));
        *out_values = buffer;
        *out_count = values.size();
    });
}

void irsnoma_free(void *ptr)
{
    std::free(ptr);
}

void irsnoma_sim_config_init(irsnoma_sim_config *config)
{
    if (config == nullptr)
        return;
    const irsnoma::NetworkConfig defaults;
    config->area_km2 = defaults.area_km2;
    config->bs_density_per_km2 = defaults.bs_density_per_km2;
    config->user_density_per_km2 = defaults.user_density_per_km2;
    config->m_bs = defaults.m_bs;
    config->n_irs = defaults.n_irs;
    config->delta_rad = defaults.delta_rad;
    config->carrier_ghz = defaults.carrier_ghz;
    config->tx_power_dbm = defaults.tx_power_dbm;
    config->noise_dbm = defaults.noise_dbm;
    config->irs_offset_m = defaults.irs_offset_m;
    config->drops = defaults.drops;
    config->seed = defaults.seed;
    config->interference_mode = IRSNOMA_INTERFERENCE_GEOMETRIC;
    config->fixed_interference_w = defaults.fixed_interference_w;
    config->sinr_db_file = nullptr;
    config->algorithm = IRSNOMA_ALG_ALL;
}

irsnoma_status irsnoma_simulate(const irsnoma_sim_config *config, const char *out_dir)
{
    if (irsnoma_status st = require(config != nullptr && out_dir != nullptr, "irsnoma_simulate: null argument");
        st != IRSNOMA_OK)
        return st;
    return guarded([&] {
        irsnoma::NetworkConfig core;
        core.area_km2 = config->area_km2;
        core.bs_density_per_km2 = config->bs_density_per_km2;
        core.user_density_per_km2 = config->user_density_per_km2;
        core.m_bs = config->m_bs;
        core.n_irs = config->n_irs;
        core.delta_rad = config->delta_rad;
        core.carrier_ghz = config->carrier_ghz;
        core.tx_power_dbm = config->tx_power_dbm;
        core.noise_dbm = config->noise_dbm;
        core.irs_offset_m = config->irs_offset_m;
        core.drops = config->drops;
        core.seed = config->seed;
        core.fixed_interference_w = config->fixed_interference_w;
        switch (config->interference_mode)
        {
        case IRSNOMA_INTERFERENCE_GEOMETRIC:
            core.interference_mode = irsnoma::InterferenceMode::geometric;
            break;
        case IRSNOMA_INTERFERENCE_FIXED:
            core.interference_mode = irsnoma::InterferenceMode::fixed;
            break;
        default:
            throw std::invalid_argument("irsnoma_simulate: unknown interference mode");
        }
        if (config->sinr_db_file != nullptr)
            core.direct_sinr_db = irsnoma::read_sinr_db_file(config->sinr_db_file);

        std::vector<irsnoma::Algorithm> algorithms;
        switch (config->algorithm)
        {
        case IRSNOMA_ALG_AUP_MPA:
            algorithms = {irsnoma::Algorithm::aup_mpa};
            break;
        case IRSNOMA_ALG_AUP_FPA:
            algorithms = {irsnoma::Algorithm::aup_fpa};
            break;
        case IRSNOMA_ALG_NEAR_FAR:
            algorithms = {irsnoma::Algorithm::near_far};
            break;
        case IRSNOMA_ALG_ALL:
            algorithms = {irsnoma::Algorithm::aup_mpa, irsnoma::Algorithm::aup_fpa, irsnoma::Algorithm::near_far};
            break;
        default:
            throw std::invalid_argument("irsnoma_simulate: unknown algorithm");
        }

        const irsnoma::CampaignResult result = irsnoma::run_campaign(core, algorithms);
        irsnoma::write_campaign_csvs(result, out_dir);
    });
}

} // extern "C"
