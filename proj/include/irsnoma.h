/* irsnoma - IRS-assisted downlink NOMA simulator with imperfect phase compensation
 * Copyright (C) 2026 the irsnoma authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C interface of the irsnoma shared library.
 *
 * Conventions: angles are radians, SINRs are linear power ratios, rates are
 * bits/s/Hz. Every function returns IRSNOMA_OK on success or an error code;
 * irsnoma_last_error() describes the most recent failure on the calling
 * thread. Out-parameters are written only on success.
 */

#ifndef IRSNOMA_H
#define IRSNOMA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C"
{
#endif

typedef enum irsnoma_status
{
    IRSNOMA_OK = 0,
    IRSNOMA_E_INVALID_ARGUMENT = 1, /* bad parameter value or null pointer */
    IRSNOMA_E_DOMAIN = 2,           /* input outside a function's domain */
    IRSNOMA_E_INFEASIBLE = 3,       /* rate constraints cannot be met */
    IRSNOMA_E_PARSE = 4,            /* malformed input file */
    IRSNOMA_E_IO = 5,               /* filesystem failure */
    IRSNOMA_E_INTERNAL = 6          /* unexpected failure */
} irsnoma_status;

const char *irsnoma_version(void);
const char *irsnoma_status_name(irsnoma_status status);

/* Message of the last failing call on this thread; empty string if none. */
const char *irsnoma_last_error(void);

/* --- scalar link-level operations ------------------------------------- */

/* sin(delta)/delta with sinc(0) = 1; delta must lie in [0, pi). */
irsnoma_status irsnoma_sinc(double delta_rad, double *out);

/* Half-bandwidth OMA rate: 0.5*log2(1 + gamma*sinc^2(delta)). */
irsnoma_status irsnoma_oma_rate(double gamma_csi, double delta_rad, double *out);

/* Two-user NOMA rates; gamma1 >= gamma2 and 0 < alpha1 < 1 required. */
irsnoma_status irsnoma_noma_rates(double gamma1, double gamma2, double alpha1, double delta_rad, double *out_strong,
                                  double *out_weak);

/* Feasible range of the strong user's power fraction. */
irsnoma_status irsnoma_alpha1_lower(double gamma1, double delta_rad, double r1_min, double *out);
irsnoma_status irsnoma_alpha1_upper(double gamma2, double delta_rad, double r2_min, double *out);

/* Right side of the phase-imperfection feasibility test. */
irsnoma_status irsnoma_sinc_sq_delta_ub(double gamma1, double gamma2, double r1_min, double r2_min, double *out);

/* Inverts sinc^2; *out_present is 0 when no delta attains the target. */
irsnoma_status irsnoma_delta_ub(double sinc_sq_target, double *out_delta_rad, int *out_present);

/* Non-strict feasibility test; *out is 1 when NOMA is admissible. */
irsnoma_status irsnoma_pair_feasible(double delta_rad, double sinc_sq_ub, int *out);

/* Power allocation policies for a feasible pair. */
irsnoma_status irsnoma_mpa_split(double gamma2, double delta_rad, double r2_min, double *out_alpha1);
irsnoma_status irsnoma_fpa_split(double r1_min, double r2_min, double *out_alpha1);

/* SINR levels below which each pair member is in outage. */
irsnoma_status irsnoma_outage_thresholds(double alpha1, double r1_min, double r2_min, double delta_rad,
                                         double *out_strong, double *out_weak);

/* Clamps alpha1 into [lower, upper]; *out_clamped reports whether it moved. */
irsnoma_status irsnoma_clamp_split(double alpha1, double lower, double upper, double *out_alpha1, int *out_clamped);

/* --- user pairing ------------------------------------------------------ */

typedef enum irsnoma_policy
{
    IRSNOMA_POLICY_MPA = 0,
    IRSNOMA_POLICY_FPA = 1,
    IRSNOMA_POLICY_FIXED = 2
} irsnoma_policy;

typedef struct irsnoma_pair_decision
{
    uint64_t strong_id;
    uint64_t weak_id;    /* meaningful only when has_weak != 0 */
    int has_weak;
    int is_noma;         /* 1 = NOMA pair, 0 = OMA */
    double alpha1;       /* NaN for OMA decisions */
    int split_clamped;   /* 1 when the policy split was clamped into bounds */
    double r1_min;       /* strong (or lone) user's minimum rate */
    double r2_min;       /* weak user's minimum rate, 0 when absent */
    double sinc_sq_ub;   /* NaN for a singleton */
    double gamma_strong; /* linear SINRs, gamma_weak NaN when absent */
    double gamma_weak;
    int group_index;
} irsnoma_pair_decision;

typedef struct irsnoma_pairing irsnoma_pairing;

/* Adaptive user pairing over `count` users with the given linear SINRs.
 * `ids` may be NULL, in which case users are numbered 0..count-1.
 * `fixed_alpha1` is read only for IRSNOMA_POLICY_FIXED. */
irsnoma_status irsnoma_pairing_aup(const double *gammas, const uint64_t *ids, size_t count, double delta_rad,
                                   irsnoma_policy policy, double fixed_alpha1, irsnoma_pairing **out);

/* Near-far baseline: no feasibility gate, alpha1 at its lower bound. */
irsnoma_status irsnoma_pairing_near_far(const double *gammas, const uint64_t *ids, size_t count, double delta_rad,
                                        irsnoma_pairing **out);

size_t irsnoma_pairing_count(const irsnoma_pairing *pairing);
irsnoma_status irsnoma_pairing_get(const irsnoma_pairing *pairing, size_t index, irsnoma_pair_decision *out);
void irsnoma_pairing_destroy(irsnoma_pairing *pairing);

/* --- input files -------------------------------------------------------- */

/* Reads one dB value per line ('#' comments and blank lines ignored) into a
 * buffer owned by the library; release it with irsnoma_free(). */
irsnoma_status irsnoma_read_sinr_db_file(const char *path, double **out_values, size_t *out_count);
void irsnoma_free(void *ptr);

/* --- network simulation -------------------------------------------------- */

typedef enum irsnoma_algorithm
{
    IRSNOMA_ALG_AUP_MPA = 0,
    IRSNOMA_ALG_AUP_FPA = 1,
    IRSNOMA_ALG_NEAR_FAR = 2,
    IRSNOMA_ALG_ALL = 3
} irsnoma_algorithm;

typedef enum irsnoma_interference
{
    IRSNOMA_INTERFERENCE_GEOMETRIC = 0,
    IRSNOMA_INTERFERENCE_FIXED = 1
} irsnoma_interference;

typedef struct irsnoma_sim_config
{
    double area_km2;
    double bs_density_per_km2;
    double user_density_per_km2;
    int m_bs;
    int n_irs;
    double delta_rad;
    double carrier_ghz;
    double tx_power_dbm;
    double noise_dbm;
    double irs_offset_m;
    int drops;
    uint64_t seed;
    int interference_mode;       /* irsnoma_interference */
    double fixed_interference_w; /* used when mode is FIXED; 0 = noise-limited */
    const char *sinr_db_file;    /* optional: bypass geometry, SINRs from file */
    int algorithm;               /* irsnoma_algorithm */
} irsnoma_sim_config;

/* Fills a config with the built-in defaults. */
void irsnoma_sim_config_init(irsnoma_sim_config *config);

/* Runs the Monte Carlo campaign and writes cdf.csv, outage.csv, pairs.csv
 * and summary.csv into out_dir (created if missing). Identical configs
 * produce byte-identical files. */
irsnoma_status irsnoma_simulate(const irsnoma_sim_config *config, const char *out_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IRSNOMA_H */
