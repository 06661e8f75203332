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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irsnoma.h"

namespace
{

constexpr double k_pi = 3.14159265358979323846;
constexpr double k_nan = std::numeric_limits<double>::quiet_NaN();

double deg_to_rad(double deg)
{
    return deg * k_pi / 180.0;
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

std::string fmt9(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

[[noreturn]] void fail(const std::string &message)
{
    throw std::runtime_error(message);
}

void check(irsnoma_status status, const std::string &context)
{
    if (status != IRSNOMA_OK)
        fail(context + ": " + irsnoma_status_name(status) + " (" + irsnoma_last_error() + ")");
}

struct PolicyChoice
{
    irsnoma_policy policy{IRSNOMA_POLICY_MPA};
    double fixed_alpha1{0.0};
};

PolicyChoice parse_policy(const std::string &text)
{
    if (text == "mpa")
        return {IRSNOMA_POLICY_MPA, 0.0};
    if (text == "fpa")
        return {IRSNOMA_POLICY_FPA, 0.0};
    if (text.rfind("fixed:", 0) == 0)
    {
        std::size_t consumed = 0;
        double alpha = 0.0;
        const std::string value = text.substr(6);
        try
        {
            alpha = std::stod(value, &consumed);
        }
        catch (const std::exception &)
        {
            consumed = 0;
        }
        if (consumed != value.size() || !(alpha > 0.0) || !(alpha < 1.0))
            fail("policy: fixed alpha1 must be a number in (0, 1), got '" + value + "'");
        return {IRSNOMA_POLICY_FIXED, alpha};
    }
    fail("policy must be one of mpa, fpa, fixed:<alpha1>, got '" + text + "'");
}

bool parse_value(const std::string &text, double &out)
{
    std::size_t consumed = 0;
    try
    {
        out = std::stod(text, &consumed);
    }
    catch (const std::exception &)
    {
        return false;
    }
    return consumed == text.size();
}

bool parse_value(const std::string &text, int &out)
{
    std::size_t consumed = 0;
    try
    {
        out = std::stoi(text, &consumed);
    }
    catch (const std::exception &)
    {
        return false;
    }
    return consumed == text.size();
}

bool parse_value(const std::string &text, std::uint64_t &out)
{
    std::size_t consumed = 0;
    try
    {
        out = std::stoull(text, &consumed);
    }
    catch (const std::exception &)
    {
        return false;
    }
    return consumed == text.size();
}

bool parse_value(const std::string &text, std::string &out)
{
    out = text;
    return true;
}

// Registers one subcommand's options and applies an optional key=value
// configuration file with the precedence: built-in defaults, then config
// file entries, then explicit command-line flags.
class CommandConfig
{
  public:
    explicit CommandConfig(CLI::App *cmd) : cmd_(cmd)
    {
        cmd->add_option("--config", path_, "Configuration file (key=value lines, # comments)");
    }

    template <typename T> CLI::Option *option(const std::string &name, T &var, const std::string &help)
    {
        CLI::Option *opt = cmd_->add_option("--" + name, var, help);
        setters_[name] = [&var](const std::string &text) { return parse_value(text, var); };
        return opt;
    }

    // Reads the config file (if any) and fills every option that was not
    // given on the command line.
    void apply() const
    {
        if (path_.empty())
            return;
        std::ifstream in(path_);
        if (!in)
            fail("cannot open config file '" + path_ + "'");

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

            const auto eq = token.find('=');
            if (eq == std::string::npos)
                fail(path_ + ":" + std::to_string(line_number) + ": expected key=value, got '" + token + "'");
            std::string key = token.substr(0, eq);
            std::string value = token.substr(eq + 1);
            key.erase(key.find_last_not_of(" \t") + 1);
            const auto value_begin = value.find_first_not_of(" \t");
            value = value_begin == std::string::npos ? std::string() : value.substr(value_begin);

            const auto setter = setters_.find(key);
            if (setter == setters_.end())
                fail(path_ + ":" + std::to_string(line_number) + ": unknown key '" + key + "'");
            if (cmd_->count("--" + key) > 0)
                continue; // explicit flag wins
            if (!setter->second(value))
                fail(path_ + ":" + std::to_string(line_number) + ": invalid value '" + value + "' for '" + key +
                     "'");
        }
    }

  private:
    CLI::App *cmd_;
    std::string path_;
    std::map<std::string, std::function<bool(const std::string &)>> setters_;
};

// Writes to <out_dir>/<name> when an output directory was given, otherwise to
// stdout.
class OutputTarget
{
  public:
    OutputTarget(const std::string &out_dir, const std::string &name)
    {
        if (!out_dir.empty())
        {
            std::filesystem::create_directories(out_dir);
            path_ = out_dir + "/" + name;
            file_.open(path_, std::ios::binary);
            if (!file_)
                fail("cannot open '" + path_ + "' for writing");
        }
    }

    std::ostream &stream() { return path_.empty() ? std::cout : file_; }

    void finish()
    {
        if (!path_.empty())
        {
            file_.flush();
            if (!file_)
                fail("write to '" + path_ + "' failed");
            std::cout << "wrote " << path_ << "\n";
        }
    }

  private:
    std::string path_;
    std::ofstream file_;
};

struct SweepDeltaArgs
{
    double gamma1_db{8.0};
    double gamma2_db{5.0};
    double delta_min_deg{0.0};
    double delta_max_deg{50.0};
    double delta_step_deg{1.0};
    std::string policy{"mpa"};
    std::string out_dir;
};

// One row of the delta sweep: minimum rates are the perfect-compensation OMA
// rates (fixed targets), NOMA rates follow the policy split at the operating
// delta, so the curves cross the flat minimum-rate lines at the imperfection
// bound.
void run_sweep_delta(const SweepDeltaArgs &args)
{
    if (args.gamma1_db < args.gamma2_db)
        fail("sweep-delta: gamma1-db must be at least gamma2-db (strong user first)");
    if (!(args.delta_step_deg > 0.0) || args.delta_max_deg < args.delta_min_deg)
        fail("sweep-delta: delta range must be non-empty with a positive step");
    if (args.delta_min_deg < 0.0 || args.delta_max_deg >= 180.0)
        fail("sweep-delta: delta range must lie in [0, 180) degrees");

    const double gamma1 = db_to_linear(args.gamma1_db);
    const double gamma2 = db_to_linear(args.gamma2_db);
    const PolicyChoice policy = parse_policy(args.policy);

    double r1_min = 0.0;
    double r2_min = 0.0;
    check(irsnoma_oma_rate(gamma1, 0.0, &r1_min), "oma rate");
    check(irsnoma_oma_rate(gamma2, 0.0, &r2_min), "oma rate");
    double sinc_sq_ub = 0.0;
    check(irsnoma_sinc_sq_delta_ub(gamma1, gamma2, r1_min, r2_min, &sinc_sq_ub), "feasibility bound");

    OutputTarget target(args.out_dir, "sweep_delta.csv");
    std::ostream &out = target.stream();
    out << "delta_rad,delta_deg,r1_min,r2_min,r1_noma,r2_noma,asr,feasible,sinc_sq_ub\n";

    const int steps =
        static_cast<int>(std::floor((args.delta_max_deg - args.delta_min_deg) / args.delta_step_deg + 1e-9));
    for (int i = 0; i <= steps; ++i)
    {
        const double delta_deg = args.delta_min_deg + i * args.delta_step_deg;
        const double delta_rad = deg_to_rad(delta_deg);

        double alpha1 = k_nan;
        switch (policy.policy)
        {
        case IRSNOMA_POLICY_MPA:
            if (irsnoma_alpha1_upper(gamma2, delta_rad, r2_min, &alpha1) != IRSNOMA_OK)
                alpha1 = k_nan;
            break;
        case IRSNOMA_POLICY_FPA:
            if (irsnoma_fpa_split(r1_min, r2_min, &alpha1) != IRSNOMA_OK)
                alpha1 = k_nan;
            break;
        case IRSNOMA_POLICY_FIXED:
            alpha1 = policy.fixed_alpha1;
            break;
        }

        double r1_noma = k_nan;
        double r2_noma = k_nan;
        double asr = k_nan;
        if (std::isfinite(alpha1) &&
            irsnoma_noma_rates(gamma1, gamma2, alpha1, delta_rad, &r1_noma, &r2_noma) == IRSNOMA_OK)
            asr = r1_noma + r2_noma;
        else
        {
            r1_noma = k_nan;
            r2_noma = k_nan;
        }

        int feasible = 0;
        check(irsnoma_pair_feasible(delta_rad, sinc_sq_ub, &feasible), "feasibility");

        out << fmt9(delta_rad) << ',' << fmt9(delta_deg) << ',' << fmt9(r1_min) << ',' << fmt9(r2_min) << ','
            << fmt9(r1_noma) << ',' << fmt9(r2_noma) << ',' << fmt9(asr) << ',' << (feasible ? "true" : "false")
            << ',' << fmt9(sinc_sq_ub) << '\n';
    }
    target.finish();
}

struct SweepAlphaArgs
{
    double gamma1_db{8.0};
    double gamma2_db{5.0};
    double delta_deg{11.0};
    double alpha_min{0.01};
    double alpha_max{0.99};
    double alpha_step{0.01};
    std::string out_dir;
};

void run_sweep_alpha(const SweepAlphaArgs &args)
{
    if (args.gamma1_db < args.gamma2_db)
        fail("sweep-alpha: gamma1-db must be at least gamma2-db (strong user first)");
    if (!(args.alpha_step > 0.0) || args.alpha_max < args.alpha_min)
        fail("sweep-alpha: alpha range must be non-empty with a positive step");
    if (!(args.alpha_min > 0.0) || !(args.alpha_max < 1.0))
        fail("sweep-alpha: alpha range must stay strictly inside (0, 1)");
    if (args.delta_deg < 0.0 || args.delta_deg >= 180.0)
        fail("sweep-alpha: delta must lie in [0, 180) degrees");

    const double gamma1 = db_to_linear(args.gamma1_db);
    const double gamma2 = db_to_linear(args.gamma2_db);
    const double delta_rad = deg_to_rad(args.delta_deg);

    double r1_min = 0.0;
    double r2_min = 0.0;
    check(irsnoma_oma_rate(gamma1, 0.0, &r1_min), "oma rate");
    check(irsnoma_oma_rate(gamma2, 0.0, &r2_min), "oma rate");

    double alpha_lb = k_nan;
    double alpha_ub = k_nan;
    double alpha_fpa = k_nan;
    check(irsnoma_alpha1_lower(gamma1, delta_rad, r1_min, &alpha_lb), "alpha1 lower bound");
    check(irsnoma_alpha1_upper(gamma2, delta_rad, r2_min, &alpha_ub), "alpha1 upper bound");
    check(irsnoma_fpa_split(r1_min, r2_min, &alpha_fpa), "fpa split");

    std::vector<double> alphas;
    const int steps = static_cast<int>(std::floor((args.alpha_max - args.alpha_min) / args.alpha_step + 1e-9));
    for (int i = 0; i <= steps; ++i)
        alphas.push_back(args.alpha_min + i * args.alpha_step);
    for (double marker : {alpha_lb, alpha_ub, alpha_fpa})
        if (marker > 0.0 && marker < 1.0)
            alphas.push_back(marker);
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

    OutputTarget target(args.out_dir, "sweep_alpha.csv");
    std::ostream &out = target.stream();
    out << "# alpha_lb = " << fmt9(alpha_lb) << '\n';
    out << "# alpha_ub = " << fmt9(alpha_ub) << '\n';
    out << "# alpha_fpa = " << fmt9(alpha_fpa) << '\n';
    out << "alpha1,r1_noma,r2_noma,asr,r1_min,r2_min\n";

    for (double alpha1 : alphas)
    {
        double r1_noma = k_nan;
        double r2_noma = k_nan;
        double asr = k_nan;
        if (irsnoma_noma_rates(gamma1, gamma2, alpha1, delta_rad, &r1_noma, &r2_noma) == IRSNOMA_OK)
            asr = r1_noma + r2_noma;
        else
        {
            r1_noma = k_nan;
            r2_noma = k_nan;
        }
        out << fmt9(alpha1) << ',' << fmt9(r1_noma) << ',' << fmt9(r2_noma) << ',' << fmt9(asr) << ','
            << fmt9(r1_min) << ',' << fmt9(r2_min) << '\n';
    }
    target.finish();
}

struct PairArgs
{
    std::string sinr_file;
    double delta_deg{11.0};
    std::string policy{"mpa"};
    std::string out_dir;
};

void run_pair(const PairArgs &args)
{
    if (args.delta_deg < 0.0 || args.delta_deg >= 180.0)
        fail("pair: delta must lie in [0, 180) degrees");
    const PolicyChoice policy = parse_policy(args.policy);

    double *values = nullptr;
    size_t count = 0;
    check(irsnoma_read_sinr_db_file(args.sinr_file.c_str(), &values, &count), "reading '" + args.sinr_file + "'");

    std::vector<double> gammas(count);
    std::vector<std::uint64_t> ids(count);
    for (size_t i = 0; i < count; ++i)
    {
        gammas[i] = db_to_linear(values[i]);
        ids[i] = i + 1; // ids follow the order of values in the file
    }
    irsnoma_free(values);

    irsnoma_pairing *pairing = nullptr;
    check(irsnoma_pairing_aup(gammas.data(), ids.data(), count, deg_to_rad(args.delta_deg), policy.policy,
                              policy.fixed_alpha1, &pairing),
          "pairing");

    OutputTarget target(args.out_dir, "pair.csv");
    std::ostream &out = target.stream();
    out << "strong_id,weak_id,mode,alpha1,r1_min,r2_min,sinc_sq_ub\n";
    for (size_t i = 0; i < irsnoma_pairing_count(pairing); ++i)
    {
        irsnoma_pair_decision d;
        check(irsnoma_pairing_get(pairing, i, &d), "pairing result");
        out << d.strong_id << ',';
        if (d.has_weak)
            out << d.weak_id;
        out << ',' << (d.is_noma ? "NOMA" : "OMA") << ',' << fmt9(d.alpha1) << ',' << fmt9(d.r1_min) << ','
            << fmt9(d.r2_min) << ',' << fmt9(d.sinc_sq_ub) << '\n';
    }
    irsnoma_pairing_destroy(pairing);
    target.finish();
}

struct SimulateArgs
{
    irsnoma_sim_config config;
    double delta_deg{11.0};
    std::string algorithm{"all"};
    std::string interference{"geometric"};
    std::string sinr_file;
    std::string out_dir;
};

void run_simulate(SimulateArgs &args)
{
    if (args.out_dir.empty())
        fail("simulate: --out is required");
    if (args.delta_deg < 0.0 || args.delta_deg >= 180.0)
        fail("simulate: delta must lie in [0, 180) degrees");
    args.config.delta_rad = deg_to_rad(args.delta_deg);

    if (args.algorithm == "all")
        args.config.algorithm = IRSNOMA_ALG_ALL;
    else if (args.algorithm == "aup-mpa")
        args.config.algorithm = IRSNOMA_ALG_AUP_MPA;
    else if (args.algorithm == "aup-fpa")
        args.config.algorithm = IRSNOMA_ALG_AUP_FPA;
    else if (args.algorithm == "near-far")
        args.config.algorithm = IRSNOMA_ALG_NEAR_FAR;
    else
        fail("simulate: --algorithm must be one of aup-mpa, aup-fpa, near-far, all");

    if (args.interference == "geometric")
        args.config.interference_mode = IRSNOMA_INTERFERENCE_GEOMETRIC;
    else if (args.interference == "fixed")
        args.config.interference_mode = IRSNOMA_INTERFERENCE_FIXED;
    else
        fail("simulate: --interference must be geometric or fixed");

    if (!args.sinr_file.empty())
        args.config.sinr_db_file = args.sinr_file.c_str();

    check(irsnoma_simulate(&args.config, args.out_dir.c_str()), "simulate");
    for (const char *name : {"cdf.csv", "outage.csv", "pairs.csv", "summary.csv"})
        std::cout << "wrote " << args.out_dir << "/" << name << "\n";
}

void add_common_options(CommandConfig &config, std::uint64_t &seed, std::string &format, std::string &out_dir)
{
    config.option("seed", seed, "Random seed");
    config.option("format", format, "Output format (csv)")->check(CLI::IsMember({"csv"}));
    config.option("out", out_dir, "Output directory (default: CSV to stdout)");
}

void require_gammas(double gamma1_db, double gamma2_db)
{
    if (std::isnan(gamma1_db) || std::isnan(gamma2_db))
        fail("--gamma1-db and --gamma2-db are required (flags or config file)");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"IRS-assisted downlink NOMA simulator with imperfect phase compensation"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::string format = "csv";

    SweepDeltaArgs sweep_delta;
    sweep_delta.gamma1_db = k_nan;
    sweep_delta.gamma2_db = k_nan;
    CLI::App *cmd_sweep_delta =
        app.add_subcommand("sweep-delta", "Rates and feasibility of one pair across phase imperfection");
    CommandConfig sweep_delta_config(cmd_sweep_delta);
    sweep_delta_config.option("gamma1-db", sweep_delta.gamma1_db, "Strong user CSI SINR [dB]");
    sweep_delta_config.option("gamma2-db", sweep_delta.gamma2_db, "Weak user CSI SINR [dB]");
    sweep_delta_config.option("delta-min-deg", sweep_delta.delta_min_deg, "Sweep start [deg]");
    sweep_delta_config.option("delta-max-deg", sweep_delta.delta_max_deg, "Sweep end [deg]");
    sweep_delta_config.option("delta-step-deg", sweep_delta.delta_step_deg, "Sweep step [deg]");
    sweep_delta_config.option("policy", sweep_delta.policy, "Power allocation: mpa, fpa or fixed:<alpha1>");
    add_common_options(sweep_delta_config, seed, format, sweep_delta.out_dir);

    SweepAlphaArgs sweep_alpha;
    sweep_alpha.gamma1_db = k_nan;
    sweep_alpha.gamma2_db = k_nan;
    CLI::App *cmd_sweep_alpha =
        app.add_subcommand("sweep-alpha", "Rates of one pair across the strong user's power fraction");
    CommandConfig sweep_alpha_config(cmd_sweep_alpha);
    sweep_alpha_config.option("gamma1-db", sweep_alpha.gamma1_db, "Strong user CSI SINR [dB]");
    sweep_alpha_config.option("gamma2-db", sweep_alpha.gamma2_db, "Weak user CSI SINR [dB]");
    sweep_alpha_config.option("delta-deg", sweep_alpha.delta_deg, "Phase imperfection [deg]");
    sweep_alpha_config.option("alpha-min", sweep_alpha.alpha_min, "Sweep start");
    sweep_alpha_config.option("alpha-max", sweep_alpha.alpha_max, "Sweep end");
    sweep_alpha_config.option("alpha-step", sweep_alpha.alpha_step, "Sweep step");
    add_common_options(sweep_alpha_config, seed, format, sweep_alpha.out_dir);

    PairArgs pair;
    CLI::App *cmd_pair = app.add_subcommand("pair", "Adaptive user pairing over SINRs read from a file");
    CommandConfig pair_config(cmd_pair);
    pair_config.option("sinr-file", pair.sinr_file, "File with one dB value per line");
    pair_config.option("delta-deg", pair.delta_deg, "Phase imperfection [deg]");
    pair_config.option("policy", pair.policy, "Power allocation: mpa, fpa or fixed:<alpha1>");
    add_common_options(pair_config, seed, format, pair.out_dir);

    SimulateArgs simulate;
    irsnoma_sim_config_init(&simulate.config);
    CLI::App *cmd_simulate = app.add_subcommand("simulate", "Monte Carlo network campaign writing CSV outputs");
    CommandConfig simulate_config(cmd_simulate);
    simulate_config.option("drops", simulate.config.drops, "Number of drops");
    simulate_config.option("area-km2", simulate.config.area_km2, "Region area [km^2]");
    simulate_config.option("bs-density", simulate.config.bs_density_per_km2, "BS density [1/km^2]");
    simulate_config.option("user-density", simulate.config.user_density_per_km2, "User density [1/km^2]");
    simulate_config.option("m", simulate.config.m_bs, "BS antenna count");
    simulate_config.option("n", simulate.config.n_irs, "IRS element count");
    simulate_config.option("delta-deg", simulate.delta_deg, "Phase imperfection [deg]");
    simulate_config.option("carrier-ghz", simulate.config.carrier_ghz, "Carrier frequency [GHz]");
    simulate_config.option("tx-power-dbm", simulate.config.tx_power_dbm, "BS transmit power [dBm]");
    simulate_config.option("noise-dbm", simulate.config.noise_dbm, "Noise power [dBm]");
    simulate_config.option("irs-offset-m", simulate.config.irs_offset_m, "BS to IRS distance [m]");
    simulate_config.option("algorithm", simulate.algorithm, "aup-mpa, aup-fpa, near-far or all");
    simulate_config.option("interference", simulate.interference, "geometric or fixed");
    simulate_config.option("interference-w", simulate.config.fixed_interference_w,
                           "Interference power for fixed mode [W]");
    simulate_config.option("sinr-file", simulate.sinr_file,
                           "Bypass geometry: per-user SINRs from file, one dB value per line");
    add_common_options(simulate_config, seed, format, simulate.out_dir);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e);
    }

    try
    {
        if (cmd_sweep_delta->parsed())
        {
            sweep_delta_config.apply();
            require_gammas(sweep_delta.gamma1_db, sweep_delta.gamma2_db);
            run_sweep_delta(sweep_delta);
        }
        else if (cmd_sweep_alpha->parsed())
        {
            sweep_alpha_config.apply();
            require_gammas(sweep_alpha.gamma1_db, sweep_alpha.gamma2_db);
            run_sweep_alpha(sweep_alpha);
        }
        else if (cmd_pair->parsed())
        {
            pair_config.apply();
            if (pair.sinr_file.empty())
                fail("--sinr-file is required (flag or config file)");
            run_pair(pair);
        }
        else if (cmd_simulate->parsed())
        {
            simulate_config.apply();
            simulate.config.seed = seed;
            run_simulate(simulate);
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
