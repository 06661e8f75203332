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

#include "csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "errors.hpp"

namespace irsnoma
{

namespace
{

constexpr std::size_t k_cdf_points = 1000;

std::ofstream open_output(const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open '" + path + "' for writing");
    return out;
}

void finish_output(std::ofstream &out, const std::string &path)
{
    out.flush();
    if (!out)
        throw io_error("write to '" + path + "' failed");
}

// Emits the empirical CDF on a quantile grid: at most k_cdf_points rows, each
// (sorted_rates[ceil(k*n/K)-1], k/K). A constant rate list collapses to a
// visible step.
void write_cdf_rows(std::ofstream &out, const std::string &label, const std::vector<double> &sorted_rates)
{
    const std::size_t n = sorted_rates.size();
    if (n == 0)
        return;
    const std::size_t points = n < k_cdf_points ? n : k_cdf_points;
    for (std::size_t k = 1; k <= points; ++k)
    {
        const std::size_t index = (k * n + points - 1) / points - 1;
        out << label << ',' << format_number(sorted_rates[index]) << ','
            << format_number(static_cast<double>(k) / static_cast<double>(points)) << '\n';
    }
}

} // namespace

std::string format_number(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

void write_campaign_csvs(const CampaignResult &result, const std::string &out_dir)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw io_error("cannot create output directory '" + out_dir + "': " + ec.message());

    {
        const std::string path = out_dir + "/cdf.csv";
        std::ofstream out = open_output(path);
        out << "algorithm,rate_bps_hz,cdf\n";
        for (const AlgorithmAggregate &agg : result.aggregates)
        {
            const std::string name(algorithm_name(agg.algorithm));
            write_cdf_rows(out, name + ":approx", agg.rates_approx);
            write_cdf_rows(out, name + ":exact", agg.rates_exact);
        }
        finish_output(out, path);
    }

    {
        const std::string path = out_dir + "/outage.csv";
        std::ofstream out = open_output(path);
        out << "algorithm,role,outage_prob,n_samples\n";
        for (const AlgorithmAggregate &agg : result.aggregates)
            for (UserRole role : {UserRole::strong, UserRole::weak, UserRole::oma})
                out << algorithm_name(agg.algorithm) << ',' << role_name(role) << ','
                    << format_number(agg.outage_probability(role)) << ',' << agg.samples(role) << '\n';
        finish_output(out, path);
    }

    {
        const std::string path = out_dir + "/pairs.csv";
        std::ofstream out = open_output(path);
        out << "algorithm,drop_id,bs_id,strong_id,weak_id,mode,alpha1,gamma1_db,gamma2_db,sinc_sq_ub\n";
        for (std::size_t a = 0; a < result.algorithms.size(); ++a)
            for (const DropMetrics &drop : result.drop_metrics[a])
                for (const PairRecord &pair : drop.pairs)
                    out << algorithm_name(result.algorithms[a]) << ',' << pair.drop_id << ',' << pair.bs_id << ','
                        << pair.strong_id << ',' << pair.weak_id << ','
                        << (pair.mode == PairMode::noma ? "NOMA" : "OMA") << ',' << format_number(pair.alpha1)
                        << ',' << format_number(pair.gamma1_db) << ',' << format_number(pair.gamma2_db) << ','
                        << format_number(pair.sinc_sq_ub) << '\n';
        finish_output(out, path);
    }

    {
        const std::string path = out_dir + "/summary.csv";
        std::ofstream out = open_output(path);
        out << "algorithm,mean_asr,min_required_asr\n";
        for (const AlgorithmAggregate &agg : result.aggregates)
            out << algorithm_name(agg.algorithm) << ',' << format_number(agg.mean_asr) << ','
                << format_number(agg.min_required_asr) << '\n';
        finish_output(out, path);
    }
}

} // namespace irsnoma
