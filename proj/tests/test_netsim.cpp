#include <doctest.h>

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "core/csv.hpp"
#include "core/errors.hpp"
#include "core/netsim.hpp"
#include "test_support.hpp"

using namespace irsnoma;
namespace ts = testsupport;
namespace fs = std::filesystem;

namespace
{

std::string slurp(const fs::path &path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path fresh_dir(const std::string &name)
{
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    return dir;
}

NetworkConfig direct_config(std::vector<double> sinr_db, double delta_rad, int drops, std::uint64_t seed)
{
    NetworkConfig config;
    config.direct_sinr_db = std::move(sinr_db);
    config.delta_rad = delta_rad;
    config.drops = drops;
    config.seed = seed;
    return config;
}

} // namespace

TEST_CASE("path loss model")
{
    const double amp = path_loss(100.0, 3.5);
    CHECK(amp == doctest::Approx(ts::k_path_amp_100m).epsilon(1e-9));
    CHECK(-20.0 * std::log10(amp) == doctest::Approx(ts::k_path_loss_db_100m).epsilon(1e-12));

    // 22 dB per distance decade, 20 dB per frequency decade.
    const double d_decade = -20.0 * std::log10(path_loss(1000.0, 3.5) / path_loss(100.0, 3.5));
    CHECK(d_decade == doctest::Approx(22.0).epsilon(1e-9));
    const double f_decade = -20.0 * std::log10(path_loss(100.0, 35.0) / path_loss(100.0, 3.5));
    CHECK(f_decade == doctest::Approx(20.0).epsilon(1e-9));

    CHECK(path_loss(200.0, 3.5) < path_loss(100.0, 3.5));
    CHECK_THROWS_AS(path_loss(0.5, 3.5), std::domain_error);
    CHECK_THROWS_AS(path_loss(100.0, 0.0), std::invalid_argument);

    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dbm_to_watts(-94.0) == doctest::Approx(std::pow(10.0, -12.4)).epsilon(1e-12));
}

TEST_CASE("deployment statistics and association")
{
    NetworkConfig config;
    config.interference_mode = InterferenceMode::fixed;

    RandomStream rng(42);
    const int n_drops = 300;
    double bs_sum = 0.0;
    double user_sum = 0.0;
    for (int i = 0; i < n_drops; ++i)
    {
        const Drop drop = deploy(config, rng);
        bs_sum += static_cast<double>(drop.bs_positions.size());
        user_sum += static_cast<double>(drop.user_positions.size());
        REQUIRE(drop.irs_positions.size() == drop.bs_positions.size());
        REQUIRE(drop.serving_bs.size() == drop.user_positions.size());
    }
    CHECK(std::abs(bs_sum / n_drops - 25.0) < 3.0 * std::sqrt(25.0 / n_drops));
    CHECK(std::abs(user_sum / n_drops - 2000.0) < 3.0 * std::sqrt(2000.0 / n_drops));

    // Exhaustive nearest-IRS check and the fixed BS-IRS offset.
    RandomStream rng2(43);
    for (int i = 0; i < 3; ++i)
    {
        const Drop drop = deploy(config, rng2);
        for (std::size_t b = 0; b < drop.bs_positions.size(); ++b)
        {
            const double dx = drop.bs_positions[b].x - drop.irs_positions[b].x;
            const double dy = drop.bs_positions[b].y - drop.irs_positions[b].y;
            CHECK(std::sqrt(dx * dx + dy * dy) == doctest::Approx(config.irs_offset_m).epsilon(1e-9));
        }
        for (std::size_t u = 0; u < drop.user_positions.size(); ++u)
        {
            const Vec2 &user = drop.user_positions[u];
            double best = 1e300;
            for (const Vec2 &irs : drop.irs_positions)
            {
                const double dx = user.x - irs.x;
                const double dy = user.y - irs.y;
                best = std::min(best, dx * dx + dy * dy);
            }
            const Vec2 &serving = drop.irs_positions[drop.serving_bs[u]];
            const double dx = user.x - serving.x;
            const double dy = user.y - serving.y;
            REQUIRE(dx * dx + dy * dy == doctest::Approx(best).epsilon(1e-12));
        }
    }
}

TEST_CASE("empty draws are resampled and counted")
{
    NetworkConfig config;
    config.bs_density_per_km2 = 1.0;
    config.user_density_per_km2 = 1.0;
    config.interference_mode = InterferenceMode::fixed;

    RandomStream rng(21);
    int total_resamples = 0;
    for (int i = 0; i < 50; ++i)
    {
        const Drop drop = deploy(config, rng);
        REQUIRE(!drop.bs_positions.empty());
        REQUIRE(!drop.user_positions.empty());
        total_resamples += drop.resamples;
    }
    // With unit expected counts, P(empty draw) is about 1 - (1-e^-1)^2 per
    // attempt, so 50 drops without a single resample is implausible.
    CHECK(total_resamples > 0);
}

TEST_CASE("config validation")
{
    NetworkConfig config;
    CHECK_NOTHROW(validate_config(config));

    NetworkConfig bad = config;
    bad.bs_density_per_km2 = 0.0;
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = config;
    bad.area_km2 = 0.01; // expected BS count below 1
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = config;
    bad.delta_rad = pi;
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = config;
    bad.drops = 0;
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
}

TEST_CASE("interference uses the torus metric across region edges")
{
    NetworkConfig config;
    config.area_km2 = 1.0; // side 1000 m

    Drop drop;
    drop.bs_positions = {{100.0, 100.0}, {900.0, 100.0}};
    drop.irs_positions = {{150.0, 100.0}, {950.0, 100.0}};
    drop.user_positions = {{5.0, 100.0}};
    drop.serving_bs = {0};

    const DropMetrics metrics = evaluate_drop(drop, 0, config, Algorithm::aup_mpa, 1);
    REQUIRE(metrics.users.size() == 1);

    const double tx_w = dbm_to_watts(config.tx_power_dbm);
    const double noise_w = dbm_to_watts(config.noise_dbm);
    const double l_bs_irs = path_loss(50.0, config.carrier_ghz);
    const double l_irs_user = path_loss(145.0, config.carrier_ghz);
    // Interferer at x=900 wraps around: distance 105 m, not 895 m.
    const double interferer_amp = path_loss(105.0, config.carrier_ghz);
    const double interference = tx_w * interferer_amp * interferer_amp;
    const double expected = tx_w * std::pow(l_bs_irs * l_irs_user, 2) * 32.0 * 32.0 * 8.0 /
                            (interference + noise_w);
    CHECK(metrics.users[0].gamma_csi == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("zero phase imperfection: exact rates equal approximate rates, no outage")
{
    NetworkConfig config;
    config.bs_density_per_km2 = 3.0;
    config.user_density_per_km2 = 40.0;
    config.delta_rad = 0.0;
    config.drops = 2;
    config.interference_mode = InterferenceMode::fixed;
    config.seed = 11;

    const CampaignResult result = run_campaign(config, {Algorithm::aup_mpa, Algorithm::aup_fpa});
    for (const auto &per_drop : result.drop_metrics)
        for (const DropMetrics &drop : per_drop)
            for (const UserRecord &user : drop.users)
            {
                REQUIRE(user.rate_exact == user.rate_approx);
                REQUIRE_FALSE(user.outage);
            }
}

TEST_CASE("direct-SINR mode composes with the pairing module")
{
    const NetworkConfig config = direct_config({8.0, 5.0}, ts::k_delta_11, 1, 3);
    const CampaignResult result = run_campaign(config, {Algorithm::aup_mpa});
    REQUIRE(result.drop_metrics[0].size() == 1);
    const DropMetrics &drop = result.drop_metrics[0][0];
    REQUIRE(drop.pairs.size() == 1);

    const CsiSinr g2(db_to_linear(5.0));
    const double expected_alpha = mpa_split(g2, ts::k_delta_11, oma_rate(g2, ts::k_delta_11)).alpha1();
    CHECK(drop.pairs[0].alpha1 == doctest::Approx(expected_alpha).epsilon(1e-12));
    CHECK(drop.pairs[0].mode == PairMode::noma);
    CHECK(drop.pairs[0].gamma1_db == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(drop.pairs[0].gamma2_db == doctest::Approx(5.0).epsilon(1e-9));

    REQUIRE(drop.users.size() == 2);
    CHECK(drop.users[0].role == UserRole::strong);
    CHECK(drop.users[1].role == UserRole::weak);
    // The weak user of an MPA pair sits exactly on its minimum rate.
    CHECK(drop.users[1].rate_approx == doctest::Approx(drop.users[1].min_rate).epsilon(1e-12));
}

TEST_CASE("MPA weak-user outage matches the coherence tail probability")
{
    // Under MPA the weak user is at its rate boundary, so outage reduces to
    // the event that the realized coherence falls below sinc^2(delta).
    // Estimate that tail with an independent scalar Monte Carlo.
    std::mt19937_64 gen = ts::make_generator(12345);
    std::uniform_real_distribution<double> angle(-ts::k_delta_11, ts::k_delta_11);
    const int oracle_trials = 100000;
    int below = 0;
    for (int t = 0; t < oracle_trials; ++t)
    {
        std::complex<double> acc{0.0, 0.0};
        for (int k = 0; k < 32; ++k)
            acc += std::exp(std::complex<double>(0.0, angle(gen)));
        if (std::norm(acc) / (32.0 * 32.0) < ts::k_sinc_sq_11)
            ++below;
    }
    const double oracle_tail = static_cast<double>(below) / oracle_trials;

    const NetworkConfig config = direct_config({8.0, 5.0}, ts::k_delta_11, 20000, 99);
    const CampaignResult result = run_campaign(config, {Algorithm::aup_mpa});
    const double weak_outage = result.aggregates[0].outage_probability(UserRole::weak);

    CHECK(std::abs(weak_outage - oracle_tail) < 0.02);
}

TEST_CASE("aggregate: degenerate rate distribution collapses to a step")
{
    const NetworkConfig config = direct_config({5.0}, 0.0, 50, 5);
    const CampaignResult result = run_campaign(config, {Algorithm::aup_mpa});
    const AlgorithmAggregate &agg = result.aggregates[0];

    const double rate = oma_rate(CsiSinr(db_to_linear(5.0)), 0.0);
    REQUIRE(agg.rates_exact.size() == 50);
    for (double r : agg.rates_exact)
        CHECK(r == rate);
    CHECK(agg.outage_probability(UserRole::oma) == 0.0);
    CHECK(agg.samples(UserRole::oma) == 50);
    CHECK(agg.pair_count == 0);
}

TEST_CASE("sum-rate ordering between the policies on shared drops")
{
    NetworkConfig config;
    config.bs_density_per_km2 = 5.0;
    config.user_density_per_km2 = 100.0;
    config.drops = 10;
    config.seed = 7;
    config.interference_mode = InterferenceMode::fixed;

    const CampaignResult result =
        run_campaign(config, {Algorithm::aup_mpa, Algorithm::aup_fpa, Algorithm::near_far});
    const AlgorithmAggregate &mpa = result.aggregates[0];
    const AlgorithmAggregate &fpa = result.aggregates[1];

    CHECK(mpa.mean_asr >= fpa.mean_asr - 1e-12);
    CHECK(fpa.mean_asr >= fpa.min_required_asr - 1e-12);
    CHECK(mpa.min_required_asr == doctest::Approx(fpa.min_required_asr).epsilon(1e-12));
    CHECK(mpa.pair_count == fpa.pair_count);
}

TEST_CASE("geometric interference depresses the SINR relative to noise-limited")
{
    NetworkConfig noise_limited;
    noise_limited.bs_density_per_km2 = 5.0;
    noise_limited.user_density_per_km2 = 60.0;
    noise_limited.drops = 3;
    noise_limited.seed = 13;
    noise_limited.interference_mode = InterferenceMode::fixed;

    NetworkConfig geometric = noise_limited;
    geometric.interference_mode = InterferenceMode::geometric;

    const CampaignResult quiet = run_campaign(noise_limited, {Algorithm::aup_mpa});
    const CampaignResult loud = run_campaign(geometric, {Algorithm::aup_mpa});

    double quiet_mean = 0.0;
    double loud_mean = 0.0;
    std::size_t n = 0;
    for (std::size_t d = 0; d < quiet.drop_metrics[0].size(); ++d)
    {
        const auto &qu = quiet.drop_metrics[0][d].users;
        const auto &lu = loud.drop_metrics[0][d].users;
        REQUIRE(qu.size() == lu.size());
        for (std::size_t i = 0; i < qu.size(); ++i)
        {
            quiet_mean += qu[i].gamma_csi;
            loud_mean += lu[i].gamma_csi;
            ++n;
        }
    }
    CHECK(loud_mean / n < quiet_mean / n);
}

TEST_CASE("campaigns are deterministic and CSV output is byte-identical")
{
    NetworkConfig config;
    config.bs_density_per_km2 = 4.0;
    config.user_density_per_km2 = 50.0;
    config.drops = 5;
    config.seed = 2026;
    config.interference_mode = InterferenceMode::fixed;

    const std::vector<Algorithm> algorithms{Algorithm::aup_mpa, Algorithm::aup_fpa, Algorithm::near_far};
    const CampaignResult first = run_campaign(config, algorithms);
    const CampaignResult second = run_campaign(config, algorithms);

    for (std::size_t a = 0; a < algorithms.size(); ++a)
    {
        REQUIRE(first.aggregates[a].rates_exact == second.aggregates[a].rates_exact);
        REQUIRE(first.aggregates[a].mean_asr == second.aggregates[a].mean_asr);
    }

    const fs::path dir_a = fresh_dir("irsnoma_netsim_det_a");
    const fs::path dir_b = fresh_dir("irsnoma_netsim_det_b");
    write_campaign_csvs(first, dir_a.string());
    write_campaign_csvs(second, dir_b.string());
    for (const char *name : {"cdf.csv", "outage.csv", "pairs.csv", "summary.csv"})
        REQUIRE(slurp(dir_a / name) == slurp(dir_b / name));

    const std::string summary = slurp(dir_a / "summary.csv");
    CHECK(summary.rfind("algorithm,mean_asr,min_required_asr\n", 0) == 0);
}

TEST_CASE("SINR file parsing")
{
    const fs::path dir = fresh_dir("irsnoma_sinr_files");
    fs::create_directories(dir);

    {
        std::ofstream out(dir / "good.txt");
        out << "# comment\n8\n\n  5.5 \n-1.25\n";
    }
    const auto values = read_sinr_db_file((dir / "good.txt").string());
    REQUIRE(values.size() == 3);
    CHECK(values[0] == 8.0);
    CHECK(values[1] == 5.5);
    CHECK(values[2] == -1.25);

    {
        std::ofstream out(dir / "bad.txt");
        out << "8\nnot-a-number\n";
    }
    CHECK_THROWS_WITH_AS(read_sinr_db_file((dir / "bad.txt").string()),
                         doctest::Contains("bad.txt:2"), parse_error);

    {
        std::ofstream out(dir / "empty.txt");
        out << "\n# nothing here\n";
    }
    CHECK_THROWS_AS(read_sinr_db_file((dir / "empty.txt").string()), parse_error);
    CHECK_THROWS_AS(read_sinr_db_file((dir / "missing.txt").string()), io_error);
}
