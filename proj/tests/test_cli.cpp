#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace ts = testsupport;
namespace fs = std::filesystem;

namespace
{

struct RunResult
{
    int exit_code{0};
    std::string output; // stdout and stderr combined
};

std::string cli_path()
{
    if (const char *env = std::getenv("IRSNOMA_CLI"))
        return env;
    // Fallback for running the test binary by hand from the build tree.
    for (const char *candidate : {"tools/irsnoma-cli", "../tools/irsnoma-cli", "build/tools/irsnoma-cli"})
        if (fs::exists(candidate))
            return fs::absolute(candidate).string();
    REQUIRE_MESSAGE(false, "IRSNOMA_CLI must point at the CLI binary");
    return {};
}

RunResult run_cli(const std::string &args)
{
    const std::string command = cli_path() + " " + args + " 2>&1";
    FILE *pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer{};
    size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), n);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), output};
}

std::vector<std::string> lines_of(const std::string &text)
{
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line))
        lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string &line)
{
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.push_back("");
    return fields;
}

fs::path fresh_dir(const std::string &name)
{
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path &path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("cli: pair command")
{
    const fs::path dir = fresh_dir("irsnoma_cli_pair");
    {
        std::ofstream out(dir / "sinr.txt");
        out << "8\n5\n2\n-1\n";
    }

    const RunResult result =
        run_cli("pair --sinr-file " + (dir / "sinr.txt").string() + " --delta-deg 11 --policy mpa");
    REQUIRE(result.exit_code == 0);
    const auto lines = lines_of(result.output);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "strong_id,weak_id,mode,alpha1,r1_min,r2_min,sinc_sq_ub");

    const auto row1 = split_csv(lines[1]);
    REQUIRE(row1.size() == 7);
    CHECK(row1[0] == "1");
    CHECK(row1[1] == "4");
    CHECK(row1[2] == "NOMA");
    CHECK(std::stod(row1[6]) == doctest::Approx(ts::k_ssub_pair_1_4).epsilon(1e-6));

    const auto row2 = split_csv(lines[2]);
    CHECK(row2[0] == "2");
    CHECK(row2[1] == "3");
    CHECK(std::stod(row2[6]) == doctest::Approx(ts::k_ssub_pair_2_3).epsilon(1e-6));

    // A single-entry file yields one OMA row with an empty weak id.
    {
        std::ofstream out(dir / "one.txt");
        out << "8\n";
    }
    const RunResult lone = run_cli("pair --sinr-file " + (dir / "one.txt").string());
    REQUIRE(lone.exit_code == 0);
    const auto lone_lines = lines_of(lone.output);
    REQUIRE(lone_lines.size() == 2);
    const auto lone_row = split_csv(lone_lines[1]);
    REQUIRE(lone_row.size() == 7);
    CHECK(lone_row[0] == "1");
    CHECK(lone_row[1] == "");
    CHECK(lone_row[2] == "OMA");

    // An empty file is a usage error.
    {
        std::ofstream out(dir / "empty.txt");
    }
    const RunResult empty = run_cli("pair --sinr-file " + (dir / "empty.txt").string());
    CHECK(empty.exit_code != 0);
    CHECK(empty.output.find("error") != std::string::npos);
}

TEST_CASE("cli: sweep-delta reproduces the worked pair and the feasibility flip")
{
    const RunResult result = run_cli("sweep-delta --gamma1-db 8 --gamma2-db 5 --delta-min-deg 0 "
                                     "--delta-max-deg 50 --delta-step-deg 1 --policy mpa");
    REQUIRE(result.exit_code == 0);
    const auto lines = lines_of(result.output);
    REQUIRE(lines.size() == 52);
    CHECK(lines[0] == "delta_rad,delta_deg,r1_min,r2_min,r1_noma,r2_noma,asr,feasible,sinc_sq_ub");

    const auto first = split_csv(lines[1]);
    REQUIRE(first.size() == 9);
    CHECK(std::stod(first[1]) == 0.0);
    CHECK(std::stod(first[2]) == doctest::Approx(ts::k_r1_min_0_exact).epsilon(1e-6));
    CHECK(std::stod(first[3]) == doctest::Approx(ts::k_r2_min_0_exact).epsilon(1e-6));
    CHECK(std::stod(first[8]) == doctest::Approx(ts::k_sinc_sq_ub_0_exact).epsilon(1e-6));
    // At delta = 0 the weak user's rate equals its minimum.
    CHECK(std::stod(first[5]) == doctest::Approx(ts::k_r2_min_0_exact).epsilon(1e-6));

    // The feasibility flag flips between the rows bracketing the bound
    // (35.288 deg for this pair).
    const auto row35 = split_csv(lines[36]);
    const auto row36 = split_csv(lines[37]);
    CHECK(std::stod(row35[1]) == 35.0);
    CHECK(row35[7] == "true");
    CHECK(std::stod(row36[1]) == 36.0);
    CHECK(row36[7] == "false");

    // Rates keep declining past the bound and fall below the flat minimums.
    const auto row50 = split_csv(lines[51]);
    CHECK(std::stod(row50[4]) < std::stod(row50[2]));

    // Ordering contract.
    CHECK(run_cli("sweep-delta --gamma1-db 5 --gamma2-db 8").exit_code != 0);
}

TEST_CASE("cli: sweep-alpha markers and monotone sum rate")
{
    const RunResult result = run_cli("sweep-alpha --gamma1-db 8 --gamma2-db 5 --delta-deg 0 "
                                     "--alpha-min 0.05 --alpha-max 0.95 --alpha-step 0.05");
    REQUIRE(result.exit_code == 0);
    const auto lines = lines_of(result.output);
    REQUIRE(lines.size() > 6);

    CHECK(lines[0].rfind("# alpha_lb = ", 0) == 0);
    CHECK(lines[1].rfind("# alpha_ub = ", 0) == 0);
    CHECK(lines[2].rfind("# alpha_fpa = ", 0) == 0);
    CHECK(std::stod(lines[0].substr(13)) == doctest::Approx(ts::k_alpha_lb_0_exact).epsilon(1e-6));
    CHECK(std::stod(lines[1].substr(13)) == doctest::Approx(ts::k_alpha_ub_0_exact).epsilon(1e-6));
    CHECK(std::stod(lines[2].substr(14)) == doctest::Approx(ts::k_alpha_fpa_0_exact).epsilon(1e-6));
    CHECK(lines[3] == "alpha1,r1_noma,r2_noma,asr,r1_min,r2_min");

    double prev_asr = -1.0;
    bool found_ub_marker = false;
    for (std::size_t i = 4; i < lines.size(); ++i)
    {
        const auto row = split_csv(lines[i]);
        REQUIRE(row.size() == 6);
        const double asr = std::stod(row[3]);
        CHECK(asr >= prev_asr - 1e-12);
        prev_asr = asr;
        if (std::abs(std::stod(row[0]) - ts::k_alpha_ub_0_exact) < 1e-9)
            found_ub_marker = true;
    }
    CHECK(found_ub_marker);

    // At delta = 11 deg the bound markers move while the FPA marker stays.
    const RunResult tilted = run_cli("sweep-alpha --gamma1-db 8 --gamma2-db 5 --delta-deg 11");
    REQUIRE(tilted.exit_code == 0);
    const auto tilted_lines = lines_of(tilted.output);
    CHECK(std::stod(tilted_lines[0].substr(13)) == doctest::Approx(ts::k_alpha_lb_11_flat).epsilon(1e-6));
    CHECK(std::stod(tilted_lines[1].substr(13)) == doctest::Approx(ts::k_alpha_ub_11_flat).epsilon(1e-6));
    CHECK(std::stod(tilted_lines[2].substr(14)) == doctest::Approx(ts::k_alpha_fpa_0_exact).epsilon(1e-6));

    CHECK(run_cli("sweep-alpha --gamma1-db 8 --gamma2-db 5 --alpha-min 0 --alpha-max 0.9").exit_code != 0);
}

TEST_CASE("cli: simulate writes deterministic outputs and honors the config file")
{
    const fs::path dir = fresh_dir("irsnoma_cli_sim");
    {
        std::ofstream out(dir / "sinr.txt");
        out << "8\n5\n2\n-1\n";
    }

    const std::string base = "simulate --sinr-file " + (dir / "sinr.txt").string() +
                             " --drops 50 --seed 9 --delta-deg 11 --out ";
    const RunResult first = run_cli(base + (dir / "a").string());
    REQUIRE(first.exit_code == 0);
    CHECK(first.output.find("wrote") != std::string::npos);
    const RunResult second = run_cli(base + (dir / "b").string());
    REQUIRE(second.exit_code == 0);

    for (const char *name : {"cdf.csv", "outage.csv", "pairs.csv", "summary.csv"})
        REQUIRE(slurp(dir / "a" / name) == slurp(dir / "b" / name));

    // Config file supplies values; explicit flags take precedence.
    {
        std::ofstream out(dir / "run.conf");
        out << "# campaign configuration\n";
        out << "drops=50\n";
        out << "seed=9\n";
        out << "delta-deg=11\n";
        out << "sinr-file=" << (dir / "sinr.txt").string() << "\n";
    }
    const RunResult from_config =
        run_cli("simulate --config " + (dir / "run.conf").string() + " --out " + (dir / "c").string());
    REQUIRE(from_config.exit_code == 0);
    for (const char *name : {"outage.csv", "summary.csv"})
        REQUIRE(slurp(dir / "a" / name) == slurp(dir / "c" / name));

    const RunResult overridden = run_cli("simulate --config " + (dir / "run.conf").string() + " --seed 10 --out " +
                                         (dir / "d").string());
    REQUIRE(overridden.exit_code == 0);
    CHECK(slurp(dir / "a" / "outage.csv") != slurp(dir / "d" / "outage.csv"));

    // simulate requires an output directory; bad format values are rejected.
    CHECK(run_cli("simulate --drops 2").exit_code != 0);
    CHECK(run_cli("simulate --format json --out " + (dir / "x").string()).exit_code != 0);

    // Restricting to one algorithm keeps only its rows.
    const RunResult single = run_cli(base + (dir / "e").string() + " --algorithm aup-mpa");
    REQUIRE(single.exit_code == 0);
    const std::string summary = slurp(dir / "e" / "summary.csv");
    CHECK(summary.find("aup-mpa") != std::string::npos);
    CHECK(summary.find("aup-fpa") == std::string::npos);
    CHECK(summary.find("near-far") == std::string::npos);
}
