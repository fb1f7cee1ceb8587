// Copyright 2026 The crnoma Authors
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

#include "cli.hpp"

#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace crnoma;
using namespace crnoma::cli;
namespace fs = std::filesystem;

namespace
{

const std::string kConfig = std::string(CRNOMA_CONFIG_DIR) + "/baseline.cfg";

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "crnoma");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t count_lines(const std::string &s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

struct TempDir
{
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("crnoma_cli_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string &name) const { return (path / name).string(); }
    static int &counter()
    {
        static int c = 0;
        return c;
    }
};

void write_text(const fs::path &p, const std::string &text)
{
    std::ofstream(p, std::ios::binary) << text;
}

} // namespace

TEST_CASE("power grid syntax")
{
    CHECK(parse_power_grid("0:20:5") == std::vector<double>{0, 5, 10, 15, 20});
    CHECK(parse_power_grid("0:30:2.5").size() == 13);
    CHECK(parse_power_grid("0:30:2.5").back() == 30.0);
    CHECK(parse_power_grid("0:9:5") == std::vector<double>{0, 5});
    CHECK(parse_power_grid(" 7 ") == std::vector<double>{7});
    CHECK(parse_power_grid("-5, 0,12.5") == std::vector<double>{-5, 0, 12.5});
    for (const char *bad : {"", "0:10", "10:0:5", "0:10:0", "0:10:-1", "0,0", "5,1", "x", "1,,2", "0:1:2:3", "nan"})
        CHECK_THROWS_AS(parse_power_grid(bad), InputError);
}

TEST_CASE("scheme lists")
{
    CHECK(parse_scheme_list("all").size() == 4);
    CHECK(parse_scheme_list("es, sjas") == std::vector<Scheme>{Scheme::es, Scheme::sjas});
    CHECK_THROWS_AS(parse_scheme_list("sjas,greedy"), InputError);
    CHECK_THROWS_AS(parse_scheme_list("es,es"), InputError);
    CHECK_THROWS_AS(parse_scheme_list(""), InputError);
}

TEST_CASE("seed resolution")
{
    CHECK(resolve_seed(7u, "99") == 7u);
    CHECK(resolve_seed(std::nullopt, "99") == 99u);
    CHECK(resolve_seed(std::nullopt, nullptr) == kDefaultSeed);
    CHECK(resolve_seed(std::nullopt, "") == kDefaultSeed);
    CHECK(resolve_seed(std::nullopt, "18446744073709551615") == 18446744073709551615ull);
    CHECK_THROWS_AS(resolve_seed(std::nullopt, "-1"), InputError);
    CHECK_THROWS_AS(resolve_seed(std::nullopt, "12abc"), InputError);
}

TEST_CASE("dB formatting")
{
    CHECK(format_db(0.0) == "-inf");
    CHECK(format_db(100.0) == "20");
    CHECK(format_db(0.1) == "-10");
}

TEST_CASE("simulate writes the documented CSV and a manifest")
{
    TempDir dir;
    const auto out = dir / "sim.csv";
    const Result r = invoke({"simulate", kConfig, "--power-grid", "0:20:5", "--trials", "3000", "--seed", "5",
                             "--out", out});
    REQUIRE(r.code == kExitOk);
    CHECK(r.err.empty());

    const std::string csv = slurp(out);
    CHECK(csv.substr(0, csv.find('\n')) == kSimulateHeader);
    CHECK(count_lines(csv) == 1 + 4 * 5);

    const CsvTable t = parse_csv(csv, "sim.csv");
    const auto b = t.column("mean_b");
    const auto p = t.column("p_outage");
    for (const auto &row : t.rows)
    {
        CHECK(std::stod(row[b]) >= 0.0);
        CHECK(std::stod(row[b]) < 1.0);
        CHECK(std::stod(row[p]) >= 0.0);
        CHECK(std::stod(row[p]) <= 1.0);
        CHECK(row[t.column("trials")] == "3000");
    }

    const auto m = nlohmann::json::parse(slurp(manifest_path(out)));
    CHECK(m.at("command") == "simulate");
    CHECK(m.at("seed") == 5);
    CHECK(m.at("scenario").at("n_bs") == "2");
    CHECK(m.at("flags").at("trials") == 3000);
    CHECK(m.at("conventions").contains("mean_gamma_s"));
    CHECK(m.contains("version"));
    CHECK(m.contains("created_utc"));
}

TEST_CASE("simulate is byte-identical across reruns and worker counts")
{
    TempDir dir;
    const std::vector<std::string> base{"simulate", kConfig, "--power-grid", "0,10,20", "--trials", "9000"};
    auto with = [&](std::vector<std::string> extra) {
        auto args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return args;
    };
    REQUIRE(invoke(with({"--seed", "11", "--workers", "1", "--out", dir / "a.csv"})).code == 0);
    REQUIRE(invoke(with({"--seed", "11", "--workers", "1", "--out", dir / "b.csv"})).code == 0);
    REQUIRE(invoke(with({"--seed", "11", "--workers", "3", "--out", dir / "c.csv"})).code == 0);
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    CHECK(slurp(dir / "a.csv") == slurp(dir / "c.csv"));

    REQUIRE(invoke(with({"--seed", "12", "--out", dir / "d.csv"})).code == 0);
    CHECK(slurp(dir / "a.csv") != slurp(dir / "d.csv"));
}

TEST_CASE("CRNOMA_SEED is used unless --seed is given")
{
    TempDir dir;
    const std::vector<std::string> base{"simulate", kConfig, "--schemes", "random", "--power-grid", "10",
                                        "--trials", "2000"};
    auto run_with = [&](std::vector<std::string> extra, const std::string &out) {
        auto args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        args.insert(args.end(), {"--out", out});
        return invoke(args).code;
    };
    ::setenv("CRNOMA_SEED", "77", 1);
    REQUIRE(run_with({}, dir / "env.csv") == 0);
    REQUIRE(run_with({"--seed", "77"}, dir / "flag77.csv") == 0);
    REQUIRE(run_with({"--seed", "78"}, dir / "flag78.csv") == 0);
    ::unsetenv("CRNOMA_SEED");
    CHECK(slurp(dir / "env.csv") == slurp(dir / "flag77.csv"));
    CHECK(slurp(dir / "env.csv") != slurp(dir / "flag78.csv"));
    CHECK(nlohmann::json::parse(slurp(dir / "env.csv.manifest.json")).at("seed") == 77);

    ::setenv("CRNOMA_SEED", "not-a-seed", 1);
    CHECK(run_with({}, dir / "bad.csv") == kExitInput);
    ::unsetenv("CRNOMA_SEED");
}

TEST_CASE("low trial counts warn")
{
    TempDir dir;
    const Result r = invoke({"simulate", kConfig, "--power-grid", "10", "--trials", "50", "--out", dir / "w.csv"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("analytic CSV")
{
    TempDir dir;
    const auto out = dir / "ana.csv";
    REQUIRE(invoke({"analytic", kConfig, "--power-grid", "0:30:5", "--out", out}).code == 0);
    const CsvTable t = parse_csv(slurp(out), "ana.csv");
    CHECK(slurp(out).substr(0, slurp(out).find('\n')) == kAnalyticHeader);
    REQUIRE(t.rows.size() == 7);
    for (const auto &row : t.rows)
    {
        CHECK(row[t.column("diversity")] == "4");
        const double p = std::stod(row[t.column("p_outage_asymptotic")]);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
    }
    // Low power lies outside the asymptotic regime, 30 dBm inside.
    CHECK(t.rows.front()[t.column("regime_flag")] == "1");
    CHECK(t.rows.back()[t.column("regime_flag")] == "0");
    CHECK(fs::exists(manifest_path(out)));
}

TEST_CASE("table1 prints the layout and ES equals SJ-AS")
{
    TempDir dir;
    const auto out = dir / "t1.csv";
    const Result r = invoke({"table1", kConfig, "--trials", "4000", "--seed", "3", "--out", out});
    REQUIRE(r.code == 0);
    for (const char *label : {"Random", "Max-min", "ES", "SJ-AS", "0 dBm", "20 dBm"})
        CHECK(r.out.find(label) != std::string::npos);

    const CsvTable t = parse_csv(slurp(out), "t1.csv");
    CHECK(t.header == std::vector<std::string>{"scheme", "b_0dbm", "b_5dbm", "b_10dbm", "b_15dbm", "b_20dbm"});
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0][0] == "random");
    CHECK(t.rows[1][0] == "maxmin");
    CHECK(t.rows[2][0] == "es");
    CHECK(t.rows[3][0] == "sjas");
    for (std::size_t c = 1; c < t.header.size(); ++c)
        CHECK(t.rows[2][c] == t.rows[3][c]);
}

TEST_CASE("plotdata consumes simulate and analytic output")
{
    TempDir dir;
    REQUIRE(invoke({"simulate", kConfig, "--power-grid", "0:30:5", "--trials", "20000", "--out", dir / "s.csv"})
                .code == 0);
    REQUIRE(invoke({"analytic", kConfig, "--power-grid", "0:30:1", "--out", dir / "a.csv"}).code == 0);
    const Result r = invoke({"plotdata", "--from", dir / "s.csv", "--from", dir / "a.csv", "--out", dir / "plots"});
    REQUIRE(r.code == 0);
    for (const char *f : {"outage.dat", "snr.dat", "plots.gp", "manifest.json"})
        CHECK(fs::exists(dir.path / "plots" / f));

    const std::string outage = slurp(dir.path / "plots" / "outage.dat");
    for (const char *series : {"# sjas", "# es", "# maxmin", "# random", "# analytic"})
        CHECK(outage.find(series) != std::string::npos);
    const std::string snr = slurp(dir.path / "plots" / "snr.dat");
    CHECK(snr.find("# analytic") == std::string::npos);
    CHECK(snr.find("-inf") == std::string::npos);
    const std::string script = slurp(dir.path / "plots" / "plots.gp");
    CHECK(script.find("set logscale y") != std::string::npos);
    CHECK(script.find("index 4") != std::string::npos);

    CHECK(r.out.find("slope analytic:") != std::string::npos);
    CHECK(r.out.find("slope sjas:") != std::string::npos);
}

TEST_CASE("top-decade slope")
{
    Series s{"x", {0, 10, 20, 30}, {1.0, 1e-2, 1e-6, 1e-10}};
    CHECK(*top_decade_slope(s) == doctest::Approx(-4.0));
    Series zeros{"z", {0, 10, 20}, {1e-1, 0.0, 0.0}};
    CHECK_FALSE(top_decade_slope(zeros).has_value());
}

TEST_CASE("plotdata input errors")
{
    TempDir dir;
    write_text(dir.path / "empty.csv", "");
    write_text(dir.path / "header_only.csv", std::string(kSimulateHeader) + "\n");
    write_text(dir.path / "no_outage.csv", "scheme,power_dbm,mean_gamma_s_db\nsjas,0,1\n");
    write_text(dir.path / "ragged.csv", std::string(kSimulateHeader) + "\nsjas,0,1\n");
    for (const char *f : {"empty.csv", "header_only.csv", "no_outage.csv", "ragged.csv"})
    {
        const Result r = invoke({"plotdata", "--from", dir / f, "--out", dir / "p"});
        CHECK_MESSAGE(r.code == kExitInput, f);
    }
    const Result missing = invoke({"plotdata", "--from", dir / "nope.csv", "--out", dir / "p"});
    CHECK(missing.code == kExitIo);
    const Result cols = invoke({"plotdata", "--from", dir / "no_outage.csv", "--out", dir / "p"});
    CHECK(cols.err.find("p_outage") != std::string::npos);
}

TEST_CASE("exit codes for bad input and I/O failures")
{
    TempDir dir;
    write_text(dir.path / "bad.cfg", "n_bs = 2\nm_pu = 2\nk_su = two\n");
    const Result bad = invoke({"simulate", dir / "bad.cfg", "--out", dir / "x.csv"});
    CHECK(bad.code == kExitInput);
    CHECK(bad.err.find("line 3") != std::string::npos);

    CHECK(invoke({"simulate", dir / "missing.cfg", "--out", dir / "x.csv"}).code == kExitIo);
    CHECK(invoke({"simulate", kConfig, "--trials", "10", "--out", dir / "no/such/dir/x.csv"}).code == kExitIo);
    CHECK(invoke({"analytic", kConfig, "--out", dir / "no/such/dir/x.csv"}).code == kExitIo);
    CHECK(invoke({"simulate", kConfig, "--trials", "0", "--out", dir / "x.csv"}).code == kExitInput);
    CHECK(invoke({"simulate", kConfig, "--power-grid", "10:0:1", "--out", dir / "x.csv"}).code == kExitInput);
    CHECK(invoke({"simulate", kConfig, "--schemes", "greedy", "--out", dir / "x.csv"}).code == kExitInput);
    CHECK(invoke({"simulate", kConfig, "--bogus"}).code == kExitInput);
    CHECK(invoke({}).code == kExitInput);
    CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("replay reproduces the recorded output")
{
    TempDir dir;
    REQUIRE(invoke({"simulate", kConfig, "--schemes", "sjas,maxmin", "--power-grid", "5,15", "--trials", "5000",
                    "--seed", "21", "--out", dir / "orig.csv"})
                .code == 0);
    REQUIRE(invoke({"replay", dir / "orig.csv.manifest.json", "--out", dir / "again.csv"}).code == 0);
    CHECK(slurp(dir / "orig.csv") == slurp(dir / "again.csv"));

    REQUIRE(invoke({"analytic", kConfig, "--power-grid", "0:20:2", "--out", dir / "a.csv"}).code == 0);
    REQUIRE(invoke({"replay", dir / "a.csv.manifest.json", "--out", dir / "a2.csv"}).code == 0);
    CHECK(slurp(dir / "a.csv") == slurp(dir / "a2.csv"));

    write_text(dir.path / "junk.json", "{not json");
    CHECK(invoke({"replay", dir / "junk.json"}).code == kExitInput);
    write_text(dir.path / "partial.json", R"({"command": "simulate"})");
    CHECK(invoke({"replay", dir / "partial.json"}).code == kExitInput);
}

TEST_CASE("installed binary reports exit codes")
{
    TempDir dir;
    const auto status = [](const std::string &cmd) {
        const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    const std::string bin = CRNOMA_CLI_PATH;
    CHECK(status(bin + " --version") == 0);
    CHECK(status(bin + " analytic " + kConfig + " --out " + (dir / "a.csv")) == 0);
    CHECK(status(bin + " analytic " + kConfig) == 2);
    CHECK(status(bin + " analytic " + kConfig + " --out /proc/forbidden/a.csv") == 3);
}
