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

#include "CLI11.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#ifndef CRNOMA_VERSION
#define CRNOMA_VERSION "0.0.0"
#endif

namespace crnoma::cli
{

namespace
{

using nlohmann::json;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

double parse_number(std::string_view text, const std::string &what)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw InputError(what + ": not a number: '" + std::string(text) + "'");
    return value;
}

std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path.string() + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write '" + path.string() + "'");
    out << content;
    out.flush();
    if (!out)
        throw IoError("write failed for '" + path.string() + "'");
}

void write_manifest(const std::filesystem::path &out, const json &manifest)
{
    write_file(manifest_path(out), manifest.dump(2) + "\n");
}

Scenario load_config(const std::filesystem::path &path)
{
    return parse_scenario_string(read_file(path));
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string_view table_label(Scheme s)
{
    switch (s)
    {
    case Scheme::random:
        return "Random";
    case Scheme::maxmin:
        return "Max-min";
    case Scheme::es:
        return "ES";
    case Scheme::sjas:
        return "SJ-AS";
    }
    return "?";
}

constexpr Scheme kTable1Rows[] = {Scheme::random, Scheme::maxmin, Scheme::es, Scheme::sjas};

void warn_low_trials(std::uint64_t trials, std::ostream &err)
{
    if (trials < kLowTrialWarning)
        fmt::print(err, "warning: {} trials per point; the normal-approximation CI is unreliable below {}\n",
                   trials, kLowTrialWarning);
}

// --- commands -------------------------------------------------------------
// Each command takes fully resolved inputs so `replay` can call it directly.

struct SimulateArgs
{
    Scenario scenario;
    std::string schemes = "all";
    std::string power_grid = "0:20:5";
    std::uint64_t trials = 100000;
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 0;
    bool paired = true;
    std::filesystem::path out;
};

ExperimentPlan make_plan(const Scenario &scenario, std::vector<Scheme> schemes, std::vector<double> grid,
                         std::uint64_t trials, std::uint64_t seed, bool paired)
{
    ExperimentPlan plan;
    plan.config = scenario.system_config();
    plan.budget.noise_power_dbm = scenario.noise_dbm;
    plan.power_grid_dbm = std::move(grid);
    plan.schemes = std::move(schemes);
    plan.trials = trials;
    plan.master_seed = seed;
    plan.paired = paired;
    try
    {
        plan.validate();
    }
    catch (const std::domain_error &e)
    {
        throw InputError(e.what());
    }
    return plan;
}

json simulate_flags(const SimulateArgs &a)
{
    return {{"schemes", a.schemes}, {"power_grid", a.power_grid}, {"trials", a.trials},
            {"workers", a.workers}, {"paired", a.paired},         {"out", a.out.string()}};
}

int cmd_simulate(const SimulateArgs &a, std::ostream &out, std::ostream &err)
{
    const ExperimentPlan plan = make_plan(a.scenario, parse_scheme_list(a.schemes), parse_power_grid(a.power_grid),
                                          a.trials, a.seed, a.paired);
    warn_low_trials(a.trials, err);
    const auto estimates = run_plan(plan, RunOptions{a.workers});
    write_file(a.out, simulate_csv(estimates));
    write_manifest(a.out, make_manifest("simulate", &a.scenario, simulate_flags(a), a.seed));
    fmt::print(out, "wrote {} rows to {}\n", estimates.size(), a.out.string());
    return kExitOk;
}

struct AnalyticArgs
{
    Scenario scenario;
    std::string power_grid = "0:30:1";
    std::filesystem::path out;
};

int cmd_analytic(const AnalyticArgs &a, std::ostream &out)
{
    const auto grid = parse_power_grid(a.power_grid);
    write_file(a.out, analytic_csv(a.scenario.system_config(), a.scenario.noise_dbm, grid));
    const json flags{{"power_grid", a.power_grid}, {"out", a.out.string()}};
    write_manifest(a.out, make_manifest("analytic", &a.scenario, flags, std::nullopt));
    fmt::print(out, "wrote {} rows to {}\n", grid.size(), a.out.string());
    return kExitOk;
}

struct Table1Args
{
    Scenario scenario;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 0;
    std::filesystem::path out;
};

int cmd_table1(const Table1Args &a, std::ostream &out, std::ostream &err)
{
    const ExperimentPlan plan =
        make_plan(a.scenario, {std::begin(kTable1Rows), std::end(kTable1Rows)},
                  {std::begin(kTable1Powers), std::end(kTable1Powers)}, a.trials, a.seed, true);
    warn_low_trials(a.trials, err);
    const Table1 table = table1_from(run_plan(plan, RunOptions{a.workers}));
    out << table1_text(table);
    write_file(a.out, table1_csv(table));
    const json flags{{"trials", a.trials}, {"workers", a.workers}, {"out", a.out.string()}};
    write_manifest(a.out, make_manifest("table1", &a.scenario, flags, a.seed));
    return kExitOk;
}

struct PlotArgs
{
    std::vector<std::string> from;
    std::filesystem::path out;
};

int cmd_plotdata(const PlotArgs &a, std::ostream &out)
{
    if (a.from.empty())
        throw InputError("plotdata needs at least one --from CSV");
    std::vector<CsvTable> tables;
    for (const auto &path : a.from)
        tables.push_back(parse_csv(read_file(path), path));
    const PlotData data = collect_plot_data(tables);

    std::error_code ec;
    std::filesystem::create_directories(a.out, ec);
    if (ec)
        throw IoError("cannot create directory '" + a.out.string() + "': " + ec.message());
    write_file(a.out / "outage.dat", outage_dat(data));
    write_file(a.out / "snr.dat", snr_dat(data));
    write_file(a.out / "plots.gp", gnuplot_script(data));
    write_manifest(a.out, make_manifest("plotdata", nullptr, {{"from", a.from}, {"out", a.out.string()}},
                                        std::nullopt));

    for (const auto &s : data.outage)
    {
        if (const auto slope = top_decade_slope(s))
            fmt::print(out, "slope {}: {:.4f}\n", s.name, *slope);
        else
            fmt::print(out, "slope {}: n/a\n", s.name);
    }
    fmt::print(out, "wrote outage.dat, snr.dat and plots.gp to {}\n", a.out.string());
    return kExitOk;
}

Scenario scenario_from_manifest(const json &m)
{
    if (!m.contains("scenario"))
        throw InputError("manifest has no scenario");
    std::string text;
    for (const auto &[key, value] : m.at("scenario").items())
        text += key + " = " + value.get<std::string>() + "\n";
    return parse_scenario_string(text);
}

int cmd_replay(const std::filesystem::path &manifest_file, const std::optional<std::string> &out_override,
               std::ostream &out, std::ostream &err)
{
    json m;
    try
    {
        m = json::parse(read_file(manifest_file));
    }
    catch (const json::exception &e)
    {
        throw InputError("malformed manifest: " + std::string(e.what()));
    }
    try
    {
        const std::string command = m.at("command").get<std::string>();
        const json &f = m.at("flags");
        const auto target = [&] { return std::filesystem::path(out_override ? *out_override : f.at("out").get<std::string>()); };
        if (command == "simulate")
        {
            SimulateArgs a;
            a.scenario = scenario_from_manifest(m);
            a.schemes = f.at("schemes").get<std::string>();
            a.power_grid = f.at("power_grid").get<std::string>();
            a.trials = f.at("trials").get<std::uint64_t>();
            a.workers = f.at("workers").get<unsigned>();
            a.paired = f.at("paired").get<bool>();
            a.seed = m.at("seed").get<std::uint64_t>();
            a.out = target();
            return cmd_simulate(a, out, err);
        }
        if (command == "analytic")
        {
            AnalyticArgs a;
            a.scenario = scenario_from_manifest(m);
            a.power_grid = f.at("power_grid").get<std::string>();
            a.out = target();
            return cmd_analytic(a, out);
        }
        if (command == "table1")
        {
            Table1Args a;
            a.scenario = scenario_from_manifest(m);
            a.trials = f.at("trials").get<std::uint64_t>();
            a.workers = f.at("workers").get<unsigned>();
            a.seed = m.at("seed").get<std::uint64_t>();
            a.out = target();
            return cmd_table1(a, out, err);
        }
        if (command == "plotdata")
        {
            PlotArgs a;
            a.from = f.at("from").get<std::vector<std::string>>();
            a.out = target();
            return cmd_plotdata(a, out);
        }
        throw InputError("manifest names an unknown command '" + command + "'");
    }
    catch (const json::exception &e)
    {
        throw InputError("incomplete manifest: " + std::string(e.what()));
    }
}

} // namespace

// --- parsing and formatting -------------------------------------------------

std::vector<double> parse_power_grid(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw InputError("empty power grid");
    std::vector<double> grid;
    if (text.find(':') != std::string_view::npos)
    {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw InputError("power grid range must be start:stop:step");
        const double start = parse_number(parts[0], "power grid");
        const double stop = parse_number(parts[1], "power grid");
        const double step = parse_number(parts[2], "power grid");
        if (!(step > 0.0) || !(stop >= start) || !std::isfinite(start) || !std::isfinite(stop))
            throw InputError("power grid range needs finite start <= stop and step > 0");
        const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i)
            grid.push_back(start + static_cast<double>(i) * step);
    }
    else
    {
        for (const auto part : split(text, ','))
            grid.push_back(parse_number(part, "power grid"));
    }
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        if (!std::isfinite(grid[i]))
            throw InputError("power grid values must be finite");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw InputError("power grid must be strictly increasing");
    }
    return grid;
}

std::vector<Scheme> parse_scheme_list(std::string_view text)
{
    text = trim(text);
    if (text == "all")
        return {std::begin(kAllSchemes), std::end(kAllSchemes)};
    std::vector<Scheme> schemes;
    for (const auto part : split(text, ','))
    {
        try
        {
            const Scheme s = parse_scheme(part);
            if (std::find(schemes.begin(), schemes.end(), s) != schemes.end())
                throw InputError("scheme '" + std::string(part) + "' listed twice");
            schemes.push_back(s);
        }
        catch (const std::invalid_argument &e)
        {
            throw InputError(e.what());
        }
    }
    return schemes;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char *env_value)
{
    if (flag)
        return *flag;
    if (env_value == nullptr || *env_value == '\0')
        return kDefaultSeed;
    const std::string_view text = trim(env_value);
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw InputError("CRNOMA_SEED is not an unsigned 64-bit integer: '" + std::string(env_value) + "'");
    return seed;
}

std::string format_db(double linear)
{
    if (linear <= 0.0)
        return "-inf";
    return format_double(10.0 * std::log10(linear));
}

std::string simulate_csv(const std::vector<OutageEstimate> &estimates)
{
    std::string csv(kSimulateHeader);
    csv += '\n';
    for (const auto &e : estimates)
        csv += fmt::format("{},{},{},{},{},{},{},{}\n", scheme_name(e.scheme), format_double(e.power_dbm),
                           format_double(e.rho), format_double(e.p_hat), format_double(e.ci95_halfwidth),
                           format_db(e.mean_gamma_s), format_double(e.mean_b), e.trials);
    return csv;
}

std::string analytic_csv(const SystemConfig &config, double noise_dbm, const std::vector<double> &grid_dbm)
{
    std::vector<double> rho;
    for (double p : grid_dbm)
        rho.push_back(transmit_snr(p, noise_dbm));
    const AnalyticCurve curve = analytic_curve(config, rho);
    std::string csv(kAnalyticHeader);
    csv += '\n';
    for (std::size_t i = 0; i < grid_dbm.size(); ++i)
        csv += fmt::format("{},{},{},{},{},{}\n", format_double(grid_dbm[i]), format_double(rho[i]),
                           format_double(curve.p_outage[i]), format_double(curve.p_highsnr[i]),
                           curve.regime_flag[i] ? 1 : 0, curve.diversity);
    return csv;
}

Table1 table1_from(const std::vector<OutageEstimate> &estimates)
{
    Table1 t;
    for (const auto &e : estimates)
    {
        if (std::find(t.power_dbm.begin(), t.power_dbm.end(), e.power_dbm) == t.power_dbm.end())
            t.power_dbm.push_back(e.power_dbm);
    }
    std::sort(t.power_dbm.begin(), t.power_dbm.end());
    for (Scheme s : kTable1Rows)
    {
        std::vector<double> row(t.power_dbm.size(), std::nan(""));
        bool any = false;
        for (const auto &e : estimates)
        {
            if (e.scheme != s)
                continue;
            const auto col = std::find(t.power_dbm.begin(), t.power_dbm.end(), e.power_dbm) - t.power_dbm.begin();
            row[static_cast<std::size_t>(col)] = e.mean_b;
            any = true;
        }
        if (any)
        {
            t.rows.push_back(s);
            t.mean_b.push_back(std::move(row));
        }
    }
    return t;
}

std::string table1_text(const Table1 &table)
{
    std::string text = "Average power allocation coefficient b\n";
    text += fmt::format("{:<10}", "Scheme");
    for (double p : table.power_dbm)
        text += fmt::format("{:>10}", format_double(p) + " dBm");
    text += '\n';
    for (std::size_t r = 0; r < table.rows.size(); ++r)
    {
        text += fmt::format("{:<10}", table_label(table.rows[r]));
        for (double b : table.mean_b[r])
            text += fmt::format("{:>10.4f}", b);
        text += '\n';
    }
    return text;
}

std::string table1_csv(const Table1 &table)
{
    std::string csv = "scheme";
    for (double p : table.power_dbm)
        csv += ",b_" + format_double(p) + "dbm";
    csv += '\n';
    for (std::size_t r = 0; r < table.rows.size(); ++r)
    {
        csv += scheme_name(table.rows[r]);
        for (double b : table.mean_b[r])
            csv += "," + format_double(b);
        csv += '\n';
    }
    return csv;
}

// --- CSV input and plot data ------------------------------------------------

std::size_t CsvTable::column(std::string_view name) const
{
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
        throw InputError("missing column '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - header.begin());
}

bool CsvTable::has_column(std::string_view name) const
{
    return std::find(header.begin(), header.end(), name) != header.end();
}

CsvTable parse_csv(std::string_view text, const std::string &origin)
{
    CsvTable table;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size())
    {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        std::vector<std::string> fields;
        for (const auto f : split(line, ','))
            fields.emplace_back(f);
        if (table.header.empty())
        {
            table.header = std::move(fields);
            continue;
        }
        if (fields.size() != table.header.size())
            throw InputError(fmt::format("{}: line {}: expected {} fields, found {}", origin, line_no,
                                         table.header.size(), fields.size()));
        table.rows.push_back(std::move(fields));
    }
    if (table.header.empty())
        throw InputError(origin + ": empty CSV");
    return table;
}

PlotData collect_plot_data(const std::vector<CsvTable> &tables)
{
    PlotData data;
    std::size_t rows = 0;
    const auto series_for = [](std::vector<Series> &list, const std::string &name) -> Series & {
        for (auto &s : list)
            if (s.name == name)
                return s;
        list.push_back(Series{name, {}, {}});
        return list.back();
    };

    for (const auto &t : tables)
    {
        rows += t.rows.size();
        if (t.has_column("p_outage_asymptotic"))
        {
            const auto power = t.column("power_dbm");
            const auto p = t.column("p_outage_asymptotic");
            Series &s = series_for(data.outage, "analytic");
            for (const auto &r : t.rows)
            {
                s.power_dbm.push_back(parse_number(r[power], "power_dbm"));
                s.value.push_back(parse_number(r[p], "p_outage_asymptotic"));
            }
        }
        else
        {
            const auto scheme = t.column("scheme");
            const auto power = t.column("power_dbm");
            const auto p = t.column("p_outage");
            const auto snr = t.column("mean_gamma_s_db");
            for (const auto &r : t.rows)
            {
                const double dbm = parse_number(r[power], "power_dbm");
                Series &o = series_for(data.outage, r[scheme]);
                o.power_dbm.push_back(dbm);
                o.value.push_back(parse_number(r[p], "p_outage"));
                Series &g = series_for(data.snr_db, r[scheme]);
                g.power_dbm.push_back(dbm);
                g.value.push_back(parse_number(r[snr], "mean_gamma_s_db"));
            }
        }
    }
    if (rows == 0)
        throw InputError("no data rows in the input CSVs");
    return data;
}

std::optional<double> top_decade_slope(const Series &outage)
{
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < outage.power_dbm.size(); ++i)
        if (outage.value[i] > 0.0)
            top = std::max(top, outage.power_dbm[i]);
    std::vector<double> x, y;
    for (std::size_t i = 0; i < outage.power_dbm.size(); ++i)
    {
        if (outage.value[i] > 0.0 && std::isfinite(outage.value[i]) && outage.power_dbm[i] >= top - 10.0)
        {
            // Transmit SNR up to a constant factor; the slope does not see it.
            x.push_back(std::pow(10.0, outage.power_dbm[i] / 10.0));
            y.push_back(outage.value[i]);
        }
    }
    if (x.size() < 2)
        return std::nullopt;
    return loglog_slope(x, y);
}

namespace
{

std::string dat_blocks(const std::vector<Series> &list, bool positive_only)
{
    std::string text;
    for (const auto &s : list)
    {
        text += "# " + s.name + "\n";
        for (std::size_t i = 0; i < s.power_dbm.size(); ++i)
        {
            const double v = s.value[i];
            if (!std::isfinite(v) || (positive_only && !(v > 0.0)))
                continue;
            text += format_double(s.power_dbm[i]) + " " + format_double(v) + "\n";
        }
        text += "\n\n";
    }
    return text;
}

std::string plot_line(const std::vector<Series> &list, const std::string &file)
{
    std::string line = "plot ";
    for (std::size_t i = 0; i < list.size(); ++i)
    {
        const bool analytic = list[i].name == "analytic";
        line += fmt::format("{}'{}' index {} with {} title '{}'", i ? ", \\\n     " : "", file, i,
                            analytic ? "lines dashtype 2" : "linespoints", list[i].name);
    }
    return line + "\n";
}

} // namespace

std::string outage_dat(const PlotData &data)
{
    return dat_blocks(data.outage, true);
}

std::string snr_dat(const PlotData &data)
{
    return dat_blocks(data.snr_db, false);
}

std::string gnuplot_script(const PlotData &data)
{
    std::string s = "set terminal pngcairo size 900,600\n"
                    "set grid\n"
                    "set key bottom left\n"
                    "set xlabel 'Transmit power (dBm)'\n\n"
                    "set output 'outage.png'\n"
                    "set logscale y\n"
                    "set format y '10^{%L}'\n"
                    "set ylabel 'Outage probability'\n";
    if (!data.outage.empty())
        s += plot_line(data.outage, "outage.dat");
    s += "\nset output 'snr.png'\n"
         "unset logscale y\n"
         "set format y '%g'\n"
         "set key top left\n"
         "set ylabel 'Mean SU SNR (dB)'\n";
    if (!data.snr_db.empty())
        s += plot_line(data.snr_db, "snr.dat");
    return s;
}

// --- manifest ---------------------------------------------------------------

nlohmann::json make_manifest(const std::string &command, const Scenario *scenario, const nlohmann::json &flags,
                             std::optional<std::uint64_t> seed)
{
    json m{
        {"tool", "crnoma"},
        {"version", CRNOMA_VERSION},
        {"command", command},
        {"created_utc", utc_timestamp()},
        {"flags", flags},
        {"conventions",
         {{"mean_gamma_s", "linear mean over all trials, infeasible and outage trials count as 0; reported in dB"},
          {"mean_b", "mean over all trials, infeasible trials count as 0"},
          {"ci95", "normal approximation 1.96 sqrt(p (1 - p) / trials)"},
          {"rng", "Philox4x32-10 streams keyed by (seed, point, trial, tag)"}}},
    };
    if (seed)
        m["seed"] = *seed;
    if (scenario)
        m["scenario"] = scenario->resolved_entries();
    return m;
}

std::filesystem::path manifest_path(const std::filesystem::path &out)
{
    std::error_code ec;
    if (std::filesystem::is_directory(out, ec))
        return out / "manifest.json";
    return std::filesystem::path(out.string() + ".manifest.json");
}

// --- entry point ------------------------------------------------------------

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Joint antenna selection for MIMO cognitive-radio NOMA: simulation and analysis", "crnoma"};
    app.set_version_flag("--version", CRNOMA_VERSION);
    app.require_subcommand(1);

    std::string config_file;
    std::string schemes = "all";
    std::string sim_grid = "0:20:5";
    std::string ana_grid = "0:30:1";
    std::uint64_t sim_trials = 100000;
    std::uint64_t tab_trials = 1000000;
    std::uint64_t seed_flag = 0;
    unsigned workers = 0;
    bool unpaired = false;
    std::string out_path;
    std::vector<std::string> from;
    std::string manifest_file;

    auto *sim = app.add_subcommand("simulate", "Monte Carlo outage, mean SU SNR and mean b per scheme and power");
    sim->add_option("config", config_file, "Scenario file")->required();
    sim->add_option("--schemes", schemes, "'all' or a list from sjas,es,maxmin,random")->capture_default_str();
    sim->add_option("--power-grid", sim_grid, "start:stop:step or a comma list, dBm")->capture_default_str();
    sim->add_option("--trials", sim_trials, "Trials per point")->capture_default_str();
    auto *sim_seed = sim->add_option("--seed", seed_flag, "Master seed (overrides CRNOMA_SEED)");
    sim->add_option("--workers", workers, "Worker threads, 0 for all cores")->capture_default_str();
    sim->add_flag("--unpaired", unpaired, "Independent channel draws per scheme");
    sim->add_option("--out", out_path, "Output CSV")->required();

    auto *ana = app.add_subcommand("analytic", "Asymptotic and high-SNR outage over a power grid");
    ana->add_option("config", config_file, "Scenario file")->required();
    ana->add_option("--power-grid", ana_grid, "start:stop:step or a comma list, dBm")->capture_default_str();
    ana->add_option("--out", out_path, "Output CSV")->required();

    auto *tab = app.add_subcommand("table1", "Mean power coefficient b for every scheme at 0..20 dBm");
    tab->add_option("config", config_file, "Scenario file")->required();
    tab->add_option("--trials", tab_trials, "Trials per point")->capture_default_str();
    auto *tab_seed = tab->add_option("--seed", seed_flag, "Master seed (overrides CRNOMA_SEED)");
    tab->add_option("--workers", workers, "Worker threads, 0 for all cores")->capture_default_str();
    tab->add_option("--out", out_path, "Output CSV")->required();

    auto *plot = app.add_subcommand("plotdata", "gnuplot data and script from simulate/analytic CSVs");
    plot->add_option("--from", from, "Input CSV (repeatable)")->required();
    plot->add_option("--out", out_path, "Output directory")->required();

    auto *replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    replay->add_option("manifest", manifest_file, "Manifest JSON")->required();
    auto *replay_out = replay->add_option("--out", out_path, "Override the recorded output path");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try
    {
        const char *env_seed = std::getenv("CRNOMA_SEED");
        const auto seed_of = [&](CLI::Option *opt) {
            return resolve_seed(opt->count() ? std::optional(seed_flag) : std::nullopt, env_seed);
        };
        const auto scenario = [&] {
            if (!std::filesystem::exists(config_file))
                throw IoError("cannot read '" + config_file + "'");
            return load_config(config_file);
        };

        if (*sim)
        {
            SimulateArgs a;
            a.scenario = scenario();
            a.schemes = schemes;
            a.power_grid = sim_grid;
            a.trials = sim_trials;
            a.seed = seed_of(sim_seed);
            a.workers = workers;
            a.paired = !unpaired;
            a.out = out_path;
            return cmd_simulate(a, out, err);
        }
        if (*ana)
        {
            AnalyticArgs a;
            a.scenario = scenario();
            a.power_grid = ana_grid;
            a.out = out_path;
            return cmd_analytic(a, out);
        }
        if (*tab)
        {
            Table1Args a;
            a.scenario = scenario();
            a.trials = tab_trials;
            a.seed = seed_of(tab_seed);
            a.workers = workers;
            a.out = out_path;
            return cmd_table1(a, out, err);
        }
        if (*plot)
            return cmd_plotdata(PlotArgs{from, out_path}, out);
        if (*replay)
            return cmd_replay(manifest_file, replay_out->count() ? std::optional(out_path) : std::nullopt, out, err);
    }
    catch (const IoError &e)
    {
        fmt::print(err, "error: {}\n", e.what());
        return kExitIo;
    }
    catch (const ScenarioError &e)
    {
        fmt::print(err, "error: {}: {}\n", config_file.empty() ? std::string("manifest") : config_file, e.what());
        return kExitInput;
    }
    catch (const std::exception &e)
    {
        // InputError, ConfigError and domain errors from the library are all bad input.
        fmt::print(err, "error: {}\n", e.what());
        return kExitInput;
    }
    return kExitInput;
}

} // namespace crnoma::cli
