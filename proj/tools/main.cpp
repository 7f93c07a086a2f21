// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "irowc/errors.hpp"
#include "irowc/oracle.hpp"
#include "irowc/scenario.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace irowc;

std::string read_file(const std::string &path)
{
    std::ifstream is(path);
    if (!is)
        throw std::invalid_argument("cannot read config file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::vector<int> parse_scenarios(const std::string &arg)
{
    if (arg == "all")
        return {1, 2, 3};
    int k = std::stoi(arg);
    if (k < 1 || k > 3)
        throw std::invalid_argument("scenario must be 1, 2, 3 or all");
    return {k};
}

std::vector<ScenarioConfig> load_scenarios(const std::string &config_path,
                                           const std::string &scenario_arg, double scale)
{
    std::string text = config_path.empty() ? std::string() : read_file(config_path);
    return load_config(text, parse_scenarios(scenario_arg), scale);
}

int cmd_run(const std::string &config_path, const std::string &scenario_arg,
            const std::string &mode, double scale, const std::string &out_dir,
            const std::string &format)
{
    SweepOptions opts;
    if (mode == "conventional")
        opts.modes = {RunMode::Conventional};
    else if (mode == "da")
        opts.modes = {RunMode::DelayAdapted};
    else if (mode != "both")
        throw std::invalid_argument("mode must be conventional, da or both");

    if (out_dir.empty())
        throw std::invalid_argument("--out must not be empty");

    std::vector<ScenarioConfig> scenarios = load_scenarios(config_path, scenario_arg, scale);

    std::filesystem::create_directories(out_dir);
    opts.dump_dir = out_dir;

    std::vector<RunRecord> records;
    for (const ScenarioConfig &sc : scenarios) {
        auto recs = run_sweep(sc, opts);
        records.insert(records.end(), recs.begin(), recs.end());
    }

    if (format == "csv") {
        emit_csv_files(records, out_dir);
        std::cout << "wrote " << out_dir << "/results.csv and summary.csv ("
                  << records.size() << " records)\n";
    } else if (format == "structured") {
        std::ofstream os(std::filesystem::path(out_dir) / "records.json");
        os << emit_structured(records);
        emit_csv_files(records, out_dir);
        std::cout << "wrote " << out_dir << "/records.json (" << records.size()
                  << " records)\n";
    } else {
        throw std::invalid_argument("format must be csv or structured");
    }
    return 0;
}

int cmd_impulse(const std::string &config_path, const std::string &scenario_arg, double scale,
                double x, double y, double z, const std::string &out_dir)
{
    for (ScenarioConfig sc : load_scenarios(config_path, scenario_arg, scale)) {
        sc.sweep = {{x, y}};
        sc.user_plane_z = z;
        SweepOptions opts;
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            opts.dump_dir = out_dir;
        }
        for (const RunRecord &rec : run_sweep(sc, opts)) {
            std::cout << "scenario " << rec.scenario << " " << to_string(rec.mode)
                      << ": mu=" << rec.stats.mean_delay * 1e9
                      << " ns, D=" << rec.stats.rms_spread * 1e9
                      << " ns, peak=" << rec.stats.peak << " at " << rec.stats.peak_time * 1e9
                      << " ns, total=" << rec.stats.total << "\n";
            if (out_dir.empty())
                write_impulse_table(rec.aggregate, std::cout);
            else
                std::cout << "  table: " << rec.impulse_path << "\n";
        }
    }
    return 0;
}

int cmd_probe(const std::string &config_path, const std::string &scenario_arg, double scale,
              const std::string &method, double x, double y)
{
    for (ScenarioConfig sc : load_scenarios(config_path, scenario_arg, scale)) {
        sc.sweep = {{x, y}};
        if (method == "sequential")
            sc.method = AdaptationMethod::Sequential;
        else if (method == "ooc")
            sc.method = AdaptationMethod::Ooc;
        else
            throw std::invalid_argument("probe method must be sequential or ooc");

        // build the composites the same way run_sweep does
        ChannelEngine engine(sc.room, sc.channel);
        Detector user = sc.user_template;
        user.position = {x, y, sc.user_plane_z};
        std::vector<RelayComposite> composites;
        for (const RelayTerminal &r : sc.relays) {
            ImpulseResponse h_tr = engine.impulse_response(sc.transmitter, r.detector);
            ImpulseResponse h_ru = engine.impulse_response(r.emitter, user);
            ImpulseResponse comp = composite_response(h_tr, h_ru);
            if (!comp.is_zero())
                composites.push_back({r.id, std::move(comp)});
        }
        DelayAssignment probed = adapt(composites, sc.method, sc.criterion, sc.probe);
        DelayAssignment direct = adapt(composites, AdaptationMethod::Direct, sc.criterion,
                                       sc.probe);
        std::cout << "scenario " << sc.scenario_id << " (" << method << " probe, user at " << x
                  << "," << y << "," << sc.user_plane_z << ")\n";
        std::cout << "relay,delay_ns," << method << "_matches_direct\n";
        for (const auto &[id, d] : probed.delays)
            std::cout << id << "," << d * 1e9 << ","
                      << (d == direct.delay_for(id) ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_ooc(int n, int w, int lambda)
{
    CodeFamily fam = generate(n, w, lambda);
    std::cout << "# n=" << fam.length << " w=" << fam.weight << " lambda=" << fam.lambda
              << " codewords=" << fam.codewords.size()
              << (fam.verify() ? " verified" : " VERIFICATION-FAILED") << "\n";
    for (const Codeword &c : fam.codewords) {
        for (std::size_t i = 0; i < c.marks.size(); ++i)
            std::cout << (i ? " " : "") << c.marks[i];
        std::cout << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string &config_path, const std::string &scenario_arg, double x,
               double y, double z, double element_side, int bounces)
{
    for (const ScenarioConfig &sc : load_scenarios(config_path, scenario_arg, 1.0)) {
        ChannelConfig cfg = sc.channel;
        cfg.max_bounces = bounces;
        cfg.element_side_bounce1 = element_side;
        cfg.element_side_bounce2 = element_side;
        Detector user = sc.user_template;
        user.position = {x, y, z};
        ImpulseResponse h = oracle_impulse_response(sc.transmitter, user, sc.room, cfg);
        std::cout << "# oracle engine, scenario " << sc.scenario_id << ", element_side "
                  << element_side << " m, bounces " << bounces << "\n";
        write_impulse_table(h, std::cout);
        break; // the reference channel does not depend on the relay deployment
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Relay-assisted indoor infrared optical wireless channel simulator"};
    app.require_subcommand(1);

    std::string config_path, scenario_arg = "all", mode = "both", out_dir = "out",
                impulse_out, format = "csv", method = "sequential";
    double scale = 1.0, x = 1.0, y = 1.0, z = 1.0, element_side = 0.5;
    int n = 73, w = 3, lambda = 1, bounces = 2;

    auto *run = app.add_subcommand("run", "Run the conventional vs delay-adapted sweep");
    run->add_option("--config", config_path, "JSON config file (defaults shipped in-binary)");
    run->add_option("--scenario", scenario_arg, "1|2|3|all");
    run->add_option("--mode", mode, "conventional|da|both");
    run->add_option("--resolution-scale", scale, "multiplies both element sides");
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--format", format, "csv|structured");

    auto *impulse = app.add_subcommand("impulse", "Dump the aggregate response at one position");
    impulse->add_option("--config", config_path);
    impulse->add_option("--scenario", scenario_arg);
    impulse->add_option("--resolution-scale", scale);
    impulse->add_option("--x", x)->required();
    impulse->add_option("--y", y)->required();
    impulse->add_option("--z", z);
    impulse->add_option("--out", impulse_out, "write tables here instead of stdout");

    auto *probe = app.add_subcommand("probe", "Simulate a delay measurement protocol");
    probe->add_option("--config", config_path);
    probe->add_option("--scenario", scenario_arg);
    probe->add_option("--resolution-scale", scale);
    probe->add_option("--method", method, "sequential|ooc");
    probe->add_option("--x", x);
    probe->add_option("--y", y);

    auto *ooc = app.add_subcommand("ooc", "Emit an optical orthogonal code family");
    ooc->add_option("--n", n, "code length in chips");
    ooc->add_option("--w", w, "code weight");
    ooc->add_option("--lambda", lambda, "correlation bound");

    auto *oracle = app.add_subcommand("oracle", "Run the naive reference channel engine");
    oracle->add_option("--config", config_path);
    oracle->add_option("--scenario", scenario_arg);
    oracle->add_option("--x", x)->required();
    oracle->add_option("--y", y)->required();
    oracle->add_option("--z", z);
    oracle->add_option("--element-side", element_side, "element side for both bounce orders");
    oracle->add_option("--bounces", bounces, "0|1|2");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(config_path, scenario_arg, mode, scale, out_dir, format);
        if (impulse->parsed())
            return cmd_impulse(config_path, scenario_arg, scale, x, y, z, impulse_out);
        if (probe->parsed())
            return cmd_probe(config_path, scenario_arg, scale, method, x, y);
        if (ooc->parsed())
            return cmd_ooc(n, w, lambda);
        if (oracle->parsed())
            return cmd_oracle(config_path, scenario_arg, x, y, z, element_side, bounces);
    } catch (const irowc::no_signal_error &e) {
        std::cerr << "no-signal: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
