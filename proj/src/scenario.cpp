// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "irowc/scenario.hpp"

#include "irowc/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace irowc {

using nlohmann::json;

namespace {

std::string fmt9(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

Vec3 direction_from_angles(double elevation_deg, double azimuth_deg)
{
    const double el = elevation_deg * std::numbers::pi / 180.0;
    const double az = azimuth_deg * std::numbers::pi / 180.0;
    Vec3 v{std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
    // snap the residue of cos(pi/2) so axis-aligned boresights are exact
    for (double *c : {&v.x, &v.y, &v.z})
        if (std::abs(*c) < 1e-15)
            *c = 0.0;
    return v;
}

} // namespace

std::string to_string(RunMode mode)
{
    return mode == RunMode::Conventional ? "conventional" : "da";
}

std::string to_string(AdaptationMethod method)
{
    switch (method) {
    case AdaptationMethod::Direct:
        return "direct";
    case AdaptationMethod::Sequential:
        return "sequential";
    case AdaptationMethod::Ooc:
        return "ooc";
    }
    return "direct";
}

void ScenarioConfig::validate() const
{
    channel.validate();
    if (!(relay_depth > 0.0) || relay_depth >= room.height)
        throw std::invalid_argument("relay_depth must lie in (0, room height)");
    if (!room.contains(transmitter.position))
        throw std::invalid_argument("transmitter outside the room");
    if (relays.empty())
        throw std::invalid_argument("scenario has no relays");
    for (const RelayTerminal &r : relays)
        if (!room.contains(r.detector.position) || !room.contains(r.emitter.position))
            throw std::invalid_argument("relay outside the room");
    for (const auto &[x, y] : sweep)
        if (!room.contains({x, y, user_plane_z}))
            throw std::invalid_argument("sweep position outside the room");
}

bool operator==(const RunRecord &a, const RunRecord &b)
{
    return a.scenario == b.scenario && a.mode == b.mode && a.user == b.user &&
           a.delays == b.delays && a.excluded_relays == b.excluded_relays &&
           a.stats.mean_delay == b.stats.mean_delay && a.stats.rms_spread == b.stats.rms_spread &&
           a.stats.total == b.stats.total && a.stats.peak == b.stats.peak &&
           a.stats.peak_time == b.stats.peak_time && a.impulse_path == b.impulse_path &&
           a.aggregate == b.aggregate;
}

std::vector<RelayTerminal> place_relays(const std::string &preset, const RoomModel &room,
                                        const Vec3 &transmitter_pos, double relay_depth,
                                        int count)
{
    const double z = room.height - relay_depth;
    std::vector<Vec3> positions;
    std::vector<Vec3> inward;

    if (preset == "default-walls") {
        if (count != 12)
            throw std::invalid_argument("default-walls preset places exactly 12 relays");
        for (double wall_x : {0.0, room.width}) {
            Vec3 n = wall_x == 0.0 ? Vec3{1, 0, 0} : Vec3{-1, 0, 0};
            for (int k = 0; k < 6; ++k) {
                positions.push_back({wall_x, 1.5 + static_cast<double>(k), z});
                inward.push_back(n);
            }
        }
    } else if (preset == "perimeter-arc") {
        // relays strung 1 m apart along the wall perimeter, arc start 0.5 m
        // from the (0,0) corner
        const double w = room.width, l = room.length;
        for (int k = 0; k < count; ++k) {
            double s = 0.5 + static_cast<double>(k);
            if (s < w) {
                positions.push_back({s, 0, z});
                inward.push_back({0, 1, 0});
            } else if (s < w + l) {
                positions.push_back({w, s - w, z});
                inward.push_back({-1, 0, 0});
            } else if (s < 2 * w + l) {
                positions.push_back({w - (s - w - l), l, z});
                inward.push_back({0, -1, 0});
            } else {
                positions.push_back({0, l - (s - 2 * w - l), z});
                inward.push_back({1, 0, 0});
            }
        }
    } else {
        throw std::invalid_argument("unknown relay preset: " + preset);
    }

    std::vector<RelayTerminal> relays;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        RelayTerminal r;
        r.id = static_cast<int>(i);
        r.detector = {positions[i], (transmitter_pos - positions[i]).normalized(), 1e-4, 90.0};
        r.emitter = {positions[i], inward[i], 1.0, 1.0};
        relays.push_back(r);
    }
    return relays;
}

ScenarioConfig build_scenario(int k)
{
    if (k < 1 || k > 3)
        throw std::invalid_argument("scenario index must be 1, 2 or 3");
    ScenarioConfig cfg;
    cfg.scenario_id = k;
    cfg.relay_depth = 0.5 * static_cast<double>(k);
    cfg.relays = place_relays(cfg.relay_preset, cfg.room, cfg.transmitter.position,
                              cfg.relay_depth);
    for (double x : {1.0, 2.0})
        for (int y = 1; y <= 7; ++y)
            cfg.sweep.emplace_back(x, static_cast<double>(y));
    cfg.front_end.detector = cfg.user_template;
    return cfg;
}

std::vector<RunRecord> run_sweep(const ScenarioConfig &cfg, const SweepOptions &opts)
{
    cfg.validate();
    ChannelEngine engine(cfg.room, cfg.channel);

    // transmitter->relay responses are position independent: compute once
    std::vector<ImpulseResponse> h_tr;
    h_tr.reserve(cfg.relays.size());
    for (const RelayTerminal &r : cfg.relays)
        h_tr.push_back(engine.impulse_response(cfg.transmitter, r.detector));

    struct PositionData {
        Vec3 user;
        std::vector<RelayComposite> composites;
        std::vector<int> excluded;
        ImpulseResponse direct; // transmitter->user, only when requested
    };

    std::vector<PositionData> positions;
    for (const auto &[x, y] : cfg.sweep) {
        PositionData pd;
        pd.user = {x, y, cfg.user_plane_z};
        Detector user = cfg.user_template;
        user.position = pd.user;
        for (std::size_t i = 0; i < cfg.relays.size(); ++i) {
            ImpulseResponse h_ru = engine.impulse_response(cfg.relays[i].emitter, user);
            ImpulseResponse composite = composite_response(h_tr[i], h_ru);
            if (composite.is_zero())
                pd.excluded.push_back(cfg.relays[i].id);
            else
                pd.composites.push_back({cfg.relays[i].id, std::move(composite)});
        }
        if (cfg.include_direct_path)
            pd.direct = engine.impulse_response(cfg.transmitter, user);
        positions.push_back(std::move(pd));
    }

    ReceiverFrontEnd fe = cfg.front_end;
    fe.detector = cfg.user_template;
    const TransmitWaveform x0 = TransmitWaveform::unit_impulse(cfg.channel.bin_width);

    std::vector<RunRecord> records;
    for (RunMode mode : opts.modes) {
        for (std::size_t p = 0; p < positions.size(); ++p) {
            const PositionData &pd = positions[p];
            RunRecord rec;
            rec.scenario = cfg.scenario_id;
            rec.mode = mode;
            rec.user = pd.user;
            rec.excluded_relays = pd.excluded;

            DelayAssignment assignment;
            if (mode == RunMode::DelayAdapted && !pd.composites.empty())
                assignment = adapt(pd.composites, cfg.method, cfg.criterion, cfg.probe);
            else
                for (const auto &rc : pd.composites)
                    assignment.delays.emplace_back(rc.id, 0.0);
            rec.delays = assignment.delays;

            std::vector<RelayPath> paths;
            for (const auto &rc : pd.composites)
                paths.push_back({rc.composite, assignment.delay_for(rc.id)});
            ImpulseResponse aggregate = received_signal(x0, paths, fe);
            if (cfg.include_direct_path && !pd.direct.is_zero()) {
                ImpulseResponse direct = pd.direct;
                for (double &g : direct.gains)
                    g *= fe.responsivity;
                aggregate = add(aggregate, direct);
            }
            if (aggregate.is_zero())
                throw no_signal_error("no relay reaches the user at (" + fmt9(pd.user.x) + "," +
                                      fmt9(pd.user.y) + "," + fmt9(pd.user.z) + ")");
            rec.stats = delay_stats(aggregate);
            rec.aggregate = std::move(aggregate);

            if (!opts.dump_dir.empty()) {
                std::ostringstream name;
                name << "ir_s" << cfg.scenario_id << "_" << to_string(mode) << "_x"
                     << fmt9(pd.user.x) << "_y" << fmt9(pd.user.y) << ".txt";
                std::filesystem::path path = std::filesystem::path(opts.dump_dir) / name.str();
                std::ofstream os(path);
                if (!os)
                    throw std::runtime_error("cannot write " + path.string());
                write_impulse_table(rec.aggregate, os);
                rec.impulse_path = path.string();
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

void write_impulse_table(const ImpulseResponse &h, std::ostream &os)
{
    os << "# time_ns value\n";
    for (std::size_t i = 0; i < h.gains.size(); ++i) {
        double t_ns = static_cast<double>(h.start_bin + static_cast<std::int64_t>(i)) *
                      h.bin_width * 1e9;
        os << fmt9(t_ns) << " " << fmt9(h.gains[i]) << "\n";
    }
}

namespace {

struct PairKey {
    int scenario;
    double x, y, z;
    bool operator<(const PairKey &o) const
    {
        if (scenario != o.scenario)
            return scenario < o.scenario;
        if (x != o.x)
            return x < o.x;
        if (y != o.y)
            return y < o.y;
        return z < o.z;
    }
};

std::map<PairKey, double> pair_reductions(const std::vector<RunRecord> &records)
{
    std::map<PairKey, const RunRecord *> conv, da;
    for (const RunRecord &r : records) {
        PairKey k{r.scenario, r.user.x, r.user.y, r.user.z};
        (r.mode == RunMode::Conventional ? conv : da)[k] = &r;
    }
    std::map<PairKey, double> out;
    for (const auto &[k, c] : conv) {
        auto it = da.find(k);
        if (it != da.end() && c->stats.rms_spread > 0.0)
            out[k] = spread_reduction(c->stats, it->second->stats);
    }
    return out;
}

} // namespace

void emit_csv(const std::vector<RunRecord> &records, std::ostream &results, std::ostream &summary)
{
    if (records.empty())
        throw std::invalid_argument("emit_csv: no records");

    const auto reductions = pair_reductions(records);

    results << "scenario,mode,x_m,y_m,z_m,mu_ns,D_ns,total_gain,peak_gain,peak_time_ns,"
               "reduction_pct\n";
    for (const RunRecord &r : records) {
        results << r.scenario << "," << to_string(r.mode) << "," << fmt9(r.user.x) << ","
                << fmt9(r.user.y) << "," << fmt9(r.user.z) << ","
                << fmt9(r.stats.mean_delay * 1e9) << "," << fmt9(r.stats.rms_spread * 1e9) << ","
                << fmt9(r.stats.total) << "," << fmt9(r.stats.peak) << ","
                << fmt9(r.stats.peak_time * 1e9) << ",";
        auto it = reductions.find({r.scenario, r.user.x, r.user.y, r.user.z});
        if (it != reductions.end())
            results << fmt9(it->second * 100.0);
        results << "\n";
    }

    summary << "scenario,positions,mean_reduction_pct\n";
    std::map<int, std::pair<int, double>> per_scenario; // count, sum
    for (const auto &[k, red] : reductions) {
        auto &[cnt, sum] = per_scenario[k.scenario];
        ++cnt;
        sum += red;
    }
    int total_count = 0;
    double total_sum = 0.0;
    for (const auto &[sid, agg] : per_scenario) {
        summary << sid << "," << agg.first << "," << fmt9(agg.second / agg.first * 100.0) << "\n";
        total_count += agg.first;
        total_sum += agg.second;
    }
    if (total_count > 0)
        summary << "all," << total_count << "," << fmt9(total_sum / total_count * 100.0) << "\n";
}

void emit_csv_files(const std::vector<RunRecord> &records, const std::string &out_dir)
{
    std::filesystem::create_directories(out_dir);
    std::ofstream results(std::filesystem::path(out_dir) / "results.csv");
    std::ofstream summary(std::filesystem::path(out_dir) / "summary.csv");
    if (!results || !summary)
        throw std::runtime_error("cannot write CSV outputs under " + out_dir);
    emit_csv(records, results, summary);
}

namespace {

json response_to_json(const ImpulseResponse &h)
{
    return json{{"bin_width_s", h.bin_width}, {"start_bin", h.start_bin}, {"gains", h.gains}};
}

ImpulseResponse response_from_json(const json &j)
{
    ImpulseResponse h;
    h.bin_width = j.at("bin_width_s").get<double>();
    h.start_bin = j.at("start_bin").get<std::int64_t>();
    h.gains = j.at("gains").get<std::vector<double>>();
    return h;
}

} // namespace

std::string emit_structured(const std::vector<RunRecord> &records)
{
    if (records.empty())
        throw std::invalid_argument("emit_structured: no records");
    json out;
    out["records"] = json::array();
    for (const RunRecord &r : records) {
        json jr;
        jr["scenario"] = r.scenario;
        jr["mode"] = to_string(r.mode);
        jr["user"] = {r.user.x, r.user.y, r.user.z};
        jr["delays"] = json::array();
        for (const auto &[id, d] : r.delays)
            jr["delays"].push_back({{"relay", id}, {"delay_s", d}});
        jr["excluded_relays"] = r.excluded_relays;
        jr["stats"] = {{"mean_delay_s", r.stats.mean_delay},
                       {"rms_spread_s", r.stats.rms_spread},
                       {"total", r.stats.total},
                       {"peak", r.stats.peak},
                       {"peak_time_s", r.stats.peak_time}};
        jr["impulse_path"] = r.impulse_path;
        jr["aggregate"] = response_to_json(r.aggregate);
        out["records"].push_back(std::move(jr));
    }
    return out.dump(2);
}

std::vector<RunRecord> parse_structured(const std::string &text)
{
    json in = json::parse(text);
    std::vector<RunRecord> records;
    for (const json &jr : in.at("records")) {
        RunRecord r;
        r.scenario = jr.at("scenario").get<int>();
        r.mode = jr.at("mode").get<std::string>() == "conventional" ? RunMode::Conventional
                                                                    : RunMode::DelayAdapted;
        const auto &u = jr.at("user");
        r.user = {u.at(0).get<double>(), u.at(1).get<double>(), u.at(2).get<double>()};
        for (const json &jd : jr.at("delays"))
            r.delays.emplace_back(jd.at("relay").get<int>(), jd.at("delay_s").get<double>());
        r.excluded_relays = jr.at("excluded_relays").get<std::vector<int>>();
        const auto &js = jr.at("stats");
        r.stats.mean_delay = js.at("mean_delay_s").get<double>();
        r.stats.rms_spread = js.at("rms_spread_s").get<double>();
        r.stats.total = js.at("total").get<double>();
        r.stats.peak = js.at("peak").get<double>();
        r.stats.peak_time = js.at("peak_time_s").get<double>();
        r.impulse_path = jr.at("impulse_path").get<std::string>();
        r.aggregate = response_from_json(jr.at("aggregate"));
        records.push_back(std::move(r));
    }
    return records;
}

std::string default_config_json()
{
    return R"({
  "room": {
    "length_m": 8.0,
    "width_m": 4.0,
    "height_m": 3.0,
    "wall_reflectivity": 0.8,
    "ceiling_reflectivity": 0.8,
    "floor_reflectivity": 0.3
  },
  "transmitter": {
    "position_m": [2.0, 4.0, 3.0],
    "optical_power_w": 1.0,
    "half_power_semiangle_deg": 60.0
  },
  "relays": {
    "preset": "default-walls",
    "detector_area_m2": 1e-4,
    "detector_fov_deg": 90.0
  },
  "user": {
    "plane_z_m": 1.0,
    "area_m2": 1e-4,
    "fov_deg": 90.0,
    "elevation_deg": 90.0,
    "azimuth_deg": 0.0
  },
  "channel": {
    "max_bounces": 2,
    "element_side_bounce1_m": 0.05,
    "element_side_bounce2_m": 0.20,
    "bin_width_s": 1e-10,
    "include_direct_path": false
  },
  "receiver": {
    "responsivity_a_per_w": 1.0
  },
  "adaptation": {
    "method": "direct",
    "criterion": "peak",
    "threshold_fraction": 0.5
  },
  "probe": {
    "slot_interval_s": 2e-7,
    "chip_duration_s": 1e-10,
    "code_length": 73,
    "code_weight": 3
  },
  "sweep": {
    "x_m": [1.0, 2.0],
    "y_m": [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0]
  },
  "wavelength_nm": 850.0
})";
}

std::vector<ScenarioConfig> load_config(const std::string &json_text,
                                        const std::vector<int> &scenario_ids,
                                        double resolution_scale)
{
    if (!(resolution_scale > 0.0))
        throw std::invalid_argument("resolution scale must be positive");

    json defaults = json::parse(default_config_json());
    json user_cfg = json_text.empty() ? json::object() : json::parse(json_text);
    json cfg = defaults;
    cfg.merge_patch(user_cfg);

    std::vector<ScenarioConfig> out;
    for (int k : scenario_ids) {
        ScenarioConfig sc = build_scenario(k);

        const json &jroom = cfg.at("room");
        sc.room = RoomModel::box(jroom.at("width_m").get<double>(),
                                 jroom.at("length_m").get<double>(),
                                 jroom.at("height_m").get<double>(),
                                 jroom.at("wall_reflectivity").get<double>(),
                                 jroom.at("ceiling_reflectivity").get<double>(),
                                 jroom.at("floor_reflectivity").get<double>());

        const json &jtx = cfg.at("transmitter");
        const auto &p = jtx.at("position_m");
        sc.transmitter.position = {p.at(0).get<double>(), p.at(1).get<double>(),
                                   p.at(2).get<double>()};
        sc.transmitter.normal = {0, 0, -1};
        sc.transmitter.optical_power = jtx.at("optical_power_w").get<double>();
        sc.transmitter.order = lambertian_order(jtx.at("half_power_semiangle_deg").get<double>());

        const json &jch = cfg.at("channel");
        sc.channel.max_bounces = jch.at("max_bounces").get<int>();
        sc.channel.element_side_bounce1 =
            jch.at("element_side_bounce1_m").get<double>() * resolution_scale;
        sc.channel.element_side_bounce2 =
            jch.at("element_side_bounce2_m").get<double>() * resolution_scale;
        sc.channel.bin_width = jch.at("bin_width_s").get<double>();
        sc.include_direct_path = jch.at("include_direct_path").get<bool>();

        const json &juser = cfg.at("user");
        sc.user_plane_z = juser.at("plane_z_m").get<double>();
        sc.user_template.position = {0, 0, sc.user_plane_z};
        sc.user_template.normal = direction_from_angles(juser.at("elevation_deg").get<double>(),
                                                        juser.at("azimuth_deg").get<double>());
        sc.user_template.area = juser.at("area_m2").get<double>();
        sc.user_template.fov_deg = juser.at("fov_deg").get<double>();

        sc.front_end.responsivity = cfg.at("receiver").at("responsivity_a_per_w").get<double>();
        sc.front_end.detector = sc.user_template;

        const json &jrel = cfg.at("relays");
        if (jrel.contains("depth_m"))
            sc.relay_depth = jrel.at("depth_m").get<double>();
        if (jrel.contains("explicit") && !jrel.at("explicit").empty()) {
            sc.relay_preset = "explicit";
            sc.relays.clear();
            int next_id = 0;
            for (const json &jr : jrel.at("explicit")) {
                RelayTerminal r;
                r.id = jr.contains("id") ? jr.at("id").get<int>() : next_id;
                next_id = r.id + 1;
                const auto &rp = jr.at("position_m");
                Vec3 pos{rp.at(0).get<double>(), rp.at(1).get<double>(), rp.at(2).get<double>()};
                r.detector = {pos, (sc.transmitter.position - pos).normalized(),
                              jrel.at("detector_area_m2").get<double>(),
                              jrel.at("detector_fov_deg").get<double>()};
                const auto &rn = jr.at("emitter_normal");
                r.emitter = {pos,
                             Vec3{rn.at(0).get<double>(), rn.at(1).get<double>(),
                                  rn.at(2).get<double>()}
                                 .normalized(),
                             1.0, 1.0};
                sc.relays.push_back(r);
            }
        } else {
            sc.relay_preset = jrel.at("preset").get<std::string>();
            sc.relays = place_relays(sc.relay_preset, sc.room, sc.transmitter.position,
                                     sc.relay_depth);
            for (RelayTerminal &r : sc.relays) {
                r.detector.area = jrel.at("detector_area_m2").get<double>();
                r.detector.fov_deg = jrel.at("detector_fov_deg").get<double>();
            }
        }

        const json &jad = cfg.at("adaptation");
        const std::string method = jad.at("method").get<std::string>();
        if (method == "direct")
            sc.method = AdaptationMethod::Direct;
        else if (method == "sequential")
            sc.method = AdaptationMethod::Sequential;
        else if (method == "ooc")
            sc.method = AdaptationMethod::Ooc;
        else
            throw std::invalid_argument("unknown adaptation method: " + method);
        const std::string crit = jad.at("criterion").get<std::string>();
        if (crit == "peak")
            sc.criterion.kind = ReferenceKind::Peak;
        else if (crit == "first-threshold")
            sc.criterion.kind = ReferenceKind::FirstThreshold;
        else
            throw std::invalid_argument("unknown reference criterion: " + crit);
        sc.criterion.threshold_fraction = jad.at("threshold_fraction").get<double>();

        const json &jpr = cfg.at("probe");
        sc.probe.slot_interval = jpr.at("slot_interval_s").get<double>();
        sc.probe.chip_duration = jpr.at("chip_duration_s").get<double>();
        sc.probe.code_length = jpr.at("code_length").get<int>();
        sc.probe.code_weight = jpr.at("code_weight").get<int>();

        const json &jsw = cfg.at("sweep");
        sc.sweep.clear();
        for (const json &jx : jsw.at("x_m"))
            for (const json &jy : jsw.at("y_m"))
                sc.sweep.emplace_back(jx.get<double>(), jy.get<double>());

        sc.wavelength_nm = cfg.at("wavelength_nm").get<double>();
        sc.validate();
        out.push_back(std::move(sc));
    }
    return out;
}

} // namespace irowc
