// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IROWC_SCENARIO_HPP
#define IROWC_SCENARIO_HPP

#include "irowc/channel.hpp"
#include "irowc/delay_adaptation.hpp"
#include "irowc/metrics.hpp"
#include "irowc/relay_cascade.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace irowc {

enum class RunMode { Conventional, DelayAdapted };

std::string to_string(RunMode mode);
std::string to_string(AdaptationMethod method);

/// Complete experiment description for one relay deployment scenario.
struct ScenarioConfig {
    int scenario_id = 1;
    RoomModel room = RoomModel::reference_room();
    Emitter transmitter{{2, 4, 3}, {0, 0, -1}, 1.0, 1.0};
    double relay_depth = 0.5; // m below the ceiling
    std::string relay_preset = "default-walls"; // or "perimeter-arc" / "explicit"
    std::vector<RelayTerminal> relays;
    Detector user_template{{0, 0, 1.0}, {0, 0, 1}, 1e-4, 90.0};
    double user_plane_z = 1.0;
    ChannelConfig channel;
    AdaptationMethod method = AdaptationMethod::Direct;
    ReferenceCriterion criterion;
    ProbeProtocolConfig probe;
    ReceiverFrontEnd front_end{1.0, {}};
    bool include_direct_path = false;
    std::vector<std::pair<double, double>> sweep; // user (x, y)
    double wavelength_nm = 850.0; // recorded only

    void validate() const;
};

struct RunRecord {
    int scenario = 1;
    RunMode mode = RunMode::Conventional;
    Vec3 user;
    std::vector<std::pair<int, double>> delays; // relay id -> forward delay, s
    std::vector<int> excluded_relays;           // unreachable, dropped with a warning
    DelayStats stats;
    std::string impulse_path; // empty when dumps were not requested
    ImpulseResponse aggregate;
};

bool operator==(const RunRecord &a, const RunRecord &b);

/// Paper deployment k = 1/2/3: 12 relays, 0.5/1.0/1.5 m below the ceiling.
ScenarioConfig build_scenario(int k);

/// Relay placement presets. "default-walls": six relays on each long wall
/// (x = 0 and x = width) at 1 m spacing. "perimeter-arc": relays strung
/// 1 m apart along the wall perimeter starting at the x = 0 / y = 0 corner.
std::vector<RelayTerminal> place_relays(const std::string &preset, const RoomModel &room,
                                        const Vec3 &transmitter_pos, double relay_depth,
                                        int count = 12);

struct SweepOptions {
    std::vector<RunMode> modes{RunMode::Conventional, RunMode::DelayAdapted};
    std::string dump_dir; // when set, impulse responses are written here
};

/// Runs the conventional/delay-adapted comparison over the user sweep.
/// Transmitter->relay responses are computed once per relay and reused for
/// every user position.
std::vector<RunRecord> run_sweep(const ScenarioConfig &cfg, const SweepOptions &opts = {});

/// results.csv rows plus a summary with per-scenario and overall mean
/// reduction. Fixed 9-significant-digit float formatting.
void emit_csv(const std::vector<RunRecord> &records, std::ostream &results,
              std::ostream &summary);
void emit_csv_files(const std::vector<RunRecord> &records, const std::string &out_dir);

/// Structured (JSON) record set; parse_structured(emit_structured(r)) == r.
std::string emit_structured(const std::vector<RunRecord> &records);
std::vector<RunRecord> parse_structured(const std::string &text);

/// Two-column (time_ns, value) table of a binned signal.
void write_impulse_table(const ImpulseResponse &h, std::ostream &os);

/// Base settings plus per-scenario overrides parsed from a JSON config file.
/// Returns one ScenarioConfig per requested scenario id.
std::vector<ScenarioConfig> load_config(const std::string &json_text,
                                        const std::vector<int> &scenario_ids,
                                        double resolution_scale = 1.0);

/// The shipped Table-1 defaults as a JSON string (also in config/default.json).
std::string default_config_json();

} // namespace irowc

#endif
