// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IROWC_DELAY_ADAPTATION_HPP
#define IROWC_DELAY_ADAPTATION_HPP

#include "irowc/impulse_response.hpp"
#include "irowc/ooc.hpp"

#include <utility>
#include <vector>

namespace irowc {

enum class ReferenceKind { Peak, FirstThreshold };

/// How the user extracts a per-relay arrival reference from a composite
/// response: the maximum-gain bin, or the first bin reaching a fraction of
/// the peak.
struct ReferenceCriterion {
    ReferenceKind kind = ReferenceKind::Peak;
    double threshold_fraction = 0.5;
};

struct ProbeProtocolConfig {
    double slot_interval = 2e-7;  // s, sequential mode
    double chip_duration = 1e-10; // s, OOC mode
    int code_length = 73;
    int code_weight = 3;
};

/// End-to-end transmitter->relay->user channel of one relay.
struct RelayComposite {
    int id = 0;
    ImpulseResponse composite;
};

struct ProbeMeasurement {
    int id = 0;
    bool reachable = false;
    double t_ref = 0.0; // s, valid only when reachable
};

struct DelayAssignment {
    std::vector<std::pair<int, double>> delays; // relay id -> forward delay, s

    double delay_for(int id) const;
};

enum class AdaptationMethod { Direct, Sequential, Ooc };

/// Arrival reference of one response under the chosen criterion.
double reference_time(const ImpulseResponse &h, const ReferenceCriterion &c);

/// delta_r = max(t_ref) - t_ref_r, quantized to whole bins (round to
/// nearest, ties up). The latest relay gets zero.
DelayAssignment differential_delays(const std::vector<std::pair<int, double>> &reference_times,
                                    double bin_width);

/// Each relay occupies its own probe slot on a frame-synchronized timeline;
/// the user measures the reference arrival inside each slot and removes the
/// known slot offset. Slots must exceed the channel memory.
std::vector<ProbeMeasurement> simulate_sequential_probe(const std::vector<RelayComposite> &relays,
                                                        const ProbeProtocolConfig &cfg,
                                                        const ReferenceCriterion &c);

/// All relays transmit their codeword chip waveforms simultaneously; the
/// user runs one cyclic matched filter per codeword and reports the
/// correlation-peak time. Exact in the noiseless integer-chip delta-channel
/// regime.
std::vector<ProbeMeasurement> simulate_ooc_probe(const std::vector<RelayComposite> &relays,
                                                 const std::vector<Codeword> &codes,
                                                 const ProbeProtocolConfig &cfg);

/// Full adaptation: measure per-relay reference times (genie-aided, via the
/// sequential protocol, or via the OOC protocol run on synthetic unit-gain
/// delta channels at each relay's reference bin) and derive the forward
/// delays. Unreachable relays are excluded from the assignment.
DelayAssignment adapt(const std::vector<RelayComposite> &relays, AdaptationMethod method,
                      const ReferenceCriterion &c, const ProbeProtocolConfig &cfg = {});

} // namespace irowc

#endif
