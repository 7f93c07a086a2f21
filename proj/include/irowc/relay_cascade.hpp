// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IROWC_RELAY_CASCADE_HPP
#define IROWC_RELAY_CASCADE_HPP

#include "irowc/impulse_response.hpp"
#include "irowc/radiometry.hpp"

#include <vector>

namespace irowc {

/// Ideal unit-gain amplify-and-forward repeater: a detector facing the
/// transmitter paired with a diffuse emitter, plus a programmable pure delay.
struct RelayTerminal {
    int id = 0;
    Detector detector;
    Emitter emitter;
    double forward_delay = 0.0; // s, whole bins when applied
};

struct ReceiverFrontEnd {
    double responsivity = 1.0; // A/W
    Detector detector;
};

struct TransmitWaveform {
    double bin_width = 1e-10;
    std::vector<double> samples; // optical power per bin, watts

    static TransmitWaveform unit_impulse(double bin_width = 1e-10)
    {
        return {bin_width, {1.0}};
    }
};

/// One relay path through the cascade: its end-to-end channel and the delay
/// programmed into the relay.
struct RelayPath {
    ImpulseResponse composite;
    double forward_delay = 0.0;
};

/// h_tr (x) h_ru — the end-to-end channel through one zero-delay relay.
ImpulseResponse composite_response(const ImpulseResponse &h_tr, const ImpulseResponse &h_ru);

/// Received photocurrent per bin: R * sum_r (x (x) composite_r) delayed by
/// each relay's forward delay. Delays must be whole multiples of the bin
/// width.
ImpulseResponse received_signal(const TransmitWaveform &x, const std::vector<RelayPath> &relays,
                                const ReceiverFrontEnd &fe);

} // namespace irowc

#endif
