// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IROWC_METRICS_HPP
#define IROWC_METRICS_HPP

#include "irowc/impulse_response.hpp"

namespace irowc {

struct DelayStats {
    double mean_delay = 0.0; // s
    double rms_spread = 0.0; // s
    double total = 0.0;      // bin-sum of the signal
    double peak = 0.0;       // max bin value
    double peak_time = 0.0;  // s
};

/// mu = sum(t_i * P_i^2) / sum(P_i^2), t_i the bin-start time.
double mean_delay(const ImpulseResponse &s);

/// D = sqrt( sum((t_i - mu)^2 * P_i^2) / sum(P_i^2) ).
double rms_delay_spread(const ImpulseResponse &s);

DelayStats delay_stats(const ImpulseResponse &s);

/// Fractional RMS-delay-spread reduction (D_conv - D_da) / D_conv.
/// Negative when the adapted system is worse; not clamped.
double spread_reduction(const DelayStats &conventional, const DelayStats &adapted);

} // namespace irowc

#endif
