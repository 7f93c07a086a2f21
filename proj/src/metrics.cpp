// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "irowc/metrics.hpp"

#include "irowc/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace irowc {

namespace {

double power_squared_sum(const ImpulseResponse &s)
{
    double q = 0.0;
    for (double g : s.gains)
        q += g * g;
    return q;
}

} // namespace

double mean_delay(const ImpulseResponse &s)
{
    const double q = power_squared_sum(s);
    if (q <= 0.0)
        throw no_signal_error("mean delay undefined for an all-zero signal");
    double num = 0.0;
    for (std::size_t i = 0; i < s.gains.size(); ++i) {
        double t = static_cast<double>(s.start_bin + static_cast<std::int64_t>(i)) * s.bin_width;
        num += t * s.gains[i] * s.gains[i];
    }
    return num / q;
}

double rms_delay_spread(const ImpulseResponse &s)
{
    const double q = power_squared_sum(s);
    if (q <= 0.0)
        throw no_signal_error("RMS delay spread undefined for an all-zero signal");
    const double mu = mean_delay(s);
    double num = 0.0;
    for (std::size_t i = 0; i < s.gains.size(); ++i) {
        double t = static_cast<double>(s.start_bin + static_cast<std::int64_t>(i)) * s.bin_width;
        num += (t - mu) * (t - mu) * s.gains[i] * s.gains[i];
    }
    return std::sqrt(num / q);
}

DelayStats delay_stats(const ImpulseResponse &s)
{
    DelayStats st;
    st.mean_delay = mean_delay(s);
    st.rms_spread = rms_delay_spread(s);
    st.total = s.sum();
    st.peak = s.peak();
    st.peak_time = static_cast<double>(s.peak_bin()) * s.bin_width;
    return st;
}

double spread_reduction(const DelayStats &conventional, const DelayStats &adapted)
{
    if (!(conventional.rms_spread > 0.0))
        throw std::invalid_argument("reduction undefined: conventional spread is zero");
    return (conventional.rms_spread - adapted.rms_spread) / conventional.rms_spread;
}

} // namespace irowc
