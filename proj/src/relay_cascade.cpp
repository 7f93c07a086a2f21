// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "irowc/relay_cascade.hpp"

#include <cmath>
#include <stdexcept>

namespace irowc {

ImpulseResponse composite_response(const ImpulseResponse &h_tr, const ImpulseResponse &h_ru)
{
    return convolve(h_tr, h_ru);
}

ImpulseResponse received_signal(const TransmitWaveform &x, const std::vector<RelayPath> &relays,
                                const ReceiverFrontEnd &fe)
{
    if (!(fe.responsivity > 0.0))
        throw std::invalid_argument("responsivity must be positive");

    ImpulseResponse wave;
    wave.bin_width = x.bin_width;
    wave.gains = x.samples;
    wave.normalize();

    ImpulseResponse out;
    out.bin_width = x.bin_width;
    for (const RelayPath &rp : relays) {
        if (rp.composite.bin_width != x.bin_width)
            throw std::invalid_argument("received_signal: mismatched bin widths");
        if (rp.forward_delay < 0.0)
            throw std::invalid_argument("forward delay must be non-negative");
        double bins_f = rp.forward_delay / x.bin_width;
        auto bins = static_cast<std::int64_t>(std::llround(bins_f));
        if (std::abs(bins_f - static_cast<double>(bins)) > 1e-6)
            throw std::invalid_argument("forward delay is not a whole number of bins");
        out = add(out, shift(convolve(wave, rp.composite), bins));
    }

    for (double &g : out.gains)
        g *= fe.responsivity;
    return out;
}

} // namespace irowc
