// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "irowc/impulse_response.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irowc {

double ImpulseResponse::sum() const
{
    double s = 0.0;
    for (double g : gains)
        s += g;
    return s;
}

double ImpulseResponse::peak() const
{
    double p = 0.0;
    for (double g : gains)
        p = std::max(p, g);
    return p;
}

std::int64_t ImpulseResponse::peak_bin() const
{
    if (gains.empty())
        return start_bin;
    auto it = std::max_element(gains.begin(), gains.end());
    return start_bin + static_cast<std::int64_t>(it - gains.begin());
}

void ImpulseResponse::normalize()
{
    std::size_t lead = 0;
    while (lead < gains.size() && gains[lead] == 0.0)
        ++lead;
    if (lead == gains.size()) {
        gains.clear();
        start_bin = 0;
        return;
    }
    std::size_t tail = gains.size();
    while (tail > lead && gains[tail - 1] == 0.0)
        --tail;
    if (lead > 0 || tail < gains.size()) {
        gains = std::vector<double>(gains.begin() + static_cast<std::ptrdiff_t>(lead),
                                    gains.begin() + static_cast<std::ptrdiff_t>(tail));
        start_bin += static_cast<std::int64_t>(lead);
    }
}

bool operator==(const ImpulseResponse &a, const ImpulseResponse &b)
{
    return a.bin_width == b.bin_width && a.start_bin == b.start_bin && a.gains == b.gains;
}

ImpulseResponse bin_accumulate(const std::vector<std::pair<double, double>> &paths,
                               double bin_width)
{
    if (!(bin_width > 0.0))
        throw std::invalid_argument("bin_width must be positive");

    ImpulseResponse h;
    h.bin_width = bin_width;
    for (const auto &[gain, delay] : paths) {
        if (delay < 0.0)
            throw std::invalid_argument("path delay must be non-negative");
        if (gain < 0.0)
            throw std::invalid_argument("path gain must be non-negative");
        auto bin = static_cast<std::size_t>(std::floor(delay / bin_width));
        if (bin >= h.gains.size())
            h.gains.resize(bin + 1, 0.0);
        h.gains[bin] += gain;
    }
    h.normalize();
    return h;
}

ImpulseResponse convolve(const ImpulseResponse &a, const ImpulseResponse &b)
{
    if (a.bin_width != b.bin_width)
        throw std::invalid_argument("convolve: mismatched bin widths");

    ImpulseResponse out;
    out.bin_width = a.bin_width;
    if (a.is_zero() || b.is_zero())
        return out;

    out.start_bin = a.start_bin + b.start_bin;
    out.gains.assign(a.gains.size() + b.gains.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.gains.size(); ++i) {
        const double ai = a.gains[i];
        if (ai == 0.0)
            continue;
        for (std::size_t j = 0; j < b.gains.size(); ++j)
            out.gains[i + j] += ai * b.gains[j];
    }
    out.normalize();
    return out;
}

ImpulseResponse add(const ImpulseResponse &a, const ImpulseResponse &b)
{
    if (a.bin_width != b.bin_width)
        throw std::invalid_argument("add: mismatched bin widths");
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;

    ImpulseResponse out;
    out.bin_width = a.bin_width;
    out.start_bin = std::min(a.start_bin, b.start_bin);
    std::int64_t end = std::max(a.end_bin(), b.end_bin());
    out.gains.assign(static_cast<std::size_t>(end - out.start_bin), 0.0);
    for (std::size_t i = 0; i < a.gains.size(); ++i)
        out.gains[static_cast<std::size_t>(a.start_bin - out.start_bin) + i] += a.gains[i];
    for (std::size_t i = 0; i < b.gains.size(); ++i)
        out.gains[static_cast<std::size_t>(b.start_bin - out.start_bin) + i] += b.gains[i];
    out.normalize();
    return out;
}

ImpulseResponse shift(const ImpulseResponse &h, std::int64_t bins)
{
    ImpulseResponse out = h;
    if (out.is_zero())
        return out;
    out.start_bin += bins;
    if (out.start_bin < 0)
        throw std::invalid_argument("shift: response would start before t = 0");
    return out;
}

} // namespace irowc
