// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IROWC_IMPULSE_RESPONSE_HPP
#define IROWC_IMPULSE_RESPONSE_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace irowc {

/// Uniformly binned channel gain sequence. Bin k of the absolute timeline is
/// gains[k - start_bin]; bins outside [start_bin, start_bin + size) are zero.
/// Canonical form has no leading or trailing zero bins (an all-zero response
/// is an empty gains vector with start_bin 0).
struct ImpulseResponse {
    double bin_width = 1e-10; // seconds
    std::int64_t start_bin = 0;
    std::vector<double> gains;

    bool is_zero() const { return gains.empty(); }
    std::int64_t end_bin() const { return start_bin + static_cast<std::int64_t>(gains.size()); }

    double at_bin(std::int64_t bin) const
    {
        if (bin < start_bin || bin >= end_bin())
            return 0.0;
        return gains[static_cast<std::size_t>(bin - start_bin)];
    }

    double sum() const;
    double peak() const;
    /// Absolute index of the maximum bin, earliest on ties.
    std::int64_t peak_bin() const;

    /// Trim leading/trailing zero bins into canonical form.
    void normalize();
};

bool operator==(const ImpulseResponse &a, const ImpulseResponse &b);

/// Sums (gain, delay) path impulses into bins: bin = floor(delay / bin_width).
ImpulseResponse bin_accumulate(const std::vector<std::pair<double, double>> &paths,
                               double bin_width);

/// Discrete convolution; start bins add, bin width is preserved. No bin-width
/// scaling: gains are sums of path impulses, not densities.
ImpulseResponse convolve(const ImpulseResponse &a, const ImpulseResponse &b);

/// Pointwise sum on the shared absolute timeline.
ImpulseResponse add(const ImpulseResponse &a, const ImpulseResponse &b);

/// Delay by a whole number of bins (negative shifts allowed down to bin 0).
ImpulseResponse shift(const ImpulseResponse &h, std::int64_t bins);

} // namespace irowc

#endif
