// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IROWC_OOC_HPP
#define IROWC_OOC_HPP

#include "irowc/impulse_response.hpp"
#include "irowc/relay_cascade.hpp"

#include <vector>

namespace irowc {

/// {0,1} cyclic codeword given by its mark positions (strictly increasing,
/// in [0, length)).
struct Codeword {
    int length = 0;
    std::vector<int> marks;

    int weight() const { return static_cast<int>(marks.size()); }
    void validate() const;
};

bool operator==(const Codeword &a, const Codeword &b);

/// Cyclic correlation |{(i,j): a_i = b_j + shift (mod n)}|.
int correlate(const Codeword &a, const Codeword &b, int shift);

struct CodeFamily {
    int length = 0;
    int weight = 0;
    int lambda = 0; // bound on off-peak auto- and cross-correlation
    std::vector<Codeword> codewords;

    /// Exhaustive check of the correlation constraints over all shifts.
    bool verify() const;
};

/// Greedy backtracking construction over difference sets, lexicographic
/// candidate order (first mark fixed at 0). Stops at the Johnson bound
/// floor((n-1)/(w(w-1))) for lambda = 1, at max_codewords when given, or
/// when the search is exhausted.
CodeFamily generate(int n, int w, int lambda, int max_codewords = -1);

/// Unit-power rectangular chip at each mark, zero elsewhere; duration
/// n * chip_duration.
TransmitWaveform encode(const Codeword &c, double chip_duration, double bin_width);

/// Integrate-and-dump chip sampling followed by cyclic matched filtering;
/// returns the argmax shift in chips (earliest on ties).
int estimate_delay(const ImpulseResponse &received, const Codeword &c, double chip_duration,
                   double bin_width);

} // namespace irowc

#endif
