// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IROWC_CHANNEL_HPP
#define IROWC_CHANNEL_HPP

#include "irowc/geometry.hpp"
#include "irowc/impulse_response.hpp"
#include "irowc/radiometry.hpp"

#include <vector>

namespace irowc {

struct ChannelConfig {
    int max_bounces = 2;                 // 0, 1 or 2
    double element_side_bounce1 = 0.05;  // m, fine tessellation
    double element_side_bounce2 = 0.20;  // m, coarse tessellation for bounce pairs
    double bin_width = 1e-10;            // s

    void validate() const;
};

/// Multi-bounce Lambertian channel engine for one room and resolution.
/// Tessellations (and, when it fits in memory, the coarse element-to-element
/// transfer matrix) are computed once and reused across emitter/detector
/// queries.
class ChannelEngine {
  public:
    ChannelEngine(RoomModel room, ChannelConfig cfg);

    /// LOS plus first- and second-order diffuse reflections, binned.
    ImpulseResponse impulse_response(const Emitter &e, const Detector &d) const;

    const RoomModel &room() const { return room_; }
    const ChannelConfig &config() const { return cfg_; }

  private:
    RoomModel room_;
    ChannelConfig cfg_;
    std::vector<ReflectionElement> fine_;
    std::vector<ReflectionElement> coarse_;
    // Cached coarse pair transfer (gain, delay), row-major k1 * N + k2;
    // empty when the matrix would be too large, in which case pairs are
    // evaluated on the fly.
    std::vector<PathGain> coarse_transfer_;
    bool transfer_cached_ = false;
};

/// Convenience wrapper constructing a throwaway engine.
ImpulseResponse impulse_response(const Emitter &e, const Detector &d, const RoomModel &room,
                                 const ChannelConfig &cfg);

} // namespace irowc

#endif
