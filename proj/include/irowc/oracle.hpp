// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IROWC_ORACLE_HPP
#define IROWC_ORACLE_HPP

#include "irowc/channel.hpp"

namespace irowc {

/// Naive reference channel engine used to cross-check ChannelEngine. It
/// re-derives the Lambertian link budget from first principles and runs the
/// plain triple loop with no precomputation or caching. Deliberately kept
/// separate from the production path; keep it dumb.
ImpulseResponse oracle_impulse_response(const Emitter &e, const Detector &d,
                                        const RoomModel &room, const ChannelConfig &cfg);

} // namespace irowc

#endif
