// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "irowc/radiometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irowc {

double lambertian_order(double half_power_semiangle_deg)
{
    if (!(half_power_semiangle_deg > 0.0) || !(half_power_semiangle_deg < 90.0))
        throw std::invalid_argument("half-power semiangle must lie in (0, 90) degrees");
    double c = std::cos(half_power_semiangle_deg * std::numbers::pi / 180.0);
    return -std::log(2.0) / std::log(c);
}

PathGain path_contribution(const Emitter &e, const Detector &d)
{
    const Vec3 sep = d.position - e.position;
    const double r = sep.norm();
    if (r <= 0.0)
        throw std::invalid_argument("emitter and detector positions coincide");

    const double cos_phi = e.normal.dot(sep) / r;
    const double cos_theta = d.normal.dot(e.position - d.position) / r;

    PathGain out;
    out.delay = r / kSpeedOfLight;
    if (cos_phi <= 0.0 || cos_theta <= 0.0)
        return out;

    // FOV cutoff, boundary inclusive.
    const double theta = std::acos(std::clamp(cos_theta, -1.0, 1.0));
    const double fov = d.fov_deg * std::numbers::pi / 180.0;
    if (theta > fov * (1.0 + 1e-12) + 1e-12)
        return out;

    const double n = e.order;
    out.gain = (n + 1.0) / (2.0 * std::numbers::pi * r * r) * std::pow(cos_phi, n) *
               d.area * cos_theta;
    return out;
}

} // namespace irowc
