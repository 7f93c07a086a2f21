// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IROWC_RADIOMETRY_HPP
#define IROWC_RADIOMETRY_HPP

#include "irowc/geometry.hpp"

namespace irowc {

constexpr double kSpeedOfLight = 2.99792458e8; // m/s

/// Generalized-Lambertian point source.
struct Emitter {
    Vec3 position;
    Vec3 normal;
    double order = 1.0;          // Lambertian mode number n
    double optical_power = 1.0;  // watts; gains themselves are power-normalized
};

/// Flat photodetector with a field-of-view half-angle.
struct Detector {
    Vec3 position;
    Vec3 normal;
    double area = 1e-4;    // m^2
    double fov_deg = 90.0; // half-angle, (0, 90]
};

struct PathGain {
    double gain = 0.0;  // dimensionless channel DC gain of this path
    double delay = 0.0; // seconds
};

/// Mode number n = -ln 2 / ln cos(hps) for a half-power semiangle in degrees.
double lambertian_order(double half_power_semiangle_deg);

/// Single line-of-sight link budget between an emitter and a detector:
/// gain = (n+1)/(2 pi r^2) * cos^n(phi) * A * cos(theta), zero outside the
/// emission hemisphere or the detector FOV (boundary inclusive).
PathGain path_contribution(const Emitter &e, const Detector &d);

} // namespace irowc

#endif
