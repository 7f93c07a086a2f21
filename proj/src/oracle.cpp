// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "irowc/oracle.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace irowc {

namespace {

// Independent re-derivation of the generalized-Lambertian link gain. Written
// from the closed formula, not shared with radiometry::path_contribution.
struct Hop {
    double gain;
    double delay;
};

Hop hop(const Vec3 &src_pos, const Vec3 &src_normal, double order, const Vec3 &dst_pos,
        const Vec3 &dst_normal, double dst_area, double dst_fov_deg)
{
    const double dx = dst_pos.x - src_pos.x;
    const double dy = dst_pos.y - src_pos.y;
    const double dz = dst_pos.z - src_pos.z;
    const double r2 = dx * dx + dy * dy + dz * dz;
    const double r = std::sqrt(r2);
    if (r == 0.0)
        throw std::invalid_argument("oracle: coincident endpoints");

    const double cphi = (src_normal.x * dx + src_normal.y * dy + src_normal.z * dz) / r;
    const double ctheta = -(dst_normal.x * dx + dst_normal.y * dy + dst_normal.z * dz) / r;
    const double delay = r / kSpeedOfLight;
    if (cphi <= 0.0 || ctheta <= 0.0)
        return {0.0, delay};

    const double theta = std::acos(std::min(1.0, std::max(-1.0, ctheta)));
    const double fov = dst_fov_deg / 180.0 * std::numbers::pi;
    if (theta > fov * (1.0 + 1e-12) + 1e-12)
        return {0.0, delay};

    const double g =
        (order + 1.0) * std::pow(cphi, order) / (2.0 * std::numbers::pi * r2) * ctheta * dst_area;
    return {g, delay};
}

} // namespace

ImpulseResponse oracle_impulse_response(const Emitter &e, const Detector &d,
                                        const RoomModel &room, const ChannelConfig &cfg)
{
    cfg.validate();
    if (!room.contains(e.position) || !room.contains(d.position))
        throw std::invalid_argument("oracle: position outside the room");

    std::map<std::int64_t, double> bins;
    auto deposit = [&](double gain, double delay) {
        if (gain > 0.0)
            bins[static_cast<std::int64_t>(std::floor(delay / cfg.bin_width))] += gain;
    };

    Hop los = hop(e.position, e.normal, e.order, d.position, d.normal, d.area, d.fov_deg);
    deposit(los.gain, los.delay);

    if (cfg.max_bounces >= 1) {
        for (const ReflectionElement &k : tessellate(room, cfg.element_side_bounce1)) {
            Hop a = hop(e.position, e.normal, e.order, k.centroid, k.normal, k.area, 90.0);
            Hop b = hop(k.centroid, k.normal, 1.0, d.position, d.normal, d.area, d.fov_deg);
            deposit(a.gain * k.reflectivity * b.gain, a.delay + b.delay);
        }
    }

    if (cfg.max_bounces >= 2) {
        const auto elems = tessellate(room, cfg.element_side_bounce2);
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const ReflectionElement &k1 = elems[i];
            Hop a = hop(e.position, e.normal, e.order, k1.centroid, k1.normal, k1.area, 90.0);
            if (a.gain == 0.0)
                continue;
            for (std::size_t j = 0; j < elems.size(); ++j) {
                if (j == i)
                    continue;
                const ReflectionElement &k2 = elems[j];
                Hop m = hop(k1.centroid, k1.normal, 1.0, k2.centroid, k2.normal, k2.area, 90.0);
                Hop b = hop(k2.centroid, k2.normal, 1.0, d.position, d.normal, d.area, d.fov_deg);
                deposit(a.gain * k1.reflectivity * m.gain * k2.reflectivity * b.gain,
                        a.delay + m.delay + b.delay);
            }
        }
    }

    ImpulseResponse h;
    h.bin_width = cfg.bin_width;
    if (!bins.empty()) {
        h.start_bin = bins.begin()->first;
        h.gains.assign(static_cast<std::size_t>(bins.rbegin()->first - h.start_bin + 1), 0.0);
        for (const auto &[bin, g] : bins)
            h.gains[static_cast<std::size_t>(bin - h.start_bin)] = g;
    }
    h.normalize();
    return h;
}

} // namespace irowc
