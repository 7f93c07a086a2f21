// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "irowc/geometry.hpp"

#include <stdexcept>

namespace irowc {

Vec3 Vec3::normalized() const
{
    double n = norm();
    if (n <= 0.0)
        throw std::invalid_argument("cannot normalize zero vector");
    return {x / n, y / n, z / n};
}

RoomModel RoomModel::box(double width, double length, double height,
                         double wall_reflectivity, double ceiling_reflectivity,
                         double floor_reflectivity)
{
    if (width <= 0.0 || length <= 0.0 || height <= 0.0)
        throw std::invalid_argument("room dimensions must be positive");
    for (double rho : {wall_reflectivity, ceiling_reflectivity, floor_reflectivity})
        if (rho < 0.0 || rho > 1.0)
            throw std::invalid_argument("reflectivity must lie in [0,1]");

    RoomModel r;
    r.width = width;
    r.length = length;
    r.height = height;

    const Vec3 ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};

    r.surfaces[0] = {Face::Floor, ez, {0, 0, 0}, ex, ey, width, length, floor_reflectivity};
    r.surfaces[1] = {Face::Ceiling, {0, 0, -1}, {0, 0, height}, ex, ey, width, length,
                     ceiling_reflectivity};
    r.surfaces[2] = {Face::WallXMin, ex, {0, 0, 0}, ey, ez, length, height, wall_reflectivity};
    r.surfaces[3] = {Face::WallXMax, {-1, 0, 0}, {width, 0, 0}, ey, ez, length, height,
                     wall_reflectivity};
    r.surfaces[4] = {Face::WallYMin, ey, {0, 0, 0}, ex, ez, width, height, wall_reflectivity};
    r.surfaces[5] = {Face::WallYMax, {0, -1, 0}, {0, length, 0}, ex, ez, width, height,
                     wall_reflectivity};
    return r;
}

RoomModel RoomModel::reference_room()
{
    return box(4.0, 8.0, 3.0, 0.8, 0.8, 0.3);
}

double RoomModel::interior_area() const
{
    double a = 0.0;
    for (const Surface &s : surfaces)
        a += s.area();
    return a;
}

std::vector<ReflectionElement> tessellate(const RoomModel &room, double element_side)
{
    if (!(element_side > 0.0))
        throw std::invalid_argument("element_side must be positive");
    if (element_side > room.min_dimension())
        throw std::invalid_argument("element_side exceeds the smallest room dimension");

    std::vector<ReflectionElement> elements;
    for (const Surface &s : room.surfaces) {
        const auto nu = static_cast<std::size_t>(std::ceil(s.u_len / element_side - 1e-12));
        const auto nv = static_cast<std::size_t>(std::ceil(s.v_len / element_side - 1e-12));
        for (std::size_t iv = 0; iv < nv; ++iv) {
            double v0 = static_cast<double>(iv) * element_side;
            double dv = std::min(element_side, s.v_len - v0);
            for (std::size_t iu = 0; iu < nu; ++iu) {
                double u0 = static_cast<double>(iu) * element_side;
                double du = std::min(element_side, s.u_len - u0);
                ReflectionElement e;
                e.centroid = s.origin + s.u_axis * (u0 + 0.5 * du) + s.v_axis * (v0 + 0.5 * dv);
                e.normal = s.normal;
                e.area = du * dv;
                e.reflectivity = s.reflectivity;
                elements.push_back(e);
            }
        }
    }
    return elements;
}

} // namespace irowc
