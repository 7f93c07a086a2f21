// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IROWC_GEOMETRY_HPP
#define IROWC_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace irowc {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const;
};

inline bool operator==(const Vec3 &a, const Vec3 &b)
{
    return a.x == b.x && a.y == b.y && a.z == b.z;
}

/// The six faces of the room box, in the fixed enumeration order used by
/// the tessellation.
enum class Face : int {
    Floor = 0,   // z = 0
    Ceiling = 1, // z = height
    WallXMin = 2,
    WallXMax = 3,
    WallYMin = 4,
    WallYMax = 5,
};

/// One reflecting face of the room. The in-plane frame (origin, u_axis,
/// v_axis) spans the rectangle; the normal points into the room.
struct Surface {
    Face face = Face::Floor;
    Vec3 normal;
    Vec3 origin;
    Vec3 u_axis;
    Vec3 v_axis;
    double u_len = 0.0;
    double v_len = 0.0;
    double reflectivity = 0.0;

    double area() const { return u_len * v_len; }
};

/// Rectangular empty room. Coordinate convention: x in [0, width],
/// y in [0, length], z in [0, height].
struct RoomModel {
    double width = 4.0;  // x extent
    double length = 8.0; // y extent
    double height = 3.0; // z extent
    std::array<Surface, 6> surfaces;

    static RoomModel box(double width, double length, double height,
                         double wall_reflectivity, double ceiling_reflectivity,
                         double floor_reflectivity);

    /// 8 m x 4 m x 3 m plaster room, walls/ceiling 0.8, floor 0.3.
    static RoomModel reference_room();

    double min_dimension() const { return std::min({width, length, height}); }
    bool contains(const Vec3 &p) const
    {
        return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= length &&
               p.z >= 0.0 && p.z <= height;
    }
    double interior_area() const;
};

/// Square (edge-clipped rectangular) patch of a room surface, re-emitting
/// received light as an ideal diffuse source.
struct ReflectionElement {
    Vec3 centroid;
    Vec3 normal;
    double area = 0.0;
    double reflectivity = 0.0;
};

/// Splits every surface into a grid of element_side squares (row-major per
/// surface, surfaces in Face order). Trailing cells are clipped so the grid
/// covers each face exactly.
std::vector<ReflectionElement> tessellate(const RoomModel &room, double element_side);

} // namespace irowc

#endif
