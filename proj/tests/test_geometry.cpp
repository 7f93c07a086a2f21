// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator

#include "irowc/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace irowc;

TEST_CASE("reference room has the expected faces and reflectivities")
{
    RoomModel room = RoomModel::reference_room();
    CHECK(room.width == 4.0);
    CHECK(room.length == 8.0);
    CHECK(room.height == 3.0);
    CHECK(room.interior_area() == doctest::Approx(136.0));

    CHECK(room.surfaces[0].reflectivity == 0.3); // floor
    CHECK(room.surfaces[1].reflectivity == 0.8); // ceiling
    for (int i = 2; i < 6; ++i)
        CHECK(room.surfaces[i].reflectivity == 0.8);

    // normals are unit and point into the box
    for (const Surface &s : room.surfaces) {
        CHECK(s.normal.norm() == doctest::Approx(1.0));
        Vec3 inside = s.origin + s.u_axis * (0.5 * s.u_len) + s.v_axis * (0.5 * s.v_len) +
                      s.normal * 0.1;
        CHECK(room.contains(inside));
    }
}

TEST_CASE("tessellation element counts")
{
    RoomModel room = RoomModel::reference_room();

    SUBCASE("one 8m x 3m wall at 0.05 m gives 160 x 60 elements")
    {
        RoomModel r = room;
        auto elems = tessellate(r, 0.05);
        int wall_count = 0;
        for (const auto &e : elems)
            if (e.centroid.x == 0.0)
                ++wall_count;
        CHECK(wall_count == 160 * 60);
    }

    SUBCASE("full room at 0.05 m gives 54400 elements")
    {
        CHECK(tessellate(room, 0.05).size() == 54400);
    }

    SUBCASE("full room at 0.20 m gives 3400 elements")
    {
        CHECK(tessellate(room, 0.20).size() == 3400);
    }
}

TEST_CASE("tessellation invariants")
{
    RoomModel room = RoomModel::reference_room();

    SUBCASE("element areas sum to the interior surface area, exactly when divisible")
    {
        double sum = 0.0;
        for (const auto &e : tessellate(room, 0.5))
            sum += e.area;
        CHECK(sum == doctest::Approx(136.0).epsilon(1e-12));
    }

    SUBCASE("clipped tessellation still covers the interior area")
    {
        double sum = 0.0;
        for (const auto &e : tessellate(room, 0.3))
            sum += e.area;
        CHECK(sum == doctest::Approx(136.0).epsilon(1e-9));
    }

    SUBCASE("every centroid lies on its parent face")
    {
        for (const auto &e : tessellate(room, 0.7)) {
            bool on_face = e.centroid.x == 0.0 || e.centroid.x == room.width ||
                           e.centroid.y == 0.0 || e.centroid.y == room.length ||
                           e.centroid.z == 0.0 || e.centroid.z == room.height;
            CHECK(on_face);
            CHECK(room.contains(e.centroid));
        }
    }

    SUBCASE("deterministic ordering")
    {
        auto a = tessellate(room, 0.3);
        auto b = tessellate(room, 0.3);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].centroid == b[i].centroid);
            CHECK(a[i].area == b[i].area);
        }
    }
}

TEST_CASE("tessellation rejects bad element sides")
{
    RoomModel room = RoomModel::reference_room();
    CHECK_THROWS_AS(tessellate(room, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tessellate(room, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(tessellate(room, 3.5), std::invalid_argument); // > min dimension
}
