// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator

#include "irowc/channel.hpp"
#include "irowc/oracle.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace irowc;

namespace {

ImpulseResponse random_response(std::mt19937 &rng, std::size_t max_len = 40)
{
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<std::int64_t> start(0, 20);
    std::uniform_real_distribution<double> gain(0.0, 1.0);
    ImpulseResponse h;
    h.start_bin = start(rng);
    h.gains.resize(len(rng));
    for (double &g : h.gains)
        g = gain(rng);
    h.normalize();
    return h;
}

} // namespace

TEST_CASE("bin_accumulate basics")
{
    SUBCASE("floor binning: 0.25 ns at 0.1 ns bins lands in bin 2")
    {
        ImpulseResponse h = bin_accumulate({{1.0, 0.25e-9}}, 1e-10);
        CHECK(h.start_bin == 2);
        REQUIRE(h.gains.size() == 1);
        CHECK(h.gains[0] == 1.0);
    }

    SUBCASE("same-bin gains accumulate")
    {
        ImpulseResponse h = bin_accumulate({{1.0, 0.0}, {2.0, 0.05e-9}}, 1e-10);
        CHECK(h.start_bin == 0);
        REQUIRE(h.gains.size() == 1);
        CHECK(h.gains[0] == 3.0);
    }

    SUBCASE("empty list gives an all-zero response")
    {
        CHECK(bin_accumulate({}, 1e-10).is_zero());
    }

    SUBCASE("negative delay rejected")
    {
        CHECK_THROWS_AS(bin_accumulate({{1.0, -1e-10}}, 1e-10), std::invalid_argument);
    }
}

TEST_CASE("convolution")
{
    auto delta = [](std::int64_t bin, double gain) {
        ImpulseResponse h;
        h.start_bin = bin;
        h.gains = {gain};
        return h;
    };

    SUBCASE("delta at 2 (x) delta at 3 = delta at 5 with product gain")
    {
        ImpulseResponse c = convolve(delta(2, 0.5), delta(3, 4.0));
        CHECK(c.start_bin == 5);
        REQUIRE(c.gains.size() == 1);
        CHECK(c.gains[0] == 2.0);
    }

    SUBCASE("unit delta at 0 is the identity")
    {
        std::mt19937 rng(1);
        for (int i = 0; i < 50; ++i) {
            ImpulseResponse h = random_response(rng);
            CHECK(convolve(delta(0, 1.0), h) == h);
        }
    }

    SUBCASE("sum multiplies, commutative, associative")
    {
        std::mt19937 rng(2);
        for (int i = 0; i < 200; ++i) {
            ImpulseResponse a = random_response(rng);
            ImpulseResponse b = random_response(rng);
            ImpulseResponse c = random_response(rng);
            ImpulseResponse ab = convolve(a, b);
            CHECK(ab.sum() == doctest::Approx(a.sum() * b.sum()).epsilon(1e-12));

            ImpulseResponse ba = convolve(b, a);
            REQUIRE(ab.gains.size() == ba.gains.size());
            CHECK(ab.start_bin == ba.start_bin);
            for (std::size_t k = 0; k < ab.gains.size(); ++k)
                CHECK(ab.gains[k] == doctest::Approx(ba.gains[k]).epsilon(1e-12));

            ImpulseResponse l = convolve(ab, c);
            ImpulseResponse r = convolve(a, convolve(b, c));
            REQUIRE(l.gains.size() == r.gains.size());
            CHECK(l.start_bin == r.start_bin);
            for (std::size_t k = 0; k < l.gains.size(); ++k)
                CHECK(l.gains[k] == doctest::Approx(r.gains[k]).epsilon(1e-12));
        }
    }

    SUBCASE("mismatched bin widths rejected")
    {
        ImpulseResponse a = delta(0, 1.0), b = delta(0, 1.0);
        b.bin_width = 2e-10;
        CHECK_THROWS_AS(convolve(a, b), std::invalid_argument);
    }
}

TEST_CASE("LOS-only impulse response hits the analytic bin")
{
    RoomModel room = RoomModel::reference_room();
    ChannelConfig cfg;
    cfg.max_bounces = 0;

    Emitter e{{2, 4, 3}, {0, 0, -1}, 1.0, 1.0};
    Detector d{{2, 4, 1}, {0, 0, 1}, 1e-4, 90.0};
    ImpulseResponse h = impulse_response(e, d, room, cfg);
    REQUIRE(h.gains.size() == 1);
    CHECK(h.start_bin == 66); // 6.6713 ns at 0.1 ns bins
    CHECK(h.gains[0] == doctest::Approx(7.9577e-6).epsilon(1e-4));
}

TEST_CASE("facing-away endpoints give an all-zero LOS response")
{
    RoomModel room = RoomModel::reference_room();
    ChannelConfig cfg;
    cfg.max_bounces = 0;
    Emitter e{{2, 4, 2}, {0, 0, 1}, 1.0, 1.0};
    Detector d{{2, 2, 2}, {0, 0, 1}, 1e-4, 90.0};
    CHECK(impulse_response(e, d, room, cfg).is_zero());
}

TEST_CASE("positions outside the room are rejected")
{
    RoomModel room = RoomModel::reference_room();
    ChannelConfig cfg;
    Emitter e{{2, 4, 5}, {0, 0, -1}, 1.0, 1.0};
    Detector d{{2, 4, 1}, {0, 0, 1}, 1e-4, 90.0};
    CHECK_THROWS_AS(impulse_response(e, d, room, cfg), std::invalid_argument);
}

TEST_CASE("production engine matches the naive oracle")
{
    RoomModel room = RoomModel::reference_room();
    ChannelConfig cfg;
    cfg.element_side_bounce1 = 0.5;
    cfg.element_side_bounce2 = 0.5;

    Emitter e{{2, 4, 3}, {0, 0, -1}, 1.0, 1.0};
    Detector d{{1, 1, 1}, {0, 0, 1}, 1e-4, 90.0};

    for (int bounces : {0, 1, 2}) {
        cfg.max_bounces = bounces;
        ImpulseResponse got = impulse_response(e, d, room, cfg);
        ImpulseResponse want = oracle_impulse_response(e, d, room, cfg);
        REQUIRE(got.gains.size() == want.gains.size());
        CHECK(got.start_bin == want.start_bin);
        for (std::size_t k = 0; k < got.gains.size(); ++k) {
            if (want.gains[k] == 0.0)
                CHECK(got.gains[k] == 0.0);
            else
                CHECK(got.gains[k] == doctest::Approx(want.gains[k]).epsilon(1e-9));
        }
    }
}

TEST_CASE("total gain grows with bounce order and refinement converges")
{
    RoomModel room = RoomModel::reference_room();
    Emitter e{{2, 4, 3}, {0, 0, -1}, 1.0, 1.0};
    Detector d{{1, 2, 1}, {0, 0, 1}, 1e-4, 90.0};

    SUBCASE("sum of gains monotone in max_bounces")
    {
        double prev = -1.0;
        for (int bounces : {0, 1, 2}) {
            ChannelConfig cfg;
            cfg.max_bounces = bounces;
            cfg.element_side_bounce1 = 0.4;
            cfg.element_side_bounce2 = 0.8;
            double s = impulse_response(e, d, room, cfg).sum();
            CHECK(s >= prev);
            prev = s;
        }
    }

    SUBCASE("Cauchy refinement of the bounce-1 tessellation")
    {
        double diffs[2];
        double sums[3];
        double side = 1.0;
        for (int i = 0; i < 3; ++i, side /= 2.0) {
            ChannelConfig cfg;
            cfg.max_bounces = 1;
            cfg.element_side_bounce1 = side;
            sums[i] = impulse_response(e, d, room, cfg).sum();
        }
        diffs[0] = std::abs(sums[1] - sums[0]);
        diffs[1] = std::abs(sums[2] - sums[1]);
        CHECK(diffs[1] < diffs[0]);
    }
}
