// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "irowc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace irowc {

namespace {

constexpr std::size_t kMaxCachedPairs = 4'000'000;

Detector element_as_detector(const ReflectionElement &el)
{
    return Detector{el.centroid, el.normal, el.area, 90.0};
}

Emitter element_as_emitter(const ReflectionElement &el)
{
    // Reflection elements re-emit as ideal diffuse (order 1) sources.
    return Emitter{el.centroid, el.normal, 1.0, 0.0};
}

struct BinAccumulator {
    double bin_width;
    std::vector<double> bins;

    void addPath(double gain, double delay)
    {
        if (gain <= 0.0)
            return;
        auto bin = static_cast<std::size_t>(std::floor(delay / bin_width));
        if (bin >= bins.size())
            bins.resize(bin + 1, 0.0);
        bins[bin] += gain;
    }

    ImpulseResponse take()
    {
        ImpulseResponse h;
        h.bin_width = bin_width;
        h.gains = std::move(bins);
        h.normalize();
        return h;
    }
};

} // namespace

void ChannelConfig::validate() const
{
    if (max_bounces < 0 || max_bounces > 2)
        throw std::invalid_argument("max_bounces must be 0, 1 or 2");
    if (!(element_side_bounce1 > 0.0) || !(element_side_bounce2 > 0.0))
        throw std::invalid_argument("element sides must be positive");
    if (!(bin_width > 0.0))
        throw std::invalid_argument("bin_width must be positive");
}

ChannelEngine::ChannelEngine(RoomModel room, ChannelConfig cfg)
    : room_(std::move(room)), cfg_(cfg)
{
    cfg_.validate();
    if (cfg_.max_bounces >= 1)
        fine_ = tessellate(room_, cfg_.element_side_bounce1);
    if (cfg_.max_bounces >= 2) {
        coarse_ = tessellate(room_, cfg_.element_side_bounce2);
        const std::size_t n = coarse_.size();
        if (n * n <= kMaxCachedPairs) {
            coarse_transfer_.resize(n * n);
            for (std::size_t i = 0; i < n; ++i) {
                const Emitter ei = element_as_emitter(coarse_[i]);
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j)
                        continue;
                    coarse_transfer_[i * n + j] = path_contribution(ei, element_as_detector(coarse_[j]));
                }
            }
            transfer_cached_ = true;
        }
    }
}

ImpulseResponse ChannelEngine::impulse_response(const Emitter &e, const Detector &d) const
{
    if (!room_.contains(e.position) || !room_.contains(d.position))
        throw std::invalid_argument("emitter/detector position outside the room");

    BinAccumulator acc{cfg_.bin_width, {}};

    // LOS
    {
        PathGain los = path_contribution(e, d);
        acc.addPath(los.gain, los.delay);
    }

    if (cfg_.max_bounces >= 1) {
        for (const ReflectionElement &el : fine_) {
            PathGain in = path_contribution(e, element_as_detector(el));
            if (in.gain <= 0.0)
                continue;
            PathGain out = path_contribution(element_as_emitter(el), d);
            if (out.gain <= 0.0)
                continue;
            acc.addPath(in.gain * el.reflectivity * out.gain, in.delay + out.delay);
        }
    }

    if (cfg_.max_bounces >= 2) {
        const std::size_t n = coarse_.size();
        std::vector<PathGain> in(n), out(n);
        for (std::size_t k = 0; k < n; ++k) {
            in[k] = path_contribution(e, element_as_detector(coarse_[k]));
            out[k] = path_contribution(element_as_emitter(coarse_[k]), d);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (in[i].gain <= 0.0)
                continue;
            const double gi = in[i].gain * coarse_[i].reflectivity;
            const Emitter ei = element_as_emitter(coarse_[i]);
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || out[j].gain <= 0.0)
                    continue;
                PathGain mid = transfer_cached_
                                   ? coarse_transfer_[i * n + j]
                                   : path_contribution(ei, element_as_detector(coarse_[j]));
                if (mid.gain <= 0.0)
                    continue;
                acc.addPath(gi * mid.gain * coarse_[j].reflectivity * out[j].gain,
                            in[i].delay + mid.delay + out[j].delay);
            }
        }
    }

    return acc.take();
}

ImpulseResponse impulse_response(const Emitter &e, const Detector &d, const RoomModel &room,
                                 const ChannelConfig &cfg)
{
    return ChannelEngine(room, cfg).impulse_response(e, d);
}

} // namespace irowc
