// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "irowc/delay_adaptation.hpp"

#include "irowc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irowc {

double DelayAssignment::delay_for(int id) const
{
    for (const auto &[rid, d] : delays)
        if (rid == id)
            return d;
    throw std::invalid_argument("no delay assigned for relay id " + std::to_string(id));
}

double reference_time(const ImpulseResponse &h, const ReferenceCriterion &c)
{
    if (h.is_zero())
        throw no_signal_error("reference time undefined: all-zero response");
    if (c.kind == ReferenceKind::Peak)
        return static_cast<double>(h.peak_bin()) * h.bin_width;

    if (!(c.threshold_fraction > 0.0) || c.threshold_fraction > 1.0)
        throw std::invalid_argument("threshold_fraction must lie in (0,1]");
    const double level = c.threshold_fraction * h.peak();
    for (std::size_t i = 0; i < h.gains.size(); ++i)
        if (h.gains[i] >= level)
            return static_cast<double>(h.start_bin + static_cast<std::int64_t>(i)) * h.bin_width;
    return static_cast<double>(h.peak_bin()) * h.bin_width; // unreachable
}

DelayAssignment differential_delays(const std::vector<std::pair<int, double>> &reference_times,
                                    double bin_width)
{
    if (reference_times.empty())
        throw std::invalid_argument("differential_delays: no reference times");
    if (!(bin_width > 0.0))
        throw std::invalid_argument("differential_delays: bin_width must be positive");

    double latest = reference_times.front().second;
    for (const auto &[id, t] : reference_times)
        latest = std::max(latest, t);

    DelayAssignment a;
    for (const auto &[id, t] : reference_times) {
        // round to nearest bin, ties up
        auto bins = static_cast<std::int64_t>(std::floor((latest - t) / bin_width + 0.5));
        a.delays.emplace_back(id, static_cast<double>(bins) * bin_width);
    }
    return a;
}

std::vector<ProbeMeasurement> simulate_sequential_probe(const std::vector<RelayComposite> &relays,
                                                        const ProbeProtocolConfig &cfg,
                                                        const ReferenceCriterion &c)
{
    if (relays.empty())
        throw std::invalid_argument("sequential probe: no relays");
    const double dt = relays.front().composite.bin_width;
    auto slot_bins = static_cast<std::int64_t>(std::llround(cfg.slot_interval / dt));

    std::int64_t memory = 0;
    for (const auto &r : relays) {
        if (r.composite.bin_width != dt)
            throw std::invalid_argument("sequential probe: mismatched bin widths");
        memory = std::max(memory, r.composite.end_bin());
    }
    if (slot_bins <= memory)
        throw probe_overlap_error("probe slot interval shorter than the channel memory");

    // superposed timeline: probe k occupies slot k in list order
    ImpulseResponse timeline;
    timeline.bin_width = dt;
    for (std::size_t k = 0; k < relays.size(); ++k)
        timeline = add(timeline, shift(relays[k].composite, static_cast<std::int64_t>(k) * slot_bins));

    std::vector<ProbeMeasurement> out;
    for (std::size_t k = 0; k < relays.size(); ++k) {
        ProbeMeasurement m;
        m.id = relays[k].id;
        const std::int64_t lo = static_cast<std::int64_t>(k) * slot_bins;
        ImpulseResponse window;
        window.bin_width = dt;
        window.start_bin = std::max<std::int64_t>(timeline.start_bin - lo, 0);
        for (std::int64_t b = std::max(lo, timeline.start_bin);
             b < std::min(lo + slot_bins, timeline.end_bin()); ++b)
            window.gains.push_back(timeline.at_bin(b));
        window.normalize();
        if (!window.is_zero()) {
            m.reachable = true;
            m.t_ref = reference_time(window, c);
        }
        out.push_back(m);
    }
    return out;
}

std::vector<ProbeMeasurement> simulate_ooc_probe(const std::vector<RelayComposite> &relays,
                                                 const std::vector<Codeword> &codes,
                                                 const ProbeProtocolConfig &cfg)
{
    if (relays.empty())
        throw std::invalid_argument("ooc probe: no relays");
    if (codes.size() != relays.size())
        throw std::invalid_argument("ooc probe: need one codeword per relay");
    for (std::size_t i = 0; i < codes.size(); ++i)
        for (std::size_t j = i + 1; j < codes.size(); ++j)
            if (codes[i] == codes[j])
                throw std::invalid_argument("ooc probe: duplicate codewords");

    const double dt = relays.front().composite.bin_width;
    ImpulseResponse superposed;
    superposed.bin_width = dt;
    for (std::size_t k = 0; k < relays.size(); ++k) {
        if (relays[k].composite.bin_width != dt)
            throw std::invalid_argument("ooc probe: mismatched bin widths");
        TransmitWaveform x = encode(codes[k], cfg.chip_duration, dt);
        ImpulseResponse xr;
        xr.bin_width = dt;
        xr.gains = x.samples;
        xr.normalize();
        superposed = add(superposed, convolve(xr, relays[k].composite));
    }

    std::vector<ProbeMeasurement> out;
    for (std::size_t k = 0; k < relays.size(); ++k) {
        ProbeMeasurement m;
        m.id = relays[k].id;
        if (!relays[k].composite.is_zero()) {
            m.reachable = true;
            int chips = estimate_delay(superposed, codes[k], cfg.chip_duration, dt);
            m.t_ref = static_cast<double>(chips) * cfg.chip_duration;
        }
        out.push_back(m);
    }
    return out;
}

namespace {

/// OOC parameters for the synthetic probe regime: the weight is chosen as
/// relay count + 1 so the correlation peak (= w) strictly exceeds the
/// worst-case multi-access interference (lambda_a + (M-1) lambda_c with
/// lambda = 1), and the length grows until the family is large enough and
/// one period covers the latest reference bin (no cyclic ambiguity).
CodeFamily synthetic_family(int relay_count, std::int64_t max_ref_bin, int min_length)
{
    const int w = relay_count <= 2 ? 3 : relay_count + 1;
    long long n = std::max<long long>(
        {static_cast<long long>(w) * (w - 1) * relay_count * 4 + 1, max_ref_bin + 1, min_length});
    for (int attempt = 0; attempt < 64; ++attempt) {
        CodeFamily fam = generate(static_cast<int>(n), w, 1, relay_count);
        if (static_cast<int>(fam.codewords.size()) >= relay_count)
            return fam;
        n = n * 5 / 4 + 1;
    }
    throw std::runtime_error("failed to construct an OOC family for the probe");
}

} // namespace

DelayAssignment adapt(const std::vector<RelayComposite> &relays, AdaptationMethod method,
                      const ReferenceCriterion &c, const ProbeProtocolConfig &cfg)
{
    if (relays.empty())
        throw std::invalid_argument("adapt: no relays");
    const double dt = relays.front().composite.bin_width;

    std::vector<std::pair<int, double>> refs;

    switch (method) {
    case AdaptationMethod::Direct: {
        for (const auto &r : relays) {
            if (r.composite.is_zero())
                continue;
            refs.emplace_back(r.id, reference_time(r.composite, c));
        }
        break;
    }
    case AdaptationMethod::Sequential: {
        // widen the slot automatically when the configured one cannot hold
        // the channel memory
        std::int64_t memory = 0;
        for (const auto &r : relays)
            memory = std::max(memory, r.composite.end_bin());
        ProbeProtocolConfig eff = cfg;
        eff.slot_interval = std::max(cfg.slot_interval, static_cast<double>(memory + 1) * dt);
        for (const auto &m : simulate_sequential_probe(relays, eff, c))
            if (m.reachable)
                refs.emplace_back(m.id, m.t_ref);
        break;
    }
    case AdaptationMethod::Ooc: {
        // synthetic integer-chip regime: unit-gain delta channels at each
        // relay's reference bin, one chip per bin
        std::vector<RelayComposite> synthetic;
        std::int64_t max_bin = 0;
        for (const auto &r : relays) {
            if (r.composite.is_zero())
                continue;
            auto bin = static_cast<std::int64_t>(std::llround(reference_time(r.composite, c) / dt));
            ImpulseResponse delta;
            delta.bin_width = dt;
            delta.start_bin = bin;
            delta.gains = {1.0};
            synthetic.push_back({r.id, std::move(delta)});
            max_bin = std::max(max_bin, bin);
        }
        if (synthetic.empty())
            throw no_signal_error("adapt: no reachable relays");
        CodeFamily fam =
            synthetic_family(static_cast<int>(synthetic.size()), max_bin, cfg.code_length);
        std::vector<Codeword> codes(fam.codewords.begin(),
                                    fam.codewords.begin() + static_cast<std::ptrdiff_t>(synthetic.size()));
        ProbeProtocolConfig eff = cfg;
        eff.chip_duration = dt;
        for (const auto &m : simulate_ooc_probe(synthetic, codes, eff))
            if (m.reachable)
                refs.emplace_back(m.id, m.t_ref);
        break;
    }
    }

    if (refs.empty())
        throw no_signal_error("adapt: no reachable relays");
    return differential_delays(refs, dt);
}

} // namespace irowc
