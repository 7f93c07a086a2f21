// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "irowc/ooc.hpp"

#include "irowc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace irowc {

void Codeword::validate() const
{
    if (length <= 0)
        throw std::invalid_argument("codeword length must be positive");
    if (marks.empty())
        throw std::invalid_argument("codeword must have at least one mark");
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (marks[i] < 0 || marks[i] >= length)
            throw std::invalid_argument("mark index out of range");
        if (i > 0 && marks[i] <= marks[i - 1])
            throw std::invalid_argument("marks must be strictly increasing");
    }
}

bool operator==(const Codeword &a, const Codeword &b)
{
    return a.length == b.length && a.marks == b.marks;
}

int correlate(const Codeword &a, const Codeword &b, int shift)
{
    if (a.length != b.length)
        throw std::invalid_argument("correlate: mismatched code lengths");
    if (shift < 0 || shift >= a.length)
        throw std::invalid_argument("correlate: shift out of range");
    int count = 0;
    for (int ai : a.marks)
        for (int bj : b.marks)
            if (ai == (bj + shift) % a.length)
                ++count;
    return count;
}

bool CodeFamily::verify() const
{
    for (std::size_t i = 0; i < codewords.size(); ++i) {
        const Codeword &a = codewords[i];
        if (a.length != length || a.weight() != weight)
            return false;
        if (correlate(a, a, 0) != weight)
            return false;
        for (int s = 1; s < length; ++s)
            if (correlate(a, a, s) > lambda)
                return false;
        for (std::size_t j = i + 1; j < codewords.size(); ++j)
            for (int s = 0; s < length; ++s)
                if (correlate(a, codewords[j], s) > lambda)
                    return false;
    }
    return true;
}

namespace {

/// Depth-first difference-set search. Codewords are canonicalized to start
/// at mark 0 and ordered by their second mark, which is complete for
/// lambda = 1 (two codewords of a lambda=1 family can never share both
/// mark 0 and the second mark).
class FamilySearch {
  public:
    FamilySearch(int n, int w, int lambda, int target)
        : n_(n), w_(w), lambda_(lambda), target_(target), auto_counts_(static_cast<size_t>(n), 0)
    {
        cand_.reserve(static_cast<std::size_t>(w));
    }

    std::vector<Codeword> run()
    {
        tryAddMark(0);
        searchMark(1, 1);
        return best_;
    }

  private:
    bool tryAddMark(int m)
    {
        // Check-and-increment one difference at a time so that coinciding
        // new differences (d from one pair equal to n-d' from another) are
        // caught, then roll back on failure.
        std::vector<std::size_t> bumped_auto;
        std::vector<std::pair<std::size_t, std::size_t>> bumped_cross;
        auto rollback = [&]() {
            for (std::size_t v : bumped_auto)
                --auto_counts_[v];
            for (auto [b, v] : bumped_cross)
                --cross_counts_[b][v];
        };

        for (int e : cand_) {
            int d = (m - e) % n_;
            for (int dir : {d, n_ - d}) {
                auto v = static_cast<std::size_t>(dir);
                if (auto_counts_[v] >= lambda_) {
                    rollback();
                    return false;
                }
                ++auto_counts_[v];
                bumped_auto.push_back(v);
            }
        }
        for (std::size_t b = 0; b < committed_.size(); ++b) {
            for (int q : committed_[b].marks) {
                auto v = static_cast<std::size_t>((m - q + n_) % n_);
                if (cross_counts_[b][v] >= lambda_) {
                    rollback();
                    return false;
                }
                ++cross_counts_[b][v];
                bumped_cross.emplace_back(b, v);
            }
        }
        cand_.push_back(m);
        return true;
    }

    void removeMark()
    {
        int m = cand_.back();
        cand_.pop_back();
        for (int e : cand_) {
            int d = (m - e) % n_;
            --auto_counts_[static_cast<std::size_t>(d)];
            --auto_counts_[static_cast<std::size_t>(n_ - d)];
        }
        for (std::size_t b = 0; b < committed_.size(); ++b)
            for (int q : committed_[b].marks)
                --cross_counts_[b][static_cast<std::size_t>((m - q + n_) % n_)];
    }

    // pos = number of marks already placed in the candidate
    bool searchMark(int pos, int min_mark)
    {
        if (pos == w_)
            return commitAndRecurse();
        if (budget_-- <= 0)
            return false;
        for (int m = min_mark; m <= n_ - (w_ - pos); ++m) {
            if (!tryAddMark(m))
                continue;
            if (searchMark(pos + 1, m + 1))
                return true;
            removeMark();
            if (budget_ <= 0)
                return false;
        }
        return false;
    }

    bool commitAndRecurse()
    {
        committed_.push_back(Codeword{n_, cand_});
        if (committed_.size() > best_.size())
            best_ = committed_;
        if (static_cast<int>(committed_.size()) >= target_)
            return true;

        // park the candidate's correlation state and open a fresh candidate
        saved_auto_.push_back(std::move(auto_counts_));
        saved_cross_.push_back(std::move(cross_counts_));
        saved_cand_.push_back(cand_);
        auto_counts_.assign(static_cast<std::size_t>(n_), 0);
        cross_counts_.assign(committed_.size(),
                             std::vector<std::uint16_t>(static_cast<std::size_t>(n_), 0));
        cand_.clear();
        tryAddMark(0);

        int next_min = saved_cand_.back()[1] + 1;
        bool done = searchMark(1, next_min);
        if (!done) {
            cand_ = std::move(saved_cand_.back());
            saved_cand_.pop_back();
            auto_counts_ = std::move(saved_auto_.back());
            saved_auto_.pop_back();
            cross_counts_ = std::move(saved_cross_.back());
            saved_cross_.pop_back();
            committed_.pop_back();
        }
        return done;
    }

    int n_, w_, lambda_, target_;
    std::vector<int> cand_;
    std::vector<Codeword> committed_;
    std::vector<Codeword> best_;
    std::vector<std::uint16_t> auto_counts_;
    std::vector<std::vector<std::uint16_t>> cross_counts_;
    std::vector<std::vector<std::uint16_t>> saved_auto_;
    std::vector<std::vector<std::vector<std::uint16_t>>> saved_cross_;
    std::vector<std::vector<int>> saved_cand_;
    long long budget_ = 50'000'000;
};

/// Complete search for w = 3, lambda = 1 in the difference domain. A
/// codeword {0, a, a+b} covers the three difference classes a, b and
/// cls(a+b) where cls(d) = min(d, n-d); a family is valid exactly when all
/// covered classes are distinct. Branching on the smallest open class
/// (cover it with some triple, or discard it when the skip budget allows)
/// keeps the search complete, so Johnson-bound families that require a
/// perfect packing, such as (73,3,1), are found.
class TripleCover {
  public:
    TripleCover(int n, int target) : n_(n), half_((n - 1) / 2), target_(target)
    {
        used_.assign(static_cast<std::size_t>(half_) + 1, false);
        skip_budget_ = half_ - 3 * target_;
    }

    std::vector<Codeword> run()
    {
        while (skip_budget_ < 0) {
            --target_;
            skip_budget_ = half_ - 3 * target_;
        }
        if (dfs(1))
            return blocks_;
        return best_;
    }

  private:
    int cls(int d) const { return d <= half_ ? d : n_ - d; }

    bool dfs(int from)
    {
        if (blocks_.size() > best_.size())
            best_ = blocks_;
        if (static_cast<int>(blocks_.size()) == target_)
            return true;
        if (budget_-- <= 0)
            return false;
        int d = from;
        while (d <= half_ && used_[static_cast<std::size_t>(d)])
            ++d;
        if (d > half_)
            return false;

        used_[static_cast<std::size_t>(d)] = true;
        for (int e = d + 1; e <= half_; ++e) {
            if (used_[static_cast<std::size_t>(e)] || d + e == n_)
                continue;
            int f = cls(d + e);
            if (f <= e || f > half_ || used_[static_cast<std::size_t>(f)])
                continue;
            used_[static_cast<std::size_t>(e)] = true;
            used_[static_cast<std::size_t>(f)] = true;
            blocks_.push_back(Codeword{n_, {0, d, d + e}});
            if (dfs(d + 1))
                return true;
            blocks_.pop_back();
            used_[static_cast<std::size_t>(e)] = false;
            used_[static_cast<std::size_t>(f)] = false;
        }
        if (skip_budget_ > 0) {
            --skip_budget_;
            if (dfs(d + 1))
                return true;
            ++skip_budget_;
        }
        used_[static_cast<std::size_t>(d)] = false;
        return false;
    }

    int n_, half_, target_;
    int skip_budget_ = 0;
    long long budget_ = 50'000'000;
    std::vector<bool> used_;
    std::vector<Codeword> blocks_;
    std::vector<Codeword> best_;
};

long long johnson_bound(int n, int w, int lambda)
{
    long long num = 1, den = 1;
    for (int i = 1; i <= lambda; ++i) {
        num *= n - i;
        den *= w - i;
    }
    den *= w;
    return num / den;
}

} // namespace

CodeFamily generate(int n, int w, int lambda, int max_codewords)
{
    if (w < 2 || lambda < 1 || lambda >= w)
        throw std::invalid_argument("generate: need w >= 2 and 1 <= lambda < w");
    if (static_cast<long long>(n) <= static_cast<long long>(w) * (w - 1) / lambda)
        throw std::invalid_argument("generate: infeasible parameters, n too small");

    long long bound = johnson_bound(n, w, lambda);
    int target = static_cast<int>(std::min<long long>(bound, n));
    if (max_codewords > 0)
        target = std::min(target, max_codewords);

    CodeFamily family;
    family.length = n;
    family.weight = w;
    family.lambda = lambda;
    if (w == 3 && lambda == 1) {
        TripleCover search(n, target);
        family.codewords = search.run();
    } else {
        FamilySearch search(n, w, lambda, target);
        family.codewords = search.run();
    }
    return family;
}

TransmitWaveform encode(const Codeword &c, double chip_duration, double bin_width)
{
    c.validate();
    double cpb_f = chip_duration / bin_width;
    auto cpb = static_cast<std::int64_t>(std::llround(cpb_f));
    if (cpb < 1 || std::abs(cpb_f - static_cast<double>(cpb)) > 1e-6)
        throw std::invalid_argument("chip_duration must be a whole multiple of the bin width");

    TransmitWaveform w;
    w.bin_width = bin_width;
    w.samples.assign(static_cast<std::size_t>(c.length) * static_cast<std::size_t>(cpb), 0.0);
    for (int m : c.marks)
        for (std::int64_t k = 0; k < cpb; ++k)
            w.samples[static_cast<std::size_t>(m * cpb + k)] = 1.0;
    return w;
}

int estimate_delay(const ImpulseResponse &received, const Codeword &c, double chip_duration,
                   double bin_width)
{
    c.validate();
    if (received.bin_width != bin_width)
        throw std::invalid_argument("estimate_delay: mismatched bin width");
    if (received.is_zero())
        throw no_signal_error("estimate_delay: all-zero received signal");

    double cpb_f = chip_duration / bin_width;
    auto cpb = static_cast<std::int64_t>(std::llround(cpb_f));
    if (cpb < 1 || std::abs(cpb_f - static_cast<double>(cpb)) > 1e-6)
        throw std::invalid_argument("chip_duration must be a whole multiple of the bin width");

    const int n = c.length;
    // integrate-and-dump per chip, folded onto one code period
    std::vector<double> chips(static_cast<std::size_t>(n), 0.0);
    for (std::size_t i = 0; i < received.gains.size(); ++i) {
        std::int64_t bin = received.start_bin + static_cast<std::int64_t>(i);
        std::int64_t chip = bin / cpb;
        chips[static_cast<std::size_t>(chip % n)] += received.gains[i];
    }

    int best_shift = 0;
    double best_corr = -1.0;
    for (int s = 0; s < n; ++s) {
        double corr = 0.0;
        for (int m : c.marks)
            corr += chips[static_cast<std::size_t>((m + s) % n)];
        if (corr > best_corr) {
            best_corr = corr;
            best_shift = s;
        }
    }
    return best_shift;
}

} // namespace irowc
