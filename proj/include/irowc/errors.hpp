// SPDX-License-Identifier: Apache-2.0
//
// irowc-sim — indoor infrared optical wireless relay channel simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IROWC_ERRORS_HPP
#define IROWC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irowc {

/// Raised when a channel or signal carries no power where one is required
/// (unreachable relay, all-zero statistic input).
class no_signal_error : public std::runtime_error {
  public:
    explicit no_signal_error(const std::string &what) : std::runtime_error(what) {}
};

/// Raised when sequential probe slots are shorter than the channel memory.
class probe_overlap_error : public std::runtime_error {
  public:
    explicit probe_overlap_error(const std::string &what) : std::runtime_error(what) {}
};

} // namespace irowc

#endif
