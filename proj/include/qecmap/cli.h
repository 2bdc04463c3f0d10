// Copyright 2026 The qecmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QECMAP_CLI_H
#define QECMAP_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qecmap/channel.h"

namespace qecmap {

/// Parsed channel literal: "diag:x,y,z", "pauli:pX,pY,pZ", "depol:gamma_t",
/// or a JSON array of 16 numbers (row-major transfer matrix).
struct ChannelLiteral {
    QubitChannel matrix;
    /// Set for the diagonal forms.
    std::optional<DiagonalChannel> diagonal;
    std::string text;
};

/// Diagonal forms are checked for complete positivity (CpViolation).
ChannelLiteral parse_channel_literal(const std::string &text);

/// "start:stop:step", inclusive of stop up to rounding.
std::vector<double> parse_grid(const std::string &text);

/// "0,1,2" or "0..4".
std::vector<size_t> parse_levels(const std::string &text);

/// Runs one invocation. args excludes the program name. Returns the exit
/// status: 0 success, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qecmap

#endif
