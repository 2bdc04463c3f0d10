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

#ifndef QECMAP_CODING_MAP_H
#define QECMAP_CODING_MAP_H

#include <span>
#include <string>

#include "qecmap/channel.h"
#include "qecmap/kernels/kernels.h"
#include "qecmap/polymap.h"
#include "qecmap/stabilizer_code.h"

namespace qecmap {

enum class ComputationPath { Generic, Symbolic };

struct EffectiveChannelResult {
    QubitChannel g;
    std::string code_name;
    std::string input_description;
    ComputationPath path = ComputationPath::Generic;
};

/// G = D o N^{(x)n} o E for an arbitrary single-qubit channel acting
/// identically on every physical qubit.
QubitChannel effective_channel_general(
    const StabilizerCode &code, const QubitChannel &n1, const kernels::KernelSet &k = kernels::active());

/// Site-dependent noise: per_site[i] acts on physical qubit i.
QubitChannel effective_channel_general(
    const StabilizerCode &code,
    std::span<const QubitChannel> per_site,
    const kernels::KernelSet &k = kernels::active());

/// Concatenated codes: the innermost layer is applied first and its effective
/// channel becomes the physical channel of the next layer out.
EffectiveChannelResult effective_channel_general(
    const ConcatenatedCode &code, const QubitChannel &n1, const std::string &input_description = "");

/// Exact coding map of a stabilizer code on diagonal channels.
PolyMap diagonal_poly_map(const StabilizerCode &code);
/// Composition of the layer maps, outermost first.
PolyMap diagonal_poly_map(const ConcatenatedCode &code, size_t term_cap = kDefaultTermCap);

/// {"x": [{"e": [a,b,c], "num": n, "log2den": d}, ...], "y": [...], "z": [...]}
std::string polymap_to_json(const PolyMap &m);
PolyMap polymap_from_json(const std::string &text);

}  // namespace qecmap

#endif
