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

#ifndef QECMAP_STABILIZER_CODE_H
#define QECMAP_STABILIZER_CODE_H

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qecmap/dyadic.h"
#include "qecmap/pauli.h"

namespace qecmap {

/// Invalid stabilizer code or code specification.
struct CodeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Pauli-basis expansion sum_m c_m * m of an n-qubit operator.
class PauliExpansion {
   public:
    const std::map<PauliString, Dyadic> &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    Dyadic coefficient(const PauliString &p) const;
    void add(const PauliString &p, const Dyadic &c);

    bool operator==(const PauliExpansion &other) const = default;

   private:
    std::map<PauliString, Dyadic> terms_;
};

/// Syndrome bit k is 1 iff the operator anticommutes with generator k.
using Syndrome = uint64_t;

/// "10" style text: character k is syndrome bit k.
std::string syndrome_str(Syndrome s, size_t num_generators);
Syndrome parse_syndrome(const std::string &text, size_t num_generators);

struct MinWeightPolicy {};
using ExplicitRecoveries = std::vector<std::pair<std::string, std::string>>;
using RecoveryPolicy = std::variant<MinWeightPolicy, ExplicitRecoveries>;

/// Recovery operator for every syndrome.
class SyndromeTable {
   public:
    SyndromeTable() = default;
    explicit SyndromeTable(std::vector<SignedPauli> by_syndrome) : table_(std::move(by_syndrome)) {
    }

    const SignedPauli &operator[](Syndrome s) const {
        return table_.at(s);
    }
    size_t size() const {
        return table_.size();
    }
    const std::vector<SignedPauli> &entries() const {
        return table_;
    }

   private:
    std::vector<SignedPauli> table_;
};

Syndrome syndrome_of(const PauliString &error, const std::vector<SignedPauli> &generators);

/// Builds the recovery table. For MinWeightPolicy each syndrome receives the
/// lowest-weight Pauli, ties broken by fewest Y letters and then by the
/// smallest (x_mask, z_mask) pair. Explicit entries are checked against their
/// claimed syndrome and for totality.
SyndromeTable build_recovery(const std::vector<SignedPauli> &generators, const RecoveryPolicy &policy);

/// Flattened pairing of the E and D expansions used by the generic
/// effective-channel evaluation. For block (s, t) and pair p:
///   G[s][t] += coef[p] * prod_i N_i[letter_d][letter_e]
/// with idx[i * count + p] = 16*i + 4*letter_d + letter_e.
struct ExpansionPairs {
    struct Block {
        std::vector<double> coef;
        std::vector<int32_t> idx;
    };
    std::array<std::array<Block, 4>, 4> blocks;
};

/// Validated stabilizer code encoding one logical qubit in n physical qubits.
/// Immutable after construction; all derived data (stabilizer group, recovery
/// table, E/D expansions) is computed by load_code.
class StabilizerCode {
   public:
    const std::string &name() const {
        return name_;
    }
    size_t n() const {
        return n_;
    }
    const std::vector<SignedPauli> &generators() const {
        return generators_;
    }
    const SignedPauli &logical_x() const {
        return logical_x_;
    }
    const SignedPauli &logical_y() const {
        return logical_y_;
    }
    const SignedPauli &logical_z() const {
        return logical_z_;
    }
    /// Logical operator for I, X, Y, Z (index 0..3).
    const SignedPauli &logical(size_t sigma) const;

    /// All 2^(n-1) stabilizer elements; element k is the product of the
    /// generators whose bit is set in k.
    const std::vector<SignedPauli> &stabilizer_group() const {
        return group_;
    }
    const SyndromeTable &recovery() const {
        return recovery_;
    }

    /// E_sigma for sigma in I,X,Y,Z (index 0..3), plain Pauli basis.
    const PauliExpansion &encoding_expansion(size_t sigma) const {
        return encoding_.at(sigma);
    }
    /// D_sigma for sigma in I,X,Y,Z (index 0..3), plain Pauli basis.
    const PauliExpansion &decoding_expansion(size_t sigma) const {
        return decoding_.at(sigma);
    }
    /// f_{k sigma} = sum_j eta(S_k, R_j) eta(R_j, sigma-bar).
    int64_t f_coefficient(size_t k, size_t sigma) const;

    /// Built on first use, thread-safe.
    const ExpansionPairs &expansion_pairs() const;

   private:
    friend StabilizerCode load_code_parts(
        std::string name,
        std::vector<SignedPauli> generators,
        SignedPauli logical_x,
        SignedPauli logical_z,
        const RecoveryPolicy &policy);

    struct PairCache {
        std::once_flag once;
        std::unique_ptr<ExpansionPairs> pairs;
    };

    std::string name_;
    size_t n_ = 0;
    std::vector<SignedPauli> generators_;
    SignedPauli identity_;
    SignedPauli logical_x_, logical_y_, logical_z_;
    std::vector<SignedPauli> group_;
    SyndromeTable recovery_;
    std::array<PauliExpansion, 4> encoding_;
    std::array<PauliExpansion, 4> decoding_;
    std::shared_ptr<PairCache> pair_cache_ = std::make_shared<PairCache>();
};

/// Parsed code-spec file: either a monolithic stabilizer code or a
/// concatenation recipe, never both.
struct CodeSpec {
    std::string name;
    size_t n = 0;
    std::vector<std::string> generators;
    std::string logical_x;
    std::string logical_z;
    RecoveryPolicy recovery = MinWeightPolicy{};
    /// Component code names or spec paths, outermost first. Non-empty iff this
    /// is a concatenation recipe.
    std::vector<std::string> concat;

    bool is_concatenation() const {
        return !concat.empty();
    }
};

StabilizerCode load_code_parts(
    std::string name,
    std::vector<SignedPauli> generators,
    SignedPauli logical_x,
    SignedPauli logical_z,
    const RecoveryPolicy &policy = MinWeightPolicy{});

/// Validates and builds a monolithic code. Throws CodeError naming the
/// offending generators/logicals.
StabilizerCode load_code(const CodeSpec &spec);

/// Parses the JSON code-spec format. Errors carry the line/column (syntax)
/// or the field path (content).
CodeSpec parse_code_spec(const std::string &json_text);
std::string code_spec_to_json(const CodeSpec &spec);

/// A code as used by the coding-map machinery: one or more stabilizer codes,
/// outermost first. A single layer is an ordinary stabilizer code.
struct ConcatenatedCode {
    std::string name;
    std::vector<std::shared_ptr<const StabilizerCode>> layers;

    bool is_single() const {
        return layers.size() == 1;
    }
    const StabilizerCode &single() const &;
    // Copies out of a temporary so the result cannot dangle.
    StabilizerCode single() &&;
};

/// Catalog: bitflip, phaseflip, phaseflip_prime, steane, five_bit (monolithic)
/// and shor, shor_prime (concatenation recipes).
const std::vector<std::string> &catalog_names();
bool in_catalog(const std::string &name);
CodeSpec catalog_spec(const std::string &name);

/// Resolves a name to a CodeSpec; used for concatenation entries.
using SpecResolver = std::function<CodeSpec(const std::string &)>;

/// Catalog names resolve to the catalog; anything else is read as a spec file path.
CodeSpec resolve_catalog_or_file(const std::string &name_or_path);

ConcatenatedCode build_code(const CodeSpec &spec, const SpecResolver &resolve = resolve_catalog_or_file);
ConcatenatedCode catalog_code(const std::string &name);

}  // namespace qecmap

#endif
