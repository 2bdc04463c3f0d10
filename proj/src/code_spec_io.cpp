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

#include <json.hpp>

#include "qecmap/stabilizer_code.h"

namespace qecmap {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string &field, const std::string &msg) {
    throw CodeError("code spec field \"" + field + "\": " + msg);
}

std::string get_string(const json &obj, const std::string &key, const std::string &path) {
    if (!obj.contains(key)) {
        field_error(path + key, "missing");
    }
    if (!obj[key].is_string()) {
        field_error(path + key, "must be a string");
    }
    return obj[key].get<std::string>();
}

std::vector<std::string> get_string_array(const json &obj, const std::string &key) {
    if (!obj.contains(key)) {
        field_error(key, "missing");
    }
    const json &arr = obj[key];
    if (!arr.is_array()) {
        field_error(key, "must be an array of strings");
    }
    std::vector<std::string> out;
    for (size_t i = 0; i < arr.size(); i++) {
        if (!arr[i].is_string()) {
            field_error(key + "[" + std::to_string(i) + "]", "must be a string");
        }
        out.push_back(arr[i].get<std::string>());
    }
    return out;
}

void check_pauli(const std::string &text, const std::string &field) {
    try {
        (void)parse_pauli(text);
    } catch (const PauliParseError &e) {
        field_error(field, e.what());
    }
}

}  // namespace

CodeSpec parse_code_spec(const std::string &json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        // Translate the byte offset into line/column.
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < json_text.size(); i++) {
            if (json_text[i] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
        throw CodeError(
            "code spec is not valid JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    if (!doc.is_object()) {
        throw CodeError("code spec must be a JSON object");
    }

    CodeSpec spec;
    spec.name = get_string(doc, "name", "");

    if (doc.contains("concat")) {
        for (const char *k : {"generators", "logical_x", "logical_z", "recovery", "n"}) {
            if (doc.contains(k)) {
                field_error(k, "not allowed together with \"concat\"");
            }
        }
        spec.concat = get_string_array(doc, "concat");
        if (spec.concat.empty()) {
            field_error("concat", "must list at least one component code");
        }
        return spec;
    }

    if (!doc.contains("n")) {
        field_error("n", "missing");
    }
    if (!doc["n"].is_number_unsigned() || doc["n"].get<uint64_t>() == 0) {
        field_error("n", "must be a positive integer");
    }
    spec.n = doc["n"].get<size_t>();
    spec.generators = get_string_array(doc, "generators");
    for (size_t i = 0; i < spec.generators.size(); i++) {
        check_pauli(spec.generators[i], "generators[" + std::to_string(i) + "]");
    }
    spec.logical_x = get_string(doc, "logical_x", "");
    check_pauli(spec.logical_x, "logical_x");
    spec.logical_z = get_string(doc, "logical_z", "");
    check_pauli(spec.logical_z, "logical_z");

    if (!doc.contains("recovery")) {
        field_error("recovery", "missing (use \"min_weight\" or an explicit table)");
    }
    const json &rec = doc["recovery"];
    if (rec.is_string()) {
        if (rec.get<std::string>() != "min_weight") {
            field_error("recovery", "unknown policy \"" + rec.get<std::string>() + "\"");
        }
        spec.recovery = MinWeightPolicy{};
    } else if (rec.is_array()) {
        ExplicitRecoveries entries;
        for (size_t i = 0; i < rec.size(); i++) {
            std::string path = "recovery[" + std::to_string(i) + "].";
            if (!rec[i].is_object()) {
                field_error("recovery[" + std::to_string(i) + "]", "must be an object");
            }
            std::string syn = get_string(rec[i], "syndrome", path);
            std::string op = get_string(rec[i], "operator", path);
            check_pauli(op, path + "operator");
            entries.emplace_back(syn, op);
        }
        spec.recovery = entries;
    } else {
        field_error("recovery", "must be \"min_weight\" or an array of {syndrome, operator}");
    }
    return spec;
}

std::string code_spec_to_json(const CodeSpec &spec) {
    json doc;
    doc["name"] = spec.name;
    if (spec.is_concatenation()) {
        doc["concat"] = spec.concat;
        return doc.dump(2);
    }
    doc["n"] = spec.n;
    doc["generators"] = spec.generators;
    doc["logical_x"] = spec.logical_x;
    doc["logical_z"] = spec.logical_z;
    if (std::holds_alternative<MinWeightPolicy>(spec.recovery)) {
        doc["recovery"] = "min_weight";
    } else {
        json arr = json::array();
        for (const auto &[syn, op] : std::get<ExplicitRecoveries>(spec.recovery)) {
            arr.push_back({{"syndrome", syn}, {"operator", op}});
        }
        doc["recovery"] = arr;
    }
    return doc.dump(2);
}

}  // namespace qecmap
