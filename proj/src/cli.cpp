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

#include "qecmap/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "qecmap/coding_map.h"
#include "qecmap/correctable.h"
#include "qecmap/dynamics.h"
#include "qecmap/oracle.h"

namespace qecmap {

using nlohmann::json;

namespace {

constexpr double kOracleTolerance = 1e-10;
constexpr double kDiagonalTolerance = 1e-12;

// Errors that map to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_numbers(const std::string &body, const std::string &what) {
    std::vector<double> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
            used++;
        }
        if (item.empty() || used != item.size() || !std::isfinite(v)) {
            throw UsageError(what + ": \"" + item + "\" is not a number");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<double> expect_count(const std::string &body, size_t count, const std::string &what) {
    auto v = parse_numbers(body, what);
    if (v.size() != count) {
        throw UsageError(what + " expects " + std::to_string(count) + " comma-separated numbers");
    }
    return v;
}

struct Options {
    std::string code;
    std::string spec;
    std::string channel;
    std::string levels;
    std::string grid;
    std::string format;
    std::string out;
    bool oracle = false;
    int precision = 6;
    std::vector<std::string> components;
};

class Emitter {
   public:
    Emitter(const Options &opt, std::ostream &out) : opt_(opt), out_(out) {
    }

    std::string num(double v) const {
        if (std::isinf(v)) {
            return v > 0 ? "inf" : "-inf";
        }
        std::ostringstream ss;
        ss << std::setprecision(opt_.precision) << v;
        return ss.str();
    }

    void write(const std::string &text) const {
        if (opt_.out.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(opt_.out, std::ios::binary);
        if (!f) {
            throw std::domain_error("cannot open output file \"" + opt_.out + "\"");
        }
        f << text;
    }

    void write_json(const json &doc) const {
        write(doc.dump(2) + "\n");
    }

   private:
    const Options &opt_;
    std::ostream &out_;
};

std::string format_or(const Options &opt, const std::string &fallback, std::initializer_list<const char *> allowed) {
    std::string f = opt.format.empty() ? fallback : opt.format;
    for (const char *a : allowed) {
        if (f == a) {
            return f;
        }
    }
    std::string list;
    for (const char *a : allowed) {
        list += (list.empty() ? "" : ", ") + std::string(a);
    }
    throw UsageError("--format " + f + " is not supported here (use " + list + ")");
}

ConcatenatedCode selected_code(const Options &opt) {
    if (!opt.code.empty() && !opt.spec.empty()) {
        throw UsageError("--code and --spec are mutually exclusive");
    }
    if (opt.code.empty() && opt.spec.empty()) {
        throw UsageError("a code is required (--code NAME|PATH or --spec PATH)");
    }
    const std::string &sel = opt.code.empty() ? opt.spec : opt.code;
    if (!opt.spec.empty() && in_catalog(sel)) {
        return catalog_code(sel);
    }
    return build_code(resolve_catalog_or_file(sel));
}

ChannelLiteral required_channel(const Options &opt) {
    if (opt.channel.empty()) {
        throw UsageError("--channel is required");
    }
    return parse_channel_literal(opt.channel);
}

DiagonalChannel required_diagonal_channel(const Options &opt) {
    ChannelLiteral c = required_channel(opt);
    if (!c.diagonal) {
        throw std::domain_error("this command needs a diagonal channel (diag:, pauli: or depol:)");
    }
    return *c.diagonal;
}

json matrix_json(const QubitChannel &g) {
    json rows = json::array();
    for (size_t r = 0; r < 4; r++) {
        rows.push_back(json(g.matrix()[r]));
    }
    return rows;
}

std::string matrix_pretty(const QubitChannel &g, const Emitter &em) {
    std::string s;
    for (size_t r = 0; r < 4; r++) {
        s += " ";
        for (size_t c = 0; c < 4; c++) {
            s += " " + em.num(g(r, c));
        }
        s += "\n";
    }
    return s;
}

PolyMap code_map(const ConcatenatedCode &code) {
    return diagonal_poly_map(code);
}

int cmd_validate(const Options &opt, const Emitter &em) {
    bool any = false;
    std::string text;
    if (!opt.code.empty() || !opt.spec.empty()) {
        ConcatenatedCode code = selected_code(opt);
        text += "code " + code.name + ": valid (";
        for (size_t i = 0; i < code.layers.size(); i++) {
            const StabilizerCode &l = *code.layers[i];
            text += (i ? ", " : "") + l.name() + " n=" + std::to_string(l.n());
        }
        text += ")\n";
        any = true;
    }
    if (!opt.channel.empty()) {
        ChannelLiteral c = parse_channel_literal(opt.channel);
        text += "channel " + c.text + (c.diagonal ? ": physical\n" : ": accepted (general channel, trace row only)\n");
        any = true;
    }
    if (!any) {
        throw UsageError("validate needs --code, --spec or --channel");
    }
    em.write(text);
    return 0;
}

int cmd_channel_convert(const Options &opt, const Emitter &em) {
    std::string fmt = format_or(opt, "pretty", {"pretty", "json"});
    ChannelLiteral c = required_channel(opt);
    if (fmt == "json") {
        json doc;
        doc["channel"] = c.text;
        doc["matrix"] = matrix_json(c.matrix);
        if (c.diagonal) {
            PauliProbs p = diagonal_to_pauli_probs(*c.diagonal);
            doc["diagonal"] = {c.diagonal->x, c.diagonal->y, c.diagonal->z};
            doc["pauli"] = {{"p_x", p.p_x}, {"p_y", p.p_y}, {"p_z", p.p_z}, {"p_i", p.p_identity()}};
            doc["worst_case_fidelity"] = worst_case_fidelity(*c.diagonal);
        }
        em.write_json(doc);
        return 0;
    }
    std::string s = "channel: " + c.text + "\nmatrix:\n" + matrix_pretty(c.matrix, em);
    if (c.diagonal) {
        const DiagonalChannel &d = *c.diagonal;
        PauliProbs p = diagonal_to_pauli_probs(d);
        s += "diagonal: [" + em.num(d.x) + ", " + em.num(d.y) + ", " + em.num(d.z) + "]\n";
        s += "pauli: p_x=" + em.num(p.p_x) + " p_y=" + em.num(p.p_y) + " p_z=" + em.num(p.p_z) +
             " p_i=" + em.num(p.p_identity()) + "\n";
        s += "worst-case fidelity: " + em.num(worst_case_fidelity(d)) + "\n";
    }
    em.write(s);
    return 0;
}

int cmd_effective(const Options &opt, const Emitter &em) {
    std::string fmt = format_or(opt, "pretty", {"pretty", "json"});
    ConcatenatedCode code = selected_code(opt);
    ChannelLiteral c = required_channel(opt);
    EffectiveChannelResult r = effective_channel_general(code, c.matrix, c.text);
    bool diagonal = r.g.max_off_diagonal() <= kDiagonalTolerance;

    std::optional<double> oracle_dev;
    if (opt.oracle) {
        if (!c.diagonal) {
            throw std::domain_error("--oracle needs a diagonal channel");
        }
        QubitChannel dense = dense_effective_channel(code.single(), kraus_from_diagonal(*c.diagonal));
        double dev = 0;
        for (size_t i = 0; i < 4; i++) {
            for (size_t j = 0; j < 4; j++) {
                dev = std::max(dev, std::abs(dense(i, j) - r.g(i, j)));
            }
        }
        oracle_dev = dev;
    }

    if (fmt == "json") {
        json doc;
        doc["code"] = r.code_name;
        doc["channel"] = r.input_description;
        doc["matrix"] = matrix_json(r.g);
        if (diagonal) {
            doc["diagonal"] = {r.g(1, 1), r.g(2, 2), r.g(3, 3)};
        }
        if (oracle_dev) {
            doc["oracle_max_deviation"] = *oracle_dev;
            doc["oracle_ok"] = *oracle_dev < kOracleTolerance;
        }
        em.write_json(doc);
    } else {
        std::string s = "code: " + r.code_name + "\nchannel: " + r.input_description + "\nG:\n" + matrix_pretty(r.g, em);
        if (diagonal) {
            s += "diagonal: [" + em.num(r.g(1, 1)) + ", " + em.num(r.g(2, 2)) + ", " + em.num(r.g(3, 3)) + "]\n";
        }
        if (oracle_dev) {
            s += *oracle_dev < kOracleTolerance ? std::string("oracle: max|Δ| < 1e-10\n")
                                                : "oracle: max|Δ| = " + em.num(*oracle_dev) + "\n";
        }
        em.write(s);
    }
    if (oracle_dev && !(*oracle_dev < kOracleTolerance)) {
        throw std::domain_error("dense oracle disagrees with the fast path");
    }
    return 0;
}

void emit_polymap(const Options &opt, const Emitter &em, const PolyMap &m) {
    std::string fmt = format_or(opt, "pretty", {"pretty", "json"});
    if (fmt == "json") {
        em.write(polymap_to_json(m) + "\n");
    } else {
        em.write(m.pretty());
    }
}

int cmd_polymap(const Options &opt, const Emitter &em) {
    emit_polymap(opt, em, code_map(selected_code(opt)));
    return 0;
}

int cmd_concat(const Options &opt, const Emitter &em) {
    if (opt.components.empty()) {
        throw UsageError("concat needs at least one code (names or spec paths, outermost first)");
    }
    CodeSpec spec;
    spec.name = "";
    for (const std::string &c : opt.components) {
        spec.name += (spec.name.empty() ? "" : "(") + c;
    }
    spec.name += std::string(opt.components.size() - 1, ')');
    spec.concat = opt.components;
    emit_polymap(opt, em, code_map(build_code(spec)));
    return 0;
}

int cmd_iterate(const Options &opt, const Emitter &em) {
    std::string fmt = format_or(opt, "csv", {"csv", "json", "pretty"});
    ConcatenatedCode code = selected_code(opt);
    DiagonalChannel c = required_diagonal_channel(opt);
    std::vector<size_t> levels = parse_levels(opt.levels.empty() ? "0..4" : opt.levels);
    PolyMap m = code_map(code);
    NumericPolyMap f(m);

    size_t max_level = *std::max_element(levels.begin(), levels.end());
    std::vector<DiagonalChannel> seq{c};
    for (size_t l = 1; l <= max_level; l++) {
        seq.push_back(f(seq.back()));
    }
    if (fmt == "json") {
        json rows = json::array();
        for (size_t l : levels) {
            rows.push_back({{"level", l}, {"x", seq[l].x}, {"y", seq[l].y}, {"z", seq[l].z}});
        }
        em.write_json({{"code", code.name}, {"channel", opt.channel}, {"levels", rows}});
        return 0;
    }
    std::string s = fmt == "csv" ? "level,x,y,z\n" : "";
    for (size_t l : levels) {
        if (fmt == "csv") {
            s += std::to_string(l) + "," + em.num(seq[l].x) + "," + em.num(seq[l].y) + "," + em.num(seq[l].z) + "\n";
        } else {
            s += "level " + std::to_string(l) + ": [" + em.num(seq[l].x) + ", " + em.num(seq[l].y) + ", " +
                 em.num(seq[l].z) + "]\n";
        }
    }
    em.write(s);
    return 0;
}

int cmd_threshold(const Options &opt, const Emitter &em) {
    std::string fmt = format_or(opt, "pretty", {"pretty", "json"});
    ConcatenatedCode code = selected_code(opt);
    ThresholdReport r = storage_threshold(code_map(code), code.name);
    if (fmt == "json") {
        em.write(threshold_report_json(r) + "\n");
        return 0;
    }
    std::string s = "code: " + r.code + "\nstructure: " + structure_name(r.structure) + " (period " +
                    std::to_string(r.period) + ")\n";
    s += "t_star: x=" + em.num(r.axes[0].t_star) + " y=" + em.num(r.axes[1].t_star) + " z=" + em.num(r.axes[2].t_star) +
         "\n";
    s += "t_th: " + em.num(r.t_th) + "\np_th: " + em.num(r.p_th) + "\n";
    const char *names[] = {"x", "y", "z"};
    for (size_t v = 0; v < 3; v++) {
        if (r.axes[v].fixed_points.empty()) {
            continue;
        }
        s += std::string("fixed points (") + names[v] + "):";
        for (const FixedPoint &fp : r.axes[v].fixed_points) {
            s += " " + em.num(fp.value) + " " + stability_name(fp.stability) + ";";
        }
        s.back() = '\n';
    }
    em.write(s);
    return 0;
}

int cmd_curves(const Options &opt, const Emitter &em) {
    std::string fmt = format_or(opt, "csv", {"csv", "json"});
    ConcatenatedCode code = selected_code(opt);
    if (opt.grid.empty()) {
        throw UsageError("--grid start:stop:step is required");
    }
    std::vector<double> grid = parse_grid(opt.grid);
    std::vector<size_t> levels = parse_levels(opt.levels.empty() ? "0..4" : opt.levels);
    CurveTable t = depolarizing_curves(code_map(code), grid, levels);
    if (fmt == "json") {
        json rows = json::array();
        for (const CurveRow &r : t) {
            rows.push_back({{"gamma_t", r.gamma_t}, {"level", r.level}, {"x", r.x}, {"y", r.y}, {"z", r.z}});
        }
        em.write_json({{"code", code.name}, {"rows", rows}});
        return 0;
    }
    em.write(curves_csv(t, opt.precision));
    return 0;
}

int cmd_leading_order(const Options &opt, const Emitter &em) {
    std::string fmt = format_or(opt, "pretty", {"pretty", "json"});
    ConcatenatedCode code = selected_code(opt);
    Polynomial1 prob = correctable_probability(code);
    LeadingOrderEstimate e = leading_order_threshold(prob);
    // Enumeration sums many products of p/3, so exact zeros come back as roundoff.
    auto coeff = [&](size_t k) { return std::abs(prob[k]) < 1e-12 ? 0.0 : prob[k]; };
    if (fmt == "json") {
        json doc;
        doc["code"] = code.name;
        doc["c1"] = coeff(1);
        doc["c2"] = coeff(2);
        doc["estimate"] = e.estimate;
        doc["exact_crossing"] = e.exact_crossing ? json(*e.exact_crossing) : json(nullptr);
        em.write_json(doc);
        return 0;
    }
    std::string s = "code: " + code.name + "\ncorrectable probability: 1";
    s += (coeff(1) < 0 ? " - " : " + ") + em.num(std::abs(coeff(1))) + " p";
    s += (coeff(2) < 0 ? " - " : " + ") + em.num(std::abs(coeff(2))) + " p^2 + O(p^3)\n";
    s += "leading-order estimate: " + em.num(e.estimate) + "\n";
    s += "exact crossing: " + (e.exact_crossing ? em.num(*e.exact_crossing) : std::string("none")) + "\n";
    em.write(s);
    return 0;
}

std::string one_line(std::string s) {
    for (char &c : s) {
        if (c == '\n') {
            c = ' ';
        }
    }
    return s;
}

}  // namespace

ChannelLiteral parse_channel_literal(const std::string &text) {
    ChannelLiteral lit;
    lit.text = text;
    auto body_of = [&](const std::string &prefix) -> std::optional<std::string> {
        if (text.rfind(prefix, 0) == 0) {
            return text.substr(prefix.size());
        }
        return std::nullopt;
    };
    std::optional<DiagonalChannel> d;
    if (auto b = body_of("diag:")) {
        auto v = expect_count(*b, 3, "diag:");
        d = make_diagonal(v[0], v[1], v[2], true);
    } else if (auto b = body_of("pauli:")) {
        auto v = expect_count(*b, 3, "pauli:");
        PauliProbs p{v[0], v[1], v[2]};
        if (p.p_x < 0 || p.p_y < 0 || p.p_z < 0 || p.p_identity() < -kCpTolerance) {
            throw CpViolation("Pauli probabilities " + *b + " are outside the probability simplex");
        }
        d = pauli_probs_to_diagonal(p);
    } else if (auto b = body_of("depol:")) {
        auto v = expect_count(*b, 1, "depol:");
        d = depolarizing(v[0]);
    } else if (!text.empty() && text.front() == '[') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error &) {
            throw UsageError("channel matrix is not valid JSON");
        }
        if (!doc.is_array() || doc.size() != 16) {
            throw UsageError("channel matrix must be a JSON array of 16 numbers");
        }
        QubitChannel::Matrix m{};
        for (size_t i = 0; i < 16; i++) {
            if (!doc[i].is_number()) {
                throw UsageError("channel matrix entry " + std::to_string(i) + " is not a number");
            }
            m[i / 4][i % 4] = doc[i].get<double>();
        }
        lit.matrix = QubitChannel(m);
        return lit;
    } else {
        throw UsageError("unrecognized channel \"" + text + "\" (use diag:x,y,z, pauli:pX,pY,pZ, depol:t or a 16-number JSON array)");
    }
    lit.diagonal = d;
    lit.matrix = QubitChannel::diagonal(d->x, d->y, d->z);
    return lit;
}

std::vector<double> parse_grid(const std::string &text) {
    auto first = text.find(':');
    auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw UsageError("--grid must be start:stop:step");
    }
    std::string joined = text.substr(0, first) + "," + text.substr(first + 1, second - first - 1) + "," +
                         text.substr(second + 1);
    auto v = expect_count(joined, 3, "--grid");
    double start = v[0], stop = v[1], step = v[2];
    if (!(step > 0) || stop < start) {
        throw UsageError("--grid needs step > 0 and stop >= start");
    }
    size_t count = static_cast<size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    for (size_t k = 0; k < count; k++) {
        out.push_back(start + static_cast<double>(k) * step);
    }
    return out;
}

std::vector<size_t> parse_levels(const std::string &text) {
    auto as_level = [&](const std::string &s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) {
            throw UsageError("--levels: \"" + s + "\" is not a level count");
        }
        return static_cast<size_t>(std::stoul(s));
    };
    std::vector<size_t> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        size_t a = as_level(text.substr(0, dots));
        size_t b = as_level(text.substr(dots + 2));
        if (b < a) {
            throw UsageError("--levels range is empty");
        }
        for (size_t l = a; l <= b; l++) {
            out.push_back(l);
        }
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(as_level(item));
    }
    if (out.empty()) {
        throw UsageError("--levels is empty");
    }
    return out;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options opt;
    CLI::App app{"Effective channels, coding maps and storage thresholds of stabilizer codes", "qecmap"};
    app.require_subcommand(1, 1);

    auto add_code = [&](CLI::App *sub) {
        sub->add_option("--code", opt.code, "Catalog code name or spec file path");
        sub->add_option("--spec", opt.spec, "Code spec file (JSON)");
    };
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", opt.format, "Output format: json, csv or pretty");
        sub->add_option("--out", opt.out, "Write output to this file instead of stdout");
        sub->add_option("--precision", opt.precision, "Significant digits for text output")
            ->check(CLI::Range(1, 17));
    };
    auto channel_help = "diag:x,y,z | pauli:pX,pY,pZ | depol:gamma_t | JSON array of 16 numbers";

    CLI::App *validate = app.add_subcommand("validate", "Check a code or a channel");
    add_code(validate);
    validate->add_option("--channel", opt.channel, channel_help);
    add_format(validate);

    CLI::App *convert = app.add_subcommand("channel-convert", "Show a channel in all representations");
    convert->add_option("--channel", opt.channel, channel_help);
    add_format(convert);

    CLI::App *effective = app.add_subcommand("effective", "Effective logical channel of a code");
    add_code(effective);
    effective->add_option("--channel", opt.channel, channel_help);
    effective->add_flag("--oracle", opt.oracle, "Cross-check against the dense reference (n <= 5)");
    add_format(effective);

    CLI::App *polymap = app.add_subcommand("polymap", "Exact coding map on diagonal channels");
    add_code(polymap);
    add_format(polymap);

    CLI::App *concat = app.add_subcommand("concat", "Coding map of a concatenation, outermost first");
    concat->add_option("codes", opt.components, "Catalog names or spec paths");
    add_format(concat);

    CLI::App *iterate = app.add_subcommand("iterate", "Apply the coding map repeatedly");
    add_code(iterate);
    iterate->add_option("--channel", opt.channel, channel_help);
    iterate->add_option("--levels", opt.levels, "Levels to report, e.g. 0,1,5 or 0..4");
    add_format(iterate);

    CLI::App *threshold = app.add_subcommand("threshold", "Storage threshold under depolarizing noise");
    add_code(threshold);
    add_format(threshold);

    CLI::App *curves = app.add_subcommand("curves", "Depolarizing curves per concatenation level");
    add_code(curves);
    curves->add_option("--grid", opt.grid, "gamma*t grid start:stop:step");
    curves->add_option("--levels", opt.levels, "Levels, e.g. 0..4");
    add_format(curves);

    CLI::App *leading = app.add_subcommand("leading-order", "Second-order threshold estimate");
    add_code(leading);
    add_format(leading);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << one_line(e.what()) << "\n";
        return 2;
    }

    Emitter em(opt, out);
    try {
        CLI::App *sub = app.get_subcommands().front();
        const std::string &name = sub->get_name();
        if (name == "validate") {
            return cmd_validate(opt, em);
        } else if (name == "channel-convert") {
            return cmd_channel_convert(opt, em);
        } else if (name == "effective") {
            return cmd_effective(opt, em);
        } else if (name == "polymap") {
            return cmd_polymap(opt, em);
        } else if (name == "concat") {
            return cmd_concat(opt, em);
        } else if (name == "iterate") {
            return cmd_iterate(opt, em);
        } else if (name == "threshold") {
            return cmd_threshold(opt, em);
        } else if (name == "curves") {
            return cmd_curves(opt, em);
        } else if (name == "leading-order") {
            return cmd_leading_order(opt, em);
        }
        throw UsageError("unknown subcommand " + name);
    } catch (const UsageError &e) {
        err << "error: " << one_line(e.what()) << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << one_line(e.what()) << "\n";
        return 1;
    }
}

}  // namespace qecmap
