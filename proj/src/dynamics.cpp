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

#include "qecmap/dynamics.h"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <map>
#include <sstream>

namespace qecmap {

namespace {

constexpr size_t kGridCells = 10000;
constexpr double kNodeRootTolerance = 1e-13;
constexpr double kMarginalBand = 1e-9;
constexpr double kEndpointBand = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Bisects [lo, hi] (g(lo), g(hi) of opposite sign) down to adjacent doubles.
double bisect_root(const std::function<double(double)> &g, double lo, double hi) {
    double glo = g(lo);
    for (int iter = 0; iter < 200; iter++) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        double gm = g(mid);
        if (gm == 0) {
            return mid;
        }
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    double ghi = g(hi);
    return std::abs(glo) <= std::abs(ghi) ? lo : hi;
}

Stability classify(double derivative_magnitude) {
    if (derivative_magnitude < 1 - kMarginalBand) {
        return Stability::Attracting;
    }
    if (derivative_magnitude > 1 + kMarginalBand) {
        return Stability::Repelling;
    }
    return Stability::Marginal;
}

// Basin-of-1 analysis for one axis of a one-dimensional map.
AxisThreshold analyze_axis(const Polynomial1 &h) {
    AxisThreshold axis;
    axis.fixed_points = fixed_points_1d(h);
    double below_one = 0;
    const FixedPoint *boundary = nullptr;
    for (const FixedPoint &fp : axis.fixed_points) {
        if (fp.value > kEndpointBand && fp.value < 1 - kEndpointBand && fp.value >= below_one) {
            below_one = fp.value;
            boundary = &fp;
        }
    }
    double probe = 0.5 * (below_one + 1);
    bool flows_up = h(probe) - probe > 0;
    if (!flows_up) {
        axis.t_star = 0;
    } else if (boundary) {
        axis.critical_value = boundary->value;
        axis.t_star = -std::log(boundary->value);
    } else {
        axis.t_star = kInf;
    }
    return axis;
}

Polynomial1 restrict_exact(const Polynomial &p, const std::function<size_t(const Exponents &)> &degree) {
    std::map<size_t, Dyadic> acc;
    for (const auto &[e, c] : p.terms()) {
        acc[degree(e)] += c;
    }
    size_t top = 0;
    for (const auto &[d, c] : acc) {
        if (!c.is_zero()) {
            top = std::max(top, d);
        }
    }
    std::vector<double> coef(top + 1, 0.0);
    for (const auto &[d, c] : acc) {
        coef[d] = c.to_double();
    }
    return Polynomial1(coef);
}

std::map<size_t, Dyadic> diagonal_coefficients(const Polynomial &p) {
    std::map<size_t, Dyadic> acc;
    for (const auto &[e, c] : p.terms()) {
        acc[e[0] + e[1] + e[2]] += c;
    }
    for (auto it = acc.begin(); it != acc.end();) {
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    }
    return acc;
}

bool only_depends_on(const Polynomial &p, size_t var) {
    for (size_t v = 0; v < 3; v++) {
        if (v != var && p.depends_on(v)) {
            return false;
        }
    }
    return true;
}

}  // namespace

double Polynomial1::operator()(double v) const {
    double acc = 0;
    for (size_t k = c_.size(); k-- > 0;) {
        acc = acc * v + c_[k];
    }
    return acc;
}

double Polynomial1::derivative(double v) const {
    double acc = 0;
    for (size_t k = c_.size(); k-- > 1;) {
        acc = acc * v + static_cast<double>(k) * c_[k];
    }
    return acc;
}

Polynomial1 Polynomial1::operator*(const Polynomial1 &other) const {
    if (c_.empty() || other.c_.empty()) {
        return Polynomial1();
    }
    std::vector<double> r(c_.size() + other.c_.size() - 1, 0.0);
    for (size_t i = 0; i < c_.size(); i++) {
        for (size_t j = 0; j < other.c_.size(); j++) {
            r[i + j] += c_[i] * other.c_[j];
        }
    }
    return Polynomial1(r);
}

Polynomial1 Polynomial1::operator+(const Polynomial1 &other) const {
    std::vector<double> r(std::max(c_.size(), other.c_.size()), 0.0);
    for (size_t i = 0; i < r.size(); i++) {
        r[i] = (*this)[i] + other[i];
    }
    return Polynomial1(r);
}

Polynomial1 Polynomial1::compose(const Polynomial1 &inner) const {
    Polynomial1 result({0.0});
    Polynomial1 power({1.0});
    for (size_t k = 0; k < c_.size(); k++) {
        if (c_[k] != 0) {
            Polynomial1 scaled = power;
            std::vector<double> tmp = scaled.c_;
            for (double &v : tmp) {
                v *= c_[k];
            }
            result = result + Polynomial1(tmp);
        }
        if (k + 1 < c_.size()) {
            power = power * inner;
        }
    }
    return result;
}

Polynomial1 restrict_to_variable(const Polynomial &p, size_t var) {
    if (!only_depends_on(p, var)) {
        throw std::invalid_argument("polynomial depends on more than the requested variable");
    }
    return restrict_exact(p, [var](const Exponents &e) { return size_t{e[var]}; });
}

Polynomial1 restrict_to_diagonal(const Polynomial &p) {
    return restrict_exact(p, [](const Exponents &e) { return size_t{e[0] + e[1] + e[2]}; });
}

std::string stability_name(Stability s) {
    switch (s) {
        case Stability::Attracting:
            return "attracting";
        case Stability::Repelling:
            return "repelling";
        case Stability::Marginal:
            return "marginal";
    }
    return "?";
}

std::vector<FixedPoint> fixed_points_1d(const Polynomial1 &poly) {
    auto g = [&](double v) { return poly(v) - v; };
    std::vector<double> roots;
    std::vector<double> gv(kGridCells + 1);
    std::vector<bool> at_node(kGridCells + 1, false);
    for (size_t i = 0; i <= kGridCells; i++) {
        double v = static_cast<double>(i) / kGridCells;
        gv[i] = g(v);
        if (std::abs(gv[i]) <= kNodeRootTolerance) {
            at_node[i] = true;
            roots.push_back(v);
        }
    }
    for (size_t i = 0; i < kGridCells; i++) {
        if (at_node[i] || at_node[i + 1]) {
            continue;
        }
        if ((gv[i] < 0) != (gv[i + 1] < 0)) {
            roots.push_back(bisect_root(g, static_cast<double>(i) / kGridCells, static_cast<double>(i + 1) / kGridCells));
        }
    }
    std::sort(roots.begin(), roots.end());
    std::vector<FixedPoint> out;
    for (double r : roots) {
        if (!out.empty() && r - out.back().value < kEndpointBand) {
            continue;
        }
        FixedPoint fp;
        fp.value = r;
        fp.derivative_magnitude = std::abs(poly.derivative(r));
        fp.stability = classify(fp.derivative_magnitude);
        out.push_back(fp);
    }
    return out;
}

DiagonalChannel iterate_map(const PolyMap &m, const DiagonalChannel &c, size_t levels) {
    NumericPolyMap f(m);
    DiagonalChannel cur = c;
    for (size_t l = 0; l < levels; l++) {
        cur = f(cur);
    }
    return cur;
}

std::string structure_name(MapStructure s) {
    switch (s) {
        case MapStructure::Separable:
            return "separable";
        case MapStructure::Swapped:
            return "swapped";
        case MapStructure::Symmetric:
            return "symmetric";
        case MapStructure::Generic:
            return "generic";
    }
    return "?";
}

MapStructure detect_structure(const PolyMap &m) {
    if (only_depends_on(m.x(), 0) && only_depends_on(m.z(), 2)) {
        return MapStructure::Separable;
    }
    if (only_depends_on(m.x(), 2) && only_depends_on(m.z(), 0)) {
        return MapStructure::Swapped;
    }
    auto dx = diagonal_coefficients(m.x());
    if (dx == diagonal_coefficients(m.y()) && dx == diagonal_coefficients(m.z())) {
        return MapStructure::Symmetric;
    }
    return MapStructure::Generic;
}

double time_to_pauli_probability(double gamma_t) {
    return 0.75 * (1 - std::exp(-gamma_t));
}

ThresholdReport storage_threshold(const PolyMap &m, const std::string &code_name) {
    ThresholdReport r;
    r.code = code_name;
    r.structure = detect_structure(m);
    switch (r.structure) {
        case MapStructure::Separable: {
            r.axes[0] = analyze_axis(restrict_to_variable(m.x(), 0));
            r.axes[2] = analyze_axis(restrict_to_variable(m.z(), 2));
            r.axes[1].t_star = std::min(r.axes[0].t_star, r.axes[2].t_star);
            break;
        }
        case MapStructure::Swapped: {
            r.period = 2;
            Polynomial1 from_z = restrict_to_variable(m.x(), 2);
            Polynomial1 from_x = restrict_to_variable(m.z(), 0);
            r.axes[0] = analyze_axis(from_z.compose(from_x));
            r.axes[2] = analyze_axis(from_x.compose(from_z));
            r.axes[1].t_star = std::min(r.axes[0].t_star, r.axes[2].t_star);
            break;
        }
        case MapStructure::Symmetric: {
            AxisThreshold a = analyze_axis(restrict_to_diagonal(m.x()));
            r.axes = {a, a, a};
            break;
        }
        case MapStructure::Generic: {
            auto t = generic_axis_thresholds(m);
            for (size_t v = 0; v < 3; v++) {
                r.axes[v].t_star = t[v];
                if (std::isfinite(t[v]) && t[v] > 0) {
                    r.axes[v].critical_value = std::exp(-t[v]);
                }
            }
            break;
        }
    }
    bool any_finite = false;
    for (const auto &a : r.axes) {
        any_finite |= a.critical_value.has_value();
    }
    if (!any_finite) {
        throw NoFiniteThreshold(
            "no finite threshold" + (code_name.empty() ? std::string() : " for " + code_name) +
            ": no axis has a repelling interior fixed point");
    }
    r.t_th = std::min({r.axes[0].t_star, r.axes[1].t_star, r.axes[2].t_star});
    r.p_th = time_to_pauli_probability(r.t_th);
    return r;
}

std::array<double, 3> generic_axis_thresholds(const PolyMap &m, const GenericThresholdOptions &opt) {
    NumericPolyMap f(m);
    // +1 settled at 1, -1 settled at 0, 0 undecided.
    auto classify_axis = [&](double t, size_t axis) {
        DiagonalChannel c = depolarizing(t);
        for (size_t it = 0; it < opt.max_iterations; it++) {
            double v = c[axis];
            if (v > 1 - opt.settle_tolerance) {
                return 1;
            }
            if (std::abs(v) < opt.settle_tolerance) {
                return -1;
            }
            c = f(f(c));
        }
        return 0;
    };
    std::array<double, 3> out{};
    for (size_t axis = 0; axis < 3; axis++) {
        double lo = 0, hi = opt.t_max;
        if (classify_axis(hi, axis) == 1) {
            out[axis] = kInf;
            continue;
        }
        if (classify_axis(opt.bisection_width, axis) != 1) {
            out[axis] = 0;
            continue;
        }
        while (hi - lo > opt.bisection_width) {
            double mid = 0.5 * (lo + hi);
            if (classify_axis(mid, axis) == 1) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out[axis] = 0.5 * (lo + hi);
    }
    return out;
}

std::string threshold_report_json(const ThresholdReport &r) {
    using nlohmann::json;
    auto num = [](double v) -> json { return std::isfinite(v) ? json(v) : json(nullptr); };
    json doc;
    doc["code"] = r.code;
    doc["structure"] = structure_name(r.structure);
    doc["period"] = r.period;
    doc["t_star"] = {{"x", num(r.axes[0].t_star)}, {"y", num(r.axes[1].t_star)}, {"z", num(r.axes[2].t_star)}};
    doc["t_th"] = num(r.t_th);
    doc["p_th"] = num(r.p_th);
    json fps = json::array();
    const char *names[] = {"x", "y", "z"};
    for (size_t v = 0; v < 3; v++) {
        for (const FixedPoint &fp : r.axes[v].fixed_points) {
            fps.push_back(
                {{"axis", names[v]},
                 {"value", fp.value},
                 {"stability", stability_name(fp.stability)},
                 {"derivative", fp.derivative_magnitude}});
        }
    }
    doc["fixed_points"] = fps;
    return doc.dump(2);
}

LeadingOrderEstimate leading_order_threshold(const Polynomial1 &correctable_prob) {
    if (std::abs(correctable_prob[0] - 1) > 1e-12) {
        throw std::domain_error("correctable-error probability must equal 1 at p = 0");
    }
    // 1 + c1 p + c2 p^2 = 1 - p  ->  p = -(1 + c1) / c2.
    double c1 = correctable_prob[1];
    double c2 = correctable_prob[2];
    if (!(c2 < 0) || !(1 + c1 > 0)) {
        throw std::domain_error("second-order truncation has no positive crossing with 1 - p; no estimate");
    }
    LeadingOrderEstimate out;
    out.estimate = -(1 + c1) / c2;

    auto h = [&](double p) { return correctable_prob(p) - (1 - p); };
    double prev_p = 1.0 / kGridCells;
    double prev_h = h(prev_p);
    for (size_t i = 2; i <= kGridCells; i++) {
        double p = static_cast<double>(i) / kGridCells;
        double hp = h(p);
        if (hp == 0) {
            out.exact_crossing = p;
            break;
        }
        if ((hp < 0) != (prev_h < 0)) {
            out.exact_crossing = bisect_root(h, prev_p, p);
            break;
        }
        prev_p = p;
        prev_h = hp;
    }
    return out;
}

CurveTable depolarizing_curves(const PolyMap &m, const std::vector<double> &t_grid, const std::vector<size_t> &levels) {
    for (double t : t_grid) {
        if (!(t >= 0)) {
            throw std::domain_error("curve grid values must be >= 0");
        }
    }
    const size_t points = t_grid.size();
    size_t max_level = 0;
    for (size_t l : levels) {
        max_level = std::max(max_level, l);
    }
    std::vector<double> x(points), y(points), z(points);
    for (size_t k = 0; k < points; k++) {
        DiagonalChannel c = depolarizing(t_grid[k]);
        x[k] = c.x;
        y[k] = c.y;
        z[k] = c.z;
    }
    // snapshots[level] -> (x, y, z) columns.
    std::map<size_t, std::array<std::vector<double>, 3>> snapshots;
    NumericPolyMap f(m);
    for (size_t l = 0;; l++) {
        if (std::find(levels.begin(), levels.end(), l) != levels.end()) {
            snapshots[l] = {x, y, z};
        }
        if (l == max_level) {
            break;
        }
        f.apply_batch(x, y, z);
    }
    CurveTable table;
    table.reserve(points * levels.size());
    for (size_t k = 0; k < points; k++) {
        for (size_t l : levels) {
            const auto &s = snapshots.at(l);
            table.push_back(CurveRow{t_grid[k], l, s[0][k], s[1][k], s[2][k]});
        }
    }
    return table;
}

std::string curves_csv(const CurveTable &table, int precision) {
    std::ostringstream ss;
    ss.precision(precision);
    ss << "gamma_t,level,x,y,z\n";
    for (const CurveRow &r : table) {
        ss << r.gamma_t << "," << r.level << "," << r.x << "," << r.y << "," << r.z << "\n";
    }
    return ss.str();
}

}  // namespace qecmap
