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

#ifndef QECMAP_DYNAMICS_H
#define QECMAP_DYNAMICS_H

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qecmap/channel.h"
#include "qecmap/polymap.h"

namespace qecmap {

/// Single-variable real polynomial, coefficients in ascending powers.
class Polynomial1 {
   public:
    Polynomial1() = default;
    explicit Polynomial1(std::vector<double> ascending) : c_(std::move(ascending)) {
    }

    const std::vector<double> &coefficients() const {
        return c_;
    }
    /// Coefficient of v^k (zero past the end).
    double operator[](size_t k) const {
        return k < c_.size() ? c_[k] : 0.0;
    }
    double operator()(double v) const;
    double derivative(double v) const;

    Polynomial1 operator*(const Polynomial1 &other) const;
    Polynomial1 operator+(const Polynomial1 &other) const;
    /// this(inner(v)).
    Polynomial1 compose(const Polynomial1 &inner) const;

   private:
    std::vector<double> c_;
};

/// Restriction of a single PolyMap component: v -> poly(v, v, v) when
/// `diagonal_line` is set, otherwise the polynomial must depend on the single
/// variable `var` only.
Polynomial1 restrict_to_variable(const Polynomial &p, size_t var);
Polynomial1 restrict_to_diagonal(const Polynomial &p);

enum class Stability { Attracting, Repelling, Marginal };
std::string stability_name(Stability s);

struct FixedPoint {
    double value = 0;
    Stability stability = Stability::Marginal;
    double derivative_magnitude = 0;
};

/// All fixed points of poly on [0,1], ascending.
std::vector<FixedPoint> fixed_points_1d(const Polynomial1 &poly);

DiagonalChannel iterate_map(const PolyMap &m, const DiagonalChannel &c, size_t levels);

/// No axis has a threshold between perfect protection and total loss.
struct NoFiniteThreshold : std::domain_error {
    using std::domain_error::domain_error;
};

enum class MapStructure { Separable, Swapped, Symmetric, Generic };
std::string structure_name(MapStructure s);
MapStructure detect_structure(const PolyMap &m);

struct AxisThreshold {
    /// Repelling fixed point bounding the basin of 1 (depolarizing value e^{-t*}).
    std::optional<double> critical_value;
    /// +inf when every t > 0 is protected, 0 when none is.
    double t_star = 0;
    /// Fixed points of the one-dimensional map used for this axis (empty for
    /// axes derived by rule or by the generic fallback).
    std::vector<FixedPoint> fixed_points;
};

struct ThresholdReport {
    std::string code;
    MapStructure structure = MapStructure::Generic;
    int period = 1;
    std::array<AxisThreshold, 3> axes;  // x, y, z
    double t_th = 0;
    double p_th = 0;
};

/// p = (3/4)(1 - e^{-t}).
double time_to_pauli_probability(double gamma_t);

/// Storage threshold under the symmetric depolarizing channel.
ThresholdReport storage_threshold(const PolyMap &m, const std::string &code_name = "");

struct GenericThresholdOptions {
    size_t max_iterations = 100000;
    double settle_tolerance = 1e-9;
    double bisection_width = 1e-8;
    double t_max = 10.0;
};

/// Per-axis thresholds by bisection over gamma*t on the iterated 3-D map.
/// Classification uses the even subsequence (two map applications per step),
/// so period-2 maps are handled.
std::array<double, 3> generic_axis_thresholds(const PolyMap &m, const GenericThresholdOptions &opt = {});

std::string threshold_report_json(const ThresholdReport &r);

struct LeadingOrderEstimate {
    /// Root of the second-order truncation crossing 1 - p.
    double estimate = 0;
    /// Smallest root in (0, 1] of correctable_prob(p) = 1 - p, if any.
    std::optional<double> exact_crossing;
};

/// Throws std::domain_error when the truncation yields no positive estimate.
LeadingOrderEstimate leading_order_threshold(const Polynomial1 &correctable_prob);

struct CurveRow {
    double gamma_t = 0;
    size_t level = 0;
    double x = 0, y = 0, z = 0;
};
using CurveTable = std::vector<CurveRow>;

/// Rows ordered by grid point, then by level as given.
CurveTable depolarizing_curves(const PolyMap &m, const std::vector<double> &t_grid, const std::vector<size_t> &levels);
std::string curves_csv(const CurveTable &table, int precision = 17);

}  // namespace qecmap

#endif
