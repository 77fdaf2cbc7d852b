#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "subtraj/errors.hpp"

namespace subtraj {

enum class point_kind : unsigned char { planar, symbol };

/// A trajectory point: either a planar location or an opaque symbolic label.
/// All points of one trajectory share the same kind.
struct point {
    point_kind kind = point_kind::planar;
    double x = 0.0;
    double y = 0.0;
    std::string label;

    static point planar(double x, double y) { return point{point_kind::planar, x, y, {}}; }
    static point symbol(std::string label) {
        return point{point_kind::symbol, 0.0, 0.0, std::move(label)};
    }

    bool is_planar() const { return kind == point_kind::planar; }

    friend bool operator==(const point& a, const point& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == point_kind::planar) return a.x == b.x && a.y == b.y;
        return a.label == b.label;
    }
};

inline double euclidean(const point& a, const point& b) {
    if (!a.is_planar() || !b.is_planar())
        throw symbolic_points_error("euclidean distance requires planar points");
    return std::hypot(a.x - b.x, a.y - b.y);
}

using point_metric = std::function<double(const point&, const point&)>;

inline point_metric euclidean_metric() {
    return [](const point& a, const point& b) { return euclidean(a, b); };
}

/// 0/1 metric: 0 iff the points are equal (label equality for symbols,
/// exact coordinate equality for planar points).
inline point_metric equality_metric() {
    return [](const point& a, const point& b) { return a == b ? 0.0 : 1.0; };
}

}  // namespace subtraj
