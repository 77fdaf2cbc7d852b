#pragma once

#include <functional>
#include <string>

#include "subtraj/point.hpp"

namespace subtraj {

/// Which recurrence family a distance function belongs to.
///
/// edit    - independent sub/ins/del primitives (WED, EDR, ERP), sum-aggregated
/// warp    - DTW-style: delete/insert costs collapse into substitution costs,
///           sum-aggregated
/// frechet - substitution-only costs, max-aggregated (bottleneck objective)
enum class cost_family { edit, warp, frechet };

/// A distance-function descriptor. The callbacks must be pure, reentrant and
/// return finite nonnegative values; models are immutable and shareable
/// across threads. ins/del are used by the edit family only.
///
/// Exactness note for custom edit models: the engines assume
/// sub(a, b) <= del(a) + ins(b) for all point pairs (substituting never costs
/// more than deleting plus inserting). Every model constructed here satisfies
/// it; a wed_custom model that violates it may make the subtrajectory engines
/// undershoot the true optimum.
struct cost_model {
    cost_family family = cost_family::edit;
    std::string name = "wed";
    point_metric sub;
    std::function<double(const point&)> ins;
    std::function<double(const point&)> del;
};

/// WED with caller-supplied cost functions.
cost_model wed_custom(point_metric sub, std::function<double(const point&)> ins,
                      std::function<double(const point&)> del);

/// Unit-cost WED: sub 0/1 by equality, ins = del = 1. Works on both point kinds.
cost_model wed_unit();

/// EDR: ins = del = 1; sub = 0 iff euclidean distance < epsilon, else 1.
cost_model edr(double epsilon);

/// ERP with reference point q_c: sub = euclidean, del(p) = ins(p) = d(p, q_c).
cost_model erp(point reference);

/// DTW over the given point metric (euclidean by default).
cost_model dtw(point_metric metric = euclidean_metric());

/// Discrete Frechet distance over the given point metric.
cost_model frechet(point_metric metric = euclidean_metric());

/// Parses a CLI model spec: "dtw", "frechet", "edr:eps=<v>",
/// "erp:cx=<v>,cy=<v>", "wed:unit". Throws subtraj::error on bad input.
cost_model parse_model(const std::string& spec);

}  // namespace subtraj
