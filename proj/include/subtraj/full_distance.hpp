#pragma once

#include <span>

#include "subtraj/cost_model.hpp"
#include "subtraj/trajectory.hpp"

namespace subtraj {

/// Whole-pair trajectory distance Theta(query, data) with no subtrajectory
/// freedom, via the raw family recursion. O(mn) time, O(n) memory.
double full_distance(const trajectory& query, const trajectory& data,
                     const cost_model& model);

/// Distance between the whole query and data[range].
double full_distance(const trajectory& query, const trajectory& data,
                     subtraj_range data_range, const cost_model& model);

/// Fully range-qualified variant. Empty ranges follow the boundary
/// conventions of the definitions: for the edit family
/// dist(q, empty) = sum del(q[k]) and dist(empty, d) = sum ins(d[k]);
/// for warp/frechet an empty side yields +infinity unless both are empty.
double full_distance(const trajectory& query, subtraj_range query_range,
                     const trajectory& data, subtraj_range data_range,
                     const cost_model& model);

namespace detail {

double full_distance_span(std::span<const point> q, std::span<const point> d,
                          const cost_model& model);

/// min over y >= 1 of dist(q, d_suffix[1:y]) together with the minimizing y
/// (smallest on ties). One ExactS anchor iteration.
std::pair<double, int> best_over_prefixes(std::span<const point> q,
                                          std::span<const point> d_suffix,
                                          const cost_model& model);

}  // namespace detail

}  // namespace subtraj
