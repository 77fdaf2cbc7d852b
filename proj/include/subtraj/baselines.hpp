#pragma once

#include "subtraj/cma.hpp"
#include "subtraj/cost_model.hpp"
#include "subtraj/trajectory.hpp"

namespace subtraj {

/// Exact O(mn^2) reference: for each anchor i runs the raw full-distance DP
/// against data[i:n] and keeps the global best. Any family.
search_result exact_s(const trajectory& query, const trajectory& data,
                      const cost_model& model);

/// Spring: the DTW subsequence DP with the i = 1 row reinitialized to
/// sub(query[1], data[j]); start recovered by backtracking the matrix.
/// Warp family semantics only.
search_result spring(const trajectory& query, const trajectory& data,
                     const point_metric& metric);

/// Greedy backtracking for the Frechet objective: best-first expansion over
/// the pairwise cost matrix, keyed by current bottleneck, from any row-1
/// start cell until row m is reached.
search_result greedy_backtracking(const trajectory& query, const trajectory& data,
                                  const point_metric& metric);

}  // namespace subtraj
