#pragma once

#include "subtraj/cost_model.hpp"
#include "subtraj/trajectory.hpp"

namespace subtraj {

/// Cost of converting query point i (1-based) into data point a_i, given the
/// previous match a_{i-1} (ignored for i = 1). Resolves the delete /
/// substitute / insert-then-substitute case from prev vs cur and prices it
/// per the model family. For the frechet family the insert case aggregates
/// the skipped data points by max instead of sum.
double point_conversion_cost(const trajectory& query, const trajectory& data,
                             const cost_model& model, int i, int cur, int prev);

/// Conversion cost of one matching sequence: the per-point costs aggregated
/// by sum (edit/warp) or max (frechet), with no prefix/suffix insertion
/// terms. This is the subtrajectory objective: minimizing it over all valid
/// sequences gives the optimal subtrajectory distance. For the edit family
/// the leading run (query points sharing the first matched data point) is
/// priced at its cheapest realization: any one member substituted, the rest
/// deleted.
double conversion_cost(const trajectory& query, const trajectory& data,
                       const matching_sequence& seq, const cost_model& model);

/// Whole-pair matching cost of one sequence: conversion_cost plus the cost of
/// inserting the unmatched data prefix tau_d[1 : a_1 - 1] and suffix
/// tau_d[a_m + 1 : n]. Edit family prices inserted points with ins();
/// the warp family absorbs them into the first/last query point's
/// substitutions; the frechet family has no insertion term, so the two
/// costs coincide there.
double matching_cost(const trajectory& query, const trajectory& data,
                     const matching_sequence& seq, const cost_model& model);

}  // namespace subtraj
