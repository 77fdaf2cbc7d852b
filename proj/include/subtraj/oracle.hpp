#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subtraj/cma.hpp"
#include "subtraj/cost_model.hpp"
#include "subtraj/trajectory.hpp"

namespace subtraj {

/// Every subtrajectory of one data trajectory ranked by distance to the
/// query: the ground truth a search result is judged against.
struct ranked_subtrajectories {
    struct entry {
        subtraj_range range;
        double distance;
    };

    std::string data_id;
    std::vector<entry> entries;  // ascending by distance, then (start, end)
};

/// Enumerates all n(n+1)/2 subtrajectories via full_distance and sorts them.
/// Throws budget_exceeded_error when the range count exceeds max_ranges.
ranked_subtrajectories brute_force_all(const trajectory& query, const trajectory& data,
                                       const cost_model& model,
                                       std::int64_t max_ranges = 50000);

struct quality {
    double ar;        // found distance / optimal distance (1 when both are 0)
    std::int64_t mr;  // 1-based rank of the found distance (first equal entry)
    double rr;        // fraction of subtrajectories strictly better than found
};

/// Scores a search result against the full ranking. Distances within
/// rel_tol (relative) are treated as equal, so exact algorithms score
/// (1, 1, 0) under floating-point accumulation noise.
quality quality_metrics(const search_result& found, const ranked_subtrajectories& truth,
                        double rel_tol = 1e-9);

}  // namespace subtraj
