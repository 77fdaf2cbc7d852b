#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subtraj/cost_model.hpp"
#include "subtraj/trajectory.hpp"

namespace subtraj {

/// The DP cost table: C(i, j) is the minimum cost of converting query[1:i]
/// into a subtrajectory of data[1:j] with query point i matched to data
/// point j. Accessors are 1-based like everything else.
struct cost_matrix {
    int m = 0;
    int n = 0;
    std::vector<double> values;  // row-major, m * n

    double at(int i, int j) const {
        return values[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    }
};

/// The start table: s(i, j) is the data index matched by query point 1 under
/// the optimal partial matching ending at (i, j) - the start of the
/// candidate subtrajectory.
struct start_matrix {
    int m = 0;
    int n = 0;
    std::vector<int> values;

    int at(int i, int j) const {
        return values[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    }
};

/// Answer to one similar-subtrajectory query.
struct search_result {
    std::string data_id;
    subtraj_range range;
    double distance = 0.0;
};

/// Finds the data subtrajectory minimizing the model distance to the query.
/// O(mn) time, O(n) memory. Ties: smallest end index, then the start the
/// deterministic branch preference (substitute, insert, delete) propagates.
search_result cma_search(const trajectory& query, const trajectory& data,
                         const cost_model& model);

/// Full C and S tables for inspection and testing. cma_search is derivable
/// from them exactly: distance = min_j C(m, j), end = argmin, start = S(m, end).
std::pair<cost_matrix, start_matrix> cma_matrices(const trajectory& query,
                                                  const trajectory& data,
                                                  const cost_model& model);

/// Backtracks the branch taken at each cell into a valid nondecreasing
/// matching sequence with a_m = end whose conversion_cost equals C(m, end).
/// When end is the optimal end index, additionally a_1 = the optimal start.
matching_sequence reconstruct_matching(const trajectory& query, const trajectory& data,
                                       const cost_model& model, int end);

}  // namespace subtraj
