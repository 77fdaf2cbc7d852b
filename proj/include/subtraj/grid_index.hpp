#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "subtraj/trajectory.hpp"

namespace subtraj {

/// Spatial hash over the query's points: square cells of side epsilon keyed
/// by (floor(x/eps), floor(y/eps)). A query point is "close" to a data point
/// when its cell is the data point's cell or one of its 8 neighbors.
class grid_index {
public:
    grid_index(const trajectory& query, double epsilon);

    double epsilon() const { return eps_; }
    int query_length() const { return m_; }

    /// Number of distinct query points close to any point of data.
    int close_count(const trajectory& data) const;

    /// Query point indices (1-based) in cell (cx, cy), or nullptr.
    const std::vector<int>* cell(std::int64_t cx, std::int64_t cy) const;

private:
    struct key_hash {
        std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
            return std::hash<std::int64_t>()(k.first * 0x9e3779b97f4a7c15LL ^ k.second);
        }
    };

    double eps_;
    int m_;
    std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::vector<int>, key_hash> cells_;
};

grid_index build_grid(const trajectory& query, double epsilon);

int gbp_close_count(const grid_index& grid, const trajectory& data);

}  // namespace subtraj
