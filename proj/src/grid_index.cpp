#include "subtraj/grid_index.hpp"

#include <cmath>

namespace subtraj {

namespace {

std::pair<std::int64_t, std::int64_t> cell_of(const point& p, double eps) {
    return {static_cast<std::int64_t>(std::floor(p.x / eps)),
            static_cast<std::int64_t>(std::floor(p.y / eps))};
}

}  // namespace

grid_index::grid_index(const trajectory& query, double epsilon)
    : eps_(epsilon), m_(query.size()) {
    if (epsilon <= 0.0) throw nonpositive_epsilon_error();
    if (query.kind() != point_kind::planar)
        throw symbolic_points_error("grid pruning requires planar points");
    for (int i = 1; i <= m_; ++i) cells_[cell_of(query.at(i), eps_)].push_back(i);
}

const std::vector<int>* grid_index::cell(std::int64_t cx, std::int64_t cy) const {
    const auto it = cells_.find({cx, cy});
    return it == cells_.end() ? nullptr : &it->second;
}

int grid_index::close_count(const trajectory& data) const {
    if (data.kind() != point_kind::planar)
        throw symbolic_points_error("grid pruning requires planar points");
    std::vector<char> close(static_cast<std::size_t>(m_), 0);
    int count = 0;
    for (const point& p : data.points()) {
        const auto [cx, cy] = cell_of(p, eps_);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const std::vector<int>* bucket = cell(cx + dx, cy + dy);
                if (!bucket) continue;
                for (int qi : *bucket) {
                    if (!close[static_cast<std::size_t>(qi - 1)]) {
                        close[static_cast<std::size_t>(qi - 1)] = 1;
                        ++count;
                    }
                }
            }
        }
        if (count == m_) break;
    }
    return count;
}

grid_index build_grid(const trajectory& query, double epsilon) {
    return grid_index(query, epsilon);
}

int gbp_close_count(const grid_index& grid, const trajectory& data) {
    return grid.close_count(data);
}

}  // namespace subtraj
