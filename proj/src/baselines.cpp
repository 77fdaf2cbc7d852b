#include "subtraj/baselines.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "subtraj/errors.hpp"
#include "subtraj/full_distance.hpp"

namespace subtraj {

search_result exact_s(const trajectory& query, const trajectory& data, const cost_model& model) {
    const int n = data.size();
    double best = std::numeric_limits<double>::infinity();
    int best_start = 1, best_end = 1;
    const auto points = std::span<const point>(data.points());
    for (int anchor = 1; anchor <= n; ++anchor) {
        const auto [dist, y] = detail::best_over_prefixes(
            query.points(), points.subspan(static_cast<std::size_t>(anchor - 1)), model);
        if (dist < best) {
            best = dist;
            best_start = anchor;
            best_end = anchor + y - 1;
        }
    }
    return {data.id(), {best_start, best_end}, best};
}

search_result spring(const trajectory& query, const trajectory& data,
                     const point_metric& metric) {
    const int m = query.size();
    const int n = data.size();

    // Full DTW matrix with the first row reinitialized per cell, so every
    // column may start a match.
    std::vector<double> c(static_cast<std::size_t>(m) * n);
    auto cell = [&](int i, int j) -> double& {
        return c[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    };
    for (int j = 1; j <= n; ++j) cell(1, j) = metric(query.at(1), data.at(j));
    for (int i = 2; i <= m; ++i) {
        cell(i, 1) = cell(i - 1, 1) + metric(query.at(i), data.at(1));
        for (int j = 2; j <= n; ++j) {
            cell(i, j) = std::min({cell(i - 1, j - 1), cell(i, j - 1), cell(i - 1, j)}) +
                         metric(query.at(i), data.at(j));
        }
    }

    int end = 1;
    for (int j = 2; j <= n; ++j)
        if (cell(m, j) < cell(m, end)) end = j;
    const double best = cell(m, end);

    // Recover the start by walking minimal predecessors back to row 1.
    int i = m, j = end;
    while (i > 1) {
        if (j == 1) {
            --i;
            continue;
        }
        const double diag = cell(i - 1, j - 1);
        const double left = cell(i, j - 1);
        const double up = cell(i - 1, j);
        if (diag <= left && diag <= up) {
            --i;
            --j;
        } else if (left <= up) {
            --j;
        } else {
            --i;
        }
    }
    return {data.id(), {j, end}, best};
}

search_result greedy_backtracking(const trajectory& query, const trajectory& data,
                                  const point_metric& metric) {
    const int m = query.size();
    const int n = data.size();

    struct node {
        double bottleneck;
        int i, j;
        int start;
        bool operator>(const node& o) const {
            if (bottleneck != o.bottleneck) return bottleneck > o.bottleneck;
            if (i != o.i) return i > o.i;
            return j > o.j;
        }
    };
    std::priority_queue<node, std::vector<node>, std::greater<node>> frontier;
    std::vector<char> settled(static_cast<std::size_t>(m) * n, 0);
    auto idx = [&](int i, int j) { return static_cast<std::size_t>(i - 1) * n + (j - 1); };

    for (int j = 1; j <= n; ++j)
        frontier.push({metric(query.at(1), data.at(j)), 1, j, j});

    while (!frontier.empty()) {
        const node cur = frontier.top();
        frontier.pop();
        if (settled[idx(cur.i, cur.j)]) continue;
        settled[idx(cur.i, cur.j)] = 1;
        if (cur.i == m) return {data.id(), {cur.start, cur.j}, cur.bottleneck};

        const auto relax = [&](int i, int j) {
            if (i > m || j > n || settled[idx(i, j)]) return;
            frontier.push({std::max(cur.bottleneck, metric(query.at(i), data.at(j))), i, j,
                           cur.start});
        };
        relax(cur.i + 1, cur.j);      // next query point, same data point
        relax(cur.i, cur.j + 1);      // same query point, next data point
        relax(cur.i + 1, cur.j + 1);  // advance both
    }
    throw error("greedy backtracking failed to reach the final query point");
}

}  // namespace subtraj
