#include "subtraj/full_distance.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace subtraj {

namespace detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double edit_span(std::span<const point> q, std::span<const point> d, const cost_model& model) {
    // row[j] = wed(q[1:i], d[1:j]); row 0 is the pure-insertion border.
    std::vector<double> row(d.size() + 1);
    row[0] = 0.0;
    for (std::size_t j = 1; j <= d.size(); ++j) row[j] = row[j - 1] + model.ins(d[j - 1]);
    for (std::size_t i = 1; i <= q.size(); ++i) {
        double diag = row[0];
        row[0] += model.del(q[i - 1]);
        for (std::size_t j = 1; j <= d.size(); ++j) {
            const double sub = diag + model.sub(q[i - 1], d[j - 1]);
            const double ins = row[j - 1] + model.ins(d[j - 1]);
            const double del = row[j] + model.del(q[i - 1]);
            diag = row[j];
            row[j] = std::min({sub, ins, del});
        }
    }
    return row[d.size()];
}

double warp_span(std::span<const point> q, std::span<const point> d, const cost_model& model) {
    std::vector<double> row(d.size());
    row[0] = model.sub(q[0], d[0]);
    for (std::size_t j = 1; j < d.size(); ++j) row[j] = row[j - 1] + model.sub(q[0], d[j]);
    for (std::size_t i = 1; i < q.size(); ++i) {
        double diag = row[0];
        row[0] += model.sub(q[i], d[0]);
        for (std::size_t j = 1; j < d.size(); ++j) {
            const double best = std::min({diag, row[j - 1], row[j]});
            diag = row[j];
            row[j] = best + model.sub(q[i], d[j]);
        }
    }
    return row[d.size() - 1];
}

double frechet_span(std::span<const point> q, std::span<const point> d, const cost_model& model) {
    std::vector<double> row(d.size());
    row[0] = model.sub(q[0], d[0]);
    for (std::size_t j = 1; j < d.size(); ++j) row[j] = std::max(row[j - 1], model.sub(q[0], d[j]));
    for (std::size_t i = 1; i < q.size(); ++i) {
        double diag = row[0];
        row[0] = std::max(row[0], model.sub(q[i], d[0]));
        for (std::size_t j = 1; j < d.size(); ++j) {
            const double best = std::min({diag, row[j - 1], row[j]});
            diag = row[j];
            row[j] = std::max(best, model.sub(q[i], d[j]));
        }
    }
    return row[d.size() - 1];
}

}  // namespace

double full_distance_span(std::span<const point> q, std::span<const point> d,
                          const cost_model& model) {
    if (q.empty() || d.empty()) {
        if (model.family == cost_family::edit) {
            double total = 0.0;
            for (const point& p : q) total += model.del(p);
            for (const point& p : d) total += model.ins(p);
            return total;
        }
        return q.empty() && d.empty() ? 0.0 : kInf;
    }
    switch (model.family) {
        case cost_family::edit: return edit_span(q, d, model);
        case cost_family::warp: return warp_span(q, d, model);
        case cost_family::frechet: return frechet_span(q, d, model);
    }
    return kInf;  // unreachable
}

std::pair<double, int> best_over_prefixes(std::span<const point> q,
                                          std::span<const point> d_suffix,
                                          const cost_model& model) {
    // Runs the same row DP but reads the whole final row: row m at column y
    // is the distance between q and the prefix d_suffix[1:y].
    const std::size_t n = d_suffix.size();
    std::vector<double> row(n + 1);
    const bool edit = model.family == cost_family::edit;
    const bool bottleneck = model.family == cost_family::frechet;

    if (edit) {
        row[0] = 0.0;
        for (std::size_t j = 1; j <= n; ++j) row[j] = row[j - 1] + model.ins(d_suffix[j - 1]);
        for (std::size_t i = 1; i <= q.size(); ++i) {
            double diag = row[0];
            row[0] += model.del(q[i - 1]);
            for (std::size_t j = 1; j <= n; ++j) {
                const double sub = diag + model.sub(q[i - 1], d_suffix[j - 1]);
                const double ins = row[j - 1] + model.ins(d_suffix[j - 1]);
                const double del = row[j] + model.del(q[i - 1]);
                diag = row[j];
                row[j] = std::min({sub, ins, del});
            }
        }
    } else {
        row[0] = kInf;
        for (std::size_t j = 1; j <= n; ++j) {
            const double c = model.sub(q[0], d_suffix[j - 1]);
            row[j] = j == 1 ? c : (bottleneck ? std::max(row[j - 1], c) : row[j - 1] + c);
        }
        for (std::size_t i = 1; i < q.size(); ++i) {
            double diag = row[1];
            const double first = model.sub(q[i], d_suffix[0]);
            row[1] = bottleneck ? std::max(row[1], first) : row[1] + first;
            for (std::size_t j = 2; j <= n; ++j) {
                const double best = std::min({diag, row[j - 1], row[j]});
                const double c = model.sub(q[i], d_suffix[j - 1]);
                diag = row[j];
                row[j] = bottleneck ? std::max(best, c) : best + c;
            }
        }
    }

    double best = kInf;
    int best_y = 1;
    for (std::size_t y = 1; y <= n; ++y) {
        if (row[y] < best) {
            best = row[y];
            best_y = static_cast<int>(y);
        }
    }
    return {best, best_y};
}

}  // namespace detail

double full_distance(const trajectory& query, const trajectory& data, const cost_model& model) {
    return detail::full_distance_span(query.points(), data.points(), model);
}

double full_distance(const trajectory& query, const trajectory& data, subtraj_range data_range,
                     const cost_model& model) {
    return detail::full_distance_span(query.points(), data.view(data_range), model);
}

double full_distance(const trajectory& query, subtraj_range query_range, const trajectory& data,
                     subtraj_range data_range, const cost_model& model) {
    return detail::full_distance_span(query.view(query_range), data.view(data_range), model);
}

}  // namespace subtraj
