#include "subtraj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "subtraj/full_distance.hpp"

namespace subtraj {

ranked_subtrajectories brute_force_all(const trajectory& query, const trajectory& data,
                                       const cost_model& model, std::int64_t max_ranges) {
    const std::int64_t n = data.size();
    const std::int64_t total = n * (n + 1) / 2;
    if (total > max_ranges)
        throw budget_exceeded_error("enumerating " + std::to_string(total) +
                                    " subtrajectories exceeds the budget of " +
                                    std::to_string(max_ranges));

    ranked_subtrajectories out;
    out.data_id = data.id();
    out.entries.reserve(static_cast<std::size_t>(total));
    for (int i = 1; i <= data.size(); ++i) {
        for (int j = i; j <= data.size(); ++j) {
            out.entries.push_back(
                {{i, j}, full_distance(query, data, subtraj_range{i, j}, model)});
        }
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const ranked_subtrajectories::entry& a, const ranked_subtrajectories::entry& b) {
                  if (a.distance != b.distance) return a.distance < b.distance;
                  if (a.range.start != b.range.start) return a.range.start < b.range.start;
                  return a.range.end < b.range.end;
              });
    return out;
}

quality quality_metrics(const search_result& found, const ranked_subtrajectories& truth,
                        double rel_tol) {
    if (found.data_id != truth.data_id)
        throw pair_mismatch_error("result for trajectory '" + found.data_id +
                                  "' scored against ranking of '" + truth.data_id + "'");

    const double value = found.distance;
    const auto nearly_equal = [rel_tol](double a, double b) {
        return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
    };

    std::int64_t strictly_better = 0;
    for (const auto& e : truth.entries) {
        if (e.distance < value && !nearly_equal(e.distance, value)) ++strictly_better;
    }

    quality q;
    const double head = truth.entries.front().distance;
    if (nearly_equal(head, 0.0))
        q.ar = nearly_equal(value, 0.0) ? 1.0 : std::numeric_limits<double>::infinity();
    else
        q.ar = value / head;
    q.mr = strictly_better + 1;
    q.rr = static_cast<double>(strictly_better) / static_cast<double>(truth.entries.size());
    return q;
}

}  // namespace subtraj
