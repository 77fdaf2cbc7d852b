// Independent reference oracles: plain memoized recursions written straight
// from the distance definitions, and exhaustive enumeration over matching
// sequences with its own three-case point-cost evaluator. Nothing here
// shares code with the library's DP paths.
#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "subtraj/cost_model.hpp"
#include "subtraj/trajectory.hpp"

namespace testsupport {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Memoized recursive edit distance: dist(i, j) over prefix lengths with
/// delete/insert borders.
inline double ref_edit_distance(const subtraj::trajectory& q, const subtraj::trajectory& d,
                                const subtraj::cost_model& model) {
    std::map<std::pair<int, int>, double> memo;
    std::function<double(int, int)> rec = [&](int i, int j) -> double {
        if (i == 0 && j == 0) return 0.0;
        const auto it = memo.find({i, j});
        if (it != memo.end()) return it->second;
        double v;
        if (i == 0)
            v = rec(0, j - 1) + model.ins(d.at(j));
        else if (j == 0)
            v = rec(i - 1, 0) + model.del(q.at(i));
        else
            v = std::min({rec(i - 1, j - 1) + model.sub(q.at(i), d.at(j)),
                          rec(i, j - 1) + model.ins(d.at(j)),
                          rec(i - 1, j) + model.del(q.at(i))});
        memo[{i, j}] = v;
        return v;
    };
    return rec(q.size(), d.size());
}

inline double ref_dtw_distance(const subtraj::trajectory& q, const subtraj::trajectory& d,
                               const subtraj::cost_model& model) {
    std::map<std::pair<int, int>, double> memo;
    std::function<double(int, int)> rec = [&](int i, int j) -> double {
        const auto it = memo.find({i, j});
        if (it != memo.end()) return it->second;
        double v = model.sub(q.at(i), d.at(j));
        if (i == 1 && j == 1)
            ;  // just the point cost
        else if (i == 1)
            v += rec(1, j - 1);
        else if (j == 1)
            v += rec(i - 1, 1);
        else
            v += std::min({rec(i - 1, j), rec(i, j - 1), rec(i - 1, j - 1)});
        memo[{i, j}] = v;
        return v;
    };
    return rec(q.size(), d.size());
}

inline double ref_frechet_distance(const subtraj::trajectory& q, const subtraj::trajectory& d,
                                   const subtraj::cost_model& model) {
    std::map<std::pair<int, int>, double> memo;
    std::function<double(int, int)> rec = [&](int i, int j) -> double {
        const auto it = memo.find({i, j});
        if (it != memo.end()) return it->second;
        const double c = model.sub(q.at(i), d.at(j));
        double v;
        if (i == 1 && j == 1)
            v = c;
        else if (i == 1)
            v = std::max(rec(1, j - 1), c);
        else if (j == 1)
            v = std::max(rec(i - 1, 1), c);
        else
            v = std::max(std::min({rec(i - 1, j), rec(i, j - 1), rec(i - 1, j - 1)}), c);
        memo[{i, j}] = v;
        return v;
    };
    return rec(q.size(), d.size());
}

inline double ref_full_distance(const subtraj::trajectory& q, const subtraj::trajectory& d,
                                const subtraj::cost_model& model) {
    switch (model.family) {
        case subtraj::cost_family::edit: return ref_edit_distance(q, d, model);
        case subtraj::cost_family::warp: return ref_dtw_distance(q, d, model);
        case subtraj::cost_family::frechet: return ref_frechet_distance(q, d, model);
    }
    return kInf;
}

/// Point conversion cost per the three-case definition, evaluated from the
/// raw cost primitives. cur = a_i, prev = a_{i-1} (prev = 0 for i = 1).
inline double ref_point_cost(const subtraj::trajectory& q, const subtraj::trajectory& d,
                             const subtraj::cost_model& model, int i, int cur, int prev) {
    using subtraj::cost_family;
    if (i == 1) return model.sub(q.at(1), d.at(cur));
    if (model.family == cost_family::edit) {
        if (prev == cur) return model.del(q.at(i));
        double inserted = 0.0;
        for (int p = prev + 1; p < cur; ++p) inserted += model.ins(d.at(p));
        return inserted + model.sub(q.at(i), d.at(cur));
    }
    const bool bottleneck = model.family == cost_family::frechet;
    if (prev == cur || prev == cur - 1) return model.sub(q.at(i), d.at(cur));
    // Skipped points d[prev+1 : cur-1] are split between query points i-1
    // and i at the best position t.
    double best_gap = kInf;
    for (int t = prev; t < cur; ++t) {
        double gap = 0.0;
        for (int p = prev + 1; p <= t; ++p) {
            const double c = model.sub(q.at(i - 1), d.at(p));
            gap = bottleneck ? std::max(gap, c) : gap + c;
        }
        for (int p = t + 1; p < cur; ++p) {
            const double c = model.sub(q.at(i), d.at(p));
            gap = bottleneck ? std::max(gap, c) : gap + c;
        }
        best_gap = std::min(best_gap, gap);
    }
    const double sub = model.sub(q.at(i), d.at(cur));
    return bottleneck ? std::max(best_gap, sub) : best_gap + sub;
}

inline double ref_sequence_cost(const subtraj::trajectory& q, const subtraj::trajectory& d,
                                const subtraj::cost_model& model, const std::vector<int>& a) {
    const bool bottleneck = model.family == subtraj::cost_family::frechet;
    double total = 0.0;
    int start_at = 1;
    if (model.family == subtraj::cost_family::edit) {
        // Leading run at the range start: one member is substituted (any
        // one; the first point may be deleted per the equivalence proofs),
        // the others are deleted.
        int run = 1;
        while (run < static_cast<int>(a.size()) && a[static_cast<std::size_t>(run)] == a.front())
            ++run;
        double deletions = 0.0;
        for (int k = 1; k <= run; ++k) deletions += model.del(q.at(k));
        double best = kInf;
        for (int u = 1; u <= run; ++u)
            best = std::min(best, deletions - model.del(q.at(u)) +
                                      model.sub(q.at(u), d.at(a.front())));
        total = best;
        start_at = run + 1;
    }
    int prev = start_at == 1 ? 0 : a.front();
    for (int i = start_at; i <= static_cast<int>(a.size()); ++i) {
        const double c = ref_point_cost(q, d, model, i, a[static_cast<std::size_t>(i - 1)], prev);
        total = bottleneck ? std::max(total, c) : total + c;
        prev = a[static_cast<std::size_t>(i - 1)];
    }
    return total;
}

/// Calls fn for every nondecreasing sequence a_1..a_m over [1, n].
inline void for_each_sequence(int m, int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> a(static_cast<std::size_t>(m), 1);
    std::function<void(int, int)> rec = [&](int i, int lo) {
        if (i == m) {
            fn(a);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            a[static_cast<std::size_t>(i)] = v;
            rec(i + 1, v);
        }
    };
    rec(0, 1);
}

/// Minimum sequence cost by exhaustive enumeration; optionally restricted
/// to sequences with a fixed last match (a_m = fixed_end).
inline double ref_best_sequence_cost(const subtraj::trajectory& q, const subtraj::trajectory& d,
                                     const subtraj::cost_model& model, int fixed_end = 0) {
    double best = kInf;
    for_each_sequence(q.size(), d.size(), [&](const std::vector<int>& a) {
        if (fixed_end != 0 && a.back() != fixed_end) return;
        best = std::min(best, ref_sequence_cost(q, d, model, a));
    });
    return best;
}

}  // namespace testsupport
