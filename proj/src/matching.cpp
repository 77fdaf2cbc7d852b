#include "subtraj/matching.hpp"

#include <algorithm>
#include <limits>

namespace subtraj {

namespace {

/// Insert cost of the skipped data points d[k+1 : j-1] when the previous
/// match sits at k and the current one at j, for the warp/frechet families:
/// each skipped point is absorbed by the previous or the current query
/// point, split at the best position t.
double warp_gap_cost(const trajectory& query, const trajectory& data, const cost_model& model,
                     int i, int k, int j, bool bottleneck) {
    double best = std::numeric_limits<double>::infinity();
    for (int t = k; t <= j - 1; ++t) {
        double left = 0.0;
        for (int p = k + 1; p <= t; ++p) {
            const double c = model.sub(query.at(i - 1), data.at(p));
            left = bottleneck ? std::max(left, c) : left + c;
        }
        double both = left;
        for (int p = t + 1; p <= j - 1; ++p) {
            const double c = model.sub(query.at(i), data.at(p));
            both = bottleneck ? std::max(both, c) : both + c;
        }
        best = std::min(best, both);
    }
    return best;
}

}  // namespace

double point_conversion_cost(const trajectory& query, const trajectory& data,
                             const cost_model& model, int i, int cur, int prev) {
    if (i == 1) return model.sub(query.at(1), data.at(cur));

    switch (model.family) {
        case cost_family::edit: {
            if (prev == cur) return model.del(query.at(i));
            if (prev == cur - 1) return model.sub(query.at(i), data.at(cur));
            double inserted = 0.0;
            for (int p = prev + 1; p <= cur - 1; ++p) inserted += model.ins(data.at(p));
            return inserted + model.sub(query.at(i), data.at(cur));
        }
        case cost_family::warp: {
            const double sub = model.sub(query.at(i), data.at(cur));
            if (prev >= cur - 1) return sub;
            return warp_gap_cost(query, data, model, i, prev, cur, false) + sub;
        }
        case cost_family::frechet: {
            const double sub = model.sub(query.at(i), data.at(cur));
            if (prev >= cur - 1) return sub;
            return std::max(warp_gap_cost(query, data, model, i, prev, cur, true), sub);
        }
    }
    return 0.0;  // unreachable
}

double conversion_cost(const trajectory& query, const trajectory& data,
                       const matching_sequence& seq, const cost_model& model) {
    validate_sequence(seq, query.size(), data.size());
    const bool bottleneck = model.family == cost_family::frechet;
    double total = 0.0;
    int start_at = 1;

    if (model.family == cost_family::edit) {
        // Leading run: all query points matched to the first data point of
        // the range. Exactly one of them is substituted and the rest are
        // deleted; deletions cost the same anywhere in the run, so the
        // substituted member is chosen freely.
        int run = 1;
        while (run < query.size() && seq.a[static_cast<std::size_t>(run)] == seq.a.front()) ++run;
        const point& anchor = data.at(seq.a.front());
        double deletions = 0.0;
        for (int k = 1; k <= run; ++k) deletions += model.del(query.at(k));
        double best = std::numeric_limits<double>::infinity();
        for (int u = 1; u <= run; ++u)
            best = std::min(best,
                            deletions - model.del(query.at(u)) + model.sub(query.at(u), anchor));
        total = best;
        start_at = run + 1;
    }

    int prev = start_at == 1 ? 0 : seq.a.front();
    for (int i = start_at; i <= query.size(); ++i) {
        const int cur = seq.a[static_cast<std::size_t>(i - 1)];
        const double c = point_conversion_cost(query, data, model, i, cur, prev);
        total = bottleneck ? std::max(total, c) : total + c;
        prev = cur;
    }
    return total;
}

double matching_cost(const trajectory& query, const trajectory& data,
                     const matching_sequence& seq, const cost_model& model) {
    double total = conversion_cost(query, data, seq, model);
    if (model.family == cost_family::frechet) return total;

    const int first = seq.a.front();
    const int last = seq.a.back();
    if (model.family == cost_family::edit) {
        for (int p = 1; p < first; ++p) total += model.ins(data.at(p));
        for (int p = last + 1; p <= data.size(); ++p) total += model.ins(data.at(p));
    } else {
        // Warp family: unmatched prefix/suffix points warp onto the first
        // and last query points.
        for (int p = 1; p < first; ++p) total += model.sub(query.at(1), data.at(p));
        for (int p = last + 1; p <= data.size(); ++p)
            total += model.sub(query.at(query.size()), data.at(p));
    }
    return total;
}

}  // namespace subtraj
