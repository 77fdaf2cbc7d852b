#include "subtraj/cma.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "subtraj/errors.hpp"

namespace subtraj {

namespace {

// Branch provenance per cell, recorded only when a reconstruction is
// requested. restart_sub is the edit-family column-1 case that substitutes
// the current query point and deletes the whole prefix.
enum class branch : unsigned char { start, del, sub, ins, restart_sub };

struct engine_output {
    double best = std::numeric_limits<double>::infinity();
    int best_end = 1;
    int best_start = 1;
};

/// Runs the family recurrence row by row. Keeps O(n) state; optionally
/// materializes the full C/S tables and/or per-cell branch tags.
class cma_engine {
public:
    cma_engine(const trajectory& query, const trajectory& data, const cost_model& model,
               bool keep_tables, bool keep_tags)
        : q_(query), d_(data), model_(model), m_(query.size()), n_(data.size()),
          keep_tables_(keep_tables), keep_tags_(keep_tags) {
        if (keep_tables_) {
            cost_table_.assign(static_cast<std::size_t>(m_) * n_, 0.0);
            start_table_.assign(static_cast<std::size_t>(m_) * n_, 0);
        }
        if (keep_tags_) tags_.assign(static_cast<std::size_t>(m_) * n_, branch::start);
        if (model_.family == cost_family::edit) {
            // Cumulative deletion costs del(q[1:i]), used by the column-1 case.
            del_prefix_.assign(static_cast<std::size_t>(m_) + 1, 0.0);
            for (int i = 1; i <= m_; ++i)
                del_prefix_[i] = del_prefix_[i - 1] + model_.del(q_.at(i));
        }
    }

    engine_output run() {
        std::vector<double> prev_c(n_), cur_c(n_);
        std::vector<int> prev_s(n_), cur_s(n_);

        for (int j = 1; j <= n_; ++j) {
            cur_c[j - 1] = model_.sub(q_.at(1), d_.at(j));
            cur_s[j - 1] = j;
        }
        record_row(1, cur_c, cur_s);

        for (int i = 2; i <= m_; ++i) {
            prev_c.swap(cur_c);
            prev_s.swap(cur_s);
            switch (model_.family) {
                case cost_family::edit: edit_row(i, prev_c, prev_s, cur_c, cur_s); break;
                case cost_family::warp: warp_row(i, prev_c, prev_s, cur_c, cur_s); break;
                case cost_family::frechet: frechet_row(i, prev_c, prev_s, cur_c, cur_s); break;
            }
            record_row(i, cur_c, cur_s);
        }

        engine_output out;
        for (int j = 1; j <= n_; ++j) {
            if (cur_c[j - 1] < out.best) {
                out.best = cur_c[j - 1];
                out.best_end = j;
                out.best_start = cur_s[j - 1];
            }
        }
        return out;
    }

    cost_matrix take_cost_matrix() { return {m_, n_, std::move(cost_table_)}; }
    start_matrix take_start_matrix() { return {m_, n_, std::move(start_table_)}; }

    branch tag(int i, int j) const {
        return tags_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }

private:
    void record_row(int i, const std::vector<double>& c, const std::vector<int>& s) {
        if (!keep_tables_) return;
        std::copy(c.begin(), c.end(),
                  cost_table_.begin() + static_cast<std::size_t>(i - 1) * n_);
        std::copy(s.begin(), s.end(),
                  start_table_.begin() + static_cast<std::size_t>(i - 1) * n_);
    }

    void set_tag(int i, int j, branch b) {
        if (keep_tags_) tags_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = b;
    }

    // Branch preference on ties: substitute, then insert, then delete, then
    // restart. The restart branch substitutes q[i] at d[j] and deletes the
    // whole query prefix, opening a range at j. The published recurrence has
    // it only at j = 1, which loses optima whenever deleting a leading query
    // point is cheaper than substituting it anywhere (reachable under ERP);
    // carrying it at every column restores exactness against the raw
    // per-range DP.
    void edit_row(int i, const std::vector<double>& prev_c, const std::vector<int>& prev_s,
                  std::vector<double>& cur_c, std::vector<int>& cur_s) {
        const point& qi = q_.at(i);
        const double del_qi = model_.del(qi);
        const double deleted_prefix = del_prefix_[i - 1];

        {
            const double del = prev_c[0] + del_qi;
            const double restart = model_.sub(qi, d_.at(1)) + deleted_prefix;
            if (del <= restart) {
                cur_c[0] = del;
                set_tag(i, 1, branch::del);
            } else {
                cur_c[0] = restart;
                set_tag(i, 1, branch::restart_sub);
            }
            cur_s[0] = 1;
        }

        double sub_prev = model_.sub(qi, d_.at(1));
        for (int j = 2; j <= n_; ++j) {
            const double sub_cur = model_.sub(qi, d_.at(j));
            const double sub = prev_c[j - 2] + sub_cur;
            const double ins = cur_c[j - 2] + model_.ins(d_.at(j - 1)) - sub_prev + sub_cur;
            const double del = prev_c[j - 1] + del_qi;
            const double restart = sub_cur + deleted_prefix;
            if (sub <= ins && sub <= del && sub <= restart) {
                cur_c[j - 1] = sub;
                cur_s[j - 1] = prev_s[j - 2];
                set_tag(i, j, branch::sub);
            } else if (ins <= del && ins <= restart) {
                cur_c[j - 1] = ins;
                cur_s[j - 1] = cur_s[j - 2];
                set_tag(i, j, branch::ins);
            } else if (del <= restart) {
                cur_c[j - 1] = del;
                cur_s[j - 1] = prev_s[j - 1];
                set_tag(i, j, branch::del);
            } else {
                cur_c[j - 1] = restart;
                cur_s[j - 1] = j;
                set_tag(i, j, branch::restart_sub);
            }
            sub_prev = sub_cur;
        }
    }

    void warp_row(int i, const std::vector<double>& prev_c, const std::vector<int>& prev_s,
                  std::vector<double>& cur_c, std::vector<int>& cur_s) {
        const point& qi = q_.at(i);
        cur_c[0] = prev_c[0] + model_.sub(qi, d_.at(1));
        cur_s[0] = 1;
        set_tag(i, 1, branch::del);

        for (int j = 2; j <= n_; ++j) {
            const double sub_cur = model_.sub(qi, d_.at(j));
            pick_predecessor(i, j, prev_c, prev_s, cur_c, cur_s);
            cur_c[j - 1] += sub_cur;
        }
    }

    void frechet_row(int i, const std::vector<double>& prev_c, const std::vector<int>& prev_s,
                     std::vector<double>& cur_c, std::vector<int>& cur_s) {
        const point& qi = q_.at(i);
        cur_c[0] = std::max(prev_c[0], model_.sub(qi, d_.at(1)));
        cur_s[0] = 1;
        set_tag(i, 1, branch::del);

        for (int j = 2; j <= n_; ++j) {
            const double sub_cur = model_.sub(qi, d_.at(j));
            pick_predecessor(i, j, prev_c, prev_s, cur_c, cur_s);
            cur_c[j - 1] = std::max(cur_c[j - 1], sub_cur);
        }
    }

    /// Shared warp/frechet step: writes the minimal predecessor value of
    /// {C(i-1,j-1), C(i,j-1), C(i-1,j)} into cur_c[j-1] and propagates its
    /// start, preferring substitute, then insert, then delete.
    void pick_predecessor(int i, int j, const std::vector<double>& prev_c,
                          const std::vector<int>& prev_s, std::vector<double>& cur_c,
                          std::vector<int>& cur_s) {
        const double sub = prev_c[j - 2];
        const double ins = cur_c[j - 2];
        const double del = prev_c[j - 1];
        if (sub <= ins && sub <= del) {
            cur_c[j - 1] = sub;
            cur_s[j - 1] = prev_s[j - 2];
            set_tag(i, j, branch::sub);
        } else if (ins <= del) {
            cur_c[j - 1] = ins;
            cur_s[j - 1] = cur_s[j - 2];
            set_tag(i, j, branch::ins);
        } else {
            cur_c[j - 1] = del;
            cur_s[j - 1] = prev_s[j - 1];
            set_tag(i, j, branch::del);
        }
    }

    const trajectory& q_;
    const trajectory& d_;
    const cost_model& model_;
    int m_;
    int n_;
    bool keep_tables_;
    bool keep_tags_;
    std::vector<double> cost_table_;
    std::vector<int> start_table_;
    std::vector<branch> tags_;
    std::vector<double> del_prefix_;
};

}  // namespace

search_result cma_search(const trajectory& query, const trajectory& data,
                         const cost_model& model) {
    cma_engine engine(query, data, model, false, false);
    const engine_output out = engine.run();
    return {data.id(), {out.best_start, out.best_end}, out.best};
}

std::pair<cost_matrix, start_matrix> cma_matrices(const trajectory& query, const trajectory& data,
                                                  const cost_model& model) {
    cma_engine engine(query, data, model, true, false);
    engine.run();
    return {engine.take_cost_matrix(), engine.take_start_matrix()};
}

matching_sequence reconstruct_matching(const trajectory& query, const trajectory& data,
                                       const cost_model& model, int end) {
    if (end < 1 || end > data.size())
        throw index_out_of_range_error("end index " + std::to_string(end) +
                                       " outside [1, " + std::to_string(data.size()) + "]");
    cma_engine engine(query, data, model, false, true);
    engine.run();

    matching_sequence seq;
    seq.a.assign(static_cast<std::size_t>(query.size()), 0);
    int i = query.size();
    int j = end;
    while (true) {
        seq.a[static_cast<std::size_t>(i - 1)] = j;
        if (i == 1) break;
        // Walk left across insert cells: each one routed through (i, jj-1)
        // without changing the previous query point's match.
        int jj = j;
        while (engine.tag(i, jj) == branch::ins) --jj;
        const branch b = engine.tag(i, jj);
        if (b == branch::sub) {
            --i;
            j = jj - 1;
        } else if (b == branch::del) {
            --i;
            j = jj;
        } else {  // restart_sub: the whole prefix is deleted at column jj
            for (int k = 1; k < i; ++k) seq.a[static_cast<std::size_t>(k - 1)] = jj;
            break;
        }
    }
    return seq;
}

}  // namespace subtraj
