#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "subtraj/cma.hpp"
#include "subtraj/cost_model.hpp"
#include "subtraj/trajectory.hpp"

namespace subtraj {

enum class kpf_mode {
    /// Unscaled key-point sum: a provable lower bound, never prunes the optimum.
    safe,
    /// Key-point sum scaled by 1/r. Reproduces the published estimator; may
    /// overshoot the true bound and prune the optimum.
    estimated,
};

/// Database-scan pruning configuration. The parameter defaults follow the
/// published heuristic settings; exact results are guaranteed only with GBP
/// disabled and KPF in safe mode.
struct prune_config {
    double mu = 0.4;              // GBP survival threshold: close >= mu * m
    double grid_epsilon = 0.8e-4; // GBP cell side, coordinate units
    double kpf_rate = 0.05;       // key-point sampling ratio r in (0, 1]
    kpf_mode mode = kpf_mode::safe;
    bool enable_gbp = true;
    bool enable_kpf = true;
};

struct prune_stats {
    std::int64_t gbp_skipped = 0;
    std::int64_t kpf_skipped = 0;
    std::int64_t searched = 0;
};

/// ceil(r * m) evenly strided 1-based query indices, always starting at 1.
/// Deterministic: index k of the selection is 1 + floor(k * m / count).
std::vector<int> select_key_points(const trajectory& query, double rate);

/// Lower bound on the optimal subtrajectory distance from per-point minimum
/// conversion costs of the key points. Edit family: min(del(q_i), min_j
/// sub(q_i, d_j)) per point; warp family: min_j sub (delete costs collapse
/// into substitutions); frechet family: the max over key points of min_j sub
/// in both modes, since a bottleneck does not scale.
double kpf_lower_bound(const trajectory& query, const trajectory& data,
                       const cost_model& model, const prune_config& config);

/// Per-trajectory search engine used by the database scan (cma_search by
/// default; the CLI substitutes baselines here).
using search_engine =
    std::function<search_result(const trajectory&, const trajectory&, const cost_model&)>;

/// Scans the database keeping the best subtrajectory, skipping trajectories
/// by GBP (too few query points nearby) and KPF (lower bound already at or
/// above the current best). threads > 1 parallelizes over trajectories; the
/// distance found is identical in any case, single-threaded runs also pin
/// the reported id/range under ties.
search_result search_database(const trajectory& query,
                              std::span<const trajectory> trajectories,
                              const cost_model& model, const prune_config& config,
                              int threads = 1, prune_stats* stats = nullptr,
                              const search_engine& engine = {});

/// The k best per-trajectory results (at most one per data trajectory),
/// ascending by distance. KPF compares bounds against the current k-th best.
std::vector<search_result> top_k_search(const trajectory& query,
                                        std::span<const trajectory> trajectories,
                                        const cost_model& model, int k,
                                        const prune_config& config, int threads = 1,
                                        prune_stats* stats = nullptr,
                                        const search_engine& engine = {});

}  // namespace subtraj
