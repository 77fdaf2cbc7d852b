#include "subtraj/pruning.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "subtraj/grid_index.hpp"

namespace subtraj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Minimum conversion cost of one query point against any data point,
/// regardless of what the other points do.
double min_point_cost(const point& qp, const trajectory& data, const cost_model& model) {
    double best = kInf;
    for (const point& dp : data.points()) best = std::min(best, model.sub(qp, dp));
    if (model.family == cost_family::edit) best = std::min(best, model.del(qp));
    return best;
}

void run_over(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    const unsigned worker_count =
        std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    }
    for (std::thread& t : workers) t.join();
}

search_result run_engine(const search_engine& engine, const trajectory& q, const trajectory& d,
                         const cost_model& model) {
    return engine ? engine(q, d, model) : cma_search(q, d, model);
}

}  // namespace

std::vector<int> select_key_points(const trajectory& query, double rate) {
    if (rate <= 0.0 || rate > 1.0)
        throw std::invalid_argument("key-point rate must lie in (0, 1]");
    const int m = query.size();
    const int count = static_cast<int>(std::ceil(rate * m));
    std::vector<int> keys;
    keys.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        keys.push_back(1 + static_cast<int>(static_cast<std::int64_t>(k) * m / count));
    return keys;
}

double kpf_lower_bound(const trajectory& query, const trajectory& data, const cost_model& model,
                       const prune_config& config) {
    const std::vector<int> keys = select_key_points(query, config.kpf_rate);
    if (model.family == cost_family::frechet) {
        // A bottleneck does not scale with the sampling rate; both modes use
        // the max over key points, which is always admissible.
        double bound = 0.0;
        for (int i : keys) bound = std::max(bound, min_point_cost(query.at(i), data, model));
        return bound;
    }
    double sum = 0.0;
    for (int i : keys) sum += min_point_cost(query.at(i), data, model);
    if (config.mode == kpf_mode::estimated) {
        const double r = static_cast<double>(keys.size()) / query.size();
        return sum / r;
    }
    return sum;
}

search_result search_database(const trajectory& query, std::span<const trajectory> trajectories,
                              const cost_model& model, const prune_config& config, int threads,
                              prune_stats* stats, const search_engine& engine) {
    if (trajectories.empty()) throw empty_database_error();

    std::optional<grid_index> grid;
    if (config.enable_gbp) grid.emplace(query, config.grid_epsilon);
    const double close_needed = config.mu * query.size();

    std::mutex best_mutex;
    std::optional<search_result> best;
    std::atomic<double> best_snapshot{kInf};
    std::atomic<std::int64_t> gbp_skipped{0}, kpf_skipped{0}, searched{0};

    run_over(trajectories.size(), threads, [&](std::size_t idx) {
        const trajectory& data = trajectories[idx];
        if (grid && gbp_close_count(*grid, data) < close_needed) {
            gbp_skipped.fetch_add(1, std::memory_order_relaxed);
            return;
        }
        const double current = best_snapshot.load(std::memory_order_relaxed);
        if (config.enable_kpf && current < kInf &&
            kpf_lower_bound(query, data, model, config) >= current) {
            kpf_skipped.fetch_add(1, std::memory_order_relaxed);
            return;
        }
        const search_result found = run_engine(engine, query, data, model);
        searched.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(best_mutex);
        if (!best || found.distance < best->distance) {
            best = found;
            best_snapshot.store(found.distance, std::memory_order_relaxed);
        }
    });

    if (stats) *stats = {gbp_skipped.load(), kpf_skipped.load(), searched.load()};
    if (!best)
        throw error("pruning skipped every trajectory; relax mu or disable GBP");
    return *best;
}

std::vector<search_result> top_k_search(const trajectory& query,
                                        std::span<const trajectory> trajectories,
                                        const cost_model& model, int k,
                                        const prune_config& config, int threads,
                                        prune_stats* stats, const search_engine& engine) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (trajectories.empty()) throw empty_database_error();

    std::optional<grid_index> grid;
    if (config.enable_gbp) grid.emplace(query, config.grid_epsilon);
    const double close_needed = config.mu * query.size();

    std::mutex heap_mutex;
    // Max-heap on distance keeps the k smallest seen so far.
    std::vector<search_result> heap;
    const auto heap_cmp = [](const search_result& a, const search_result& b) {
        return a.distance < b.distance;
    };
    std::atomic<double> kth_snapshot{kInf};
    std::atomic<std::int64_t> gbp_skipped{0}, kpf_skipped{0}, searched{0};

    run_over(trajectories.size(), threads, [&](std::size_t idx) {
        const trajectory& data = trajectories[idx];
        if (grid && gbp_close_count(*grid, data) < close_needed) {
            gbp_skipped.fetch_add(1, std::memory_order_relaxed);
            return;
        }
        const double kth = kth_snapshot.load(std::memory_order_relaxed);
        if (config.enable_kpf && kth < kInf &&
            kpf_lower_bound(query, data, model, config) >= kth) {
            kpf_skipped.fetch_add(1, std::memory_order_relaxed);
            return;
        }
        const search_result found = run_engine(engine, query, data, model);
        searched.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(heap_mutex);
        if (heap.size() < static_cast<std::size_t>(k)) {
            heap.push_back(found);
            std::push_heap(heap.begin(), heap.end(), heap_cmp);
        } else if (found.distance < heap.front().distance) {
            std::pop_heap(heap.begin(), heap.end(), heap_cmp);
            heap.back() = found;
            std::push_heap(heap.begin(), heap.end(), heap_cmp);
        }
        if (heap.size() == static_cast<std::size_t>(k))
            kth_snapshot.store(heap.front().distance, std::memory_order_relaxed);
    });

    if (stats) *stats = {gbp_skipped.load(), kpf_skipped.load(), searched.load()};
    std::sort(heap.begin(), heap.end(), [](const search_result& a, const search_result& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return a.data_id < b.data_id;
    });
    return heap;
}

}  // namespace subtraj
