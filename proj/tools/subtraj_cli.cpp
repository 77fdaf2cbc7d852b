// Command-line driver: dataset generation, similar-subtrajectory search,
// top-k queries, result verification against the brute-force ranking, and
// the CMA/ExactS scaling benchmark.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subtraj/baselines.hpp"
#include "subtraj/cma.hpp"
#include "subtraj/cost_model.hpp"
#include "subtraj/dataset.hpp"
#include "subtraj/full_distance.hpp"
#include "subtraj/oracle.hpp"
#include "subtraj/pruning.hpp"

namespace {

using json = nlohmann::json;
using clock_type = std::chrono::steady_clock;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitBudget = 4;

double elapsed_ms(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

std::int64_t oracle_budget() {
    if (const char* env = std::getenv("SUBTRAJ_BUDGET")) return std::strtoll(env, nullptr, 10);
    return 50000;
}

subtraj::search_engine make_engine(const std::string& algo, const subtraj::cost_model& model) {
    using namespace subtraj;
    if (algo == "cma")
        return [](const trajectory& q, const trajectory& d, const cost_model& m) {
            return cma_search(q, d, m);
        };
    if (algo == "exacts")
        return [](const trajectory& q, const trajectory& d, const cost_model& m) {
            return exact_s(q, d, m);
        };
    if (algo == "spring") {
        if (model.family != cost_family::warp)
            throw CLI::ValidationError("--algo spring requires a warp-family model (dtw)");
        return [](const trajectory& q, const trajectory& d, const cost_model& m) {
            return spring(q, d, m.sub);
        };
    }
    if (algo == "gb") {
        if (model.family != cost_family::frechet)
            throw CLI::ValidationError("--algo gb requires the frechet model");
        return [](const trajectory& q, const trajectory& d, const cost_model& m) {
            return greedy_backtracking(q, d, m.sub);
        };
    }
    throw CLI::ValidationError("unknown --algo '" + algo + "'");
}

const subtraj::trajectory& pick_query(const subtraj::dataset& queries, const std::string& id) {
    if (queries.trajectories.empty()) throw subtraj::error("query file contains no trajectories");
    if (id.empty()) return queries.trajectories.front();
    const subtraj::trajectory* t = queries.find(id);
    if (!t) throw subtraj::error("query id '" + id + "' not found");
    return *t;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw subtraj::error("cannot open '" + path + "' for writing");
    out << text;
}

struct search_options {
    std::string data_path, query_path, query_id, out_path;
    std::string model_spec = "dtw";
    std::string algo = "cma";
    int topk = 0;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    subtraj::prune_config config;
    bool no_gbp = false, no_kpf = false;
};

void add_search_options(CLI::App* cmd, search_options& opt) {
    cmd->add_option("--data", opt.data_path, "data trajectories CSV")->required();
    cmd->add_option("--query", opt.query_path, "query trajectories CSV")->required();
    cmd->add_option("--query-id", opt.query_id, "query id (default: first in file)");
    cmd->add_option("--model", opt.model_spec,
                    "dtw | frechet | edr:eps=<v> | erp:cx=<v>,cy=<v> | wed:unit");
    cmd->add_option("--algo", opt.algo, "cma | exacts | spring | gb");
    cmd->add_option("--mu", opt.config.mu, "GBP survival threshold");
    cmd->add_option("--grid-eps", opt.config.grid_epsilon, "GBP cell side length");
    cmd->add_option("--kpf-rate", opt.config.kpf_rate, "KPF key-point sampling rate");
    cmd->add_option("--kpf-mode", [&opt](const std::vector<std::string>& vals) {
        if (vals[0] == "safe") opt.config.mode = subtraj::kpf_mode::safe;
        else if (vals[0] == "estimated") opt.config.mode = subtraj::kpf_mode::estimated;
        else return false;
        return true;
    }, "safe | estimated");
    cmd->add_flag("--no-gbp", opt.no_gbp, "disable grid-based pruning");
    cmd->add_flag("--no-kpf", opt.no_kpf, "disable the key-point filter");
    cmd->add_option("--threads", opt.threads, "worker threads (default: machine parallelism; 1 pins ties)");
    cmd->add_option("-o,--output", opt.out_path, "output file (default stdout)");
}

json result_json(const subtraj::search_result& r) {
    return json{{"data_id", r.data_id},
                {"start", r.range.start},
                {"end", r.range.end},
                {"distance", r.distance}};
}

int run_search(search_options& opt) {
    using namespace subtraj;
    const dataset data = load_csv(opt.data_path);
    const dataset queries = load_csv(opt.query_path);
    const trajectory& query = pick_query(queries, opt.query_id);
    const cost_model model = parse_model(opt.model_spec);
    const search_engine engine = make_engine(opt.algo, model);

    opt.config.enable_gbp = !opt.no_gbp;
    opt.config.enable_kpf = !opt.no_kpf;
    const bool symbolic = query.kind() == point_kind::symbol ||
                          (!data.trajectories.empty() &&
                           data.trajectories.front().kind() == point_kind::symbol);
    if (opt.config.enable_gbp && symbolic) {
        std::cerr << "note: symbolic points, disabling grid pruning\n";
        opt.config.enable_gbp = false;
    }

    const auto start = clock_type::now();
    prune_stats stats;
    json report;
    report["query_id"] = query.id();
    report["model"] = model.name;
    report["algo"] = opt.algo;
    if (opt.topk > 0) {
        const std::vector<search_result> results = top_k_search(
            query, data.trajectories, model, opt.topk, opt.config, opt.threads, &stats, engine);
        json list = json::array();
        for (const search_result& r : results) list.push_back(result_json(r));
        report["results"] = list;
    } else {
        report["best"] = result_json(search_database(query, data.trajectories, model, opt.config,
                                                     opt.threads, &stats, engine));
    }
    report["pruning"] = json{{"gbp_skipped", stats.gbp_skipped},
                             {"kpf_skipped", stats.kpf_skipped},
                             {"searched", stats.searched}};
    report["wall_ms"] = elapsed_ms(start);
    write_output(opt.out_path, report.dump(2) + "\n");
    return 0;
}

int run_verify(search_options& opt) {
    using namespace subtraj;
    const dataset data = load_csv(opt.data_path);
    const dataset queries = load_csv(opt.query_path);
    const trajectory& query = pick_query(queries, opt.query_id);
    const cost_model model = parse_model(opt.model_spec);
    const search_engine engine = make_engine(opt.algo, model);
    const std::int64_t budget = oracle_budget();

    std::ostringstream csv;
    csv << "query_id,data_id,model,algo,ar,mr,rr\n";
    for (const trajectory& d : data.trajectories) {
        const search_result found = engine(query, d, model);
        const ranked_subtrajectories truth = brute_force_all(query, d, model, budget);
        const quality q = quality_metrics(found, truth);
        csv << query.id() << ',' << d.id() << ',' << model.name << ',' << opt.algo << ','
            << q.ar << ',' << q.mr << ',' << q.rr << '\n';
    }
    write_output(opt.out_path, csv.str());
    return 0;
}

struct bench_options {
    int m = 32;
    std::vector<int> n_values{1000, 2000, 4000};
    std::vector<std::string> algos{"cma", "exacts"};
    std::string model_spec = "dtw";
    int reps = 5;
    std::uint64_t seed = 7;
    std::string out_path;
};

int run_bench(const bench_options& opt) {
    using namespace subtraj;
    const cost_model model = parse_model(opt.model_spec);
    for (int n : opt.n_values)
        if (opt.m > n)
            throw CLI::ValidationError("--m must not exceed any value in --n");

    std::ostringstream csv;
    csv << "algo,model,m,n,mean_ms,stddev_ms\n";
    for (int n : opt.n_values) {
        generator_spec spec;
        spec.seed = opt.seed;
        spec.count = 2;
        spec.length_lo = spec.length_hi = n;
        spec.step_sigma = 0.005;
        dataset pair = generate(spec);
        const trajectory& data = pair.trajectories.front();
        std::vector<point> qpts(data.points().begin(), data.points().begin() + opt.m);
        // Perturbed copy of a data prefix: a near match to chase without an
        // exact containment.
        for (std::size_t i = 0; i < qpts.size(); ++i)
            qpts[i].x += 1e-4 * static_cast<double>(i % 3);
        const trajectory query = make_trajectory("q", std::move(qpts));

        for (const std::string& algo : opt.algos) {
            const search_engine engine = make_engine(algo, model);
            std::vector<double> times;
            for (int rep = 0; rep < opt.reps; ++rep) {
                const auto start = clock_type::now();
                const search_result r = engine(query, data, model);
                times.push_back(elapsed_ms(start));
                (void)r;
            }
            const double mean =
                std::accumulate(times.begin(), times.end(), 0.0) / times.size();
            double var = 0.0;
            for (double t : times) var += (t - mean) * (t - mean);
            const double stddev = std::sqrt(var / times.size());
            csv << algo << ',' << model.name << ',' << opt.m << ',' << n << ',' << mean << ','
                << stddev << '\n';
        }
    }
    write_output(opt.out_path, csv.str());
    return 0;
}

struct gen_options {
    subtraj::generator_spec spec;
    std::string kind = "walk";
    std::string len_range = "50:200";
    std::string out_path;
};

int run_gen(gen_options& opt) {
    using namespace subtraj;
    const std::size_t colon = opt.len_range.find(':');
    opt.spec.length_lo = std::atoi(opt.len_range.substr(0, colon).c_str());
    opt.spec.length_hi = colon == std::string::npos
                             ? opt.spec.length_lo
                             : std::atoi(opt.len_range.substr(colon + 1).c_str());
    opt.spec.model =
        opt.kind == "clustered" ? generator_model::clustered : generator_model::random_walk;
    const dataset ds = generate(opt.spec);
    std::ostringstream out;
    save_csv(ds, out);
    write_output(opt.out_path, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"similar-subtrajectory search"};
    app.require_subcommand(1);

    search_options search_opt;
    CLI::App* search_cmd = app.add_subcommand("search", "best subtrajectory over a database");
    add_search_options(search_cmd, search_opt);
    search_cmd->add_option("--topk", search_opt.topk, "return the K best instead of one");

    search_options topk_opt;
    CLI::App* topk_cmd = app.add_subcommand("topk", "K best subtrajectories over a database");
    add_search_options(topk_cmd, topk_opt);
    topk_cmd->add_option("-k,--topk", topk_opt.topk, "number of results")->required();

    search_options verify_opt;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "score a search algorithm against the full ranking");
    verify_cmd->add_option("--data", verify_opt.data_path, "data trajectories CSV")->required();
    verify_cmd->add_option("--query", verify_opt.query_path, "query trajectories CSV")->required();
    verify_cmd->add_option("--query-id", verify_opt.query_id, "query id");
    verify_cmd->add_option("--model", verify_opt.model_spec, "model spec");
    verify_cmd->add_option("--algo", verify_opt.algo, "cma | exacts | spring | gb");
    verify_cmd->add_option("-o,--output", verify_opt.out_path, "output CSV (default stdout)");

    bench_options bench_opt;
    CLI::App* bench_cmd = app.add_subcommand("bench", "scaling benchmark over data length");
    bench_cmd->add_option("--m", bench_opt.m, "query length");
    bench_cmd->add_option("--n", bench_opt.n_values, "data lengths")->delimiter(',');
    bench_cmd->add_option("--algos", bench_opt.algos, "algorithms")->delimiter(',');
    bench_cmd->add_option("--model", bench_opt.model_spec, "model spec");
    bench_cmd->add_option("--reps", bench_opt.reps, "repetitions per point");
    bench_cmd->add_option("--seed", bench_opt.seed, "generator seed");
    bench_cmd->add_option("-o,--output", bench_opt.out_path, "output CSV (default stdout)");

    gen_options gen_opt;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a synthetic dataset");
    gen_cmd->add_option("--seed", gen_opt.spec.seed, "RNG seed");
    gen_cmd->add_option("--count", gen_opt.spec.count, "trajectory count")->required();
    gen_cmd->add_option("--len", gen_opt.len_range, "length range lo:hi");
    gen_cmd->add_option("--kind", gen_opt.kind, "walk | clustered");
    gen_cmd->add_option("--sigma", gen_opt.spec.step_sigma, "random-walk step scale");
    gen_cmd->add_option("--centers", gen_opt.spec.centers, "cluster count");
    gen_cmd->add_option("--spread", gen_opt.spec.spread, "cluster scatter");
    gen_cmd->add_option("--id-prefix", gen_opt.spec.id_prefix, "trajectory id prefix");
    gen_cmd->add_option("-o,--output", gen_opt.out_path, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
        if (search_cmd->parsed()) return run_search(search_opt);
        if (topk_cmd->parsed()) return run_search(topk_opt);
        if (verify_cmd->parsed()) return run_verify(verify_opt);
        if (bench_cmd->parsed()) return run_bench(bench_opt);
        if (gen_cmd->parsed()) return run_gen(gen_opt);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const subtraj::budget_exceeded_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
