#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subtraj/trajectory.hpp"

namespace subtraj {

/// An in-memory trajectory collection with unique ids.
struct dataset {
    std::vector<trajectory> trajectories;
    std::string source;  // file path or generator description

    const trajectory* find(const std::string& id) const;
};

struct dataset_stats {
    std::size_t count = 0;
    int min_length = 0;
    int max_length = 0;
    double avg_length = 0.0;
};

dataset_stats stats(const dataset& ds);

enum class generator_model { random_walk, clustered };

/// Deterministic synthetic workload description. Equal specs produce
/// byte-identical datasets.
struct generator_spec {
    std::uint64_t seed = 1;
    int count = 0;
    int length_lo = 1;
    int length_hi = 1;
    generator_model model = generator_model::random_walk;
    double step_sigma = 0.01;  // random_walk: isotropic step scale
    int centers = 4;           // clustered: number of cluster centers
    double spread = 0.02;      // clustered: point scatter around the center
    double box_x0 = 0.0, box_y0 = 0.0, box_x1 = 1.0, box_y1 = 1.0;
    std::string id_prefix = "t";
};

dataset generate(const generator_spec& spec);

/// Reads `traj_id,seq,x,y` (planar) or `traj_id,seq,label` (symbolic) CSV
/// with a header. Rows of one trajectory must be contiguous and ordered by
/// strictly increasing seq.
dataset load_csv(const std::string& path);
dataset load_csv(std::istream& in, const std::string& source_name);

/// Writes the same CSV format load_csv reads; planar coordinates round-trip
/// exactly.
void save_csv(const dataset& ds, const std::string& path);
void save_csv(const dataset& ds, std::ostream& out);

}  // namespace subtraj
