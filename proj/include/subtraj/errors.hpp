#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subtraj {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_trajectory_error : error {
    empty_trajectory_error() : error("trajectory must contain at least one point") {}
};

struct mixed_point_kinds_error : error {
    mixed_point_kinds_error() : error("trajectory mixes planar and symbolic points") {}
};

struct nonfinite_coordinate_error : error {
    nonfinite_coordinate_error() : error("planar coordinates must be finite") {}
};

struct length_mismatch_error : error {
    using error::error;
};

struct nonmonotone_sequence_error : error {
    using error::error;
};

struct index_out_of_range_error : error {
    using error::error;
};

struct wrong_family_error : error {
    using error::error;
};

struct symbolic_points_error : error {
    using error::error;
};

struct nonpositive_epsilon_error : error {
    nonpositive_epsilon_error() : error("epsilon must be positive") {}
};

struct empty_database_error : error {
    empty_database_error() : error("database contains no trajectories") {}
};

struct budget_exceeded_error : error {
    using error::error;
};

struct pair_mismatch_error : error {
    using error::error;
};

/// CSV ingestion failure; carries the 1-based line number.
struct parse_error : error {
    parse_error(std::size_t line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

}  // namespace subtraj
