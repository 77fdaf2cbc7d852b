#include "subtraj/trajectory.hpp"

#include <cmath>

namespace subtraj {

trajectory::trajectory(std::string id, std::vector<point> points)
    : id_(std::move(id)), points_(std::move(points)) {
    if (points_.empty()) throw empty_trajectory_error();
    const point_kind kind = points_.front().kind;
    for (const point& p : points_) {
        if (p.kind != kind) throw mixed_point_kinds_error();
        if (p.kind == point_kind::planar && (!std::isfinite(p.x) || !std::isfinite(p.y)))
            throw nonfinite_coordinate_error();
    }
}

std::span<const point> trajectory::view(subtraj_range r) const {
    if (r.empty()) return {};
    if (r.start < 1 || r.end > size())
        throw index_out_of_range_error("range [" + std::to_string(r.start) + ", " +
                                       std::to_string(r.end) + "] outside trajectory of length " +
                                       std::to_string(size()));
    return std::span<const point>(points_).subspan(static_cast<std::size_t>(r.start - 1),
                                                   static_cast<std::size_t>(r.length()));
}

trajectory make_trajectory(std::string id, std::vector<point> points) {
    return trajectory(std::move(id), std::move(points));
}

void validate_sequence(const matching_sequence& seq, int query_len, int data_len) {
    if (seq.size() != query_len)
        throw length_mismatch_error("matching sequence has " + std::to_string(seq.size()) +
                                    " entries for a query of length " + std::to_string(query_len));
    int prev = 1;
    for (int v : seq.a) {
        if (v < 1 || v > data_len)
            throw index_out_of_range_error("matching index " + std::to_string(v) +
                                           " outside [1, " + std::to_string(data_len) + "]");
        if (v < prev) throw nonmonotone_sequence_error("matching sequence must be nondecreasing");
        prev = v;
    }
}

}  // namespace subtraj
