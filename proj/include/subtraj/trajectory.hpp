#pragma once

#include <span>
#include <string>
#include <vector>

#include "subtraj/errors.hpp"
#include "subtraj/point.hpp"

namespace subtraj {

/// A contiguous index range of a trajectory, 1-based and inclusive on both
/// ends. start > end denotes the empty range; stored trajectories are never
/// empty, so the empty range exists only as a view.
struct subtraj_range {
    int start = 1;
    int end = 0;

    bool empty() const { return start > end; }
    int length() const { return empty() ? 0 : end - start + 1; }
    static subtraj_range empty_range() { return {1, 0}; }

    friend bool operator==(const subtraj_range&, const subtraj_range&) = default;
};

/// An immutable, validated sequence of points of one kind.
/// Public indexing is 1-based throughout the library, matching the
/// subtrajectory notation tau[i:j] with 1 <= i <= j <= n.
class trajectory {
public:
    trajectory(std::string id, std::vector<point> points);

    const std::string& id() const { return id_; }
    int size() const { return static_cast<int>(points_.size()); }
    point_kind kind() const { return points_.front().kind; }

    /// 1-based point access: at(i) is tau[i], 1 <= i <= size().
    const point& at(int i) const { return points_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<point>& points() const { return points_; }

    /// View of tau[r.start : r.end] as a 0-based span. Throws if the range
    /// is out of bounds; the empty range yields an empty span.
    std::span<const point> view(subtraj_range r) const;

private:
    std::string id_;
    std::vector<point> points_;
};

/// Validating constructor wrapper matching the library's free-function style.
trajectory make_trajectory(std::string id, std::vector<point> points);

/// The matching sequence a_1..a_m: a_i is the 1-based data index matched by
/// query point i. Values are nondecreasing.
struct matching_sequence {
    std::vector<int> a;

    int size() const { return static_cast<int>(a.size()); }
};

/// Throws unless seq has exactly query_len entries, entries lie in
/// [1, data_len] and are nondecreasing.
void validate_sequence(const matching_sequence& seq, int query_len, int data_len);

}  // namespace subtraj
