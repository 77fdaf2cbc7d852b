// Symbolic fixtures reproducing the worked examples: two length-9 pairs
// whose 0/1 substitution costs realize known per-point conversion-cost
// vectors, and a 4x8 pair whose unit-edit DP visits a known insert step.
#pragma once

#include <string>
#include <vector>

#include "subtraj/trajectory.hpp"

namespace testsupport {

inline subtraj::trajectory symbols(const std::string& id, const std::string& labels) {
    std::vector<subtraj::point> pts;
    for (char c : labels) pts.push_back(subtraj::point::symbol(std::string(1, c)));
    return subtraj::make_trajectory(id, std::move(pts));
}

/// Edit-style pair: converting the query costs one delete, one insert and
/// two substitutions under unit costs, so the whole-pair distance is 4.
/// (query[2] is deleted, data[3] inserted, query[5] and query[8] replaced.)
inline subtraj::trajectory edit_example_query() { return symbols("q", "AZBDYFGXI"); }
inline subtraj::trajectory edit_example_data() { return symbols("d", "ABCDEFGHI"); }

/// Warp-style pair: under the 0/1 metric the sequence
/// [1,1,2,4,5,6,7,8,9] has per-point costs [0,0,1,1,1,0,0,1,0] (total 4).
inline subtraj::trajectory warp_example4_query() { return symbols("q", "bbwevfguh"); }
inline subtraj::trajectory warp_example4_data() { return symbols("d", "bcxeyfgzh"); }

/// Warp-style pair: under the 0/1 metric the sequence
/// [1,1,2,2,3,3,5,6,9] has per-point costs [0,0,0,0,0,1,0,0,1] (total 2),
/// and 2 is the optimal subtrajectory DTW distance of the pair.
inline subtraj::trajectory warp_example2_query() { return symbols("q", "bbccewfgh"); }
inline subtraj::trajectory warp_example2_data() { return symbols("d", "bceffgyhh"); }

/// Unit-edit pair whose cost/start tables contain the documented insert
/// step: C(3,6) = 0, C(4,7) = 1, and C(4,8) = C(4,7) + ins - sub + sub = 1
/// with S(4,8) = S(3,6).
inline subtraj::trajectory insert_step_query() { return symbols("q", "xyzg"); }
inline subtraj::trajectory insert_step_data() { return symbols("d", "bcexyzwg"); }

}  // namespace testsupport
