#include "subtraj/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace subtraj {

const trajectory* dataset::find(const std::string& id) const {
    for (const trajectory& t : trajectories)
        if (t.id() == id) return &t;
    return nullptr;
}

dataset_stats stats(const dataset& ds) {
    dataset_stats s;
    s.count = ds.trajectories.size();
    if (s.count == 0) return s;
    std::int64_t total = 0;
    s.min_length = ds.trajectories.front().size();
    s.max_length = s.min_length;
    for (const trajectory& t : ds.trajectories) {
        s.min_length = std::min(s.min_length, t.size());
        s.max_length = std::max(s.max_length, t.size());
        total += t.size();
    }
    s.avg_length = static_cast<double>(total) / static_cast<double>(s.count);
    return s;
}

namespace {

/// Deterministic generator primitives: the raw engine output is mapped to
/// doubles explicitly so datasets are reproducible across platforms and
/// standard-library versions.
struct rng {
    std::uint64_t state;

    explicit rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double normal(double sigma) {
        // Box-Muller; the (0, 1] shift keeps log() finite.
        const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform();
        return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
};

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

}  // namespace

dataset generate(const generator_spec& spec) {
    if (spec.length_lo < 1 || spec.length_hi < spec.length_lo)
        throw error("generator length range must satisfy 1 <= lo <= hi");
    dataset ds;
    ds.source = "gen:seed=" + std::to_string(spec.seed);
    rng r(spec.seed);

    std::vector<point> centers;
    if (spec.model == generator_model::clustered) {
        for (int c = 0; c < std::max(1, spec.centers); ++c)
            centers.push_back(point::planar(r.uniform(spec.box_x0, spec.box_x1),
                                            r.uniform(spec.box_y0, spec.box_y1)));
    }

    for (int t = 0; t < spec.count; ++t) {
        const int len = r.uniform_int(spec.length_lo, spec.length_hi);
        std::vector<point> pts;
        pts.reserve(static_cast<std::size_t>(len));
        if (spec.model == generator_model::random_walk) {
            double x = r.uniform(spec.box_x0, spec.box_x1);
            double y = r.uniform(spec.box_y0, spec.box_y1);
            for (int i = 0; i < len; ++i) {
                pts.push_back(point::planar(x, y));
                x = clamp(x + r.normal(spec.step_sigma), spec.box_x0, spec.box_x1);
                y = clamp(y + r.normal(spec.step_sigma), spec.box_y0, spec.box_y1);
            }
        } else {
            const point& center = centers[static_cast<std::size_t>(
                r.uniform_int(0, static_cast<int>(centers.size()) - 1))];
            for (int i = 0; i < len; ++i) {
                const double x = clamp(center.x + r.normal(spec.spread), spec.box_x0, spec.box_x1);
                const double y = clamp(center.y + r.normal(spec.spread), spec.box_y0, spec.box_y1);
                pts.push_back(point::planar(x, y));
            }
        }
        ds.trajectories.push_back(
            make_trajectory(spec.id_prefix + std::to_string(t), std::move(pts)));
    }
    return ds;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double_field(const std::string& text, std::size_t line_no) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (text.empty() || end != begin + text.size())
        throw parse_error(line_no, "bad numeric field '" + text + "'");
    return v;
}

long parse_long_field(const std::string& text, std::size_t line_no) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (text.empty() || end != begin + text.size())
        throw parse_error(line_no, "bad integer field '" + text + "'");
    return v;
}

}  // namespace

dataset load_csv(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error(1, "missing header");
    const std::vector<std::string> header = split_csv_line(line);

    bool planar;
    if (header == std::vector<std::string>{"traj_id", "seq", "x", "y"})
        planar = true;
    else if (header == std::vector<std::string>{"traj_id", "seq", "label"})
        planar = false;
    else
        throw parse_error(1, "expected header traj_id,seq,x,y or traj_id,seq,label");

    dataset ds;
    ds.source = source_name;
    std::unordered_set<std::string> finished_ids;
    std::string cur_id;
    long cur_seq = 0;
    std::vector<point> cur_points;

    const auto flush = [&] {
        if (cur_points.empty()) return;
        ds.trajectories.push_back(make_trajectory(cur_id, std::move(cur_points)));
        cur_points.clear();
        finished_ids.insert(cur_id);
    };

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw parse_error(line_no, "expected " + std::to_string(header.size()) + " fields");

        const std::string& id = fields[0];
        const long seq = parse_long_field(fields[1], line_no);
        if (id != cur_id) {
            flush();
            if (finished_ids.count(id))
                throw parse_error(line_no, "rows of trajectory '" + id + "' are not contiguous");
            cur_id = id;
            cur_seq = seq;
        } else if (!cur_points.empty()) {
            if (seq == cur_seq)
                throw parse_error(line_no, "duplicate (traj_id, seq) for '" + id + "'");
            if (seq < cur_seq)
                throw nonmonotone_sequence_error("line " + std::to_string(line_no) +
                                                 ": seq values of '" + id + "' decrease");
            cur_seq = seq;
        }
        if (planar) {
            cur_points.push_back(point::planar(parse_double_field(fields[2], line_no),
                                               parse_double_field(fields[3], line_no)));
        } else {
            if (fields[2].empty()) throw parse_error(line_no, "empty label");
            cur_points.push_back(point::symbol(fields[2]));
        }
    }
    flush();
    return ds;
}

dataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    return load_csv(in, path);
}

void save_csv(const dataset& ds, std::ostream& out) {
    const bool planar =
        ds.trajectories.empty() || ds.trajectories.front().kind() == point_kind::planar;
    out << (planar ? "traj_id,seq,x,y\n" : "traj_id,seq,label\n");
    char buf[64];
    for (const trajectory& t : ds.trajectories) {
        for (int i = 1; i <= t.size(); ++i) {
            const point& p = t.at(i);
            if (planar) {
                out << t.id() << ',' << i << ',';
                std::snprintf(buf, sizeof buf, "%.17g", p.x);
                out << buf << ',';
                std::snprintf(buf, sizeof buf, "%.17g", p.y);
                out << buf << '\n';
            } else {
                out << t.id() << ',' << i << ',' << p.label << '\n';
            }
        }
    }
}

void save_csv(const dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot open '" + path + "' for writing");
    save_csv(ds, out);
}

}  // namespace subtraj
