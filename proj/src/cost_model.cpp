#include "subtraj/cost_model.hpp"

#include <charconv>
#include <cstdlib>
#include <utility>

#include "subtraj/errors.hpp"

namespace subtraj {

cost_model wed_custom(point_metric sub, std::function<double(const point&)> ins,
                      std::function<double(const point&)> del) {
    cost_model m;
    m.family = cost_family::edit;
    m.name = "wed:custom";
    m.sub = std::move(sub);
    m.ins = std::move(ins);
    m.del = std::move(del);
    return m;
}

cost_model wed_unit() {
    cost_model m = wed_custom(
        equality_metric(), [](const point&) { return 1.0; }, [](const point&) { return 1.0; });
    m.name = "wed:unit";
    return m;
}

cost_model edr(double epsilon) {
    if (epsilon <= 0.0) throw nonpositive_epsilon_error();
    cost_model m = wed_custom(
        [epsilon](const point& a, const point& b) {
            return euclidean(a, b) < epsilon ? 0.0 : 1.0;
        },
        [](const point&) { return 1.0; }, [](const point&) { return 1.0; });
    m.name = "edr:eps=" + std::to_string(epsilon);
    return m;
}

cost_model erp(point reference) {
    cost_model m = wed_custom(
        euclidean_metric(),
        [reference](const point& p) { return euclidean(p, reference); },
        [reference](const point& p) { return euclidean(p, reference); });
    m.name = "erp";
    return m;
}

cost_model dtw(point_metric metric) {
    cost_model m;
    m.family = cost_family::warp;
    m.name = "dtw";
    m.sub = std::move(metric);
    return m;
}

cost_model frechet(point_metric metric) {
    cost_model m;
    m.family = cost_family::frechet;
    m.name = "frechet";
    m.sub = std::move(metric);
    return m;
}

namespace {

double parse_number(const std::string& text, const std::string& spec) {
    const char* begin = text.data();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end != begin + text.size() || text.empty())
        throw error("bad number '" + text + "' in model spec '" + spec + "'");
    return value;
}

/// Splits "k1=v1,k2=v2" into ordered pairs.
std::vector<std::pair<std::string, std::string>> parse_params(const std::string& text,
                                                              const std::string& spec) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw error("expected key=value in model spec '" + spec + "'");
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        pos = comma + 1;
    }
    return out;
}

}  // namespace

cost_model parse_model(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (head == "dtw" && tail.empty()) return dtw();
    if (head == "frechet" && tail.empty()) return frechet();
    if (head == "wed" && tail == "unit") return wed_unit();
    if (head == "edr") {
        if (tail.empty()) return edr(0.001);  // arbitrary default, coordinate units
        for (auto& [k, v] : parse_params(tail, spec))
            if (k == "eps") return edr(parse_number(v, spec));
        throw error("edr needs eps=<v>: '" + spec + "'");
    }
    if (head == "erp") {
        double cx = 0.0, cy = 0.0;
        bool have_x = false, have_y = false;
        for (auto& [k, v] : parse_params(tail, spec)) {
            if (k == "cx") cx = parse_number(v, spec), have_x = true;
            if (k == "cy") cy = parse_number(v, spec), have_y = true;
        }
        if (!have_x || !have_y) throw error("erp needs cx=<v>,cy=<v>: '" + spec + "'");
        return erp(point::planar(cx, cy));
    }
    throw error("unknown model spec '" + spec + "'");
}

}  // namespace subtraj
