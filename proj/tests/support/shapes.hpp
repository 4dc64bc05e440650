#pragma once

// Synthetic silhouettes shared by the shape tests and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "farey/geometry.hpp"
#include "farey/shape.hpp"
#include "support/oracles.hpp"

namespace farey::oracle {

struct Silhouette {
    int size;
    double width;   // fraction of size
    double height;  // fraction of size
};

inline std::vector<std::pair<double, double>> centred_rectangle(const Silhouette& s) {
    const double c = s.size / 2.0;
    const double w = s.width * s.size / 2.0;
    const double h = s.height * s.size / 2.0;
    return {{c - w, c - h}, {c - w, c + h}, {c + w, c + h}, {c + w, c - h}};
}

// The rectangle suite: aspect ratios whose 30 degree rotation stays inside
// the canvas.
inline std::vector<Silhouette> rectangle_suite(int size) {
    std::vector<Silhouette> out;
    for (double w : {0.4, 0.55, 0.7})
        for (double h : {0.3, 0.45, 0.6}) out.push_back({size, w, h});
    return out;
}

inline std::vector<double> recovered_degrees(const DirectionTable& dt, const Silhouette& s,
                                             double angle, std::uint32_t delta_f) {
    const double c = s.size / 2.0;
    const auto poly = rotate(centred_rectangle(s), angle, c, c);
    const auto contour = trace_boundary(rasterize_convex(s.size, s.size, poly));
    const auto approx = approximate_polygon(dt, contour, {dt.order(), delta_f});
    std::vector<double> out;
    for (std::uint32_t e : descriptor_of(dt, approx.polygon).entries)
        out.push_back(360.0 * e / dt.d_total());
    return out;
}

// Largest per-vertex difference under the best cyclic alignment, or nothing
// when the vertex counts differ.
inline std::optional<double> max_vertex_delta(const std::vector<double>& a,
                                              const std::vector<double>& b) {
    if (a.size() != b.size() || a.empty()) return std::nullopt;
    double best = 1e300;
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
        double worst = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, std::abs(a[i] - b[(i + shift) % a.size()]));
        best = std::min(best, worst);
    }
    return best;
}

}  // namespace farey::oracle
