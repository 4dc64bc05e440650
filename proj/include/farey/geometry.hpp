#pragma once

/**
 * @file geometry.hpp
 * @brief Rank-based geometry on the integer grid.
 *
 * Coordinates are (x, y) with x along a bitmap row and y the row index. All
 * angles and orientations are measured in that frame, the same one the
 * direction indices use: index 1 points along +x, increasing toward +y.
 */

#include <compare>
#include <cstdint>
#include <vector>

#include "farey/direction.hpp"
#include "farey/fraction.hpp"

namespace farey {

struct GridPoint {
    Int x = 0;
    Int y = 0;

    friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Ordered 8-connected chain of pixels. Closed contours also connect last to
/// first and need at least 3 points; open ones need 2.
struct DigitalContour {
    std::vector<GridPoint> points;
    bool closed = true;
};

// Throws DegenerateObject for too few points and InvalidArgument for a
// broken 8-connected chain.
void validate_contour(const DigitalContour& contour);

struct Bitmap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, nonzero is foreground

    Bitmap() = default;
    Bitmap(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, 0) {}

    bool at(Int x, Int y) const noexcept {
        return x >= 0 && y >= 0 && x < width && y < height &&
               pixels[static_cast<std::size_t>(y) * width + static_cast<std::size_t>(x)] != 0;
    }
    void set(int x, int y, bool on = true) {
        pixels[static_cast<std::size_t>(y) * width + static_cast<std::size_t>(x)] = on ? 1 : 0;
    }
};

// Outer boundary of the largest 8-connected foreground component, traced
// with Moore-neighbour tracing. Jacob's stopping criterion is applied to the
// first move: tracing ends when start -> second pixel would repeat. Starts at the
// component's first pixel in raster order and runs clockwise in the (x, y)
// frame (negative signed area). Throws NoObject on an empty bitmap and
// DegenerateObject when the boundary has fewer than 3 pixels.
DigitalContour trace_boundary(const Bitmap& bitmap);

// Collinearity through direction indices: b - a and c - a share an index or
// are antipodal. Throws OutOfTable when a reduced displacement exceeds the
// order and ZeroVector when a point repeats a.
bool is_collinear(const DirectionTable& dt, GridPoint a, GridPoint b, GridPoint c);

// Direction index of an arbitrary displacement. In-range vectors are looked
// up exactly; longer ones have their proper slope snapped to the closest
// member of F_n first.
DirectionIndex edge_direction(const DirectionTable& dt, Int dx, Int dy);

struct ApproxConfig {
    int order = 1;
    std::uint32_t delta_f = 0;  // merge while the cyclic index difference <= delta_f
};

struct Polygon {
    std::vector<GridPoint> vertices;
    bool closed = true;
};

struct ApproxMetrics {
    std::size_t vertex_count = 0;
    Fraction compression_ratio;  // contour points / vertices
    Fraction max_deviation_sq;   // squared perpendicular distance to the covering edge
};

struct Approximation {
    Polygon polygon;
    ApproxMetrics metrics;
};

// Greedy single pass over unit edges: AB absorbs C while the directions of
// AB and BC are within delta_f (cyclically), otherwise B becomes a vertex.
// Closed contours wrap around and re-test the seam at points[0].
Approximation approximate_polygon(const DirectionTable& dt, const DigitalContour& contour,
                                  ApproxConfig config);

// Evaluation only; uses ordinary multiplication. Vertices are matched to the
// contour greedily in order.
ApproxMetrics deviation_of(const Polygon& polygon, const DigitalContour& contour);

// Twice the signed area (shoelace). Negative means clockwise in (x, y).
Int signed_area2(const std::vector<GridPoint>& ring);

}  // namespace farey
