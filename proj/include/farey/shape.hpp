#pragma once

#include <cstdint>
#include <vector>

#include "farey/direction.hpp"
#include "farey/fraction.hpp"
#include "farey/geometry.hpp"

namespace farey {

/// Cyclic sequence of turns at the vertices of a closed polygon, in direction
/// index units. Entry k is (d_in - d_out) mod d_total at vertex k once the
/// polygon is oriented clockwise, so a convex corner of exterior angle t
/// stores t * d_total / 360 and the entries of a convex polygon sum to
/// d_total.
struct ShapeDescriptor {
    int order = 0;
    std::uint32_t d_total = 0;
    std::vector<std::uint32_t> entries;

    friend bool operator==(const ShapeDescriptor&, const ShapeDescriptor&) = default;
};

struct MatchScore {
    Fraction degrees;  // mean absolute per-vertex difference
};

// Throws OpenPolygonUnsupported for open polygons, DegenerateObject when
// fewer than 3 distinct consecutive vertices remain.
ShapeDescriptor descriptor_of(const DirectionTable& dt, const Polygon& polygon);

// diff * 360 / d_total, exact.
Fraction index_to_degrees(std::uint32_t d_total, std::uint64_t diff);
Fraction index_to_degrees(const DirectionTable& dt, std::uint64_t diff);

// Interior angle 180 - turn at a vertex, with turns above d_total / 2 read
// as negative (reflex vertices).
Fraction interior_degrees(std::uint32_t d_total, std::uint32_t entry);

// Best alignment over every cyclic shift of b, forward and reversed. A
// shorter descriptor is resampled by nearest neighbour onto the longer one.
// Throws InvalidArgument when the d_total values differ.
MatchScore compare_cyclic(const ShapeDescriptor& a, const ShapeDescriptor& b);

}  // namespace farey
