#include "farey/shape.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "farey/error.hpp"

namespace farey {

ShapeDescriptor descriptor_of(const DirectionTable& dt, const Polygon& polygon) {
    if (!polygon.closed)
        throw Error(ErrorCode::OpenPolygonUnsupported, "shape descriptors need a closed polygon");

    std::vector<GridPoint> ring;
    for (const GridPoint& v : polygon.vertices)
        if (ring.empty() || ring.back() != v) ring.push_back(v);
    while (ring.size() > 1 && ring.back() == ring.front()) ring.pop_back();
    if (ring.size() < 3)
        throw Error(ErrorCode::DegenerateObject,
                    "polygon has " + std::to_string(ring.size()) + " distinct vertices");
    // Clockwise in (x, y), keeping the first vertex first.
    if (signed_area2(ring) > 0) std::reverse(ring.begin() + 1, ring.end());

    const std::size_t n = ring.size();
    std::vector<DirectionIndex> edge(n);  // edge k runs from vertex k to k + 1
    for (std::size_t k = 0; k < n; ++k) {
        const GridPoint& p = ring[k];
        const GridPoint& q = ring[(k + 1) % n];
        edge[k] = edge_direction(dt, q.x - p.x, q.y - p.y);
    }

    ShapeDescriptor d;
    d.order = dt.order();
    d.d_total = dt.d_total();
    d.entries.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const DirectionIndex in = edge[(k + n - 1) % n];
        const DirectionIndex out = edge[k];
        d.entries.push_back(in >= out ? in - out : in + d.d_total - out);
    }
    return d;
}

Fraction index_to_degrees(std::uint32_t d_total, std::uint64_t diff) {
    if (d_total == 0) throw Error(ErrorCode::InvalidArgument, "d_total must be positive");
    return Fraction::make(static_cast<Int>(diff) * 360, d_total);
}

Fraction index_to_degrees(const DirectionTable& dt, std::uint64_t diff) {
    return index_to_degrees(dt.d_total(), diff);
}

Fraction interior_degrees(std::uint32_t d_total, std::uint32_t entry) {
    // Turns above D/2 are reflex vertices: interior 180 + 360 (D - t) / D.
    const Int d = d_total;
    const Int t = entry % d_total;
    if (2 * t <= d) return Fraction::make(180 * d - 360 * t, d);
    return Fraction::make(180 * d + 360 * (d - t), d);
}

MatchScore compare_cyclic(const ShapeDescriptor& a, const ShapeDescriptor& b) {
    if (a.d_total != b.d_total)
        throw Error(ErrorCode::InvalidArgument, "descriptors use different direction tables");
    if (a.entries.empty() || b.entries.empty())
        throw Error(ErrorCode::InvalidArgument, "empty descriptor");

    const std::uint32_t total = a.d_total;
    const auto& longer = a.entries.size() >= b.entries.size() ? a.entries : b.entries;
    const auto& shorter = a.entries.size() >= b.entries.size() ? b.entries : a.entries;
    const std::size_t len = longer.size();

    // Nearest-neighbour resampling: slot i takes round(i * s / len).
    std::vector<std::uint32_t> resampled(len);
    for (std::size_t i = 0; i < len; ++i)
        resampled[i] = shorter[((2 * i * shorter.size() + len) / (2 * len)) % shorter.size()];

    auto diff = [total](std::uint32_t x, std::uint32_t y) -> std::uint64_t {
        const std::uint32_t d = x > y ? x - y : y - x;
        return std::min<std::uint32_t>(d, total - d);
    };
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (int reversed = 0; reversed < 2; ++reversed) {
        for (std::size_t shift = 0; shift < len; ++shift) {
            std::uint64_t sum = 0;
            for (std::size_t i = 0; i < len && sum < best; ++i) {
                const std::size_t j = reversed ? (shift + len - i) % len : (shift + i) % len;
                sum += diff(longer[i], resampled[j]);
            }
            best = std::min(best, sum);
        }
    }
    return {Fraction::make(static_cast<Int>(best) * 360, static_cast<Int>(len) * total)};
}

}  // namespace farey
