#include "farey/geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

#include "farey/error.hpp"
#include "farey/search.hpp"

namespace farey {

namespace {

// Moore neighbourhood in scan order around a pixel: W, NW, N, NE, E, SE, S, SW
// (with y growing downward this is clockwise on screen).
constexpr std::array<int, 8> kNx = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr std::array<int, 8> kNy = {0, -1, -1, -1, 0, 1, 1, 1};

int neighbour_slot(Int dx, Int dy) {
    for (int k = 0; k < 8; ++k)
        if (kNx[k] == dx && kNy[k] == dy) return k;
    return -1;
}

bool adjacent8(GridPoint a, GridPoint b) {
    return std::max(std::llabs(a.x - b.x), std::llabs(a.y - b.y)) == 1;
}

// Largest 8-connected component as a mask; ties go to the component met
// first in raster order.
Bitmap largest_component(const Bitmap& bitmap) {
    const int w = bitmap.width;
    const int h = bitmap.height;
    std::vector<int> label(bitmap.pixels.size(), -1);
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < bitmap.pixels.size(); ++start) {
        if (!bitmap.pixels[start] || label[start] >= 0) continue;
        const int id = static_cast<int>(sizes.size());
        std::size_t count = 0;
        label[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            ++count;
            const int x = static_cast<int>(cur % static_cast<std::size_t>(w));
            const int y = static_cast<int>(cur / static_cast<std::size_t>(w));
            for (int k = 0; k < 8; ++k) {
                const int nx = x + kNx[k];
                const int ny = y + kNy[k];
                if (!bitmap.at(nx, ny)) continue;
                const std::size_t ni = static_cast<std::size_t>(ny) * w + nx;
                if (label[ni] >= 0) continue;
                label[ni] = id;
                stack.push_back(ni);
            }
        }
        sizes.push_back(count);
    }
    if (sizes.empty()) throw Error(ErrorCode::NoObject, "bitmap has no foreground pixels");
    const int best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    Bitmap mask(w, h);
    for (std::size_t i = 0; i < label.size(); ++i) mask.pixels[i] = label[i] == best ? 1 : 0;
    return mask;
}

// Squared distance from w to the line through u and v, as an exact fraction.
Fraction deviation_sq(GridPoint u, GridPoint v, GridPoint w) {
    const Int ex = v.x - u.x;
    const Int ey = v.y - u.y;
    const Int wx = w.x - u.x;
    const Int wy = w.y - u.y;
    if (ex == 0 && ey == 0) return Fraction::make(wx * wx + wy * wy, 1);
    const Wide cross = Wide{ex} * wy - Wide{ey} * wx;
    const Wide limit = Wide{1} << 31;
    if (cross >= limit || -cross >= limit)
        throw Error(ErrorCode::Overflow, "deviation exceeds 64-bit range");
    const auto c = static_cast<Int>(cross);
    return Fraction::make(c * c, ex * ex + ey * ey);
}

ApproxMetrics metrics_from_indices(const DigitalContour& contour,
                                   const std::vector<std::size_t>& at, bool closed) {
    const auto& pts = contour.points;
    const std::size_t n = pts.size();
    ApproxMetrics m;
    m.vertex_count = at.size();
    m.compression_ratio = Fraction::make(static_cast<Int>(n), static_cast<Int>(at.size()));
    auto cover = [&](std::size_t from, std::size_t to) {
        // Contour indices from..to (cyclic) against the chord pts[from]-pts[to].
        for (std::size_t i = from;; i = (i + 1) % n) {
            m.max_deviation_sq = std::max(m.max_deviation_sq, deviation_sq(pts[from], pts[to], pts[i]));
            if (i == to) break;
        }
    };
    for (std::size_t k = 0; k + 1 < at.size(); ++k) cover(at[k], at[k + 1]);
    if (closed && !at.empty()) cover(at.back(), at.front());
    return m;
}

// Three well-spread contour indices for a closed contour that collapsed
// below a triangle: the start, the point farthest from it, and the point
// farthest from that chord.
std::vector<std::size_t> spread_triangle(const std::vector<GridPoint>& pts) {
    const GridPoint p0 = pts[0];
    std::size_t far = 1;
    Int far_d = -1;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Int dx = pts[i].x - p0.x;
        const Int dy = pts[i].y - p0.y;
        if (dx * dx + dy * dy > far_d) {
            far_d = dx * dx + dy * dy;
            far = i;
        }
    }
    std::size_t third = far == 1 ? 2 : 1;
    Int best = -1;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (i == far) continue;
        const Int c = std::llabs((pts[far].x - p0.x) * (pts[i].y - p0.y) -
                                 (pts[far].y - p0.y) * (pts[i].x - p0.x));
        if (c > best) {
            best = c;
            third = i;
        }
    }
    std::vector<std::size_t> out = {0, far, third};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

void validate_contour(const DigitalContour& contour) {
    const auto& pts = contour.points;
    const std::size_t minimum = contour.closed ? 3 : 2;
    if (pts.size() < minimum)
        throw Error(ErrorCode::DegenerateObject,
                    "contour has " + std::to_string(pts.size()) + " points, needs " +
                        std::to_string(minimum));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (!adjacent8(pts[i], pts[i + 1]))
            throw Error(ErrorCode::InvalidArgument,
                        "contour points " + std::to_string(i) + " and " + std::to_string(i + 1) +
                            " are not 8-connected");
    if (contour.closed && !adjacent8(pts.back(), pts.front()))
        throw Error(ErrorCode::InvalidArgument, "closed contour does not return to its start");
}

DigitalContour trace_boundary(const Bitmap& bitmap) {
    const Bitmap mask = largest_component(bitmap);
    const auto first = static_cast<std::size_t>(
        std::find(mask.pixels.begin(), mask.pixels.end(), 1) - mask.pixels.begin());
    const GridPoint start{static_cast<Int>(first % static_cast<std::size_t>(mask.width)),
                          static_cast<Int>(first / static_cast<std::size_t>(mask.width))};

    DigitalContour contour;
    contour.closed = true;
    contour.points.push_back(start);

    // The west neighbour of the first raster pixel is background. Tracing
    // ends when the first move (start to second pixel) is about to repeat;
    // the start pixel alone can recur mid-contour on thin parts.
    GridPoint cur = start;
    int back = 0;
    std::optional<GridPoint> second;
    const std::size_t limit = 4 * mask.pixels.size() + 8;
    while (contour.points.size() <= limit) {
        int found = -1;
        for (int step = 1; step <= 8; ++step) {
            const int k = (back + step) % 8;
            if (mask.at(cur.x + kNx[k], cur.y + kNy[k])) {
                found = k;
                break;
            }
        }
        if (found < 0) break;  // isolated pixel
        const GridPoint next{cur.x + kNx[found], cur.y + kNy[found]};
        if (cur == start) {
            if (second && next == *second) {
                contour.points.pop_back();  // the closing return to start
                break;
            }
            if (!second) second = next;
        }
        const int prev = (found + 7) % 8;
        back = neighbour_slot(cur.x + kNx[prev] - next.x, cur.y + kNy[prev] - next.y);
        cur = next;
        contour.points.push_back(cur);
    }

    if (contour.points.size() < 3)
        throw Error(ErrorCode::DegenerateObject,
                    "object boundary has only " + std::to_string(contour.points.size()) +
                        " pixel(s)");
    if (signed_area2(contour.points) > 0)
        std::reverse(contour.points.begin() + 1, contour.points.end());
    return contour;
}

bool is_collinear(const DirectionTable& dt, GridPoint a, GridPoint b, GridPoint c) {
    const DirectionIndex ab = dt.index_of(b.x - a.x, b.y - a.y);
    const DirectionIndex ac = dt.index_of(c.x - a.x, c.y - a.y);
    if (ab == ac) return true;
    const DirectionIndex gap = ab > ac ? ab - ac : ac - ab;
    return gap + gap == dt.d_total();
}

DirectionIndex edge_direction(const DirectionTable& dt, Int dx, Int dy) {
    if (dx == 0 && dy == 0) throw Error(ErrorCode::ZeroVector, "direction of a zero-length edge");
    Int a = std::llabs(dx);
    Int b = std::llabs(dy);
    const Int n = dt.order();
    if (a > n || b > n) {
        const Int g = std::gcd(a, b);
        a /= g;
        b /= g;
    }
    if (a > n || b > n) {
        // Snap the proper slope into F_n; the quadrant comes from the signs.
        const bool shallow = b <= a;
        const SearchResult s = closest_regula_falsi(
            dt.sequence(), dt.table(), shallow ? SearchKey{b, a} : SearchKey{a, b});
        a = shallow ? s.closest.den() : s.closest.num();
        b = shallow ? s.closest.num() : s.closest.den();
    }
    const Int sx = dx < 0 ? -a : a;
    const Int sy = dy < 0 ? -b : b;
    return dt.reflect(sx, sy, dt.quadrant_index(a, b));
}

Approximation approximate_polygon(const DirectionTable& dt, const DigitalContour& contour,
                                  ApproxConfig config) {
    validate_contour(contour);
    if (config.order != dt.order())
        throw Error(ErrorCode::InvalidArgument, "approximation order " +
                                                    std::to_string(config.order) +
                                                    " does not match table order " +
                                                    std::to_string(dt.order()));
    if (config.delta_f > dt.d_total())
        throw Error(ErrorCode::InvalidArgument,
                    "delta_f " + std::to_string(config.delta_f) + " exceeds d_total " +
                        std::to_string(dt.d_total()));

    const auto& pts = contour.points;
    const std::size_t n = pts.size();
    auto dir = [&dt](GridPoint from, GridPoint to) {
        return edge_direction(dt, to.x - from.x, to.y - from.y);
    };

    std::vector<std::size_t> at = {0};
    std::size_t a = 0;
    std::size_t b = 1;
    DirectionIndex ab = dir(pts[a], pts[b]);
    const std::size_t end = contour.closed ? n : n - 1;
    for (std::size_t i = 2; i <= end; ++i) {
        const std::size_t c = i % n;
        const DirectionIndex bc = dir(pts[b], pts[c]);
        if (pts[c] != pts[a] && cyclic_distance(dt, ab, bc) <= config.delta_f) {
            b = c;
            ab = dir(pts[a], pts[b]);
        } else {
            at.push_back(b);
            a = b;
            b = c;
            ab = bc;
        }
    }
    if (!contour.closed) {
        at.push_back(b);
    } else if (at.size() > 3) {
        // Seam: the start vertex goes if its two edges would have merged.
        const GridPoint prev = pts[at.back()];
        const GridPoint next = pts[at[1]];
        if (prev != next &&
            cyclic_distance(dt, dir(prev, pts[0]), dir(pts[0], next)) <= config.delta_f)
            at.erase(at.begin());
    } else if (at.size() < 3) {
        at = spread_triangle(pts);
    }

    Approximation out;
    out.polygon.closed = contour.closed;
    for (std::size_t i : at) out.polygon.vertices.push_back(pts[i]);
    out.metrics = metrics_from_indices(contour, at, contour.closed);
    return out;
}

ApproxMetrics deviation_of(const Polygon& polygon, const DigitalContour& contour) {
    std::vector<std::size_t> at;
    std::size_t pos = 0;
    for (const GridPoint& v : polygon.vertices) {
        while (pos < contour.points.size() && contour.points[pos] != v) ++pos;
        if (pos == contour.points.size())
            throw Error(ErrorCode::InvalidArgument, "polygon vertex is not on the contour");
        at.push_back(pos);
    }
    return metrics_from_indices(contour, at, polygon.closed);
}

Int signed_area2(const std::vector<GridPoint>& ring) {
    Int sum = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const GridPoint& p = ring[i];
        const GridPoint& q = ring[(i + 1) % ring.size()];
        sum += p.x * q.y - q.x * p.y;
    }
    return sum;
}

}  // namespace farey
