#include "farey/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "farey/error.hpp"

namespace farey::io {

namespace {

Int parse_int(std::string_view text, std::string_view what) {
    Int value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw Error(ErrorCode::InvalidArgument,
                    "malformed " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

// Little-endian helpers for the cache format.
void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
std::uint64_t get_le(std::string_view bytes, std::size_t at, int width) {
    std::uint64_t v = 0;
    for (int i = width - 1; i >= 0; --i)
        v = (v << 8) | static_cast<std::uint8_t>(bytes[at + static_cast<std::size_t>(i)]);
    return v;
}

constexpr std::size_t kHeaderSize = 4 + 1 + 8 + 8;

[[noreturn]] void reject(const std::string& why) { throw Error(ErrorCode::CacheRejected, why); }

struct PbmReader {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::InputFormat, "PBM: " + why + " at byte offset " + std::to_string(pos));
    }

    void skip_space() {
        while (pos < text.size()) {
            if (text[pos] == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            } else {
                break;
            }
        }
    }

    int number() {
        skip_space();
        const std::size_t begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (begin == pos) fail("expected a decimal size");
        int value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + pos, value);
        if (ec != std::errc{} || value <= 0) {
            pos = begin;
            fail("invalid size");
        }
        return value;
    }
};

}  // namespace

std::pair<Int, Int> parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw Error(ErrorCode::InvalidArgument, "fraction '" + std::string(text) + "' must be p/q");
    const Int p = parse_int(text.substr(0, slash), "numerator");
    const Int q = parse_int(text.substr(slash + 1), "denominator");
    if (p < 0) throw Error(ErrorCode::InvalidArgument, "numerator must be non-negative");
    return {p, q};
}

std::vector<int> parse_orders(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const Int n = parse_int(text, "order");
        if (n < 1) throw Error(ErrorCode::InvalidArgument, "orders must be positive");
        return {static_cast<int>(n)};
    }
    const auto colon = text.find(':', dots);
    const Int from = parse_int(text.substr(0, dots), "order range start");
    const Int to = parse_int(text.substr(dots + 2, colon == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : colon - dots - 2),
                             "order range end");
    const Int step = colon == std::string_view::npos ? 1 : parse_int(text.substr(colon + 1), "step");
    if (from < 1 || to < from || step < 1 || to > kMaxOrder)
        throw Error(ErrorCode::InvalidArgument, "bad order range '" + std::string(text) + "'");
    std::vector<int> out;
    for (Int n = from; n <= to; n += step) out.push_back(static_cast<int>(n));
    return out;
}

Bitmap parse_pbm(std::string_view text) {
    PbmReader r{text};
    if (text.size() < 2 || text[0] != 'P' || text[1] != '1') {
        r.pos = (!text.empty() && text[0] == 'P') ? 1 : 0;
        r.fail("bad magic (expected P1)");
    }
    r.pos = 2;
    if (r.pos < text.size() && !std::isspace(static_cast<unsigned char>(text[r.pos])) &&
        text[r.pos] != '#')
        r.fail("bad magic (expected P1)");
    const int w = r.number();
    const int h = r.number();
    if (static_cast<long long>(w) * h > (1LL << 28)) r.fail("image too large");
    Bitmap bm(w, h);
    for (std::size_t i = 0; i < bm.pixels.size(); ++i) {
        r.skip_space();
        if (r.pos >= text.size()) r.fail("truncated raster");
        const char c = text[r.pos];
        if (c != '0' && c != '1') r.fail(std::string("unexpected character '") + c + "'");
        bm.pixels[i] = c == '1' ? 1 : 0;
        ++r.pos;
    }
    return bm;
}

std::string write_pbm(const Bitmap& bitmap) {
    std::string out = "P1\n" + std::to_string(bitmap.width) + " " + std::to_string(bitmap.height) + "\n";
    for (int y = 0; y < bitmap.height; ++y) {
        for (int x = 0; x < bitmap.width; ++x) out.push_back(bitmap.at(x, y) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

namespace {

nlohmann::json points_json(const std::vector<GridPoint>& pts) {
    auto arr = nlohmann::json::array();
    for (const GridPoint& p : pts) arr.push_back({p.x, p.y});
    return arr;
}

std::vector<GridPoint> points_from(const nlohmann::json& arr, const char* key) {
    if (!arr.is_array())
        throw Error(ErrorCode::InputFormat, std::string("'") + key + "' must be an array");
    std::vector<GridPoint> pts;
    pts.reserve(arr.size());
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            throw Error(ErrorCode::InputFormat, std::string("each entry of '") + key +
                                                    "' must be an [x, y] integer pair");
        pts.push_back({p[0].get<Int>(), p[1].get<Int>()});
    }
    return pts;
}

template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InputFormat, e.what());
    }
}

}  // namespace

nlohmann::json to_json(const DigitalContour& contour) {
    return {{"closed", contour.closed}, {"points", points_json(contour.points)}};
}

DigitalContour contour_from_json(const nlohmann::json& j) {
    DigitalContour c = guarded([&] {
        DigitalContour out;
        out.closed = j.value("closed", true);
        out.points = points_from(j.at("points"), "points");
        return out;
    });
    try {
        validate_contour(c);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidArgument) throw Error(ErrorCode::InputFormat, e.what());
        throw;
    }
    return c;
}

nlohmann::json to_json(const Polygon& polygon) {
    return {{"closed", polygon.closed}, {"vertices", points_json(polygon.vertices)}};
}

Polygon polygon_from_json(const nlohmann::json& j) {
    return guarded([&] {
        Polygon p;
        p.closed = j.at("closed").get<bool>();
        p.vertices = points_from(j.at("vertices"), "vertices");
        return p;
    });
}

nlohmann::json to_json(const ApproxMetrics& metrics) {
    return {{"vertex_count", metrics.vertex_count},
            {"compression_ratio", metrics.compression_ratio.str()},
            {"max_deviation_sq", metrics.max_deviation_sq.str()}};
}

nlohmann::json to_json(const ShapeDescriptor& d) {
    return {{"order", d.order}, {"d_total", d.d_total}, {"entries", d.entries}};
}

ShapeDescriptor descriptor_from_json(const nlohmann::json& j) {
    return guarded([&] {
        ShapeDescriptor d;
        d.order = j.at("order").get<int>();
        d.d_total = j.at("d_total").get<std::uint32_t>();
        d.entries = j.at("entries").get<std::vector<std::uint32_t>>();
        for (std::uint32_t e : d.entries)
            if (e >= d.d_total) throw Error(ErrorCode::InputFormat, "descriptor entry out of range");
        return d;
    });
}

std::string to_svg(const DigitalContour& contour, const Polygon& polygon) {
    Int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool first = true;
    for (const GridPoint& p : contour.points) {
        if (first) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            first = false;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x - 1 << ' ' << min_y - 1
        << ' ' << max_x - min_x + 2 << ' ' << max_y - min_y + 2 << "\">\n";
    out << "  <polyline fill=\"none\" stroke=\"#999\" stroke-opacity=\"0.4\" stroke-width=\"0.3\" "
           "points=\"";
    for (std::size_t i = 0; i < contour.points.size(); ++i)
        out << (i ? " " : "") << contour.points[i].x << ',' << contour.points[i].y;
    if (contour.closed && !contour.points.empty())
        out << ' ' << contour.points[0].x << ',' << contour.points[0].y;
    out << "\"/>\n  <path fill=\"none\" stroke=\"#c00\" stroke-width=\"0.5\" d=\"";
    for (std::size_t i = 0; i < polygon.vertices.size(); ++i)
        out << (i ? " L" : "M") << polygon.vertices[i].x << ',' << polygon.vertices[i].y;
    if (polygon.closed) out << " Z";
    out << "\"/>\n</svg>\n";
    return out.str();
}

std::string serialize_table(const FareyTable& table) {
    std::string out;
    out.reserve(kHeaderSize + table.cells().size() * 4);
    out += "FTBL";
    out.push_back(static_cast<char>(kCacheVersion));
    put_u64(out, static_cast<std::uint64_t>(table.order()));
    put_u64(out, table.f_max());
    for (Rank r : table.cells()) put_u32(out, r);
    return out;
}

FareyTable deserialize_table(std::string_view bytes) {
    if (bytes.size() < kHeaderSize) reject("truncated header");
    if (bytes.substr(0, 4) != "FTBL") reject("bad magic");
    const auto version = static_cast<std::uint8_t>(bytes[4]);
    if (version != kCacheVersion)
        reject("unsupported version " + std::to_string(version));
    const std::uint64_t order = get_le(bytes, 5, 8);
    const std::uint64_t f_max = get_le(bytes, 13, 8);
    if (order < 1 || order > static_cast<std::uint64_t>(kMaxOrder))
        reject("order " + std::to_string(order) + " out of range");
    if (f_max != sequence_size(static_cast<int>(order)))
        reject("f_max " + std::to_string(f_max) + " inconsistent with order " +
                      std::to_string(order));
    const std::size_t cells = static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(order);
    if (bytes.size() != kHeaderSize + cells * 4)
        reject("grid size " + std::to_string(bytes.size() - kHeaderSize) +
                      " bytes, expected " + std::to_string(cells * 4));
    std::vector<Rank> grid(cells);
    const auto n = static_cast<std::size_t>(order);
    for (std::size_t k = 0; k < cells; ++k) {
        const auto r = static_cast<Rank>(get_le(bytes, kHeaderSize + 4 * k, 4));
        const std::size_t i = k / n;
        const std::size_t j = k % n + 1;
        const bool valid = i <= j;
        if (valid ? (r < 1 || r > f_max) : r != kInvalidRank)
            reject("cell (" + std::to_string(i) + "," + std::to_string(j) + ") holds " +
                          std::to_string(r));
        grid[k] = r;
    }
    return FareyTable(static_cast<int>(order), static_cast<Rank>(f_max), std::move(grid));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InputFormat, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void store_table(const std::filesystem::path& path, const FareyTable& table) {
    const std::string bytes = serialize_table(table);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
}

FareyTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::CacheRejected, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize_table(buf.str());
}

FareyTable load_or_build_table(const std::filesystem::path& dir, const FareySequence& seq,
                               std::string* rejected) {
    const auto path = dir / ("ftbl-" + std::to_string(seq.order()) + ".bin");
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
        try {
            FareyTable t = load_table(path);
            if (t.order() == seq.order()) return t;
            if (rejected) *rejected = "cached order differs";
        } catch (const Error& e) {
            if (rejected) *rejected = e.what();
        }
    }
    FareyTable table = build_table(seq);
    std::filesystem::create_directories(dir, ec);
    try {
        if (!ec) store_table(path, table);
    } catch (const Error&) {
        // cache is optional
    }
    return table;
}

}  // namespace farey::io
