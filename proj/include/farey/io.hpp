#pragma once

/**
 * @file io.hpp
 * @brief File formats: PBM bitmaps, JSON contours/polygons/descriptors,
 * SVG output and the binary table cache.
 */

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "farey/geometry.hpp"
#include "farey/shape.hpp"
#include "farey/table.hpp"

namespace farey::io {

// "p/q" with decimal non-negative integers. Throws InvalidArgument.
std::pair<Int, Int> parse_fraction(std::string_view text);

// "A..B:STEP", "A..B" (step 1) or a single "N".
std::vector<int> parse_orders(std::string_view text);

// Plain PBM (P1); '1' is foreground. Throws InputFormat naming the byte
// offset of the first problem.
Bitmap parse_pbm(std::string_view text);
std::string write_pbm(const Bitmap& bitmap);

nlohmann::json to_json(const DigitalContour& contour);
DigitalContour contour_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Polygon& polygon);
Polygon polygon_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ApproxMetrics& metrics);

nlohmann::json to_json(const ShapeDescriptor& descriptor);
ShapeDescriptor descriptor_from_json(const nlohmann::json& j);

// Contour as a faint polyline under the polygon as a stroked path.
std::string to_svg(const DigitalContour& contour, const Polygon& polygon);

// Binary cache: "FTBL", version byte 1, order and f_max as u64 little-endian,
// then the grid row-major as u32 little-endian (0 for invalid cells).
inline constexpr std::uint8_t kCacheVersion = 1;

std::string serialize_table(const FareyTable& table);
// Throws CacheRejected on a bad magic, version, size or inconsistent header.
FareyTable deserialize_table(std::string_view bytes);

void store_table(const std::filesystem::path& path, const FareyTable& table);
FareyTable load_table(const std::filesystem::path& path);

// Loads <dir>/ftbl-<order>.bin when present and valid, otherwise builds the
// table and (best effort) rewrites the cache entry. `rejected` receives the
// reason a cached file was discarded, if any.
FareyTable load_or_build_table(const std::filesystem::path& dir, const FareySequence& seq,
                               std::string* rejected = nullptr);

std::string read_file(const std::filesystem::path& path);

}  // namespace farey::io
