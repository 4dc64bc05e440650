#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

#include "farey/error.hpp"
#include "farey/io.hpp"

using namespace farey;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("farey-io-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST(Pbm, ParsesWithComments) {
    const auto bm = io::parse_pbm("P1\n# a comment\n3 2\n0 1 0\n1 1 1\n");
    EXPECT_EQ(bm.width, 3);
    EXPECT_EQ(bm.height, 2);
    EXPECT_FALSE(bm.at(0, 0));
    EXPECT_TRUE(bm.at(1, 0));
    EXPECT_TRUE(bm.at(2, 1));
    // Rows without separators are legal in plain PBM.
    EXPECT_EQ(io::parse_pbm("P1 3 2 010111").pixels, bm.pixels);
}

TEST(Pbm, RoundTrip) {
    Bitmap bm(5, 4);
    bm.set(1, 1);
    bm.set(4, 3);
    EXPECT_EQ(io::parse_pbm(io::write_pbm(bm)).pixels, bm.pixels);
}

TEST(Pbm, ErrorsNameTheOffset) {
    EXPECT_EQ(code_of([] { io::parse_pbm("P4\n1 1\n1"); }), ErrorCode::InputFormat);
    EXPECT_NE(message_of([] { io::parse_pbm("P4\n1 1\n1"); }).find("offset 1"), std::string::npos);
    EXPECT_NE(message_of([] { io::parse_pbm("XX"); }).find("offset 0"), std::string::npos);
    EXPECT_NE(message_of([] { io::parse_pbm("P1\n2 2\n1 1 1"); }).find("truncated"), std::string::npos);
    EXPECT_NE(message_of([] { io::parse_pbm("P1\n2 1\n1 2"); }).find("offset 9"), std::string::npos);
    EXPECT_EQ(code_of([] { io::parse_pbm("P1\n0 3\n"); }), ErrorCode::InputFormat);
    EXPECT_EQ(code_of([] { io::parse_pbm("P1\nx"); }), ErrorCode::InputFormat);
}

TEST(Json, ContourRoundTrip) {
    DigitalContour c{{{0, 0}, {1, 0}, {2, 1}, {2, 2}}, false};
    const auto back = io::contour_from_json(io::to_json(c));
    EXPECT_EQ(back.points, c.points);
    EXPECT_EQ(back.closed, c.closed);
    EXPECT_EQ(io::to_json(c).dump(), R"({"closed":false,"points":[[0,0],[1,0],[2,1],[2,2]]})");
}

TEST(Json, ContourValidation) {
    using nlohmann::json;
    EXPECT_EQ(code_of([] { io::contour_from_json(json::parse(R"({"points":[[0,0],[3,0],[3,1]]})")); }),
              ErrorCode::InputFormat);
    EXPECT_EQ(code_of([] { io::contour_from_json(json::parse(R"({"points":[[0,0],[1]]})")); }),
              ErrorCode::InputFormat);
    EXPECT_EQ(code_of([] { io::contour_from_json(json::parse(R"({"closed":true})")); }),
              ErrorCode::InputFormat);
    EXPECT_EQ(code_of([] { io::contour_from_json(json::parse(R"({"points":"no"})")); }),
              ErrorCode::InputFormat);
    // "closed" defaults to true.
    EXPECT_TRUE(io::contour_from_json(json::parse(R"({"points":[[0,0],[1,0],[1,1]]})")).closed);
}

TEST(Json, PolygonAndDescriptorRoundTrip) {
    Polygon p{{{2, 2}, {2, 9}, {9, 9}, {9, 2}}, true};
    const auto pb = io::polygon_from_json(io::to_json(p));
    EXPECT_EQ(pb.vertices, p.vertices);
    EXPECT_TRUE(pb.closed);

    ShapeDescriptor d{50, 3056, {764, 764, 764, 764}};
    EXPECT_EQ(io::descriptor_from_json(io::to_json(d)), d);
    auto bad = io::to_json(d);
    bad["entries"][0] = 3056;
    EXPECT_EQ(code_of([&] { io::descriptor_from_json(bad); }), ErrorCode::InputFormat);
}

TEST(Json, MetricsAreExactFractions) {
    const ApproxMetrics m{4, Fraction::make(28, 4), Fraction::make(9, 2)};
    const auto j = io::to_json(m);
    EXPECT_EQ(j["vertex_count"], 4);
    EXPECT_EQ(j["compression_ratio"], "7/1");
    EXPECT_EQ(j["max_deviation_sq"], "9/2");
}

TEST(Svg, ContainsContourAndPolygon) {
    DigitalContour c{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}, true};
    Polygon p{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}, true};
    const auto svg = io::to_svg(c, p);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("<polyline"), std::string::npos);
    EXPECT_NE(svg.find("stroke-opacity"), std::string::npos);
    EXPECT_NE(svg.find("d=\"M0,0 L0,1 L1,1 L1,0 Z\""), std::string::npos);
    EXPECT_EQ(svg.find("<script"), std::string::npos);
}

TEST(Args, Fractions) {
    EXPECT_EQ(io::parse_fraction("341/556"), (std::pair<Int, Int>{341, 556}));
    EXPECT_EQ(io::parse_fraction("0/3"), (std::pair<Int, Int>{0, 3}));
    for (const char* bad : {"", "3", "3/", "/4", "a/b", "1/2/3", "-1/2", "1.5/2", " 1/2"})
        EXPECT_EQ(code_of([&] { io::parse_fraction(bad); }), ErrorCode::InvalidArgument) << bad;
}

TEST(Args, OrderRanges) {
    EXPECT_EQ(io::parse_orders("50..400:50"), (std::vector<int>{50, 100, 150, 200, 250, 300, 350, 400}));
    EXPECT_EQ(io::parse_orders("3..5"), (std::vector<int>{3, 4, 5}));
    EXPECT_EQ(io::parse_orders("7"), (std::vector<int>{7}));
    EXPECT_EQ(io::parse_orders("10..15:4"), (std::vector<int>{10, 14}));
    for (const char* bad : {"0", "5..3", "1..5:0", "a..b", "1..", "..5", "1..99999"})
        EXPECT_EQ(code_of([&] { io::parse_orders(bad); }), ErrorCode::InvalidArgument) << bad;
}

TEST(Cache, StoreLoadRoundTrip) {
    TempDir dir;
    const FareySequence seq(100);
    const FareyTable table = build_table(seq);
    io::store_table(dir.path / "t.bin", table);
    const FareyTable back = io::load_table(dir.path / "t.bin");
    EXPECT_EQ(back.order(), 100);
    EXPECT_EQ(back.f_max(), seq.f_max());
    EXPECT_TRUE(std::equal(back.cells().begin(), back.cells().end(), table.cells().begin(),
                           table.cells().end()));
}

TEST(Cache, HeaderLayout) {
    const FareyTable table = build_table(FareySequence(4));
    const std::string bytes = io::serialize_table(table);
    ASSERT_EQ(bytes.size(), 4u + 1 + 8 + 8 + 20 * 4);
    EXPECT_EQ(bytes.substr(0, 4), "FTBL");
    EXPECT_EQ(bytes[4], 1);
    EXPECT_EQ(bytes[5], 4);   // order, little-endian
    EXPECT_EQ(bytes[13], 7);  // f_max
    // First cell T(0,1) = rank of 0/1.
    EXPECT_EQ(static_cast<unsigned char>(bytes[21]), 1);
}

TEST(Cache, RejectsCorruption) {
    const FareyTable table = build_table(FareySequence(20));
    const std::string good = io::serialize_table(table);

    auto rejected = [](std::string bytes) {
        return code_of([&] { io::deserialize_table(bytes); }) == ErrorCode::CacheRejected;
    };
    EXPECT_TRUE(rejected(good.substr(0, good.size() - 3)));
    EXPECT_TRUE(rejected(good.substr(0, 10)));
    EXPECT_TRUE(rejected(good + "x"));
    std::string magic = good;
    magic[0] = 'X';
    EXPECT_TRUE(rejected(magic));
    std::string fmax = good;
    fmax[13] = static_cast<char>(fmax[13] + 1);
    EXPECT_TRUE(rejected(fmax));
    std::string order = good;
    order[5] = 21;
    EXPECT_TRUE(rejected(order));
    std::string cell = good;
    cell[21 + 4 * 25] = static_cast<char>(0xff);  // an invalid cell made nonzero
    EXPECT_TRUE(rejected(cell));

    std::string version = good;
    version[4] = 2;
    EXPECT_NE(message_of([&] { io::deserialize_table(version); }).find("unsupported version 2"),
              std::string::npos);
}

TEST(Cache, TruncatedFileIsRebuilt) {
    TempDir dir;
    const FareySequence seq(30);
    const std::string good = io::serialize_table(build_table(seq));
    const auto path = dir.path / "ftbl-30.bin";
    {
        std::ofstream out(path, std::ios::binary);
        out << good.substr(0, good.size() / 2);
    }
    std::string why;
    const FareyTable t = io::load_or_build_table(dir.path, seq, &why);
    EXPECT_NE(why.find("grid size"), std::string::npos);
    EXPECT_EQ(t.rank_of(29, 30), seq.f_max() - 1);
    // The rebuilt table replaced the bad entry.
    EXPECT_EQ(io::read_file(path), good);
    why.clear();
    io::load_or_build_table(dir.path, seq, &why);
    EXPECT_TRUE(why.empty());
}
