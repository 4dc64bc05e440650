#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

#include "farey/geometry.hpp"
#include "farey/io.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using farey::Bitmap;
using nlohmann::json;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

class Cli : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        std::random_device rd;
        dir_ = fs::temp_directory_path() / ("farey-cli-" + std::to_string(rd()));
        fs::create_directories(dir_);
    }
    static void TearDownTestSuite() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }

    static Outcome run(const std::string& args) {
        const fs::path err = dir_ / "stderr.txt";
        const std::string cmd = "FAREY_CACHE_DIR='" + (dir_ / "cache").string() + "' '" FAREY_CLI "' " +
                                args + " 2>'" + err.string() + "'";
        Outcome r;
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return r;
        char buf[4096];
        std::size_t n;
        while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
        const int status = pclose(pipe);
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        std::ifstream in(err);
        std::stringstream ss;
        ss << in.rdbuf();
        r.err = ss.str();
        return r;
    }

    static fs::path write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    static fs::path square_pbm() {
        Bitmap bm(12, 12);
        for (int y = 2; y <= 9; ++y)
            for (int x = 2; x <= 9; ++x) bm.set(x, y);
        return write("square.pbm", farey::io::write_pbm(bm));
    }

    static inline fs::path dir_;
};

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_F(Cli, SeqCsv) {
    const auto r = run("seq --order 5 --format csv");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 11u);
    EXPECT_EQ(rows.front(), "1,0,1");
    EXPECT_EQ(rows.back(), "11,1,1");
    EXPECT_EQ(rows[5], "6,1,2");
}

TEST_F(Cli, SeqFormats) {
    EXPECT_EQ(lines(run("seq --order 1").out).size(), 2u);
    const auto j = json::parse(run("seq --order 3 --format json").out);
    EXPECT_EQ(j["f_max"], 5);
    EXPECT_EQ(j["fractions"][2]["q"], 2);
}

TEST_F(Cli, UsageErrors) {
    const auto r = run("seq --order 0");
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("seq").code, 2);
    EXPECT_EQ(run("seq --order 5 --format svg").code, 2);
    EXPECT_EQ(run("rank --order 4 --frac 1/0").code, 2);
    EXPECT_EQ(run("rank --order 4 --frac 5/3").code, 2);
    EXPECT_EQ(run("rank --order 4 --frac x").code, 2);
    EXPECT_EQ(run("closest --order 4 --frac 3/2").code, 2);
    EXPECT_EQ(run("closest --order 4 --frac 1/2 --algo newton").code, 2);
    EXPECT_EQ(run("bench --orders 9..3").code, 2);
    EXPECT_EQ(run("seq --order 5 --bogus").code, 2);
}

TEST_F(Cli, Rank) {
    EXPECT_EQ(run("rank --order 4 --frac 2/4").out, "4\n");
    EXPECT_EQ(run("rank --order 4 --frac 0/3").out, "1\n");
    const auto r = run("rank --order 4 --frac 3/5");
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.err.find("OutOfTable"), std::string::npos);
    // Same answer without the cache.
    EXPECT_EQ(run("rank --order 4 --frac 2/4 --no-cache").out, "4\n");
}

TEST_F(Cli, CorruptCacheIsRebuilt) {
    ASSERT_EQ(run("rank --order 7 --frac 1/7").code, 0);
    const fs::path entry = dir_ / "cache" / "ftbl-7.bin";
    ASSERT_TRUE(fs::exists(entry));
    fs::resize_file(entry, 30);
    const auto r = run("rank --order 7 --frac 1/7");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n");
    EXPECT_NE(r.err.find("cache rejected"), std::string::npos);
    EXPECT_GT(fs::file_size(entry), 30u);
}

TEST_F(Cli, Closest) {
    EXPECT_EQ(run("closest --order 55 --frac 341/556").out, "27/44\n");
    EXPECT_EQ(run("closest --order 4 --frac 1/2").out, "1/2\n");
    const auto binary = run("closest --order 75 --frac 78/145 --algo binary");
    const auto regula = run("closest --order 75 --frac 78/145 --algo regula");
    const auto brute = run("closest --order 75 --frac 78/145 --algo brute");
    EXPECT_EQ(binary.out, "7/13\n");
    EXPECT_EQ(regula.out, binary.out);
    EXPECT_EQ(brute.out, binary.out);

    const auto stats = lines(run("closest --order 55 --frac 341/556 --stats").out);
    ASSERT_GE(stats.size(), 5u);
    EXPECT_EQ(stats[1], "rank 578");
    EXPECT_EQ(stats[4].rfind("bracket ", 0), 0u);
    const auto j = json::parse(run("closest --order 55 --frac 341/556 --stats --format json").out);
    EXPECT_EQ(j["closest"], "27/44");
    EXPECT_EQ(j["rank"], 578);
}

TEST_F(Cli, BenchIsDeterministic) {
    const auto a = dir_ / "a.csv";
    const auto b = dir_ / "b.csv";
    ASSERT_EQ(run("bench --orders 50..400:50 --trials 200 --seed 7 --out '" + a.string() + "'").code, 0);
    ASSERT_EQ(run("bench --orders 50..400:50 --trials 200 --seed 7 --out '" + b.string() + "'").code, 0);
    const std::string text = farey::io::read_file(a);
    EXPECT_EQ(text, farey::io::read_file(b));

    std::vector<std::string> data;
    for (const auto& line : lines(text))
        if (!line.empty() && line[0] != '#' && line.rfind("order,", 0) != 0) data.push_back(line);
    EXPECT_EQ(data.size(), 16u);
    EXPECT_NE(text.find("order,algo,trials,mean_iters,min_iters,max_iters,agreement"), std::string::npos);

    EXPECT_NE(run("bench --orders 10 --trials 5 --out /nonexistent-dir/x.csv").code, 0);
}

TEST_F(Cli, ApproxSquare) {
    const auto pbm = square_pbm();
    const auto r = run("approx --order 50 --delta-f 0 --input '" + pbm.string() + "'");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["vertices"].size(), 4u);
    EXPECT_EQ(j["metrics"]["vertex_count"], 4);
    // The emitted polygon loads back.
    EXPECT_EQ(farey::io::polygon_from_json(j).vertices.size(), 4u);

    const auto svg = run("approx --order 50 --format svg --input '" + pbm.string() + "'");
    EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.out.find("<path"), std::string::npos);
}

TEST_F(Cli, ApproxSweepIsMonotone) {
    const std::vector<std::pair<double, double>> tri{{4, 6}, {50, 10}, {20, 44}};
    const auto pbm = write("tri.pbm", farey::io::write_pbm(farey::oracle::rasterize_convex(56, 50, tri)));
    std::size_t previous = SIZE_MAX;
    for (int df : {0, 2, 8, 32, 128, 512}) {
        const auto r = run("approx --order 50 --delta-f " + std::to_string(df) + " --input '" + pbm.string() + "'");
        ASSERT_EQ(r.code, 0) << r.err;
        const std::size_t count = json::parse(r.out)["vertices"].size();
        EXPECT_LE(count, previous) << "delta_f " << df;
        previous = count;
    }
}

TEST_F(Cli, ApproxErrors) {
    const auto bad = write("bad.pbm", "P7\n1 1\n1\n");
    const auto r = run("approx --input '" + bad.string() + "'");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("offset"), std::string::npos);

    const auto empty = write("empty.pbm", "P1\n3 3\n000000000\n");
    const auto e = run("approx --input '" + empty.string() + "'");
    EXPECT_EQ(e.code, 4);
    EXPECT_NE(e.err.find("NoObject"), std::string::npos);

    const auto dot = write("dot.pbm", "P1\n3 3\n000010000\n");
    const auto d = run("approx --input '" + dot.string() + "'");
    EXPECT_EQ(d.code, 4);
    EXPECT_NE(d.err.find("DegenerateObject"), std::string::npos);

    EXPECT_EQ(run("approx --input '" + (dir_ / "missing.pbm").string() + "'").code, 3);
    const auto badjson = write("bad.json", "{\"points\": [[0,0],[5,5],[0,1]]}");
    EXPECT_EQ(run("approx --input '" + badjson.string() + "'").code, 3);
}

TEST_F(Cli, ApproxFromContourJson) {
    const auto contour = write("open.json", R"({"closed":false,"points":[[0,0],[1,0],[2,0],[3,1],[4,2]]})");
    const auto r = run("approx --order 10 --input '" + contour.string() + "'");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_FALSE(j["closed"].get<bool>());
    EXPECT_EQ(j["vertices"].front(), json::array({0, 0}));
    EXPECT_EQ(j["vertices"].back(), json::array({4, 2}));
}

TEST_F(Cli, ShapeSquareAndComparison) {
    const auto pbm = square_pbm();
    const auto r = run("shape --order 50 --input '" + pbm.string() + "'");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto d = farey::io::descriptor_from_json(json::parse(r.out));
    ASSERT_EQ(d.entries.size(), 4u);
    for (auto e : d.entries) EXPECT_EQ(e, d.d_total / 4);

    const std::vector<std::pair<double, double>> quad{{20, 14}, {22, 80}, {90, 70}, {70, 18}};
    const Bitmap b = farey::oracle::rasterize_convex(100, 96, quad);
    Bitmap turned(b.height, b.width);
    for (int y = 0; y < b.height; ++y)
        for (int x = 0; x < b.width; ++x)
            if (b.at(x, y)) turned.set(b.height - 1 - y, x);
    const auto p1 = write("quad.pbm", farey::io::write_pbm(b));
    const auto p2 = write("quad90.pbm", farey::io::write_pbm(turned));
    const auto cmp = run("shape --order 200 --delta-f 6116 --input '" + p1.string() + "' --input '" +
                         p2.string() + "'");
    ASSERT_EQ(cmp.code, 0) << cmp.err;
    EXPECT_EQ(json::parse(cmp.out)["score_degrees"], "0/1");

    const auto open = write("open2.json", R"({"closed":false,"points":[[0,0],[1,0],[2,1]]})");
    EXPECT_EQ(run("shape --input '" + open.string() + "'").code, 4);
}

TEST_F(Cli, Check) {
    const auto r = run("check --order 25");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("rank_sum ok"), std::string::npos);
}
