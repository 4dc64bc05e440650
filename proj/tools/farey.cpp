// farey: command-line front end for the Farey rank library.
//
// Exit codes: 0 success, 2 usage, 3 input format (or unreadable/unwritable
// files), 4 domain errors such as OutOfTable, NoObject or DegenerateObject.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "farey/bench.hpp"
#include "farey/direction.hpp"
#include "farey/error.hpp"
#include "farey/geometry.hpp"
#include "farey/io.hpp"
#include "farey/search.hpp"
#include "farey/sequence.hpp"
#include "farey/shape.hpp"
#include "farey/table.hpp"

namespace fs = std::filesystem;
using farey::Error;
using farey::ErrorCode;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitDomain = 4;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidDenominator:
        case ErrorCode::InvalidOrder:
        case ErrorCode::InvalidArgument:
            return kExitUsage;
        case ErrorCode::InputFormat:
        case ErrorCode::CacheRejected:
            return kExitInput;
        default:
            return kExitDomain;
    }
}

struct Options {
    int order = 0;
    std::string frac;
    std::string algo = "regula";
    bool stats = false;
    std::string orders = "50..400:50";
    std::uint32_t trials = 1000;
    std::uint64_t seed = 42;
    std::string out;
    std::string format;
    std::uint32_t delta_f = 0;
    std::vector<std::string> inputs;
    bool no_cache = false;
};

std::optional<fs::path> cache_dir(const Options& o) {
    if (o.no_cache) return std::nullopt;
    if (const char* dir = std::getenv("FAREY_CACHE_DIR"); dir && *dir) return fs::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "farey-table";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "farey-table";
    return std::nullopt;
}

farey::FareyTable table_for(const Options& o, const farey::FareySequence& seq) {
    const auto dir = cache_dir(o);
    if (!dir) return farey::build_table(seq);
    std::string rejected;
    farey::FareyTable t = farey::io::load_or_build_table(*dir, seq, &rejected);
    if (!rejected.empty()) std::cerr << "farey: cache rejected (" << rejected << "), rebuilt\n";
    return t;
}

farey::DirectionTable directions_for(const Options& o) {
    farey::FareySequence seq(o.order);
    farey::FareyTable table = table_for(o, seq);
    return farey::DirectionTable(std::move(seq), std::move(table));
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error(ErrorCode::InputFormat, "cannot write " + o.out);
}

farey::SearchKey key_of(const std::string& text) {
    const auto [p, q] = farey::io::parse_fraction(text);
    return farey::SearchKey::make(p, q);
}

int run_seq(const Options& o) {
    const farey::FareySequence seq(o.order);
    std::ostringstream out;
    if (o.format == "json") {
        json rows = json::array();
        farey::Rank r = 1;
        for (const auto& f : seq.fractions()) rows.push_back({{"rank", r++}, {"p", f.num()}, {"q", f.den()}});
        out << json{{"order", o.order}, {"f_max", seq.f_max()}, {"fractions", rows}}.dump(2) << '\n';
    } else {
        const char sep = o.format == "csv" ? ',' : ' ';
        farey::Rank r = 1;
        for (const auto& f : seq.fractions()) {
            out << r++ << sep;
            if (o.format == "csv")
                out << f.num() << ',' << f.den() << '\n';
            else
                out << f.str() << '\n';
        }
    }
    emit(o, out.str());
    return 0;
}

int run_rank(const Options& o) {
    const auto [p, q] = farey::io::parse_fraction(o.frac);
    if (q < 1) throw Error(ErrorCode::InvalidDenominator, "denominator must be positive");
    if (p > q) throw Error(ErrorCode::InvalidArgument, "fraction " + o.frac + " exceeds 1");
    const farey::FareySequence seq(o.order);
    const farey::FareyTable table = table_for(o, seq);
    const farey::Rank rank = table.rank_of(p, q);
    if (o.format == "json")
        emit(o, json{{"order", o.order}, {"fraction", o.frac},
                     {"reduced", farey::Fraction::make(p, q).str()}, {"rank", rank}}
                        .dump() + "\n");
    else
        emit(o, std::to_string(rank) + "\n");
    return 0;
}

farey::Algorithm algorithm_of(const std::string& name) {
    if (name == "binary") return farey::Algorithm::binary;
    if (name == "brute") return farey::Algorithm::brute;
    return farey::Algorithm::regula_falsi;
}

int run_closest(const Options& o) {
    const farey::SearchKey key = key_of(o.frac);
    const farey::FareySequence seq(o.order);
    const farey::FareyTable table = table_for(o, seq);
    const auto result = farey::find_closest(seq, table, key, algorithm_of(o.algo));
    const auto bracket = farey::bracket_range(seq, table, key);

    if (o.format == "json") {
        json j{{"order", o.order}, {"key", o.frac}, {"closest", result.closest.str()}};
        if (o.stats) {
            j["rank"] = result.rank;
            j["algo"] = std::string(farey::to_string(result.algorithm));
            j["iterations"] = result.iterations;
            j["bracket"] = {{"f1", bracket.range.f1}, {"f2", bracket.range.f2},
                            {"lower", bracket.lower.str()}, {"upper", bracket.upper.str()}};
        }
        emit(o, j.dump() + "\n");
        return 0;
    }
    std::ostringstream out;
    out << result.closest.str() << '\n';
    if (o.stats) {
        out << "rank " << result.rank << '\n'
            << "algo " << farey::to_string(result.algorithm) << '\n'
            << "iterations " << result.iterations << '\n'
            << "bracket " << bracket.range.f1 << ".." << bracket.range.f2 << " ("
            << bracket.lower.str() << ", " << bracket.upper.str() << ")\n";
    }
    emit(o, out.str());
    return 0;
}

int run_bench(const Options& o) {
    const auto orders = farey::io::parse_orders(o.orders);
    const auto stats = farey::bench_iterations(orders, o.trials, o.seed);
    emit(o, farey::bench_csv(stats, o.seed));
    return 0;
}

// A contour from JSON, or the traced boundary of a PBM bitmap.
farey::DigitalContour load_contour(const std::string& path) {
    const std::string text = farey::io::read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::InputFormat, path + ": " + e.what());
        }
        return farey::io::contour_from_json(j);
    }
    return farey::trace_boundary(farey::io::parse_pbm(text));
}

int run_approx(const Options& o) {
    const auto contour = load_contour(o.inputs.front());
    const auto dt = directions_for(o);
    const auto approx = farey::approximate_polygon(dt, contour, {o.order, o.delta_f});

    if (o.format == "svg") {
        emit(o, farey::io::to_svg(contour, approx.polygon));
    } else if (o.format == "text") {
        std::ostringstream out;
        for (const auto& v : approx.polygon.vertices) out << v.x << ' ' << v.y << '\n';
        emit(o, out.str());
    } else {
        json j = farey::io::to_json(approx.polygon);
        j["order"] = o.order;
        j["delta_f"] = o.delta_f;
        j["metrics"] = farey::io::to_json(approx.metrics);
        emit(o, j.dump() + "\n");
    }
    return 0;
}

json descriptor_json(const farey::ShapeDescriptor& d) {
    json j = farey::io::to_json(d);
    json degrees = json::array();
    for (auto e : d.entries) degrees.push_back(farey::to_decimal(farey::interior_degrees(d.d_total, e), 2));
    j["interior_degrees"] = degrees;
    return j;
}

int run_shape(const Options& o) {
    if (o.inputs.size() > 2) throw Error(ErrorCode::InvalidArgument, "shape takes one or two --input files");
    const auto dt = directions_for(o);
    std::vector<farey::ShapeDescriptor> ds;
    for (const auto& path : o.inputs) {
        const auto approx = farey::approximate_polygon(dt, load_contour(path), {o.order, o.delta_f});
        ds.push_back(farey::descriptor_of(dt, approx.polygon));
    }

    if (o.format == "text") {
        std::ostringstream out;
        for (const auto& d : ds) {
            for (std::size_t k = 0; k < d.entries.size(); ++k)
                out << (k ? " " : "") << d.entries[k];
            out << '\n';
        }
        if (ds.size() == 2)
            out << "score " << farey::to_decimal(farey::compare_cyclic(ds[0], ds[1]).degrees, 4) << '\n';
        emit(o, out.str());
        return 0;
    }
    if (ds.size() == 1) {
        emit(o, descriptor_json(ds[0]).dump() + "\n");
        return 0;
    }
    const auto score = farey::compare_cyclic(ds[0], ds[1]);
    emit(o, json{{"descriptors", {descriptor_json(ds[0]), descriptor_json(ds[1])}},
                 {"score_degrees", score.degrees.str()},
                 {"score", farey::to_decimal(score.degrees, 4)}}
                    .dump() + "\n");
    return 0;
}

int run_check(const Options& o) {
    const farey::FareySequence seq(o.order);
    const auto report = farey::check_table_properties(farey::build_table(seq));
    std::ostringstream out;
    out << "order " << o.order << "\nf_max " << seq.f_max() << "\ncells " << report.cells_checked
        << "\nrank_sum " << (report.rank_sum ? "ok" : "FAIL") << "\nrows_decreasing "
        << (report.rows_decreasing ? "ok" : "FAIL") << "\ncolumns_increasing "
        << (report.columns_increasing ? "ok" : "FAIL") << "\ncolumn_symmetry "
        << (report.column_symmetry ? "ok" : "FAIL") << '\n';
    for (const auto& v : report.violations) out << "violation " << v << '\n';
    emit(o, out.str());
    return report.ok() ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Farey sequences, rank tables, closest-fraction search and digital geometry"};
    app.require_subcommand(1);
    Options o;

    // Subcommands without a required order default to kDefaultOrder after
    // parsing, since all of them share one variable.
    constexpr int kDefaultOrder = 200;
    auto order_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--order", o.order, "Farey order n")
                        ->check(CLI::Range(1, farey::kMaxOrder));
        if (required) opt->required();
        else opt->default_str(std::to_string(kDefaultOrder));
    };
    auto format_opt = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember(allowed))
            ->default_str(allowed.front());
    };
    auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output file (default stdout)"); };
    auto cache_opt = [&](CLI::App* sub) {
        sub->add_flag("--no-cache", o.no_cache, "Rebuild the rank table instead of using the cache");
    };

    auto* seq = app.add_subcommand("seq", "List the Farey sequence");
    order_opt(seq, true);
    format_opt(seq, {"text", "json", "csv"});
    out_opt(seq);

    auto* rank = app.add_subcommand("rank", "Rank of p/q in the Farey sequence");
    order_opt(rank, true);
    rank->add_option("--frac", o.frac, "Fraction p/q")->required();
    format_opt(rank, {"text", "json"});
    out_opt(rank);
    cache_opt(rank);

    auto* closest = app.add_subcommand("closest", "Closest Farey fraction to p/q");
    order_opt(closest, true);
    closest->add_option("--frac", o.frac, "Key p/q with 0 <= p <= q")->required();
    closest->add_option("--algo", o.algo, "Search algorithm")
        ->check(CLI::IsMember({"binary", "regula", "brute"}))
        ->capture_default_str();
    closest->add_flag("--stats", o.stats, "Print rank, iterations and bracket");
    format_opt(closest, {"text", "json"});
    out_opt(closest);
    cache_opt(closest);

    auto* bench = app.add_subcommand("bench", "Iteration counts of both searches on random keys");
    bench->add_option("--orders", o.orders, "Orders A..B:STEP")->capture_default_str();
    bench->add_option("--trials", o.trials, "Keys per order")->check(CLI::PositiveNumber)->capture_default_str();
    bench->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    format_opt(bench, {"csv"});
    out_opt(bench);

    auto* approx = app.add_subcommand("approx", "Polygonal approximation of a contour or bitmap");
    order_opt(approx, false);
    approx->add_option("--input", o.inputs, "Contour JSON or PBM (P1) file")->required()->expected(1);
    approx->add_option("--delta-f", o.delta_f, "Merge threshold in direction-index units")
        ->capture_default_str();
    format_opt(approx, {"json", "svg", "text"});
    out_opt(approx);
    cache_opt(approx);

    auto* shape = app.add_subcommand("shape", "Shape descriptor; two inputs are also compared");
    order_opt(shape, false);
    shape->add_option("--input", o.inputs, "Contour JSON or PBM (P1) file, once or twice")
        ->required()
        ->expected(1, 2);
    shape->add_option("--delta-f", o.delta_f, "Merge threshold in direction-index units")
        ->capture_default_str();
    format_opt(shape, {"json", "text"});
    out_opt(shape);
    cache_opt(shape);

    auto* check = app.add_subcommand("check", "Verify rank-table properties");
    order_opt(check, true);
    out_opt(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto* sub = app.get_subcommands().front();
    if (o.order == 0) o.order = kDefaultOrder;
    if (const auto* fmt = sub->get_option_no_throw("--format"); fmt && o.format.empty())
        o.format = fmt->get_default_str();

    try {
        if (sub == seq) return run_seq(o);
        if (sub == rank) return run_rank(o);
        if (sub == closest) return run_closest(o);
        if (sub == bench) return run_bench(o);
        if (sub == approx) return run_approx(o);
        if (sub == shape) return run_shape(o);
        return run_check(o);
    } catch (const Error& e) {
        std::cerr << "farey: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "farey: " << e.what() << '\n';
        return 1;
    }
}
