#include "cli.hpp"
#include "report.hpp"

#include "docclean/binarize.hpp"
#include "docclean/filters.hpp"
#include "docclean/noise.hpp"
#include "docclean/pgm.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <sstream>

using namespace docclean;
using fixtures::Direction;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    const auto b = pgm::read_file(path);
    return {b.begin(), b.end()};
}

GrayImage dot_fixture() {
    auto img = GrayImage::filled(9, 9, 255);
    img.set(4, 4, 0);
    return img;
}

GrayImage stroke_fixture() {
    return fixtures::with_pixels(GrayImage::filled(9, 9, 255),
                                 fixtures::stroke_points({2, 4}, Direction::horizontal, 5), 0);
}

} // namespace

TEST_CASE("denoise") {
    fixtures::TempDir dir("cli");
    const auto in = dir.file("dot.pgm"), out = dir.file("out.pgm");
    pgm::save_file(in, dot_fixture(), pgm::Format::ascii);

    CHECK(run({"denoise", in, out}).code == 0);
    CHECK(pgm::load_file(out) == GrayImage::filled(9, 9, 255));

    CHECK(run({"denoise", in, out, "--k", "0"}).code == 0);
    const auto canonical = pgm::save(dot_fixture(), pgm::Format::binary);
    CHECK(slurp(out) == std::string(canonical.begin(), canonical.end()));

    CHECK(run({"denoise", in, out, "--mode", "paper-literal"}).code == 0);
    CHECK(pgm::load_file(out) == GrayImage::filled(9, 9, 255));

    CHECK(run({"denoise", in, out, "--ascii", "--matrix-size", "4", "--k", "1"}).code == 0);
    CHECK(slurp(out).rfind("P2\n9 9\n255\n", 0) == 0);

    const auto bad = run({"denoise", in, dir.file("odd.pgm"), "--matrix-size", "3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("matrix size") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(dir.file("odd.pgm")));
    CHECK(run({"denoise", in, out, "--k", "-1"}).code == 2);
    CHECK(run({"denoise", in, out, "--mode", "sideways"}).code == 2);
    CHECK(run({"denoise", in, out, "--k", "abc"}).code == 2);
}

TEST_CASE("median") {
    fixtures::TempDir dir("cli");
    const auto flat = dir.file("flat.pgm"), stroke = dir.file("stroke.pgm"), out = dir.file("o.pgm");
    pgm::save_file(flat, GrayImage::filled(6, 5, 90));
    pgm::save_file(stroke, stroke_fixture());

    CHECK(run({"median", flat, out}).code == 0);
    CHECK(pgm::load_file(out) == GrayImage::filled(6, 5, 90));
    CHECK(run({"median", stroke, out}).code == 0);
    CHECK(pgm::load_file(out) == GrayImage::filled(9, 9, 255));

    const auto missing = run({"median", dir.file("nope.pgm"), dir.file("never.pgm")});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("nope.pgm") != std::string::npos);
    CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);
    CHECK_FALSE(std::filesystem::exists(dir.file("never.pgm")));
}

TEST_CASE("binarize") {
    fixtures::TempDir dir("cli");
    const auto in = dir.file("in.pgm"), out = dir.file("out.pgm");

    pgm::save_file(in, GrayImage(2, 1, {100, 200}));
    CHECK(run({"binarize", in, out}).code == 0);
    CHECK(pgm::load_file(out) == GrayImage(2, 1, {0, 255}));

    pgm::save_file(in, GrayImage::filled(3, 3, 17));
    CHECK(run({"binarize", in, out}).code == 0);
    CHECK(pgm::load_file(out) == GrayImage::filled(3, 3, 255));

    const GrayImage two_valued(3, 2, {0, 255, 255, 0, 0, 255});
    pgm::save_file(in, two_valued, pgm::Format::ascii);
    CHECK(run({"binarize", in, out}).code == 0);
    const auto canonical = pgm::save(two_valued, pgm::Format::binary);
    CHECK(slurp(out) == std::string(canonical.begin(), canonical.end()));
}

TEST_CASE("pipeline") {
    fixtures::TempDir dir("cli");
    const auto in = dir.file("in.pgm"), out = dir.file("out.pgm");

    pgm::save_file(in, dot_fixture());
    CHECK(run({"pipeline", in, out}).code == 0);
    CHECK(pgm::load_file(out) == GrayImage::filled(9, 9, 255));

    pgm::save_file(in, stroke_fixture());
    CHECK(run({"pipeline", in, out}).code == 0);
    CHECK(pgm::load_file(out) == stroke_fixture());

    fixtures::Rng rng(12);
    const auto img = fixtures::random_image(rng, 13, 10);
    pgm::save_file(in, img);
    CHECK(run({"pipeline", in, out, "--k", "0"}).code == 0);
    CHECK(pgm::load_file(out) == render_binary(binarize(img)));
    CHECK(run({"pipeline", in, out, "--matrix-size", "4", "--k", "2"}).code == 0);
    CHECK(pgm::load_file(out) == render_binary(binarize(k_filter(img, FilterParams(4, 2)))));
    CHECK(run({"pipeline", in, out, "--matrix-size", "5"}).code == 2);
}

TEST_CASE("noise") {
    fixtures::TempDir dir("cli");
    fixtures::Rng rng(2);
    const auto img = fixtures::random_image(rng, 32, 32);
    const auto in = dir.file("in.pgm"), a = dir.file("a.pgm"), b = dir.file("b.pgm");
    pgm::save_file(in, img);

    CHECK(run({"noise", in, a, "--density", "0"}).code == 0);
    CHECK(pgm::load_file(a) == img);
    CHECK(run({"noise", in, a, "--density", "1", "--salt-fraction", "1"}).code == 0);
    CHECK(pgm::load_file(a) == GrayImage::filled(32, 32, 255));

    CHECK(run({"noise", in, a, "--density", "0.1", "--seed", "99"}).code == 0);
    CHECK(run({"noise", in, b, "--density", "0.1", "--seed", "99"}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(pgm::load_file(a) == add_salt_pepper(img, {0.1, 0.5, 99}));

    CHECK(run({"noise", in, a, "--density", "1.5"}).code == 2);
    CHECK(run({"noise", in, a, "--density", "0.5", "--salt-fraction", "-1"}).code == 2);
    CHECK(run({"noise", in, a}).code == 2);  // density is required
}

TEST_CASE("evaluate") {
    fixtures::TempDir dir("cli");
    fixtures::Rng rng(6);
    auto clean = GrayImage::filled(16, 16, 255);
    for (int x = 3; x < 13; ++x) clean.set(x, 8, 0);
    const auto noisy = add_salt_pepper(clean, {0.05, 0.5, 4});
    const auto filtered = k_filter(noisy, FilterParams{});
    const auto c = dir.file("clean.pgm"), n = dir.file("noisy.pgm"), f = dir.file("filtered.pgm");
    pgm::save_file(c, clean);
    pgm::save_file(n, noisy);
    pgm::save_file(f, filtered);

    SUBCASE("identity row") {
        const auto report = dir.file("r.csv");
        CHECK(run({"evaluate", c, c, "-o", report}).code == 0);
        const auto rows = report::from_csv(slurp(report));
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].metrics->mse == 0.0);
        CHECK(rows[0].metrics->psnr.is_infinite());
        CHECK(rows[0].input_path == c);
        CHECK(rows[0].output_path == report);
    }

    SUBCASE("csv and json agree, rows in input order, truth adds confusion") {
        const auto truth = dir.file("truth.pgm");
        pgm::save_file(truth, clean);
        const auto rc = dir.file("r.csv"), rj = dir.file("r.json");
        const std::vector<std::string> common{"evaluate", c, n, f, "--truth", truth,
                                              "--method", "binarize", "--method", "kfilter",
                                              "--matrix-size", "2", "--k", "1"};
        auto csv_args = common, json_args = common;
        csv_args.insert(csv_args.end(), {"-o", rc});
        json_args.insert(json_args.end(), {"-o", rj, "--format", "json"});
        CHECK(run(csv_args).code == 0);
        CHECK(run(json_args).code == 0);

        auto from_csv = report::from_csv(slurp(rc));
        auto from_json = report::from_json(slurp(rj));
        REQUIRE(from_csv.size() == 2);
        for (auto* rows : {&from_csv, &from_json}) {
            for (auto& r : *rows) r.output_path.clear();
        }
        CHECK(from_csv == from_json);
        CHECK(from_csv[0].input_path == n);
        CHECK(from_csv[1].input_path == f);
        CHECK(from_csv[1].method == report::Method::kfilter);
        CHECK(from_csv[1].filter == FilterParams{});
        CHECK_FALSE(from_csv[1].noise.has_value());
        CHECK(from_csv[0].metrics->confusion.has_value());
        CHECK(from_csv[1].metrics->psnr.value() > from_csv[0].metrics->psnr.value());
    }

    SUBCASE("failures") {
        const auto other = dir.file("small.pgm");
        pgm::save_file(other, GrayImage::filled(4, 4, 0));
        const auto mismatch = run({"evaluate", c, n, other, "-o", dir.file("x.csv")});
        CHECK(mismatch.code == 1);
        CHECK(mismatch.err.find("small.pgm") != std::string::npos);
        CHECK_FALSE(std::filesystem::exists(dir.file("x.csv")));

        const auto gray_truth = dir.file("gray.pgm");
        pgm::save_file(gray_truth, GrayImage::filled(16, 16, 128));
        const auto bad_truth = run({"evaluate", c, n, "--truth", gray_truth, "-o", dir.file("x.csv")});
        CHECK(bad_truth.code == 1);
        CHECK(bad_truth.err.find("gray.pgm") != std::string::npos);

        CHECK(run({"evaluate", c, n, f, "--method", "median", "-o", dir.file("x.csv")}).code == 2);
        CHECK(run({"evaluate", c, n, "--format", "xml", "-o", dir.file("x.csv")}).code == 2);
        CHECK(run({"evaluate", c, n}).code == 2);
    }
}

TEST_CASE("non-PGM input is rejected with a one-line diagnostic") {
    fixtures::TempDir dir("cli");
    const auto png = dir.file("img.png");
    const std::string sig = "\x89PNG\r\n\x1a\n";
    pgm::write_file(png, std::span(reinterpret_cast<const std::uint8_t*>(sig.data()), sig.size()));
    for (const auto* cmd : {"denoise", "median", "binarize", "pipeline"}) {
        const auto r = run({cmd, png, dir.file("out.pgm")});
        CHECK(r.code == 1);
        CHECK(r.err.find("magic") != std::string::npos);
        CHECK_FALSE(std::filesystem::exists(dir.file("out.pgm")));
    }
}

TEST_CASE("command line handling") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--help"}).out.find("denoise") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"sharpen", "a", "b"}).code == 2);
    CHECK(run({"denoise", "only-input.pgm"}).code == 2);
}
