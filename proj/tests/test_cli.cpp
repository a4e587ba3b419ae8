// End-to-end checks of the coversplit binary: exit codes, output
// reproducibility, and the documented stdout result lines. Each test runs
// the real executable in a scratch directory.

#include <catch2/catch_amalgamated.hpp>

#include "coversplit/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>
#include <unistd.h>

#ifndef COVERSPLIT_BIN
#error "COVERSPLIT_BIN must point at the CLI executable"
#endif

namespace {

namespace fs = std::filesystem;

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() /
              ("coversplit_cli_" + std::to_string(::getpid()) + "_" +
               std::to_string(counter()++));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
    const std::string cmd = std::string(COVERSPLIT_BIN) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("hypergraph build + exhaustive check round-trips through files") {
    Scratch s;
    const auto h = s.path("h.json");
    CHECK(run("hypergraph build --k 2 --l 2 --out " + h) == 0);
    CHECK(run("hypergraph check --in " + h + " --exhaustive") == 0);
    CHECK(run("hypergraph check --in " + h + " --exhaustive --expect-unsplittable") == 0);
    CHECK(fs::exists(h + ".manifest.json"));
}

TEST_CASE("a colorable hypergraph fails --expect-unsplittable with exit 1") {
    Scratch s;
    const auto f = s.path("tiny.json");
    coversplit::Json j;
    j["schema"] = "hypergraph.v1";
    j["k"] = 2;
    j["l"] = 1;
    j["n_vertices"] = 2;
    j["red_edges"] = coversplit::Json::parse("[[0,1]]");
    j["blue_edges"] = coversplit::Json::parse("[]");
    j["root"] = nullptr;
    coversplit::write_text_file(f, coversplit::dump_canonical(j));
    CHECK(run("hypergraph check --in " + f) == 0);
    CHECK(run("hypergraph check --in " + f + " --expect-unsplittable") == 1);
}

TEST_CASE("exit codes: bad arguments 2, capacity guard 3") {
    Scratch s;
    CHECK(run("hypergraph build --k 2") == 2);             // missing --l
    CHECK(run("nonsense") == 2);
    CHECK(run("hypergraph build --k 16 --l 15 --out " + s.path("x.json")) == 3);
    CHECK(run("realize build --k 2 --l 2 --eps 1/2 --out " + s.path("y.json")) == 2);
}

TEST_CASE("realize pipeline: build, verify, coverage, svg") {
    Scratch s;
    const auto r = s.path("r.json");
    CHECK(run("realize build --k 1 --l 3 --eps 1/100 --out " + r) == 0);
    CHECK(run("realize verify --in " + r) == 0);
    CHECK(run("realize svg --in " + r + " --out " + s.path("r.svg")) == 0);
    const auto svg = coversplit::read_text_file(s.path("r.svg"));
    int disks = 0;
    for (std::size_t p = svg.find("class=\"disk\""); p != std::string::npos;
         p = svg.find("class=\"disk\"", p + 1))
        ++disks;
    CHECK(disks == 4);
}

TEST_CASE("chain pipeline over files, byte-identical reruns") {
    Scratch s;
    const auto pts = s.path("pts.json");
    std::vector<coversplit::RationalPoint> points;
    for (int i = 0; i < 40; ++i)
        points.push_back({coversplit::Rational(3 * i + (i % 5)), coversplit::Rational(i * i % 37)});
    coversplit::write_text_file(pts,
                                coversplit::dump_canonical(coversplit::points_to_json(points)));
    const auto chain = s.path("chain.json");
    const auto coloring = s.path("col.json");
    CHECK(run("chain from-points --points " + pts + " --m 3 --out " + chain) == 0);
    CHECK(run("chain check --in " + chain) == 0);
    CHECK(run("chain color --in " + chain + " --out " + coloring) == 0);
    CHECK(run("chain verify --in " + chain + " --coloring " + coloring) == 0);

    const auto chain2 = s.path("chain2.json");
    CHECK(run("chain from-points --points " + pts + " --m 3 --out " + chain2) == 0);
    CHECK(coversplit::read_text_file(chain) == coversplit::read_text_file(chain2));
}

TEST_CASE("split pipeline with a seeded search and thresholds") {
    Scratch s;
    CHECK(run("split thresholds --k 2 --m 10") == 0);
    const auto found = s.path("found.json");
    CHECK(run("chain search --n 9 --m 3 --edges 13 --seed 2 --nodes 200000 --out " + found) ==
          0);
    REQUIRE(fs::exists(found));
    // the found chain is non-special: coloring must be refused
    CHECK(run("chain color --in " + found + " --out " + s.path("c.json")) != 0);

    // identical seed reproduces the file byte for byte
    const auto found2 = s.path("found2.json");
    CHECK(run("chain search --n 9 --m 3 --edges 13 --seed 2 --nodes 200000 --out " + found2) ==
          0);
    CHECK(coversplit::read_text_file(found) == coversplit::read_text_file(found2));
}

TEST_CASE("covering split end to end with reproducible colors") {
    Scratch s;
    // two stacks of 12 disks each covering the small square around them
    coversplit::CoveringInstance inst;
    inst.region = {coversplit::Rational(0), coversplit::Rational(0), coversplit::Rational(1),
                   coversplit::Rational(1)};
    inst.m_target = 10;
    for (int i = 0; i < 24; ++i) {
        const coversplit::Rational jitter(i, 4096);
        inst.disks.push_back({{coversplit::Rational(1, 2) + jitter,
                               coversplit::Rational(1, 2) - jitter},
                              coversplit::Color::Red,
                              i});
    }
    const auto cov = s.path("cov.json");
    coversplit::write_text_file(cov,
                                coversplit::dump_canonical(coversplit::covering_to_json(inst)));
    CHECK(run("split build-cells --in " + cov) == 0);
    const auto colors = s.path("colors.json");
    CHECK(run("split run --in " + cov + " --k 2 --seed 11 --out " + colors) == 0);
    CHECK(run("split verify --in " + cov + " --colors " + colors) == 0);
    CHECK(run("split shatter --in " + cov) == 0);

    const auto colors2 = s.path("colors2.json");
    CHECK(run("split run --in " + cov + " --k 2 --seed 11 --out " + colors2) == 0);
    CHECK(coversplit::read_text_file(colors) == coversplit::read_text_file(colors2));
}
