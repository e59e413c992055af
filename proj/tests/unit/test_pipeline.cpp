#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>

#include "helpers.hpp"
#include "tilingforge/error.hpp"
#include "tilingforge/pipeline.hpp"

using namespace tilingforge;

TEST_CASE("fixture catalogue") {
    CHECK(fixture_names().size() == 6);
    CHECK_THROWS_AS(fixture("dp9"), PreconditionError);
    CHECK_FALSE(dp3_fixture().quiver);
    CHECK(fixture("c3").quiver);
}

TEST_CASE("full pipeline passes on every fixture within ten seconds") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto t0 = std::chrono::steady_clock::now();
        const PipelineResult r = run_pipeline(fixture(name), {});
        CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 10.0);
        CHECK(r.ok);
        CHECK(r.summary.find("pipeline: OK") != std::string::npos);
        CHECK(r.summary.find("[FAIL]") == std::string::npos);
    }
}

TEST_CASE("c3 report content") {
    const PipelineResult r = run_pipeline(fixture("c3"), {});
    const std::string s = r.summary;
    CHECK(s.find("passport [3|3|3]") != std::string::npos);
    CHECK(s.find("0.6666666667") != std::string::npos);
    CHECK(r.report.dump().find("0 0 1\\n0 1 1\\n1 0 1\\n") != std::string::npos);
}

TEST_CASE("dp3 determinant stage") {
    PipelineOptions opt;
    opt.stages = {"kasteleyn"};
    const PipelineResult r = run_pipeline(dp3_fixture(), opt);
    CHECK(r.ok);
    CHECK(r.summary.find("z^-1w^-1 - w^-1 - z^-1 - 6 - z - w + zw") != std::string::npos);
    CHECK(r.summary.find("geometry") == std::string::npos);
}

TEST_CASE("mutation stage with invariance check") {
    PipelineOptions opt;
    opt.stages = {"mutate"};
    opt.mutate_node = "1";
    opt.check_invariance = true;
    const PipelineResult r = run_pipeline(fixture("f0-I"), opt);
    CHECK(r.ok);
    CHECK(r.summary.find("invariance PASS") != std::string::npos);
}

TEST_CASE("stage errors are reported by name") {
    PipelineOptions opt;
    opt.stages = {"mutate"};
    opt.mutate_node = "1";
    const PipelineResult r = run_pipeline(fixture("c3"), opt);
    CHECK_FALSE(r.ok);
    CHECK(r.report["stages"]["mutate"].contains("error"));
    CHECK(r.summary.find("pipeline: FAILED") != std::string::npos);
}

TEST_CASE("artifacts and file inputs") {
    const auto dir = std::filesystem::temp_directory_path() / "tilingforge_pipeline_test";
    std::filesystem::remove_all(dir);
    PipelineOptions opt;
    opt.out_dir = dir.string();
    const PipelineResult r = run_pipeline(fixture("conifold"), opt);
    CHECK(r.ok);
    for (const char* f : {"map.json", "diagram.txt", "report.json", "summary.txt"})
        CHECK(std::filesystem::exists(dir / f));
    const Fixture back = fixture_from_file((dir / "map.json").string());
    CHECK(back.map.num_edges() == 4);
    CHECK(run_pipeline(back, {}).ok);
    std::filesystem::remove_all(dir);
}

TEST_CASE("pipeline output is deterministic") {
    const PipelineResult a = run_pipeline(fixture("f0-II"), {});
    const PipelineResult b = run_pipeline(fixture("f0-II"), {});
    CHECK(a.summary == b.summary);
    CHECK(a.report.dump() == b.report.dump());
}

TEST_CASE("seed from the environment") {
    ::unsetenv("TILINGFORGE_SEED");
    CHECK(seed_from_environment() == 0x5EED);
    ::setenv("TILINGFORGE_SEED", "0x10", 1);
    CHECK(seed_from_environment() == 16);
    ::setenv("TILINGFORGE_SEED", "42", 1);
    CHECK(seed_from_environment() == 42);
    ::setenv("TILINGFORGE_SEED", "forty", 1);
    CHECK_THROWS_AS(seed_from_environment(), ParseError);
    ::unsetenv("TILINGFORGE_SEED");
}

TEST_CASE("number formatting") {
    CHECK(format_number(2.0 / 3.0) == "0.6666666667");
    CHECK(format_number(1e-17) == "0");
    CHECK(format_complex({-0.5, 0.8660254037844386}) == "-0.5 + 0.8660254038i");
}
