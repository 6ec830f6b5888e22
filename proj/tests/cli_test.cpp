#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "moveable/gallery.hpp"
#include "moveable/replay.hpp"
#include "moveable/shapes.hpp"
#include "moveable/svg.hpp"

namespace moveable {
namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "moveable");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("moveable_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    fs::path dir_;
};

TEST_F(CliTest, GalleryListNamesTwelveCases) {
    const CliRun r = run({"gallery", "--list"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 12);
    EXPECT_NE(r.out.find("case11_nring"), std::string::npos);
}

TEST_F(CliTest, GalleryEmitWritesScenesAndTraces) {
    const CliRun r = run({"gallery", "--emit", dir_.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const GalleryCase& c : gallery_cases()) {
        EXPECT_EQ(slurp(dir_ / (case_stem(c) + ".scene.json")), save_scene(c.scene));
        EXPECT_EQ(slurp(dir_ / (case_stem(c) + ".trace.jsonl")), save_trace(c.trace));
    }
    EXPECT_EQ(load_scene(slurp(dir_ / "gallery.scene.json")).objects.size(), 12U);
}

TEST_F(CliTest, ReplayMatchesTheLibrary) {
    const GalleryCase c = gallery_cases().at(2);
    const auto scene = write("s.json", save_scene(c.scene));
    const auto trace = write("t.jsonl", save_trace(c.trace));
    const auto out = dir_ / "final.json";
    const auto report = dir_ / "report.json";
    const CliRun r = run({"replay", "--scene", scene.string(), "--trace", trace.string(), "--out", out.string(),
                       "--report", report.string(), "--svg-dir", (dir_ / "svg").string(), "--contours"});
    ASSERT_EQ(r.code, 0) << r.err;
    const ReplayReport expected = replay(c.scene, c.trace);
    EXPECT_EQ(slurp(out), save_scene(expected.final_scene));
    EXPECT_EQ(slurp(report), report_to_json(expected).dump(2) + "\n");
    EXPECT_EQ(slurp(dir_ / "svg" / "after.svg"), emit_svg(expected.final_scene, true));
    EXPECT_EQ(slurp(dir_ / "svg" / "before.svg"), emit_svg(c.scene, true));
}

TEST_F(CliTest, ReplayToStdout) {
    const GalleryCase c = gallery_cases().at(0);
    const auto scene = write("s.json", save_scene(c.scene));
    const auto trace = write("t.jsonl", save_trace(c.trace));
    const CliRun r = run({"replay", "--scene", scene.string(), "--trace", trace.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, save_scene(replay(c.scene, c.trace).final_scene));
}

TEST_F(CliTest, PolicyOverride) {
    Scene s(WorkArea{400, 300}, ContainmentPolicy::fully_inside());
    s.emplace<RectSolidMove>(Rect{10, 10, 100, 60});
    const auto scene = write("s.json", save_scene(s));
    const auto trace = write("t.jsonl", save_trace(std::vector<TraceEvent>{
                                            TraceEvent::down({40, 40}), TraceEvent::move({-960, 40}),
                                            TraceEvent::up({-960, 40})}));
    const CliRun inside = run({"replay", "--scene", scene.string(), "--trace", trace.string()});
    const CliRun free = run({"replay", "--scene", scene.string(), "--trace", trace.string(), "--policy", "unrestricted"});
    ASSERT_EQ(inside.code, 0);
    ASSERT_EQ(free.code, 0);
    EXPECT_EQ(dynamic_cast<const RectSolidMove&>(*load_scene(inside.out).objects[0]).rect().x, 0);
    EXPECT_EQ(dynamic_cast<const RectSolidMove&>(*load_scene(free.out).objects[0]).rect().x, -990);
    EXPECT_EQ(run({"replay", "--scene", scene.string(), "--trace", trace.string(), "--policy", "wild"}).code, 2);
}

TEST_F(CliTest, RenderWritesSvg) {
    const auto scene = write("s.json", save_scene(combined_gallery()));
    const auto svg = dir_ / "g.svg";
    ASSERT_EQ(run({"render", "--scene", scene.string(), "--svg", svg.string(), "--contours"}).code, 0);
    EXPECT_EQ(slurp(svg), emit_svg(combined_gallery(), true));
    const CliRun plain = run({"render", "--scene", scene.string()});
    EXPECT_EQ(plain.out, emit_svg(combined_gallery(), false));
}

TEST_F(CliTest, SyntaxErrorExitsWithTwoAndPosition) {
    const auto scene = write("bad.json", "{\n  \"work\": [1,\n");
    const CliRun r = run({"render", "--scene", scene.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("bad.json:"), std::string::npos) << r.err;
}

TEST_F(CliTest, TraceErrorNamesTheLine) {
    const auto scene = write("s.json", save_scene(gallery_cases().at(0).scene));
    const auto trace = write("t.jsonl", "{\"kind\":\"move\",\"x\":1,\"y\":1}\n{\"kind\":\"hop\",\"x\":1,\"y\":1}\n");
    const CliRun r = run({"replay", "--scene", scene.string(), "--trace", trace.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("t.jsonl:2:"), std::string::npos) << r.err;
}

TEST_F(CliTest, ImpossibleGeometryExitsWithThree) {
    const auto scene = write("s.json", R"({"work":[400,300],"policy":"inside","objects":[
        {"type":"nring","center":[200,150],"inner_radius":90,"outer_radius":50,"small_radius":7,"spacing":10}]})");
    EXPECT_EQ(run({"render", "--scene", scene.string()}).code, 3);
}

TEST_F(CliTest, MissingFileIsAnInputError) {
    EXPECT_EQ(run({"render", "--scene", (dir_ / "nope.json").string()}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"replay", "--scene", "x"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace moveable
