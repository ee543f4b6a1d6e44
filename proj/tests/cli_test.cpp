#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "wg/cli.hpp"
#include "wg/io.hpp"

namespace wg {
namespace {

namespace fs = std::filesystem;

const std::string kFixtures = WG_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "wg_cli_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

TEST(CliR, Examples) {
  EXPECT_EQ(run({"r", "--expr", "x = cos(t); y = sin(t)"}).out, "1\n");
  EXPECT_EQ(run({"r", "--expr", "x = sin(2*t); y = sin(t)"}).out, "0\n");
  const auto fixture = run({"r", kFixtures + "/alpha_r2.json"});
  EXPECT_EQ(fixture.code, kExitOk);
  EXPECT_EQ(fixture.out, "2\n");
  EXPECT_EQ(run({"r", "gamma(-3)"}).out, "-3\n");
  EXPECT_EQ(run({"r", "--json", "gamma0'"}).out, "{\"turning_number\":0}\n");
}

TEST(CliR, InvalidCurve) {
  const auto r = run({"r", "--expr", "x = t; y = t"});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("close"), std::string::npos) << r.err;
  EXPECT_EQ(run({"r", "--expr", "x = q; y = t"}).code, kExitInvalidInput);
  EXPECT_EQ(run({"r", "no-such-file.json"}).code, kExitInvalidInput);
  EXPECT_EQ(run({"r"}).code, kExitInvalidInput);
  EXPECT_EQ(run({"bogus"}).code, kExitInvalidInput);
  EXPECT_EQ(run({"r", "gamma(1)", "--n", "8"}).code, kExitInvalidInput);
}

TEST(CliReduce, Examples) {
  EXPECT_EQ(run({"reduce", kFixtures + "/alpha_5l3r.json"}).out, "gamma(1), L=5 R=3\n");
  EXPECT_EQ(run({"reduce", "--expr", "x = cos(t); y = sin(t)"}).out, "gamma(1), L=2 R=0\n");
  const auto eight = run({"reduce", "--expr", "x = sin(2*t); y = sin(t)"});
  EXPECT_EQ(eight.code, kExitOk);
  EXPECT_EQ(eight.out, "gamma(0), L=2 R=2\nnote: gamma0-or-primed resolved by orientation\n");
  EXPECT_EQ(run({"reduce", "gamma0'"}).out.substr(0, 15), "gamma(0'), L=2 ");
}

TEST(CliReduce, WritesTrace) {
  const auto file = scratch("trace.jsonl");
  ASSERT_EQ(run({"reduce", kFixtures + "/alpha_5l3r.json", "--out", file}).code, kExitOk);
  const auto trace = io::trace_from_jsonl(io::read_file(file));
  EXPECT_EQ(trace.cancel_count(), 3u);
  EXPECT_EQ(trace.terminal, CanonicalIndex{GammaK{1}});
}

TEST(CliReduce, GenericityFailure) {
  const auto r = run({"reduce", "gamma(1)", "--n", "16"});
  EXPECT_EQ(r.code, kExitGenericity);
  EXPECT_NE(r.err.find("generic"), std::string::npos);
}

TEST(CliHomotopy, ClassMismatch) {
  const auto r = run({"homotopy", "gamma(0)", "gamma(1)"});
  EXPECT_EQ(r.code, kExitClassMismatch);
  EXPECT_EQ(r.out, "0 != 1\n");
}

TEST(CliHomotopy, FigureEightsThenVerify) {
  const auto file = scratch("eights.json");
  const auto r = run({"homotopy", "gamma(0)", "gamma(0')", "--out", file});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("frames: ", 0), 0u);
  EXPECT_TRUE(fs::exists(scratch("eights.svg")));
  EXPECT_EQ(run({"verify", file}).code, kExitOk);
  const auto json = run({"verify", "--json", file});
  EXPECT_EQ(io::json::parse(json.out).at("pass"), true);
}

TEST(CliHomotopy, SynthesisFailure) {
  // One frame per stage cannot bridge two distinct curves.
  const auto r = run({"homotopy", "gamma(1)", "--expr", "x = 2*cos(t); y = sin(t)", "--frames", "1"});
  EXPECT_EQ(r.code, kExitSynthesisFailure) << r.out << r.err;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(CliVerify, CorruptedAndMalformed) {
  const auto good = scratch("good.json");
  ASSERT_EQ(run({"homotopy", "gamma(1)", "--expr", "x = 1.2*cos(t); y = sin(t)", "--out", good}).code,
            kExitOk);
  auto j = io::json::parse(io::read_file(good));
  ASSERT_GE(j.size(), 3u);
  j[1]["velocities"][5] = io::json::array({0.0, 0.0});
  const auto bad = scratch("bad.json");
  io::write_file_atomic(bad, j.dump());
  const auto r = run({"verify", bad});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_NE(r.out.find("frame=1 sample=5"), std::string::npos) << r.out;

  const auto single = scratch("single.json");
  io::write_file_atomic(single, io::json::array({j[0]}).dump());
  EXPECT_EQ(run({"verify", single}).code, kExitInvalidInput);
  io::write_file_atomic(single, "[{");
  EXPECT_EQ(run({"verify", single}).code, kExitInvalidInput);
  EXPECT_EQ(run({"verify", scratch("absent.json")}).code, kExitInvalidInput);
}

TEST(CliRender, WritesDeterministicSvg) {
  const auto a = scratch("a.svg"), b = scratch("b.svg");
  EXPECT_EQ(run({"render", "gamma(1)", "--out", a}).code, kExitOk);
  EXPECT_EQ(run({"render", "gamma(1)", "--out", b}).code, kExitOk);
  EXPECT_EQ(io::read_file(a), io::read_file(b));
  EXPECT_NE(io::read_file(a).find("frame-0"), std::string::npos);
  EXPECT_EQ(run({"render", "gamma(1)", "--out", b, "--no-arrows"}).code, kExitOk);
  EXPECT_EQ(io::read_file(b).find("crimson"), std::string::npos);
}

TEST(CliRender, Errors) {
  EXPECT_EQ(run({"render", "gamma(1)"}).code, kExitInvalidInput);
  EXPECT_EQ(run({"render", "gamma(1)", "--out", "/nonexistent-dir/x.svg"}).code, kExitInvalidInput);
  EXPECT_EQ(run({"render", "gamma(1)", "--out", scratch("c.svg"), "--frame-size", "0"}).code,
            kExitInvalidInput);
}

TEST(CliHelp, PrintsUsage) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("reduce"), std::string::npos);
}

}  // namespace
}  // namespace wg
