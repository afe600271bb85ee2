#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "lfd/calibration.hpp"
#include "lfd/catalog.hpp"
#include "lfd/report.hpp"

using namespace lfd;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  const std::string cmd = std::string(LFD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& file) { return std::string(LFD_TEST_DATA) + "/" + file; }

}  // namespace

TEST(Catalog, Entries) {
  EXPECT_EQ(catalog_names().size(), 8U);
  EXPECT_EQ(catalog("A3").h, "x1*x2*x3");
  EXPECT_EQ(catalog("star3").variables.size(), 6U);
  EXPECT_FALSE(catalog("A2").op.has_value());
  try {
    catalog("E6");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownCatalogEntry);
  }
}

TEST(Catalog, BraceletIsTheClassicalDiscriminant) {
  const std::vector<std::string> v{"a", "b", "c", "d"};
  const MPoly typed = parse_poly("27*a^2*d^2 - 18*a*b*c*d + 4*a*c^3 + 4*b^3*d - b^2*c^2", v);
  EXPECT_EQ(binary_cubic_discriminant(), typed);
  const auto d = build_divisor(parse_poly(catalog("bracelet").h, v));
  EXPECT_EQ(d.n, 4U);
}

TEST(SpecFile, JsonRoundTrip) {
  const auto spec = catalog("bracelet");
  const auto back = spec_from_json(spec_to_json(spec));
  EXPECT_EQ(back.h, spec.h);
  EXPECT_EQ(back.op, spec.op);
  EXPECT_EQ(back.variables, spec.variables);
  EXPECT_THROW(spec_from_json(nlohmann::json{{"h", "x"}}), Error);
  EXPECT_THROW(load_spec_file(data("missing.json")), Error);
}

TEST(SpecFile, GivenFormAndOperator) {
  const auto spec = load_spec_file(data("normal_crossing_given_f.json"));
  const Report r = run_report(spec);
  EXPECT_EQ(r.f_rule, "given");
  EXPECT_EQ(r.operator_source, "given");
  EXPECT_EQ(r.pair.c, -8);
  ASSERT_TRUE(r.agree);
  EXPECT_TRUE(*r.agree);
  EXPECT_EQ(r.spectral->b_h.factored_string(), "(s + 1)^2");
}

TEST(ReportTest, SizeGuard) {
  EXPECT_THROW(guard_size(7, false), Error);
  EXPECT_NO_THROW(guard_size(7, true));
  try {
    guard_size(20, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(ReportTest, ExitCodes) {
  EXPECT_EQ(exit_code(ErrorCode::NotLinearFree), 3);
  EXPECT_EQ(exit_code(ErrorCode::Syntax), 3);
  EXPECT_EQ(exit_code(ErrorCode::NotProportional), 4);
  EXPECT_EQ(exit_code(ErrorCode::TooLarge), 4);
  EXPECT_EQ(exit_code(ErrorCode::WindowUnstable), 2);
}

TEST(ReportTest, JsonContent) {
  const Report r = run_report(catalog("star3"));
  EXPECT_TRUE(r.hard_checks_pass());
  const auto j = to_json(r);
  EXPECT_EQ(j["bernstein"]["spectral"]["factored"], "(s + 4/3)*(s + 1)^4*(s + 2/3)");
  EXPECT_EQ(j["bernstein"]["agree"], true);
  EXPECT_EQ(j["spectra"]["zero"], nlohmann::json({"-2", "1", "2", "3", "4", "7"}));
  EXPECT_EQ(j["c"], "93312");
  EXPECT_EQ(j["checks"]["integer_block_k"], 1);
  EXPECT_FALSE(j.contains("timings_seconds"));
  EXPECT_TRUE(to_json(r, true).contains("timings_seconds"));
}

TEST(CalibrationTest, AllPointsPass) {
  const auto points = run_calibration();
  ASSERT_EQ(points.size(), 3U);
  for (const auto& p : points) EXPECT_TRUE(p.ok) << p.name << ": " << p.detail;
}

TEST(Cli, CatalogListing) {
  const CliRun r = run_cli("catalog");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("bracelet"), std::string::npos);
  const CliRun show = run_cli("catalog --show A2");
  EXPECT_EQ(show.status, 0);
  EXPECT_EQ(nlohmann::json::parse(show.out)["h"], "x1*x2");
}

TEST(Cli, BernsteinBothRoutes) {
  const CliRun r = run_cli("bernstein bracelet");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("spectral    b_h(s) = (s + 7/6)*(s + 1)^2*(s + 5/6)"), std::string::npos);
  EXPECT_NE(r.out.find("agree       yes"), std::string::npos);
}

TEST(Cli, Spectrum) {
  const CliRun r = run_cli("spectrum --at infinity star3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Sp(infinity) = (1,2,2,3,3,4)\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("check " + data("three_lines.json")).status, 3);
  EXPECT_EQ(run_cli("bernstein --method functional " + data("bracelet_default_operator.json")).status, 4);
  EXPECT_EQ(run_cli("check A9").status, 3);
  EXPECT_EQ(run_cli("check A2").status, 0);
}

TEST(Cli, ErrorJson) {
  const CliRun r = run_cli("report --json - " + data("three_lines.json"));
  EXPECT_EQ(r.status, 3);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["error"]["code"], "NotLinearFree");
  EXPECT_EQ(j["error"]["module"], "freediv");
}

TEST(Cli, ReportIsByteStable) {
  const CliRun a = run_cli("report --json - bracelet");
  setenv("LFD_THREADS", "3", 1);
  const CliRun b = run_cli("report --json - bracelet");
  unsetenv("LFD_THREADS");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(b.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["f"]["rule"], "random-0");
}
