#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "helpers.hpp"
#include "schema_check.hpp"
#include "widths/cli.hpp"
#include "widths/json_io.hpp"
#include "widths/svg.hpp"

using namespace widths;
using widths::testing::validates;

namespace {

const std::string kSource = WIDTHS_SOURCE_DIR;

json load_schema(const std::string& name) {
  return json::parse(read_text_file(kSource + "/schemas/" + name));
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("widths_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::vector<const char*> argv = {"widths"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

}  // namespace

TEST_CASE("network JSON round trip and schema") {
  const Domain disk = Domain::disk(1.0);
  const GeodesicNetwork net = widths::testing::two_diameters(disk, 0.2);
  const json j = network_to_json(net);
  CHECK(validates(j, load_schema("network.schema.json")));
  const GeodesicNetwork back = network_from_json(j);
  REQUIRE(back.junctions.size() == net.junctions.size());
  REQUIRE(back.segments.size() == net.segments.size());
  CHECK(mass(back) == doctest::Approx(mass(net)).epsilon(1e-15));
  CHECK(network_to_json(back) == j);

  CHECK_THROWS_AS(network_from_json(json::parse("{\"junctions\": []}")),
                  FileFormatError);
  CHECK_THROWS_AS(
      network_from_json(json::parse(
          R"({"junctions":[{"x":0,"y":0,"location":"nowhere"}],"segments":[]})")),
      FileFormatError);
}

TEST_CASE("shipped fixture matches the schema and checks out") {
  const json j = json::parse(read_text_file(kSource +
                                            "/fixtures/two_diameters.json"));
  CHECK(validates(j, load_schema("network.schema.json")));
  const GeodesicNetwork net = network_from_json(j);
  const NetworkReport report = analyze_network(net, Domain::disk(1.0));
  CHECK(report.mass == doctest::Approx(4.0));
  CHECK(report.interior_residual == doctest::Approx(0.0));
  CHECK(report.free_boundary_residual == doctest::Approx(0.0));
  CHECK(report.mass_via_forces == doctest::Approx(4.0));
  CHECK(validates(network_report_to_json(report),
                  load_schema("network_report.schema.json")));
}

TEST_CASE("orbit JSON schema") {
  const Domain disk = Domain::disk(1.0);
  const json j = orbit_to_json(find_closed_orbit(disk, 3, 0.0), disk);
  std::string why;
  CHECK_MESSAGE(validates(j, load_schema("orbit.schema.json"), &why), why);
  CHECK(j["points"].size() == 4);  // closing point repeated
}

TEST_CASE("svg emission") {
  const std::string svg = parabola_svg(94.09);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 2);
  std::size_t polylines = 0, circles = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++polylines;
    ++pos;
  }
  pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++circles;
    ++pos;
  }
  CHECK(polylines == 1);
  CHECK(circles == 1);

  const Domain e = Domain::ellipse(1.02, 0.98);
  CHECK(orbit_svg(find_closed_orbit(e, 4, 0.1), e).find("<ellipse") !=
        std::string::npos);
  CHECK(network_svg(widths::testing::tripod(Domain::disk(1.0)),
                    Domain::disk(1.0))
            .find("<line") != std::string::npos);
  CHECK(conic_svg(ConicCoeffs(-1, 0, -1, 94.09, 0)).find("<polyline") !=
        std::string::npos);
}

TEST_CASE("cli maxlen") {
  TempDir tmp;
  std::string text;
  const int code = run({"maxlen", "--svg", tmp.file("p.svg"), "--out",
                        tmp.file("m.json")},
                       &text);
  CHECK(code == kExitOk);
  CHECK(text.find("a0 = 94.0912812") != std::string::npos);
  CHECK(text.find("L0 = 4.002670298") != std::string::npos);
  const json j = json::parse(read_text_file(tmp.file("m.json")));
  CHECK(j["a0"].get<double>() == doctest::Approx(94.0912812).epsilon(1e-6));
}

TEST_CASE("cli billiard writes a valid orbit file") {
  TempDir tmp;
  std::string text;
  CHECK(run({"billiard", "disk", "3", "0", "--out", tmp.file("o.json")},
            &text) == kExitOk);
  CHECK(text.find("5.19615242") != std::string::npos);
  const json j = json::parse(read_text_file(tmp.file("o.json")));
  CHECK(validates(j, load_schema("orbit.schema.json")));
}

TEST_CASE("cli network check on the fixture") {
  TempDir tmp;
  std::string text;
  const int code = run({"network", "check",
                        kSource + "/fixtures/two_diameters.json", "--out",
                        tmp.file("r.json")},
                       &text);
  CHECK(code == kExitOk);
  CHECK(text.find("mass 4") != std::string::npos);
  CHECK(validates(json::parse(read_text_file(tmp.file("r.json"))),
                  load_schema("network_report.schema.json")));
}

TEST_CASE("cli crofton conic") {
  std::string text;
  CHECK(run({"crofton", "conic", "0 0 0 0 1", "--grid", "64x128"}, &text) ==
        kExitOk);
  CHECK(text.find("arc-length 4") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  std::string text;
  CHECK(run({"certify", "5", "disk"}, &text) == kExitUsage);
  CHECK(run({"billiard", "disk"}, &text) == kExitUsage);
  CHECK(run({"nonsense"}, &text) == kExitUsage);
  TempDir tmp;
  atomic_write_text(tmp.file("bad.json"), "{not json");
  CHECK(run({"network", "check", tmp.file("bad.json")}, &text) ==
        kExitFileFormat);
  CHECK(run({"network", "check", tmp.file("missing.json")}, &text) ==
        kExitFileFormat);
}

TEST_CASE("cli outputs are byte-identical for identical invocations") {
  TempDir tmp;
  CHECK(run({"sweepout", "1", "--budget", "1500", "--seed", "9", "--out",
             tmp.file("a.json")}) == kExitOk);
  CHECK(run({"sweepout", "1", "--budget", "1500", "--seed", "9", "--out",
             tmp.file("b.json")}) == kExitOk);
  CHECK(read_text_file(tmp.file("a.json")) ==
        read_text_file(tmp.file("b.json")));
  CHECK(validates(json::parse(read_text_file(tmp.file("a.json"))),
                  load_schema("sweepout.schema.json")));
}

TEST_CASE("cli config file with flag override") {
  TempDir tmp;
  atomic_write_text(tmp.file("cfg.json"),
                    R"({"seed": 3, "budgets": {"sweepout_samples": 1500}})");
  CHECK(run({"sweepout", "1", "--config", tmp.file("cfg.json"), "--out",
             tmp.file("c.json")}) == kExitOk);
  const json c = json::parse(read_text_file(tmp.file("c.json")));
  CHECK(c["sup"].get<double>() == doctest::Approx(2.0));
}
