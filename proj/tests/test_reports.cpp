#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>

#include "setmeter/commands.hpp"
#include "setmeter/csv.hpp"
#include "setmeter/dimension_fit.hpp"
#include "setmeter/error.hpp"

using namespace setmeter;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct TempCsv {
  fs::path path;
  explicit TempCsv(const std::string& name, const std::string& contents) {
    path = fs::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << contents;
  }
  ~TempCsv() { fs::remove(path); }
};

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::invalid_value;
}

RunConfig sweep_config(const std::string& preset, int num, int den, int steps) {
  RunConfig config;
  config.preset = preset;
  config.sweep = SweepSpec{Rational(num, den), Rational(num, den), steps};
  return config;
}

}  // namespace

TEST_CASE("measure applies the graduation ceiling rule") {
  TempCsv csv("setmeter_measure.csv", "0\n10\n20\n");
  RunConfig config;
  config.input = csv.path.string();
  config.scale = Rational(1, 2);

  const json plain = json::parse(cmd_measure(config));
  CHECK(plain["schema_version"] == 1);
  CHECK(plain["results"][0]["count"] == "3");
  CHECK(plain["results"][0]["graduated_count"] == "3");
  CHECK(plain["results"][0]["pair"] == "(1/2,3)");

  config.graduation = MValue::finite(2);
  const json graduated = json::parse(cmd_measure(config));
  CHECK(graduated["results"][0]["count"] == "3");
  CHECK(graduated["results"][0]["graduated_count"] == "2");  // ceil(3/2)

  config.graduation = MValue::omega();
  CHECK(code_of([&] { cmd_measure(config); }) == errc::invalid_config);
}

TEST_CASE("measure with presets and sweeps") {
  RunConfig config;
  config.preset = "cantor";
  config.scale = Rational(1, 81);
  const json report = json::parse(cmd_measure(config));
  CHECK(report["results"][0]["count"] == "16");  // 2^4
  CHECK(report["input"]["kind"] == "preset");

  const json sweep = json::parse(cmd_measure(sweep_config("cantor", 1, 3, 4)));
  REQUIRE(sweep["results"].size() == 4);
  CHECK(sweep["results"][3]["count"] == "16");

  RunConfig both = sweep_config("cantor", 1, 3, 2);
  both.input = "also.csv";
  CHECK(code_of([&] { cmd_measure(both); }) == errc::invalid_config);

  RunConfig neither;
  neither.preset = "cantor";
  CHECK(code_of([&] { cmd_measure(neither); }) == errc::invalid_config);
}

TEST_CASE("graduated counts follow count_g = ceil(count_1 / g)") {
  TempCsv csv("setmeter_grad.csv", "0\n1\n2\n3\n4\n5\n6\n");
  for (int g = 1; g <= 9; ++g) {
    RunConfig config;
    config.input = csv.path.string();
    config.scale = Rational(1, 4);
    config.graduation = MValue::finite(static_cast<std::uint64_t>(g));
    const json report = json::parse(cmd_measure(config));
    const long long count = std::stoll(report["results"][0]["count"].get<std::string>());
    const long long graduated =
        std::stoll(report["results"][0]["graduated_count"].get<std::string>());
    CHECK(graduated == (count + g - 1) / g);
  }
}

TEST_CASE("dim fits the cantor slope") {
  const json report = json::parse(cmd_dim(sweep_config("cantor", 1, 3, 12)));
  const double slope = report["fit"]["slope"];
  CHECK(slope == doctest::Approx(std::log(2) / std::log(3)).epsilon(1e-9));
  CHECK(double(report["fit"]["r_squared"]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report["fit"]["samples_used"] == 12);

  // per-scale dimension values all equal the fitted slope on exact inputs
  for (const auto& row : report["samples"]) {
    CHECK(double(row["dimension"]) == doctest::Approx(slope).epsilon(1e-9));
  }
}

TEST_CASE("dim fits the sierpinski slope") {
  const json report = json::parse(cmd_dim(sweep_config("sierpinski", 1, 2, 12)));
  CHECK(double(report["fit"]["slope"]) ==
        doctest::Approx(std::log(3) / std::log(2)).epsilon(1e-9));
}

TEST_CASE("dim needs at least two usable scales") {
  TempCsv csv("setmeter_dim_one.csv", "0\n1\n");
  RunConfig config;
  config.input = csv.path.string();
  config.scale = Rational(1, 4);
  CHECK(code_of([&] { cmd_dim(config); }) == errc::insufficient_samples);

  // counts below 2 are excluded from the window
  TempCsv single("setmeter_dim_single.csv", "0\n");
  RunConfig saturated;
  saturated.input = single.path.string();
  saturated.sweep = SweepSpec{Rational(1, 2), Rational(1, 2), 6};
  CHECK(code_of([&] { cmd_dim(saturated); }) == errc::insufficient_samples);
}

TEST_CASE("dimension fit on synthetic exact data") {
  std::vector<DimSample> samples;
  Rational r(1, 2);
  for (int k = 1; k <= 10; ++k) {
    samples.push_back(DimSample{r, BigInt(1) << (2 * k)});  // N = (1/r)^2
    r /= 2;
  }
  const DimensionFit fit = fit_dimension(samples);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.samples_used == 10);
}

TEST_CASE("compare judges graduation-1 counts") {
  TempCsv left("setmeter_cmp_a.csv", "0,0,0\n1,2,3\n4,5,6\n");
  TempCsv right("setmeter_cmp_b.csv", "10,11\n12,13\n14,15\n");
  RunConfig config;
  config.input = left.path.string();
  config.input_b = right.path.string();

  const json report = json::parse(cmd_compare(config));
  CHECK(report["equal"] == true);
  CHECK(report["left"]["count"] == "3");
  CHECK(report["right"]["count"] == "3");
  CHECK_FALSE(report.contains("per_scale"));

  config.scale = Rational(1, 10);
  const json with_scale = json::parse(cmd_compare(config));
  CHECK(with_scale.contains("per_scale"));
  CHECK(with_scale["per_scale"]["scale"] == "1/10");

  TempCsv shorter("setmeter_cmp_c.csv", "1\n2\n");
  config.input_b = shorter.path.string();
  config.scale.reset();
  CHECK(json::parse(cmd_compare(config))["equal"] == false);
}

TEST_CASE("algebra evaluates the documented grammar") {
  CHECK(json::parse(cmd_algebra("(1/2,3)+(1/2,4)"))["result"]["text"] ==
        "(1/2,7)");
  CHECK(json::parse(cmd_algebra("dist((1/2,3),(1/2,8))"))["result"]["text"] ==
        "(1/2,5)");

  const json dim_report = json::parse(cmd_algebra("dim((1/27,8))"));
  CHECK(dim_report["result"]["type"] == "real");
  CHECK(double(dim_report["result"]["value"]) ==
        doctest::Approx(std::log(2) / std::log(3)).epsilon(1e-12));
  CHECK(dim_report["result"]["text"] == "0.6309297536");

  CHECK(json::parse(cmd_algebra("(1/2,3)*(1/2,4)"))["result"]["text"] ==
        "(1/4,12)");
  CHECK(json::parse(cmd_algebra("2^(1/2,3)"))["result"]["text"] == "(1/2,9)");
  CHECK(json::parse(cmd_algebra("1/2^(1/4,16)"))["result"]["text"] ==
        "(1/4,4)");
  CHECK(json::parse(cmd_algebra("w+2"))["result"]["text"] == "(w+2)");
  CHECK(json::parse(cmd_algebra("2^(w)"))["result"]["text"] == "2^(w)");
  CHECK(json::parse(cmd_algebra("(0+,w)+(0+,w)"))["result"]["text"] ==
        "(0+,(w+w))");

  CHECK(code_of([] { cmd_algebra("(1/2,3)+(1/3,4)"); }) == errc::scale_mismatch);
  CHECK(code_of([] { cmd_algebra("(1/2,3)+"); }) == errc::parse_error);
  CHECK(code_of([] { cmd_algebra("3^(1/3,1)"); }) == errc::unit_count_excluded);
  CHECK(code_of([] { cmd_algebra("dim((1/2,3)"); }) == errc::parse_error);

  // arithmetic errors carry the operator position
  try {
    cmd_algebra("(1/2,3)-(1/2,9)");
    FAIL("expected underflow");
  } catch (const Error& e) {
    CHECK(e.code() == errc::underflow);
    CHECK(std::string(e.what()).find("position 7") != std::string::npos);
  }
}

TEST_CASE("infinity renders the sequence and the ch record") {
  RunConfig config;
  config.sequence_length = 4;
  const json report = json::parse(cmd_infinity(config));
  const json expected = json::array(
      {"ln w/ln(1/r)", "1", "2^w/w", "2^(2^w)/w"});
  CHECK(report["sequence"] == expected);
  CHECK(report["ch"]["corollary"] == "w * (r, 2) = 1");
  CHECK(report["ch"]["equation"] == "(0+, 2^w) = (0+, 1/r) = 1");
  CHECK(report["ch"]["hypothesis"] == true);

  config.sequence_length = 2;
  const json two = json::parse(cmd_infinity(config));
  CHECK(two["sequence"] == json::array({"ln w/ln(1/r)", "1"}));
}

TEST_CASE("check reports all properties with zero failures") {
  RunConfig config;
  config.seed = 42;
  config.trials = 100;
  const CheckOutcome outcome = cmd_check(config);
  CHECK(outcome.all_passed);
  const json report = json::parse(outcome.report);
  REQUIRE(report["reports"].size() == 4);
  for (const auto& entry : report["reports"]) {
    CHECK(entry["instances"] == 100);
    CHECK(entry["failures"].empty());
  }
  CHECK(report["all_passed"] == true);

  RunConfig single;
  single.trials = 1;
  CHECK(json::parse(cmd_check(single).report)["reports"][0]["instances"] == 1);
}

TEST_CASE("reports are byte-identical across runs") {
  TempCsv csv("setmeter_det.csv", "0.1\n0.9\n0.5\n");
  RunConfig measure;
  measure.input = csv.path.string();
  measure.sweep = SweepSpec{Rational(1, 2), Rational(1, 2), 5};
  CHECK(cmd_measure(measure) == cmd_measure(measure));
  CHECK(cmd_dim(measure) == cmd_dim(measure));

  RunConfig check;
  check.seed = 9;
  check.trials = 40;
  CHECK(cmd_check(check).report == cmd_check(check).report);

  RunConfig infinity;
  CHECK(cmd_infinity(infinity) == cmd_infinity(infinity));
  CHECK(cmd_algebra("(1/2,3)+(1/2,4)") == cmd_algebra("(1/2,3)+(1/2,4)"));
}
