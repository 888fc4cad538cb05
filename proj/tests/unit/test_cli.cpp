#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using fbh::Complex;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fbh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = fbh::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("complex literals") {
  using fbh::cli::parse_complex;
  CHECK(parse_complex("1+0i") == Complex(1, 0));
  CHECK(parse_complex("0.5") == Complex(0.5, 0));
  CHECK(parse_complex("-2-3.5i") == Complex(-2, -3.5));
  CHECK(parse_complex("1e-3+2E-2i") == Complex(1e-3, 2e-2));
  CHECK(parse_complex("2.5i") == Complex(0, 2.5));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("3+i") == Complex(3, 1));
  CHECK(parse_complex("+4") == Complex(4, 0));
  CHECK_FALSE(parse_complex(""));
  CHECK_FALSE(parse_complex("abc"));
  CHECK_FALSE(parse_complex("1+2"));
  CHECK_FALSE(parse_complex("1+2j"));
}

TEST_CASE("metric subcommand") {
  const Result r = run({"metric", "--b", "0.5", "--X", "1+0i", "--Y", "0+0i"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["K2"].get<double>() == doctest::Approx(0.721348).epsilon(1e-6));
  CHECK(j["branch"] == "v-small");
  CHECK(r.out.rfind("{\"K\":", 0) == 0);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys.size() == 6);
  CHECK(r.out.find("\"K2\"") < r.out.find("\"branch\""));
  CHECK(r.out.find("\"branch\"") < r.out.find("\"v\""));
  CHECK(r.out.find("\"alpha_roots\"") < r.out.find("\"beta\""));
}

TEST_CASE("metric-at subcommand") {
  const Result r = run({"metric-at", "--z", "1", "--w", "0.2", "--dz", "1", "--dw", "0"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["K2"].get<double>() == doctest::Approx(0.65378992875425898).epsilon(1e-13));
  CHECK(j["b"].get<double>() == doctest::Approx(0.32974425414002563).epsilon(1e-13));
}

TEST_CASE("gfun table") {
  const Result r = run({"gfun", "--b", "0.5", "--n", "512"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 513);
  CHECK(rows[0] == "t,g");
  std::vector<std::pair<double, double>> tg;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto comma = rows[k].find(',');
    tg.emplace_back(std::stod(rows[k].substr(0, comma)), std::stod(rows[k].substr(comma + 1)));
  }
  CHECK(tg.front().first == 0.0);
  const double lb = std::log(0.5);
  CHECK(tg.front().second == doctest::Approx(std::pow(0.75, 2) / (lb * lb) - 1.0).epsilon(1e-14));
  CHECK(tg.back().first == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(std::abs(tg.back().second) <= 1e-10);
  int changes = 0;
  for (std::size_t k = 1; k + 1 < tg.size(); ++k) {
    if ((tg[k].second < 0.0) != (tg[k - 1].second < 0.0)) ++changes;
  }
  CHECK(changes == 1);
}

TEST_CASE("hfun and geodesic tables") {
  const Result h = run({"hfun", "--b", "0.5", "--n", "9"});
  REQUIRE(h.code == 0);
  CHECK(lines(h.out).size() == 10);
  CHECK(lines(h.out)[0] == "t,h");

  const Result g = run({"geodesic", "--family", "D", "--a2", "0.4", "--alpha2", "0.1+0.3i", "--samples", "64"});
  REQUIRE(g.code == 0);
  const auto rows = lines(g.out);
  REQUIRE(rows.size() == 65);
  CHECK(rows[0] == "theta,re_z1,im_z1,re_w,im_w,rho_residual");
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(std::abs(std::stod(rows[k].substr(rows[k].rfind(',') + 1))) <= 1e-9);
  }

  const Result s = run({"geodesic", "--seed", "3", "--n", "3", "--samples", "8"});
  REQUIRE(s.code == 0);
  CHECK(lines(s.out)[0] == "theta,re_z1,im_z1,re_z2,im_z2,re_z3,im_z3,re_w,im_w,rho_residual");
}

TEST_CASE("schwarz subcommand") {
  const Result r = run({"schwarz", "--n", "2", "--m", "3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["reports"].size() == 7);
  CHECK(run({"schwarz", "--map", "nothing"}).code == 2);
}

TEST_CASE("verify subcommand") {
  const Result r = run({"verify", "--suite", "bridge", "--trials", "50", "--seed", "9"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["failures"] == 0);
  CHECK(j["suites"][0]["suite"] == "bridge");

  const Result again = run({"verify", "--suite", "bridge", "--trials", "50", "--seed", "9", "--workers", "3"});
  CHECK(again.out == r.out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"metric"}).code == 2);
  CHECK(run({"metric", "--b", "0.5", "--X", "one"}).code == 2);
  CHECK(run({"metric", "--b", "1.5", "--X", "1"}).code == 2);
  CHECK(run({"metric-at", "--z", "0", "--w", "2"}).code == 2);
  CHECK(run({"gfun", "--b", "0.5", "--n", "1"}).code == 2);
  CHECK(run({"geodesic", "--family", "A", "--a2", "0"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("outputs are byte-stable") {
  const std::vector<std::string> args{"geodesic", "--seed", "11", "--n", "2", "--samples", "32"};
  CHECK(run(args).out == run(args).out);
}
