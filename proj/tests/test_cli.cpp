#include <stdexcept>
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ordinal/cli.hpp"

namespace fs = std::filesystem;
using ordinal::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir() {
  const char* base = std::getenv("ORDINAL_TEST_TMP");
  auto dir = fs::path(base ? base : fs::temp_directory_path().string()) / "cli_unit";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

// Keeps tests independent of whatever the calling shell exported.
struct SeedEnvGuard {
  SeedEnvGuard() { unsetenv(ordinal::cli::kSeedEnvVar); }
  ~SeedEnvGuard() { unsetenv(ordinal::cli::kSeedEnvVar); }
};

}  // namespace

TEST_CASE("simulate --head prints the preview block") {
  SeedEnvGuard guard;
  const auto r = invoke({"simulate", "--head", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0\t4.2515\t4.0623\t3.7852\n") != std::string::npos);
  CHECK(r.out.find("6\t4.5447\t4.2151\t3.2782\n") != std::string::npos);
  CHECK(r.out.find("9\t4.2639\t4.1985\t4.1780\n") != std::string::npos);
}

TEST_CASE("simulate arguments and determinism") {
  SeedEnvGuard guard;
  const auto dir = temp_dir();
  CHECK(invoke({"simulate", "--n", "0"}).code == 2);
  CHECK(invoke({"simulate", "--bogus"}).code == 2);
  CHECK(invoke({"simulate", "--seed", "7", "--n", "200", "--out", (dir / "s7a.csv").string()}).code == 0);
  CHECK(invoke({"simulate", "--seed", "7", "--n", "200", "--out", (dir / "s7b.csv").string()}).code == 0);
  CHECK(slurp(dir / "s7a.csv") == slurp(dir / "s7b.csv"));
  CHECK(slurp(dir / "s7a.csv").rfind("ID,Ease of Use & Learnability,", 0) == 0);
  CHECK(invoke({"simulate", "--n", "200", "--out", (dir / "s42.csv").string()}).code == 0);
  CHECK(slurp(dir / "s42.csv") != slurp(dir / "s7a.csv"));
}

TEST_CASE("seed precedence: flag > config > environment > default") {
  SeedEnvGuard guard;
  const auto dir = temp_dir();
  auto head = [&](std::vector<std::string> extra) {
    std::vector<std::string> args{"simulate", "--n", "3", "--head", "1"};
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args).out;
  };
  const auto s42 = head({});
  const auto s7 = head({"--seed", "7"});
  CHECK(s42 != s7);
  setenv(ordinal::cli::kSeedEnvVar, "7", 1);
  CHECK(head({}) == s7);
  CHECK(head({"--seed", "42"}) == s42);
  spit(dir / "seeded.json", R"({"seed": 42})");
  CHECK(head({"--config", (dir / "seeded.json").string()}) == s42);
  setenv(ordinal::cli::kSeedEnvVar, "not-a-number", 1);
  CHECK(invoke({"simulate", "--n", "3"}).code == 2);
}

TEST_CASE("config file") {
  SeedEnvGuard guard;
  const auto dir = temp_dir();
  spit(dir / "one.json", R"({"themes":[{"name":"Only","mean":3.0,"std":0.0}],"n":4})");
  const auto r = invoke({"simulate", "--config", (dir / "one.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out == "ID,Only\n0,3.0000\n1,3.0000\n2,3.0000\n3,3.0000\n");
  spit(dir / "bad.json", R"({"themes":[{"name":"x"}]})");
  CHECK(invoke({"simulate", "--config", (dir / "bad.json").string()}).code == 2);
  spit(dir / "neg.json", R"({"themes":[{"name":"x","mean":1,"std":-1}]})");
  CHECK(invoke({"simulate", "--config", (dir / "neg.json").string()}).code == 2);
  CHECK(invoke({"simulate", "--config", (dir / "nope.json").string()}).code == 2);
}

TEST_CASE("check renders the matrix and the JSON report") {
  SeedEnvGuard guard;
  const auto dir = temp_dir();
  const auto data = (dir / "defaults.csv").string();
  REQUIRE(invoke({"simulate", "--out", data}).code == 0);

  const auto table = invoke({"check", data});
  CHECK(table.code == 0);
  CHECK(table.out.find("Ease of Use & Learnability            True   True   True  False  False  False") !=
        std::string::npos);

  const auto json_path = dir / "report.json";
  const auto r = invoke({"check", data, "--json", "--out", json_path.string()});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j == nlohmann::json::parse(slurp(json_path)));
  REQUIRE(j["rows"].size() == 3);
  for (const auto& row : j["rows"]) {
    const auto& ax = row["axioms"];
    CHECK(ax[0]["passed"] == true);
    CHECK(ax[3]["passed"] == false);
    CHECK(ax[3]["witness"]["kind"] == "max_element");
    CHECK(ax[3]["checked"] == 10000);
    CHECK(ax[5]["witness"]["kind"] == "adjacent_gap");
  }
  CHECK(j["rows"][0]["axioms"][3]["witness"]["value"] == 5.0);
  CHECK(j["rows"][1]["axioms"][3]["witness"]["value"] == 4.5316);
  CHECK(j["rows"][2]["axioms"][4]["witness"]["value"] == 2.9205);

  CHECK(invoke({"check", "--strict-dlo", data}).code == 3);
}

TEST_CASE("check edge cases and exit codes") {
  const auto dir = temp_dir();
  spit(dir / "const.csv", "ID,Flat\n0,4.0000\n1,4.0000\n");
  const auto r = invoke({"check", (dir / "const.csv").string(), "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["axioms"][5]["passed"] == true);
  CHECK(j["rows"][0]["axioms"][5]["witness"]["kind"] == "vacuous");

  CHECK(invoke({"check", (dir / "missing.csv").string()}).code == 2);
  spit(dir / "broken.csv", "ID,A\n0,1.0\n1,x\n");
  const auto broken = invoke({"check", (dir / "broken.csv").string()});
  CHECK(broken.code == 2);
  CHECK(broken.err.find("row 1") != std::string::npos);
  CHECK(broken.err.find("'A'") != std::string::npos);
  spit(dir / "empty_rows.csv", "ID,A\n");
  CHECK(invoke({"check", (dir / "empty_rows.csv").string()}).code == 2);
  CHECK(invoke({"check"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("report") {
  SeedEnvGuard guard;
  const auto dir = temp_dir();
  const auto data = (dir / "defaults_r.csv").string();
  REQUIRE(invoke({"simulate", "--out", data}).code == 0);
  const auto r = invoke({"report", data});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"].size() == 3);
  CHECK(j["composite"]["weighting"] == "spec");
  const auto& w = j["composite"]["weights"];
  CHECK(std::abs(w[0]["weight"].get<double>() - 0.0875) < 5e-5);
  CHECK(std::abs(w[1]["weight"].get<double>() - 0.7750) < 5e-5);
  CHECK(std::abs(w[2]["weight"].get<double>() - 0.1376) < 5e-5);

  const auto s = nlohmann::json::parse(invoke({"report", data, "--weighting", "sample"}).out);
  CHECK(s["composite"]["weighting"] == "sample");
  CHECK(s["composite"]["weights"][1]["weight"].get<double>() != w[1]["weight"].get<double>());

  spit(dir / "flat.csv", "ID,A,B\n0,1.0,4.0\n1,2.0,4.0\n");
  const auto flat = invoke({"report", (dir / "flat.csv").string(), "--weighting", "sample"});
  CHECK(flat.code == 2);
  CHECK(flat.err.find("zero variance") != std::string::npos);
  CHECK(invoke({"report", (dir / "flat.csv").string()}).code == 2);  // no spec for column "A"
  CHECK(invoke({"report", data, "--weighting", "median"}).code == 2);
}

TEST_CASE("plot") {
  SeedEnvGuard guard;
  const auto dir = temp_dir();
  CHECK(invoke({"plot", "--out", (dir / "fig.svg").string()}).code == 0);
  CHECK(fs::exists(dir / "fig_curve.csv"));
  CHECK(fs::exists(dir / "fig_tangent_x3.csv"));
  const auto first = slurp(dir / "fig.svg");
  CHECK(invoke({"plot", "--out", (dir / "fig.svg").string()}).code == 0);
  CHECK(slurp(dir / "fig.svg") == first);

  const auto data = (dir / "plot_data.csv").string();
  REQUIRE(invoke({"simulate", "--n", "500", "--out", data}).code == 0);
  CHECK(invoke({"plot", data, "--source", "theme:Perceived Complexity & Integration", "--out",
                (dir / "theme.svg").string()})
            .code == 0);
  CHECK(slurp(dir / "theme.svg") != first);
  CHECK(invoke({"plot", "--source", "theme:Nope", "--out", (dir / "x.svg").string()}).code == 2);
  CHECK(invoke({"plot", "--source", "weird", "--out", (dir / "x.svg").string()}).code == 2);
  CHECK(invoke({"plot", "--out", (dir / "new" / "sub" / "dir.svg").string()}).code == 0);
  std::ofstream(dir / "blocker") << "x";
  CHECK(invoke({"plot", "--out", (dir / "blocker" / "dir.svg").string()}).code == 1);
}

TEST_CASE("ideal") {
  SeedEnvGuard guard;
  const auto r = invoke({"ideal", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (int a = 0; a < 6; ++a) CHECK(j["ideal"][a]["passed"] == true);
  const bool expect[6] = {true, true, true, false, false, false};
  for (int a = 0; a < 6; ++a) CHECK(j["projection"][a]["passed"] == expect[a]);

  const auto one = nlohmann::json::parse(invoke({"ideal", "--probes", "1", "--json"}).out);
  for (int a = 0; a < 6; ++a) CHECK(one["ideal"][a]["passed"] == true);

  const auto b = nlohmann::json::parse(invoke({"ideal", "--bisect", "1", "5", "3", "--json"}).out);
  REQUIRE(b["bisect"].size() == 4);
  CHECK(b["bisect"][0]["width"] == "4");
  CHECK(b["bisect"][1]["width"] == "2");
  CHECK(b["bisect"][2]["width"] == "1");
  CHECK(b["bisect"][3]["width"] == "1/2");

  const auto text = invoke({"ideal", "--bisect", "1", "5", "3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("ideal (exact)") != std::string::npos);
  CHECK(text.out.find("width 1/2") != std::string::npos);

  CHECK(invoke({"ideal", "--probes", "0"}).code == 2);
  CHECK(invoke({"ideal", "--bisect", "5", "1", "2"}).code == 2);
  CHECK(invoke({"ideal", "--bisect", "1", "5", "x"}).code == 2);
  CHECK(invoke({"ideal", "--lo", "1/0"}).code == 2);
}
