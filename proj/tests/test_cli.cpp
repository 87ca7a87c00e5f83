#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli_app.hpp"

using namespace fuzzpart;
using namespace fuzzpart::cli;

namespace {

int run_cli(std::initializer_list<const char*> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::vector<const char*> argv = {"fuzzpart"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code =
      run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << contents;
  return path;
}

}  // namespace

TEST_CASE("config text parses, resolves, and broadcasts") {
  const ConfigInput in = parse_config_text(
      "# comment\n"
      "dim = 2\n"
      "origin = 0\n"
      "origin = 1\n"
      "spacing = 0.5\n"
      "count = 5\n"
      "mf = triangular\n"
      "mf = (cos(pi*x)+1)/2\n"
      "tolerance = 1e-10\n"
      "seed = 7\n"
      "panel = B\n"
      "shift = 0.25\n");
  const RunConfig cfg = resolve(in);
  CHECK(cfg.dim == 2);
  CHECK(cfg.axes[0].origin == 0.0);
  CHECK(cfg.axes[1].origin == 1.0);
  CHECK(cfg.axes[0].spacing == 0.5);  // single value broadcasts
  CHECK(cfg.axes[1].spacing == 0.5);
  CHECK(cfg.axes[1].mf == "(cos(pi*x)+1)/2");
  CHECK(cfg.tolerance == 1e-10);
  CHECK(cfg.seed == 7);
  CHECK(cfg.panel == 'B');
  CHECK(cfg.shifts == std::vector{0.25});
}

TEST_CASE("config errors are reported") {
  CHECK_THROWS_AS(parse_config_text("nonsense\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("unknown_key = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("dim = two\n"), ConfigError);
  CHECK_THROWS_AS(resolve(parse_config_text("")), ConfigError);
  CHECK_THROWS_AS(resolve(parse_config_text("dim = 3\norigin = 1\norigin = 2\n")),
                  ConfigError);
  CHECK_THROWS_AS(resolve(parse_config_text("variant = eq12\ndim = 3\n")),
                  UnsupportedDimension);
  CHECK_THROWS_AS(resolve(parse_config_text("variant = other\n")), ConfigError);
  CHECK_THROWS_AS(resolve(parse_config_text("dim = 1\nshift = 1.5\n")),
                  ConfigError);
}

TEST_CASE("canonical config round-trips exactly") {
  ConfigInput in = parse_config_text(
      "dim = 2\n"
      "origin = -1.5\n"
      "origin = 2\n"
      "spacing = 0.1\n"
      "spacing = 3\n"
      "count = 4\n"
      "count = 6\n"
      "mf = triangular\n"
      "mf = 1 - abs(x)\n"
      "tolerance = 2.5e-11\n"
      "seed = 99\n"
      "samples = 17\n"
      "random = 250\n"
      "resolution = 41\n"
      "panel = B\n"
      "skip_bad = 1\n"
      "shift = 0.125\n"
      "shift = 0.5\n"
      "out = exports/grid.csv\n");
  const RunConfig cfg = resolve(in);
  const std::string canonical = canonical_config(cfg);
  const RunConfig reparsed = resolve(parse_config_text(canonical));
  CHECK(reparsed == cfg);
  CHECK(canonical_config(reparsed) == canonical);

  const RunConfig variant_cfg = resolve(parse_config_text("variant = eq12\n"));
  CHECK(resolve(parse_config_text(canonical_config(variant_cfg))) ==
        variant_cfg);
}

TEST_CASE("command line flags override config file values") {
  const auto cfg_path = temp_file(
      "fuzzpart_cfg_override.cfg", "dim = 1\nmf = triangular\nseed = 5\n");
  std::string out;
  const std::string cfg_flag = cfg_path.string();
  const int code = run_cli({"verify", "--config", cfg_flag.c_str(), "--seed",
                            "11", "--echo-config"},
                           &out);
  CHECK(code == 0);
  CHECK(out.find("seed = 11") != std::string::npos);
  CHECK(out.find("dim = 1") != std::string::npos);
}

TEST_CASE("csv reader autodetects headers and reports bad lines") {
  {
    std::istringstream in("x,y\n1,2\n3,4\n");
    const CsvResult r = read_csv(in, false);
    CHECK(r.data.columns == std::vector<std::string>{"x", "y"});
    CHECK(r.data.rows() == 2);
    CHECK(r.data.row(1)[1] == 4.0);
  }
  {
    std::istringstream in("1,2\n3,4\n");
    const CsvResult r = read_csv(in, false);
    CHECK(r.data.columns.empty());
    CHECK(r.data.rows() == 2);
  }
  {
    std::istringstream in("1,2\nbad,4\n5,6\n");
    try {
      read_csv(in, false);
      FAIL("expected CsvError");
    } catch (const CsvError& e) {
      CHECK(e.line() == 2);
    }
  }
  {
    std::istringstream in("1,2\nbad,4\n5\n7,8\n");
    const CsvResult r = read_csv(in, true);
    CHECK(r.bad_rows == 2);
    CHECK(r.data.rows() == 2);
  }
  {
    std::istringstream in("");
    const CsvResult r = read_csv(in, false);
    CHECK(r.data.rows() == 0);
  }
}

TEST_CASE("grid export: panel B of the triangular partition is flat one") {
  RunConfig cfg = resolve(parse_config_text("dim = 2\nmf = triangular\n"));
  const PartitionHandle p = build_partition(cfg);
  const GridExport g = make_grid(p, 'B', 21);
  REQUIRE(g.values.size() == 21 * 21);
  for (double v : g.values) REQUIRE(v == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("grid export: panel A of the variant matches hand values") {
  RunConfig cfg = resolve(parse_config_text("variant = eq12\n"));
  const PartitionHandle p = build_partition(cfg);
  const GridExport g = make_grid(p, 'A', 21);
  // Row-major, last axis fastest: index = i0 * 21 + i1, offsets at
  // -1 + 0.1 * i. The grid center is the core.
  CHECK(g.values[10 * 21 + 10] == 1.0);
  const int i08 = 18, i07 = 17;  // offsets 0.8 and 0.7
  CHECK(g.values[i08 * 21 + i07] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK_THROWS_AS(make_grid(p, 'A', 1), ConfigError);
}

TEST_CASE("grid export rejects other dimensions") {
  RunConfig cfg = resolve(parse_config_text("dim = 3\nmf = triangular\n"));
  const PartitionHandle p = build_partition(cfg);
  CHECK_THROWS_AS(make_grid(p, 'A', 11), UnsupportedDimension);
}

TEST_CASE("grid output is byte-identical across runs") {
  std::string first, second;
  CHECK(run_cli({"grid", "--mf", "cosine", "--mf", "triangular", "--panel",
                 "B", "--resolution", "31"},
                &first) == 0);
  CHECK(run_cli({"grid", "--mf", "cosine", "--mf", "triangular", "--panel",
                 "B", "--resolution", "31"},
                &second) == 0);
  CHECK(first == second);
  CHECK(first.find("# panel = B") != std::string::npos);
}

TEST_CASE("eval prints the centralized value and corner sum") {
  std::string out;
  const int code =
      run_cli({"eval", "--mf", "triangular", "--mf", "triangular", "0.5",
               "0.5"},
              &out);
  CHECK(code == 0);
  CHECK(out.find("mu(offset) = 0.25") != std::string::npos);
  CHECK(out.find("corner sum = 1") != std::string::npos);
}

TEST_CASE("eval reports out-of-universe points") {
  std::string out;
  const int code =
      run_cli({"eval", "--mf", "triangular", "--dim", "1", "5"}, &out);
  CHECK(code == 0);
  CHECK(out.find("mu(offset) = 0") != std::string::npos);
  CHECK(out.find("outside the universe") != std::string::npos);
}

TEST_CASE("verify exit codes: 0 on pass, 1 on failure, 2 on config error") {
  CHECK(run_cli({"verify", "--mf", "triangular", "--mf", "cosine"}) == 0);
  CHECK(run_cli({"verify", "--variant", "eq12"}) == 0);

  // Cosine rounding sits near 1e-16; an impossible tolerance makes the
  // checks fail while the partition itself still builds.
  std::string out;
  CHECK(run_cli({"verify", "--mf", "cosine", "--mf", "cosine", "--tolerance",
                 "1e-18"},
                &out) == 1);
  CHECK(out.find("FAIL") != std::string::npos);

  std::string err;
  CHECK(run_cli({"verify", "--mf", "1 - x*x", "--dim", "1"}, nullptr, &err) ==
        2);
  CHECK(err.find("complement") != std::string::npos);

  CHECK(run_cli({"verify", "--mf", "nosuchshape", "--dim", "1"}, nullptr,
                &err) == 2);
  CHECK(run_cli({"bogus-command"}) == 2);
}

TEST_CASE("verify writes its report to the requested file") {
  const auto report_path =
      std::filesystem::temp_directory_path() / "fuzzpart_report.txt";
  const std::string path_s = report_path.string();
  CHECK(run_cli({"verify", "--variant", "eq12", "--out", path_s.c_str()}) ==
        0);
  std::ifstream f(report_path);
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str().find("strong-uniformity: PASS") != std::string::npos);
  std::size_t lines = 0;
  for (char ch : content.str()) lines += ch == '\n';
  CHECK(lines == 7);
}

TEST_CASE("verify --definition 1 runs the nine-condition report") {
  std::string out;
  const int code = run_cli(
      {"verify", "--mf", "cosine", "--dim", "1", "--count", "5",
       "--definition", "1"},
      &out);
  CHECK(code == 0);
  CHECK(out.find("9/9 conditions passed") != std::string::npos);
}

TEST_CASE("hist ingests CSV, reports mass, and writes the export") {
  const auto csv = temp_file("fuzzpart_hist_data.csv",
                             "x,y\n1,1\n0.5,0.5\n1.5,0.25\n9,9\n");
  const auto out_path =
      std::filesystem::temp_directory_path() / "fuzzpart_hist_out.csv";
  std::string out;
  const std::string csv_s = csv.string(), out_s = out_path.string();
  const int code = run_cli({"hist", csv_s.c_str(), "--mf", "triangular",
                            "--mf", "triangular", "--out", out_s.c_str()},
                           &out);
  CHECK(code == 0);
  CHECK(out.find("points = 4") != std::string::npos);
  CHECK(out.find("dropped = 1") != std::string::npos);
  CHECK(out.find("total mass = 3") != std::string::npos);

  std::ifstream exported(out_path);
  std::stringstream content;
  content << exported.rdbuf();
  CHECK(content.str().find("# total_mass = 3") != std::string::npos);
  CHECK(content.str().find("2,2,") != std::string::npos);
}

TEST_CASE("hist on an empty CSV reports an empty histogram with exit 0") {
  const auto csv = temp_file("fuzzpart_hist_empty.csv", "");
  std::string out;
  const std::string csv_s = csv.string();
  const int code = run_cli(
      {"hist", csv_s.c_str(), "--mf", "triangular", "--dim", "1"}, &out);
  CHECK(code == 0);
  CHECK(out.find("empty histogram") != std::string::npos);
}

TEST_CASE("hist surfaces malformed rows with their line number") {
  const auto csv = temp_file("fuzzpart_hist_bad.csv", "1\nnope\n2\n");
  std::string err;
  const std::string csv_s = csv.string();
  const int code = run_cli(
      {"hist", csv_s.c_str(), "--mf", "triangular", "--dim", "1"}, nullptr,
      &err);
  CHECK(code == 2);
  CHECK(err.find("line 2") != std::string::npos);

  std::string out;
  const int skip_code = run_cli({"hist", csv_s.c_str(), "--mf", "triangular",
                                 "--dim", "1", "--skip-bad"},
                                &out);
  CHECK(skip_code == 0);
  CHECK(out.find("bad rows skipped = 1") != std::string::npos);
}

TEST_CASE("compare prints a header-only table for an empty shift list") {
  const auto csv = temp_file("fuzzpart_cmp_data.csv", "1\n1.5\n0.25\n");
  std::string out;
  const std::string csv_s = csv.string();
  const int code = run_cli(
      {"compare", csv_s.c_str(), "--mf", "triangular", "--dim", "1"}, &out);
  CHECK(code == 0);
  CHECK(out == "shift,crisp_l1,fuzzy_l1\n");
}

TEST_CASE("hist rejects a CSV whose width disagrees with the partition") {
  const auto csv = temp_file("fuzzpart_hist_width.csv", "1,2,3\n");
  std::string err;
  const std::string csv_s = csv.string();
  const int code = run_cli({"hist", csv_s.c_str(), "--mf", "triangular",
                            "--mf", "triangular"},
                           nullptr, &err);
  CHECK(code == 2);
  CHECK(err.find("width") != std::string::npos);
}

TEST_CASE("definition-1 verification fails at an impossible tolerance") {
  std::string out;
  const int code = run_cli({"verify", "--mf", "cosine", "--dim", "1",
                            "--count", "5", "--definition", "1",
                            "--tolerance", "1e-18"},
                           &out);
  CHECK(code == 1);
  CHECK(out.find("FAIL") != std::string::npos);
  CHECK(out.find("/9 conditions passed") != std::string::npos);
  CHECK(out.find("9/9") == std::string::npos);
}

TEST_CASE("compare end to end: fuzzy beats crisp under a half-bin shift") {
  std::mt19937_64 rng(2025);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::ostringstream data;
  for (int i = 0; i < 2000; ++i) data << gauss(rng) << "\n";
  const auto csv = temp_file("fuzzpart_cmp_gauss.csv", data.str());
  std::string out;
  const std::string csv_s = csv.string();
  const int code =
      run_cli({"compare", csv_s.c_str(), "--mf", "triangular", "--dim", "1",
               "--origin", "-4", "--spacing", "0.4", "--count", "21",
               "--shift", "0.5"},
              &out);
  REQUIRE(code == 0);
  // Table row: shift,crisp_l1,fuzzy_l1
  const std::size_t row = out.find("\n0.5,");
  REQUIRE(row != std::string::npos);
  std::istringstream fields(out.substr(row + 5));
  double crisp_l1 = 0.0, fuzzy_l1 = 0.0;
  char comma = 0;
  fields >> crisp_l1 >> comma >> fuzzy_l1;
  CHECK(fuzzy_l1 < crisp_l1);
  CHECK(crisp_l1 > 0.0);
}

TEST_CASE("compare reports zero discrepancy at zero shift") {
  const auto csv = temp_file("fuzzpart_cmp_zero.csv", "1\n1.5\n0.25\n2.75\n");
  std::string out;
  const std::string csv_s = csv.string();
  const int code =
      run_cli({"compare", csv_s.c_str(), "--mf", "triangular", "--dim", "1",
               "--count", "5", "--shift", "0"},
              &out);
  CHECK(code == 0);
  CHECK(out.find("0,0,0") != std::string::npos);
}

#ifdef FUZZPART_CLI_BIN
TEST_CASE("the installed binary wires the same dispatch") {
  const std::string bin = FUZZPART_CLI_BIN;
  const int ok = std::system(
      (bin + " verify --mf triangular --mf cosine > /dev/null").c_str());
  CHECK(WEXITSTATUS(ok) == 0);
  const int bad = std::system(
      (bin + " verify --mf nosuchshape --dim 1 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(bad) == 2);
}
#endif
