#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli_app.hpp"
#include "hfl/deconvolution.hpp"
#include "hfl/homology.hpp"
#include "hfl/serialize.hpp"
#include "test_util.hpp"

using namespace hfl;
using hfltest::hopf_hat;
using hfltest::make_table;

namespace {

LinkInfo hopf_info() {
  LinkInfo info;
  info.family = "torus";
  info.n = 2;
  info.multiplier = 1;
  info.grid_size = 4;
  return info;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("hfl_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static inline int counter = 0;
};

int run_cli(const std::vector<std::string>& args, std::string* out_text,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = hfl::cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("json output is byte-exact and order-insensitive") {
  const std::string expected = R"({
  "schema_version": 1,
  "link": {
    "family": "torus",
    "n": 2,
    "multiplier": 1
  },
  "grid_size": 4,
  "coefficients": "GF2",
  "kind": "hat",
  "entries": [
    {
      "alexander2": [
        -1,
        -1
      ],
      "maslov": -2,
      "rank": 1
    },
    {
      "alexander2": [
        -1,
        1
      ],
      "maslov": -1,
      "rank": 1
    },
    {
      "alexander2": [
        1,
        -1
      ],
      "maslov": -1,
      "rank": 1
    },
    {
      "alexander2": [
        1,
        1
      ],
      "maslov": 0,
      "rank": 1
    }
  ]
}
)";
  CHECK(to_json(hopf_hat(), hopf_info()) == expected);

  // Insertion order does not leak into the bytes.
  GradedDimTable reordered(TableKind::Hat, 2);
  reordered.add({{1, 1}, 0}, 1);
  reordered.add({{-1, -1}, -2}, 1);
  reordered.add({{1, -1}, -1}, 1);
  reordered.add({{-1, 1}, -1}, 1);
  CHECK(to_json(reordered, hopf_info()) == expected);
}

TEST_CASE("csv ordering and header") {
  GradedDimTable t = make_table(
      TableKind::Hat, 2,
      {{{{1, 1}, -1}, 2}, {{{1, 1}, 0}, 1}, {{{-1, 1}, -1}, 3}});
  // maslov descends within one alexander vector.
  CHECK(to_csv(t) == "a1,a2,maslov,rank\n-1,1,-1,3\n1,1,0,1\n1,1,-1,2\n");
}

TEST_CASE("json round trip") {
  const GradedDimTable t = hopf_hat();
  LinkInfo parsed;
  const GradedDimTable back = table_from_json(to_json(t, hopf_info()),
                                              &parsed);
  CHECK(back == t);
  CHECK(back.kind == TableKind::Hat);
  CHECK(parsed.n == 2);
  CHECK(parsed.grid_size == 4);
}

TEST_CASE("malformed table json is rejected") {
  CHECK_THROWS_AS(table_from_json("not json at all"), Error);
  CHECK_THROWS_AS(table_from_json("{}"), Error);
  const std::string wrong_version = R"({"schema_version": 2,
    "link": {"family": "torus", "n": 2, "multiplier": 1},
    "grid_size": 4, "coefficients": "GF2", "kind": "hat", "entries": []})";
  CHECK_THROWS_AS(table_from_json(wrong_version), Error);
  const std::string negative_rank = R"({"schema_version": 1,
    "link": {"family": "torus", "n": 1, "multiplier": 1},
    "grid_size": 2, "coefficients": "GF2", "kind": "hat",
    "entries": [{"alexander2": [0], "maslov": 0, "rank": -1}]})";
  CHECK_THROWS_AS(table_from_json(negative_rank), Error);
}

TEST_CASE("grid hashes distinguish grids") {
  const std::string h2 = grid_hash8(torus_grid(2));
  CHECK(h2.size() == 8);
  CHECK(h2 == grid_hash8(torus_grid(2)));
  CHECK(h2 != grid_hash8(torus_grid(3)));
}

TEST_CASE("cache stores and reloads tilde tables") {
  TempDir dir;
  const TableCache cache(dir.path);
  const GridDiagram g = torus_grid(2);
  LinkInfo info = hopf_info();

  CHECK_FALSE(cache.load(info, g).has_value());

  GradedDimTable tilde = hfltest::expand_tensor(hopf_hat(), {1, 1});
  cache.store(info, g, tilde);

  const auto path = cache.path_for(info, g);
  CHECK(std::filesystem::exists(path));
  CHECK(path.filename().string() ==
        "torus_2_1_" + grid_hash8(g) + ".json");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));

  const auto loaded = cache.load(info, g);
  REQUIRE(loaded.has_value());
  CHECK(*loaded == tilde);
}

TEST_CASE("corrupt cache entries are reported and skipped") {
  TempDir dir;
  const TableCache cache(dir.path);
  const GridDiagram g = torus_grid(2);
  const LinkInfo info = hopf_info();
  {
    std::ofstream file(cache.path_for(info, g));
    file << "{ definitely not a table";
  }
  std::string warning;
  CHECK_FALSE(cache.load(info, g, &warning).has_value());
  CHECK(warning.find("recomputing") != std::string::npos);
}

TEST_CASE("cli verify exits zero on the hopf link") {
  std::string out;
  CHECK(run_cli({"verify", "--n", "2"}, &out) == hfl::cli::kExitOk);
  CHECK(out.find("all checks pass") != std::string::npos);
}

TEST_CASE("cli rejects unknown flags and bad values with exit 3") {
  std::string out, err;
  CHECK(run_cli({"verify", "--bogus"}, &out, &err) == hfl::cli::kExitUsage);
  CHECK(run_cli({"verify"}, &out, &err) == hfl::cli::kExitUsage);  // no --n
  CHECK(run_cli({"compute", "--n", "1"}, &out, &err) ==
        hfl::cli::kExitUsage);
  CHECK(run_cli({"check", "--property", "nope", "--n", "3"}, &out, &err) ==
        hfl::cli::kExitUsage);
  // Budget exhaustion is a resource error.
  CHECK(run_cli({"compute", "--n", "4", "--budget-mb", "0"}, &out, &err) ==
        hfl::cli::kExitUsage);
  CHECK(err.find("budget") != std::string::npos);
}

TEST_CASE("cli predict emits the junction rows for n = 5") {
  std::string out;
  CHECK(run_cli({"predict", "--n", "5", "--format", "csv"}, &out) ==
        hfl::cli::kExitOk);
  CHECK(out.find("a1,a2,a3,a4,a5,maslov,rank") == 0);
  // Junction C = 2 sits at the origin with ranks 1, 4, 10, 1.
  CHECK(out.find("0,0,0,0,0,-6,1") != std::string::npos);
  CHECK(out.find("0,0,0,0,0,-7,4") != std::string::npos);
  CHECK(out.find("0,0,0,0,0,-8,10") != std::string::npos);
  CHECK(out.find("0,0,0,0,0,-9,1") != std::string::npos);
}

TEST_CASE("cli compute emits 15 support points for n = 3") {
  std::string out;
  CHECK(run_cli({"compute", "--n", "3", "--format", "json"}, &out) ==
        hfl::cli::kExitOk);
  LinkInfo info;
  const GradedDimTable t = table_from_json(out, &info);
  CHECK(info.n == 3);
  CHECK(t.kind == TableKind::Hat);
  std::set<std::vector<int>> points;
  for (const auto& [g, r] : t.entries) points.insert(g.alexander2);
  CHECK(points.size() == 15);
}

TEST_CASE("cli compute output is deterministic and cache round-trips") {
  TempDir dir;
  const std::vector<std::string> args{"compute", "--n",        "3",
                                      "--format", "json",      "--cache-dir",
                                      dir.path.string()};
  std::string first, second, err;
  CHECK(run_cli(args, &first, &err) == hfl::cli::kExitOk);
  // Second run hits the cache and must produce identical bytes.
  CHECK(run_cli(args, &second, &err) == hfl::cli::kExitOk);
  CHECK(first == second);
  CHECK(std::filesystem::exists(dir.path / ("torus_3_1_" +
                                            grid_hash8(torus_grid(3)) +
                                            ".json")));

  // Corrupting the cache triggers a warning and a rebuild, same output.
  {
    std::ofstream file(dir.path / ("torus_3_1_" +
                                   grid_hash8(torus_grid(3)) + ".json"));
    file << "garbage";
  }
  std::string third;
  CHECK(run_cli(args, &third, &err) == hfl::cli::kExitOk);
  CHECK(third == first);
  CHECK(err.find("recomputing") != std::string::npos);
}

TEST_CASE("cli verify matches predictions for n = 3 end to end") {
  std::string out;
  CHECK(run_cli({"verify", "--n", "3", "--strict-conjecture"}, &out) ==
        hfl::cli::kExitOk);
  CHECK(out.find("1 conjecture match") != std::string::npos);
}

TEST_CASE("cli check subcommand drives each property") {
  std::string out;
  CHECK(run_cli({"check", "--property", "orbit", "--n", "3"}, &out) ==
        hfl::cli::kExitOk);
  CHECK(run_cli({"check", "--property", "conjugation", "--n", "3"}, &out) ==
        hfl::cli::kExitOk);
  CHECK(run_cli({"check", "--property", "totals", "--n", "3"}, &out) ==
        hfl::cli::kExitOk);
  CHECK(run_cli({"check", "--property", "forgetful", "--n", "3"}, &out) ==
        hfl::cli::kExitOk);
  CHECK(out.find("pass") != std::string::npos);
}

TEST_CASE("cli verify exit codes distinguish conjecture from theorem") {
  // Seed the cache with doctored tilde tables: verify reads the cache, so
  // a junction-only perturbation must exit 2 (1 under --strict-conjecture)
  // while a theorem-point perturbation must exit 1.
  const GridDiagram g = torus_grid(3);
  const FactorSpec f = FactorSpec::for_grid(g);
  const GradedDimTable tilde = tilde_homology(g);
  GradedDimTable hat = strip_factors(tilde, f);

  LinkInfo info;
  info.n = 3;
  info.multiplier = 1;
  info.grid_size = 6;

  std::string out, err;
  {
    TempDir dir;
    const TableCache cache(dir.path);
    GradedDimTable junction_bumped = hat;
    junction_bumped.add({{0, 0, 0}, -3}, 1);
    cache.store(info, g, apply_factors(junction_bumped, f));

    const std::vector<std::string> args{"verify", "--n", "3", "--cache-dir",
                                        dir.path.string()};
    CHECK(run_cli(args, &out, &err) == hfl::cli::kExitConjectureMismatch);
    CHECK(out.find("conjecture-mismatch") != std::string::npos);

    std::vector<std::string> strict = args;
    strict.push_back("--strict-conjecture");
    CHECK(run_cli(strict, &out, &err) == hfl::cli::kExitTheoremMismatch);
  }
  {
    TempDir dir;
    const TableCache cache(dir.path);
    GradedDimTable top_bumped = hat;
    top_bumped.add({{2, 2, 2}, 0}, 1);
    cache.store(info, g, apply_factors(top_bumped, f));
    CHECK(run_cli({"verify", "--n", "3", "--cache-dir", dir.path.string()},
                  &out, &err) == hfl::cli::kExitTheoremMismatch);
  }
}

TEST_CASE("cli verify round-trips through the cache") {
  TempDir dir;
  std::string first, second, err;
  const std::vector<std::string> args{"verify", "--n", "3", "--cache-dir",
                                      dir.path.string()};
  CHECK(run_cli(args, &first, &err) == hfl::cli::kExitOk);
  REQUIRE(std::filesystem::exists(
      dir.path / ("torus_3_1_" + grid_hash8(torus_grid(3)) + ".json")));
  CHECK(run_cli(args, &second, &err) == hfl::cli::kExitOk);
  CHECK(first == second);
}

TEST_CASE("cache directory falls back to HFL_CACHE_DIR") {
  TempDir dir;
  ::setenv("HFL_CACHE_DIR", dir.path.c_str(), 1);
  std::string out, err;
  CHECK(run_cli({"compute", "--n", "2"}, &out, &err) == hfl::cli::kExitOk);
  ::unsetenv("HFL_CACHE_DIR");
  CHECK(std::filesystem::exists(
      dir.path / ("torus_2_1_" + grid_hash8(torus_grid(2)) + ".json")));
}

TEST_CASE("cli linking output") {
  std::string out;
  CHECK(run_cli({"linking", "--n", "2", "--multiplier", "2", "--format",
                 "csv"},
                &out) == hfl::cli::kExitOk);
  CHECK(out == "0,2\n2,0\n");
}
