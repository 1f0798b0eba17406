#include <filesystem>  // for temp_directory_path
#include <fstream>     // for ofstream
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include "catch_amalgamated.hpp"

#include "mckay/cli.hpp"
#include "mckay/serialize.hpp"

using namespace mckay;

namespace {
  struct Result {
    int         status;
    std::string out, err;
    json        doc() const {
      return json::parse(out);
    }
  };

  Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "mckay");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int status = main_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
  }

  std::filesystem::path scratch(std::string const& name) {
    auto p = std::filesystem::temp_directory_path() / ("mckay-cli-test-" + name);
    std::filesystem::remove_all(p);
    return p;
  }
}  // namespace

TEST_CASE("cli: graph 2T", "[cli][quick]") {
  auto r = cli({"graph", "2T"});
  REQUIRE(r.status == 0);
  auto d = r.doc();
  REQUIRE(d["command"] == "graph");
  REQUIRE(d["group"] == "2T");
  REQUIRE(d["data"]["type"] == "E6~");
  REQUIRE(d["data"]["vertices"] == 7);
  REQUIRE(d["checks"].size() == 1);
  REQUIRE(d["checks"][0]["pass"] == true);
  REQUIRE(!d["checks"][0]["paper_ref"].get<std::string>().empty());
}

TEST_CASE("cli: koszul-check cyclic:2 passes", "[cli][quick]") {
  auto r = cli({"koszul-check", "cyclic:2"});
  REQUIRE(r.status == 0);
  for (auto const& c : r.doc()["checks"]) {
    REQUIRE(c["pass"] == true);
  }
}

TEST_CASE("cli: exit codes", "[cli][quick]") {
  // -I is absent from odd cyclic groups
  REQUIRE(cli({"heights", "cyclic:3"}).status == 2);
  REQUIRE(cli({"graph", "cyclic:3"}).status == 0);
  REQUIRE(cli({"graph", "dodecahedron"}).status == 2);
  REQUIRE(cli({"frobnicate", "2T"}).status == 2);
  REQUIRE(cli({"graph"}).status == 2);
  REQUIRE(cli({}).status == 2);
  REQUIRE(cli({"graph", "2T", "--output", "xml"}).status == 2);
  REQUIRE(cli({"heights", "cyclic:4", "--height", "0,1,0,1", "--all-heights"}).status == 2);
  REQUIRE(cli({"kirillov-check", "cyclic:4", "--height", "0,1,0"}).status == 2);
  REQUIRE(cli({"kirillov-check", "cyclic:4", "--height", "0,2,0,1"}).status == 2);
  REQUIRE(cli({"molien", "cyclic:2", "--max-degree", "13"}).status == 3);
  REQUIRE(cli({"molien", "cyclic:2", "--max-degree", "12"}).status == 0);
  REQUIRE(cli({"heights", "cyclic:4", "--window", "5"}).status == 3);
  REQUIRE(cli({"heights", "cyclic:4", "--window", "4"}).status == 0);
}

TEST_CASE("cli: identical configurations give identical bytes", "[cli]") {
  for (auto cmd : {"chartab", "molien", "lattice-check", "reflect"}) {
    CAPTURE(cmd);
    auto a = cli({cmd, "bd:2", "--seed", "5"});
    auto b = cli({cmd, "bd:2", "--seed", "5"});
    REQUIRE(a.status == 0);
    REQUIRE(a.out == b.out);
  }
  auto cache = scratch("cache");
  auto plain = cli({"chartab", "2O"});
  auto cold  = cli({"chartab", "2O", "--cache-dir", cache.string()});
  auto warm  = cli({"chartab", "2O", "--cache-dir", cache.string()});
  REQUIRE(cold.out == plain.out);
  REQUIRE(warm.out == plain.out);
  std::filesystem::remove_all(cache);
}

TEST_CASE("cli: heights and paths", "[cli][quick]") {
  auto h = cli({"heights", "cyclic:4"}).doc();
  REQUIRE(h["data"]["count"] == 6);
  REQUIRE(h["data"]["heights"][0]["height"] == json{0, -1, -2, -1});

  auto p = cli({"paths", "cyclic:4", "--height", "0,1,2,1"}).doc();
  REQUIRE(p["data"]["heights"].size() == 1);
  // vertex 2 is the top; two paths 2 -> 0
  REQUIRE(p["data"]["heights"][0]["paths"][2][0] == 2);
  REQUIRE(p["data"]["heights"][0]["paths"][0][2] == 0);
  REQUIRE(p["checks"].empty());
}

TEST_CASE("cli: check commands pass on small groups", "[cli]") {
  for (auto cmd : {"group", "chartab", "kirillov-check", "ext-check", "preproj",
                   "hilbert-match", "lattice-check", "reflect"}) {
    for (auto g : {"cyclic:2", "bd:2"}) {
      CAPTURE(cmd, g);
      auto r = cli({cmd, g});
      INFO(r.err);
      REQUIRE(r.status == 0);
      REQUIRE(!r.doc()["checks"].empty());
    }
  }
  auto t = cli({"lattice-check", "cyclic:4", "--output", "table"});
  REQUIRE(t.status == 0);
  REQUIRE(t.out.find("PASS twist-vs-flip") != std::string::npos);
}

TEST_CASE("cli: reflect a representation file", "[cli][quick]") {
  auto dir = scratch("rep");
  std::filesystem::create_directories(dir);
  auto file = (dir / "rep.json").string();
  {
    // Kronecker quiver 1 => 0 with the identity pair, reflected at the sink 0
    std::ofstream out(file);
    out << R"({"dims": [1, 2], "arrows": [
      {"from": 1, "to": 0, "index": 0, "matrix": [[1, 0]]},
      {"from": 1, "to": 0, "index": 1, "matrix": [[0, 1]]}]})";
  }
  auto r = cli({"reflect", "cyclic:2", "--rep", file, "--vertex", "0"});
  REQUIRE(r.status == 0);
  auto d = r.doc();
  REQUIRE(d["data"]["direction"] == "plus");
  REQUIRE(d["data"]["reflected"]["dims"] == json{3, 2});

  REQUIRE(cli({"reflect", "cyclic:2", "--rep", file, "--vertex", "2"}).status == 2);
  REQUIRE(cli({"reflect", "cyclic:2", "--rep", file, "--vertex", "0", "--dir", "minus"}).status
          == 2);
  REQUIRE(cli({"reflect", "cyclic:2", "--rep", file}).status == 2);
  REQUIRE(cli({"reflect", "cyclic:4", "--rep", file, "--vertex", "0"}).status == 2);
  REQUIRE(cli({"reflect", "cyclic:2", "--rep", (dir / "missing.json").string(), "--vertex",
               "0"})
              .status
          == 2);
  {
    // simple summand at the sink: both maps vanish
    std::ofstream out(file);
    out << R"({"dims": [1, 1], "arrows": [
      {"from": 1, "to": 0, "index": 0, "matrix": [[0]]},
      {"from": 1, "to": 0, "index": 1, "matrix": [[0]]}]})";
  }
  REQUIRE(cli({"reflect", "cyclic:2", "--rep", file, "--vertex", "0"}).status == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli: all runs every criterion", "[cli]") {
  auto r = cli({"all"});
  REQUIRE(r.status == 0);
  auto checks = r.doc()["checks"];
  REQUIRE(checks.size() == 9);
  for (std::size_t k = 0; k < checks.size(); ++k) {
    REQUIRE(checks[k]["name"].get<std::string>().substr(0, 2) == "c" + std::to_string(k + 1));
    REQUIRE(checks[k]["pass"] == true);
  }
  REQUIRE(cli({"all"}).out == r.out);
}
