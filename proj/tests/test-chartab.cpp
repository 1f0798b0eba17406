#include <algorithm>   // for sort
#include <filesystem>  // for path, temp_directory_path
#include <fstream>     // for ofstream
#include <vector>      // for vector

#include <unistd.h>  // for getpid

#include "catch_amalgamated.hpp"

#include "mckay/chartab.hpp"
#include "mckay/groups.hpp"

using namespace mckay;

namespace {
  MatrixGroup group(char const* s) {
    return MatrixGroup(GroupDescriptor::parse(s));
  }

  // a_ijk by looping over all pairs (x, y).
  ClassConstants constants_oracle(MatrixGroup const& g) {
    std::size_t    r = g.num_classes();
    ClassConstants a(r, std::vector<std::vector<std::int64_t>>(
                            r, std::vector<std::int64_t>(r, 0)));
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (std::size_t y = 0; y < g.order(); ++y) {
        std::size_t z = g.product(x, y);
        std::size_t k = g.class_of(z);
        if (z == g.classes()[k].representative) {
          ++a[g.class_of(x)][g.class_of(y)][k];
        }
      }
    }
    return a;
  }
}  // namespace

TEST_CASE("class_constants: identity and brute force", "[chartab][quick]") {
  for (auto s : {"cyclic:2", "bd:2", "bd:3", "2T"}) {
    CAPTURE(s);
    MatrixGroup g = group(s);
    auto        a = class_constants(g);
    REQUIRE(a == constants_oracle(g));
    for (std::size_t j = 0; j < g.num_classes(); ++j) {
      for (std::size_t k = 0; k < g.num_classes(); ++k) {
        REQUIRE(a[0][j][k] == (j == k ? 1 : 0));
      }
    }
  }
  auto a = class_constants(group("cyclic:2"));
  REQUIRE(a[1][1][0] == 1);
  REQUIRE(a[1][1][1] == 0);
}

TEST_CASE("dixon_prime", "[chartab][quick]") {
  REQUIRE(dixon_prime(8, 4) == 13);
  REQUIRE(dixon_prime(120, 60) == 61);
  REQUIRE(dixon_prime(120, 60, 1) == 181);
  REQUIRE(dixon_prime(2, 2) == 3);
}

TEST_CASE("character table: cyclic(2)", "[chartab][quick]") {
  MatrixGroup g = group("cyclic:2");
  auto        t = dixon_character_table(g);
  REQUIRE(t.num_irreps() == 2);
  REQUIRE(t.chi[0] == std::vector<CycloNum>{1, 1});
  REQUIRE(t.chi[1] == std::vector<CycloNum>{1, -1});
  REQUIRE(!t.defining_index);
  REQUIRE(t.defining == std::vector<CycloNum>{2, -2});
}

TEST_CASE("character table: cyclic(n) matches zeta_n^(km)", "[chartab]") {
  for (unsigned n = 1; n <= 12; ++n) {
    CAPTURE(n);
    MatrixGroup g(GroupDescriptor{Family::cyclic, n});
    auto        t = dixon_character_table(g);
    REQUIRE(t.num_irreps() == n);
    // element m is g^m and forms its own class m
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t m = 0; m < n; ++m) {
        REQUIRE(g.classes()[m].representative == m);
        REQUIRE(t.chi[k][m]
                == CycloNum::zeta(n, static_cast<long>(k * m)));
      }
    }
  }
}

TEST_CASE("character table: quaternion group", "[chartab][quick]") {
  MatrixGroup g = group("bd:2");
  auto        t = dixon_character_table(g);
  REQUIRE(t.prime == 13);
  REQUIRE(t.dims == std::vector<std::int64_t>{1, 1, 1, 1, 2});
  std::size_t minus = g.class_of(*g.minus_identity());
  REQUIRE(t.chi[4][minus] == CycloNum(-2));
  REQUIRE(t.defining_index == 4u);
  REQUIRE(!verify_character_table(t, g));
}

TEST_CASE("character table: binary polyhedral degrees", "[chartab]") {
  using V = std::vector<std::int64_t>;
  auto t2 = dixon_character_table(group("2T"));
  REQUIRE(t2.dims == V{1, 1, 1, 2, 2, 2, 3});
  auto to = dixon_character_table(group("2O"));
  REQUIRE(to.dims == V{1, 1, 2, 2, 2, 3, 3, 4});
  MatrixGroup gi = group("2I");
  auto        ti = dixon_character_table(gi);
  REQUIRE(ti.prime == 61);
  REQUIRE(ti.dims == V{1, 2, 2, 3, 3, 4, 4, 5, 6});
  REQUIRE(ti.defining_index.has_value());
  REQUIRE(!verify_character_table(ti, gi));
}

TEST_CASE("character table: invariants for every family", "[chartab][property]") {
  for (auto s : {"cyclic:1", "cyclic:5", "cyclic:8", "bd:1", "bd:3", "bd:4",
                 "bd:5", "bd:6", "2T", "2O"}) {
    CAPTURE(s);
    MatrixGroup g = group(s);
    auto        t = dixon_character_table(g);
    auto        w = verify_character_table(t, g);
    INFO((w ? *w : std::string("ok")));
    REQUIRE(!w);
    REQUIRE(t.trivial == 0);
    for (std::size_t i = 0; i < t.num_irreps(); ++i) {
      for (std::size_t k = 0; k < t.num_classes(); ++k) {
        auto m = eigenvalue_multiplicities(t, g, i, k);
        std::int64_t sum = 0;
        for (auto x : m) {
          REQUIRE(x >= 0);
          sum += x;
        }
        REQUIRE(sum == t.dims[i]);
      }
    }
  }
}

TEST_CASE("character table: independent of prime and seed", "[chartab]") {
  for (auto s : {"cyclic:6", "bd:3", "2T", "2O"}) {
    CAPTURE(s);
    MatrixGroup g = group(s);
    auto        a = dixon_character_table(g);
    auto        b = dixon_character_table(g, {.seed = 99, .prime_skip = 1});
    REQUIRE(a.prime != b.prime);
    REQUIRE(a == b);
  }
}

TEST_CASE("character table: disk cache round trip", "[chartab][quick]") {
  auto dir = std::filesystem::temp_directory_path()
             / ("mckay-cache-test-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  MatrixGroup g     = group("2T");
  auto        first = character_table(g, dir);
  REQUIRE(std::distance(std::filesystem::directory_iterator(dir),
                        std::filesystem::directory_iterator())
          == 1);
  auto second = character_table(g, dir);
  REQUIRE(first == second);
  // a corrupt file is recomputed
  for (auto const& f : std::filesystem::directory_iterator(dir)) {
    std::ofstream(f.path()) << "{ not json";
  }
  REQUIRE(character_table(g, dir) == first);
  std::filesystem::remove_all(dir);
}
