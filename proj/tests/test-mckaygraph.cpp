#include <algorithm>  // for shuffle
#include <numeric>    // for iota
#include <random>     // for mt19937_64
#include <vector>     // for vector

#include "catch_amalgamated.hpp"

#include "mckay/error.hpp"
#include "mckay/instance.hpp"
#include "mckay/mckaygraph.hpp"

using namespace mckay;

namespace {
  // n_ij summed over elements rather than classes.
  IntMatrix mckay_oracle(MatrixGroup const& g, CharacterTable const& t) {
    std::size_t r = t.num_irreps();
    IntMatrix   n(r, std::vector<std::int64_t>(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        CycloNum s;
        for (std::size_t x = 0; x < g.order(); ++x) {
          std::size_t k = g.class_of(x);
          s += t.chi[i][k].conj() * trace(g.element(x)) * t.chi[j][k];
        }
        s *= CycloNum(Rational(1, static_cast<std::int64_t>(g.order())));
        n[i][j] = s.to_rational().to_int64();
      }
    }
    return n;
  }

  IntMatrix permute(IntMatrix const& n, std::vector<std::size_t> const& p) {
    IntMatrix m = n;
    for (std::size_t i = 0; i < n.size(); ++i) {
      for (std::size_t j = 0; j < n.size(); ++j) {
        m[p[i]][p[j]] = n[i][j];
      }
    }
    return m;
  }

  std::vector<AffineType> all_references() {
    std::vector<AffineType> v;
    for (unsigned m = 1; m <= 12; ++m) {
      v.push_back({AdeFamily::A, m});
    }
    for (unsigned m = 4; m <= 10; ++m) {
      v.push_back({AdeFamily::D, m});
    }
    for (unsigned m = 6; m <= 8; ++m) {
      v.push_back({AdeFamily::E, m});
    }
    return v;
  }
}  // namespace

TEST_CASE("mckay_matrix: small groups", "[mckaygraph][quick]") {
  auto c2 = make_instance("cyclic:2");
  REQUIRE(c2->graph.n == IntMatrix{{0, 2}, {2, 0}});
  REQUIRE(c2->graph.classification.type->label() == "A1~");
  REQUIRE(c2->graph.delta() == std::vector<std::int64_t>{1, 1});

  auto q8 = make_instance("bd:2");
  // star with center the 2-dimensional irrep
  REQUIRE(q8->graph.n
          == IntMatrix{{0, 0, 0, 0, 1},
                       {0, 0, 0, 0, 1},
                       {0, 0, 0, 0, 1},
                       {0, 0, 0, 0, 1},
                       {1, 1, 1, 1, 0}});
  REQUIRE(q8->graph.classification.type->label() == "D4~");
}

TEST_CASE("mckay_matrix: cyclic groups give cycles", "[mckaygraph]") {
  for (unsigned n = 3; n <= 12; ++n) {
    CAPTURE(n);
    auto inst = make_instance("cyclic:" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        bool adjacent = (i + 1) % n == j || (j + 1) % n == i;
        REQUIRE(inst->graph.n[i][j] == (adjacent ? 1 : 0));
      }
    }
  }
}

TEST_CASE("mckay_matrix: agrees with the element sum", "[mckaygraph]") {
  for (auto s : {"cyclic:5", "bd:3", "2T", "2O"}) {
    CAPTURE(s);
    auto inst = make_instance(s);
    REQUIRE(inst->graph.n == mckay_oracle(inst->group, inst->table));
  }
}

TEST_CASE("classify_affine_ade: reference diagrams", "[mckaygraph][quick]") {
  REQUIRE(reference_delta({AdeFamily::E, 6})
          == std::vector<std::int64_t>{1, 1, 1, 2, 2, 2, 3});
  for (AffineType t : all_references()) {
    CAPTURE(t.label());
    IntMatrix n = reference_diagram(t);
    auto      c = classify_affine_ade(n);
    REQUIRE(c.type == t);
    REQUIRE(c.delta == reference_delta(t));
    REQUIRE(AffineType::parse(t.label()) == t);
  }
}

TEST_CASE("classify_affine_ade: permuted references", "[mckaygraph][property]") {
  std::mt19937_64 rng(5);
  for (AffineType t : all_references()) {
    IntMatrix                n = reference_diagram(t);
    std::vector<std::size_t> p(n.size());
    std::iota(p.begin(), p.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(p.begin(), p.end(), rng);
      IntMatrix m = permute(n, p);
      auto      c = classify_affine_ade(m);
      REQUIRE(c.type == t);
      // the bijection really is an isomorphism onto the reference
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          REQUIRE(m[i][j] == n[c.to_reference[i]][c.to_reference[j]]);
        }
      }
      for (std::size_t i = 0; i < m.size(); ++i) {
        REQUIRE(c.delta[p[i]] == reference_delta(t)[i]);
      }
    }
  }
}

TEST_CASE("classify_affine_ade: non affine graphs", "[mckaygraph][quick]") {
  // finite A_3
  REQUIRE(!classify_affine_ade({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}).type);
  REQUIRE(classify_affine_ade({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}).delta.empty());
  // triangle with a loop
  REQUIRE(!classify_affine_ade({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}).type);
  // triple edge
  REQUIRE(!classify_affine_ade({{0, 3}, {3, 0}}).type);
  // star with five leaves
  IntMatrix star(6, std::vector<std::int64_t>(6, 0));
  for (std::size_t i = 1; i < 6; ++i) {
    star[0][i] = star[i][0] = 1;
  }
  REQUIRE(!classify_affine_ade(star).type);
}

TEST_CASE("mckay graph: affine type, delta and parity", "[mckaygraph]") {
  struct Case {
    char const* desc;
    char const* type;
  };
  Case const cases[] = {{"cyclic:2", "A1~"}, {"cyclic:6", "A5~"},
                        {"bd:1", "A3~"},     {"bd:2", "D4~"},
                        {"bd:3", "D5~"},     {"2T", "E6~"},
                        {"2O", "E7~"},       {"2I", "E8~"}};
  for (auto const& c : cases) {
    CAPTURE(c.desc);
    auto        inst = make_instance(c.desc);
    auto const& g    = inst->graph;
    REQUIRE(g.classification.type->label() == c.type);
    REQUIRE(g.delta() == inst->table.dims);
    REQUIRE(g.delta()[g.affine_node] == 1);
    auto cartan = g.cartan();
    for (std::size_t j = 0; j < g.num_vertices(); ++j) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        s += g.delta()[i] * cartan[i][j];
      }
      REQUIRE(s == 0);
    }
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
      REQUIRE(g.n[i][i] == 0);
      for (std::size_t j : g.neighbors(i)) {
        REQUIRE(inst->parity[i] != inst->parity[j]);
      }
    }
  }
}

TEST_CASE("parity_function: examples", "[mckaygraph][quick]") {
  REQUIRE(make_instance("cyclic:2")->parity == std::vector<int>{0, 1});
  REQUIRE(make_instance("cyclic:4")->parity == std::vector<int>{0, 1, 0, 1});
  REQUIRE(make_instance("bd:2")->parity == std::vector<int>{0, 0, 0, 0, 1});
  auto c3 = make_instance("cyclic:3");
  REQUIRE(!c3->has_parity());
  REQUIRE_THROWS_AS(parity_function(c3->table, c3->group, c3->graph.n),
                    PreconditionError);
  REQUIRE_THROWS_AS(c3->require_parity(), PreconditionError);
}
