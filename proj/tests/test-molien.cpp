#include <vector>  // for vector

#include "catch_amalgamated.hpp"

#include "mckay/error.hpp"
#include "mckay/instance.hpp"
#include "mckay/molien.hpp"
#include "mckay/ratfunc.hpp"

using namespace mckay;

namespace {
  QPoly qpoly(std::vector<std::int64_t> const& c) {
    return QPoly(std::vector<Rational>(c.begin(), c.end()));
  }

  // For cyclic(n), V = W_1 + W_{-1} and S^m V has weights a - b over
  // a + b = m, so the count is direct.
  std::int64_t cyclic_hom_oracle(std::int64_t n, std::int64_t i, std::int64_t j,
                                 std::int64_t m) {
    std::int64_t count = 0;
    for (std::int64_t a = 0; a <= m; ++a) {
      std::int64_t w = j + a - (m - a) - i;
      count += ((w % n) + n) % n == 0;
    }
    return count;
  }
}  // namespace

TEST_CASE("molien_matrices: cyclic(2)", "[molien][quick]") {
  auto inst = make_instance("cyclic:2");
  auto m    = molien_matrices(inst->table);
  QPoly d   = qpoly({1, 0, -1});
  REQUIRE(m.S[0][0] == RatFunc(qpoly({1, 0, 1}), d * d));
  REQUIRE(m.S[0][1] == RatFunc(qpoly({0, 2}), d * d));
  REQUIRE(m.E[0][0] == qpoly({1, 0, 1}));
  REQUIRE(m.E[0][1] == qpoly({0, 2}));
  // entry (0, 0) of S(t) E(-t): (1+t^2)^2/(1-t^2)^2 - 4t^2/(1-t^2)^2
  RatFunc e00 = m.S[0][0] * RatFunc(m.E[0][0].negate_variable())
                + m.S[0][1] * RatFunc(m.E[1][0].negate_variable());
  REQUIRE(e00 == RatFunc(Rational(1)));
  RatFunc e01 = m.S[0][0] * RatFunc(m.E[0][1].negate_variable())
                + m.S[0][1] * RatFunc(m.E[1][1].negate_variable());
  REQUIRE(e01.is_zero());
  REQUIRE(koszul_check(m).pass);
}

TEST_CASE("koszul_check: groups from the acceptance list", "[molien]") {
  for (auto s : {"cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
                 "bd:2", "bd:3", "2T"}) {
    CAPTURE(s);
    auto inst = make_instance(s);
    auto res  = koszul_check(molien_matrices(inst->table));
    INFO(res.witness());
    REQUIRE(res.pass);
  }
}

TEST_CASE("koszul_check: reports a witness", "[molien][quick]") {
  auto inst = make_instance("cyclic:2");
  auto m    = molien_matrices(inst->table);
  m.E[0][1] = qpoly({0, 3});
  auto res  = koszul_check(m);
  REQUIRE(!res.pass);
  REQUIRE(res.row == 0);
  REQUIRE(res.witness().find("entry (0,") == 0);
}

TEST_CASE("molien_matrices: structure", "[molien][property]") {
  for (auto s : {"cyclic:3", "cyclic:4", "bd:2", "bd:4", "2T", "2O"}) {
    CAPTURE(s);
    auto inst = make_instance(s);
    auto m    = molien_matrices(inst->table);
    for (std::size_t p = 0; p < m.size(); ++p) {
      for (std::size_t q = 0; q < m.size(); ++q) {
        std::int64_t delta = p == q ? 1 : 0;
        REQUIRE(series_of_ratfunc(m.S[p][q], 0)[0] == Rational(delta));
        REQUIRE(m.E[p][q].degree() <= 2);
        REQUIRE(m.E[p][q].coeff(0) == Rational(delta));
        REQUIRE(m.E[p][q].coeff(1) == Rational(inst->graph.n[p][q]));
        REQUIRE(m.E[p][q].coeff(2) == Rational(delta));
        // [t^m] S[p][q] = hom_dim(q, p, m)
        auto series = series_of_ratfunc(m.S[p][q], 8);
        for (std::size_t d = 0; d <= 8; ++d) {
          REQUIRE(series[d] == Rational(inst->homs(q, p, d)));
        }
      }
    }
  }
}

TEST_CASE("hom_dim: examples", "[molien][quick]") {
  auto  inst = make_instance("cyclic:2");
  auto& homs = inst->homs;
  REQUIRE(homs(0, 0, 0) == 1);
  REQUIRE(homs(0, 1, 0) == 0);
  REQUIRE(homs(0, 0, 2) == 3);
  REQUIRE(homs(0, 1, 1) == 2);
  REQUIRE(homs(0, 0, -1) == 0);
  REQUIRE_THROWS_AS(homs(0, 2, 1), PreconditionError);
}

TEST_CASE("hom_dim: cyclic groups against weight counting",
          "[molien][property]") {
  for (std::int64_t n = 1; n <= 7; ++n) {
    auto inst = make_instance("cyclic:" + std::to_string(n));
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = 0; j < n; ++j) {
        for (std::int64_t m = 0; m <= 10; ++m) {
          REQUIRE(inst->homs(i, j, m) == cyclic_hom_oracle(n, i, j, m));
        }
      }
    }
  }
}

TEST_CASE("hom_dim: symmetric and Schur", "[molien][property]") {
  for (auto s : {"bd:2", "bd:3", "2T", "2I"}) {
    CAPTURE(s);
    auto        inst = make_instance(s);
    std::size_t r    = inst->table.num_irreps();
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        REQUIRE(inst->homs(i, j, 0) == (i == j ? 1 : 0));
        REQUIRE(inst->homs(i, j, 1) == inst->graph.n[i][j]);
        for (std::int64_t m = 2; m <= 6; ++m) {
          REQUIRE(inst->homs(i, j, m) == inst->homs(j, i, m));
        }
      }
    }
  }
}

TEST_CASE("graded_dim_Bh: examples", "[molien][quick]") {
  auto                      inst = make_instance("cyclic:2");
  std::vector<std::int64_t> h{0, 1};
  auto const&               n = inst->graph.n;
  auto const&               p = inst->parity;
  REQUIRE(graded_dim_Bh(inst->homs, n, p, h, 0, 0, 0) == 1);
  REQUIRE(graded_dim_Bh(inst->homs, n, p, h, 0, 1, 0) == 0);
  REQUIRE(graded_dim_Bh(inst->homs, n, p, h, 0, 1, 1) == 2);
  REQUIRE(graded_dim_Bh(inst->homs, n, p, h, 0, 0, 2) == 3);
  REQUIRE(graded_dim_Bh(inst->homs, n, p, h, 0, 0, 1) == 0);
  REQUIRE_THROWS_AS(graded_dim_Bh(inst->homs, n, p, {0, 3}, 0, 0, 0),
                    PreconditionError);
  REQUIRE_THROWS_AS(graded_dim_Bh(inst->homs, n, p, {1, 0}, 0, 0, 0),
                    PreconditionError);
}
