#include <random>  // for mt19937_64
#include <vector>  // for vector

#include "catch_amalgamated.hpp"
#include "generators.hpp"

#include "mckay/cyclo.hpp"
#include "mckay/error.hpp"
#include "mckay/linalg.hpp"
#include "mckay/poly.hpp"
#include "mckay/ratfunc.hpp"
#include "mckay/rational.hpp"

using namespace mckay;

namespace {
  QPoly qpoly(std::vector<std::int64_t> const& c) {
    return QPoly(std::vector<Rational>(c.begin(), c.end()));
  }

  int mobius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) {
          return 0;
        }
        mu = -mu;
      }
    }
    return n > 1 ? -mu : mu;
  }

  // Phi_n = prod_{d | n} (t^d - 1)^mu(n/d), independent of the library's
  // recursive division.
  QPoly cyclotomic_oracle(unsigned n) {
    QPoly num = QPoly::constant(1), den = QPoly::constant(1);
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      QPoly f  = QPoly::monomial(1, d) - QPoly::constant(1);
      int   mu = mobius(n / d);
      if (mu == 1) {
        num *= f;
      } else if (mu == -1) {
        den *= f;
      }
    }
    auto [q, r] = QPoly::divmod(num, den);
    REQUIRE(r.is_zero());
    return q;
  }

  // u with u * a = 1 mod m, by the extended Euclidean algorithm.
  QPoly inverse_mod_oracle(QPoly a, QPoly m) {
    QPoly r0 = m, r1 = a, s0, s1 = QPoly::constant(1);
    while (!r1.is_zero()) {
      auto [q, r] = QPoly::divmod(r0, r1);
      QPoly s     = s0 - q * s1;
      r0          = std::move(r1);
      r1          = std::move(r);
      s0          = std::move(s1);
      s1          = std::move(s);
    }
    REQUIRE(r0.degree() == 0);
    return QPoly::divmod(r0.leading().inverse() * s0, m).second;
  }

  CycloNum from_poly(unsigned n, QPoly const& p) {
    return CycloNum::from_exponents(n, p.coeffs());
  }
}  // namespace

TEST_CASE("Rational: canonical form and parsing", "[exactnum][quick]") {
  Rational a(6, -4);
  REQUIRE(a.to_string() == "-3/2");
  REQUIRE(Rational(4, 2).to_string() == "2/1");
  REQUIRE(Rational::parse("-3/2") == a);
  REQUIRE(Rational::parse("7") == Rational(7));
  REQUIRE_THROWS_AS(Rational(1, 0), DivisionByZero);
  REQUIRE_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  REQUIRE_THROWS_AS(Rational::parse("x/2"), PreconditionError);
  REQUIRE(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("cyclotomic_polynomial: small cases", "[exactnum][quick]") {
  using V = std::vector<std::int64_t>;
  REQUIRE(cyclotomic_polynomial(1) == V{-1, 1});
  REQUIRE(cyclotomic_polynomial(4) == V{1, 0, 1});
  REQUIRE(cyclotomic_polynomial(6) == V{1, -1, 1});
  REQUIRE(cyclotomic_polynomial(20) == V{1, 0, -1, 0, 1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic_polynomial: agrees with Mobius product, divides t^N - 1",
          "[exactnum]") {
  for (unsigned n = 1; n <= 60; ++n) {
    auto  c = cyclotomic_polynomial(n);
    QPoly phi(std::vector<Rational>(c.begin(), c.end()));
    REQUIRE(phi == cyclotomic_oracle(n));
    REQUIRE(phi.degree() == static_cast<int>(euler_phi(n)));
    QPoly tn = QPoly::monomial(1, n) - QPoly::constant(1);
    REQUIRE(QPoly::divmod(tn, phi).second.is_zero());
  }
}

TEST_CASE("CycloNum: roots of unity", "[exactnum][quick]") {
  CycloNum i = CycloNum::zeta(4);
  REQUIRE(i * i == CycloNum(-1));
  REQUIRE(CycloNum::zeta(3) + CycloNum::zeta(3, 2) == CycloNum(-1));
  REQUIRE(CycloNum::zeta(8, 2) == i);
  REQUIRE(CycloNum::zeta(20, 5) == i);
  REQUIRE(CycloNum::zeta(6, -1) == CycloNum::zeta(6, 5));
  REQUIRE(i.conj() == -i);
  REQUIRE(CycloNum::zeta(5).lift(20) == CycloNum::zeta(20, 4));
  REQUIRE(CycloNum().is_zero());
  REQUIRE(CycloNum(Rational(3, 4)).to_rational() == Rational(3, 4));
  REQUIRE_THROWS_AS(i.to_rational(), DefectError);
}

TEST_CASE("CycloNum: inverse of 1 + zeta_5", "[exactnum][quick]") {
  CycloNum a = CycloNum(1) + CycloNum::zeta(5);
  CycloNum x = a.inverse();
  REQUIRE(a * x == CycloNum(1));
  QPoly u = inverse_mod_oracle(qpoly({1, 1}), qpoly({1, 1, 1, 1, 1}));
  REQUIRE(x == from_poly(5, u));
  // frozen: -z - z^3
  REQUIRE(x.coeffs() == std::vector<Rational>{0, -1, 0, -1});
}

TEST_CASE("CycloNum: errors", "[exactnum][quick]") {
  REQUIRE_THROWS_AS(CycloNum().inverse(), DivisionByZero);
  REQUIRE_THROWS_AS(CycloNum(1) / CycloNum(0), DivisionByZero);
  REQUIRE_THROWS_AS(CycloNum::zeta(7) * CycloNum::zeta(40), ResourceError);
  REQUIRE_THROWS_AS(CycloNum::zeta(121), ResourceError);
  REQUIRE_THROWS_AS(CycloNum::zeta(3).lift(4), PreconditionError);
}

TEST_CASE("CycloNum: field laws on random triples", "[exactnum][property]") {
  std::mt19937_64 rng(20240601);
  unsigned const  conductors[] = {1, 3, 4, 5, 8, 12, 20, 24};
  for (int trial = 0; trial < 300; ++trial) {
    unsigned na = conductors[testgen::uniform(rng, 0, 7)];
    unsigned nb = conductors[testgen::uniform(rng, 0, 7)];
    unsigned nc = conductors[testgen::uniform(rng, 0, 7)];
    CycloNum a = testgen::cyclo(rng, na), b = testgen::cyclo(rng, nb),
             c = testgen::cyclo(rng, nc);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a - a).is_zero());
    if (!a.is_zero()) {
      REQUIRE(a * a.inverse() == CycloNum(1));
      REQUIRE((b / a) * a == b);
    }
    REQUIRE(a.conj().conj() == a);
    REQUIRE((a * b).conj() == a.conj() * b.conj());
    REQUIRE((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("CycloNum: multiplication against polynomial reduction",
          "[exactnum][property]") {
  std::mt19937_64 rng(7);
  for (unsigned n : {5u, 8u, 9u, 12u, 20u}) {
    auto  c = cyclotomic_polynomial(n);
    QPoly phi(std::vector<Rational>(c.begin(), c.end()));
    for (int trial = 0; trial < 20; ++trial) {
      QPoly p = testgen::poly(rng, 2 * n), q = testgen::poly(rng, 2 * n);
      QPoly r = QPoly::divmod(p * q, phi).second;
      REQUIRE(from_poly(n, p) * from_poly(n, q) == from_poly(n, r));
    }
  }
}

TEST_CASE("RatFunc: normal form", "[exactnum][quick]") {
  // (2 - 2t) / (2 - 4t + 2t^2) = -1 / (t - 1)
  RatFunc f(qpoly({2, -2}), qpoly({2, -4, 2}));
  REQUIRE(f.denominator() == qpoly({-1, 1}));
  REQUIRE(f.numerator() == qpoly({-1}));
  REQUIRE(f == RatFunc(qpoly({1}), qpoly({1, -1})));
  REQUIRE_THROWS_AS(RatFunc(qpoly({1}), QPoly()), DivisionByZero);
  RatFunc zero(QPoly(), qpoly({1, 1}));
  REQUIRE(zero.denominator() == qpoly({1}));
}

TEST_CASE("series_of_ratfunc: examples", "[exactnum][quick]") {
  using V = std::vector<Rational>;
  REQUIRE(series_of_ratfunc(RatFunc(qpoly({1}), qpoly({1, -1})), 3).coeffs()
          == V{1, 1, 1, 1});
  QPoly   d = qpoly({1, 0, -1});
  RatFunc f(qpoly({1, 0, 1}), d * d);
  REQUIRE(series_of_ratfunc(f, 4).coeffs() == V{1, 0, 3, 0, 5});
  REQUIRE(series_of_ratfunc(RatFunc(Rational(1)), 2).coeffs() == V{1, 0, 0});
  REQUIRE_THROWS_AS(series_of_ratfunc(RatFunc(qpoly({1}), qpoly({0, 1})), 2),
                    PreconditionError);
}

TEST_CASE("series_of_ratfunc: multiplicative", "[exactnum][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    QPoly df = testgen::poly(rng, 3), dg = testgen::poly(rng, 3);
    if (df.coeff(0).is_zero() || dg.coeff(0).is_zero()) {
      continue;
    }
    RatFunc     f(testgen::poly(rng, 4), df), g(testgen::poly(rng, 4), dg);
    std::size_t D = 7;
    REQUIRE(series_of_ratfunc(f * g, D)
            == series_of_ratfunc(f, D) * series_of_ratfunc(g, D));
    REQUIRE(series_of_ratfunc(f + g, D)
            == series_of_ratfunc(f, D) + series_of_ratfunc(g, D));
  }
}

TEST_CASE("QMatrix: rref, nullspace, solve", "[exactnum][quick]") {
  QMatrix m = QMatrix::from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  REQUIRE(rank(m) == 2);
  QMatrix k = nullspace(m);
  REQUIRE(k.cols() == 1);
  REQUIRE((m * k).is_zero());
  QMatrix l = left_nullspace(m);
  REQUIRE(l.rows() == 1);
  REQUIRE((l * m).is_zero());
  REQUIRE(determinant(m) == Rational(0));
  QMatrix a = QMatrix::from_ints({{2, 1}, {1, 1}});
  REQUIRE(determinant(a) == Rational(1));
  REQUIRE(*inverse(a) * a == QMatrix::identity(2));
  REQUIRE(!inverse(m));
  REQUIRE(!solve(m, QMatrix::from_ints({{1}, {0}, {0}})));
}
