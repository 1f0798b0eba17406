#include <array>    // for array
#include <complex>  // for complex
#include <set>      // for set
#include <vector>   // for vector

#include "catch_amalgamated.hpp"

#include "mckay/error.hpp"
#include "mckay/groups.hpp"

using namespace mckay;

namespace {
  // Gaussian integer 2x2 matrices, independent of CycloNum.
  using GI   = std::complex<long>;
  using GMat = std::array<GI, 4>;

  GMat mul(GMat const& x, GMat const& y) {
    return {x[0] * y[0] + x[1] * y[2],
            x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
  }

  bool operator<(GMat const& x, GMat const& y) {
    for (int k = 0; k < 4; ++k) {
      if (x[k].real() != y[k].real()) {
        return x[k].real() < y[k].real();
      }
      if (x[k].imag() != y[k].imag()) {
        return x[k].imag() < y[k].imag();
      }
    }
    return false;
  }

  struct GLess {
    bool operator()(GMat const& x, GMat const& y) const {
      return x < y;
    }
  };

  std::vector<GMat> closure_oracle(std::vector<GMat> const& gens) {
    GMat                    id{GI(1), GI(0), GI(0), GI(1)};
    std::set<GMat, GLess>   seen{id};
    std::vector<GMat>       todo{id};
    while (!todo.empty()) {
      GMat x = todo.back();
      todo.pop_back();
      for (auto const& g : gens) {
        GMat y = mul(x, g);
        if (seen.insert(y).second) {
          todo.push_back(y);
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  // Classes as sets of element indices, by conjugating with every element.
  std::set<std::set<std::size_t>> class_oracle(MatrixGroup const& g) {
    std::set<std::set<std::size_t>> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::set<std::size_t> c;
      for (std::size_t y = 0; y < g.order(); ++y) {
        c.insert(g.product(g.product(g.inverse(y), x), y));
      }
      out.insert(c);
    }
    return out;
  }

  std::vector<std::string> const all_descriptors = {
      "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
      "cyclic:7", "cyclic:12", "bd:1", "bd:2", "bd:3", "bd:4", "bd:6",
      "2T", "2O", "2I"};
}  // namespace

TEST_CASE("GroupDescriptor: parse and print", "[groups][quick]") {
  for (auto const& s : all_descriptors) {
    REQUIRE(GroupDescriptor::parse(s).to_string() == s);
  }
  REQUIRE(GroupDescriptor::parse("bd:3").expected_order() == 12);
  REQUIRE(GroupDescriptor::parse("cyclic:4").conductor() == 8);
  REQUIRE(GroupDescriptor::parse("cyclic:5").conductor() == 5);
  REQUIRE(GroupDescriptor::parse("2I").conductor() == 20);
  for (auto bad : {"cyclic:0", "cyclic:", "bd:x", "3T", "cyclic:2x", ""}) {
    REQUIRE_THROWS_AS(GroupDescriptor::parse(bad), PreconditionError);
  }
}

TEST_CASE("MatrixGroup: cyclic(4)", "[groups][quick]") {
  MatrixGroup g(GroupDescriptor::parse("cyclic:4"));
  REQUIRE(g.order() == 4);
  REQUIRE(g.num_classes() == 4);
  CycloNum i = CycloNum::zeta(4);
  for (std::size_t k = 0; k < 4; ++k) {
    // enumeration order is I, g, g^2, g^3
    CycloNum ik = CycloNum::zeta(4, static_cast<long>(k));
    REQUIRE(g.element(k)[0] == ik);
    REQUIRE(g.element(k)[3] == ik.conj());
    REQUIRE(g.element(k)[1].is_zero());
  }
  REQUIRE(g.contains_minus_identity());
  REQUIRE(*g.minus_identity() == 2);
  REQUIRE(g.exponent() == 4);
  (void) i;
}

TEST_CASE("MatrixGroup: quaternion group bd(2)", "[groups][quick]") {
  MatrixGroup g(GroupDescriptor::parse("bd:2"));
  GMat        a{GI(0, 1), GI(0), GI(0), GI(0, -1)};
  GMat        b{GI(0), GI(1), GI(-1), GI(0)};
  auto        oracle = closure_oracle({a, b});
  REQUIRE(oracle.size() == 8);
  REQUIRE(g.order() == oracle.size());
  std::size_t order4 = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    order4 += g.element_order(x) == 4;
  }
  REQUIRE(order4 == 6);
  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k < g.num_classes(); ++k) {
    sizes.push_back(g.class_size(k));
  }
  std::sort(sizes.begin(), sizes.end());
  REQUIRE(sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("MatrixGroup: orders and class counts", "[groups]") {
  struct Case {
    char const* desc;
    std::size_t order, classes;
    bool        minus;
  };
  // class counts are the frozen output of the brute force orbit oracle below
  Case const cases[] = {{"cyclic:1", 1, 1, false},
                        {"cyclic:2", 2, 2, true},
                        {"cyclic:3", 3, 3, false},
                        {"cyclic:6", 6, 6, true},
                        {"bd:1", 4, 4, true},
                        {"bd:2", 8, 5, true},
                        {"bd:3", 12, 6, true},
                        {"bd:6", 24, 9, true},
                        {"2T", 24, 7, true},
                        {"2O", 48, 8, true},
                        {"2I", 120, 9, true}};
  for (auto const& c : cases) {
    CAPTURE(c.desc);
    MatrixGroup g(GroupDescriptor::parse(c.desc));
    REQUIRE(g.order() == c.order);
    REQUIRE(g.num_classes() == c.classes);
    REQUIRE(g.contains_minus_identity() == c.minus);
  }
}

TEST_CASE("MatrixGroup: invariants", "[groups][property]") {
  for (auto const& s : all_descriptors) {
    CAPTURE(s);
    MatrixGroup g(GroupDescriptor::parse(s));
    REQUIRE(g.order() == g.descriptor().expected_order());
    REQUIRE(g.element(0) == identity_matrix());
    for (std::size_t x = 0; x < g.order(); ++x) {
      REQUIRE(det(g.element(x)) == CycloNum(1));
      REQUIRE(g.inverse(g.inverse(x)) == x);
      REQUIRE(g.product(x, g.inverse(x)) == 0);
      REQUIRE(g.order() % g.element_order(x) == 0);
    }
    REQUIRE(g.order() % g.exponent() == 0);
    // closure spot check: products of pairs stay in the group
    for (std::size_t x = 0; x < g.order(); x += 7) {
      for (std::size_t y = 0; y < g.order(); y += 5) {
        REQUIRE_NOTHROW(g.product(x, y));
      }
    }
    std::size_t total = 0;
    for (std::size_t k = 0; k < g.num_classes(); ++k) {
      total += g.class_size(k);
      REQUIRE(g.order() % g.class_size(k) == 0);
      REQUIRE(g.class_of(g.classes()[k].representative) == k);
    }
    REQUIRE(total == g.order());
    REQUIRE(g.classes()[0].members == std::vector<std::size_t>{0});
  }
}

TEST_CASE("MatrixGroup: classes match all-element conjugation",
          "[groups][property]") {
  for (auto const& s : {"bd:2", "bd:3", "2T", "2O"}) {
    CAPTURE(s);
    MatrixGroup                     g(GroupDescriptor::parse(s));
    std::set<std::set<std::size_t>> ours;
    for (auto const& c : g.classes()) {
      ours.insert(std::set<std::size_t>(c.members.begin(), c.members.end()));
    }
    REQUIRE(ours == class_oracle(g));
  }
}

TEST_CASE("MatrixGroup: power maps", "[groups][quick]") {
  MatrixGroup g(GroupDescriptor::parse("2T"));
  for (std::size_t k = 0; k < g.num_classes(); ++k) {
    std::size_t x = g.classes()[k].representative;
    REQUIRE(g.class_power(k, 0) == 0);
    REQUIRE(g.class_power(k, 1) == k);
    REQUIRE(g.class_power(k, 2) == g.class_of(g.product(x, x)));
    REQUIRE(g.class_power(k, -1) == g.inverse_class(k));
  }
}
