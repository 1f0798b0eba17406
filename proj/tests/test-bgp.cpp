#include <array>   // for array
#include <random>  // for mt19937_64
#include <set>     // for set
#include <vector>  // for vector

#include "catch_amalgamated.hpp"

#include "mckay/bgp.hpp"
#include "mckay/error.hpp"
#include "mckay/heights.hpp"
#include "mckay/instance.hpp"

using namespace mckay;

namespace {
  QMatrix col(std::vector<std::int64_t> const& v) {
    QMatrix m(v.size(), 1);
    for (std::size_t r = 0; r < v.size(); ++r) {
      m(r, 0) = v[r];
    }
    return m;
  }

  QMatrix row(std::vector<std::int64_t> const& v) {
    return col(v).transpose();
  }

  std::vector<std::int64_t> as_ints(std::vector<std::size_t> const& d) {
    return {d.begin(), d.end()};
  }

  // Distinct orientations coming from canonical heights.
  std::vector<OrientedQuiver> orientations(Instance const& inst, unsigned w) {
    std::vector<OrientedQuiver>                  out;
    std::set<std::vector<std::array<std::int64_t, 3>>> seen;
    for (auto const& h : enumerate_heights(inst.graph, inst.parity, w)) {
      auto                                   q = h.quiver();
      std::vector<std::array<std::int64_t, 3>> key;
      for (auto const& a : q.arrows) {
        key.push_back({static_cast<std::int64_t>(a.from),
                       static_cast<std::int64_t>(a.to), a.multiplicity});
      }
      if (seen.insert(key).second) {
        out.push_back(q);
      }
    }
    return out;
  }

  // Independent description of the reflected data at a sink: the new maps
  // out of i land in the kernel and are jointly injective.
  void check_kernel(QuiverRep const& v, QuiverRep const& r, std::size_t i) {
    QMatrix stacked = r.outgoing_map(i);
    REQUIRE(rank(stacked) == r.dims()[i]);
    REQUIRE((v.incoming_map(i) * stacked).is_zero());
    REQUIRE(r.dims()[i] == stacked.rows() - rank(v.incoming_map(i)));
  }

  void check_cokernel(QuiverRep const& v, QuiverRep const& r, std::size_t i) {
    QMatrix joined = r.incoming_map(i);
    REQUIRE(rank(joined) == r.dims()[i]);
    REQUIRE((joined * v.outgoing_map(i)).is_zero());
    REQUIRE(r.dims()[i] == joined.cols() - rank(v.outgoing_map(i)));
  }
}  // namespace

TEST_CASE("reflect_plus: examples", "[bgp][quick]") {
  // two arrows 1 => 0
  OrientedQuiver q{2, {{1, 0, 2}}};

  auto v = QuiverRep::zero_maps(q, {2, 1});
  v.arrows()[0].matrix = col({1, 0});
  v.arrows()[1].matrix = col({0, 1});
  auto r = reflect_plus(v, 0);
  REQUIRE(r.dims() == std::vector<std::size_t>{0, 1});
  REQUIRE(as_ints(r.dims()) == dim_vector_reflect({2, 1}, 0, {{0, 2}, {2, 0}}));
  REQUIRE(r.is_source(0));

  auto simple = QuiverRep::zero_maps(q, {1, 0});
  REQUIRE(reflect_plus(simple, 0).dims() == std::vector<std::size_t>{0, 0});
  REQUIRE(!reflectable(simple, 0));

  for (std::int64_t lambda : {1, -2, 3}) {
    auto w = QuiverRep::zero_maps(q, {1, 1});
    w.arrows()[0].matrix = col({1});
    w.arrows()[1].matrix = col({lambda});
    auto rw = reflect_plus(w, 0);
    REQUIRE(rw.dims() == std::vector<std::size_t>{1, 1});
    REQUIRE(rw.arrows()[0].from == 0);
    REQUIRE(rw.arrows()[0].matrix == col({-lambda}));
    REQUIRE(rw.arrows()[1].matrix == col({1}));
    check_kernel(w, rw, 0);
  }

  REQUIRE_THROWS_AS(reflect_plus(v, 1), PreconditionError);
}

TEST_CASE("reflect_minus: examples", "[bgp][quick]") {
  OrientedQuiver q{2, {{1, 0, 2}}};
  auto           simple = QuiverRep::zero_maps(q, {0, 1});
  REQUIRE(reflect_minus(simple, 1).dims() == std::vector<std::size_t>{0, 0});

  auto v = QuiverRep::zero_maps(q, {1, 1});
  v.arrows()[0].matrix = row({1});
  v.arrows()[1].matrix = row({2});
  REQUIRE(reflectable(v, 1));
  auto r = reflect_minus(v, 1);
  REQUIRE(r.dims() == std::vector<std::size_t>{1, 1});
  REQUIRE(r.is_sink(1));
  check_cokernel(v, r, 1);

  REQUIRE_THROWS_AS(reflect_minus(v, 0), PreconditionError);
}

TEST_CASE("dim_vector_reflect", "[bgp][quick]") {
  IntMatrix a1{{0, 2}, {2, 0}};
  REQUIRE(dim_vector_reflect({2, 1}, 0, a1) == std::vector<std::int64_t>{0, 1});
  for (auto s : {"cyclic:4", "bd:2", "2T", "2I"}) {
    auto inst = make_instance(s);
    auto const& n = inst->graph.n;
    for (std::size_t i = 0; i < n.size(); ++i) {
      REQUIRE(dim_vector_reflect(inst->graph.delta(), i, n) == inst->graph.delta());
      std::vector<std::int64_t> d(n.size());
      for (std::size_t k = 0; k < d.size(); ++k) {
        d[k] = static_cast<std::int64_t>(3 * k + i) % 5 - 2;
      }
      REQUIRE(dim_vector_reflect(dim_vector_reflect(d, i, n), i, n) == d);
    }
  }
}

TEST_CASE("QuiverRep: validation and JSON", "[bgp][quick]") {
  REQUIRE_THROWS_AS(QuiverRep({1, 1}, {{0, 1, 0, QMatrix(2, 1)}}), PreconditionError);
  REQUIRE_THROWS_AS(QuiverRep({1, 1}, {{0, 0, 0, QMatrix(1, 1)}}), PreconditionError);
  REQUIRE_THROWS_AS(QuiverRep({1, 1}, {{0, 1, 1, QMatrix(1, 1)}}), PreconditionError);

  std::mt19937_64 rng(3);
  OrientedQuiver  q{3, {{1, 0, 2}, {1, 2, 1}}};
  for (int k = 0; k < 20; ++k) {
    auto v = random_rep(q, rng, 3);
    REQUIRE(quiver_rep_from_json(json::parse(to_json(v).dump())) == v);
  }
  auto parsed = quiver_rep_from_json(json::parse(
      R"({"dims": [2, 1], "arrows": [{"from": 1, "to": 0, "matrix": [[1], ["1/2"]]}]})"));
  REQUIRE(parsed.arrows()[0].matrix(1, 0) == Rational(1, 2));
  REQUIRE_THROWS_AS(quiver_rep_from_json(json::parse(R"({"dims": [1]})")),
                    PreconditionError);
  REQUIRE_THROWS_AS(
      quiver_rep_from_json(json::parse(
          R"({"dims": [2, 1], "arrows": [{"from": 1, "to": 0, "matrix": [[1, 2]]}]})")),
      PreconditionError);
}

TEST_CASE("find_isomorphism", "[bgp][quick]") {
  OrientedQuiver q{2, {{1, 0, 2}}};
  auto           v = QuiverRep::zero_maps(q, {1, 1});
  v.arrows()[0].matrix = col({1});
  v.arrows()[1].matrix = col({2});
  auto w = v;
  w.arrows()[0].matrix = col({3});
  w.arrows()[1].matrix = col({6});
  auto t = find_isomorphism(v, w);
  REQUIRE(t);
  // different ratio: not isomorphic, and the intertwiner space is {T0 = T1 = 0}
  auto u = v;
  u.arrows()[1].matrix = col({5});
  REQUIRE(!find_isomorphism(v, u));
  REQUIRE(!find_isomorphism(v, QuiverRep::zero_maps(q, {1, 2})));
}

TEST_CASE("BGP: random representations", "[bgp][property]") {
  for (auto s : {"cyclic:4", "bd:2", "2T"}) {
    auto inst = make_instance(s);
    std::mt19937_64 rng(17);
    for (auto const& q : orientations(*inst, 2)) {
      std::vector<std::size_t> flippable;
      for (std::size_t i = 0; i < q.num_vertices; ++i) {
        if (q.is_sink(i) || q.is_source(i)) {
          flippable.push_back(i);
        }
      }
      REQUIRE(!flippable.empty());
      for (int trial = 0; trial < 30; ++trial) {
        std::size_t i = flippable[trial % flippable.size()];
        auto        v = random_rep(q, rng, 4);
        CAPTURE(s, i, to_json(v).dump());
        if (!reflectable(v, i)) {
          continue;
        }
        auto d = as_ints(v.dims());
        if (q.is_sink(i)) {
          auto r = reflect_plus(v, i);
          check_kernel(v, r, i);
          REQUIRE(as_ints(r.dims()) == dim_vector_reflect(d, i, inst->graph.n));
          auto back = reflect_minus(r, i);
          check_cokernel(r, back, i);
          REQUIRE(find_isomorphism(v, back));
        } else {
          auto r = reflect_minus(v, i);
          check_cokernel(v, r, i);
          REQUIRE(as_ints(r.dims()) == dim_vector_reflect(d, i, inst->graph.n));
          auto back = reflect_plus(r, i);
          REQUIRE(find_isomorphism(v, back));
        }
      }
    }
  }
}

TEST_CASE("BGP: additive on direct sums", "[bgp][property]") {
  auto            inst = make_instance("bd:2");
  std::mt19937_64 rng(29);
  for (auto const& q : orientations(*inst, 2)) {
    for (std::size_t i = 0; i < q.num_vertices; ++i) {
      if (!q.is_sink(i) && !q.is_source(i)) {
        continue;
      }
      auto a   = random_rep(q, rng, 2);
      auto b   = random_rep(q, rng, 2);
      auto fn  = q.is_sink(i) ? reflect_plus : reflect_minus;
      auto lhs = fn(direct_sum(a, b), i);
      auto rhs = direct_sum(fn(a, i), fn(b, i));
      REQUIRE(lhs.dims() == rhs.dims());
      REQUIRE(find_isomorphism(lhs, rhs));
    }
  }
}
