#include "mckay/checks.hpp"

#include <random>  // for mt19937_64
#include <string>  // for string, to_string

#include "mckay/bgp.hpp"
#include "mckay/error.hpp"
#include "mckay/ktheory.hpp"
#include "mckay/molien.hpp"
#include "mckay/preproj.hpp"

namespace mckay {

  namespace {
    std::int64_t as_i64(std::size_t x) {
      return static_cast<std::int64_t>(x);
    }
  }  // namespace

  AffineType expected_affine_type(GroupDescriptor const& d) {
    switch (d.family) {
      case Family::cyclic:
        return {AdeFamily::A, d.n - 1};
      case Family::binary_dihedral:
        if (d.n == 1) {
          return {AdeFamily::A, 3};
        }
        return {AdeFamily::D, d.n + 2};
      case Family::binary_tetrahedral:
        return {AdeFamily::E, 6};
      case Family::binary_octahedral:
        return {AdeFamily::E, 7};
      case Family::binary_icosahedral:
        return {AdeFamily::E, 8};
    }
    throw InternalError("unknown family");
  }

  std::vector<OrientedQuiver>
  distinct_orientations(std::vector<HeightFunction> const& hs) {
    std::vector<OrientedQuiver> out;
    for (auto const& h : hs) {
      auto q    = h.quiver();
      bool seen = false;
      for (auto const& p : out) {
        seen = seen || p.arrows == q.arrows;
      }
      if (!seen) {
        out.push_back(std::move(q));
      }
    }
    return out;
  }

  Check group_order_check(Instance const& inst) {
    auto const& g = inst.group;
    Check       c{"group-order", "the generated matrix group has the expected order", true, {}};
    c.pass    = g.order() == g.descriptor().expected_order();
    c.witness = {{"order", g.order()}, {"expected", g.descriptor().expected_order()}};
    return c;
  }

  Check classification_check(Instance const& inst) {
    Check c{"ade-classification",
            "the McKay graph is an affine Dynkin diagram whose imaginary root is "
            "the vector of irrep dimensions",
            true,
            {}};
    auto const& cl       = inst.graph.classification;
    auto        expected = expected_affine_type(inst.group.descriptor());
    std::string got      = cl.type ? cl.type->label() : "none";
    c.pass    = cl.type && *cl.type == expected && cl.delta == inst.table.dims;
    c.witness = {{"type", got},
                 {"expected", expected.label()},
                 {"delta", cl.delta},
                 {"dims", inst.table.dims}};
    return c;
  }

  Check chartab_check(Instance const& inst, DixonOptions const& opts) {
    Check c{"character-table",
            "both orthogonality relations and sum of squared degrees equal |G|; "
            "a second prime gives the same table",
            true,
            {}};
    auto const& t = inst.table;
    if (auto bad = verify_character_table(t, inst.group)) {
      c.pass    = false;
      c.witness = {{"violation", *bad}};
      return c;
    }
    std::int64_t sum = 0;
    for (auto d : t.dims) {
      sum += d * d;
    }
    if (sum != as_i64(inst.group.order())) {
      c.pass    = false;
      c.witness = {{"sum_of_squares", sum}, {"order", inst.group.order()}};
      return c;
    }
    DixonOptions other = opts;
    other.prime_skip += 1;
    auto again = dixon_character_table(inst.group, other);
    c.pass     = again == t;
    c.witness  = {{"primes", {t.prime, again.prime}},
                  {"irreps", t.num_irreps()},
                  {"sum_of_squares", sum}};
    if (!c.pass) {
      c.witness["violation"] = "tables differ between primes";
    }
    return c;
  }

  Check molien_koszul_check(Instance const& inst) {
    Check c{"koszul-molien",
            "S(t) E(-t) = Id exactly, S the Molien matrix of symmetric powers and "
            "E that of exterior powers",
            true,
            {}};
    auto r = koszul_check(molien_matrices(inst.table));
    c.pass = r.pass;
    if (!r.pass) {
      c.witness = {{"row", r.row}, {"col", r.col}, {"entry", r.entry.to_string()}};
    }
    return c;
  }

  Check molien_series_check(Instance const& inst, std::size_t max_degree) {
    Check c{"molien-series",
            "Taylor coefficients of the Molien matrix are the invariant dimensions "
            "dim Hom(W_q, S^m V (x) W_p)",
            true,
            {}};
    auto        m = molien_matrices(inst.table);
    std::size_t r = m.size();
    for (std::size_t p = 0; p < r && c.pass; ++p) {
      for (std::size_t q = 0; q < r && c.pass; ++q) {
        auto s = series_of_ratfunc(m.S[p][q], max_degree);
        for (std::size_t d = 0; d <= max_degree; ++d) {
          auto want = inst.homs(q, p, as_i64(d));
          if (s[d] != Rational(want)) {
            c.pass    = false;
            c.witness = {{"p", p}, {"q", q}, {"degree", d},
                         {"series", s[d].to_string()}, {"hom_dim", want}};
            break;
          }
        }
      }
    }
    return c;
  }

  Check flip_connectivity_check(Instance const& inst, std::vector<HeightFunction> const& hs) {
    Check c{"flip-connectivity",
            "any two height functions are joined by sink and source flips",
            true,
            {}};
    HeightFunction base(inst.graph.n, inst.require_parity(),
                        std::vector<std::int64_t>(inst.parity.begin(), inst.parity.end()));
    for (auto const& h : hs) {
      auto cur = base;
      for (auto [i, dir] : flip_sequence(base, h)) {
        bool ok = dir == FlipDirection::plus ? cur.is_sink(i) : cur.is_source(i);
        if (!ok) {
          c.pass    = false;
          c.witness = {{"height", h.to_string()}, {"vertex", i}};
          return c;
        }
        cur = flip(cur, i, dir);
      }
      if (!(cur == h)) {
        c.pass    = false;
        c.witness = {{"height", h.to_string()}, {"reached", cur.to_string()}};
        return c;
      }
    }
    c.witness = {{"heights", hs.size()}};
    return c;
  }

  Check kirillov_all_check(Instance const& inst, std::vector<HeightFunction> const& hs) {
    Check c{"kirillov",
            "paths from i to j in the height quiver number dim Hom(W_j, "
            "S^(h(i)-h(j)) V (x) W_i)",
            true,
            {}};
    std::size_t pairs = 0;
    for (auto const& h : hs) {
      auto r = kirillov_check(inst.homs, h);
      pairs += r.entries.size();
      for (auto const& e : r.entries) {
        if (!e.ok) {
          c.pass    = false;
          c.witness = {{"height", h.to_string()}, {"i", e.i}, {"j", e.j},
                       {"hom_dim", e.hom_dim}, {"paths", e.path_count}};
          return c;
        }
      }
    }
    c.witness = {{"heights", hs.size()}, {"pairs", pairs}};
    return c;
  }

  Check ext_all_check(Instance const& inst, std::vector<HeightFunction> const& hs,
                      std::int64_t d_max) {
    Check c{"ext-vanishing",
            "Ext^1 between the objects F_k = W_k (x) O(h(k)) vanishes",
            true,
            {}};
    std::size_t checked = 0;
    for (auto const& h : hs) {
      auto r = ext_vanishing_check(inst.homs, h, d_max);
      checked += r.checked;
      if (!r.pass) {
        auto const& w = r.witnesses.front();
        c.pass        = false;
        c.witness     = {{"height", h.to_string()}, {"k", w.k}, {"l", w.l}, {"d", w.d},
                         {"exponent", w.exponent}, {"dim", w.dim}};
        return c;
      }
    }
    c.witness = {{"heights", hs.size()}, {"checked", checked}, {"d_max", d_max}};
    return c;
  }

  Check euler_all_check(Instance const& inst, std::vector<HeightFunction> const& hs,
                        std::int64_t m_max) {
    Check c{"euler-sequence",
            "at a source i, 0 -> F_i(-2) -> sum of F_j over neighbours -> F_i -> 0 "
            "is exact on graded dimensions",
            true,
            {}};
    std::size_t checked = 0;
    for (auto const& h : hs) {
      auto r = euler_sequence_check(inst.homs, h, m_max);
      checked += r.checked;
      if (!r.pass) {
        c.pass    = false;
        c.witness = {{"height", h.to_string()}, {"violation", r.witness}};
        return c;
      }
    }
    c.witness = {{"heights", hs.size()}, {"checked", checked}};
    return c;
  }

  Check duality_check(IntMatrix const& n) {
    Check c{"quadratic-duality",
            "the quadratic dual is an involution and the dual of the Ext algebra "
            "is the preprojective algebra",
            true,
            {}};
    auto pre = preprojective_presentation(n);
    auto ext = ext_algebra_presentation(n);
    bool pp  = same_presentation(quadratic_dual(quadratic_dual(pre)), pre);
    bool ee  = same_presentation(quadratic_dual(quadratic_dual(ext)), ext);
    bool ep  = same_presentation(quadratic_dual(ext), pre);
    c.pass   = pp && ee && ep;
    c.witness = {{"double_dual_preprojective", pp},
                 {"double_dual_ext", ee},
                 {"dual_ext_is_preprojective", ep},
                 {"relations", {pre.relations().size(), ext.relations().size()}}};
    return c;
  }

  Check hilbert_match_check(Instance const& inst, std::size_t max_degree,
                            std::vector<HeightFunction> const& hs) {
    Check c{"hilbert-match",
            "the preprojective algebra has graded pieces dim Hom(W_i, S^d V (x) W_j), "
            "and so does B_h graded by height differences",
            true,
            {}};
    auto        h = truncated_hilbert(preprojective_presentation(inst.graph.n), max_degree);
    std::size_t r = inst.graph.num_vertices();
    for (std::size_t d = 0; d <= max_degree; ++d) {
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          auto want = inst.homs(i, j, as_i64(d));
          if (h(d, i, j) != want) {
            c.pass    = false;
            c.witness = {{"degree", d}, {"i", i}, {"j", j},
                         {"hilbert", h(d, i, j)}, {"hom_dim", want}};
            return c;
          }
        }
      }
    }
    for (auto const& ht : hs) {
      for (std::size_t d = 0; d <= max_degree; ++d) {
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) {
            auto got = graded_dim_Bh(inst.homs, inst.graph.n, inst.parity, ht.values(), i,
                                     j, as_i64(d));
            if (got != h(d, i, j)) {
              c.pass    = false;
              c.witness = {{"height", ht.to_string()}, {"degree", d}, {"i", i},
                           {"j", j}, {"graded_dim_Bh", got}, {"hilbert", h(d, i, j)}};
              return c;
            }
          }
        }
      }
    }
    c.witness = {{"max_degree", max_degree}, {"heights", hs.size()}};
    return c;
  }

  Check presentation_koszul_check(IntMatrix const& n, std::size_t max_degree) {
    Check c{"koszul-presentation",
            "Hilbert matrices of the preprojective algebra and its quadratic dual "
            "satisfy H_A(t) H_A!(-t) = Id",
            true,
            {}};
    auto pre = truncated_hilbert(preprojective_presentation(n), max_degree);
    auto ext = truncated_hilbert(ext_algebra_presentation(n), max_degree);
    auto r   = koszul_numerical_check(pre, ext);
    c.pass   = r.pass;
    if (!r.pass) {
      c.witness = {{"violation", r.witness}};
    }
    return c;
  }

  Check bgp_check(Instance const& inst, std::vector<HeightFunction> const& hs,
                  std::size_t reps, std::uint64_t seed) {
    Check c{"bgp-reflection",
            "reflection functors act on dimension vectors by simple reflections and "
            "reflecting back gives an isomorphic representation",
            true,
            {}};
    auto        qs       = distinct_orientations(hs);
    std::size_t attempts = 0, done = 0;
    for (std::size_t o = 0; o < qs.size(); ++o) {
      auto const&              q = qs[o];
      std::vector<std::size_t> flippable;
      for (std::size_t i = 0; i < q.num_vertices; ++i) {
        if (q.is_sink(i) || q.is_source(i)) {
          flippable.push_back(i);
        }
      }
      std::mt19937_64 rng(seed * 1000003 + o);
      std::size_t     found = 0, tries = 0;
      while (found < reps) {
        if (++tries > 200 * reps) {
          c.pass    = false;
          c.witness = {{"orientation", o}, {"violation", "too few reflectable samples"},
                       {"found", found}};
          return c;
        }
        std::size_t i = flippable[found % flippable.size()];
        auto        v = random_rep(q, rng, 3);
        if (!reflectable(v, i)) {
          continue;
        }
        ++found;
        bool sink = q.is_sink(i);
        auto r    = sink ? reflect_plus(v, i) : reflect_minus(v, i);
        auto back = sink ? reflect_minus(r, i) : reflect_plus(r, i);
        std::vector<std::int64_t> d(v.dims().begin(), v.dims().end());
        std::vector<std::int64_t> rd(r.dims().begin(), r.dims().end());
        auto                      want = dim_vector_reflect(d, i, inst.graph.n);
        if (rd != want) {
          c.pass    = false;
          c.witness = {{"orientation", o}, {"vertex", i}, {"rep", to_json(v)},
                       {"dims", rd}, {"expected", want}};
          return c;
        }
        if (!find_isomorphism(v, back, seed)) {
          c.pass    = false;
          c.witness = {{"orientation", o}, {"vertex", i}, {"rep", to_json(v)},
                       {"violation", "no isomorphism after reflecting back"}};
          return c;
        }
      }
      attempts += tries;
      done += found;
    }
    c.witness = {{"orientations", qs.size()}, {"representations", done},
                 {"samples", attempts}};
    return c;
  }

  Check weyl_check(Instance const& inst, std::uint64_t seed) {
    Check c{"weyl-group",
            "s_i^2 = 1, braid relations, infinite order on a double edge, delta "
            "fixed and the form preserved",
            true,
            {}};
    auto r    = weyl_checks(inst.graph.n, inst.graph.delta(), seed);
    c.pass    = r.pass;
    c.witness = json::object();
    for (auto const& w : r.checks) {
      c.witness[w.name] = w.pass ? json("pass") : json(w.witness);
    }
    return c;
  }

  std::vector<Check> lattice_checks(Instance const& inst,
                                    std::vector<HeightFunction> const& hs,
                                    std::uint64_t                      seed) {
    K0Lattice   k(inst.homs, inst.graph.n, inst.require_parity());
    auto const& n     = inst.graph.n;
    std::size_t r     = n.size();
    auto        cartn = cartan_matrix(n);

    Check cf{"cartan-form",
             "the symmetrized Euler form on the simple classes is the affine Cartan "
             "matrix",
             true,
             {}};
    Check db{"dual-bases", "chi(F_k, E_j) = delta_kj for every height", true, {}};
    Check tf{"twist-vs-flip",
             "the spherical twist at a sink or source acts on K_0 as the flip of "
             "simple classes",
             true,
             {}};
    std::size_t flips = 0;
    for (auto const& h : hs) {
      auto f = k.simple_family(h);
      for (std::size_t i = 0; i < r && cf.pass; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          auto v = k.cartan_form(f.classes[i], f.classes[j]);
          if (v != cartn[i][j]) {
            cf.pass    = false;
            cf.witness = {{"height", h.to_string()}, {"i", i}, {"j", j},
                          {"form", v}, {"cartan", cartn[i][j]}};
            break;
          }
        }
      }
      if (db.pass) {
        auto d = k.verify_dual_bases(h);
        if (!d.pass) {
          db.pass    = false;
          db.witness = {{"height", h.to_string()}, {"violation", d.witness}};
        }
      }
      for (std::size_t i = 0; i < r && tf.pass; ++i) {
        if (!h.is_sink(i) && !h.is_source(i)) {
          continue;
        }
        ++flips;
        auto t = k.verify_twist_vs_flip(h, i);
        if (!t.pass) {
          tf.pass = false;
          for (auto const& e : t.entries) {
            if (!e.ok) {
              tf.witness = {{"height", h.to_string()}, {"vertex", i}, {"j", e.j},
                            {"twisted", e.twisted.to_string()},
                            {"recursion", e.recursion.to_string()},
                            {"duality", e.duality.to_string()}};
              break;
            }
          }
        }
      }
    }
    if (cf.pass) {
      cf.witness = {{"heights", hs.size()}};
    }
    if (db.pass) {
      db.witness = {{"heights", hs.size()}};
    }
    if (tf.pass) {
      tf.witness = {{"flips", flips}};
    }
    return {cf, db, tf, weyl_check(inst, seed)};
  }

}  // namespace mckay
