#include "mckay/preproj.hpp"

#include <algorithm>  // for sort, lower_bound
#include <map>        // for map
#include <utility>    // for pair

#include "mckay/error.hpp"

namespace mckay {

  ////////////////////////////////////////////////////////////////////////
  // QuadraticPresentation
  ////////////////////////////////////////////////////////////////////////

  QuadraticPresentation::QuadraticPresentation(std::size_t              num_vertices,
                                               std::vector<QuiverArrow> arrows,
                                               std::vector<Relation>    relations)
      : _num_vertices(num_vertices),
        _arrows(std::move(arrows)),
        _relations(std::move(relations)) {
    for (auto const& a : _arrows) {
      if (a.from >= _num_vertices || a.to >= _num_vertices) {
        throw PreconditionError("arrow " + a.name + " leaves the vertex set");
      }
    }
    for (std::size_t a = 0; a < _arrows.size(); ++a) {
      for (std::size_t b = 0; b < _arrows.size(); ++b) {
        if (_arrows[a].to == _arrows[b].from) {
          _two_paths.push_back({a, b});
        }
      }
    }
    for (std::size_t r = 0; r < _relations.size(); ++r) {
      auto const& rel = _relations[r];
      if (rel.empty()) {
        throw PreconditionError("relation " + std::to_string(r) + " is empty");
      }
      for (auto const& term : rel) {
        auto [a, b] = term.path;
        if (a >= _arrows.size() || b >= _arrows.size()) {
          throw PreconditionError("relation " + std::to_string(r)
                                  + " uses an unknown arrow");
        }
        if (_arrows[a].to != _arrows[b].from) {
          throw PreconditionError("relation " + std::to_string(r) + " has the "
                                  + "non-composable term " + _arrows[a].name
                                  + " then " + _arrows[b].name);
        }
        auto [a0, b0] = rel.front().path;
        if (_arrows[a].from != _arrows[a0].from || _arrows[b].to != _arrows[b0].to) {
          throw PreconditionError("relation " + std::to_string(r)
                                  + " mixes paths with different endpoints");
        }
      }
    }
    if (rank(relation_matrix()) != _relations.size()) {
      throw PreconditionError("relations are linearly dependent");
    }
  }

  std::size_t QuadraticPresentation::two_path_index(Path2 const& p) const {
    auto it = std::lower_bound(_two_paths.begin(), _two_paths.end(), p);
    if (it == _two_paths.end() || *it != p) {
      throw PreconditionError("not a composable two-path");
    }
    return static_cast<std::size_t>(it - _two_paths.begin());
  }

  QMatrix QuadraticPresentation::relation_matrix() const {
    QMatrix m(_relations.size(), _two_paths.size());
    for (std::size_t r = 0; r < _relations.size(); ++r) {
      for (auto const& term : _relations[r]) {
        m(r, two_path_index(term.path)) += term.coeff;
      }
    }
    return m;
  }

  bool same_presentation(QuadraticPresentation const& a,
                         QuadraticPresentation const& b) {
    if (a.num_vertices() != b.num_vertices() || a.arrows().size() != b.arrows().size()) {
      return false;
    }
    for (std::size_t k = 0; k < a.arrows().size(); ++k) {
      if (a.arrows()[k].from != b.arrows()[k].from
          || a.arrows()[k].to != b.arrows()[k].to) {
        return false;
      }
    }
    return a.relations().size() == b.relations().size()
           && same_row_space(a.relation_matrix(), b.relation_matrix());
  }

  ////////////////////////////////////////////////////////////////////////
  // Preprojective and Ext presentations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct EdgeCopy {
      std::size_t u, v;  // u > v, positive arrow u -> v
    };

    std::vector<EdgeCopy> edge_copies(IntMatrix const& n) {
      std::vector<EdgeCopy> edges;
      for (std::size_t u = 0; u < n.size(); ++u) {
        if (n[u].size() != n.size()) {
          throw PreconditionError("adjacency matrix is not square");
        }
        if (n[u][u] != 0) {
          throw PreconditionError("McKay graph has a loop at vertex "
                                  + std::to_string(u));
        }
        for (std::size_t v = 0; v < u; ++v) {
          if (n[u][v] != n[v][u] || n[u][v] < 0) {
            throw PreconditionError("adjacency matrix is not symmetric");
          }
          for (std::int64_t c = 0; c < n[u][v]; ++c) {
            edges.push_back({u, v});
          }
        }
      }
      return edges;
    }

    std::string arrow_label(std::size_t from, std::size_t to, std::size_t copy,
                            std::int64_t mult) {
      std::string s = "(" + std::to_string(from) + "|" + std::to_string(to) + ")";
      return mult > 1 ? s + "#" + std::to_string(copy) : s;
    }

    // +1 for (abar then a), -1 for (b then bbar), 0 otherwise.
    int loop_trace(std::size_t x, std::size_t y) {
      if (x / 2 != y / 2 || x == y) {
        return 0;
      }
      return x % 2 == 1 ? 1 : -1;
    }
  }  // namespace

  std::vector<QuiverArrow> double_quiver(IntMatrix const& n) {
    std::vector<QuiverArrow>                               arrows;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> copy;
    for (auto const& e : edge_copies(n)) {
      std::size_t c = copy[{e.u, e.v}]++;
      arrows.push_back({e.u, e.v, arrow_label(e.u, e.v, c, n[e.u][e.v])});
      arrows.push_back({e.v, e.u, arrow_label(e.v, e.u, c, n[e.u][e.v])});
    }
    return arrows;
  }

  QuadraticPresentation preprojective_presentation(IntMatrix const& n) {
    auto                  arrows = double_quiver(n);
    std::vector<Relation> rels(n.size());
    for (std::size_t e = 0; 2 * e < arrows.size(); ++e) {
      std::size_t a = 2 * e, abar = 2 * e + 1;
      // positive arrow a: u -> v; into v, out of u
      rels[arrows[a].to].push_back({Rational(1), {abar, a}});
      rels[arrows[a].from].push_back({Rational(-1), {a, abar}});
    }
    std::vector<Relation> nonempty;
    for (auto& r : rels) {
      if (!r.empty()) {
        nonempty.push_back(std::move(r));
      }
    }
    return QuadraticPresentation(n.size(), std::move(arrows), std::move(nonempty));
  }

  QuadraticPresentation ext_algebra_presentation(IntMatrix const& n) {
    auto                  arrows = double_quiver(n);
    std::vector<Relation> rels;
    // two-paths grouped by start vertex, in lexicographic order
    for (std::size_t i = 0; i < n.size(); ++i) {
      std::vector<std::pair<Path2, int>> traced;
      for (std::size_t x = 0; x < arrows.size(); ++x) {
        if (arrows[x].from != i) {
          continue;
        }
        for (std::size_t y = 0; y < arrows.size(); ++y) {
          if (arrows[y].from != arrows[x].to) {
            continue;
          }
          if (arrows[y].to != i) {
            rels.push_back({{Rational(1), {x, y}}});
            continue;
          }
          int t = loop_trace(x, y);
          if (t == 0) {
            rels.push_back({{Rational(1), {x, y}}});
          } else {
            traced.push_back({{x, y}, t});
          }
        }
      }
      for (std::size_t m = 1; m < traced.size(); ++m) {
        rels.push_back({{Rational(traced[0].second), traced[0].first},
                        {Rational(-traced[m].second), traced[m].first}});
      }
    }
    return QuadraticPresentation(n.size(), std::move(arrows), std::move(rels));
  }

  QuadraticPresentation quadratic_dual(QuadraticPresentation const& p) {
    auto const& arrows = p.arrows();
    auto const& paths  = p.two_paths();
    QMatrix     rm     = p.relation_matrix();
    using Block        = std::pair<std::size_t, std::size_t>;
    auto block_of      = [&](Path2 const& q) {
      return Block{arrows[q[0]].from, arrows[q[1]].to};
    };

    std::map<Block, std::vector<std::size_t>> cols;
    for (std::size_t c = 0; c < paths.size(); ++c) {
      cols[block_of(paths[c])].push_back(c);
    }
    std::map<Block, std::vector<std::size_t>> rows;
    for (std::size_t r = 0; r < p.relations().size(); ++r) {
      rows[block_of(p.relations()[r].front().path)].push_back(r);
    }

    std::vector<Relation> dual;
    for (auto const& [block, cs] : cols) {
      auto const& rs = rows[block];
      QMatrix     ann;
      if (rs.empty()) {
        ann = QMatrix::identity(cs.size());
      } else {
        QMatrix sub(rs.size(), cs.size());
        for (std::size_t r = 0; r < rs.size(); ++r) {
          for (std::size_t c = 0; c < cs.size(); ++c) {
            sub(r, c) = rm(rs[r], cs[c]);
          }
        }
        ann = nullspace(sub);
      }
      for (std::size_t k = 0; k < ann.cols(); ++k) {
        Relation rel;
        for (std::size_t c = 0; c < cs.size(); ++c) {
          if (!ann(c, k).is_zero()) {
            rel.push_back({ann(c, k), paths[cs[c]]});
          }
        }
        dual.push_back(std::move(rel));
      }
    }
    return QuadraticPresentation(p.num_vertices(), arrows, std::move(dual));
  }

  ////////////////////////////////////////////////////////////////////////
  // Hilbert series
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Path = std::vector<std::size_t>;

    struct BlockData {
      std::vector<Path>            paths;
      std::map<Path, std::size_t>  index;
      QMatrix                      ideal;  // rows: basis of I_d in this block
    };

    using Level = std::vector<std::vector<BlockData>>;  // [start][end]
  }  // namespace

  GradedDims truncated_hilbert(QuadraticPresentation const& p,
                               std::size_t                  max_degree,
                               std::size_t                  path_cap) {
    std::size_t const nv     = p.num_vertices();
    auto const&       arrows = p.arrows();

    // relations grouped by (start, end)
    std::vector<std::vector<std::vector<Relation const*>>> rels(
        nv, std::vector<std::vector<Relation const*>>(nv));
    for (auto const& r : p.relations()) {
      rels[arrows[r.front().path[0]].from][arrows[r.front().path[1]].to].push_back(&r);
    }

    GradedDims        out;
    std::vector<Level> levels;
    for (std::size_t d = 0; d <= max_degree; ++d) {
      Level       level(nv, std::vector<BlockData>(nv));
      std::size_t total = 0;
      if (d == 0) {
        for (std::size_t i = 0; i < nv; ++i) {
          level[i][i].paths.push_back({});
        }
      } else {
        for (std::size_t i = 0; i < nv; ++i) {
          for (std::size_t k = 0; k < nv; ++k) {
            for (auto const& q : levels[d - 1][i][k].paths) {
              for (std::size_t a = 0; a < arrows.size(); ++a) {
                if (arrows[a].from == k) {
                  Path ext = q;
                  ext.push_back(a);
                  level[i][arrows[a].to].paths.push_back(std::move(ext));
                }
              }
            }
          }
        }
      }
      for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = 0; j < nv; ++j) {
          auto& b = level[i][j];
          std::sort(b.paths.begin(), b.paths.end());
          for (std::size_t c = 0; c < b.paths.size(); ++c) {
            b.index.emplace(b.paths[c], c);
          }
          total += b.paths.size();
        }
      }
      if (total > path_cap) {
        throw ResourceError("degree " + std::to_string(d) + " has " + std::to_string(total)
                            + " paths, over the cap of " + std::to_string(path_cap));
      }

      IntMatrix dims(nv, std::vector<std::int64_t>(nv, 0));
      for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = 0; j < nv; ++j) {
          auto&                              b = level[i][j];
          std::vector<std::vector<Rational>> gens;
          if (d >= 2) {
            // I_{d-1} followed by an arrow
            for (std::size_t k = 0; k < nv; ++k) {
              auto const& prev = levels[d - 1][i][k];
              for (std::size_t a = 0; a < arrows.size(); ++a) {
                if (arrows[a].from != k || arrows[a].to != j) {
                  continue;
                }
                for (std::size_t r = 0; r < prev.ideal.rows(); ++r) {
                  std::vector<Rational> v(b.paths.size());
                  for (std::size_t c = 0; c < prev.paths.size(); ++c) {
                    if (!prev.ideal(r, c).is_zero()) {
                      Path ext = prev.paths[c];
                      ext.push_back(a);
                      v[b.index.at(ext)] += prev.ideal(r, c);
                    }
                  }
                  gens.push_back(std::move(v));
                }
              }
            }
            // a path of length d - 2 followed by a relation
            for (std::size_t k = 0; k < nv; ++k) {
              for (auto const& q : levels[d - 2][i][k].paths) {
                for (Relation const* rel : rels[k][j]) {
                  std::vector<Rational> v(b.paths.size());
                  for (auto const& term : *rel) {
                    Path ext = q;
                    ext.push_back(term.path[0]);
                    ext.push_back(term.path[1]);
                    v[b.index.at(ext)] += term.coeff;
                  }
                  gens.push_back(std::move(v));
                }
              }
            }
          }
          QMatrix g(gens.size(), b.paths.size());
          for (std::size_t r = 0; r < gens.size(); ++r) {
            for (std::size_t c = 0; c < b.paths.size(); ++c) {
              g(r, c) = gens[r][c];
            }
          }
          b.ideal    = gens.empty() ? QMatrix(0, b.paths.size()) : row_space_basis(g);
          dims[i][j] = static_cast<std::int64_t>(b.paths.size() - b.ideal.rows());
        }
      }
      out.dims.push_back(std::move(dims));
      levels.push_back(std::move(level));
      if (d >= 2) {
        // only the previous two levels are needed
        levels[d - 2] = Level();
      }
    }
    return out;
  }

  PresentationKoszulResult koszul_numerical_check(GradedDims const& a,
                                                  GradedDims const& b) {
    PresentationKoszulResult res;
    std::size_t              top = std::min(a.max_degree(), b.max_degree());
    std::size_t              nv  = a.dims.empty() ? 0 : a.dims[0].size();
    for (std::size_t d = 0; d <= top; ++d) {
      for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = 0; j < nv; ++j) {
          std::int64_t s = 0;
          for (std::size_t x = 0; x <= d; ++x) {
            std::int64_t sign = (d - x) % 2 == 0 ? 1 : -1;
            for (std::size_t k = 0; k < nv; ++k) {
              s += sign * a(x, i, k) * b(d - x, k, j);
            }
          }
          std::int64_t want = d == 0 && i == j ? 1 : 0;
          if (s != want) {
            res.pass    = false;
            res.witness = "degree " + std::to_string(d) + ", entry ("
                          + std::to_string(i) + ", " + std::to_string(j)
                          + "): " + std::to_string(s) + " instead of "
                          + std::to_string(want);
            return res;
          }
        }
      }
    }
    return res;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  json to_json(QuadraticPresentation const& p) {
    json arrows = json::array();
    for (auto const& a : p.arrows()) {
      arrows.push_back(json{{"from", a.from}, {"to", a.to}, {"name", a.name}});
    }
    json rels = json::array();
    for (auto const& r : p.relations()) {
      json terms = json::array();
      for (auto const& t : r) {
        terms.push_back(json::array({to_json(t.coeff), json::array({t.path[0], t.path[1]})}));
      }
      rels.push_back(std::move(terms));
    }
    return json{{"vertices", p.num_vertices()},
                {"arrows", std::move(arrows)},
                {"relations", std::move(rels)}};
  }

  QuadraticPresentation presentation_from_json(json const& j) {
    try {
      std::vector<QuiverArrow> arrows;
      for (auto const& a : j.at("arrows")) {
        arrows.push_back({a.at("from").get<std::size_t>(), a.at("to").get<std::size_t>(),
                          a.value("name", std::string())});
      }
      std::vector<Relation> rels;
      for (auto const& r : j.at("relations")) {
        Relation rel;
        for (auto const& t : r) {
          auto path = t.at(1).get<std::vector<std::size_t>>();
          if (path.size() != 2) {
            throw PreconditionError("relation terms must be two-paths");
          }
          rel.push_back({rational_from_json(t.at(0)), {path[0], path[1]}});
        }
        rels.push_back(std::move(rel));
      }
      return QuadraticPresentation(j.at("vertices").get<std::size_t>(),
                                   std::move(arrows), std::move(rels));
    } catch (nlohmann::json::exception const& e) {
      throw PreconditionError(std::string("malformed presentation: ") + e.what());
    }
  }

  json to_json(GradedDims const& g) {
    json out = json::array();
    for (auto const& m : g.dims) {
      out.push_back(m);
    }
    return out;
  }

}  // namespace mckay
