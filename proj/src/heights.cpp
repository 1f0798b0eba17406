#include "mckay/heights.hpp"

#include <algorithm>  // for sort, none_of
#include <charconv>   // for from_chars
#include <deque>      // for deque

#include "mckay/error.hpp"

namespace mckay {

  ////////////////////////////////////////////////////////////////////////
  // OrientedQuiver
  ////////////////////////////////////////////////////////////////////////

  bool OrientedQuiver::is_sink(std::size_t i) const {
    return std::none_of(arrows.begin(), arrows.end(),
                        [i](Arrow const& a) { return a.from == i; });
  }

  bool OrientedQuiver::is_source(std::size_t i) const {
    return std::none_of(arrows.begin(), arrows.end(),
                        [i](Arrow const& a) { return a.to == i; });
  }

  std::vector<std::size_t> OrientedQuiver::sinks() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < num_vertices; ++i) {
      if (is_sink(i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<std::size_t> OrientedQuiver::sources() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < num_vertices; ++i) {
      if (is_source(i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // HeightFunction
  ////////////////////////////////////////////////////////////////////////

  HeightFunction::HeightFunction(IntMatrix                 n,
                                 std::vector<int>          parity,
                                 std::vector<std::int64_t> h)
      : _n(std::move(n)), _parity(std::move(parity)), _h(std::move(h)) {
    check_height_function(_n, _parity, _h);
  }

  bool HeightFunction::is_sink(std::size_t i) const {
    for (std::size_t j = 0; j < _h.size(); ++j) {
      if (_n[i][j] > 0 && _h[j] < _h[i]) {
        return false;
      }
    }
    return true;
  }

  bool HeightFunction::is_source(std::size_t i) const {
    for (std::size_t j = 0; j < _h.size(); ++j) {
      if (_n[i][j] > 0 && _h[j] > _h[i]) {
        return false;
      }
    }
    return true;
  }

  OrientedQuiver HeightFunction::quiver() const {
    OrientedQuiver q;
    q.num_vertices = _h.size();
    for (std::size_t i = 0; i < _h.size(); ++i) {
      for (std::size_t j = 0; j < _h.size(); ++j) {
        if (_n[i][j] > 0 && _h[i] > _h[j]) {
          q.arrows.push_back({i, j, _n[i][j]});
        }
      }
    }
    return q;
  }

  std::string HeightFunction::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < _h.size(); ++i) {
      s += (i ? "," : "") + std::to_string(_h[i]);
    }
    return s;
  }

  std::vector<std::int64_t> parse_height_literal(std::string_view text) {
    std::vector<std::int64_t> h;
    while (true) {
      auto         comma = text.find(',');
      auto         part  = text.substr(0, comma);
      std::int64_t v     = 0;
      auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (part.empty() || ec != std::errc() || p != part.data() + part.size()) {
        throw PreconditionError("bad height literal '" + std::string(text)
                                + "': expected comma separated integers");
      }
      h.push_back(v);
      if (comma == std::string_view::npos) {
        break;
      }
      text.remove_prefix(comma + 1);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration and flips
  ////////////////////////////////////////////////////////////////////////

  std::vector<HeightFunction> enumerate_heights(McKayGraph const&       g,
                                                std::vector<int> const& parity,
                                                unsigned                window) {
    if (window < 1) {
      throw PreconditionError("height window must be at least 1");
    }
    std::size_t const nv     = g.num_vertices();
    std::size_t const anchor = g.affine_node;
    if (parity.size() != nv) {
      throw PreconditionError("parity has the wrong number of vertices");
    }
    // breadth-first order, so each later vertex has an earlier neighbour
    std::vector<std::size_t> order{anchor};
    std::vector<bool>        seen(nv, false);
    seen[anchor] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (std::size_t j : g.neighbors(order[head])) {
        if (!seen[j]) {
          seen[j] = true;
          order.push_back(j);
        }
      }
    }
    if (order.size() != nv) {
      throw PreconditionError("McKay graph is not connected");
    }

    std::vector<std::vector<std::int64_t>> found;
    std::vector<std::int64_t>              h(nv, 0);
    std::vector<bool>                      set(nv, false);
    std::int64_t const                     w = window;
    h[anchor]                                = parity[anchor];
    set[anchor]                              = true;

    auto recurse = [&](auto& self, std::size_t pos, std::int64_t lo,
                       std::int64_t hi) -> void {
      if (pos == nv) {
        found.push_back(h);
        return;
      }
      std::size_t  v = order[pos];
      std::int64_t base = 0;
      for (std::size_t j : g.neighbors(v)) {
        if (set[j]) {
          base = h[j];
          break;
        }
      }
      for (std::int64_t cand : {base - 1, base + 1}) {
        bool ok = true;
        for (std::size_t j : g.neighbors(v)) {
          if (set[j] && cand - h[j] != 1 && h[j] - cand != 1) {
            ok = false;
          }
        }
        std::int64_t nlo = std::min(lo, cand), nhi = std::max(hi, cand);
        if (!ok || nhi - nlo > w) {
          continue;
        }
        h[v]   = cand;
        set[v] = true;
        self(self, pos + 1, nlo, nhi);
        set[v] = false;
      }
    };
    recurse(recurse, 1, h[anchor], h[anchor]);

    std::sort(found.begin(), found.end());
    std::vector<HeightFunction> out;
    for (auto& f : found) {
      out.emplace_back(g.n, parity, std::move(f));
    }
    return out;
  }

  HeightFunction flip(HeightFunction const& h, std::size_t i, FlipDirection dir) {
    if (i >= h.size()) {
      throw PreconditionError("flip: vertex " + std::to_string(i)
                              + " out of range");
    }
    auto v = h.values();
    if (dir == FlipDirection::plus) {
      if (!h.is_sink(i)) {
        throw PreconditionError("sigma^+ at vertex " + std::to_string(i)
                                + ", which is not a sink of h = "
                                + h.to_string());
      }
      v[i] += 2;
    } else {
      if (!h.is_source(i)) {
        throw PreconditionError("sigma^- at vertex " + std::to_string(i)
                                + ", which is not a source of h = "
                                + h.to_string());
      }
      v[i] -= 2;
    }
    return HeightFunction(h.graph(), h.parity(), std::move(v));
  }

  std::vector<std::pair<std::size_t, FlipDirection>>
  flip_sequence(HeightFunction const& from, HeightFunction const& to) {
    if (from.graph() != to.graph() || from.parity() != to.parity()) {
      throw PreconditionError("flip_sequence: heights on different graphs");
    }
    std::vector<std::pair<std::size_t, FlipDirection>> seq;
    HeightFunction                                     cur = from;
    // Raise the lowest vertex that is below target; it is always a sink.
    // Then lower the highest vertex above target, always a source.
    for (FlipDirection dir : {FlipDirection::plus, FlipDirection::minus}) {
      while (true) {
        std::size_t best = cur.size();
        for (std::size_t i = 0; i < cur.size(); ++i) {
          bool behind = dir == FlipDirection::plus ? cur[i] < to[i]
                                                   : cur[i] > to[i];
          if (!behind) {
            continue;
          }
          if (best == cur.size()
              || (dir == FlipDirection::plus ? cur[i] < cur[best]
                                             : cur[i] > cur[best])) {
            best = i;
          }
        }
        if (best == cur.size()) {
          break;
        }
        cur = flip(cur, best, dir);
        seq.emplace_back(best, dir);
      }
    }
    return seq;
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  IntMatrix path_counts(OrientedQuiver const& q) {
    std::size_t nv = q.num_vertices;
    // topological order: repeatedly strip sinks
    std::vector<std::size_t> out_degree(nv, 0), order;
    for (auto const& a : q.arrows) {
      ++out_degree[a.from];
    }
    std::deque<std::size_t> ready;
    for (std::size_t i = 0; i < nv; ++i) {
      if (out_degree[i] == 0) {
        ready.push_back(i);
      }
    }
    while (!ready.empty()) {
      std::size_t v = ready.front();
      ready.pop_front();
      order.push_back(v);
      for (auto const& a : q.arrows) {
        if (a.to == v && --out_degree[a.from] == 0) {
          ready.push_back(a.from);
        }
      }
    }
    if (order.size() != nv) {
      throw PreconditionError("path_count: quiver has an oriented cycle");
    }
    IntMatrix p(nv, std::vector<std::int64_t>(nv, 0));
    for (std::size_t v : order) {
      p[v][v] = 1;
      for (auto const& a : q.arrows) {
        if (a.from == v) {
          for (std::size_t j = 0; j < nv; ++j) {
            p[v][j] += a.multiplicity * p[a.to][j];
          }
        }
      }
    }
    return p;
  }

  std::int64_t path_count(OrientedQuiver const& q, std::size_t i, std::size_t j) {
    return path_counts(q).at(i).at(j);
  }

  ////////////////////////////////////////////////////////////////////////
  // Checks
  ////////////////////////////////////////////////////////////////////////

  KirillovReport kirillov_check(HomDims const& homs, HeightFunction const& h) {
    KirillovReport r;
    IntMatrix      paths = path_counts(h.quiver());
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = 0; j < h.size(); ++j) {
        KirillovEntry e{i, j, homs(j, i, h[i] - h[j]), paths[i][j], false};
        e.ok   = e.hom_dim == e.path_count;
        r.pass = r.pass && e.ok;
        r.entries.push_back(e);
      }
    }
    return r;
  }

  ExtReport ext_vanishing_check(HomDims const&        homs,
                                HeightFunction const& h,
                                std::int64_t          d_max) {
    ExtReport r;
    for (std::size_t k = 0; k < h.size(); ++k) {
      for (std::size_t l = 0; l < h.size(); ++l) {
        for (std::int64_t d = 0; d <= d_max; ++d) {
          std::int64_t e   = h[k] - h[l] - 2 * d - 2;
          std::int64_t dim = homs(l, k, e);
          ++r.checked;
          if (dim != 0) {
            r.pass = false;
            r.witnesses.push_back({k, l, d, e, dim});
          }
        }
      }
    }
    return r;
  }

  EulerReport euler_sequence_check(HomDims const&        homs,
                                   HeightFunction const& h,
                                   std::int64_t          m_max) {
    EulerReport r;
    IntMatrix const& n = h.graph();
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (!h.is_source(i)) {
        continue;
      }
      for (std::size_t k = 0; k < h.size(); ++k) {
        for (std::int64_t m = 0; m <= m_max; ++m) {
          std::int64_t a = h[i] - 1 + m;
          if (a < 0) {
            continue;
          }
          std::int64_t s = homs(k, i, a - 1) + homs(k, i, a + 1);
          for (std::size_t j = 0; j < h.size(); ++j) {
            s -= n[i][j] * homs(k, j, a);
          }
          ++r.checked;
          if (s != 0 && r.pass) {
            r.pass    = false;
            r.witness = "source " + std::to_string(i) + ", k = "
                        + std::to_string(k) + ", degree " + std::to_string(a)
                        + ": alternating sum " + std::to_string(s);
          }
        }
      }
    }
    return r;
  }

}  // namespace mckay
