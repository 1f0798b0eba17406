#include "mckay/bgp.hpp"

#include <algorithm>  // for sort, any_of
#include <map>        // for map
#include <tuple>      // for tie

#include "mckay/error.hpp"

namespace mckay {

  namespace {
    bool arrow_less(RepArrow const& a, RepArrow const& b) {
      return std::tie(a.from, a.to, a.index) < std::tie(b.from, b.to, b.index);
    }

    std::string arrow_name(RepArrow const& a) {
      return std::to_string(a.from) + "->" + std::to_string(a.to) + "#"
             + std::to_string(a.index);
    }

    // Accepts "p/q" strings and plain integers.
    Rational entry_from_json(json const& j) {
      if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
      }
      return rational_from_json(j);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // QuiverRep
  ////////////////////////////////////////////////////////////////////////

  QuiverRep::QuiverRep(std::vector<std::size_t> dims, std::vector<RepArrow> arrows)
      : _dims(std::move(dims)), _arrows(std::move(arrows)) {
    std::sort(_arrows.begin(), _arrows.end(), arrow_less);
    validate();
  }

  void QuiverRep::validate() const {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> next_index;
    for (auto const& a : _arrows) {
      if (a.from >= _dims.size() || a.to >= _dims.size()) {
        throw PreconditionError("arrow " + arrow_name(a) + " leaves the quiver");
      }
      if (a.from == a.to) {
        throw PreconditionError("arrow " + arrow_name(a) + " is a loop");
      }
      if (a.matrix.rows() != _dims[a.to] || a.matrix.cols() != _dims[a.from]) {
        throw PreconditionError(
            "arrow " + arrow_name(a) + " has a " + std::to_string(a.matrix.rows())
            + "x" + std::to_string(a.matrix.cols()) + " matrix, expected "
            + std::to_string(_dims[a.to]) + "x" + std::to_string(_dims[a.from]));
      }
      if (a.index != next_index[{a.from, a.to}]++) {
        throw PreconditionError("parallel arrows " + std::to_string(a.from) + "->"
                                + std::to_string(a.to)
                                + " must be indexed 0, 1, ...");
      }
    }
  }

  QuiverRep QuiverRep::zero_maps(OrientedQuiver const& q, std::vector<std::size_t> dims) {
    if (dims.size() != q.num_vertices) {
      throw PreconditionError("dimension vector has the wrong length");
    }
    std::vector<RepArrow> arrows;
    for (auto const& a : q.arrows) {
      for (std::int64_t c = 0; c < a.multiplicity; ++c) {
        arrows.push_back({a.from, a.to, static_cast<std::size_t>(c),
                          QMatrix(dims[a.to], dims[a.from])});
      }
    }
    return QuiverRep(std::move(dims), std::move(arrows));
  }

  std::size_t QuiverRep::total_dim() const {
    std::size_t s = 0;
    for (auto d : _dims) {
      s += d;
    }
    return s;
  }

  OrientedQuiver QuiverRep::quiver() const {
    OrientedQuiver q;
    q.num_vertices = _dims.size();
    for (auto const& a : _arrows) {
      if (!q.arrows.empty() && q.arrows.back().from == a.from
          && q.arrows.back().to == a.to) {
        ++q.arrows.back().multiplicity;
      } else {
        q.arrows.push_back({a.from, a.to, 1});
      }
    }
    return q;
  }

  bool QuiverRep::is_sink(std::size_t i) const {
    return std::none_of(_arrows.begin(), _arrows.end(),
                        [i](RepArrow const& a) { return a.from == i; });
  }

  bool QuiverRep::is_source(std::size_t i) const {
    return std::none_of(_arrows.begin(), _arrows.end(),
                        [i](RepArrow const& a) { return a.to == i; });
  }

  QMatrix QuiverRep::incoming_map(std::size_t i) const {
    std::size_t cols = 0;
    for (auto const& a : _arrows) {
      if (a.to == i) {
        cols += _dims[a.from];
      }
    }
    QMatrix     m(_dims.at(i), cols);
    std::size_t c = 0;
    for (auto const& a : _arrows) {
      if (a.to == i) {
        m.set_block(0, c, a.matrix);
        c += _dims[a.from];
      }
    }
    return m;
  }

  QMatrix QuiverRep::outgoing_map(std::size_t i) const {
    std::size_t rows = 0;
    for (auto const& a : _arrows) {
      if (a.from == i) {
        rows += _dims[a.to];
      }
    }
    QMatrix     m(rows, _dims.at(i));
    std::size_t r = 0;
    for (auto const& a : _arrows) {
      if (a.from == i) {
        m.set_block(r, 0, a.matrix);
        r += _dims[a.to];
      }
    }
    return m;
  }

  bool operator==(QuiverRep const& a, QuiverRep const& b) {
    if (a._dims != b._dims || a._arrows.size() != b._arrows.size()) {
      return false;
    }
    for (std::size_t k = 0; k < a._arrows.size(); ++k) {
      auto const& x = a._arrows[k];
      auto const& y = b._arrows[k];
      if (x.from != y.from || x.to != y.to || x.index != y.index
          || !(x.matrix == y.matrix)) {
        return false;
      }
    }
    return true;
  }

  QuiverRep direct_sum(QuiverRep const& a, QuiverRep const& b) {
    if (a.num_vertices() != b.num_vertices() || a.arrows().size() != b.arrows().size()) {
      throw PreconditionError("direct_sum: representations of different quivers");
    }
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
      dims.push_back(a.dims()[v] + b.dims()[v]);
    }
    std::vector<RepArrow> arrows;
    for (std::size_t k = 0; k < a.arrows().size(); ++k) {
      auto const& x = a.arrows()[k];
      auto const& y = b.arrows()[k];
      if (x.from != y.from || x.to != y.to || x.index != y.index) {
        throw PreconditionError("direct_sum: representations of different quivers");
      }
      QMatrix m(dims[x.to], dims[x.from]);
      m.set_block(0, 0, x.matrix);
      m.set_block(x.matrix.rows(), x.matrix.cols(), y.matrix);
      arrows.push_back({x.from, x.to, x.index, std::move(m)});
    }
    return QuiverRep(std::move(dims), std::move(arrows));
  }

  ////////////////////////////////////////////////////////////////////////
  // Reflections
  ////////////////////////////////////////////////////////////////////////

  QuiverRep reflect_plus(QuiverRep const& v, std::size_t i) {
    if (i >= v.num_vertices() || !v.is_sink(i)) {
      throw PreconditionError("reflect_plus: vertex " + std::to_string(i)
                              + " is not a sink");
    }
    QMatrix k = nullspace(v.incoming_map(i));
    auto    dims = v.dims();
    dims[i]      = k.cols();
    std::vector<RepArrow> arrows;
    std::size_t           r = 0;
    for (auto const& a : v.arrows()) {
      if (a.to == i) {
        // kernel inclusion followed by the projection onto V_from
        std::size_t d = v.dims()[a.from];
        arrows.push_back({i, a.from, a.index, k.block(r, 0, d, k.cols())});
        r += d;
      } else {
        arrows.push_back(a);
      }
    }
    return QuiverRep(std::move(dims), std::move(arrows));
  }

  QuiverRep reflect_minus(QuiverRep const& v, std::size_t i) {
    if (i >= v.num_vertices() || !v.is_source(i)) {
      throw PreconditionError("reflect_minus: vertex " + std::to_string(i)
                              + " is not a source");
    }
    // rows of y span the functionals killing the image, so y is the
    // quotient map onto the cokernel
    QMatrix y    = left_nullspace(v.outgoing_map(i));
    auto    dims = v.dims();
    dims[i]      = y.rows();
    std::vector<RepArrow> arrows;
    std::size_t           c = 0;
    for (auto const& a : v.arrows()) {
      if (a.from == i) {
        std::size_t d = v.dims()[a.to];
        arrows.push_back({a.to, i, a.index, y.block(0, c, y.rows(), d)});
        c += d;
      } else {
        arrows.push_back(a);
      }
    }
    return QuiverRep(std::move(dims), std::move(arrows));
  }

  std::vector<std::int64_t> dim_vector_reflect(std::vector<std::int64_t> d,
                                               std::size_t               i,
                                               IntMatrix const&          n) {
    if (d.size() != n.size() || i >= d.size()) {
      throw PreconditionError("dim_vector_reflect: size mismatch");
    }
    std::int64_t s = -d[i];
    for (std::size_t j = 0; j < d.size(); ++j) {
      s += n[i][j] * d[j];
    }
    d[i] = s;
    return d;
  }

  bool reflectable(QuiverRep const& v, std::size_t i) {
    if (v.is_sink(i)) {
      return rank(v.incoming_map(i)) == v.dims()[i];
    }
    if (v.is_source(i)) {
      return rank(v.outgoing_map(i)) == v.dims()[i];
    }
    throw PreconditionError("vertex " + std::to_string(i)
                            + " is neither a sink nor a source");
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::vector<QMatrix>> find_isomorphism(QuiverRep const& v,
                                                       QuiverRep const& w,
                                                       std::uint64_t    seed,
                                                       unsigned         attempts) {
    if (v.dims() != w.dims() || v.arrows().size() != w.arrows().size()) {
      return std::nullopt;
    }
    std::size_t const        nv = v.num_vertices();
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t u = 0; u < nv; ++u) {
      offset[u + 1] = offset[u] + v.dims()[u] * v.dims()[u];
    }
    std::size_t const unknowns = offset[nv];
    auto var = [&](std::size_t u, std::size_t r, std::size_t c) {
      return offset[u] + r * v.dims()[u] + c;
    };

    // T_to A - B T_from = 0, one row per matrix entry
    std::vector<std::vector<Rational>> eqs;
    for (std::size_t k = 0; k < v.arrows().size(); ++k) {
      auto const& a = v.arrows()[k];
      auto const& b = w.arrows()[k];
      if (a.from != b.from || a.to != b.to || a.index != b.index) {
        return std::nullopt;
      }
      std::size_t df = v.dims()[a.from], dt = v.dims()[a.to];
      for (std::size_t r = 0; r < dt; ++r) {
        for (std::size_t c = 0; c < df; ++c) {
          std::vector<Rational> row(unknowns);
          for (std::size_t s = 0; s < dt; ++s) {
            row[var(a.to, r, s)] += a.matrix(s, c);
          }
          for (std::size_t s = 0; s < df; ++s) {
            row[var(a.from, s, c)] -= b.matrix(r, s);
          }
          eqs.push_back(std::move(row));
        }
      }
    }
    QMatrix system(eqs.size(), unknowns);
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      for (std::size_t c = 0; c < unknowns; ++c) {
        system(r, c) = eqs[r][c];
      }
    }
    QMatrix basis = eqs.empty() ? QMatrix::identity(unknowns) : nullspace(system);

    auto unpack = [&](std::vector<Rational> const& x) {
      std::vector<QMatrix> t;
      for (std::size_t u = 0; u < nv; ++u) {
        QMatrix m(v.dims()[u], v.dims()[u]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
          for (std::size_t c = 0; c < m.cols(); ++c) {
            m(r, c) = x[var(u, r, c)];
          }
        }
        t.push_back(std::move(m));
      }
      return t;
    };
    auto invertible = [](std::vector<QMatrix> const& t) {
      return std::all_of(t.begin(), t.end(), [](QMatrix const& m) {
        return m.rows() == 0 || !determinant(m).is_zero();
      });
    };

    if (unknowns == 0) {
      return std::vector<QMatrix>(nv);
    }
    std::mt19937_64                             rng(seed);
    std::uniform_int_distribution<std::int64_t> coeff(-7, 7);
    for (unsigned attempt = 0; attempt < attempts; ++attempt) {
      std::vector<Rational> x(unknowns);
      for (std::size_t b = 0; b < basis.cols(); ++b) {
        Rational lambda = coeff(rng);
        if (lambda.is_zero()) {
          continue;
        }
        for (std::size_t r = 0; r < unknowns; ++r) {
          x[r] += lambda * basis(r, b);
        }
      }
      auto t = unpack(x);
      if (invertible(t)) {
        return t;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random representations and JSON
  ////////////////////////////////////////////////////////////////////////

  QuiverRep random_rep(OrientedQuiver const& q,
                       std::mt19937_64&      rng,
                       std::size_t           max_dim,
                       std::int64_t          lo,
                       std::int64_t          hi) {
    std::uniform_int_distribution<std::size_t>  dim(0, max_dim);
    std::uniform_int_distribution<std::int64_t> entry(lo, hi);
    std::vector<std::size_t>                    dims;
    for (std::size_t v = 0; v < q.num_vertices; ++v) {
      dims.push_back(dim(rng));
    }
    QuiverRep rep = QuiverRep::zero_maps(q, std::move(dims));
    for (auto& a : rep.arrows()) {
      for (std::size_t r = 0; r < a.matrix.rows(); ++r) {
        for (std::size_t c = 0; c < a.matrix.cols(); ++c) {
          a.matrix(r, c) = entry(rng);
        }
      }
    }
    return rep;
  }

  json to_json(QuiverRep const& v) {
    json arrows = json::array();
    for (auto const& a : v.arrows()) {
      arrows.push_back(json{{"from", a.from},
                            {"to", a.to},
                            {"index", a.index},
                            {"matrix", to_json(a.matrix)}});
    }
    return json{{"dims", v.dims()}, {"arrows", std::move(arrows)}};
  }

  QuiverRep quiver_rep_from_json(json const& j) {
    try {
      auto                  dims = j.at("dims").get<std::vector<std::size_t>>();
      std::vector<RepArrow> arrows;
      for (auto const& a : j.at("arrows")) {
        RepArrow    r{a.at("from").get<std::size_t>(), a.at("to").get<std::size_t>(),
                   a.value("index", std::size_t{0}), QMatrix()};
        if (r.from >= dims.size() || r.to >= dims.size()) {
          throw PreconditionError("arrow " + arrow_name(r) + " leaves the quiver");
        }
        json const& m = a.at("matrix");
        if (!m.is_array()) {
          throw PreconditionError("arrow " + arrow_name(r)
                                  + ": matrix must be an array of rows");
        }
        // an empty array stands for any matrix with a zero dimension
        r.matrix = QMatrix(m.empty() ? dims[r.to] : m.size(),
                           m.empty() ? dims[r.from] : m[0].size());
        if (m.empty() && dims[r.to] != 0 && dims[r.from] != 0) {
          throw PreconditionError("arrow " + arrow_name(r) + ": empty matrix");
        }
        for (std::size_t row = 0; row < m.size(); ++row) {
          if (!m[row].is_array() || m[row].size() != r.matrix.cols()) {
            throw PreconditionError("arrow " + arrow_name(r)
                                    + ": matrix rows must have equal length");
          }
          for (std::size_t col = 0; col < r.matrix.cols(); ++col) {
            r.matrix(row, col) = entry_from_json(m[row][col]);
          }
        }
        arrows.push_back(std::move(r));
      }
      return QuiverRep(std::move(dims), std::move(arrows));
    } catch (nlohmann::json::exception const& e) {
      throw PreconditionError(std::string("malformed representation: ") + e.what());
    }
  }

}  // namespace mckay
