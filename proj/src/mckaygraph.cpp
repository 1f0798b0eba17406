#include "mckay/mckaygraph.hpp"

#include <algorithm>  // for sort, all_of
#include <numeric>    // for gcd

#include "mckay/error.hpp"
#include "mckay/linalg.hpp"

namespace mckay {

  ////////////////////////////////////////////////////////////////////////
  // AffineType
  ////////////////////////////////////////////////////////////////////////

  std::string AffineType::label() const {
    char f = family == AdeFamily::A ? 'A' : (family == AdeFamily::D ? 'D' : 'E');
    return std::string(1, f) + std::to_string(rank) + "~";
  }

  AffineType AffineType::parse(std::string const& label) {
    if (label.size() < 3 || label.back() != '~') {
      throw PreconditionError("bad affine type label '" + label + "'");
    }
    AffineType t{};
    switch (label[0]) {
      case 'A':
        t.family = AdeFamily::A;
        break;
      case 'D':
        t.family = AdeFamily::D;
        break;
      case 'E':
        t.family = AdeFamily::E;
        break;
      default:
        throw PreconditionError("bad affine type label '" + label + "'");
    }
    try {
      t.rank = static_cast<unsigned>(
          std::stoul(label.substr(1, label.size() - 2)));
    } catch (std::exception const&) {
      throw PreconditionError("bad affine type label '" + label + "'");
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reference diagrams
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void add_edge(IntMatrix& n, std::size_t i, std::size_t j) {
      ++n[i][j];
      ++n[j][i];
    }

    IntMatrix chain(std::size_t vertices) {
      IntMatrix n(vertices, std::vector<std::int64_t>(vertices, 0));
      for (std::size_t i = 0; i + 1 < vertices; ++i) {
        add_edge(n, i, i + 1);
      }
      return n;
    }

    std::vector<AffineType> candidates(std::size_t vertices) {
      std::vector<AffineType> c;
      unsigned                m = static_cast<unsigned>(vertices - 1);
      if (m >= 1 && m <= 12) {
        c.push_back({AdeFamily::A, m});
      }
      if (m >= 4 && m <= 10) {
        c.push_back({AdeFamily::D, m});
      }
      if (m >= 6 && m <= 8) {
        c.push_back({AdeFamily::E, m});
      }
      return c;
    }

    bool extend(IntMatrix const&          n,
                IntMatrix const&          ref,
                std::vector<std::size_t>& map,
                std::vector<bool>&        used,
                std::size_t               i) {
      if (i == n.size()) {
        return true;
      }
      for (std::size_t r = 0; r < ref.size(); ++r) {
        if (used[r] || n[i][i] != ref[r][r]) {
          continue;
        }
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          ok = n[i][j] == ref[r][map[j]];
        }
        if (!ok) {
          continue;
        }
        map[i]  = r;
        used[r] = true;
        if (extend(n, ref, map, used, i + 1)) {
          return true;
        }
        used[r] = false;
      }
      return false;
    }

    std::vector<std::int64_t> degrees(IntMatrix const& n) {
      std::vector<std::int64_t> d;
      for (auto const& row : n) {
        d.push_back(std::accumulate(row.begin(), row.end(), std::int64_t(0)));
      }
      std::sort(d.begin(), d.end());
      return d;
    }
  }  // namespace

  IntMatrix reference_diagram(AffineType t) {
    switch (t.family) {
      case AdeFamily::A: {
        if (t.rank == 0) {
          break;
        }
        if (t.rank == 1) {
          return {{0, 2}, {2, 0}};
        }
        IntMatrix n = chain(t.rank + 1);
        add_edge(n, t.rank, 0);
        return n;
      }
      case AdeFamily::D: {
        if (t.rank < 4) {
          break;
        }
        std::size_t m = t.rank;
        IntMatrix   n(m + 1, std::vector<std::int64_t>(m + 1, 0));
        for (std::size_t i = 2; i < m - 2; ++i) {
          add_edge(n, i, i + 1);
        }
        add_edge(n, 0, 2);
        add_edge(n, 1, 2);
        add_edge(n, m - 1, m - 2);
        add_edge(n, m, m - 2);
        return n;
      }
      case AdeFamily::E: {
        if (t.rank == 6) {
          IntMatrix n(7, std::vector<std::int64_t>(7, 0));
          for (std::size_t leaf = 0; leaf < 3; ++leaf) {
            add_edge(n, leaf, leaf + 3);
            add_edge(n, leaf + 3, 6);
          }
          return n;
        } else if (t.rank == 7) {
          IntMatrix n = chain(8);
          n[6][7] = n[7][6] = 0;
          add_edge(n, 3, 7);
          return n;
        } else if (t.rank == 8) {
          IntMatrix n = chain(9);
          n[7][8] = n[8][7] = 0;
          add_edge(n, 5, 8);
          return n;
        }
        break;
      }
    }
    throw PreconditionError("no affine diagram " + t.label());
  }

  std::vector<std::int64_t> reference_delta(AffineType t) {
    switch (t.family) {
      case AdeFamily::A:
        return std::vector<std::int64_t>(t.rank + 1, 1);
      case AdeFamily::D: {
        std::vector<std::int64_t> d(t.rank + 1, 2);
        d[0] = d[1] = d[t.rank - 1] = d[t.rank] = 1;
        return d;
      }
      case AdeFamily::E:
        if (t.rank == 6) {
          return {1, 1, 1, 2, 2, 2, 3};
        } else if (t.rank == 7) {
          return {1, 2, 3, 4, 3, 2, 1, 2};
        }
        return {1, 2, 3, 4, 5, 6, 4, 2, 3};
    }
    return {};
  }

  IntMatrix cartan_matrix(IntMatrix const& n) {
    IntMatrix c = n;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        c[i][j] = (i == j ? 2 : 0) - n[i][j];
      }
    }
    return c;
  }

  std::optional<std::vector<std::int64_t>> imaginary_root(IntMatrix const& n) {
    if (n.empty()) {
      return std::nullopt;
    }
    QMatrix k = nullspace(QMatrix::from_ints(cartan_matrix(n)));
    if (k.cols() != 1) {
      return std::nullopt;
    }
    // clear denominators, then divide by the content
    mpz_class l = 1;
    for (std::size_t i = 0; i < k.rows(); ++i) {
      mpz_class d = k(i, 0).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> v;
    mpz_class              g = 0;
    for (std::size_t i = 0; i < k.rows(); ++i) {
      v.push_back(k(i, 0).numerator() * (l / k(i, 0).denominator()));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    int sign = sgn(v[0]) < 0 ? -1 : 1;
    std::vector<std::int64_t> out;
    for (auto& x : v) {
      mpz_class y = x / g * sign;
      if (y <= 0 || !y.fits_slong_p()) {
        return std::nullopt;
      }
      out.push_back(y.get_si());
    }
    return out;
  }

  Classification classify_affine_ade(IntMatrix const& n) {
    Classification c;
    if (auto d = imaginary_root(n)) {
      c.delta = *d;
    }
    if (n.empty()) {
      return c;
    }
    auto deg = degrees(n);
    for (AffineType t : candidates(n.size())) {
      IntMatrix ref = reference_diagram(t);
      if (degrees(ref) != deg) {
        continue;
      }
      std::vector<std::size_t> map(n.size());
      std::vector<bool>        used(n.size(), false);
      if (extend(n, ref, map, used, 0)) {
        c.type         = t;
        c.to_reference = std::move(map);
        return c;
      }
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // McKay graph
  ////////////////////////////////////////////////////////////////////////

  IntMatrix mckay_matrix(CharacterTable const& t) {
    std::size_t r = t.num_irreps();
    IntMatrix   n(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<CycloNum> vj;
      for (std::size_t k = 0; k < t.num_classes(); ++k) {
        vj.push_back(t.defining[k] * t.chi[j][k]);
      }
      for (std::size_t i = 0; i < r; ++i) {
        CycloNum x = t.inner(t.chi[i], vj);
        if (!x.is_rational() || !x.to_rational().is_integer()
            || x.to_rational().sign() < 0) {
          throw DefectError("McKay multiplicity n_" + std::to_string(i) + ","
                            + std::to_string(j) + " = " + x.to_string()
                            + " is not a nonnegative integer");
        }
        n[i][j] = x.to_rational().to_int64();
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (n[i][j] != n[j][i]) {
          throw DefectError("McKay matrix is not symmetric at ("
                            + std::to_string(i) + ", " + std::to_string(j)
                            + ")");
        }
      }
    }
    return n;
  }

  std::vector<std::size_t> McKayGraph::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n.size(); ++j) {
      if (n[i][j] > 0) {
        out.push_back(j);
      }
    }
    return out;
  }

  McKayGraph mckay_graph(CharacterTable const& t) {
    McKayGraph g;
    g.n              = mckay_matrix(t);
    g.classification = classify_affine_ade(g.n);
    g.affine_node    = t.trivial;
    return g;
  }

  std::vector<int> parity_function(CharacterTable const& t,
                                   MatrixGroup const&    g,
                                   IntMatrix const&      n) {
    if (!g.contains_minus_identity()) {
      throw PreconditionError("parity needs -I in the group; "
                              + g.descriptor().to_string() + " does not contain it");
    }
    std::size_t      minus = g.class_of(*g.minus_identity());
    std::vector<int> p;
    for (std::size_t i = 0; i < t.num_irreps(); ++i) {
      CycloNum const& v = t.chi[i][minus];
      if (v == CycloNum(t.dims[i])) {
        p.push_back(0);
      } else if (v == CycloNum(-t.dims[i])) {
        p.push_back(1);
      } else {
        throw DefectError("-I acts on irrep " + std::to_string(i)
                          + " with trace " + v.to_string());
      }
    }
    for (std::size_t i = 0; i < n.size(); ++i) {
      for (std::size_t j = 0; j < n.size(); ++j) {
        if (n[i][j] > 0 && p[i] == p[j]) {
          throw DefectError("adjacent vertices " + std::to_string(i) + " and "
                            + std::to_string(j) + " have the same parity");
        }
      }
    }
    return p;
  }

}  // namespace mckay
