#include "mckay/molien.hpp"

#include "mckay/error.hpp"

namespace mckay {

  namespace {
    using CPoly = Poly<CycloNum>;

    QPoly rational_part(CPoly const& p, std::string const& what) {
      std::vector<Rational> c;
      for (auto const& x : p.coeffs()) {
        if (!x.is_rational()) {
          throw DefectError(what + " has non-rational coefficient "
                            + x.to_string());
        }
        c.push_back(x.to_rational());
      }
      return QPoly(std::move(c));
    }
  }  // namespace

  MolienMatrices molien_matrices(CharacterTable const& t) {
    std::size_t r = t.num_irreps();
    std::size_t e = t.exponent;
    std::vector<CycloNum> c(e + 1);
    c[0]            = 1;
    c[e]            = -1;
    CPoly one_minus = CPoly(std::move(c));
    CPoly const denom = one_minus * one_minus;

    // N_C = (1 - t^e)^2 / det(1 - g^-1 t); exact since every eigenvalue of g
    // is an e-th root of unity.
    std::vector<CPoly> num_c;
    for (std::size_t k = 0; k < t.num_classes(); ++k) {
      CycloNum tau = t.defining[k];
      CPoly    delta(std::vector<CycloNum>{1, -tau, 1});
      auto [q, rem] = CPoly::divmod(denom, delta);
      if (!rem.is_zero()) {
        throw DefectError("det(1 - g^-1 t) does not divide (1 - t^"
                          + std::to_string(e) + ")^2 on class "
                          + std::to_string(k));
      }
      num_c.push_back(std::move(q));
    }

    QPoly const    qdenom = rational_part(denom, "denominator");
    MolienMatrices m;
    m.S.assign(r, std::vector<RatFunc>(r));
    m.E.assign(r, std::vector<QPoly>(r));
    CycloNum const inv_order(Rational(1, static_cast<std::int64_t>(t.group_order)));
    for (std::size_t p = 0; p < r; ++p) {
      for (std::size_t q = 0; q < r; ++q) {
        CPoly    num;
        CycloNum e0, e1;
        for (std::size_t k = 0; k < t.num_classes(); ++k) {
          CycloNum w = CycloNum(static_cast<std::int64_t>(t.class_sizes[k]))
                       * inv_order * t.chi[q][k].conj() * t.chi[p][k];
          if (w.is_zero()) {
            continue;
          }
          num += w * num_c[k];
          e0 += w;
          e1 += w * t.defining[k];
        }
        std::string where = "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
        m.S[p][q] = RatFunc(rational_part(num, "S" + where), qdenom);
        // E[q][p]: conj(chi_q) chi_p (1 + tau t + t^2)
        m.E[q][p] = rational_part(CPoly(std::vector<CycloNum>{e0, e1, e0}),
                                  "E" + where);
      }
    }
    return m;
  }

  std::string KoszulResult::witness() const {
    if (pass) {
      return "";
    }
    return "entry (" + std::to_string(row) + ", " + std::to_string(col)
           + ") of S(t) E(-t) is " + entry.to_string();
  }

  KoszulResult koszul_check(MolienMatrices const& m) {
    std::size_t r = m.size();
    KoszulResult res;
    for (std::size_t p = 0; p < r; ++p) {
      for (std::size_t q = 0; q < r; ++q) {
        RatFunc acc;
        for (std::size_t k = 0; k < r; ++k) {
          acc += m.S[p][k] * RatFunc(m.E[k][q].negate_variable());
        }
        if (acc != RatFunc(Rational(p == q ? 1 : 0))) {
          res.row   = p;
          res.col   = q;
          res.entry = acc;
          return res;
        }
      }
    }
    res.pass = true;
    return res;
  }

  ////////////////////////////////////////////////////////////////////////
  // HomDims
  ////////////////////////////////////////////////////////////////////////

  HomDims::HomDims(CharacterTable const& t)
      : _class_sizes(t.class_sizes), _order(t.group_order), _chi(t.chi) {
    for (auto const& row : _chi) {
      std::vector<CycloNum> c;
      for (auto const& x : row) {
        c.push_back(x.conj());
      }
      _chi_conj.push_back(std::move(c));
    }
    _sym.emplace_back(t.num_classes(), CycloNum(1));
    _sym.push_back(t.defining);
  }

  // Caller holds _mutex.
  std::vector<CycloNum> const& HomDims::symmetric_power(std::size_t m) const {
    while (_sym.size() <= m) {
      std::size_t           s = _sym.size();
      std::vector<CycloNum> next;
      for (std::size_t k = 0; k < _class_sizes.size(); ++k) {
        next.push_back(_sym[s - 1][k] * _sym[1][k] - _sym[s - 2][k]);
      }
      _sym.push_back(std::move(next));
    }
    return _sym[m];
  }

  std::int64_t HomDims::operator()(std::size_t  i,
                                   std::size_t  j,
                                   std::int64_t m) const {
    if (i >= _chi.size() || j >= _chi.size()) {
      throw PreconditionError("hom_dim: irrep index out of range");
    }
    if (m < 0) {
      return 0;
    }
    std::lock_guard<std::mutex> lock(_mutex);
    auto key = std::make_tuple(i, j, m);
    if (auto it = _memo.find(key); it != _memo.end()) {
      return it->second;
    }
    auto const& s = symmetric_power(static_cast<std::size_t>(m));
    CycloNum    acc;
    for (std::size_t k = 0; k < _class_sizes.size(); ++k) {
      acc += CycloNum(static_cast<std::int64_t>(_class_sizes[k])) * _chi_conj[i][k]
             * s[k] * _chi[j][k];
    }
    acc *= CycloNum(Rational(1, static_cast<std::int64_t>(_order)));
    if (!acc.is_rational() || !acc.to_rational().is_integer()
        || acc.to_rational().sign() < 0) {
      throw DefectError("hom_dim(" + std::to_string(i) + ", " + std::to_string(j)
                        + ", " + std::to_string(m) + ") = " + acc.to_string()
                        + " is not a nonnegative integer");
    }
    std::int64_t v = acc.to_rational().to_int64();
    _memo.emplace(key, v);
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Heights
  ////////////////////////////////////////////////////////////////////////

  void check_height_function(IntMatrix const&                 n,
                             std::vector<int> const&          parity,
                             std::vector<std::int64_t> const& h) {
    if (h.size() != n.size() || parity.size() != n.size()) {
      throw PreconditionError("height function has " + std::to_string(h.size())
                              + " values for " + std::to_string(n.size())
                              + " vertices");
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (((h[i] % 2) + 2) % 2 != parity[i]) {
        throw PreconditionError("h(" + std::to_string(i) + ") = "
                                + std::to_string(h[i])
                                + " has the wrong parity");
      }
      for (std::size_t j = 0; j < h.size(); ++j) {
        if (n[i][j] > 0 && h[i] - h[j] != 1 && h[j] - h[i] != 1) {
          throw PreconditionError("h differs by "
                                  + std::to_string(h[i] - h[j])
                                  + " across the edge (" + std::to_string(i)
                                  + ", " + std::to_string(j) + ")");
        }
      }
    }
  }

  std::int64_t graded_dim_Bh(HomDims const&                   homs,
                             IntMatrix const&                 n,
                             std::vector<int> const&          parity,
                             std::vector<std::int64_t> const& h,
                             std::size_t                      i,
                             std::size_t                      j,
                             std::int64_t                     degree) {
    check_height_function(n, parity, h);
    std::int64_t twice_d = degree - h[j] + h[i];
    if (twice_d < 0 || twice_d % 2 != 0) {
      return 0;
    }
    return homs(i, j, degree);
  }

}  // namespace mckay
