#include "mckay/ktheory.hpp"

#include <random>  // for mt19937_64, uniform_int_distribution

#include "mckay/error.hpp"
#include "mckay/linalg.hpp"

namespace mckay {

  ////////////////////////////////////////////////////////////////////////
  // P1Class
  ////////////////////////////////////////////////////////////////////////

  P1Class P1Class::symbol(std::size_t irrep, std::int64_t twist, std::int64_t coeff) {
    P1Class x;
    x.add({irrep, twist}, coeff);
    return x;
  }

  void P1Class::add(Key const& k, std::int64_t c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = _terms.emplace(k, c);
    if (!inserted && (it->second += c) == 0) {
      _terms.erase(it);
    }
  }

  std::int64_t P1Class::coeff(std::size_t irrep, std::int64_t twist) const {
    auto it = _terms.find({irrep, twist});
    return it == _terms.end() ? 0 : it->second;
  }

  P1Class& P1Class::operator+=(P1Class const& o) {
    for (auto const& [k, c] : o._terms) {
      add(k, c);
    }
    return *this;
  }

  P1Class& P1Class::operator-=(P1Class const& o) {
    for (auto const& [k, c] : o._terms) {
      add(k, -c);
    }
    return *this;
  }

  P1Class& P1Class::operator*=(std::int64_t k) {
    if (k == 0) {
      _terms.clear();
    }
    for (auto& [key, c] : _terms) {
      c *= k;
    }
    return *this;
  }

  std::string P1Class::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string s;
    bool        first = true;
    for (auto const& [k, c] : _terms) {
      std::int64_t a = c < 0 ? -c : c;
      if (first) {
        s += c < 0 ? "-" : "";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (a != 1) {
        s += std::to_string(a) + " ";
      }
      s += "W" + std::to_string(k.first) + "(" + std::to_string(k.second) + ")";
      first = false;
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // K0Lattice
  ////////////////////////////////////////////////////////////////////////

  K0Lattice::K0Lattice(HomDims const& homs, IntMatrix n, std::vector<int> parity)
      : _homs(homs), _n(std::move(n)), _parity(std::move(parity)) {
    if (_homs.num_irreps() != _n.size() || _parity.size() != _n.size()) {
      throw PreconditionError("K0Lattice: graph, parity and hom table disagree in size");
    }
    for (std::size_t k = 0; k < _n.size(); ++k) {
      _probes.push_back(P1Class::symbol(k, _parity[k]));
      _probes.push_back(P1Class::symbol(k, _parity[k] + 2));
    }
  }

  HeightFunction K0Lattice::parity_height() const {
    return HeightFunction(_n, _parity,
                          std::vector<std::int64_t>(_parity.begin(), _parity.end()));
  }

  void K0Lattice::check_class(P1Class const& x) const {
    for (auto const& [k, c] : x.terms()) {
      if (k.first >= _n.size()) {
        throw PreconditionError("class uses irrep " + std::to_string(k.first)
                                + " out of range");
      }
      if (((k.second % 2) + 2) % 2 != _parity[k.first]) {
        throw PreconditionError("W" + std::to_string(k.first) + "("
                                + std::to_string(k.second)
                                + ") is not equivariant: twist has the wrong parity");
      }
    }
  }

  std::int64_t K0Lattice::euler_char(P1Class const& x, P1Class const& y) const {
    check_class(x);
    check_class(y);
    std::int64_t s = 0;
    for (auto const& [kx, cx] : x.terms()) {
      for (auto const& [ky, cy] : y.terms()) {
        auto [i, a] = kx;
        auto [j, b] = ky;
        s += cx * cy * (_homs(i, j, b - a) - _homs(j, i, a - b - 2));
      }
    }
    return s;
  }

  std::int64_t K0Lattice::cartan_form(P1Class const& x, P1Class const& y) const {
    return euler_char(x, y) + euler_char(y, x);
  }

  std::vector<std::int64_t> K0Lattice::probe_vector(P1Class const& x) const {
    std::vector<std::int64_t> v;
    for (auto const& p : _probes) {
      v.push_back(euler_char(p, x));
    }
    return v;
  }

  bool K0Lattice::equal(P1Class const& x, P1Class const& y) const {
    return probe_vector(x - y) == std::vector<std::int64_t>(_probes.size(), 0);
  }

  P1Class K0Lattice::f_class(HeightFunction const& h, std::size_t i) {
    return P1Class::symbol(i, h[i]);
  }

  SimpleFamily K0Lattice::dual_family(HeightFunction const& h) const {
    std::size_t const    r = rank();
    std::vector<P1Class> window;
    for (std::size_t j = 0; j < r; ++j) {
      window.push_back(P1Class::symbol(j, h[j]));
    }
    for (std::size_t j = 0; j < r; ++j) {
      window.push_back(P1Class::symbol(j, h[j] - 2));
    }
    QMatrix a(r, window.size());
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t c = 0; c < window.size(); ++c) {
        a(k, c) = euler_char(f_class(h, k), window[c]);
      }
    }
    auto x = solve(a, QMatrix::identity(r));
    if (!x) {
      throw PreconditionError("duality system for h = " + h.to_string()
                              + " has no solution on the twist window");
    }
    SimpleFamily f{h, {}};
    for (std::size_t i = 0; i < r; ++i) {
      P1Class e;
      for (std::size_t c = 0; c < window.size(); ++c) {
        Rational const& v = (*x)(c, i);
        if (!v.is_integer()) {
          throw DefectError("non-integral simple class at vertex " + std::to_string(i));
        }
        e += v.to_int64() * window[c];
      }
      f.classes.push_back(std::move(e));
    }
    return f;
  }

  SimpleFamily K0Lattice::parity_family() const {
    return dual_family(parity_height());
  }

  SimpleFamily K0Lattice::flip_family(SimpleFamily const& f,
                                      std::size_t         i,
                                      FlipDirection       dir) const {
    SimpleFamily out{flip(f.height, i, dir), f.classes};
    P1Class const ei = f.classes[i];
    for (std::size_t j = 0; j < rank(); ++j) {
      if (j == i) {
        out.classes[j] = -ei;
      } else if (_n[i][j] != 0) {
        out.classes[j] += _n[i][j] * ei;
      }
    }
    return out;
  }

  SimpleFamily K0Lattice::simple_family(HeightFunction const& h) const {
    SimpleFamily f = parity_family();
    for (auto [i, dir] : flip_sequence(f.height, h)) {
      f = flip_family(f, i, dir);
    }
    return f;
  }

  std::vector<std::int64_t> K0Lattice::coordinates(SimpleFamily const& f,
                                                   P1Class const&      x) const {
    std::vector<std::int64_t> c;
    P1Class                   sum;
    for (std::size_t k = 0; k < rank(); ++k) {
      c.push_back(euler_char(f_class(f.height, k), x));
      sum += c.back() * f.classes[k];
    }
    if (!equal(sum, x)) {
      throw PreconditionError(x.to_string() + " is not in the span of the simples of h = "
                              + f.height.to_string());
    }
    return c;
  }

  P1Class K0Lattice::twist_class(std::size_t         i,
                                 SimpleFamily const& f,
                                 P1Class const&      x) const {
    coordinates(f, x);
    return x - cartan_form(f.classes.at(i), x) * f.classes[i];
  }

  TwistFlipReport K0Lattice::verify_twist_vs_flip(HeightFunction const& h,
                                                  std::size_t           i) const {
    TwistFlipReport rep;
    rep.vertex = i;
    if (h.is_source(i)) {
      rep.direction = FlipDirection::minus;
    } else if (h.is_sink(i)) {
      rep.direction = FlipDirection::plus;
    } else {
      throw PreconditionError("vertex " + std::to_string(i)
                              + " is neither a sink nor a source of h = "
                              + h.to_string());
    }
    SimpleFamily const f       = simple_family(h);
    SimpleFamily const flipped = flip_family(f, i, rep.direction);
    SimpleFamily const solved  = dual_family(flipped.height);
    for (std::size_t j = 0; j < rank(); ++j) {
      TwistFlipEntry e{j, twist_class(i, f, f.classes[j]), flipped.classes[j],
                       solved.classes[j], false};
      e.ok     = equal(e.twisted, e.recursion) && equal(e.twisted, e.duality);
      rep.pass = rep.pass && e.ok;
      rep.entries.push_back(std::move(e));
    }
    return rep;
  }

  DualBasesReport K0Lattice::verify_dual_bases(HeightFunction const& h) const {
    DualBasesReport rep;
    SimpleFamily    f = simple_family(h);
    for (std::size_t k = 0; k < rank(); ++k) {
      for (std::size_t j = 0; j < rank(); ++j) {
        std::int64_t v = euler_char(f_class(h, k), f.classes[j]);
        if (v != (k == j ? 1 : 0)) {
          rep.pass    = false;
          rep.witness = "chi(F_" + std::to_string(k) + ", E_" + std::to_string(j)
                        + ") = " + std::to_string(v) + " for h = " + h.to_string();
          return rep;
        }
      }
    }
    return rep;
  }

  IntMatrix K0Lattice::basis_change(SimpleFamily const& from,
                                    SimpleFamily const& to) const {
    IntMatrix m;
    for (auto const& x : to.classes) {
      m.push_back(coordinates(from, x));
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Weyl group
  ////////////////////////////////////////////////////////////////////////

  namespace {
    IntMatrix int_identity(std::size_t r) {
      IntMatrix m(r, std::vector<std::int64_t>(r, 0));
      for (std::size_t i = 0; i < r; ++i) {
        m[i][i] = 1;
      }
      return m;
    }

    IntMatrix mul(IntMatrix const& a, IntMatrix const& b) {
      std::size_t r = a.size();
      IntMatrix   c(r, std::vector<std::int64_t>(r, 0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
          if (a[i][k] != 0) {
            for (std::size_t j = 0; j < r; ++j) {
              c[i][j] += a[i][k] * b[k][j];
            }
          }
        }
      }
      return c;
    }

    std::vector<std::int64_t> act(IntMatrix const& a, std::vector<std::int64_t> const& x) {
      std::vector<std::int64_t> y(a.size(), 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
          y[i] += a[i][j] * x[j];
        }
      }
      return y;
    }

    std::int64_t form(IntMatrix const&                 c,
                      std::vector<std::int64_t> const& x,
                      std::vector<std::int64_t> const& y) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
          s += x[i] * c[i][j] * y[j];
        }
      }
      return s;
    }

    std::string pair_name(std::size_t i, std::size_t j) {
      return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
    }
  }  // namespace

  IntMatrix simple_reflection(IntMatrix const& n, std::size_t i) {
    std::size_t r = n.size();
    IntMatrix   s = int_identity(r);
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t cij = (i == j ? 2 : 0) - n[i][j];
      s[i][j] -= cij;
    }
    return s;
  }

  WeylReport weyl_checks(IntMatrix const&                 n,
                         std::vector<std::int64_t> const& delta,
                         std::uint64_t                    seed) {
    std::size_t const      r  = n.size();
    IntMatrix const        id = int_identity(r);
    std::vector<IntMatrix> s;
    for (std::size_t i = 0; i < r; ++i) {
      s.push_back(simple_reflection(n, i));
    }
    IntMatrix cartan(r, std::vector<std::int64_t>(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        cartan[i][j] = (i == j ? 2 : 0) - n[i][j];
      }
    }

    WeylReport rep;
    auto       record = [&](std::string name, std::string witness) {
      bool ok  = witness.empty();
      rep.pass = rep.pass && ok;
      rep.checks.push_back({std::move(name), ok, std::move(witness)});
    };

    std::string w;
    for (std::size_t i = 0; i < r && w.empty(); ++i) {
      if (mul(s[i], s[i]) != id) {
        w = "s_" + std::to_string(i) + "^2 != 1";
      }
    }
    record("involution", w);

    w.clear();
    std::string inf;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        IntMatrix p = mul(s[i], s[j]);
        if (n[i][j] == 0 && mul(p, p) != id && w.empty()) {
          w = "(s_i s_j)^2 != 1 for non-adjacent " + pair_name(i, j);
        } else if (n[i][j] == 1 && mul(p, mul(p, p)) != id && w.empty()) {
          w = "(s_i s_j)^3 != 1 for the edge " + pair_name(i, j);
        } else if (n[i][j] >= 2) {
          IntMatrix q = p;
          for (int k = 1; k <= 12; ++k, q = mul(q, p)) {
            if (q == id && inf.empty()) {
              inf = "(s_i s_j)^" + std::to_string(k) + " = 1 for the multiple edge "
                    + pair_name(i, j);
            }
          }
        }
      }
    }
    record("braid", w);
    record("infinite_order", inf);

    w.clear();
    for (std::size_t i = 0; i < r && w.empty(); ++i) {
      if (act(s[i], delta) != delta) {
        w = "s_" + std::to_string(i) + " moves delta";
      }
    }
    record("delta_fixed", w);

    w.clear();
    std::mt19937_64                              rng(seed);
    std::uniform_int_distribution<std::int64_t>  entry(-3, 3);
    std::uniform_int_distribution<std::size_t>   vertex(0, r - 1);
    std::uniform_int_distribution<std::size_t>   length(1, 8);
    for (int trial = 0; trial < 64 && w.empty(); ++trial) {
      std::vector<std::int64_t> x(r), y(r);
      for (std::size_t k = 0; k < r; ++k) {
        x[k] = entry(rng);
        y[k] = entry(rng);
      }
      IntMatrix   word = id;
      std::size_t len  = length(rng);
      for (std::size_t k = 0; k < len; ++k) {
        word = mul(s[vertex(rng)], word);
      }
      if (form(cartan, act(word, x), act(word, y)) != form(cartan, x, y)) {
        w = "form not preserved on trial " + std::to_string(trial);
      }
    }
    record("form_preserved", w);
    return rep;
  }

  std::int64_t unimodular_sign(IntMatrix const& m) {
    QMatrix q = QMatrix::from_ints(m);
    if (q.rows() != q.cols()) {
      return 0;
    }
    Rational d = determinant(q);
    if (d == Rational(1)) {
      return 1;
    }
    if (d == Rational(-1)) {
      return -1;
    }
    return 0;
  }

}  // namespace mckay
