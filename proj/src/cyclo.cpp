#include "mckay/cyclo.hpp"

#include <array>    // for array
#include <map>      // for map
#include <memory>   // for unique_ptr
#include <mutex>    // for mutex, lock_guard, call_once
#include <numeric>  // for lcm
#include <ostream>  // for ostream

#include "mckay/error.hpp"
#include "mckay/linalg.hpp"

namespace mckay {

  namespace {
    using IntPoly = std::vector<std::int64_t>;

    // Exact division of a by the monic polynomial b.
    IntPoly divide_monic(IntPoly a, IntPoly const& b) {
      std::size_t db = b.size() - 1;
      IntPoly     q(a.size() - db);
      for (std::size_t k = q.size(); k-- > 0;) {
        std::int64_t c = a[k + db];
        q[k]           = c;
        for (std::size_t j = 0; j <= db; ++j) {
          a[k + j] -= c * b[j];
        }
      }
      for (std::size_t j = 0; j < db; ++j) {
        if (a[j] != 0) {
          throw InternalError("cyclotomic_polynomial: inexact division");
        }
      }
      return q;
    }

    std::mutex                   poly_mutex;
    std::map<unsigned, IntPoly>  poly_memo;

    IntPoly compute_cyclotomic(unsigned n) {
      IntPoly num(n + 1, 0);
      num[0] = -1;
      num[n] = 1;
      for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) {
          num = divide_monic(std::move(num), cyclotomic_polynomial(d));
        }
      }
      return num;
    }

    struct FieldData {
      unsigned phi;
      // powers[k] = zeta^k reduced mod Phi_N, 0 <= k < N.
      std::vector<IntPoly> powers;
    };

    std::array<std::once_flag, max_conductor + 1>              field_once;
    std::array<std::unique_ptr<FieldData>, max_conductor + 1> field_data;

    void check_conductor(unsigned n) {
      if (n == 0) {
        throw PreconditionError("CycloNum: conductor must be positive");
      }
      if (n > max_conductor) {
        throw ResourceError("CycloNum: conductor " + std::to_string(n)
                            + " exceeds the maximum "
                            + std::to_string(max_conductor));
      }
    }

    FieldData const& field(unsigned n) {
      check_conductor(n);
      std::call_once(field_once[n], [n] {
        auto    f   = std::make_unique<FieldData>();
        IntPoly phi = cyclotomic_polynomial(n);
        f->phi      = static_cast<unsigned>(phi.size() - 1);
        IntPoly cur(f->phi, 0);
        cur[0] = 1;
        for (unsigned k = 0; k < n; ++k) {
          f->powers.push_back(cur);
          // multiply by t, then replace t^phi by -(lower terms of Phi)
          std::int64_t top = cur.back();
          for (std::size_t i = cur.size() - 1; i > 0; --i) {
            cur[i] = cur[i - 1];
          }
          cur[0] = 0;
          for (std::size_t i = 0; i < cur.size(); ++i) {
            cur[i] -= top * phi[i];
          }
        }
        field_data[n] = std::move(f);
      });
      return *field_data[n];
    }

    std::size_t mod(std::int64_t k, unsigned n) {
      std::int64_t r = k % static_cast<std::int64_t>(n);
      return static_cast<std::size_t>(r < 0 ? r + n : r);
    }

    // Reduce a vector of coefficients of zeta^k, k arbitrary length.
    std::vector<Rational> reduce(unsigned n, std::vector<mpq_class> const& acc) {
      FieldData const&       f = field(n);
      std::vector<mpq_class> r(f.phi);
      for (std::size_t k = 0; k < acc.size(); ++k) {
        if (sgn(acc[k]) == 0) {
          continue;
        }
        std::size_t kk = k % n;
        if (kk < f.phi) {
          r[kk] += acc[k];
          continue;
        }
        IntPoly const& p = f.powers[kk];
        for (std::size_t m = 0; m < f.phi; ++m) {
          if (p[m] != 0) {
            r[m] += acc[k] * static_cast<long>(p[m]);
          }
        }
      }
      std::vector<Rational> out;
      out.reserve(f.phi);
      for (auto& x : r) {
        out.emplace_back(std::move(x));
      }
      return out;
    }
  }  // namespace

  unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        while (n % p == 0) {
          n /= p;
        }
        result -= result / p;
      }
    }
    if (n > 1) {
      result -= result / n;
    }
    return result;
  }

  std::vector<std::int64_t> cyclotomic_polynomial(unsigned n) {
    if (n == 0) {
      throw PreconditionError("cyclotomic_polynomial: n must be positive");
    }
    {
      std::lock_guard<std::mutex> lock(poly_mutex);
      auto                        it = poly_memo.find(n);
      if (it != poly_memo.end()) {
        return it->second;
      }
    }
    IntPoly p = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(poly_mutex);
    poly_memo.emplace(n, p);
    return p;
  }

  unsigned lcm_conductor(unsigned a, unsigned b) {
    unsigned l = std::lcm(a, b);
    check_conductor(l);
    return l;
  }

  ////////////////////////////////////////////////////////////////////////
  // CycloNum
  ////////////////////////////////////////////////////////////////////////

  CycloNum::CycloNum() : _n(1), _c(1) {}

  CycloNum::CycloNum(Rational r) : _n(1), _c{std::move(r)} {}

  CycloNum::CycloNum(std::int64_t n) : _n(1), _c{Rational(n)} {}

  CycloNum CycloNum::zeta(unsigned n, std::int64_t k) {
    FieldData const&      f = field(n);
    IntPoly const&        p = f.powers[mod(k, n)];
    std::vector<Rational> c(p.begin(), p.end());
    return CycloNum(n, std::move(c));
  }

  CycloNum CycloNum::from_exponents(unsigned n, std::vector<Rational> const& c) {
    std::vector<mpq_class> acc;
    acc.reserve(c.size());
    for (auto const& x : c) {
      acc.push_back(x.value());
    }
    return CycloNum(n, reduce(n, acc));
  }

  bool CycloNum::is_zero() const {
    for (auto const& x : _c) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < _c.size(); ++i) {
      if (!_c[i].is_zero()) {
        return false;
      }
    }
    return true;
  }

  Rational CycloNum::to_rational() const {
    if (!is_rational()) {
      throw DefectError("CycloNum: " + to_string() + " is not rational");
    }
    return _c[0];
  }

  CycloNum CycloNum::lift(unsigned m) const {
    check_conductor(m);
    if (m % _n != 0) {
      throw PreconditionError("CycloNum::lift: conductor " + std::to_string(_n)
                              + " does not divide " + std::to_string(m));
    }
    if (m == _n) {
      return *this;
    }
    unsigned               step = m / _n;
    std::vector<mpq_class> acc(static_cast<std::size_t>(_c.size() - 1) * step + 1);
    for (std::size_t k = 0; k < _c.size(); ++k) {
      acc[k * step] = _c[k].value();
    }
    return CycloNum(m, reduce(m, acc));
  }

  CycloNum CycloNum::conj() const {
    std::vector<mpq_class> acc(_n);
    for (std::size_t k = 0; k < _c.size(); ++k) {
      acc[(_n - k) % _n] += _c[k].value();
    }
    return CycloNum(_n, reduce(_n, acc));
  }

  CycloNum CycloNum::inverse() const {
    if (is_zero()) {
      throw DivisionByZero("CycloNum: inverse of zero");
    }
    if (is_rational()) {
      return CycloNum(_n, [this] {
        std::vector<Rational> c(_c.size());
        c[0] = _c[0].inverse();
        return c;
      }());
    }
    // Column m of the multiplication-by-this matrix is this * zeta^m.
    std::size_t phi = _c.size();
    QMatrix     mult(phi, phi);
    for (std::size_t m = 0; m < phi; ++m) {
      CycloNum col = *this * zeta(_n, static_cast<std::int64_t>(m));
      for (std::size_t r = 0; r < phi; ++r) {
        mult(r, m) = col._c[r];
      }
    }
    QMatrix e0(phi, 1);
    e0(0, 0) = 1;
    auto x   = solve(mult, e0);
    if (!x) {
      throw InternalError("CycloNum: singular multiplication matrix");
    }
    std::vector<Rational> c(phi);
    for (std::size_t r = 0; r < phi; ++r) {
      c[r] = (*x)(r, 0);
    }
    return CycloNum(_n, std::move(c));
  }

  CycloNum& CycloNum::operator+=(CycloNum const& o) {
    if (o._n == _n) {
      for (std::size_t i = 0; i < _c.size(); ++i) {
        _c[i] += o._c[i];
      }
      return *this;
    }
    unsigned l = lcm_conductor(_n, o._n);
    if (l != _n) {
      *this = lift(l);
    }
    return *this += o.lift(l);
  }

  CycloNum& CycloNum::operator-=(CycloNum const& o) {
    return *this += -o;
  }

  CycloNum operator*(CycloNum const& a, CycloNum const& b) {
    if (a._n != b._n) {
      unsigned l = lcm_conductor(a._n, b._n);
      return a.lift(l) * b.lift(l);
    }
    unsigned n = a._n;
    if (b.is_rational()) {
      std::vector<Rational> c = a._c;
      for (auto& x : c) {
        x *= b._c[0];
      }
      return CycloNum(n, std::move(c));
    }
    if (a.is_rational()) {
      return b * a;
    }
    std::vector<mpq_class> acc(2 * a._c.size() - 1);
    for (std::size_t i = 0; i < a._c.size(); ++i) {
      if (a._c[i].is_zero()) {
        continue;
      }
      mpq_class const& x = a._c[i].value();
      for (std::size_t j = 0; j < b._c.size(); ++j) {
        if (!b._c[j].is_zero()) {
          acc[i + j] += x * b._c[j].value();
        }
      }
    }
    return CycloNum(n, reduce(n, acc));
  }

  CycloNum& CycloNum::operator*=(CycloNum const& o) {
    return *this = *this * o;
  }

  CycloNum& CycloNum::operator/=(CycloNum const& o) {
    if (o.is_zero()) {
      throw DivisionByZero("CycloNum: division by zero");
    }
    return *this = *this * o.inverse();
  }

  CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& x : r._c) {
      x = -x;
    }
    return r;
  }

  bool operator==(CycloNum const& a, CycloNum const& b) {
    if (a._n == b._n) {
      return a._c == b._c;
    }
    if (a.is_rational() && b.is_rational()) {
      return a._c[0] == b._c[0];
    }
    unsigned l = lcm_conductor(a._n, b._n);
    return a.lift(l)._c == b.lift(l)._c;
  }

  std::string CycloNum::to_string() const {
    std::string out;
    std::string z = "z" + std::to_string(_n);
    for (std::size_t k = 0; k < _c.size(); ++k) {
      Rational const& c = _c[k];
      if (c.is_zero()) {
        continue;
      }
      bool     negative = c.sign() < 0;
      Rational mag      = c.abs();
      if (out.empty()) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      if (k == 0) {
        out += mag.to_short_string();
        continue;
      }
      if (!mag.is_one()) {
        out += mag.to_short_string() + "*";
      }
      out += z;
      if (k > 1) {
        out += "^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }

  std::ostream& operator<<(std::ostream& os, CycloNum const& x) {
    return os << x.to_string();
  }

  int compare_coefficients(CycloNum const& a, CycloNum const& b) {
    unsigned l  = lcm_conductor(a.conductor(), b.conductor());
    CycloNum la = a.lift(l), lb = b.lift(l);
    for (std::size_t i = 0; i < la.coeffs().size(); ++i) {
      auto c = la.coeffs()[i] <=> lb.coeffs()[i];
      if (c != 0) {
        return c < 0 ? -1 : 1;
      }
    }
    return 0;
  }

}  // namespace mckay
