#ifndef MCKAY_POLY_HPP_
#define MCKAY_POLY_HPP_

#include <cstddef>   // for size_t
#include <string>    // for string
#include <utility>   // for pair, move
#include <vector>    // for vector

#include "mckay/error.hpp"     // for DivisionByZero
#include "mckay/rational.hpp"  // for Rational

namespace mckay {

  // Dense univariate polynomial in t, coefficients in ascending degree.
  //
  // R must be a commutative ring with R() == 0, construction from int,
  // +, -, *, ==, and is_zero(). divmod additionally needs R / R for the
  // leading coefficient of the divisor.
  template <typename R>
  class Poly {
   public:
    Poly() = default;

    explicit Poly(std::vector<R> coeffs) : _coeffs(std::move(coeffs)) {
      trim();
    }

    static Poly constant(R c) {
      return Poly(std::vector<R>{std::move(c)});
    }

    static Poly monomial(R c, std::size_t degree) {
      std::vector<R> v(degree + 1);
      v[degree] = std::move(c);
      return Poly(std::move(v));
    }

    // -1 for the zero polynomial.
    int degree() const noexcept {
      return static_cast<int>(_coeffs.size()) - 1;
    }

    bool is_zero() const noexcept {
      return _coeffs.empty();
    }

    R coeff(std::size_t i) const {
      return i < _coeffs.size() ? _coeffs[i] : R();
    }

    R const& leading() const {
      if (_coeffs.empty()) {
        throw DivisionByZero("Poly: leading coefficient of zero");
      }
      return _coeffs.back();
    }

    std::vector<R> const& coeffs() const noexcept {
      return _coeffs;
    }

    Poly& operator+=(Poly const& o) {
      if (o._coeffs.size() > _coeffs.size()) {
        _coeffs.resize(o._coeffs.size());
      }
      for (std::size_t i = 0; i < o._coeffs.size(); ++i) {
        _coeffs[i] += o._coeffs[i];
      }
      trim();
      return *this;
    }

    Poly& operator-=(Poly const& o) {
      if (o._coeffs.size() > _coeffs.size()) {
        _coeffs.resize(o._coeffs.size());
      }
      for (std::size_t i = 0; i < o._coeffs.size(); ++i) {
        _coeffs[i] -= o._coeffs[i];
      }
      trim();
      return *this;
    }

    friend Poly operator+(Poly a, Poly const& b) {
      return a += b;
    }
    friend Poly operator-(Poly a, Poly const& b) {
      return a -= b;
    }

    Poly operator-() const {
      Poly r = *this;
      for (auto& c : r._coeffs) {
        c = -c;
      }
      return r;
    }

    friend Poly operator*(Poly const& a, Poly const& b) {
      if (a.is_zero() || b.is_zero()) {
        return Poly();
      }
      std::vector<R> v(a._coeffs.size() + b._coeffs.size() - 1);
      for (std::size_t i = 0; i < a._coeffs.size(); ++i) {
        if (a._coeffs[i].is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < b._coeffs.size(); ++j) {
          v[i + j] += a._coeffs[i] * b._coeffs[j];
        }
      }
      return Poly(std::move(v));
    }

    Poly& operator*=(Poly const& o) {
      return *this = *this * o;
    }

    friend Poly operator*(R const& c, Poly p) {
      for (auto& x : p._coeffs) {
        x = c * x;
      }
      p.trim();
      return p;
    }

    friend bool operator==(Poly const& a, Poly const& b) {
      return a._coeffs == b._coeffs;
    }

    // p(t) -> p(-t)
    Poly negate_variable() const {
      Poly r = *this;
      for (std::size_t i = 1; i < r._coeffs.size(); i += 2) {
        r._coeffs[i] = -r._coeffs[i];
      }
      return r;
    }

    R evaluate(R const& x) const {
      R acc;
      for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it) {
        acc = acc * x + *it;
      }
      return acc;
    }

    // Quotient and remainder with deg(remainder) < deg(divisor).
    static std::pair<Poly, Poly> divmod(Poly a, Poly const& b) {
      if (b.is_zero()) {
        throw DivisionByZero("Poly: division by the zero polynomial");
      }
      if (a.degree() < b.degree()) {
        return {Poly(), std::move(a)};
      }
      R const        lead = b.leading();
      std::size_t    db   = static_cast<std::size_t>(b.degree());
      std::vector<R> q(a._coeffs.size() - db);
      std::vector<R> r = std::move(a._coeffs);
      for (std::size_t k = q.size(); k-- > 0;) {
        R c = r[k + db] / lead;
        if (c.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
          r[k + j] -= c * b._coeffs[j];
        }
        q[k] = std::move(c);
      }
      r.resize(db);
      return {Poly(std::move(q)), Poly(std::move(r))};
    }

   private:
    void trim() {
      while (!_coeffs.empty() && _coeffs.back().is_zero()) {
        _coeffs.pop_back();
      }
    }

    std::vector<R> _coeffs;
  };

  using QPoly = Poly<Rational>;

  // Monic gcd; gcd(0, 0) = 0.
  QPoly gcd(QPoly a, QPoly b);

  QPoly make_monic(QPoly const& p);

  bool has_integer_coefficients(QPoly const& p);

  // Human readable form, e.g. "1 - 2*t + t^2".
  std::string to_string(QPoly const& p, char var = 't');

}  // namespace mckay

#endif  // MCKAY_POLY_HPP_
