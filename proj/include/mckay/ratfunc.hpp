#ifndef MCKAY_RATFUNC_HPP_
#define MCKAY_RATFUNC_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string

#include "mckay/poly.hpp"      // for QPoly
#include "mckay/rational.hpp"  // for Rational

namespace mckay {

  class TruncSeries;

  // num/den with den monic and gcd(num, den) = 1.
  class RatFunc {
   public:
    RatFunc() : _num(), _den(QPoly::constant(1)) {}
    RatFunc(Rational c)  // NOLINT(runtime/explicit)
        : _num(QPoly::constant(std::move(c))), _den(QPoly::constant(1)) {}
    explicit RatFunc(QPoly num) : _num(std::move(num)), _den(QPoly::constant(1)) {}
    RatFunc(QPoly num, QPoly den);

    QPoly const& numerator() const noexcept {
      return _num;
    }
    QPoly const& denominator() const noexcept {
      return _den;
    }
    bool is_zero() const noexcept {
      return _num.is_zero();
    }

    RatFunc& operator+=(RatFunc const& o);
    RatFunc& operator-=(RatFunc const& o);
    RatFunc& operator*=(RatFunc const& o);
    RatFunc& operator/=(RatFunc const& o);

    friend RatFunc operator+(RatFunc a, RatFunc const& b) {
      return a += b;
    }
    friend RatFunc operator-(RatFunc a, RatFunc const& b) {
      return a -= b;
    }
    friend RatFunc operator*(RatFunc a, RatFunc const& b) {
      return a *= b;
    }
    friend RatFunc operator/(RatFunc a, RatFunc const& b) {
      return a /= b;
    }
    RatFunc operator-() const {
      return RatFunc(-_num, _den, true);
    }

    friend bool operator==(RatFunc const& a, RatFunc const& b) {
      return a._num == b._num && a._den == b._den;
    }

    // f(t) -> f(-t)
    RatFunc negate_variable() const;

    std::string to_string() const;

   private:
    RatFunc(QPoly num, QPoly den, bool) : _num(std::move(num)), _den(std::move(den)) {}
    QPoly _num;
    QPoly _den;
  };

  // Coefficients of degrees 0..D.
  class TruncSeries {
   public:
    explicit TruncSeries(std::size_t degree) : _c(degree + 1) {}
    TruncSeries(std::vector<Rational> c);  // NOLINT(runtime/explicit)

    std::size_t degree() const noexcept {
      return _c.size() - 1;
    }
    Rational const& operator[](std::size_t i) const {
      return _c[i];
    }
    Rational& operator[](std::size_t i) {
      return _c[i];
    }
    std::vector<Rational> const& coeffs() const noexcept {
      return _c;
    }

    // Both operands must have the same degree.
    friend TruncSeries operator+(TruncSeries const& a, TruncSeries const& b);
    friend TruncSeries operator-(TruncSeries const& a, TruncSeries const& b);
    friend TruncSeries operator*(TruncSeries const& a, TruncSeries const& b);
    friend bool operator==(TruncSeries const& a, TruncSeries const& b) = default;

    std::string to_string() const;

   private:
    std::vector<Rational> _c;
  };

  // Maclaurin expansion through degree d. PreconditionError on a pole at 0.
  TruncSeries series_of_ratfunc(RatFunc const& f, std::size_t d);

  TruncSeries truncate(QPoly const& p, std::size_t d);

}  // namespace mckay

#endif  // MCKAY_RATFUNC_HPP_
