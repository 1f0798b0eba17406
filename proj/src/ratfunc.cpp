#include "mckay/ratfunc.hpp"

#include "mckay/error.hpp"

namespace mckay {

  RatFunc::RatFunc(QPoly num, QPoly den) {
    if (den.is_zero()) {
      throw DivisionByZero("RatFunc: zero denominator");
    }
    if (num.is_zero()) {
      _num = QPoly();
      _den = QPoly::constant(1);
      return;
    }
    QPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = QPoly::divmod(std::move(num), g).first;
      den = QPoly::divmod(std::move(den), g).first;
    }
    Rational s = den.leading().inverse();
    _num       = s * std::move(num);
    _den       = s * std::move(den);
  }

  RatFunc& RatFunc::operator+=(RatFunc const& o) {
    if (_den == o._den) {
      return *this = RatFunc(_num + o._num, _den);
    }
    return *this = RatFunc(_num * o._den + o._num * _den, _den * o._den);
  }

  RatFunc& RatFunc::operator-=(RatFunc const& o) {
    return *this += -o;
  }

  RatFunc& RatFunc::operator*=(RatFunc const& o) {
    return *this = RatFunc(_num * o._num, _den * o._den);
  }

  RatFunc& RatFunc::operator/=(RatFunc const& o) {
    if (o.is_zero()) {
      throw DivisionByZero("RatFunc: division by zero");
    }
    return *this = RatFunc(_num * o._den, _den * o._num);
  }

  RatFunc RatFunc::negate_variable() const {
    return RatFunc(_num.negate_variable(), _den.negate_variable());
  }

  std::string RatFunc::to_string() const {
    if (_den.degree() == 0) {
      return mckay::to_string(_num);
    }
    return "(" + mckay::to_string(_num) + ")/(" + mckay::to_string(_den) + ")";
  }

}  // namespace mckay
