#include "mckay/rational.hpp"

#include <ostream>  // for ostream

#include "mckay/error.hpp"

namespace mckay {

  Rational::Rational(std::int64_t n) : _value(static_cast<long>(n)) {}

  Rational::Rational(std::int64_t num, std::int64_t den)
      : Rational(mpz_class(static_cast<long>(num)),
                 mpz_class(static_cast<long>(den))) {}

  Rational::Rational(mpz_class const& num, mpz_class const& den) {
    if (den == 0) {
      throw DivisionByZero("Rational: zero denominator");
    }
    _value = mpq_class(num, den);
    _value.canonicalize();
  }

  Rational::Rational(mpq_class q) : _value(std::move(q)) {
    _value.canonicalize();
  }

  Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto        slash = s.find('/');
    mpz_class   num, den(1);
    try {
      if (slash == std::string::npos) {
        num = mpz_class(s, 10);
      } else {
        num = mpz_class(s.substr(0, slash), 10);
        den = mpz_class(s.substr(slash + 1), 10);
      }
    } catch (std::invalid_argument const&) {
      throw PreconditionError("Rational: cannot parse '" + s + "'");
    }
    return Rational(num, den);
  }

  std::int64_t Rational::to_int64() const {
    if (!is_integer() || !_value.get_num().fits_slong_p()) {
      throw DefectError("Rational " + to_string()
                        + " is not a machine integer");
    }
    return _value.get_num().get_si();
  }

  std::string Rational::to_string() const {
    return _value.get_num().get_str() + "/" + _value.get_den().get_str();
  }

  std::string Rational::to_short_string() const {
    return is_integer() ? _value.get_num().get_str() : to_string();
  }

  Rational Rational::inverse() const {
    if (is_zero()) {
      throw DivisionByZero("Rational: inverse of zero");
    }
    return Rational(mpq_class(1 / _value));
  }

  Rational Rational::abs() const {
    return Rational(mpq_class(::abs(_value)));
  }

  Rational& Rational::operator/=(Rational const& o) {
    if (o.is_zero()) {
      throw DivisionByZero("Rational: division by zero");
    }
    _value /= o._value;
    return *this;
  }

  std::ostream& operator<<(std::ostream& os, Rational const& r) {
    return os << r.to_short_string();
  }

}  // namespace mckay
