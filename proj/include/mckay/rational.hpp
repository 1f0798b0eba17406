#ifndef MCKAY_RATIONAL_HPP_
#define MCKAY_RATIONAL_HPP_

#include <compare>      // for strong_ordering
#include <cstdint>      // for int64_t
#include <iosfwd>       // for ostream
#include <string>       // for string
#include <string_view>  // for string_view

#include <gmpxx.h>

namespace mckay {

  // Arbitrary precision rational number, always kept in lowest terms with a
  // positive denominator.
  class Rational {
   public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(runtime/explicit)
    Rational(std::int64_t num, std::int64_t den);
    Rational(mpz_class const& num, mpz_class const& den);
    explicit Rational(mpq_class q);

    // Accepts "p", "-p" and "p/q".
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return _value.get_num(); }
    mpz_class denominator() const { return _value.get_den(); }
    mpq_class const& value() const noexcept { return _value; }

    bool is_zero() const noexcept { return sgn(_value) == 0; }
    bool is_one() const noexcept { return _value == 1; }
    bool is_integer() const noexcept { return _value.get_den() == 1; }
    int  sign() const noexcept { return sgn(_value); }

    // Throws DefectError if not an integer or out of range.
    std::int64_t to_int64() const;

    // Canonical "p/q" form; the denominator is always written.
    std::string to_string() const;
    // "p" for integers, "p/q" otherwise.
    std::string to_short_string() const;

    Rational inverse() const;
    Rational abs() const;

    Rational& operator+=(Rational const& o) {
      _value += o._value;
      return *this;
    }
    Rational& operator-=(Rational const& o) {
      _value -= o._value;
      return *this;
    }
    Rational& operator*=(Rational const& o) {
      _value *= o._value;
      return *this;
    }
    Rational& operator/=(Rational const& o);

    friend Rational operator+(Rational a, Rational const& b) {
      return a += b;
    }
    friend Rational operator-(Rational a, Rational const& b) {
      return a -= b;
    }
    friend Rational operator*(Rational a, Rational const& b) {
      return a *= b;
    }
    friend Rational operator/(Rational a, Rational const& b) {
      return a /= b;
    }
    Rational operator-() const {
      return Rational(mpq_class(-_value));
    }

    friend bool operator==(Rational const& a, Rational const& b) {
      return a._value == b._value;
    }
    friend std::strong_ordering operator<=>(Rational const& a,
                                            Rational const& b) {
      int c = cmp(a._value, b._value);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater
                            : std::strong_ordering::equal);
    }

   private:
    mpq_class _value;
  };

  std::ostream& operator<<(std::ostream& os, Rational const& r);

}  // namespace mckay

#endif  // MCKAY_RATIONAL_HPP_
