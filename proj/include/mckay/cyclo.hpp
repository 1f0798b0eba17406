#ifndef MCKAY_CYCLO_HPP_
#define MCKAY_CYCLO_HPP_

#include <cstdint>  // for int64_t
#include <iosfwd>   // for ostream
#include <string>   // for string
#include <vector>   // for vector

#include "mckay/rational.hpp"  // for Rational

namespace mckay {

  // Largest conductor CycloNum will work in; beyond this a ResourceError is
  // thrown. 2I needs 20.
  inline constexpr unsigned max_conductor = 120;

  unsigned euler_phi(unsigned n);

  // Coefficients of Phi_n in ascending degree.
  std::vector<std::int64_t> cyclotomic_polynomial(unsigned n);

  // Element of Q(zeta_N) written in the power basis 1, z, ..., z^(phi(N)-1)
  // modulo Phi_N, where z = exp(2 pi i / N).
  class CycloNum {
   public:
    // Zero, conductor 1.
    CycloNum();
    CycloNum(Rational r);      // NOLINT(runtime/explicit)
    CycloNum(std::int64_t n);  // NOLINT(runtime/explicit)
    CycloNum(int n) : CycloNum(static_cast<std::int64_t>(n)) {}  // NOLINT

    // zeta_N^k, any integer k.
    static CycloNum zeta(unsigned n, std::int64_t k = 1);

    // Sum of c[k] zeta_N^k; c may be longer than phi(N).
    static CycloNum from_exponents(unsigned n, std::vector<Rational> const& c);

    unsigned conductor() const noexcept {
      return _n;
    }
    // Length phi(conductor).
    std::vector<Rational> const& coeffs() const noexcept {
      return _c;
    }

    bool     is_zero() const;
    bool     is_rational() const;
    Rational to_rational() const;  // throws DefectError if not rational

    // Same number written at conductor m; n must divide m.
    CycloNum lift(unsigned m) const;

    // Complex conjugate.
    CycloNum conj() const;
    CycloNum inverse() const;

    CycloNum& operator+=(CycloNum const& o);
    CycloNum& operator-=(CycloNum const& o);
    CycloNum& operator*=(CycloNum const& o);
    CycloNum& operator/=(CycloNum const& o);

    friend CycloNum operator+(CycloNum a, CycloNum const& b) {
      return a += b;
    }
    friend CycloNum operator-(CycloNum a, CycloNum const& b) {
      return a -= b;
    }
    friend CycloNum operator*(CycloNum const& a, CycloNum const& b);
    friend CycloNum operator/(CycloNum a, CycloNum const& b) {
      return a /= b;
    }
    CycloNum operator-() const;

    friend bool operator==(CycloNum const& a, CycloNum const& b);

    // e.g. "1/2 + 3*z8 - z8^3"; "0" for zero.
    std::string to_string() const;

   private:
    CycloNum(unsigned n, std::vector<Rational> c) : _n(n), _c(std::move(c)) {}

    unsigned              _n;
    std::vector<Rational> _c;
  };

  std::ostream& operator<<(std::ostream& os, CycloNum const& x);

  // Lexicographic order of coefficient vectors at the common conductor. Only
  // meant for canonical sorting, not a field order.
  int compare_coefficients(CycloNum const& a, CycloNum const& b);

  unsigned lcm_conductor(unsigned a, unsigned b);

}  // namespace mckay

#endif  // MCKAY_CYCLO_HPP_
