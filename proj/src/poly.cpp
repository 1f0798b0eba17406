#include "mckay/poly.hpp"

namespace mckay {

  QPoly make_monic(QPoly const& p) {
    if (p.is_zero()) {
      return p;
    }
    return p.leading().inverse() * p;
  }

  QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
      auto r = QPoly::divmod(std::move(a), b).second;
      a      = std::move(b);
      b      = make_monic(r);
    }
    return make_monic(a);
  }

  bool has_integer_coefficients(QPoly const& p) {
    for (auto const& c : p.coeffs()) {
      if (!c.is_integer()) {
        return false;
      }
    }
    return true;
  }

  std::string to_string(QPoly const& p, char var) {
    if (p.is_zero()) {
      return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      Rational const& c = p.coeffs()[i];
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
      if (i == 0) {
        out += mag.to_short_string();
        continue;
      }
      if (!mag.is_one()) {
        out += mag.to_short_string() + "*";
      }
      out += var;
      if (i > 1) {
        out += "^" + std::to_string(i);
      }
    }
    return out;
  }

}  // namespace mckay
