#include "mckay/ratfunc.hpp"

#include "mckay/error.hpp"

namespace mckay {

  TruncSeries::TruncSeries(std::vector<Rational> c) : _c(std::move(c)) {
    if (_c.empty()) {
      throw PreconditionError("TruncSeries: need at least the constant term");
    }
  }

  namespace {
    void check_same_degree(TruncSeries const& a, TruncSeries const& b) {
      if (a.degree() != b.degree()) {
        throw PreconditionError("TruncSeries: truncation degrees differ");
      }
    }
  }  // namespace

  TruncSeries operator+(TruncSeries const& a, TruncSeries const& b) {
    check_same_degree(a, b);
    TruncSeries s = a;
    for (std::size_t i = 0; i <= a.degree(); ++i) {
      s[i] += b[i];
    }
    return s;
  }

  TruncSeries operator-(TruncSeries const& a, TruncSeries const& b) {
    check_same_degree(a, b);
    TruncSeries s = a;
    for (std::size_t i = 0; i <= a.degree(); ++i) {
      s[i] -= b[i];
    }
    return s;
  }

  TruncSeries operator*(TruncSeries const& a, TruncSeries const& b) {
    check_same_degree(a, b);
    TruncSeries p(a.degree());
    for (std::size_t i = 0; i <= a.degree(); ++i) {
      if (a[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; i + j <= a.degree(); ++j) {
        p[i + j] += a[i] * b[j];
      }
    }
    return p;
  }

  std::string TruncSeries::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < _c.size(); ++i) {
      out += (i ? ", " : "") + _c[i].to_short_string();
    }
    return out + "]";
  }

  TruncSeries truncate(QPoly const& p, std::size_t d) {
    TruncSeries s(d);
    for (std::size_t i = 0; i <= d; ++i) {
      s[i] = p.coeff(i);
    }
    return s;
  }

  TruncSeries series_of_ratfunc(RatFunc const& f, std::size_t d) {
    QPoly const& den = f.denominator();
    Rational     c0  = den.coeff(0);
    if (c0.is_zero()) {
      throw PreconditionError("series_of_ratfunc: pole at t = 0 in "
                              + f.to_string());
    }
    // den * s = num, solved degree by degree.
    Rational    inv = c0.inverse();
    TruncSeries s(d);
    for (std::size_t k = 0; k <= d; ++k) {
      Rational acc = f.numerator().coeff(k);
      for (std::size_t j = 1; j <= k && static_cast<int>(j) <= den.degree();
           ++j) {
        acc -= den.coeff(j) * s[k - j];
      }
      s[k] = acc * inv;
    }
    return s;
  }

}  // namespace mckay
