#include "mckay/serialize.hpp"

#include <string>  // for string, stoul

#include "mckay/error.hpp"

namespace mckay {

  json to_json(Rational const& r) {
    return r.to_string();
  }

  Rational rational_from_json(json const& j) {
    if (!j.is_string()) {
      throw PreconditionError("expected a \"p/q\" string, got " + j.dump());
    }
    return Rational::parse(j.get<std::string>());
  }

  json to_json(CycloNum const& x) {
    json coeffs = json::object();
    for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
      if (!x.coeffs()[k].is_zero()) {
        coeffs[std::to_string(k)] = to_json(x.coeffs()[k]);
      }
    }
    return json{{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
  }

  CycloNum cyclo_from_json(json const& j) {
    try {
      unsigned              n = j.at("conductor").get<unsigned>();
      std::vector<Rational> c(euler_phi(n));
      for (auto const& [k, v] : j.at("coeffs").items()) {
        std::size_t e = std::stoul(k);
        if (e >= c.size()) {
          throw PreconditionError("CycloNum exponent " + k
                                  + " out of range for conductor "
                                  + std::to_string(n));
        }
        c[e] = rational_from_json(v);
      }
      return CycloNum::from_exponents(n, c);
    } catch (nlohmann::json::exception const& e) {
      throw PreconditionError(std::string("malformed CycloNum: ") + e.what());
    } catch (std::logic_error const& e) {
      throw PreconditionError(std::string("malformed CycloNum: ") + e.what());
    }
  }

  json to_json(QMatrix const& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(to_json(m(r, c)));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  QMatrix qmatrix_from_json(json const& j) {
    if (!j.is_array()) {
      throw PreconditionError("matrix must be an array of rows");
    }
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j[0].size();
    QMatrix     m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!j[r].is_array() || j[r].size() != cols) {
        throw PreconditionError("matrix rows must be arrays of equal length");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = rational_from_json(j[r][c]);
      }
    }
    return m;
  }

  json to_json(QPoly const& p) {
    json a = json::array();
    for (auto const& c : p.coeffs()) {
      a.push_back(to_json(c));
    }
    return a;
  }

  json to_json(RatFunc const& f) {
    return json{{"num", to_json(f.numerator())},
                {"den", to_json(f.denominator())},
                {"text", f.to_string()}};
  }

}  // namespace mckay
