#ifndef MCKAY_SERIALIZE_HPP_
#define MCKAY_SERIALIZE_HPP_

// JSON wire formats. Rationals are "p/q" strings, cyclotomic numbers are
// {"conductor": N, "coeffs": {"k": "p/q", ...}} with zero coefficients
// omitted.

#include "json.hpp"

#include "mckay/cyclo.hpp"
#include "mckay/linalg.hpp"
#include "mckay/poly.hpp"
#include "mckay/ratfunc.hpp"
#include "mckay/rational.hpp"

namespace mckay {

  using json = nlohmann::ordered_json;

  json     to_json(Rational const& r);
  Rational rational_from_json(json const& j);

  json     to_json(CycloNum const& x);
  CycloNum cyclo_from_json(json const& j);

  json to_json(QMatrix const& m);  // array of rows
  QMatrix qmatrix_from_json(json const& j);

  json to_json(QPoly const& p);  // ascending coefficient array
  json to_json(RatFunc const& f);  // {"num": [...], "den": [...], "text": ...}

}  // namespace mckay

#endif  // MCKAY_SERIALIZE_HPP_
