#include "mckay/groups.hpp"

#include <algorithm>  // for sort
#include <charconv>   // for from_chars
#include <deque>      // for deque
#include <numeric>    // for lcm

#include "mckay/error.hpp"

namespace mckay {

  ////////////////////////////////////////////////////////////////////////
  // GroupDescriptor
  ////////////////////////////////////////////////////////////////////////

  namespace {
    unsigned parse_parameter(std::string_view text, std::string_view whole) {
      unsigned n   = 0;
      auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
      if (ec != std::errc() || p != text.data() + text.size() || n == 0) {
        throw PreconditionError("bad group descriptor '" + std::string(whole)
                                + "': expected a positive integer parameter");
      }
      return n;
    }
  }  // namespace

  GroupDescriptor GroupDescriptor::parse(std::string_view text) {
    if (text == "2T") {
      return {Family::binary_tetrahedral, 0};
    } else if (text == "2O") {
      return {Family::binary_octahedral, 0};
    } else if (text == "2I") {
      return {Family::binary_icosahedral, 0};
    } else if (text.starts_with("cyclic:")) {
      return {Family::cyclic, parse_parameter(text.substr(7), text)};
    } else if (text.starts_with("bd:")) {
      return {Family::binary_dihedral, parse_parameter(text.substr(3), text)};
    }
    throw PreconditionError("bad group descriptor '" + std::string(text)
                            + "': expected cyclic:n, bd:n, 2T, 2O or 2I");
  }

  std::string GroupDescriptor::to_string() const {
    switch (family) {
      case Family::cyclic:
        return "cyclic:" + std::to_string(n);
      case Family::binary_dihedral:
        return "bd:" + std::to_string(n);
      case Family::binary_tetrahedral:
        return "2T";
      case Family::binary_octahedral:
        return "2O";
      case Family::binary_icosahedral:
        return "2I";
    }
    return "?";
  }

  std::size_t GroupDescriptor::expected_order() const {
    switch (family) {
      case Family::cyclic:
        return n;
      case Family::binary_dihedral:
        return 4 * static_cast<std::size_t>(n);
      case Family::binary_tetrahedral:
        return 24;
      case Family::binary_octahedral:
        return 48;
      case Family::binary_icosahedral:
        return 120;
    }
    return 0;
  }

  unsigned GroupDescriptor::conductor() const {
    switch (family) {
      case Family::cyclic:
        return n % 2 == 0 ? 2 * n : n;
      case Family::binary_dihedral:
        return 4 * n;
      case Family::binary_tetrahedral:
      case Family::binary_octahedral:
        return 8;
      case Family::binary_icosahedral:
        return 20;
    }
    return 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // Mat2
  ////////////////////////////////////////////////////////////////////////

  Mat2 operator*(Mat2 const& x, Mat2 const& y) {
    return {x[0] * y[0] + x[1] * y[2],
            x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
  }

  CycloNum det(Mat2 const& x) {
    return x[0] * x[3] - x[1] * x[2];
  }

  CycloNum trace(Mat2 const& x) {
    return x[0] + x[3];
  }

  Mat2 identity_matrix() {
    return {CycloNum(1), CycloNum(0), CycloNum(0), CycloNum(1)};
  }

  std::vector<Mat2> generators_of(GroupDescriptor const& d) {
    unsigned N = d.conductor();
    // zeta_m^k written at conductor N
    auto z = [N](unsigned m, long k) {
      return CycloNum::zeta(N, k * static_cast<long>(N / m));
    };
    auto diag = [](CycloNum a, CycloNum b) {
      return Mat2{std::move(a), CycloNum(0), CycloNum(0), std::move(b)};
    };
    Mat2 const        flip{CycloNum(0), CycloNum(1), CycloNum(-1), CycloNum(0)};
    std::vector<Mat2> gens;
    switch (d.family) {
      case Family::cyclic:
        gens.push_back(diag(z(d.n, 1), z(d.n, -1)));
        break;
      case Family::binary_dihedral:
        gens.push_back(diag(z(2 * d.n, 1), z(2 * d.n, -1)));
        gens.push_back(flip);
        break;
      case Family::binary_octahedral:
      case Family::binary_tetrahedral: {
        CycloNum i    = z(4, 1);
        CycloNum half = CycloNum(Rational(1, 2));
        CycloNum one  = CycloNum(1);
        gens.push_back(diag(i, -i));
        gens.push_back(flip);
        gens.push_back(Mat2{half * (one + i),
                            half * (one + i),
                            half * (i - one),
                            half * (one - i)});
        if (d.family == Family::binary_octahedral) {
          gens.push_back(diag(z(8, 1), z(8, -1)));
        }
        break;
      }
      case Family::binary_icosahedral: {
        // Klein's generators with eps = zeta_5
        auto     eps   = [&z](long k) { return z(5, k); };
        CycloNum root5 = eps(1) + eps(4) - eps(2) - eps(3);
        CycloNum inv5  = root5.inverse();
        CycloNum a     = eps(1) - eps(4);
        CycloNum b     = eps(2) - eps(3);
        gens.push_back(diag(eps(3), eps(2)));
        gens.push_back(Mat2{-a * inv5, b * inv5, b * inv5, a * inv5});
        break;
      }
    }
    for (auto& g : gens) {
      for (auto& x : g) {
        x = x.lift(N);
      }
    }
    return gens;
  }

  ////////////////////////////////////////////////////////////////////////
  // MatrixGroup
  ////////////////////////////////////////////////////////////////////////

  std::string MatrixGroup::key(Mat2 const& m) const {
    std::string k;
    for (auto const& x : m) {
      CycloNum y = x.conductor() == conductor() ? x : x.lift(conductor());
      for (auto const& c : y.coeffs()) {
        k += c.to_string();
        k += ',';
      }
      k += ';';
    }
    return k;
  }

  MatrixGroup::MatrixGroup(GroupDescriptor const& d)
      : _desc(d), _generators(generators_of(d)) {
    std::size_t const expected = d.expected_order();
    for (auto const& g : _generators) {
      if (det(g) != CycloNum(1)) {
        throw InternalError("generator of " + d.to_string()
                            + " does not have determinant 1");
      }
    }

    // Breadth-first closure, right multiplying by generators.
    Mat2 id = identity_matrix();
    for (auto& x : id) {
      x = x.lift(conductor());
    }
    _elements.push_back(id);
    _index.emplace(key(id), 0);
    for (std::size_t head = 0; head < _elements.size(); ++head) {
      for (auto const& g : _generators) {
        Mat2 y = _elements[head] * g;
        auto k = key(y);
        if (_index.contains(k)) {
          continue;
        }
        _index.emplace(std::move(k), _elements.size());
        _elements.push_back(std::move(y));
        if (_elements.size() > 2 * expected) {
          throw InternalError("generators of " + d.to_string()
                              + " generate more than twice the expected "
                                "order "
                              + std::to_string(expected));
        }
      }
    }
    if (_elements.size() != expected) {
      throw InternalError("generators of " + d.to_string() + " generate "
                          + std::to_string(_elements.size())
                          + " elements, expected " + std::to_string(expected));
    }

    // Inverses via the adjugate (det = 1).
    _inverse.resize(order());
    for (std::size_t i = 0; i < order(); ++i) {
      Mat2 const& m = _elements[i];
      auto        j = index_of(Mat2{m[3], -m[1], -m[2], m[0]});
      if (!j) {
        throw DefectError("inverse of element " + std::to_string(i)
                          + " is not in the group");
      }
      _inverse[i] = *j;
    }

    // Element orders.
    _element_order.resize(order());
    for (std::size_t i = 0; i < order(); ++i) {
      std::size_t m = 1;
      for (std::size_t x = i; x != 0; x = product(x, i)) {
        if (++m > 2 * expected) {
          throw DefectError("element " + std::to_string(i)
                            + " has no finite order");
        }
      }
      _element_order[i] = m;
      _exponent         = std::lcm(_exponent, _element_order[i]);
    }

    // Conjugacy classes: orbits under conjugation by the generators.
    std::vector<std::size_t> gen_index, gen_inverse;
    for (auto const& g : _generators) {
      gen_index.push_back(*index_of(g));
      gen_inverse.push_back(_inverse[gen_index.back()]);
    }
    std::size_t const unassigned = static_cast<std::size_t>(-1);
    _class_of.assign(order(), unassigned);
    for (std::size_t i = 0; i < order(); ++i) {
      if (_class_of[i] != unassigned) {
        continue;
      }
      std::size_t             k = _classes.size();
      ConjugacyClass          c{i, {i}};
      std::deque<std::size_t> todo{i};
      _class_of[i] = k;
      while (!todo.empty()) {
        std::size_t x = todo.front();
        todo.pop_front();
        for (std::size_t g = 0; g < gen_index.size(); ++g) {
          std::size_t y = product(product(gen_inverse[g], x), gen_index[g]);
          if (_class_of[y] == unassigned) {
            _class_of[y] = k;
            c.members.push_back(y);
            todo.push_back(y);
          }
        }
      }
      std::sort(c.members.begin(), c.members.end());
      _classes.push_back(std::move(c));
    }

    // Power maps on class representatives.
    for (auto const& c : _classes) {
      std::vector<std::size_t> pw{0};
      for (std::size_t x = c.representative; x != 0;
           x             = product(x, c.representative)) {
        pw.push_back(_class_of[x]);
      }
      _powers.push_back(std::move(pw));
    }

    Mat2 minus = id;
    for (auto& x : minus) {
      x = -x;
    }
    _minus_identity = index_of(minus);
  }

  std::optional<std::size_t> MatrixGroup::index_of(Mat2 const& m) const {
    auto it = _index.find(key(m));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t MatrixGroup::product(std::size_t i, std::size_t j) const {
    auto k = index_of(_elements.at(i) * _elements.at(j));
    if (!k) {
      throw DefectError("product of elements " + std::to_string(i) + " and "
                        + std::to_string(j) + " is not in the group");
    }
    return *k;
  }

  std::size_t MatrixGroup::class_power(std::size_t k, long m) const {
    auto const& pw = _powers.at(k);
    long        o  = static_cast<long>(pw.size());
    long        r  = m % o;
    return pw[static_cast<std::size_t>(r < 0 ? r + o : r)];
  }

}  // namespace mckay
