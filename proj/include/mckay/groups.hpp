#ifndef MCKAY_GROUPS_HPP_
#define MCKAY_GROUPS_HPP_

#include <array>          // for array
#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "mckay/cyclo.hpp"  // for CycloNum

namespace mckay {

  enum class Family {
    cyclic,
    binary_dihedral,
    binary_tetrahedral,
    binary_octahedral,
    binary_icosahedral
  };

  struct GroupDescriptor {
    Family   family;
    unsigned n = 0;  // only for cyclic and binary_dihedral

    // "cyclic:n", "bd:n", "2T", "2O", "2I"
    static GroupDescriptor parse(std::string_view text);
    std::string            to_string() const;
    std::size_t            expected_order() const;
    unsigned               conductor() const;

    friend bool operator==(GroupDescriptor const&, GroupDescriptor const&)
        = default;
  };

  // Row-major 2x2 matrix [[a, b], [c, d]].
  using Mat2 = std::array<CycloNum, 4>;

  Mat2     operator*(Mat2 const& x, Mat2 const& y);
  CycloNum det(Mat2 const& x);
  CycloNum trace(Mat2 const& x);
  Mat2     identity_matrix();

  struct ConjugacyClass {
    std::size_t              representative;
    std::vector<std::size_t> members;  // ascending
  };

  class MatrixGroup {
   public:
    explicit MatrixGroup(GroupDescriptor const& d);

    GroupDescriptor const& descriptor() const noexcept {
      return _desc;
    }
    std::size_t order() const noexcept {
      return _elements.size();
    }
    unsigned conductor() const noexcept {
      return _desc.conductor();
    }
    std::vector<Mat2> const& generators() const noexcept {
      return _generators;
    }
    std::vector<Mat2> const& elements() const noexcept {
      return _elements;
    }
    Mat2 const& element(std::size_t i) const {
      return _elements.at(i);
    }

    std::optional<std::size_t> index_of(Mat2 const& m) const;
    std::size_t                product(std::size_t i, std::size_t j) const;
    std::size_t                inverse(std::size_t i) const {
      return _inverse.at(i);
    }
    std::size_t element_order(std::size_t i) const {
      return _element_order.at(i);
    }
    // lcm of element orders
    std::size_t exponent() const noexcept {
      return _exponent;
    }

    std::vector<ConjugacyClass> const& classes() const noexcept {
      return _classes;
    }
    std::size_t num_classes() const noexcept {
      return _classes.size();
    }
    std::size_t class_of(std::size_t i) const {
      return _class_of.at(i);
    }
    std::size_t class_size(std::size_t k) const {
      return _classes.at(k).members.size();
    }
    std::size_t centralizer_order(std::size_t k) const {
      return order() / class_size(k);
    }
    // Class of x^{-1} for x in class k.
    std::size_t inverse_class(std::size_t k) const {
      return _class_of[_inverse[_classes.at(k).representative]];
    }
    // Class of g^m for g the representative of class k, m any integer.
    std::size_t class_power(std::size_t k, long m) const;
    // Order of the elements in class k.
    std::size_t class_element_order(std::size_t k) const {
      return _element_order[_classes.at(k).representative];
    }

    std::optional<std::size_t> minus_identity() const noexcept {
      return _minus_identity;
    }
    bool contains_minus_identity() const noexcept {
      return _minus_identity.has_value();
    }

   private:
    std::string key(Mat2 const& m) const;

    GroupDescriptor                              _desc;
    std::vector<Mat2>                            _generators;
    std::vector<Mat2>                            _elements;
    std::unordered_map<std::string, std::size_t> _index;
    std::vector<std::size_t>                     _inverse;
    std::vector<std::size_t>                     _element_order;
    std::size_t                                  _exponent = 1;
    std::vector<ConjugacyClass>                  _classes;
    std::vector<std::size_t>                     _class_of;
    // _powers[k][m] = class of rep_k^m, 0 <= m < order of rep_k
    std::vector<std::vector<std::size_t>> _powers;
    std::optional<std::size_t>            _minus_identity;
  };

  // Generator matrices at the descriptor's conductor.
  std::vector<Mat2> generators_of(GroupDescriptor const& d);

}  // namespace mckay

#endif  // MCKAY_GROUPS_HPP_
