#ifndef MCKAY_HEIGHTS_HPP_
#define MCKAY_HEIGHTS_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for int64_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "mckay/mckaygraph.hpp"  // for IntMatrix, McKayGraph
#include "mckay/molien.hpp"      // for HomDims

namespace mckay {

  struct Arrow {
    std::size_t  from;
    std::size_t  to;
    std::int64_t multiplicity;
    friend bool  operator==(Arrow const&, Arrow const&) = default;
  };

  // Orientation of a McKay graph; parallel edges are one Arrow with a
  // multiplicity.
  struct OrientedQuiver {
    std::size_t        num_vertices = 0;
    std::vector<Arrow> arrows;

    std::vector<std::size_t> sinks() const;
    std::vector<std::size_t> sources() const;
    bool                     is_sink(std::size_t i) const;
    bool                     is_source(std::size_t i) const;
  };

  enum class FlipDirection { plus, minus };

  // Integer labelling h of the vertices with h = parity mod 2 and h changing
  // by exactly one along every edge. Carries its graph and parity.
  class HeightFunction {
   public:
    HeightFunction(IntMatrix n, std::vector<int> parity,
                   std::vector<std::int64_t> h);

    std::vector<std::int64_t> const& values() const noexcept {
      return _h;
    }
    std::int64_t operator[](std::size_t i) const {
      return _h.at(i);
    }
    std::size_t size() const noexcept {
      return _h.size();
    }
    IntMatrix const& graph() const noexcept {
      return _n;
    }
    std::vector<int> const& parity() const noexcept {
      return _parity;
    }

    // Strictly lower (higher) than every neighbour.
    bool is_sink(std::size_t i) const;
    bool is_source(std::size_t i) const;

    // Arrows flow downhill.
    OrientedQuiver quiver() const;

    // "0,1,2,1"
    std::string to_string() const;

    friend bool operator==(HeightFunction const& a, HeightFunction const& b) {
      return a._h == b._h && a._n == b._n;
    }

   private:
    IntMatrix                 _n;
    std::vector<int>          _parity;
    std::vector<std::int64_t> _h;
  };

  // "0,1,2,1" -> {0, 1, 2, 1}
  std::vector<std::int64_t> parse_height_literal(std::string_view text);

  // All height functions with h(affine node) = parity(affine node) and
  // max h - min h <= window, in lexicographic order.
  std::vector<HeightFunction> enumerate_heights(McKayGraph const&       g,
                                                std::vector<int> const& parity,
                                                unsigned                window);

  // sigma_i^+ (raise a sink by 2) or sigma_i^- (lower a source by 2).
  HeightFunction flip(HeightFunction const& h, std::size_t i, FlipDirection dir);

  // Flips taking `from` to `to`.
  std::vector<std::pair<std::size_t, FlipDirection>>
  flip_sequence(HeightFunction const& from, HeightFunction const& to);

  // Directed paths i -> j counted with multiplicity; 1 if i = j.
  std::int64_t path_count(OrientedQuiver const& q, std::size_t i, std::size_t j);
  IntMatrix    path_counts(OrientedQuiver const& q);

  struct KirillovEntry {
    std::size_t  i, j;
    std::int64_t hom_dim;     // hom_dim(j, i, h(i) - h(j))
    std::int64_t path_count;  // paths i -> j
    bool         ok;
  };

  struct KirillovReport {
    bool                       pass = true;
    std::vector<KirillovEntry> entries;
  };

  KirillovReport kirillov_check(HomDims const& homs, HeightFunction const& h);

  struct ExtWitness {
    std::size_t  k, l;
    std::int64_t d, exponent, dim;
  };

  struct ExtReport {
    bool                    pass = true;
    std::size_t             checked = 0;
    std::vector<ExtWitness> witnesses;  // nonzero entries
  };

  // hom_dim(l, k, h(k) - h(l) - 2d - 2) = 0 for all k, l and 0 <= d <= d_max.
  ExtReport ext_vanishing_check(HomDims const&        homs,
                                HeightFunction const& h,
                                std::int64_t          d_max);

  struct EulerReport {
    bool        pass = true;
    std::size_t checked = 0;
    std::string witness;
  };

  // At every source i, for every k and 0 <= m <= m_max with
  // a = h(i) - 1 + m >= 0:
  //   hom(k, i, a - 1) - sum_j n_ij hom(k, j, a) + hom(k, i, a + 1) = 0,
  // the dimension count of 0 -> F_i(h(i) - 2) -> (+) F_j -> F_i -> 0.
  EulerReport euler_sequence_check(HomDims const&        homs,
                                   HeightFunction const& h,
                                   std::int64_t          m_max);

}  // namespace mckay

#endif  // MCKAY_HEIGHTS_HPP_
