#ifndef MCKAY_MCKAYGRAPH_HPP_
#define MCKAY_MCKAYGRAPH_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "mckay/chartab.hpp"  // for CharacterTable
#include "mckay/groups.hpp"   // for MatrixGroup

namespace mckay {

  using IntMatrix = std::vector<std::vector<std::int64_t>>;

  enum class AdeFamily { A, D, E };

  // Affine diagram X~_rank, with rank + 1 vertices.
  struct AffineType {
    AdeFamily family;
    unsigned  rank;

    // "A1~", "D4~", "E6~", ...
    std::string       label() const;
    static AffineType parse(std::string const& label);
    friend bool operator==(AffineType const&, AffineType const&) = default;
  };

  // Reference multiplicity matrices. A~_m is the cycle 0 - 1 - ... - m - 0
  // (A~_1 a double edge); D~_m has leaves 0, 1 on vertex 2, the chain
  // 2 - ... - (m-2), and leaves m-1, m on vertex m-2; E~_6 lists the three
  // leaves, then the three middle vertices, then the center; E~_7 is the chain
  // 0 - ... - 6 with 7 attached to 3; E~_8 is the chain 0 - ... - 7 with 8
  // attached to 5.
  IntMatrix                 reference_diagram(AffineType t);
  std::vector<std::int64_t> reference_delta(AffineType t);

  struct Classification {
    std::optional<AffineType> type;  // nullopt: not affine ADE
    // to_reference[i] = reference vertex matched with vertex i
    std::vector<std::size_t> to_reference;
    // primitive positive null vector of 2 Id - n, if one exists
    std::vector<std::int64_t> delta;
  };

  Classification classify_affine_ade(IntMatrix const& n);

  // Primitive integer null vector of 2 Id - n with positive entries, if the
  // null space is one-dimensional and such a vector exists.
  std::optional<std::vector<std::int64_t>> imaginary_root(IntMatrix const& n);

  IntMatrix cartan_matrix(IntMatrix const& n);

  // n_ij = (1/|G|) sum_C |C| conj(chi_i) chi_V chi_j. Throws DefectError
  // unless every entry is a nonnegative integer and n is symmetric.
  IntMatrix mckay_matrix(CharacterTable const& t);

  struct McKayGraph {
    IntMatrix      n;
    Classification classification;
    std::size_t    affine_node = 0;

    std::size_t num_vertices() const noexcept {
      return n.size();
    }
    IntMatrix cartan() const {
      return cartan_matrix(n);
    }
    std::vector<std::int64_t> const& delta() const noexcept {
      return classification.delta;
    }
    std::vector<std::size_t> neighbors(std::size_t i) const;
  };

  McKayGraph mckay_graph(CharacterTable const& t);

  // p(i) = 0 if -I acts trivially on W_i, else 1. PreconditionError if -I is
  // not in G; DefectError if adjacent vertices share a parity.
  std::vector<int> parity_function(CharacterTable const& t,
                                   MatrixGroup const&    g,
                                   IntMatrix const&      n);

}  // namespace mckay

#endif  // MCKAY_MCKAYGRAPH_HPP_
