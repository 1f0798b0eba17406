#ifndef MCKAY_PREPROJ_HPP_
#define MCKAY_PREPROJ_HPP_

#include <array>    // for array
#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t
#include <string>   // for string
#include <vector>   // for vector

#include "mckay/linalg.hpp"      // for QMatrix
#include "mckay/mckaygraph.hpp"  // for IntMatrix
#include "mckay/rational.hpp"    // for Rational
#include "mckay/serialize.hpp"   // for json

namespace mckay {

  struct QuiverArrow {
    std::size_t from;
    std::size_t to;
    std::string name;
    friend bool operator==(QuiverArrow const&, QuiverArrow const&) = default;
  };

  // Arrows in traversal order: path[0] first.
  using Path2 = std::array<std::size_t, 2>;

  struct RelationTerm {
    Rational coeff;
    Path2    path;
  };
  using Relation = std::vector<RelationTerm>;

  class QuadraticPresentation {
   public:
    QuadraticPresentation() = default;
    QuadraticPresentation(std::size_t              num_vertices,
                          std::vector<QuiverArrow> arrows,
                          std::vector<Relation>    relations);

    std::size_t num_vertices() const noexcept {
      return _num_vertices;
    }
    std::vector<QuiverArrow> const& arrows() const noexcept {
      return _arrows;
    }
    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }

    // Composable length-2 paths, ordered lexicographically.
    std::vector<Path2> const& two_paths() const noexcept {
      return _two_paths;
    }
    std::size_t two_path_index(Path2 const& p) const;

    // One row per relation in two_paths() coordinates.
    QMatrix relation_matrix() const;

   private:
    std::size_t              _num_vertices = 0;
    std::vector<QuiverArrow> _arrows;
    std::vector<Relation>    _relations;
    std::vector<Path2>       _two_paths;
  };

  // Same vertices and arrows, and the same relation space.
  bool same_presentation(QuadraticPresentation const& a,
                         QuadraticPresentation const& b);

  // Doubled McKay graph. Each edge copy e between u > v gives arrows 2e
  // (u -> v, the positive direction) and 2e + 1 (v -> u, its bar).
  std::vector<QuiverArrow> double_quiver(IntMatrix const& n);

  // At each vertex i: sum over positive a into i of (abar then a), minus the
  // sum over positive b out of i of (b then bbar).
  QuadraticPresentation preprojective_presentation(IntMatrix const& n);

  // Two-paths between distinct vertices vanish, and loops at i satisfy the
  // kernel of the trace Tr(abar then a) = 1, Tr(b then bbar) = -1, zero on
  // loops through two different edge copies.
  QuadraticPresentation ext_algebra_presentation(IntMatrix const& n);

  // Same arrows; relations a basis of the annihilator of R under the pairing
  // in which the two-paths are orthonormal, computed block by block.
  QuadraticPresentation quadratic_dual(QuadraticPresentation const& p);

  // dims[d][i][j] = dim e_i A_d e_j, paths starting at i and ending at j.
  struct GradedDims {
    std::vector<IntMatrix> dims;

    std::size_t max_degree() const noexcept {
      return dims.empty() ? 0 : dims.size() - 1;
    }
    std::int64_t operator()(std::size_t d, std::size_t i, std::size_t j) const {
      return dims.at(d).at(i).at(j);
    }
  };

  inline constexpr std::size_t default_path_cap = 250000;

  // Length-d paths modulo the span of p r q. ResourceError when a degree has
  // more than path_cap paths.
  GradedDims truncated_hilbert(QuadraticPresentation const& p,
                               std::size_t                  max_degree,
                               std::size_t path_cap = default_path_cap);

  struct PresentationKoszulResult {
    bool        pass = true;
    std::string witness;
  };

  // sum_{a+b=d} (-1)^b H_A[a] H_B[b] = [d = 0] Id for d <= max degree.
  PresentationKoszulResult koszul_numerical_check(GradedDims const& a,
                                                  GradedDims const& b);

  json                  to_json(QuadraticPresentation const& p);
  QuadraticPresentation presentation_from_json(json const& j);
  json                  to_json(GradedDims const& g);

}  // namespace mckay

#endif  // MCKAY_PREPROJ_HPP_
