#ifndef MCKAY_CHECKS_HPP_
#define MCKAY_CHECKS_HPP_

// Named checks over one group instance. The CLI and the acceptance runner
// both build their reports from these.

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <vector>   // for vector

#include "mckay/heights.hpp"
#include "mckay/instance.hpp"
#include "mckay/report.hpp"

namespace mckay {

  // cyclic(n) -> A_{n-1}~, bd(n) -> D_{n+2}~ (D3~ is A3~), 2T/2O/2I -> E6~/E7~/E8~
  AffineType expected_affine_type(GroupDescriptor const& d);

  // Distinct orientations among the quivers of the given heights, in order
  // of first appearance.
  std::vector<OrientedQuiver> distinct_orientations(std::vector<HeightFunction> const& hs);

  Check group_order_check(Instance const& inst);
  Check classification_check(Instance const& inst);
  // Orthogonality, sum of squared degrees, and an independent recomputation
  // with the next admissible prime.
  Check chartab_check(Instance const& inst, DixonOptions const& opts);
  Check molien_koszul_check(Instance const& inst);
  // [t^m] of the Molien matrix against the memoized hom dimensions.
  Check molien_series_check(Instance const& inst, std::size_t max_degree);

  Check flip_connectivity_check(Instance const& inst, std::vector<HeightFunction> const& hs);
  Check kirillov_all_check(Instance const& inst, std::vector<HeightFunction> const& hs);
  Check ext_all_check(Instance const& inst, std::vector<HeightFunction> const& hs,
                      std::int64_t d_max);
  Check euler_all_check(Instance const& inst, std::vector<HeightFunction> const& hs,
                        std::int64_t m_max);

  // Double dual, and dual(Ext) = preprojective.
  Check duality_check(IntMatrix const& n);
  // Preprojective Hilbert table against hom dimensions through max_degree,
  // and graded_dim_Bh against the same table on every given height.
  Check hilbert_match_check(Instance const& inst, std::size_t max_degree,
                            std::vector<HeightFunction> const& hs);
  Check presentation_koszul_check(IntMatrix const& n, std::size_t max_degree);

  // `reps` reflectable random representations per orientation, each
  // reflected at a sink or source and back.
  Check bgp_check(Instance const& inst, std::vector<HeightFunction> const& hs,
                  std::size_t reps, std::uint64_t seed);

  // cartan-form, dual-bases, twist-vs-flip, weyl-group.
  std::vector<Check> lattice_checks(Instance const& inst,
                                    std::vector<HeightFunction> const& hs,
                                    std::uint64_t                      seed);
  Check weyl_check(Instance const& inst, std::uint64_t seed);

}  // namespace mckay

#endif  // MCKAY_CHECKS_HPP_
