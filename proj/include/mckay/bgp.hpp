#ifndef MCKAY_BGP_HPP_
#define MCKAY_BGP_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t, uint64_t
#include <optional>  // for optional
#include <random>    // for mt19937_64
#include <string>    // for string
#include <vector>    // for vector

#include "mckay/heights.hpp"    // for OrientedQuiver
#include "mckay/linalg.hpp"     // for QMatrix
#include "mckay/serialize.hpp"  // for json

namespace mckay {

  // One copy of a (possibly multiple) arrow; `index` tells parallel copies
  // apart. The matrix is (dim at `to`) x (dim at `from`).
  struct RepArrow {
    std::size_t from;
    std::size_t to;
    std::size_t index;
    QMatrix     matrix;
  };

  // Finite dimensional representation over Q. Arrows are kept sorted by
  // (from, to, index).
  class QuiverRep {
   public:
    QuiverRep() = default;
    QuiverRep(std::vector<std::size_t> dims, std::vector<RepArrow> arrows);

    // Zero maps on every arrow of q.
    static QuiverRep zero_maps(OrientedQuiver const& q, std::vector<std::size_t> dims);

    std::vector<std::size_t> const& dims() const noexcept {
      return _dims;
    }
    std::vector<RepArrow> const& arrows() const noexcept {
      return _arrows;
    }
    std::vector<RepArrow>& arrows() noexcept {
      return _arrows;
    }
    std::size_t num_vertices() const noexcept {
      return _dims.size();
    }
    std::size_t total_dim() const;

    OrientedQuiver quiver() const;
    bool           is_sink(std::size_t i) const;
    bool           is_source(std::size_t i) const;

    // (+) V_j -> V_i over arrows into i, as one matrix (columns in arrow
    // order), and V_i -> (+) V_j over arrows out of i (rows in arrow order).
    QMatrix incoming_map(std::size_t i) const;
    QMatrix outgoing_map(std::size_t i) const;

    friend bool operator==(QuiverRep const& a, QuiverRep const& b);

   private:
    void validate() const;

    std::vector<std::size_t> _dims;
    std::vector<RepArrow>    _arrows;
  };

  QuiverRep direct_sum(QuiverRep const& a, QuiverRep const& b);

  // Kernel of (+) V_j -> V_i at a sink; the arrows at i are reversed.
  QuiverRep reflect_plus(QuiverRep const& v, std::size_t i);
  // Cokernel of V_i -> (+) V_j at a source.
  QuiverRep reflect_minus(QuiverRep const& v, std::size_t i);

  // s_i(d)_i = -d_i + sum_j n_ij d_j.
  std::vector<std::int64_t> dim_vector_reflect(std::vector<std::int64_t> d,
                                               std::size_t               i,
                                               IntMatrix const&          n);

  // Maps T_v : V_v -> W_v with T_to A = B T_from on every arrow, all T_v
  // invertible; nullopt if none was found. Parallel arrows are matched by
  // index. The search tries `attempts` random combinations of a basis of the
  // intertwiner space; a failure after that is not a proof of non-isomorphism
  // unless the space is zero.
  std::optional<std::vector<QMatrix>> find_isomorphism(QuiverRep const& v,
                                                       QuiverRep const& w,
                                                       std::uint64_t    seed = 1,
                                                       unsigned attempts = 16);

  // Entries uniform in [lo, hi], dims uniform in [0, max_dim].
  QuiverRep random_rep(OrientedQuiver const& q,
                       std::mt19937_64&      rng,
                       std::size_t           max_dim,
                       std::int64_t          lo = -2,
                       std::int64_t          hi = 2);

  // No simple summand at i: surjective into a sink, injective out of a source.
  bool reflectable(QuiverRep const& v, std::size_t i);

  json      to_json(QuiverRep const& v);
  QuiverRep quiver_rep_from_json(json const& j);

}  // namespace mckay

#endif  // MCKAY_BGP_HPP_
