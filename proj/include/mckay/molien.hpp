#ifndef MCKAY_MOLIEN_HPP_
#define MCKAY_MOLIEN_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t
#include <map>       // for map
#include <mutex>     // for mutex
#include <optional>  // for optional
#include <string>    // for string
#include <tuple>     // for tuple
#include <vector>    // for vector

#include "mckay/chartab.hpp"     // for CharacterTable
#include "mckay/mckaygraph.hpp"  // for IntMatrix
#include "mckay/poly.hpp"        // for QPoly
#include "mckay/ratfunc.hpp"     // for RatFunc

namespace mckay {

  struct MolienMatrices {
    // S[p][q] = (1/|G|) sum_g conj(chi_q(g)) chi_p(g) / det(1 - g^-1 t), so
    // that [t^m] S[p][q] = hom_dim(q, p, m).
    std::vector<std::vector<RatFunc>> S;
    // E[q][r] = (1/|G|) sum_g conj(chi_q(g)) chi_r(g) det(1 + g t)
    std::vector<std::vector<QPoly>> E;

    std::size_t size() const noexcept {
      return S.size();
    }
  };

  // DefectError if some averaged coefficient is not rational.
  MolienMatrices molien_matrices(CharacterTable const& t);

  struct KoszulResult {
    bool        pass = false;
    std::size_t row = 0, col = 0;  // first failing entry
    RatFunc     entry;             // its value in S(t) E(-t)
    std::string witness() const;
  };

  // Checks S(t) E(-t) = Id exactly.
  KoszulResult koszul_check(MolienMatrices const& m);

  // dim Hom_G(W_i, S^m V* (x) W_j), memoized. Thread safe.
  class HomDims {
   public:
    explicit HomDims(CharacterTable const& t);

    HomDims(HomDims const&)            = delete;
    HomDims& operator=(HomDims const&) = delete;

    // 0 for m < 0.
    std::int64_t operator()(std::size_t i, std::size_t j, std::int64_t m) const;

    std::size_t num_irreps() const noexcept {
      return _chi.size();
    }

   private:
    std::vector<CycloNum> const& symmetric_power(std::size_t m) const;

    std::vector<std::size_t>           _class_sizes;
    std::size_t                        _order;
    std::vector<std::vector<CycloNum>> _chi;
    std::vector<std::vector<CycloNum>> _chi_conj;

    mutable std::mutex                         _mutex;
    mutable std::vector<std::vector<CycloNum>> _sym;  // chi_{S^m V} per class
    mutable std::map<std::tuple<std::size_t, std::size_t, std::int64_t>,
                     std::int64_t>
        _memo;
  };

  // Degree n part of e_i B_h e_j: hom_dim(i, j, n) when n = h(j) + 2d - h(i)
  // for some d >= 0, else 0. PreconditionError unless h is a height function
  // for (n, parity): h = parity mod 2 and |h(i) - h(j)| = 1 on edges.
  std::int64_t graded_dim_Bh(HomDims const&                   homs,
                             IntMatrix const&                 n,
                             std::vector<int> const&          parity,
                             std::vector<std::int64_t> const& h,
                             std::size_t                      i,
                             std::size_t                      j,
                             std::int64_t                     degree);

  // Throws PreconditionError describing the first violation.
  void check_height_function(IntMatrix const&                 n,
                             std::vector<int> const&          parity,
                             std::vector<std::int64_t> const& h);

}  // namespace mckay

#endif  // MCKAY_MOLIEN_HPP_
