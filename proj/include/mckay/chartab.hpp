#ifndef MCKAY_CHARTAB_HPP_
#define MCKAY_CHARTAB_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for int64_t, uint64_t
#include <filesystem>   // for path
#include <optional>     // for optional
#include <string>       // for string
#include <vector>       // for vector

#include "mckay/cyclo.hpp"   // for CycloNum
#include "mckay/groups.hpp"  // for MatrixGroup

namespace mckay {

  // a[i][j][k] = #{(x, y) : x in C_i, y in C_j, xy = z_k} for the
  // representative z_k of class k.
  using ClassConstants = std::vector<std::vector<std::vector<std::int64_t>>>;

  ClassConstants class_constants(MatrixGroup const& g);

  struct CharacterTable {
    std::size_t              group_order = 0;
    std::size_t              exponent    = 1;
    std::vector<std::size_t> class_sizes;
    std::vector<std::size_t> inverse_class;
    unsigned                 conductor = 1;  // of every stored value

    // chi[i][k] = value of irrep i on class k
    std::vector<std::vector<CycloNum>> chi;
    std::vector<std::int64_t>          dims;
    std::size_t                        trivial = 0;
    // trace of the defining representation V on each class
    std::vector<CycloNum> defining;
    // irrep equal to V, if V is irreducible
    std::optional<std::size_t> defining_index;

    std::uint64_t prime = 0;  // prime used by the modular computation
    std::uint64_t seed  = 0;

    std::size_t num_irreps() const noexcept {
      return chi.size();
    }
    std::size_t num_classes() const noexcept {
      return class_sizes.size();
    }

    // (1/|G|) sum_k |C_k| conj(a_k) b_k
    CycloNum inner(std::vector<CycloNum> const& a,
                   std::vector<CycloNum> const& b) const;

    friend bool operator==(CharacterTable const& x, CharacterTable const& y);
  };

  struct DixonOptions {
    std::uint64_t seed         = 1;
    unsigned      max_attempts = 64;
    // 0 uses the smallest admissible prime, 1 the next one, ...
    unsigned prime_skip = 0;
  };

  // The (skip+1)-th prime p = 1 mod exponent with p^2 > 4 order.
  std::uint64_t dixon_prime(std::size_t order, std::size_t exponent,
                            unsigned skip = 0);

  CharacterTable dixon_character_table(MatrixGroup const&  g,
                                       DixonOptions const& opts = {});

  // Orthogonality, degrees, integrality and the defining character. Returns a
  // description of the first violation, or nullopt.
  std::optional<std::string> verify_character_table(CharacterTable const& t,
                                                    MatrixGroup const&    g);

  // Multiplicities of eigenvalue zeta_e^j of class k in irrep i.
  std::vector<std::int64_t> eigenvalue_multiplicities(CharacterTable const& t,
                                                      MatrixGroup const&    g,
                                                      std::size_t           i,
                                                      std::size_t           k);

  // Dixon table with an optional JSON cache directory. An unreadable or
  // inconsistent cache entry is recomputed and overwritten.
  CharacterTable
  character_table(MatrixGroup const&                          g,
                  std::optional<std::filesystem::path> const& cache_dir
                  = std::nullopt,
                  DixonOptions const& opts = {});

  // Cache directory from the MCKAY_CACHE_DIR environment variable.
  std::optional<std::filesystem::path> cache_dir_from_env();

}  // namespace mckay

#endif  // MCKAY_CHARTAB_HPP_
