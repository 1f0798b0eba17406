#ifndef MCKAY_INSTANCE_HPP_
#define MCKAY_INSTANCE_HPP_

#include <filesystem>   // for path
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "mckay/chartab.hpp"
#include "mckay/groups.hpp"
#include "mckay/mckaygraph.hpp"
#include "mckay/molien.hpp"

namespace mckay {

  // Everything derived from a group descriptor that later stages need.
  struct Instance {
    MatrixGroup      group;
    CharacterTable   table;
    McKayGraph       graph;
    HomDims          homs;
    std::vector<int> parity;  // empty if -I is not in the group

    Instance(GroupDescriptor const&                      d,
             std::optional<std::filesystem::path> const& cache_dir,
             DixonOptions const&                         opts);

    bool has_parity() const noexcept {
      return !parity.empty();
    }
    // PreconditionError if -I is absent.
    std::vector<int> const& require_parity() const;
  };

  std::shared_ptr<Instance const>
  make_instance(std::string_view                            descriptor,
                std::optional<std::filesystem::path> const& cache_dir = {},
                DixonOptions const&                         opts      = {});

}  // namespace mckay

#endif  // MCKAY_INSTANCE_HPP_
