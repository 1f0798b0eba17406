#include "mckay/instance.hpp"

#include "mckay/error.hpp"

namespace mckay {

  Instance::Instance(GroupDescriptor const&                      d,
                     std::optional<std::filesystem::path> const& cache_dir,
                     DixonOptions const&                         opts)
      : group(d),
        table(character_table(group, cache_dir, opts)),
        graph(mckay_graph(table)),
        homs(table) {
    if (group.contains_minus_identity()) {
      parity = parity_function(table, group, graph.n);
    }
  }

  std::vector<int> const& Instance::require_parity() const {
    if (parity.empty()) {
      throw PreconditionError(group.descriptor().to_string()
                              + " does not contain -I, so parity and height "
                                "functions are undefined");
    }
    return parity;
  }

  std::shared_ptr<Instance const>
  make_instance(std::string_view                            descriptor,
                std::optional<std::filesystem::path> const& cache_dir,
                DixonOptions const&                         opts) {
    return std::make_shared<Instance const>(GroupDescriptor::parse(descriptor),
                                            cache_dir, opts);
  }

}  // namespace mckay
