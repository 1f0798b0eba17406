#ifndef MCKAY_ACCEPTANCE_HPP_
#define MCKAY_ACCEPTANCE_HPP_

#include <cstdint>     // for uint64_t
#include <filesystem>  // for path
#include <functional>  // for function
#include <future>      // for shared_future
#include <map>         // for map
#include <memory>      // for shared_ptr
#include <mutex>       // for mutex
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "mckay/instance.hpp"
#include "mckay/report.hpp"

namespace mckay {

  struct AcceptanceOptions {
    std::optional<std::filesystem::path> cache_dir;
    std::uint64_t                        seed = 1;
  };

  // Instances shared between concurrently running criteria.
  class InstancePool {
   public:
    explicit InstancePool(AcceptanceOptions opts) : _opts(std::move(opts)) {}

    std::shared_ptr<Instance const> get(std::string const& descriptor);
    AcceptanceOptions const&        options() const noexcept {
      return _opts;
    }

   private:
    AcceptanceOptions                                      _opts;
    std::mutex                                             _mutex;
    std::map<std::string, std::shared_future<std::shared_ptr<Instance const>>>
        _pending;
  };

  struct Criterion {
    std::string                         name;  // "c1-ade-classification", ...
    std::function<Check(InstancePool&)> run;
  };

  std::vector<Criterion> acceptance_criteria();

  // Runs every criterion, concurrently if asked, sorted by name. A criterion
  // that throws fails with the message as its witness.
  std::vector<Check> run_acceptance(AcceptanceOptions const& opts, bool parallel = true);

}  // namespace mckay

#endif  // MCKAY_ACCEPTANCE_HPP_
