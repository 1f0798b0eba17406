#ifndef MCKAY_CLI_HPP_
#define MCKAY_CLI_HPP_

#include <cstdint>     // for uint64_t
#include <filesystem>  // for path
#include <iosfwd>      // for ostream
#include <optional>    // for optional
#include <string>      // for string

#include "mckay/report.hpp"

namespace mckay {

  enum class OutputMode { json, table };

  struct RunConfig {
    std::string                          command;
    std::string                          group;  // unused by "all"
    unsigned                             max_degree = 6;
    unsigned                             window     = 2;
    std::int64_t                         dmax       = 5;
    std::optional<std::filesystem::path> cache_dir;
    std::uint64_t                        seed = 1;
    OutputMode                           output = OutputMode::json;

    std::optional<std::string>           height;  // "0,1,2,1"
    std::optional<std::filesystem::path> rep;     // reflect: input JSON
    std::optional<std::size_t>           vertex;
    std::optional<std::string>           dir;  // "plus" or "minus"
  };

  inline constexpr unsigned max_degree_limit = 12;
  inline constexpr unsigned window_limit     = 4;

  // Throws PreconditionError for an unknown command or bad arguments and
  // ResourceError when a guard is exceeded.
  Report run(RunConfig const& config);

  // Parses argv, runs, prints. Exit status: 0 all checks pass, 1 a check
  // failed, 2 usage or precondition error, 3 resource guard.
  int main_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mckay

#endif  // MCKAY_CLI_HPP_
