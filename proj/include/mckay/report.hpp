#ifndef MCKAY_REPORT_HPP_
#define MCKAY_REPORT_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "mckay/serialize.hpp"  // for json

namespace mckay {

  struct Check {
    std::string name;
    std::string paper_ref;  // the claim being verified, in words
    bool        pass = true;
    json        witness;  // null when there is nothing to show
  };

  // One CLI invocation: {command, group, data, checks}.
  struct Report {
    std::string        command;
    std::string        group;
    json               data = json::object();
    std::vector<Check> checks;

    bool pass() const;
    json to_json() const;
    // Human readable: data pretty-printed, then one line per check.
    std::string to_table() const;
  };

  json to_json(Check const& c);

  // Merges checks by name; stable for equal names.
  void sort_checks(std::vector<Check>& checks);

}  // namespace mckay

#endif  // MCKAY_REPORT_HPP_
