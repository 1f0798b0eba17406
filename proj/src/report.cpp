#include "mckay/report.hpp"

#include <algorithm>  // for stable_sort, all_of
#include <sstream>    // for ostringstream

namespace mckay {

  bool Report::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](Check const& c) { return c.pass; });
  }

  json to_json(Check const& c) {
    return json{{"name", c.name},
                {"paper_ref", c.paper_ref},
                {"pass", c.pass},
                {"witness", c.witness}};
  }

  json Report::to_json() const {
    json cs = json::array();
    for (auto const& c : checks) {
      cs.push_back(mckay::to_json(c));
    }
    return json{{"command", command}, {"group", group}, {"data", data}, {"checks", cs}};
  }

  std::string Report::to_table() const {
    std::ostringstream out;
    out << command;
    if (!group.empty()) {
      out << " " << group;
    }
    out << "\n";
    if (!data.empty()) {
      out << data.dump(2) << "\n";
    }
    for (auto const& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << "  (" << c.paper_ref << ")\n";
      if (!c.pass && !c.witness.is_null()) {
        out << "     witness: " << c.witness.dump() << "\n";
      }
    }
    return out.str();
  }

  void sort_checks(std::vector<Check>& checks) {
    std::stable_sort(checks.begin(), checks.end(),
                     [](Check const& a, Check const& b) { return a.name < b.name; });
  }

}  // namespace mckay
