// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>    // for steady_clock
#include <cstdio>    // for printf
#include <iostream>  // for cerr

#include "mckay/acceptance.hpp"
#include "mckay/chartab.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  auto                     start = clock::now();
  mckay::AcceptanceOptions opts;
  opts.cache_dir = mckay::cache_dir_from_env();
  auto checks    = mckay::run_acceptance(opts);
  bool all       = true;
  for (auto const& c : checks) {
    std::printf("%s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str());
    if (!c.pass) {
      std::cerr << c.name << ": " << c.witness.dump() << "\n";
    }
    all = all && c.pass;
  }
  auto secs = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("%zu criteria, %.1f s\n", checks.size(), secs);
  return all ? 0 : 1;
}
