#pragma once

#include <functional>
#include <string>
#include <vector>

namespace gk {
namespace selftest {

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Run the full acceptance battery. `progress`, when set, receives one line
/// per criterion as it finishes.
std::vector<Result> runAll(const std::function<void(const Result&)>& progress = {});

bool allPass(const std::vector<Result>& rs);

}  // namespace selftest
}  // namespace gk
