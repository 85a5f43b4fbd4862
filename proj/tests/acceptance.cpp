#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mellin/suite.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  bool all = true;
  for (int id : ids) {
    const auto r = mw::run_criterion(id);
    std::printf("%s\n", mw::format_result(r).c_str());
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
