#include <cstdlib>
#include <iostream>
#include <stdexcept>

#include "cablecone/verify/suite.hpp"

// One line per acceptance criterion; exit status 1 if any fails.
int main(int argc, char** argv) {
  namespace v = cablecone::verify;
  std::vector<int> ids;
  for (int k = 1; k < argc; ++k) ids.push_back(std::atoi(argv[k]));
  if (ids.empty())
    for (int k = 1; k <= 10; ++k) ids.push_back(k);

  int failed = 0;
  for (int id : ids) {
    v::CheckResult r;
    try {
      r = v::run_criterion(id);
    } catch (const std::out_of_range&) {
      std::cerr << "no criterion " << id << '\n';
      return 2;
    }
    std::cout << v::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
