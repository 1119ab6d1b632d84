#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "tensorposet/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  const auto results = tensorposet::acceptance::run_all(ids, std::cout);
  const bool ok = tensorposet::acceptance::all_passed(results);
  std::cout << (ok ? "all asserted criteria passed" : "some asserted criteria failed") << '\n';
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
