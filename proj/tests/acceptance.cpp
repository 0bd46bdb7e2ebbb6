#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "trimodal/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::stoull(argv[1]);
  const auto report = trimodal::run_acceptance_suite(seed);
  trimodal::print_report(std::cout, report);
  return report.all_pass() ? EXIT_SUCCESS : EXIT_FAILURE;
}
