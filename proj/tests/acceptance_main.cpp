#include "sheafex/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  sheafex::SuiteOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::atoi(argv[i]));
  int failed = 0;
  sheafex::run_suite(options, [&](const sheafex::CriterionResult& r) {
    std::cout << sheafex::format_result(r) << std::endl;
    failed += !r.passed();
  });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
