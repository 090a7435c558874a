#include "plm/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));
    return plm::run_acceptance(std::cout, only) ? EXIT_SUCCESS : EXIT_FAILURE;
}
