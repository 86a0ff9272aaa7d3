#include <string>
#include <vector>

#include "qb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return qb::cli_main(args);
}
