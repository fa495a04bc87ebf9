#include <vector>

#include "znsum/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return znsum::cli::run(args);
}
