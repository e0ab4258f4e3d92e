#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_seed;
    if (const char* s = std::getenv("DEDEKIND_FORGE_SEED")) env_seed = s;
    auto result = dedekind::cli::run(args, env_seed);
    std::cout << result.stdout_text();
    for (const auto& d : result.diagnostics) std::cerr << "dedekind-forge: " << d << "\n";
    return result.exit_code();
}
