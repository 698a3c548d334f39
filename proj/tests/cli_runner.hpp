#pragma once

// Spawns the sidonlab CLI and captures stdout + exit code.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#ifndef SIDONLAB_CLI_PATH
#error "SIDONLAB_CLI_PATH must be defined by the build"
#endif

namespace clirun {

struct Result {
    int exit_code = -1;
    std::string out;
};

inline Result run(const std::string& args) {
    std::string cmd = std::string(SIDONLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    Result res;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace clirun
