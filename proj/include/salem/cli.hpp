#pragma once

#include <string>
#include <vector>

namespace salem {

// Subcommand front end: construct, fourier-scan, dim, energy, sumset,
// verify, export. Exit codes: 0 ok, 1 usage/config, 2 construction failure,
// 3 numerical nonconvergence.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);

}  // namespace salem
