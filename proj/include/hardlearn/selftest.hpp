#pragma once

#include <string>
#include <vector>

namespace hardlearn {

// Fast ring/fourier invariant sweep used by the `selftest` subcommand.
// Returns the list of failed checks; empty means healthy.
std::vector<std::string> run_selftest();

}  // namespace hardlearn
