#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace poscert {

// Runs the command-line front-end. Exit status: 0 on success ("valid",
// "nonnegative", "psd"), 1 on a negative outcome (witness found, not PSD,
// invalid certificate, negative-stage failure), 2 on malformed input.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace poscert
