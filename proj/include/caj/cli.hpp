#pragma once

#include "caj/givental.hpp"

#include <string>
#include <vector>

namespace caj::cli {

// Exit codes: 0 ok, 1 validation/config failure, 2 solver mismatch or failed
// check, 3 I/O failure.
int run(const std::vector<std::string>& args);

// Builtin presets: "airy", "bessel", "mixed2".
bool is_preset(const std::string& name);
GiventalData preset(const std::string& name);

}  // namespace caj::cli
