#pragma once

#include <CLI11.hpp>

#include "output.hpp"

namespace pwcli {

/// Registers every subcommand; callbacks store their exit status in `status`.
void add_commands(CLI::App& app, Globals& globals, int& status);

}  // namespace pwcli
