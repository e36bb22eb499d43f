#ifndef MKIT_CLI_HPP
#define MKIT_CLI_HPP

#include "cli/commands.hpp"
#include "cli/structure_io.hpp"

#endif  // MKIT_CLI_HPP
