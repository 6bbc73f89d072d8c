#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nefres/json_io.hpp"

namespace nefres {

enum class OutputFormat { Json, Tsv, Pretty };

/// Writes j in the requested format; JSON uses sorted keys and two-space indent.
void render(const Json& j, OutputFormat f, std::ostream& out);

/// Runs `nefres <args...>` (args excludes the program name). Returns 0, 1 (infeasible or failed check) or 2 (usage).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nefres
