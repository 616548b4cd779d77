#pragma once

#include "soergel/braid.hpp"
#include "soergel/homology.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace soergel {

enum ExitCode { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// JSON form of a triply graded table; keys sorted, entries ordered by (i, j, k).
std::string table_json(const TriplyGradedTable& table, const BraidWord& braid);
/// One line per nonzero entry: "i j k group".
std::string table_text(const TriplyGradedTable& table);

/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace soergel
