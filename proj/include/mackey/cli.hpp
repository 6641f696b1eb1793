#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mackey {

/// Runs one command. `args` excludes the program name. Returns 0 on success, 1 when
/// a verification fails (with a witness report on `out`), 2 on input errors and
/// exceeded resource caps (message on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mackey
