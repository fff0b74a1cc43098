#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "qkp/root_system.hpp"

namespace qkp {

/// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
/// 3 unsupported type or feature.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Machine-readable Cartan data (the `root info --format doc` payload).
nlohmann::ordered_json root_info_doc(const RootSystem& rs);

}  // namespace qkp
