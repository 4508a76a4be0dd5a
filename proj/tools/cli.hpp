#pragma once

#include "tralg/truth_table.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tralg::cli
{

enum exit_code : int
{
  exit_ok = 0,
  exit_usage = 1,
  exit_parse = 2,
  exit_budget = 3,
  exit_inconsistency = 4
};

/// Function literal as accepted on the command line: everything
/// parse_function takes, plus the name "prop3" for S_{2,3} + x0x1x2x3x4.
[[nodiscard]] truth_table resolve_function( std::string_view text, std::optional<unsigned> arity = std::nullopt );

/// Runs one invocation; `args` excludes the program name.
int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace tralg::cli
