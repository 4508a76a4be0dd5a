#pragma once

#include "tralg/truth_table.hpp"

#include <optional>
#include <string_view>

namespace tralg
{

/// Compiles a function literal to a truth table. Accepted forms:
///
///   tt:<hex>/<arity>       explicit table
///   AND, OR3, XNOR4, NOT   named primitive, arity from the suffix or `arity`
///   x1(x2^x3) + x1'x2      expression over x1..x8 (or x0..x7 when x0 occurs)
///   x'z + y                expression over x, y, z
///
/// Expression operators by increasing precedence: '+' (OR), '^' (XOR),
/// juxtaposition or '*' (AND), postfix '\'' (complement). Constants 0 and 1.
///
/// Expressions over x, y, z default to arity 3; indexed expressions default
/// to their largest variable. An explicit `arity` widens either.
/// Throws parse_error.
[[nodiscard]] truth_table parse_function( std::string_view text, std::optional<unsigned> arity = std::nullopt );

} // namespace tralg
