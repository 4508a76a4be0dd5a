#pragma once

#include "tralg/truth_table.hpp"

#include <optional>
#include <string>

namespace tralg
{

enum class g_base
{
  or_base,
  xor_base
};

/// f(v) = output_complement ^ base(v ^ input_mask).
struct g_decomposition
{
  g_base base = g_base::or_base;
  unsigned arity = 1;
  vertex input_mask = 0;
  bool output_complement = false;

  [[nodiscard]] truth_table recompose() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==( const g_decomposition&, const g_decomposition& ) = default;
};

/// Exhaustive sweep over both bases, all input masks and both output
/// polarities, OR first; the first match is verified pointwise and returned.
[[nodiscard]] std::optional<g_decomposition> g_decompose( const truth_table& f );

[[nodiscard]] inline bool in_class_g( const truth_table& f )
{
  return g_decompose( f ).has_value();
}

/// Decomposition of a named primitive at the given arity.
[[nodiscard]] g_decomposition primitive_decomposition( primitive p, unsigned arity );

} // namespace tralg
