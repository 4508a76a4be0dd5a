#pragma once

#include <cstdint>
#include <string>

namespace tralg
{

/// A point of the boolean n-cube in positional encoding: coordinate x_1 is the
/// most significant of the n bits, so (b1,b2,b3) is 4*b1 + 2*b2 + b3.
using vertex = std::uint32_t;

inline constexpr unsigned max_vertex_arity = 31;

[[nodiscard]] constexpr vertex coordinate_mask( unsigned coordinate, unsigned arity ) noexcept
{
  return vertex{ 1 } << ( arity - 1u - coordinate );
}

[[nodiscard]] constexpr bool coordinate_bit( vertex v, unsigned coordinate, unsigned arity ) noexcept
{
  return ( v & coordinate_mask( coordinate, arity ) ) != 0;
}

[[nodiscard]] constexpr vertex flip_coordinate( vertex v, unsigned coordinate, unsigned arity ) noexcept
{
  return v ^ coordinate_mask( coordinate, arity );
}

[[nodiscard]] constexpr vertex full_mask( unsigned arity ) noexcept
{
  return arity >= 32 ? ~vertex{ 0 } : ( ( vertex{ 1 } << arity ) - 1u );
}

/// Binary n-vector as a string of n letters, x_1 first.
[[nodiscard]] inline std::string vertex_bits( vertex v, unsigned arity )
{
  std::string s( arity, '0' );
  for ( unsigned i = 0; i < arity; ++i )
  {
    if ( coordinate_bit( v, i, arity ) )
    {
      s[i] = '1';
    }
  }
  return s;
}

} // namespace tralg
