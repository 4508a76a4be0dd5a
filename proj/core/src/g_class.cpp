#include "tralg/g_class.hpp"

#include "tralg/errors.hpp"

#include <bit>
#include <stdexcept>

namespace tralg
{

truth_table g_decomposition::recompose() const
{
  return truth_table::from_function( arity, [this]( vertex v ) {
    const vertex u = v ^ input_mask;
    const bool value = base == g_base::or_base ? u != 0 : ( std::popcount( u ) & 1 ) == 1;
    return value != output_complement;
  } );
}

std::string g_decomposition::to_string() const
{
  std::string s = base == g_base::or_base ? "OR" : "XOR";
  s += " inputs=" + vertex_bits( input_mask, arity );
  s += output_complement ? " output=complemented" : " output=plain";
  return s;
}

std::optional<g_decomposition> g_decompose( const truth_table& f )
{
  const unsigned n = f.arity();
  for ( const auto base : { g_base::or_base, g_base::xor_base } )
  {
    for ( vertex mask = 0; mask < f.size(); ++mask )
    {
      for ( const bool out : { false, true } )
      {
        g_decomposition d{ base, n, mask, out };
        if ( d.recompose() == f )
        {
          return d;
        }
      }
    }
  }
  return std::nullopt;
}

g_decomposition primitive_decomposition( primitive p, unsigned arity )
{
  if ( arity == 0 || arity > max_table_arity )
  {
    throw std::invalid_argument( "primitive arity out of range" );
  }
  const vertex all = full_mask( arity );
  switch ( p )
  {
  case primitive::not_gate:
    if ( arity != 1 )
    {
      throw std::invalid_argument( "NOT takes exactly one input" );
    }
    return { g_base::or_base, 1, 0, true };
  case primitive::and_gate:
    return { g_base::or_base, arity, all, true };
  case primitive::or_gate:
    return { g_base::or_base, arity, 0, false };
  case primitive::xor_gate:
    return { g_base::xor_base, arity, 0, false };
  case primitive::nand_gate:
    return { g_base::or_base, arity, all, false };
  case primitive::nor_gate:
    return { g_base::or_base, arity, 0, true };
  case primitive::xnor_gate:
    return { g_base::xor_base, arity, 0, true };
  }
  throw std::invalid_argument( "unknown primitive" );
}

} // namespace tralg
