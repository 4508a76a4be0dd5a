#include "tralg/truth_table.hpp"

#include "tralg/errors.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace tralg
{

namespace
{

constexpr std::uint64_t low_mask( std::uint32_t bits ) noexcept
{
  return bits >= 64 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << bits ) - 1u );
}

int hex_value( char c ) noexcept
{
  if ( c >= '0' && c <= '9' )
  {
    return c - '0';
  }
  if ( c >= 'a' && c <= 'f' )
  {
    return c - 'a' + 10;
  }
  if ( c >= 'A' && c <= 'F' )
  {
    return c - 'A' + 10;
  }
  return -1;
}

} // namespace

truth_table::truth_table( unsigned arity ) : arity_( arity )
{
  if ( arity == 0 || arity > max_table_arity )
  {
    throw std::invalid_argument( "truth table arity must be between 1 and 8" );
  }
}

truth_table truth_table::from_hex( std::string_view hex, unsigned arity )
{
  truth_table t( arity );
  if ( hex.empty() )
  {
    throw parse_error( "empty truth table hex" );
  }
  const std::uint32_t digits = t.size() < 4 ? 1u : t.size() / 4u;
  if ( hex.size() > digits )
  {
    throw parse_error( "truth table hex '" + std::string( hex ) + "' too long for arity " + std::to_string( arity ) );
  }
  std::uint32_t bit = 0;
  for ( auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4 )
  {
    const int value = hex_value( *it );
    if ( value < 0 )
    {
      throw parse_error( "invalid hex digit in truth table '" + std::string( hex ) + "'" );
    }
    for ( std::uint32_t b = 0; b < 4; ++b )
    {
      if ( ( value >> b ) & 1 )
      {
        if ( bit + b >= t.size() )
        {
          throw parse_error( "truth table hex '" + std::string( hex ) + "' exceeds 2^" + std::to_string( arity ) +
                             " bits" );
        }
        t.set( bit + b, true );
      }
    }
  }
  return t;
}

truth_table truth_table::parse( std::string_view literal )
{
  if ( !literal.starts_with( "tt:" ) )
  {
    throw parse_error( "truth table literal must start with 'tt:'" );
  }
  const auto body = literal.substr( 3 );
  const auto slash = body.find( '/' );
  if ( slash == std::string_view::npos )
  {
    throw parse_error( "truth table literal '" + std::string( literal ) + "' lacks '/<arity>'" );
  }
  const auto arity_text = body.substr( slash + 1 );
  unsigned arity = 0;
  auto [ptr, ec] = std::from_chars( arity_text.data(), arity_text.data() + arity_text.size(), arity );
  if ( arity_text.empty() || ec != std::errc{} || ptr != arity_text.data() + arity_text.size() || arity == 0 ||
       arity > max_table_arity )
  {
    throw parse_error( "invalid arity in truth table literal '" + std::string( literal ) + "'" );
  }
  return from_hex( body.substr( 0, slash ), arity );
}

bool truth_table::evaluate( vertex v ) const
{
  if ( v >= size() )
  {
    throw std::out_of_range( "cube point out of range for truth table arity" );
  }
  return ( *this )( v );
}

bool truth_table::evaluate( std::span<const bool> point ) const
{
  if ( point.size() != arity_ )
  {
    throw std::invalid_argument( "point arity does not match truth table arity" );
  }
  vertex v = 0;
  for ( const bool b : point )
  {
    v = ( v << 1 ) | ( b ? 1u : 0u );
  }
  return ( *this )( v );
}

void truth_table::set( vertex v, bool value )
{
  if ( v >= size() )
  {
    throw std::out_of_range( "cube point out of range for truth table arity" );
  }
  const auto bit = std::uint64_t{ 1 } << ( v & 63u );
  if ( value )
  {
    words_[v >> 6] |= bit;
  }
  else
  {
    words_[v >> 6] &= ~bit;
  }
}

std::string truth_table::hex() const
{
  static constexpr char digits[] = "0123456789abcdef";
  const std::uint32_t count = size() < 4 ? 1u : size() / 4u;
  std::string s( count, '0' );
  for ( std::uint32_t d = 0; d < count; ++d )
  {
    unsigned value = 0;
    for ( std::uint32_t b = 0; b < 4 && 4 * d + b < size(); ++b )
    {
      value |= ( ( *this )( 4 * d + b ) ? 1u : 0u ) << b;
    }
    s[count - 1 - d] = digits[value];
  }
  return s;
}

truth_table truth_table::complemented() const
{
  truth_table t = *this;
  const auto n = size();
  for ( std::size_t w = 0; w < t.words_.size(); ++w )
  {
    const std::uint32_t first = static_cast<std::uint32_t>( w * 64 );
    t.words_[w] = first >= n ? 0 : ( ~words_[w] & low_mask( n - first ) );
  }
  return t;
}

std::uint32_t truth_table::count_ones() const noexcept
{
  std::uint32_t count = 0;
  for ( const auto w : words_ )
  {
    count += static_cast<std::uint32_t>( std::popcount( w ) );
  }
  return count;
}

bool truth_table::depends_on( unsigned k ) const
{
  if ( k >= arity_ )
  {
    throw std::out_of_range( "variable index out of range" );
  }
  const vertex mask = coordinate_mask( k, arity_ );
  for ( vertex v = 0; v < size(); ++v )
  {
    if ( ( v & mask ) == 0 && ( *this )( v ) != ( *this )( v | mask ) )
    {
      return true;
    }
  }
  return false;
}

std::vector<unsigned> truth_table::support() const
{
  std::vector<unsigned> result;
  for ( unsigned k = 0; k < arity_; ++k )
  {
    if ( depends_on( k ) )
    {
      result.push_back( k );
    }
  }
  return result;
}

truth_table truth_table::project( std::span<const unsigned> coordinates ) const
{
  const auto arity = static_cast<unsigned>( coordinates.size() );
  for ( const auto c : coordinates )
  {
    if ( c >= arity_ )
    {
      throw std::out_of_range( "projection coordinate out of range" );
    }
  }
  return from_function( arity, [&]( vertex y ) {
    vertex v = 0;
    for ( unsigned i = 0; i < arity; ++i )
    {
      if ( coordinate_bit( y, i, arity ) )
      {
        v |= coordinate_mask( coordinates[i], arity_ );
      }
    }
    return ( *this )( v );
  } );
}

std::strong_ordering operator<=>( const truth_table& a, const truth_table& b ) noexcept
{
  if ( a.arity_ != b.arity_ )
  {
    return a.arity_ <=> b.arity_;
  }
  for ( std::size_t w = a.words_.size(); w-- > 0; )
  {
    if ( a.words_[w] != b.words_[w] )
    {
      return a.words_[w] <=> b.words_[w];
    }
  }
  return std::strong_ordering::equal;
}

std::uint64_t truth_table::bits64() const
{
  if ( arity_ > 6 )
  {
    throw std::invalid_argument( "bits64 requires arity <= 6" );
  }
  return words_[0];
}

std::string_view primitive_name( primitive p ) noexcept
{
  switch ( p )
  {
  case primitive::not_gate:
    return "NOT";
  case primitive::and_gate:
    return "AND";
  case primitive::or_gate:
    return "OR";
  case primitive::xor_gate:
    return "XOR";
  case primitive::nand_gate:
    return "NAND";
  case primitive::nor_gate:
    return "NOR";
  case primitive::xnor_gate:
    return "XNOR";
  }
  return "?";
}

std::optional<primitive> primitive_from_name( std::string_view name ) noexcept
{
  for ( const auto p : { primitive::not_gate, primitive::and_gate, primitive::or_gate, primitive::xor_gate,
                         primitive::nand_gate, primitive::nor_gate, primitive::xnor_gate } )
  {
    if ( primitive_name( p ) == name )
    {
      return p;
    }
  }
  return std::nullopt;
}

truth_table make_primitive( primitive p, unsigned arity )
{
  if ( p == primitive::not_gate && arity != 1 )
  {
    throw std::invalid_argument( "NOT takes exactly one input" );
  }
  const vertex all = full_mask( arity );
  return truth_table::from_function( arity, [&]( vertex v ) {
    switch ( p )
    {
    case primitive::not_gate:
      return v == 0;
    case primitive::and_gate:
      return v == all;
    case primitive::or_gate:
      return v != 0;
    case primitive::xor_gate:
      return ( std::popcount( v ) & 1 ) == 1;
    case primitive::nand_gate:
      return v != all;
    case primitive::nor_gate:
      return v == 0;
    case primitive::xnor_gate:
      return ( std::popcount( v ) & 1 ) == 0;
    }
    return false;
  } );
}

} // namespace tralg
