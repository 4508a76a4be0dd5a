#include "tralg/transient.hpp"

#include "tralg/errors.hpp"

#include <charconv>
#include <stdexcept>

namespace tralg
{

namespace
{

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && ( s.front() == ' ' || s.front() == '\t' ) )
  {
    s.remove_prefix( 1 );
  }
  while ( !s.empty() && ( s.back() == ' ' || s.back() == '\t' ) )
  {
    s.remove_suffix( 1 );
  }
  return s;
}

std::uint64_t parse_unsigned( std::string_view s, std::string_view context )
{
  s = trim( s );
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars( s.data(), s.data() + s.size(), value );
  if ( s.empty() || ec != std::errc{} || ptr != s.data() + s.size() )
  {
    throw parse_error( "expected a non-negative integer in '" + std::string( context ) + "'" );
  }
  return value;
}

std::uint32_t checked_changes( std::uint64_t changes )
{
  if ( changes > transient::max_changes )
  {
    throw std::out_of_range( "transient exceeds the supported number of changes" );
  }
  return static_cast<std::uint32_t>( changes );
}

} // namespace

transient::transient( bool start, std::uint32_t changes ) : start_( start ), changes_( checked_changes( changes ) ) {}

transient transient::from_letters( std::string_view letters )
{
  if ( letters.empty() )
  {
    throw parse_error( "empty transient literal" );
  }
  for ( std::size_t i = 0; i < letters.size(); ++i )
  {
    if ( letters[i] != '0' && letters[i] != '1' )
    {
      throw parse_error( "invalid letter in transient '" + std::string( letters ) + "'" );
    }
    if ( i > 0 && letters[i] == letters[i - 1] )
    {
      throw parse_error( "letters of transient '" + std::string( letters ) + "' do not alternate" );
    }
  }
  return transient( letters.front() == '1', checked_changes( letters.size() - 1 ) );
}

transient transient::parse( std::string_view literal )
{
  literal = trim( literal );
  if ( literal.size() >= 2 && literal.front() == '<' && literal.back() == '>' )
  {
    const auto body = literal.substr( 1, literal.size() - 2 );
    const auto semi = body.find( ';' );
    if ( semi == std::string_view::npos )
    {
      throw parse_error( "angle transient '" + std::string( literal ) + "' lacks ';'" );
    }
    const auto start = trim( body.substr( 0, semi ) );
    if ( start != "0" && start != "1" )
    {
      throw parse_error( "angle transient '" + std::string( literal ) + "' must start with 0 or 1" );
    }
    const auto changes = parse_unsigned( body.substr( semi + 1 ), literal );
    if ( changes > max_changes )
    {
      throw parse_error( "transient '" + std::string( literal ) + "' has too many changes" );
    }
    return transient( start == "1", static_cast<std::uint32_t>( changes ) );
  }
  return from_letters( literal );
}

std::uint32_t transient::zeros() const noexcept
{
  // Letters alternate, so the first letter takes the larger half.
  const std::uint32_t first_half = ( length() + 1u ) / 2u;
  return start_ ? length() - first_half : first_half;
}

std::string transient::letters() const
{
  std::string s( length(), '0' );
  for ( std::uint32_t i = 0; i < length(); ++i )
  {
    s[i] = letter( i ) ? '1' : '0';
  }
  return s;
}

std::string transient::angle() const
{
  return "<" + std::string( start_ ? "1" : "0" ) + ";" + std::to_string( changes_ ) + ">";
}

transient transient::successor() const
{
  return transient( start_, checked_changes( std::uint64_t{ changes_ } + 1u ) );
}

transient transient::complemented() const noexcept
{
  transient t = *this;
  t.start_ = !start_;
  return t;
}

transient transient::prefix( std::uint32_t changes ) const
{
  if ( changes > changes_ )
  {
    throw std::out_of_range( "prefix longer than transient" );
  }
  return transient( start_, changes );
}

transient contract( std::string_view word )
{
  if ( word.empty() )
  {
    throw std::invalid_argument( "cannot contract the empty word" );
  }
  std::uint64_t changes = 0;
  for ( std::size_t i = 0; i < word.size(); ++i )
  {
    if ( word[i] != '0' && word[i] != '1' )
    {
      throw std::invalid_argument( "binary word contains a letter other than 0 or 1" );
    }
    if ( i > 0 && word[i] != word[i - 1] )
    {
      ++changes;
    }
  }
  return transient( word.front() == '1', checked_changes( changes ) );
}

transient contract( std::span<const bool> word )
{
  if ( word.empty() )
  {
    throw std::invalid_argument( "cannot contract the empty word" );
  }
  std::uint64_t changes = 0;
  for ( std::size_t i = 1; i < word.size(); ++i )
  {
    changes += word[i] != word[i - 1] ? 1u : 0u;
  }
  return transient( word.front(), checked_changes( changes ) );
}

transient circ( const transient& s, const transient& t )
{
  const std::uint64_t changes =
      std::uint64_t{ s.changes() } + t.changes() + ( s.omega() != t.alpha() ? 1u : 0u );
  return transient( s.alpha(), checked_changes( changes ) );
}

transient_vector::transient_vector( std::vector<transient> components ) : components_( std::move( components ) )
{
  if ( components_.empty() )
  {
    throw std::invalid_argument( "transient vector must have at least one component" );
  }
}

transient_vector::transient_vector( std::initializer_list<transient> components )
    : transient_vector( std::vector<transient>( components ) )
{
}

transient_vector transient_vector::from_vertex( vertex v, unsigned arity )
{
  if ( arity == 0 || arity > max_vertex_arity )
  {
    throw std::invalid_argument( "unsupported vector arity" );
  }
  std::vector<transient> components;
  components.reserve( arity );
  for ( unsigned i = 0; i < arity; ++i )
  {
    components.emplace_back( coordinate_bit( v, i, arity ), 0u );
  }
  return transient_vector( std::move( components ) );
}

transient_vector transient_vector::from_angle( vertex alpha, std::span<const std::uint32_t> deltas )
{
  const auto arity = static_cast<unsigned>( deltas.size() );
  if ( arity == 0 || arity > max_vertex_arity )
  {
    throw std::invalid_argument( "unsupported vector arity" );
  }
  if ( ( alpha & ~full_mask( arity ) ) != 0 )
  {
    throw std::invalid_argument( "starting point does not fit the vector arity" );
  }
  std::vector<transient> components;
  components.reserve( arity );
  for ( unsigned i = 0; i < arity; ++i )
  {
    components.emplace_back( coordinate_bit( alpha, i, arity ), deltas[i] );
  }
  return transient_vector( std::move( components ) );
}

transient_vector transient_vector::parse( std::string_view literal )
{
  literal = trim( literal );
  std::vector<std::string_view> tokens;
  std::size_t depth = 0;
  std::size_t begin = 0;
  for ( std::size_t i = 0; i < literal.size(); ++i )
  {
    if ( literal[i] == '<' )
    {
      ++depth;
    }
    else if ( literal[i] == '>' )
    {
      if ( depth == 0 )
      {
        throw parse_error( "unbalanced '>' in vector literal '" + std::string( literal ) + "'" );
      }
      --depth;
    }
    else if ( literal[i] == ',' && depth == 0 )
    {
      tokens.push_back( literal.substr( begin, i - begin ) );
      begin = i + 1;
    }
  }
  if ( depth != 0 )
  {
    throw parse_error( "unbalanced '<' in vector literal '" + std::string( literal ) + "'" );
  }
  tokens.push_back( literal.substr( begin ) );

  // <v;d1,...,dn> with n >= 2 is the vector angle form; <b;k> is a transient.
  if ( tokens.size() == 1 && literal.size() >= 2 && literal.front() == '<' &&
       literal.substr( 1, literal.size() - 2 ).find( ',' ) != std::string_view::npos )
  {
    const auto body = literal.substr( 1, literal.size() - 2 );
    const auto semi = body.find( ';' );
    if ( semi == std::string_view::npos )
    {
      throw parse_error( "angle vector '" + std::string( literal ) + "' lacks ';'" );
    }
    const auto start = parse_unsigned( body.substr( 0, semi ), literal );
    std::vector<std::uint32_t> deltas;
    auto rest = body.substr( semi + 1 );
    while ( true )
    {
      const auto comma = rest.find( ',' );
      const auto delta = parse_unsigned( rest.substr( 0, comma ), literal );
      if ( delta > transient::max_changes )
      {
        throw parse_error( "angle vector '" + std::string( literal ) + "' has too many changes" );
      }
      deltas.push_back( static_cast<std::uint32_t>( delta ) );
      if ( comma == std::string_view::npos )
      {
        break;
      }
      rest = rest.substr( comma + 1 );
    }
    if ( deltas.size() > max_vertex_arity || start > full_mask( static_cast<unsigned>( deltas.size() ) ) )
    {
      throw parse_error( "angle vector '" + std::string( literal ) + "' starting point out of range" );
    }
    return from_angle( static_cast<vertex>( start ), deltas );
  }

  std::vector<transient> components;
  components.reserve( tokens.size() );
  for ( const auto token : tokens )
  {
    components.push_back( transient::parse( token ) );
  }
  return transient_vector( std::move( components ) );
}

std::uint64_t transient_vector::length() const noexcept
{
  std::uint64_t total = 0;
  for ( const auto& t : components_ )
  {
    total += t.length();
  }
  return total;
}

std::uint64_t transient_vector::changes() const noexcept
{
  return length() - components_.size();
}

std::vector<std::uint32_t> transient_vector::deltas() const
{
  std::vector<std::uint32_t> result;
  result.reserve( components_.size() );
  for ( const auto& t : components_ )
  {
    result.push_back( t.changes() );
  }
  return result;
}

vertex transient_vector::alpha() const
{
  if ( arity() > max_vertex_arity )
  {
    throw std::invalid_argument( "vector arity too large for a cube point" );
  }
  vertex v = 0;
  for ( const auto& t : components_ )
  {
    v = ( v << 1 ) | ( t.alpha() ? 1u : 0u );
  }
  return v;
}

vertex transient_vector::omega() const
{
  if ( arity() > max_vertex_arity )
  {
    throw std::invalid_argument( "vector arity too large for a cube point" );
  }
  vertex v = 0;
  for ( const auto& t : components_ )
  {
    v = ( v << 1 ) | ( t.omega() ? 1u : 0u );
  }
  return v;
}

bool transient_vector::proper() const noexcept
{
  for ( const auto& t : components_ )
  {
    if ( !t.proper() )
    {
      return false;
    }
  }
  return !components_.empty();
}

transient_vector transient_vector::successor( unsigned i ) const
{
  if ( i >= arity() )
  {
    throw std::out_of_range( "successor coordinate out of range" );
  }
  auto next = *this;
  next.components_[i] = components_[i].successor();
  return next;
}

std::vector<transient_vector> transient_vector::successors() const
{
  std::vector<transient_vector> result;
  result.reserve( arity() );
  for ( unsigned i = 0; i < arity(); ++i )
  {
    result.push_back( successor( i ) );
  }
  return result;
}

bool transient_vector::is_prefix_of( const transient_vector& other ) const
{
  if ( arity() != other.arity() )
  {
    throw std::invalid_argument( "prefix test on vectors of different arity" );
  }
  for ( unsigned i = 0; i < arity(); ++i )
  {
    if ( !components_[i].is_prefix_of( other.components_[i] ) )
    {
      return false;
    }
  }
  return true;
}

std::string transient_vector::to_string() const
{
  std::string s;
  for ( std::size_t i = 0; i < components_.size(); ++i )
  {
    if ( i > 0 )
    {
      s += ',';
    }
    s += components_[i].letters();
  }
  return s;
}

transient_vector circ( const transient_vector& s, const transient_vector& t )
{
  if ( s.arity() != t.arity() )
  {
    throw std::invalid_argument( "circ on vectors of different arity" );
  }
  std::vector<transient> components;
  components.reserve( s.arity() );
  for ( unsigned i = 0; i < s.arity(); ++i )
  {
    components.push_back( circ( s[i], t[i] ) );
  }
  return transient_vector( std::move( components ) );
}

transient_vector circ( const transient_vector& s, vertex v )
{
  return circ( s, transient_vector::from_vertex( v, s.arity() ) );
}

} // namespace tralg
