#include "tralg/cube.hpp"

#include "tralg/errors.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <charconv>
#include <stdexcept>

namespace tralg
{

namespace
{

constexpr std::uint64_t max_complete_search_states = 4'000'000;

walk walk_through( const prefix_digraph& digraph, const std::vector<std::size_t>& states )
{
  std::vector<vertex> points;
  points.reserve( states.size() );
  for ( const auto s : states )
  {
    points.push_back( digraph.point( s ) );
  }
  return walk( digraph.arity(), std::move( points ) );
}

} // namespace

walk::walk( unsigned arity, std::vector<vertex> vertices ) : arity_( arity ), vertices_( std::move( vertices ) )
{
  if ( arity == 0 || arity > max_vertex_arity )
  {
    throw std::invalid_argument( "unsupported walk arity" );
  }
  if ( vertices_.empty() )
  {
    throw std::invalid_argument( "a walk has at least one point" );
  }
  for ( std::size_t j = 0; j < vertices_.size(); ++j )
  {
    if ( ( vertices_[j] & ~full_mask( arity ) ) != 0 )
    {
      throw std::invalid_argument( "walk point " + std::to_string( vertices_[j] ) + " lies outside the " +
                                   std::to_string( arity ) + "-cube" );
    }
    if ( j > 0 && std::popcount( vertices_[j] ^ vertices_[j - 1] ) != 1 )
    {
      throw std::invalid_argument( "walk points " + std::to_string( vertices_[j - 1] ) + " and " +
                                   std::to_string( vertices_[j] ) + " are not adjacent" );
    }
  }
}

walk walk::parse( std::string_view text, unsigned arity )
{
  std::vector<vertex> points;
  if ( text.find( ',' ) == std::string_view::npos )
  {
    for ( const char c : text )
    {
      if ( c < '0' || c > '9' )
      {
        throw parse_error( "invalid character in walk '" + std::string( text ) + "'" );
      }
      points.push_back( static_cast<vertex>( c - '0' ) );
    }
  }
  else
  {
    std::size_t begin = 0;
    while ( begin <= text.size() )
    {
      const auto comma = std::min( text.find( ',', begin ), text.size() );
      const auto token = text.substr( begin, comma - begin );
      vertex v = 0;
      auto [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), v );
      if ( token.empty() || ec != std::errc{} || ptr != token.data() + token.size() )
      {
        throw parse_error( "invalid point in walk '" + std::string( text ) + "'" );
      }
      points.push_back( v );
      begin = comma + 1;
    }
  }
  try
  {
    return walk( arity, std::move( points ) );
  }
  catch ( const std::invalid_argument& e )
  {
    throw parse_error( e.what() );
  }
}

unsigned walk::step_coordinate( std::size_t j ) const
{
  if ( j + 1 >= vertices_.size() )
  {
    throw std::out_of_range( "walk step out of range" );
  }
  const vertex diff = vertices_[j] ^ vertices_[j + 1];
  return arity_ - 1u - static_cast<unsigned>( std::countr_zero( diff ) );
}

std::uint64_t walk::cost( const truth_table& f ) const
{
  if ( f.arity() != arity_ )
  {
    throw std::invalid_argument( "walk arity does not match function arity" );
  }
  std::uint64_t c = 0;
  for ( std::size_t j = 1; j < vertices_.size(); ++j )
  {
    c += f( vertices_[j] ) == f( vertices_[j - 1] ) ? 1u : 0u;
  }
  return c;
}

transient_vector walk::vector() const
{
  std::vector<std::uint32_t> changes( arity_, 0 );
  for ( std::size_t j = 0; j + 1 < vertices_.size(); ++j )
  {
    ++changes[step_coordinate( j )];
  }
  return transient_vector::from_angle( vertices_.front(), changes );
}

std::string walk::to_string() const
{
  std::string s;
  for ( std::size_t j = 0; j < vertices_.size(); ++j )
  {
    if ( j > 0 )
    {
      s += ',';
    }
    s += std::to_string( vertices_[j] );
  }
  return s;
}

function_cube::function_cube( truth_table f ) : f_( std::move( f ) ) {}

std::uint32_t function_cube::live_coordinates( vertex v ) const noexcept
{
  std::uint32_t set = 0;
  for ( unsigned k = 0; k < arity(); ++k )
  {
    if ( live( v, k ) )
    {
      set |= std::uint32_t{ 1 } << k;
    }
  }
  return set;
}

bool function_cube::is_focus( vertex v ) const noexcept
{
  return live_coordinates( v ) == full_mask( arity() );
}

std::vector<vertex> function_cube::foci() const
{
  std::vector<vertex> result;
  for ( vertex v = 0; v < f_.size(); ++v )
  {
    if ( is_focus( v ) )
    {
      result.push_back( v );
    }
  }
  return result;
}

std::vector<function_cube::edge> function_cube::edges() const
{
  std::vector<edge> result;
  for ( vertex v = 0; v < f_.size(); ++v )
  {
    for ( unsigned k = 0; k < arity(); ++k )
    {
      if ( !coordinate_bit( v, k, arity() ) )
      {
        result.push_back( { v, flip_coordinate( v, k, arity() ), k, live( v, k ) } );
      }
    }
  }
  return result;
}

std::string function_cube::edge_list( bool live_only ) const
{
  std::string s = "# " + std::string( live_only ? "live graph" : "cube" ) + " of " + f_.literal() + "\n";
  s += "# u v tag\n";
  for ( const auto& e : edges() )
  {
    if ( live_only && !e.live )
    {
      continue;
    }
    s += std::to_string( e.low ) + " " + std::to_string( e.high ) + ( e.live ? " live\n" : " dead\n" );
  }
  return s;
}

std::vector<vertex> foci( const truth_table& f )
{
  return function_cube( f ).foci();
}

walk walk_of_path( const digraph_path& p )
{
  if ( p.empty() )
  {
    throw std::invalid_argument( "empty path" );
  }
  std::vector<vertex> points;
  points.reserve( p.size() );
  for ( std::size_t j = 0; j < p.size(); ++j )
  {
    if ( j > 0 )
    {
      const auto& prev = p[j - 1].prefix;
      const auto& next = p[j].prefix;
      if ( prev.arity() != next.arity() || !prev.is_prefix_of( next ) || next.changes() != prev.changes() + 1 )
      {
        throw std::invalid_argument( "consecutive path states are not successors" );
      }
    }
    points.push_back( p[j].prefix.omega() );
  }
  return walk( p.front().prefix.arity(), std::move( points ) );
}

digraph_path path_of_walk( const truth_table& f, const walk& w )
{
  if ( f.arity() != w.arity() )
  {
    throw std::invalid_argument( "walk arity does not match function arity" );
  }
  digraph_path path;
  path.reserve( w.size() );
  auto prefix = transient_vector::from_vertex( w.front(), w.arity() );
  path.push_back( { prefix, f( w.front() ) } );
  for ( std::size_t j = 1; j < w.size(); ++j )
  {
    prefix = circ( prefix, w.vertices()[j] );
    path.push_back( { prefix, f( w.vertices()[j] ) } );
  }
  return path;
}

bool is_complete( const walk& w, const truth_table& f )
{
  if ( f.arity() != w.arity() )
  {
    throw std::invalid_argument( "walk arity does not match function arity" );
  }
  const function_cube cube( f );
  std::uint32_t covered = 0;
  for ( const auto v : w.vertices() )
  {
    covered |= cube.live_coordinates( v );
  }
  return covered == full_mask( f.arity() );
}

bool is_alternating( const walk& w )
{
  if ( w.arity() != 3 || w.size() != 6 )
  {
    throw std::invalid_argument( "alternation is defined for six-point walks on the 3-cube" );
  }
  for ( std::size_t i = 0; i < 3; ++i )
  {
    std::uint32_t seen = 0;
    for ( std::size_t j = i; j < i + 3; ++j )
    {
      seen |= std::uint32_t{ 1 } << w.step_coordinate( j );
    }
    if ( seen != 0b111u )
    {
      return false;
    }
  }
  return true;
}

optimal_walk_set optimal_walks( const truth_table& f, const transient_vector& x, std::uint64_t max_walks,
                                const evaluation_budget& budget )
{
  const prefix_digraph digraph( f, x, budget.max_states );
  const unsigned n = digraph.arity();

  // Saturating count of optimal continuations from each state.
  const std::uint64_t saturation = max_walks + 1;
  std::vector<std::uint64_t> count( digraph.size(), 0 );
  count[digraph.final_state()] = 1;
  for ( std::size_t s = digraph.size(); s-- > 0; )
  {
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( digraph.tight( s, i ) )
      {
        count[s] = std::min( saturation, count[s] + count[digraph.advance( s, i )] );
      }
    }
  }

  optimal_walk_set result;
  result.cost = digraph.optimal_cost();
  result.truncated = count[digraph.initial()] > max_walks;

  std::vector<std::size_t> states{ digraph.initial() };
  if ( result.truncated )
  {
    while ( states.back() != digraph.final_state() )
    {
      unsigned i = 0;
      while ( !digraph.tight( states.back(), i ) )
      {
        ++i;
      }
      states.push_back( digraph.advance( states.back(), i ) );
    }
    result.walks.push_back( walk_through( digraph, states ) );
    return result;
  }

  std::vector<unsigned> next{ 0 };
  while ( !states.empty() )
  {
    const std::size_t s = states.back();
    if ( s == digraph.final_state() )
    {
      result.walks.push_back( walk_through( digraph, states ) );
    }
    unsigned& i = next.back();
    while ( i < n && !digraph.tight( s, i ) )
    {
      ++i;
    }
    if ( i < n )
    {
      const auto successor = digraph.advance( s, i );
      ++i;
      states.push_back( successor );
      next.push_back( 0 );
    }
    else
    {
      states.pop_back();
      next.pop_back();
    }
  }
  return result;
}

std::optional<walk> complete_optimal_walk( const truth_table& f, const transient_vector& x,
                                           const evaluation_budget& budget )
{
  if ( f.arity() > max_table_arity )
  {
    throw std::invalid_argument( "function arity out of range" );
  }
  const prefix_digraph digraph( f, x, std::min( budget.max_states, max_complete_search_states ) );
  const function_cube cube( f );
  const unsigned n = digraph.arity();
  const std::uint32_t full = full_mask( n );
  const std::uint32_t masks = full + 1u;

  std::vector<std::uint32_t> cover( digraph.size() );
  for ( std::size_t s = 0; s < digraph.size(); ++s )
  {
    cover[s] = cube.live_coordinates( digraph.point( s ) );
  }

  // good[s] holds the coverage sets M (accumulated up to and including s)
  // from which an optimal continuation can still complete the walk.
  std::vector<std::bitset<256>> good( digraph.size() );
  good[digraph.final_state()].set( full );
  for ( std::size_t s = digraph.size() - 1; s-- > 0; )
  {
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( !digraph.tight( s, i ) )
      {
        continue;
      }
      const auto next = digraph.advance( s, i );
      if ( good[next].none() )
      {
        continue;
      }
      for ( std::uint32_t m = 0; m < masks; ++m )
      {
        if ( ( m & cover[s] ) == cover[s] && good[next].test( m | cover[next] ) )
        {
          good[s].set( m );
        }
      }
    }
  }

  std::size_t s = digraph.initial();
  std::uint32_t covered = cover[s];
  if ( !good[s].test( covered ) )
  {
    return std::nullopt;
  }
  std::vector<std::size_t> states{ s };
  while ( s != digraph.final_state() )
  {
    unsigned i = 0;
    while ( !( digraph.tight( s, i ) && good[digraph.advance( s, i )].test( covered | cover[digraph.advance( s, i )] ) ) )
    {
      ++i;
    }
    s = digraph.advance( s, i );
    covered |= cover[s];
    states.push_back( s );
  }
  return walk_through( digraph, states );
}

} // namespace tralg
