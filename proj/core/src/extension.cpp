#include "tralg/extension.hpp"

#include "tralg/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace tralg
{

namespace
{

void check_arity( const truth_table& f, const transient_vector& x )
{
  if ( f.arity() != x.arity() )
  {
    throw std::invalid_argument( "vector arity " + std::to_string( x.arity() ) + " does not match function arity " +
                                 std::to_string( f.arity() ) );
  }
}

std::uint32_t checked_u32( std::uint64_t value )
{
  if ( value > transient::max_changes )
  {
    throw std::out_of_range( "transient exceeds the supported number of changes" );
  }
  return static_cast<std::uint32_t>( value );
}

/// Transient with the given first and last letters and number of zeros.
transient from_zeros( bool first, bool last, std::uint64_t zeros )
{
  if ( zeros == 0 )
  {
    return transient( true, 0 );
  }
  std::uint64_t length = 2 * zeros;
  if ( !first && !last )
  {
    length -= 1;
  }
  else if ( first && last )
  {
    length += 1;
  }
  return transient( first, checked_u32( length - 1 ) );
}

} // namespace

__extension__ using uint128 = unsigned __int128;

std::optional<std::uint64_t> multinomial( std::span<const std::uint32_t> parts )
{
  // Product of binomials C(m_1 + ... + m_k, m_k), each built incrementally.
  uint128 result = 1;
  std::uint64_t total = 0;
  for ( const auto part : parts )
  {
    for ( std::uint32_t j = 1; j <= part; ++j )
    {
      ++total;
      result = result * total / j;
      if ( result > std::numeric_limits<std::uint64_t>::max() )
      {
        return std::nullopt;
      }
    }
  }
  return static_cast<std::uint64_t>( result );
}

std::optional<std::uint64_t> prefix_count( const transient_vector& x )
{
  uint128 result = 1;
  for ( const auto& t : x )
  {
    result *= std::uint64_t{ t.changes() } + 1u;
    if ( result > std::numeric_limits<std::uint64_t>::max() )
    {
      return std::nullopt;
    }
  }
  return static_cast<std::uint64_t>( result );
}

cost_report extension_bruteforce( const truth_table& f, const transient_vector& x, const evaluation_budget& budget )
{
  check_arity( f, x );
  const auto deltas = x.deltas();
  const auto expected = multinomial( deltas );
  if ( !expected || *expected > budget.max_paths )
  {
    throw budget_exceeded( "path enumeration needs " + ( expected ? std::to_string( *expected ) : "> 2^64" ) +
                           " paths, budget is " + std::to_string( budget.max_paths ) );
  }

  const unsigned n = x.arity();
  const std::size_t m = x.changes();
  std::vector<std::uint32_t> consumed( n, 0 );
  std::vector<unsigned> next( m + 1, 0 );
  std::vector<unsigned> chosen( m, 0 );
  std::vector<std::uint64_t> changes_at( m + 1, 0 );
  std::vector<bool> lambda_at( m + 1, false );

  vertex point = x.alpha();
  lambda_at[0] = f( point );

  std::uint64_t paths = 0;
  std::optional<std::uint64_t> best;
  std::vector<unsigned> best_order;

  std::size_t depth = 0;
  while ( true )
  {
    if ( depth == m )
    {
      ++paths;
      if ( !best || changes_at[m] > *best )
      {
        best = changes_at[m];
        best_order = chosen;
      }
    }
    else
    {
      unsigned i = next[depth];
      while ( i < n && consumed[i] == deltas[i] )
      {
        ++i;
      }
      if ( i < n )
      {
        next[depth] = i + 1;
        chosen[depth] = i;
        ++consumed[i];
        point = flip_coordinate( point, i, n );
        const bool lambda = f( point );
        lambda_at[depth + 1] = lambda;
        changes_at[depth + 1] = changes_at[depth] + ( lambda != lambda_at[depth] ? 1u : 0u );
        ++depth;
        next[depth] = 0;
        continue;
      }
    }
    if ( depth == 0 )
    {
      break;
    }
    --depth;
    --consumed[chosen[depth]];
    point = flip_coordinate( point, chosen[depth], n );
  }

  if ( paths != *expected )
  {
    throw inconsistency_error( "enumerated " + std::to_string( paths ) + " paths, multinomial gives " +
                               std::to_string( *expected ) );
  }

  cost_report report;
  report.extension = transient( f( x.alpha() ), checked_u32( *best ) );
  report.cost = m - *best;
  report.optimal_path = path_from_order( f, x, best_order );
  report.paths_enumerated = paths;
  return report;
}

prefix_digraph::prefix_digraph( const truth_table& f, const transient_vector& x, std::uint64_t max_states )
    : f_( f ), x_( x )
{
  check_arity( f, x );
  const auto count = prefix_count( x );
  if ( !count || *count > max_states )
  {
    throw budget_exceeded( "prefix lattice has " + ( count ? std::to_string( *count ) : "> 2^64" ) +
                           " states, budget is " + std::to_string( max_states ) );
  }
  const unsigned n = x.arity();
  strides_.assign( n, 1 );
  radices_.resize( n );
  for ( unsigned i = n; i-- > 0; )
  {
    radices_[i] = x[i].changes() + 1u;
    if ( i + 1 < n )
    {
      strides_[i] = strides_[i + 1] * radices_[i + 1];
    }
  }

  cost_to_go_.assign( static_cast<std::size_t>( *count ), 0 );
  for ( std::size_t s = cost_to_go_.size(); s-- > 0; )
  {
    const vertex here = point( s );
    const bool lambda_here = f_( here );
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( can_advance( s, i ) )
      {
        const bool lambda_next = f_( flip_coordinate( here, i, n ) );
        best = std::min( best, cost_to_go_[advance( s, i )] + ( lambda_here == lambda_next ? 1u : 0u ) );
      }
    }
    cost_to_go_[s] = best == std::numeric_limits<std::uint32_t>::max() ? 0u : best;
  }
}

vertex prefix_digraph::point( std::size_t state ) const noexcept
{
  const unsigned n = arity();
  vertex v = 0;
  for ( unsigned i = 0; i < n; ++i )
  {
    const bool bit = x_[i].alpha() != ( ( consumed( state, i ) & 1u ) != 0 );
    v = ( v << 1 ) | ( bit ? 1u : 0u );
  }
  return v;
}

bool prefix_digraph::tight( std::size_t state, unsigned coordinate ) const noexcept
{
  if ( !can_advance( state, coordinate ) )
  {
    return false;
  }
  const std::size_t next = advance( state, coordinate );
  const std::uint32_t step = lambda( state ) == lambda( next ) ? 1u : 0u;
  return step + cost_to_go_[next] == cost_to_go_[state];
}

path_state prefix_digraph::state( std::size_t index ) const
{
  std::vector<transient> components;
  components.reserve( arity() );
  for ( unsigned i = 0; i < arity(); ++i )
  {
    components.push_back( x_[i].prefix( consumed( index, i ) ) );
  }
  return path_state{ transient_vector( std::move( components ) ), lambda( index ) };
}

cost_report extension_dp( const truth_table& f, const transient_vector& x, const evaluation_budget& budget )
{
  const prefix_digraph digraph( f, x, budget.max_states );
  cost_report report;
  report.cost = digraph.optimal_cost();
  report.extension = transient( f( x.alpha() ), checked_u32( x.changes() - report.cost ) );

  std::size_t s = digraph.initial();
  report.optimal_path.push_back( digraph.state( s ) );
  while ( s != digraph.final_state() )
  {
    unsigned i = 0;
    while ( !digraph.tight( s, i ) )
    {
      ++i;
    }
    s = digraph.advance( s, i );
    report.optimal_path.push_back( digraph.state( s ) );
  }
  return report;
}

transient extension_formula( const g_decomposition& d, const transient_vector& x )
{
  if ( d.arity != x.arity() )
  {
    throw std::invalid_argument( "decomposition arity does not match vector arity" );
  }
  const unsigned n = x.arity();
  transient result;
  if ( d.base == g_base::xor_base )
  {
    bool first = false;
    std::uint64_t length = 1;
    for ( unsigned i = 0; i < n; ++i )
    {
      first = first != ( x[i].alpha() != coordinate_bit( d.input_mask, i, n ) );
      length += x[i].length() - 1u;
    }
    result = transient( first, checked_u32( length - 1 ) );
  }
  else
  {
    bool first = false;
    bool last = false;
    bool constant_one = false;
    std::uint64_t zeros = 1;
    for ( unsigned i = 0; i < n; ++i )
    {
      const transient t = coordinate_bit( d.input_mask, i, n ) ? x[i].complemented() : x[i];
      first = first || t.alpha();
      last = last || t.omega();
      constant_one = constant_one || ( t.alpha() && t.changes() == 0 );
      zeros += t.zeros() - 1u;
    }
    result = from_zeros( first, last, constant_one ? 0 : zeros );
  }
  return d.output_complement ? result.complemented() : result;
}

std::uint64_t cost_formula( pure_kind kind, const transient_vector& x )
{
  if ( !x.proper() )
  {
    throw std::invalid_argument( "cost formulas require a proper vector" );
  }
  const auto monus_one = []( std::uint64_t v ) { return v == 0 ? 0 : v - 1; };
  const unsigned n = x.arity();
  const auto units_alpha = static_cast<std::uint64_t>( std::popcount( x.alpha() ) );
  const auto units_omega = static_cast<std::uint64_t>( std::popcount( x.omega() ) );
  switch ( kind )
  {
  case pure_kind::xor_kind:
    return 0;
  case pure_kind::or_kind:
    return monus_one( units_alpha ) + monus_one( units_omega );
  case pure_kind::and_kind:
    return monus_one( n - units_alpha ) + monus_one( n - units_omega );
  }
  throw std::invalid_argument( "unknown operator kind" );
}

digraph_path path_from_order( const truth_table& f, const transient_vector& x, std::span<const unsigned> order )
{
  check_arity( f, x );
  if ( order.size() != x.changes() )
  {
    throw std::invalid_argument( "coordinate order must list every change of the vector" );
  }
  std::vector<std::uint32_t> consumed( x.arity(), 0 );
  auto prefix_of = [&] {
    std::vector<transient> components;
    components.reserve( x.arity() );
    for ( unsigned i = 0; i < x.arity(); ++i )
    {
      components.push_back( x[i].prefix( consumed[i] ) );
    }
    transient_vector prefix( std::move( components ) );
    const bool lambda = f( prefix.omega() );
    return path_state{ std::move( prefix ), lambda };
  };
  digraph_path path;
  path.reserve( order.size() + 1 );
  path.push_back( prefix_of() );
  for ( const auto i : order )
  {
    if ( i >= x.arity() || consumed[i] == x[i].changes() )
    {
      throw std::invalid_argument( "coordinate order does not match the vector's changes" );
    }
    ++consumed[i];
    path.push_back( prefix_of() );
  }
  return path;
}

std::string lambda_word( const digraph_path& p )
{
  std::string word;
  word.reserve( p.size() );
  for ( const auto& s : p )
  {
    word += s.lambda ? '1' : '0';
  }
  return word;
}

std::uint64_t path_cost( const digraph_path& p )
{
  std::uint64_t cost = 0;
  for ( std::size_t i = 1; i < p.size(); ++i )
  {
    cost += p[i].lambda == p[i - 1].lambda ? 1u : 0u;
  }
  return cost;
}

} // namespace tralg
