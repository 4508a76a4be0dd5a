#include "tralg/npn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tralg
{

namespace
{

/// Index maps for all (permutation, mask) pairs of one arity: entry
/// [y] is the f-point read when g is evaluated at y.
struct transform_table
{
  std::vector<npn_transform> transforms;
  std::vector<std::vector<vertex>> maps;
};

const transform_table& transforms_for( unsigned arity )
{
  static std::vector<transform_table> cache = [] {
    std::vector<transform_table> tables( max_canonical_arity + 1 );
    for ( unsigned n = 1; n <= max_canonical_arity; ++n )
    {
      std::vector<unsigned> perm( n );
      std::iota( perm.begin(), perm.end(), 0u );
      do
      {
        for ( vertex mask = 0; mask < ( vertex{ 1 } << n ); ++mask )
        {
          npn_transform t{ perm, mask, false };
          std::vector<vertex> map( std::size_t{ 1 } << n );
          for ( vertex y = 0; y < map.size(); ++y )
          {
            map[y] = t.permute( y ^ mask );
          }
          tables[n].transforms.push_back( std::move( t ) );
          tables[n].maps.push_back( std::move( map ) );
        }
      } while ( std::next_permutation( perm.begin(), perm.end() ) );
    }
    return tables;
  }();
  return cache.at( arity );
}

void check_canonical_arity( unsigned arity )
{
  if ( arity > max_canonical_arity )
  {
    throw std::invalid_argument( "exhaustive NPN sweep supports arity <= 5" );
  }
}

} // namespace

npn_transform npn_transform::identity( unsigned arity )
{
  npn_transform t;
  t.permutation.resize( arity );
  std::iota( t.permutation.begin(), t.permutation.end(), 0u );
  return t;
}

vertex npn_transform::permute( vertex v ) const noexcept
{
  const unsigned n = arity();
  vertex w = 0;
  for ( unsigned i = 0; i < n; ++i )
  {
    if ( coordinate_bit( v, i, n ) )
    {
      w |= coordinate_mask( permutation[i], n );
    }
  }
  return w;
}

npn_transform npn_transform::inverse() const
{
  npn_transform inv;
  inv.permutation.resize( arity() );
  for ( unsigned i = 0; i < arity(); ++i )
  {
    inv.permutation[permutation[i]] = i;
  }
  inv.input_mask = permute( input_mask );
  inv.output_complement = output_complement;
  return inv;
}

npn_transform compose( const npn_transform& first, const npn_transform& then )
{
  if ( first.arity() != then.arity() )
  {
    throw std::invalid_argument( "composing transforms of different arity" );
  }
  npn_transform result;
  result.permutation.resize( first.arity() );
  for ( unsigned i = 0; i < first.arity(); ++i )
  {
    result.permutation[i] = first.permutation[then.permutation[i]];
  }
  result.input_mask = then.input_mask ^ then.inverse().permute( first.input_mask );
  result.output_complement = first.output_complement != then.output_complement;
  return result;
}

truth_table apply_transform( const truth_table& f, const npn_transform& t )
{
  if ( t.arity() != f.arity() )
  {
    throw std::invalid_argument( "transform arity does not match truth table arity" );
  }
  if ( ( t.input_mask & ~full_mask( f.arity() ) ) != 0 )
  {
    throw std::invalid_argument( "input mask exceeds transform arity" );
  }
  std::vector<bool> seen( t.arity(), false );
  for ( const auto p : t.permutation )
  {
    if ( p >= t.arity() || seen[p] )
    {
      throw std::invalid_argument( "transform permutation is not a permutation" );
    }
    seen[p] = true;
  }
  return truth_table::from_function(
      f.arity(), [&]( vertex y ) { return t.output_complement != f( t.permute( y ^ t.input_mask ) ); } );
}

void for_each_npn_transform( unsigned arity, const std::function<void( const npn_transform& )>& visit )
{
  check_canonical_arity( arity );
  for ( npn_transform t : transforms_for( arity ).transforms )
  {
    visit( t );
    t.output_complement = true;
    visit( t );
  }
}

canonical_form npn_canonical_form( const truth_table& f )
{
  check_canonical_arity( f.arity() );
  const auto& table = transforms_for( f.arity() );
  std::optional<canonical_form> best;
  truth_table candidate( f.arity() );
  for ( std::size_t k = 0; k < table.maps.size(); ++k )
  {
    const auto& map = table.maps[k];
    for ( const bool out : { false, true } )
    {
      for ( vertex y = 0; y < map.size(); ++y )
      {
        candidate.set( y, out != f( map[y] ) );
      }
      if ( !best || candidate < best->representative )
      {
        npn_transform t = table.transforms[k];
        t.output_complement = out;
        best = canonical_form{ candidate, std::move( t ) };
      }
    }
  }
  return *best;
}

truth_table npn_canonical( const truth_table& f )
{
  return npn_canonical_form( f ).representative;
}

std::vector<truth_table> npn_orbit( const truth_table& f )
{
  check_canonical_arity( f.arity() );
  const auto& table = transforms_for( f.arity() );
  std::vector<truth_table> orbit;
  orbit.reserve( table.maps.size() * 2 );
  for ( const auto& map : table.maps )
  {
    truth_table g( f.arity() );
    for ( vertex y = 0; y < map.size(); ++y )
    {
      g.set( y, f( map[y] ) );
    }
    orbit.push_back( g );
    orbit.push_back( g.complemented() );
  }
  std::sort( orbit.begin(), orbit.end() );
  orbit.erase( std::unique( orbit.begin(), orbit.end() ), orbit.end() );
  return orbit;
}

npn_partition npn_classes( unsigned arity )
{
  if ( arity == 0 || arity > 4 )
  {
    throw std::invalid_argument( "full class partition supports arity 1..4" );
  }
  const std::uint64_t count = std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << arity );
  constexpr auto unassigned = ~std::uint32_t{ 0 };
  npn_partition partition;
  partition.arity = arity;
  partition.class_of.assign( count, unassigned );

  // Scanning in increasing order meets each class first at its least member.
  std::vector<std::uint32_t> id_by_discovery;
  for ( std::uint64_t value = 0; value < count; ++value )
  {
    if ( partition.class_of[value] != unassigned )
    {
      continue;
    }
    const truth_table f = truth_table::from_function( arity, [&]( vertex v ) { return ( value >> v ) & 1u; } );
    const auto id = static_cast<std::uint32_t>( partition.representatives.size() );
    const auto orbit = npn_orbit( f );
    for ( const auto& g : orbit )
    {
      partition.class_of[g.bits64()] = id;
    }
    partition.representatives.push_back( f );
    partition.class_sizes.push_back( static_cast<std::uint32_t>( orbit.size() ) );
  }
  return partition;
}

} // namespace tralg
