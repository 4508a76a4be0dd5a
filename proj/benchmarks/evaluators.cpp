#include <tralg/tralg.hpp>

#include <benchmark/benchmark.h>

using namespace tralg;

namespace
{

transient_vector square_vector( unsigned n, std::uint32_t changes )
{
  std::vector<transient> c;
  for ( unsigned i = 0; i < n; ++i )
  {
    c.emplace_back( i & 1u, changes );
  }
  return transient_vector( c );
}

const truth_table or3 = make_primitive( primitive::or_gate, 3 );

void bm_bruteforce( benchmark::State& state )
{
  const auto x = square_vector( 3, static_cast<std::uint32_t>( state.range( 0 ) ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( extension_bruteforce( or3, x ) );
  }
}
BENCHMARK( bm_bruteforce )->DenseRange( 1, 4 );

void bm_dp( benchmark::State& state )
{
  const auto x = square_vector( 3, static_cast<std::uint32_t>( state.range( 0 ) ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( extension_dp( or3, x ) );
  }
}
BENCHMARK( bm_dp )->RangeMultiplier( 4 )->Range( 1, 64 );

void bm_formula( benchmark::State& state )
{
  const auto x = square_vector( 3, static_cast<std::uint32_t>( state.range( 0 ) ) );
  const auto d = primitive_decomposition( primitive::or_gate, 3 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( extension_formula( d, x ) );
  }
}
BENCHMARK( bm_formula )->RangeMultiplier( 4 )->Range( 1, 256 );

void bm_npn_canonical( benchmark::State& state )
{
  const auto n = static_cast<unsigned>( state.range( 0 ) );
  const auto f = truth_table::from_function( n, []( vertex v ) { return ( v * 2654435761u ) >> 31; } );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( npn_canonical( f ) );
  }
}
BENCHMARK( bm_npn_canonical )->DenseRange( 2, 5 );

void bm_convenience( benchmark::State& state )
{
  const auto f = state.range( 0 ) == 3 ? parse_function( "x1x2+x2x3+x3x1" ) : s23_plus_and5();
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( decide_convenience( f ) );
  }
}
BENCHMARK( bm_convenience )->Arg( 3 )->Arg( 5 )->Unit( benchmark::kMillisecond );

} // namespace

BENCHMARK_MAIN();
