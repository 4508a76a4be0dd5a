#include <tralg/cube.hpp>
#include <tralg/extension.hpp>
#include <tralg/function_literal.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace tralg;

namespace
{
const truth_table f1 = parse_function( "x1+x2'" );
// The tabulated walks below have the tabulated costs for x1(x2 == x3); with
// x1(x2 ^ x3) walk 2645 costs 0. Both lie in one NPN class.
const truth_table f2 = parse_function( "x1(x2^x3')" );

transient_vector vec( const char* s )
{
  return transient_vector::parse( s );
}
} // namespace

TEST( walk, validation_and_vector )
{
  const walk w( 2, { 0b01, 0b00, 0b01, 0b11, 0b10, 0b00 } );
  EXPECT_EQ( w.vector().to_string(), "010,1010" );
  EXPECT_EQ( w.step_coordinate( 0 ), 1u );
  EXPECT_EQ( w.step_coordinate( 2 ), 0u );
  EXPECT_THROW( walk( 2, { 0b00, 0b11 } ), std::invalid_argument );
  EXPECT_THROW( walk( 2, { 0b00, 0b00 } ), std::invalid_argument );
  EXPECT_THROW( walk( 2, { 0b100 } ), std::invalid_argument );
  EXPECT_THROW( walk( 2, {} ), std::invalid_argument );
  EXPECT_EQ( walk::parse( "2645", 3 ).to_string(), "2,6,4,5" );
  EXPECT_EQ( walk::parse( "2,6,4,5", 3 ), walk::parse( "2645", 3 ) );
}

TEST( walk, path_to_walk_from_worked_example )
{
  const unsigned order[] = { 1, 1, 0, 1, 0 };
  const auto p = path_from_order( f1, vec( "010,1010" ), order );
  const auto w = walk_of_path( p );
  EXPECT_EQ( w.vertices(), ( std::vector<vertex>{ 0b01, 0b00, 0b01, 0b11, 0b10, 0b00 } ) );
  EXPECT_EQ( w.cost( f1 ), 2u );
  EXPECT_EQ( w.cost( f1 ), path_cost( p ) );
}

TEST( walk, walk_to_path_from_worked_example )
{
  const walk w( 2, { 0b01, 0b00, 0b01, 0b11, 0b10, 0b00 } );
  const auto p = path_of_walk( f1, w );
  std::vector<std::string> prefixes;
  for ( const auto& s : p )
  {
    prefixes.push_back( s.prefix.to_string() );
  }
  EXPECT_EQ( prefixes, ( std::vector<std::string>{ "0,1", "0,10", "0,101", "01,101", "01,1010", "010,1010" } ) );
  EXPECT_EQ( path_cost( p ), 2u );
  EXPECT_EQ( walk_of_path( p ), w );
}

TEST( walk, zero_cost_path_lies_in_live_graph )
{
  const unsigned order[] = { 0, 0, 1, 1, 1 };
  const auto w = walk_of_path( path_from_order( f1, vec( "010,1010" ), order ) );
  EXPECT_EQ( w.vertices(), ( std::vector<vertex>{ 0b01, 0b11, 0b01, 0b00, 0b01, 0b00 } ) );
  EXPECT_EQ( w.cost( f1 ), 0u );
  const function_cube cube( f1 );
  for ( std::size_t j = 0; j + 1 < w.size(); ++j )
  {
    EXPECT_TRUE( cube.live( w.vertices()[j], w.step_coordinate( j ) ) );
  }
}

TEST( walk, single_vertex )
{
  const walk w( 3, { 5 } );
  EXPECT_EQ( w.cost( f2 ), 0u );
  const auto p = path_of_walk( f2, w );
  ASSERT_EQ( p.size(), 1u );
  EXPECT_EQ( p[0].prefix.to_string(), "1,0,1" );
  EXPECT_EQ( walk_of_path( p ), w );
}

TEST( cube, foci )
{
  EXPECT_TRUE( foci( parse_function( "x1(x2+x3)" ) ).empty() );
  EXPECT_TRUE( foci( parse_function( "x1x2+x2x3+x3x1" ) ).empty() );
  EXPECT_EQ( foci( make_primitive( primitive::xor_gate, 3 ) ).size(), 8u );
  EXPECT_EQ( foci( f2 ), ( std::vector<vertex>{ 4, 7 } ) );
  EXPECT_EQ( foci( parse_function( "x1(x2^x3)" ) ), ( std::vector<vertex>{ 5, 6 } ) );
}

TEST( cube, edges )
{
  const function_cube c( f1 );
  const auto e = c.edges();
  EXPECT_EQ( e.size(), 4u );
  EXPECT_EQ( std::count_if( e.begin(), e.end(), []( const auto& x ) { return x.live; } ), 2 );
  EXPECT_EQ( c.edge_list( true ), "# live graph of tt:d/2\n# u v tag\n0 1 live\n1 3 live\n" );
}

TEST( cube, completeness )
{
  EXPECT_TRUE( is_complete( walk::parse( "2645", 3 ), f2 ) );
  for ( vertex v = 0; v < 8; ++v )
  {
    EXPECT_TRUE( is_complete( walk( 3, { v } ), make_primitive( primitive::xor_gate, 3 ) ) );
  }
  // Vertex 0 of x1(x2^x3): no live edge of coordinate 2 or 3 touches it.
  EXPECT_FALSE( is_complete( walk( 3, { 0 } ), parse_function( "x1(x2^x3)" ) ) );
}

TEST( cube, alternation )
{
  EXPECT_TRUE( is_alternating( walk::parse( "015762", 3 ) ) );
  EXPECT_TRUE( is_alternating( walk::parse( "132645", 3 ) ) );
  EXPECT_FALSE( is_alternating( walk::parse( "010101", 3 ) ) );
  EXPECT_THROW( (void)is_alternating( walk::parse( "0154", 3 ) ), std::invalid_argument );
  EXPECT_THROW( (void)is_alternating( walk::parse( "0,1,3,2,0,1", 2 ) ), std::invalid_argument );
}

TEST( cube, optimal_walks_from_vertex_two )
{
  const auto a = optimal_walks( f2, vec( "<2;1,1,1>" ) );
  EXPECT_EQ( a.cost, 1u );
  EXPECT_FALSE( a.truncated );
  EXPECT_NE( std::find( a.walks.begin(), a.walks.end(), walk::parse( "2645", 3 ) ), a.walks.end() );
  for ( const auto& w : a.walks )
  {
    EXPECT_EQ( w.vector(), vec( "<2;1,1,1>" ) );
    EXPECT_EQ( w.cost( f2 ), 1u );
  }
  EXPECT_EQ( optimal_walks( f2, vec( "<2;2,1,1>" ) ).cost, 2u );
}

TEST( cube, fixture_walks_match_costs )
{
  const std::pair<const char*, std::uint64_t> table[] = { { "2645", 1 },     { "26454", 1 },  { "26467", 1 },
                                                          { "264676", 1 },   { "267640", 1 }, { "264673", 1 },
                                                          { "26451", 2 },    { "2646762", 2 } };
  for ( const auto& [text, cost] : table )
  {
    const auto w = walk::parse( text, 3 );
    EXPECT_EQ( w.cost( f2 ), cost ) << text;
    EXPECT_EQ( extension_dp( f2, w.vector() ).cost, cost ) << text;
  }
}

TEST( cube, trivial_optimal_walk )
{
  const auto s = optimal_walks( f2, vec( "0,1,0" ) );
  EXPECT_EQ( s.cost, 0u );
  ASSERT_EQ( s.walks.size(), 1u );
  EXPECT_EQ( s.walks[0], walk( 3, { 2 } ) );
}

TEST( cube, truncation )
{
  const auto xor3 = make_primitive( primitive::xor_gate, 3 );
  const auto x = vec( "<0;4>,<0;4>,<0;4>" );
  // Every one of the 12!/(4!4!4!) = 34650 walks is optimal for parity.
  const auto capped = optimal_walks( xor3, x );
  EXPECT_TRUE( capped.truncated );
  ASSERT_EQ( capped.walks.size(), 1u );
  EXPECT_EQ( capped.walks[0].cost( xor3 ), 0u );
  const auto all = optimal_walks( xor3, x, 100'000 );
  EXPECT_FALSE( all.truncated );
  EXPECT_EQ( all.walks.size(), 34650u );
}

TEST( cube, complete_optimal_walk )
{
  const auto w = complete_optimal_walk( f2, vec( "<2;1,1,1>" ) );
  ASSERT_TRUE( w );
  EXPECT_TRUE( is_complete( *w, f2 ) );
  EXPECT_EQ( w->cost( f2 ), 1u );
  EXPECT_EQ( w->vector(), vec( "<2;1,1,1>" ) );
}
