#include <tralg/errors.hpp>
#include <tralg/function_literal.hpp>
#include <tralg/g_class.hpp>
#include <tralg/npn.hpp>
#include <tralg/truth_table.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace tralg;

namespace
{
truth_table fn( const char* text, std::optional<unsigned> arity = std::nullopt )
{
  return parse_function( text, arity );
}
} // namespace

TEST( truth_table, evaluate_primitives )
{
  const auto or2 = make_primitive( primitive::or_gate, 2 );
  const bool zero_zero[] = { false, false };
  EXPECT_FALSE( or2.evaluate( zero_zero ) );
  const bool one_one_zero[] = { true, true, false };
  EXPECT_FALSE( make_primitive( primitive::xor_gate, 3 ).evaluate( one_one_zero ) );
  const bool one_zero_one[] = { true, false, true };
  EXPECT_TRUE( fn( "x1x2+x2x3+x3x1" ).evaluate( one_zero_one ) );
  const bool too_short[] = { true };
  EXPECT_THROW( (void)or2.evaluate( too_short ), std::invalid_argument );
  EXPECT_THROW( (void)or2.evaluate( vertex{ 4 } ), std::out_of_range );
}

TEST( truth_table, msb_is_first_variable )
{
  const auto x1 = fn( "x1", 3 );
  EXPECT_TRUE( x1( 0b100 ) );
  EXPECT_FALSE( x1( 0b011 ) );
  EXPECT_EQ( fn( "x1x2" ).literal(), "tt:8/2" );
}

TEST( truth_table, hex_literals )
{
  const auto maj = truth_table::parse( "tt:e8/3" );
  EXPECT_EQ( maj, fn( "x1x2+x2x3+x3x1" ) );
  EXPECT_EQ( maj.hex(), "e8" );
  EXPECT_EQ( truth_table::parse( "tt:1/1" ).literal(), "tt:1/1" );
  for ( const char* bad : { "tt:1ff/3", "tt:zz/3", "tt:1/9", "tt:1", "e8/3", "tt:/3" } )
  {
    EXPECT_THROW( (void)truth_table::parse( bad ), parse_error ) << bad;
  }
  EXPECT_THROW( (void)truth_table( 0 ), std::invalid_argument );
}

TEST( truth_table, arity_eight_is_supported )
{
  const auto x = make_primitive( primitive::xor_gate, 8 );
  EXPECT_EQ( x.count_ones(), 128u );
  EXPECT_TRUE( x.depends_on_all() );
  EXPECT_EQ( truth_table::parse( x.literal() ), x );
}

TEST( truth_table, dependence )
{
  EXPECT_TRUE( fn( "x1+x2" ).depends_on( 0 ) );
  const truth_table zero( 3 );
  for ( unsigned k = 0; k < 3; ++k )
  {
    EXPECT_FALSE( zero.depends_on( k ) );
  }
  EXPECT_TRUE( fn( "x2x3+x1x2'x3'" ).depends_on( 0 ) );
  EXPECT_THROW( (void)zero.depends_on( 3 ), std::out_of_range );
  EXPECT_EQ( fn( "x1+x3", 3 ).support(), ( std::vector<unsigned>{ 0, 2 } ) );
}

TEST( truth_table, projection_onto_support )
{
  const auto f = fn( "x1+x3", 3 );
  const std::vector<unsigned> support = f.support();
  EXPECT_EQ( f.project( support ), fn( "x1+x2" ) );
}

TEST( truth_table, primitive_names )
{
  EXPECT_EQ( primitive_from_name( "XNOR" ), primitive::xnor_gate );
  EXPECT_EQ( primitive_name( primitive::nand_gate ), "NAND" );
  EXPECT_FALSE( primitive_from_name( "MUX" ).has_value() );
  EXPECT_EQ( make_primitive( primitive::nor_gate, 2 ), fn( "(x1+x2)'" ) );
  EXPECT_THROW( (void)make_primitive( primitive::not_gate, 2 ), std::invalid_argument );
}

TEST( npn, identity_and_double_output_complement )
{
  const auto f = fn( "x1(x2^x3)" );
  EXPECT_EQ( apply_transform( f, npn_transform::identity( 3 ) ), f );
  auto c = npn_transform::identity( 3 );
  c.output_complement = true;
  EXPECT_EQ( apply_transform( apply_transform( f, c ), c ), f );
}

TEST( npn, size_mismatch_is_rejected )
{
  EXPECT_THROW( (void)apply_transform( fn( "x1x2" ), npn_transform::identity( 3 ) ), std::invalid_argument );
  npn_transform bad{ { 0, 0 }, 0, false };
  EXPECT_THROW( (void)apply_transform( fn( "x1x2" ), bad ), std::invalid_argument );
}

TEST( npn, complementing_input_and_output_of_or )
{
  // x+y with y and the output complemented is x'y; renaming y to z gives x'z.
  npn_transform t{ { 0, 1 }, 0b01, true };
  EXPECT_EQ( apply_transform( fn( "x+y", 2 ), t ), fn( "x'y", 2 ) );
  EXPECT_EQ( npn_canonical( fn( "x'z" ) ), npn_canonical( fn( "x+y" ) ) );
}

TEST( npn, inverse_and_composition )
{
  std::mt19937_64 rng( 7 );
  const auto f = fn( "x1(x2+x3')+x4" );
  std::vector<npn_transform> all;
  for_each_npn_transform( 4, [&]( const npn_transform& t ) { all.push_back( t ); } );
  ASSERT_EQ( all.size(), 24u * 16u * 2u );
  for ( int k = 0; k < 200; ++k )
  {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    EXPECT_EQ( apply_transform( apply_transform( f, a ), a.inverse() ), f );
    EXPECT_EQ( apply_transform( apply_transform( f, a ), b ), apply_transform( f, compose( a, b ) ) );
  }
}

TEST( npn, canonical_is_orbit_invariant )
{
  std::mt19937_64 rng( 11 );
  std::vector<npn_transform> all;
  for_each_npn_transform( 3, [&]( const npn_transform& t ) { all.push_back( t ); } );
  for ( std::uint32_t bits = 0; bits < 256; ++bits )
  {
    const auto f = truth_table::from_function( 3, [bits]( vertex v ) { return ( bits >> v ) & 1u; } );
    const auto c = npn_canonical( f );
    const auto& t = all[rng() % all.size()];
    EXPECT_EQ( npn_canonical( apply_transform( f, t ) ), c );
    const auto form = npn_canonical_form( f );
    EXPECT_EQ( apply_transform( f, form.transform ), form.representative );
    EXPECT_LE( form.representative, f );
  }
}

TEST( npn, three_variable_census )
{
  const auto p = npn_classes( 3 );
  EXPECT_EQ( p.representatives.size(), 14u );
  std::uint32_t total = 0, degenerate = 0, g = 0, other = 0, g_classes = 0, other_classes = 0;
  for ( std::size_t c = 0; c < p.representatives.size(); ++c )
  {
    const auto& r = p.representatives[c];
    total += p.class_sizes[c];
    EXPECT_EQ( npn_orbit( r ).size(), p.class_sizes[c] );
    if ( !r.depends_on_all() )
    {
      degenerate += p.class_sizes[c];
    }
    else if ( in_class_g( r ) )
    {
      g += p.class_sizes[c];
      ++g_classes;
    }
    else
    {
      other += p.class_sizes[c];
      ++other_classes;
    }
  }
  EXPECT_EQ( total, 256u );
  EXPECT_EQ( degenerate, 38u );
  EXPECT_EQ( g, 18u );
  EXPECT_EQ( g_classes, 2u );
  EXPECT_EQ( other, 200u );
  EXPECT_EQ( other_classes, 8u );
}

TEST( npn, partition_matches_direct_orbit_search )
{
  const auto p = npn_classes( 3 );
  for ( std::uint32_t a = 0; a < 256; ++a )
  {
    const auto fa = truth_table::from_function( 3, [a]( vertex v ) { return ( a >> v ) & 1u; } );
    std::set<std::uint64_t> orbit;
    for ( const auto& g : npn_orbit( fa ) )
    {
      orbit.insert( g.bits64() );
    }
    for ( std::uint32_t b = 0; b < 256; ++b )
    {
      EXPECT_EQ( orbit.count( b ) == 1, p.class_of[a] == p.class_of[b] );
    }
  }
}

TEST( npn, canonical_arity_limit )
{
  EXPECT_THROW( (void)npn_canonical( make_primitive( primitive::and_gate, 6 ) ), std::invalid_argument );
  EXPECT_THROW( (void)npn_classes( 5 ), std::invalid_argument );
}

TEST( npn, anchor_functions_are_distinct_other_classes )
{
  std::set<std::uint64_t> canonicals;
  for ( const char* text : { "x1(x2^x3)", "x2x3+x1x2'x3'", "x1(x2+x3)", "x1x2+x2x3+x3x1" } )
  {
    const auto f = fn( text );
    EXPECT_TRUE( f.depends_on_all() ) << text;
    EXPECT_FALSE( in_class_g( f ) ) << text;
    canonicals.insert( npn_canonical( f ).bits64() );
  }
  EXPECT_EQ( canonicals.size(), 4u );
}

TEST( g_class, decomposes_complemented_or )
{
  const auto d = g_decompose( fn( "(x1+x2')'" ) );
  ASSERT_TRUE( d );
  EXPECT_EQ( d->base, g_base::or_base );
  EXPECT_EQ( d->input_mask, 0b01u );
  EXPECT_TRUE( d->output_complement );
  EXPECT_EQ( d->to_string(), "OR inputs=01 output=complemented" );
}

TEST( g_class, parity_and_majority )
{
  const auto d = g_decompose( make_primitive( primitive::xor_gate, 3 ) );
  ASSERT_TRUE( d );
  EXPECT_EQ( d->base, g_base::xor_base );
  EXPECT_EQ( d->input_mask, 0u );
  EXPECT_FALSE( d->output_complement );
  EXPECT_FALSE( g_decompose( fn( "x1x2+x2x3+x3x1" ) ) );
}

TEST( g_class, recomposition_is_exact )
{
  for ( unsigned n = 1; n <= 4; ++n )
  {
    for ( std::uint32_t bits = 0; bits < ( 1u << ( 1u << n ) ); ++bits )
    {
      const auto f = truth_table::from_function( n, [bits]( vertex v ) { return ( bits >> v ) & 1u; } );
      if ( const auto d = g_decompose( f ) )
      {
        EXPECT_EQ( d->recompose(), f );
      }
    }
  }
}

TEST( g_class, primitives_route_to_g )
{
  for ( auto p : { primitive::and_gate, primitive::or_gate, primitive::xor_gate, primitive::nand_gate,
                   primitive::nor_gate, primitive::xnor_gate } )
  {
    EXPECT_EQ( primitive_decomposition( p, 3 ).recompose(), make_primitive( p, 3 ) );
  }
  EXPECT_EQ( primitive_decomposition( primitive::not_gate, 1 ).recompose(), make_primitive( primitive::not_gate, 1 ) );
}
