#include <tralg/circuit.hpp>
#include <tralg/errors.hpp>
#include <tralg/extension.hpp>

#include <gtest/gtest.h>

using namespace tralg;

namespace
{
constexpr const char* hazard_demo = R"(# inverter feeding an AND and an OR
input x;
inv = NOT(x);
a = AND(x, inv);
out = OR(a, x);
output out;
)";

hazard_report run( const char* net, const char* assign )
{
  return propagate( netlist::parse( net ), parse_assignment( assign ) );
}

std::string value_of( const hazard_report& r, const char* wire )
{
  const auto* w = r.find( wire );
  return w ? w->value.letters() : "?";
}
} // namespace

TEST( circuit, classify )
{
  EXPECT_EQ( classify( transient::from_letters( "010" ) ), hazard_class::static_hazard );
  EXPECT_EQ( classify( transient::from_letters( "0101" ) ), hazard_class::dynamic_hazard );
  EXPECT_EQ( classify( transient::from_letters( "01" ) ), hazard_class::clean );
  EXPECT_EQ( classify( transient::from_letters( "1" ) ), hazard_class::clean );
  EXPECT_EQ( hazard_name( hazard_class::dynamic_hazard ), "dynamic" );
}

TEST( circuit, parse_fig1 )
{
  const auto n = netlist::parse( hazard_demo );
  EXPECT_EQ( n.inputs(), ( std::vector<std::string>{ "x" } ) );
  ASSERT_EQ( n.gates().size(), 3u );
  EXPECT_EQ( n.gates()[0].output, "inv" );
  EXPECT_EQ( n.outputs(), ( std::vector<std::string>{ "out" } ) );
}

TEST( circuit, hazard_demo_rising_input )
{
  const auto r = run( hazard_demo, "x = 01\n" );
  EXPECT_EQ( value_of( r, "inv" ), "10" );
  EXPECT_EQ( value_of( r, "a" ), "010" );
  EXPECT_EQ( value_of( r, "out" ), "0101" );
  EXPECT_EQ( r.find( "a" )->classification, hazard_class::static_hazard );
  EXPECT_EQ( r.find( "out" )->classification, hazard_class::dynamic_hazard );
  EXPECT_EQ( r.to_text(), "x 01 clean\ninv 10 clean\na 010 static\nout 0101 dynamic\n" );
}

TEST( circuit, constant_inputs_are_clean )
{
  const auto r = run( hazard_demo, "x = 0\n" );
  for ( const auto& w : r.wires )
  {
    EXPECT_EQ( w.value.length(), 1u ) << w.name;
    EXPECT_EQ( w.classification, hazard_class::clean ) << w.name;
  }
}

TEST( circuit, passthrough )
{
  const auto r = run( "input x;\noutput x;\n", "x = 0101" );
  ASSERT_EQ( r.wires.size(), 1u );
  EXPECT_EQ( r.wires[0].classification, hazard_class::dynamic_hazard );
}

TEST( circuit, composition_differs_from_xor )
{
  const auto r = run( R"(input s
input t
nt = NOT(t)
ns = NOT(s)
a = AND(s, nt)
b = AND(ns, t)
out = OR(a, b)
output out)",
                      "s = 01\nt = 101\n" );
  EXPECT_EQ( value_of( r, "out" ), "101010" );
  const auto x = run( "input s;\ninput t;\nout = XOR(s, t);\noutput out;\n", "s = 01\nt = 101\n" );
  EXPECT_EQ( value_of( x, "out" ), "1010" );
}

TEST( circuit, truth_table_gates )
{
  const auto r = run( "input a;\ninput b;\ninput c;\nm = tt:e8/3(a, b, c);\noutput m;\n", "a=01\nb=01\nc=10\n" );
  const auto dp = extension_dp( truth_table::parse( "tt:e8/3" ), transient_vector::parse( "01,01,10" ) );
  EXPECT_EQ( r.find( "m" )->value, dp.extension );
}

TEST( circuit, declaration_order_does_not_matter )
{
  const auto forward = run( hazard_demo, "x = 10\n" );
  const auto shuffled = run( "output out;\nout = OR(a, x);\na = AND(x, inv);\ninv = NOT(x);\ninput x;\n", "x = 10\n" );
  EXPECT_EQ( forward.to_text(), shuffled.to_text() );
}

TEST( circuit, parse_errors_carry_lines )
{
  const auto line_of = []( const char* text ) -> std::optional<std::size_t> {
    try
    {
      (void)netlist::parse( text );
    }
    catch ( const parse_error& e )
    {
      return e.line();
    }
    return std::nullopt;
  };
  EXPECT_EQ( line_of( "input a;\ninput b;\na = AND(a, b);\n" ), 3u );
  EXPECT_EQ( line_of( "input a;\nb = AND(a, c);\n" ), 2u );
  EXPECT_EQ( line_of( "input a;\nb = MUX(a, a);\n" ), 2u );
  EXPECT_EQ( line_of( "input a;\nb = NOT(a, a);\n" ), 2u );
  EXPECT_EQ( line_of( "input a;\nb = tt:8/2(a);\n" ), 2u );
  EXPECT_EQ( line_of( "input a;\nb = AND(a, a\n" ), 2u );
  EXPECT_EQ( line_of( "input a;\nx = AND(a, y);\ny = OR(a, x);\n" ).has_value(), true );
  EXPECT_EQ( line_of( "input a;\noutput q;\n" ), 2u );
  EXPECT_EQ( line_of( "input a;\ninput a;\n" ), 2u );
  EXPECT_EQ( line_of( "input a;\nb = NOT(a); c = NOT(b);\n" ), 2u );
}

TEST( circuit, cycle_is_rejected )
{
  EXPECT_THROW( (void)netlist::parse( "input b;\na = AND(a, b);\n" ), parse_error );
}

TEST( circuit, assignment_errors )
{
  const auto n = netlist::parse( hazard_demo );
  EXPECT_THROW( (void)propagate( n, {} ), std::invalid_argument );
  EXPECT_THROW( (void)propagate( n, parse_assignment( "x=01\ninv=0\n" ) ), std::invalid_argument );
  EXPECT_THROW( (void)parse_assignment( "x 01" ), parse_error );
  EXPECT_THROW( (void)parse_assignment( "x = 011" ), parse_error );
}

TEST( circuit, gates_match_bruteforce )
{
  const auto n = netlist::parse( hazard_demo );
  const auto a = parse_assignment( "x = 01010\n" );
  const auto r = propagate( n, a );
  for ( const auto& g : n.gates() )
  {
    std::vector<transient> ins;
    for ( const auto& i : g.inputs )
    {
      ins.push_back( r.find( i )->value );
    }
    const transient_vector x( ins );
    EXPECT_EQ( r.find( g.output )->value, extension_bruteforce( g.function, x ).extension ) << g.output;
  }
}
