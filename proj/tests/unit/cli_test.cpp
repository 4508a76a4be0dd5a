#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace tralg::cli;

namespace
{
struct result
{
  int code;
  std::string out;
  std::string err;
};

result invoke( std::vector<std::string> args )
{
  std::ostringstream out, err;
  const int code = run( args, out, err );
  return { code, out.str(), err.str() };
}

std::string fixture( const std::string& name )
{
  return std::string( TRALG_FIXTURES ) + "/" + name;
}

std::string slurp( const std::string& path )
{
  std::ifstream in( path );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
} // namespace

TEST( cli, eval_worked_examples )
{
  EXPECT_EQ( invoke( { "eval", "x1+x2'", "010,1010" } ).out, "010101 cost=0 method=formula\n" );
  EXPECT_EQ( invoke( { "eval", "(x1+x2')'", "010,10" } ).out, "1010 cost=0 method=formula\n" );
  EXPECT_EQ( invoke( { "eval", "OR", "0,0" } ).out, "0 cost=0 method=formula\n" );
  EXPECT_EQ( invoke( { "eval", "x1+x2'", "0101,0101010", "--method=dp" } ).out, "101010101 cost=1 method=dp\n" );
  EXPECT_EQ( invoke( { "eval", "x1+x2'", "010,1010", "--method", "brute" } ).out, "010101 cost=0 method=brute\n" );
}

TEST( cli, eval_check_and_json )
{
  const auto r = invoke( { "eval", "x1(x2^x3)", "0101,10,101", "--check", "--format=json-lines" } );
  ASSERT_EQ( r.code, exit_ok ) << r.err;
  const auto j = nlohmann::json::parse( r.out );
  EXPECT_EQ( j["method"], "dp" );
  EXPECT_EQ( j["vector"], "0101,10,101" );
}

TEST( cli, exit_codes )
{
  EXPECT_EQ( invoke( {} ).code, exit_usage );
  EXPECT_EQ( invoke( { "frobnicate" } ).code, exit_usage );
  EXPECT_EQ( invoke( { "eval", "x1+x2'" } ).code, exit_usage );
  EXPECT_EQ( invoke( { "eval", "x1+x2'", "011,10" } ).code, exit_parse );
  EXPECT_EQ( invoke( { "eval", "x1+", "01,10" } ).code, exit_parse );
  EXPECT_EQ( invoke( { "eval", "x1x2+x3", "<0;9>,<0;9>,<0;9>", "--method=brute" } ).code, exit_budget );
  EXPECT_EQ( invoke( { "eval", "x1x2+x3", "<0;9>,<0;9>,<0;9>", "--budget-states=10" } ).code, exit_budget );
  EXPECT_EQ( invoke( { "eval", "x1x2+x2x3+x1x3", "01,01,01", "--method=formula" } ).code, exit_parse );
  EXPECT_EQ( invoke( { "circuit", fixture( "missing.net" ), fixture( "hazard_demo_x01.assign" ) } ).code, exit_parse );
  EXPECT_EQ( invoke( { "survey", "5" } ).code, exit_parse );
  EXPECT_EQ( invoke( { "classify", "XOR6" } ).code, exit_parse );
  EXPECT_EQ( invoke( { "--help" } ).code, exit_ok );
}

TEST( cli, cost )
{
  EXPECT_EQ( invoke( { "cost", "OR", "01,01" } ).out, "cost=1 method=cost-formula\n" );
  EXPECT_EQ( invoke( { "cost", "AND", "10,10", "--check" } ).out, "cost=1 method=cost-formula\n" );
  EXPECT_EQ( invoke( { "cost", "x1+x2'", "0101,0101010" } ).out, "cost=1 method=formula\n" );
}

TEST( cli, classify )
{
  const auto a = invoke( { "classify", "x'z" } );
  const auto b = invoke( { "classify", "x+y" } );
  ASSERT_EQ( a.code, exit_ok );
  const auto canonical = []( const std::string& s ) {
    const auto p = s.find( "canonical " );
    return s.substr( p, s.find( '\n', p ) - p );
  };
  EXPECT_EQ( canonical( a.out ), canonical( b.out ) );
  const auto x = invoke( { "classify", "XOR3" } ).out;
  EXPECT_NE( x.find( "class-g yes XOR" ), std::string::npos ) << x;
  EXPECT_NE( x.find( "class-size 2\n" ), std::string::npos ) << x;
}

TEST( cli, census )
{
  const auto r = invoke( { "classify", "--census", "3" } );
  ASSERT_EQ( r.code, exit_ok );
  EXPECT_NE( r.out.find( "census arity=3 functions=256 classes=14 degenerate-classes=4 degenerate-functions=38 "
                         "g-classes=2 g-functions=18 other-classes=8 other-functions=200\n" ),
             std::string::npos );
}

TEST( cli, convenience )
{
  const auto x = invoke( { "convenience", "XOR3" } );
  EXPECT_NE( x.out.find( "status ConvenientCertified\n" ), std::string::npos );
  const auto p = invoke( { "convenience", "prop3" } );
  ASSERT_EQ( p.code, exit_ok ) << p.err;
  EXPECT_NE( p.out.find( "status InconvenientWitnessed\n" ), std::string::npos );
  EXPECT_NE( p.out.find( "witness minimal=01,01,01,010,010 cost=2 prolongation=0101,01,01,010,010 cost=4" ),
             std::string::npos )
      << p.out;
}

TEST( cli, survey_three_variables )
{
  const auto r = invoke( { "survey", "3" } );
  ASSERT_EQ( r.code, exit_ok );
  EXPECT_NE( r.out.find( "survey arity=3 mode=all evaluated=256 certified=256 unknown=0 inconvenient=0" ),
             std::string::npos )
      << r.out;
}

TEST( cli, survey_sampling_is_seeded )
{
  const auto a = invoke( { "survey", "3", "--sample", "20", "--seed", "5" } );
  const auto b = invoke( { "survey", "3", "--sample", "20", "--seed", "5" } );
  EXPECT_EQ( a.out, b.out );
  EXPECT_NE( a.out.find( "mode=sample" ), std::string::npos );
}

TEST( cli, circuit_golden_files )
{
  for ( const char* name : { "hazard_demo_x01", "hazard_demo_x0", "hazard_demo_x10" } )
  {
    const auto r = invoke( { "circuit", fixture( "hazard_demo.net" ), fixture( std::string( name ) + ".assign" ) } );
    ASSERT_EQ( r.code, exit_ok ) << r.err;
    EXPECT_EQ( r.out, slurp( fixture( std::string( name ) + ".golden" ) ) ) << name;
    EXPECT_EQ( r.out, invoke( { "circuit", fixture( "hazard_demo.net" ), fixture( std::string( name ) + ".assign" ) } ).out );
  }
}

TEST( cli, walks )
{
  const auto r = invoke( { "walks", "x1(x2^x3')", "<2;1,1,1>" } );
  ASSERT_EQ( r.code, exit_ok ) << r.err;
  EXPECT_EQ( r.out.substr( 0, r.out.find( '\n' ) ), "cost=1 walks=" + std::to_string( std::count( r.out.begin(), r.out.end(), '\n' ) - 1 ) + " truncated=no" );
  EXPECT_NE( r.out.find( "2,6,4,5 cost=1 complete\n" ), std::string::npos );
}

TEST( cli, export_cube )
{
  const auto r = invoke( { "export-cube", "x1x2", "--live-only" } );
  EXPECT_EQ( r.out, "# live graph of tt:8/2\n# u v tag\n1 3 live\n2 3 live\n" );
}
