#include "tralg/circuit.hpp"

#include "tralg/errors.hpp"
#include "tralg/g_class.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace tralg
{

namespace
{

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
  {
    s.remove_prefix( 1 );
  }
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
  {
    s.remove_suffix( 1 );
  }
  return s;
}

std::string_view strip_comment( std::string_view line )
{
  const auto hash = line.find( '#' );
  const auto slashes = line.find( "//" );
  return line.substr( 0, std::min( hash, slashes ) );
}

bool valid_name( std::string_view name )
{
  if ( name.empty() || !( std::isalpha( static_cast<unsigned char>( name.front() ) ) || name.front() == '_' ) )
  {
    return false;
  }
  return std::all_of( name.begin(), name.end(), []( char c ) {
    return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' || c == '.' || c == '[' || c == ']';
  } );
}

std::vector<std::string> split_names( std::string_view list, std::size_t line )
{
  std::vector<std::string> names;
  std::size_t begin = 0;
  while ( begin <= list.size() )
  {
    const auto comma = std::min( list.find( ',', begin ), list.size() );
    const auto name = trim( list.substr( begin, comma - begin ) );
    if ( !valid_name( name ) )
    {
      throw parse_error( "invalid wire name '" + std::string( name ) + "'", line );
    }
    names.emplace_back( name );
    begin = comma + 1;
  }
  return names;
}

std::vector<std::string_view> lines_of( std::string_view text )
{
  std::vector<std::string_view> lines;
  std::size_t begin = 0;
  while ( begin <= text.size() )
  {
    const auto end = std::min( text.find( '\n', begin ), text.size() );
    auto line = text.substr( begin, end - begin );
    if ( !line.empty() && line.back() == '\r' )
    {
      line.remove_suffix( 1 );
    }
    lines.push_back( line );
    begin = end + 1;
  }
  return lines;
}

} // namespace

netlist netlist::parse( std::string_view text )
{
  netlist result;
  std::vector<gate> declared;
  std::map<std::string, std::size_t, std::less<>> defined_at;
  std::vector<std::pair<std::string, std::size_t>> output_decls;

  const auto lines = lines_of( text );
  for ( std::size_t index = 0; index < lines.size(); ++index )
  {
    const std::size_t line_no = index + 1;
    auto line = trim( strip_comment( lines[index] ) );
    if ( line.empty() )
    {
      continue;
    }
    if ( line.back() == ';' )
    {
      line = trim( line.substr( 0, line.size() - 1 ) );
    }
    if ( line.find( ';' ) != std::string_view::npos )
    {
      throw parse_error( "one statement per line", line_no );
    }

    const auto keyword_end = line.find_first_of( " \t" );
    const auto keyword = line.substr( 0, keyword_end );
    if ( ( keyword == "input" || keyword == "output" ) && keyword_end != std::string_view::npos &&
         line.find( '=' ) == std::string_view::npos )
    {
      const auto names = split_names( line.substr( keyword_end + 1 ), line_no );
      for ( const auto& name : names )
      {
        if ( keyword == "input" )
        {
          if ( defined_at.count( name ) )
          {
            throw parse_error( "wire '" + name + "' already defined on line " + std::to_string( defined_at[name] ),
                               line_no );
          }
          defined_at[name] = line_no;
          result.inputs_.push_back( name );
        }
        else
        {
          output_decls.emplace_back( name, line_no );
        }
      }
      continue;
    }

    const auto eq = line.find( '=' );
    if ( eq == std::string_view::npos )
    {
      throw parse_error( "expected 'input', 'output' or '<wire> = <GATE>(<args>)'", line_no );
    }
    const auto target = trim( line.substr( 0, eq ) );
    const auto rhs = trim( line.substr( eq + 1 ) );
    if ( !valid_name( target ) )
    {
      throw parse_error( "invalid wire name '" + std::string( target ) + "'", line_no );
    }
    const auto open = rhs.find( '(' );
    if ( open == std::string_view::npos || rhs.back() != ')' )
    {
      throw parse_error( "expected '<GATE>(<args>)'", line_no );
    }
    const auto type = trim( rhs.substr( 0, open ) );
    const auto args = rhs.substr( open + 1, rhs.size() - open - 2 );
    if ( trim( args ).empty() )
    {
      throw parse_error( "gate '" + std::string( target ) + "' has no inputs", line_no );
    }

    gate g{ std::string( target ), std::nullopt, truth_table( 1 ), split_names( args, line_no ), line_no };
    const auto arity = static_cast<unsigned>( g.inputs.size() );
    if ( arity > max_table_arity )
    {
      throw parse_error( "gate '" + g.output + "' has more than 8 inputs", line_no );
    }
    if ( type.starts_with( "tt:" ) )
    {
      try
      {
        g.function = truth_table::parse( type );
      }
      catch ( const parse_error& e )
      {
        throw parse_error( e.what(), line_no );
      }
      if ( g.function.arity() != arity )
      {
        throw parse_error( "table of arity " + std::to_string( g.function.arity() ) + " given " +
                               std::to_string( arity ) + " inputs",
                           line_no );
      }
    }
    else if ( const auto p = primitive_from_name( type ) )
    {
      if ( *p == primitive::not_gate && arity != 1 )
      {
        throw parse_error( "NOT takes exactly one input", line_no );
      }
      g.kind = p;
      g.function = make_primitive( *p, arity );
    }
    else
    {
      throw parse_error( "unknown gate '" + std::string( type ) + "'", line_no );
    }
    if ( defined_at.count( g.output ) )
    {
      throw parse_error( "wire '" + g.output + "' already defined on line " + std::to_string( defined_at[g.output] ),
                         line_no );
    }
    defined_at[g.output] = line_no;
    declared.push_back( std::move( g ) );
  }

  for ( const auto& g : declared )
  {
    for ( const auto& in : g.inputs )
    {
      if ( !defined_at.count( in ) )
      {
        throw parse_error( "undefined wire '" + in + "'", g.line );
      }
    }
  }
  for ( const auto& [name, line_no] : output_decls )
  {
    if ( !defined_at.count( name ) )
    {
      throw parse_error( "output '" + name + "' is not defined", line_no );
    }
    result.outputs_.push_back( name );
  }

  // Kahn's algorithm; among ready gates the smallest output name goes first,
  // so the order does not depend on declaration order.
  std::map<std::string, std::size_t, std::less<>> gate_of;
  for ( std::size_t k = 0; k < declared.size(); ++k )
  {
    gate_of[declared[k].output] = k;
  }
  std::vector<std::size_t> pending( declared.size(), 0 );
  std::vector<std::vector<std::size_t>> readers( declared.size() );
  for ( std::size_t k = 0; k < declared.size(); ++k )
  {
    for ( const auto& in : declared[k].inputs )
    {
      if ( const auto it = gate_of.find( in ); it != gate_of.end() )
      {
        ++pending[k];
        readers[it->second].push_back( k );
      }
    }
  }
  std::set<std::pair<std::string, std::size_t>> ready;
  for ( std::size_t k = 0; k < declared.size(); ++k )
  {
    if ( pending[k] == 0 )
    {
      ready.emplace( declared[k].output, k );
    }
  }
  std::vector<bool> placed( declared.size(), false );
  while ( !ready.empty() )
  {
    const auto k = ready.begin()->second;
    ready.erase( ready.begin() );
    placed[k] = true;
    result.gates_.push_back( declared[k] );
    for ( const auto r : readers[k] )
    {
      if ( --pending[r] == 0 )
      {
        ready.emplace( declared[r].output, r );
      }
    }
  }
  if ( result.gates_.size() != declared.size() )
  {
    for ( std::size_t k = 0; k < declared.size(); ++k )
    {
      if ( !placed[k] )
      {
        throw parse_error( "combinational cycle through wire '" + declared[k].output + "'", declared[k].line );
      }
    }
  }
  return result;
}

std::vector<std::string> netlist::wires() const
{
  std::vector<std::string> names = inputs_;
  for ( const auto& g : gates_ )
  {
    names.push_back( g.output );
  }
  return names;
}

std::string_view hazard_name( hazard_class h ) noexcept
{
  switch ( h )
  {
  case hazard_class::clean:
    return "clean";
  case hazard_class::static_hazard:
    return "static";
  case hazard_class::dynamic_hazard:
    return "dynamic";
  }
  return "?";
}

hazard_class classify( const transient& t ) noexcept
{
  if ( t.changes() <= 1 )
  {
    return hazard_class::clean;
  }
  return t.alpha() == t.omega() ? hazard_class::static_hazard : hazard_class::dynamic_hazard;
}

assignment parse_assignment( std::string_view text )
{
  assignment result;
  const auto lines = lines_of( text );
  for ( std::size_t index = 0; index < lines.size(); ++index )
  {
    const std::size_t line_no = index + 1;
    auto line = trim( lines[index].substr( 0, lines[index].find( '#' ) ) );
    if ( line.empty() )
    {
      continue;
    }
    if ( line.back() == ';' )
    {
      line = trim( line.substr( 0, line.size() - 1 ) );
    }
    const auto eq = line.find( '=' );
    if ( eq == std::string_view::npos )
    {
      throw parse_error( "expected '<input> = <transient>'", line_no );
    }
    const auto name = trim( line.substr( 0, eq ) );
    if ( !valid_name( name ) )
    {
      throw parse_error( "invalid input name '" + std::string( name ) + "'", line_no );
    }
    if ( result.count( name ) )
    {
      throw parse_error( "input '" + std::string( name ) + "' assigned twice", line_no );
    }
    try
    {
      result.emplace( std::string( name ), transient::parse( line.substr( eq + 1 ) ) );
    }
    catch ( const parse_error& e )
    {
      throw parse_error( e.what(), line_no );
    }
  }
  return result;
}

const wire_report* hazard_report::find( std::string_view name ) const noexcept
{
  for ( const auto& w : wires )
  {
    if ( w.name == name )
    {
      return &w;
    }
  }
  return nullptr;
}

std::string hazard_report::to_text() const
{
  std::string s;
  for ( const auto& w : wires )
  {
    s += w.name + " " + w.value.letters() + " " + std::string( hazard_name( w.classification ) ) + "\n";
  }
  return s;
}

transient evaluate_gate( const gate& g, const transient_vector& inputs, const evaluation_budget& budget )
{
  if ( g.kind )
  {
    return extension_formula( primitive_decomposition( *g.kind, inputs.arity() ), inputs );
  }
  return extension_dp( g.function, inputs, budget ).extension;
}

hazard_report propagate( const netlist& n, const assignment& inputs, const evaluation_budget& budget )
{
  std::map<std::string, transient, std::less<>> values;
  hazard_report report;
  for ( const auto& name : n.inputs() )
  {
    const auto it = inputs.find( name );
    if ( it == inputs.end() )
    {
      throw std::invalid_argument( "primary input '" + name + "' has no assigned transient" );
    }
    values[name] = it->second;
    report.wires.push_back( { name, it->second, classify( it->second ) } );
  }
  for ( const auto& [name, t] : inputs )
  {
    if ( std::find( n.inputs().begin(), n.inputs().end(), name ) == n.inputs().end() )
    {
      throw std::invalid_argument( "'" + name + "' is not a primary input" );
    }
  }
  for ( const auto& g : n.gates() )
  {
    std::vector<transient> args;
    args.reserve( g.inputs.size() );
    for ( const auto& in : g.inputs )
    {
      args.push_back( values.at( in ) );
    }
    const transient out = evaluate_gate( g, transient_vector( std::move( args ) ), budget );
    values[g.output] = out;
    report.wires.push_back( { g.output, out, classify( out ) } );
  }
  return report;
}

} // namespace tralg
