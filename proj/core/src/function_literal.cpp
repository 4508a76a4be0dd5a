#include "tralg/function_literal.hpp"

#include "tralg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace tralg
{

namespace
{

enum class token_kind
{
  variable,
  constant,
  plus,
  caret,
  star,
  prime,
  lparen,
  rparen,
  end
};

struct token
{
  token_kind kind;
  unsigned value = 0;
  std::size_t offset = 0;
};

enum class naming
{
  none,
  letters,
  indexed
};

struct lexed
{
  std::vector<token> tokens;
  naming style = naming::none;
  bool zero_based = false;
  unsigned highest = 0;
};

lexed lex( std::string_view text )
{
  lexed out;
  for ( std::size_t i = 0; i < text.size(); )
  {
    const char c = text[i];
    if ( std::isspace( static_cast<unsigned char>( c ) ) )
    {
      ++i;
      continue;
    }
    const std::size_t at = i;
    switch ( c )
    {
    case '+':
      out.tokens.push_back( { token_kind::plus, 0, at } );
      ++i;
      continue;
    case '^':
      out.tokens.push_back( { token_kind::caret, 0, at } );
      ++i;
      continue;
    case '*':
    case '&':
      out.tokens.push_back( { token_kind::star, 0, at } );
      ++i;
      continue;
    case '\'':
      out.tokens.push_back( { token_kind::prime, 0, at } );
      ++i;
      continue;
    case '(':
      out.tokens.push_back( { token_kind::lparen, 0, at } );
      ++i;
      continue;
    case ')':
      out.tokens.push_back( { token_kind::rparen, 0, at } );
      ++i;
      continue;
    case '0':
    case '1':
      out.tokens.push_back( { token_kind::constant, static_cast<unsigned>( c - '0' ), at } );
      ++i;
      continue;
    default:
      break;
    }
    if ( c == 'x' && i + 1 < text.size() && std::isdigit( static_cast<unsigned char>( text[i + 1] ) ) )
    {
      // One digit only, so that x1x2 reads as two variables.
      const unsigned index = static_cast<unsigned>( text[i + 1] - '0' );
      if ( out.style == naming::letters )
      {
        throw parse_error( "function literal mixes x,y,z with indexed variables" );
      }
      out.style = naming::indexed;
      out.zero_based = out.zero_based || index == 0;
      out.highest = std::max( out.highest, index );
      out.tokens.push_back( { token_kind::variable, index, at } );
      i += 2;
      continue;
    }
    if ( c == 'x' || c == 'y' || c == 'z' )
    {
      if ( out.style == naming::indexed )
      {
        throw parse_error( "function literal mixes x,y,z with indexed variables" );
      }
      out.style = naming::letters;
      const unsigned index = static_cast<unsigned>( c - 'x' ) + 1u;
      out.highest = std::max( out.highest, index );
      out.tokens.push_back( { token_kind::variable, index, at } );
      ++i;
      continue;
    }
    throw parse_error( "unexpected character '" + std::string( 1, c ) + "' at offset " + std::to_string( at ) +
                       " in function literal" );
  }
  out.tokens.push_back( { token_kind::end, 0, text.size() } );
  return out;
}

class expression_parser
{
public:
  expression_parser( const lexed& lx, unsigned arity ) : lx_( lx ), arity_( arity ) {}

  truth_table parse()
  {
    auto t = parse_or();
    if ( peek().kind != token_kind::end )
    {
      fail( "unexpected token" );
    }
    return t;
  }

private:
  const lexed& lx_;
  unsigned arity_;
  std::size_t pos_ = 0;

  const token& peek() const { return lx_.tokens[pos_]; }
  const token& take() { return lx_.tokens[pos_++]; }

  [[noreturn]] void fail( const std::string& what ) const
  {
    throw parse_error( what + " at offset " + std::to_string( peek().offset ) + " in function literal" );
  }

  template<typename Op>
  truth_table combine( const truth_table& a, const truth_table& b, Op op ) const
  {
    return truth_table::from_function( arity_, [&]( vertex v ) { return op( a( v ), b( v ) ); } );
  }

  truth_table parse_or()
  {
    auto t = parse_xor();
    while ( peek().kind == token_kind::plus )
    {
      take();
      t = combine( t, parse_xor(), []( bool a, bool b ) { return a || b; } );
    }
    return t;
  }

  truth_table parse_xor()
  {
    auto t = parse_and();
    while ( peek().kind == token_kind::caret )
    {
      take();
      t = combine( t, parse_and(), []( bool a, bool b ) { return a != b; } );
    }
    return t;
  }

  bool starts_unary() const
  {
    const auto k = peek().kind;
    return k == token_kind::variable || k == token_kind::constant || k == token_kind::lparen;
  }

  truth_table parse_and()
  {
    auto t = parse_unary();
    while ( true )
    {
      if ( peek().kind == token_kind::star )
      {
        take();
      }
      else if ( !starts_unary() )
      {
        break;
      }
      t = combine( t, parse_unary(), []( bool a, bool b ) { return a && b; } );
    }
    return t;
  }

  truth_table parse_unary()
  {
    auto t = parse_primary();
    while ( peek().kind == token_kind::prime )
    {
      take();
      t = t.complemented();
    }
    return t;
  }

  truth_table parse_primary()
  {
    const token& tk = peek();
    switch ( tk.kind )
    {
    case token_kind::variable: {
      take();
      const unsigned coordinate = lx_.zero_based ? tk.value : tk.value - 1u;
      return truth_table::from_function( arity_, [&]( vertex v ) { return coordinate_bit( v, coordinate, arity_ ); } );
    }
    case token_kind::constant: {
      take();
      truth_table t( arity_ );
      return tk.value ? t.complemented() : t;
    }
    case token_kind::lparen: {
      take();
      auto t = parse_or();
      if ( peek().kind != token_kind::rparen )
      {
        fail( "expected ')'" );
      }
      take();
      return t;
    }
    default:
      fail( "expected a variable, constant or '('" );
    }
  }
};

std::optional<truth_table> parse_named( std::string_view text, std::optional<unsigned> arity )
{
  std::size_t split = 0;
  while ( split < text.size() && std::isupper( static_cast<unsigned char>( text[split] ) ) )
  {
    ++split;
  }
  if ( split == 0 )
  {
    return std::nullopt;
  }
  const auto p = primitive_from_name( text.substr( 0, split ) );
  if ( !p )
  {
    throw parse_error( "unknown primitive '" + std::string( text ) + "'" );
  }
  const auto suffix = text.substr( split );
  unsigned n = 0;
  if ( suffix.empty() )
  {
    if ( *p == primitive::not_gate )
    {
      n = 1;
    }
    else if ( arity )
    {
      n = *arity;
    }
    else
    {
      throw parse_error( "primitive '" + std::string( text ) + "' needs an arity, e.g. " +
                         std::string( primitive_name( *p ) ) + "3" );
    }
  }
  else
  {
    for ( const char c : suffix )
    {
      if ( !std::isdigit( static_cast<unsigned char>( c ) ) )
      {
        throw parse_error( "invalid primitive arity in '" + std::string( text ) + "'" );
      }
      n = n * 10u + static_cast<unsigned>( c - '0' );
      if ( n > max_table_arity )
      {
        break;
      }
    }
  }
  if ( n == 0 || n > max_table_arity )
  {
    throw parse_error( "primitive arity must be between 1 and 8 in '" + std::string( text ) + "'" );
  }
  if ( arity && *arity != n )
  {
    throw parse_error( "primitive '" + std::string( text ) + "' has arity " + std::to_string( n ) + ", expected " +
                       std::to_string( *arity ) );
  }
  try
  {
    return make_primitive( *p, n );
  }
  catch ( const std::invalid_argument& e )
  {
    throw parse_error( e.what() );
  }
}

} // namespace

truth_table parse_function( std::string_view text, std::optional<unsigned> arity )
{
  while ( !text.empty() && std::isspace( static_cast<unsigned char>( text.front() ) ) )
  {
    text.remove_prefix( 1 );
  }
  while ( !text.empty() && std::isspace( static_cast<unsigned char>( text.back() ) ) )
  {
    text.remove_suffix( 1 );
  }
  if ( text.empty() )
  {
    throw parse_error( "empty function literal" );
  }
  if ( text.starts_with( "tt:" ) )
  {
    auto t = truth_table::parse( text );
    if ( arity && *arity != t.arity() )
    {
      throw parse_error( "truth table arity " + std::to_string( t.arity() ) + " does not match expected " +
                         std::to_string( *arity ) );
    }
    return t;
  }
  if ( auto named = parse_named( text, arity ) )
  {
    return *named;
  }

  const lexed lx = lex( text );
  unsigned needed = 1;
  if ( lx.style == naming::letters )
  {
    needed = 3;
  }
  else if ( lx.style == naming::indexed )
  {
    needed = lx.zero_based ? lx.highest + 1u : lx.highest;
  }
  if ( lx.style == naming::letters && arity && *arity < 3 )
  {
    needed = lx.highest;
  }
  if ( arity && *arity < needed )
  {
    throw parse_error( "function literal uses " + std::to_string( needed ) + " variables, expected arity " +
                       std::to_string( *arity ) );
  }
  const unsigned n = arity.value_or( needed );
  if ( n == 0 || n > max_table_arity )
  {
    throw parse_error( "function arity must be between 1 and 8" );
  }
  return expression_parser( lx, n ).parse();
}

} // namespace tralg
