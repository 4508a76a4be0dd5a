#include "tralg/convenience.hpp"

#include "tralg/extension.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace tralg
{

transient characteristic( const transient& t )
{
  if ( !t.proper() )
  {
    throw std::invalid_argument( "characteristic transient of a non-proper transient" );
  }
  return t.prefix( ( t.changes() & 1u ) ? 1u : 2u );
}

transient_vector characteristic_vector( const transient_vector& x )
{
  if ( !x.proper() )
  {
    throw std::invalid_argument( "characteristic vector of a non-proper vector" );
  }
  std::vector<transient> components;
  components.reserve( x.arity() );
  for ( const auto& t : x )
  {
    components.push_back( characteristic( t ) );
  }
  return transient_vector( std::move( components ) );
}

bool is_minimal( const transient_vector& x ) noexcept
{
  if ( x.arity() == 0 )
  {
    return false;
  }
  for ( const auto& t : x )
  {
    if ( t.changes() != 1 && t.changes() != 2 )
    {
      return false;
    }
  }
  return true;
}

std::vector<transient_vector> minimal_vectors( unsigned arity )
{
  if ( arity == 0 || arity > 12 )
  {
    throw std::invalid_argument( "unsupported arity for minimal vector enumeration" );
  }
  std::vector<transient_vector> result;
  result.reserve( std::size_t{ 1 } << ( 2 * arity ) );
  std::vector<std::uint32_t> deltas( arity );
  for ( vertex alpha = 0; alpha < ( vertex{ 1 } << arity ); ++alpha )
  {
    for ( vertex pattern = 0; pattern < ( vertex{ 1 } << arity ); ++pattern )
    {
      for ( unsigned i = 0; i < arity; ++i )
      {
        deltas[i] = coordinate_bit( pattern, i, arity ) ? 2u : 1u;
      }
      result.push_back( transient_vector::from_angle( alpha, deltas ) );
    }
  }
  return result;
}

prolongation_generator::prolongation_generator( transient_vector minimal, unsigned extra_pairs )
    : minimal_( std::move( minimal ) ), extra_pairs_( extra_pairs ), pairs_( minimal_.arity(), 0 )
{
  if ( !is_minimal( minimal_ ) )
  {
    throw std::invalid_argument( "prolongations are taken of minimal vectors" );
  }
}

std::optional<transient_vector> prolongation_generator::next()
{
  const unsigned n = minimal_.arity();
  while ( !exhausted_ )
  {
    if ( !started_ )
    {
      started_ = true;
    }
    else
    {
      // Odometer over {0..extra_pairs}^n, last coordinate fastest; a wrap
      // moves on to the next total.
      unsigned i = n;
      while ( i > 0 && pairs_[i - 1] == extra_pairs_ )
      {
        pairs_[--i] = 0;
      }
      if ( i == 0 )
      {
        if ( ++total_ > n * extra_pairs_ )
        {
          exhausted_ = true;
          break;
        }
      }
      else
      {
        ++pairs_[i - 1];
      }
    }
    if ( std::accumulate( pairs_.begin(), pairs_.end(), 0u ) == total_ )
    {
      std::vector<std::uint32_t> deltas = minimal_.deltas();
      for ( unsigned k = 0; k < n; ++k )
      {
        deltas[k] += 2u * pairs_[k];
      }
      return transient_vector::from_angle( minimal_.alpha(), deltas );
    }
  }
  return std::nullopt;
}

std::vector<transient_vector> prolongations( const transient_vector& minimal, unsigned extra_pairs )
{
  std::vector<transient_vector> result;
  prolongation_generator gen( minimal, extra_pairs );
  while ( auto x = gen.next() )
  {
    result.push_back( std::move( *x ) );
  }
  return result;
}

std::string_view status_name( convenience_status s ) noexcept
{
  switch ( s )
  {
  case convenience_status::convenient_certified:
    return "ConvenientCertified";
  case convenience_status::unknown:
    return "Unknown";
  case convenience_status::inconvenient_witnessed:
    return "InconvenientWitnessed";
  }
  return "?";
}

std::optional<inconvenience_witness> find_cost_mismatch( const truth_table& f, unsigned extra_pairs )
{
  for ( const auto& minimal : minimal_vectors( f.arity() ) )
  {
    const auto base = extension_dp( f, minimal ).cost;
    prolongation_generator gen( minimal, extra_pairs );
    while ( auto x = gen.next() )
    {
      const auto cost = extension_dp( f, *x ).cost;
      if ( cost != base )
      {
        return inconvenience_witness{ minimal, *x, base, cost };
      }
    }
  }
  return std::nullopt;
}

convenience_verdict decide_convenience( const truth_table& f, unsigned extra_pairs )
{
  convenience_verdict verdict{ .function = f, .support = f.support() };
  verdict.prolongation_budget = extra_pairs;
  if ( verdict.support.empty() )
  {
    // Nothing depends on any input: there are no coordinates to prolong.
    verdict.status = convenience_status::convenient_certified;
    return verdict;
  }
  if ( verdict.support.size() > max_convenience_arity )
  {
    throw std::invalid_argument( "convenience analysis supports at most 5 essential variables" );
  }
  const truth_table g = f.project( verdict.support );
  verdict.projected = g;

  for ( const auto& minimal : minimal_vectors( g.arity() ) )
  {
    if ( auto w = complete_optimal_walk( g, minimal ) )
    {
      const auto cost = w->cost( g );
      verdict.certificates.push_back( certified_vector{ minimal, cost, std::move( *w ) } );
    }
    else
    {
      verdict.uncertified.push_back( minimal );
    }
  }
  if ( verdict.uncertified.empty() )
  {
    verdict.status = convenience_status::convenient_certified;
    return verdict;
  }

  for ( const auto& minimal : verdict.uncertified )
  {
    const auto base = extension_dp( g, minimal ).cost;
    prolongation_generator gen( minimal, extra_pairs );
    while ( auto x = gen.next() )
    {
      if ( *x == minimal )
      {
        continue;
      }
      ++verdict.prolongations_checked;
      const auto cost = extension_dp( g, *x ).cost;
      if ( cost != base )
      {
        verdict.witness = inconvenience_witness{ minimal, *x, base, cost };
        verdict.status = convenience_status::inconvenient_witnessed;
        return verdict;
      }
    }
  }
  verdict.status = convenience_status::unknown;
  return verdict;
}

std::string to_text( const convenience_verdict& v )
{
  std::string s = "function " + v.function.literal() + "\n";
  s += "status " + std::string( status_name( v.status ) ) + "\n";
  s += "support";
  for ( const auto k : v.support )
  {
    s += " x" + std::to_string( k + 1 );
  }
  s += "\n";
  if ( v.projected && v.projected->arity() != v.function.arity() )
  {
    s += "projected " + v.projected->literal() + "\n";
  }
  s += "prolongation-budget " + std::to_string( v.prolongation_budget ) + "\n";
  switch ( v.status )
  {
  case convenience_status::convenient_certified:
    for ( const auto& c : v.certificates )
    {
      s += "certified " + c.minimal.to_string() + " cost=" + std::to_string( c.cost ) + " walk=" +
           c.witness.to_string() + "\n";
    }
    break;
  case convenience_status::unknown:
    for ( const auto& m : v.uncertified )
    {
      s += "uncertified " + m.to_string() + "\n";
    }
    s += "prolongations-checked " + std::to_string( v.prolongations_checked ) + "\n";
    break;
  case convenience_status::inconvenient_witnessed:
    s += "witness minimal=" + v.witness->minimal.to_string() + " cost=" + std::to_string( v.witness->minimal_cost ) +
         " prolongation=" + v.witness->prolongation.to_string() +
         " cost=" + std::to_string( v.witness->prolongation_cost ) + "\n";
    break;
  }
  return s;
}

truth_table s23_plus_and5()
{
  return truth_table::from_function( 5, []( vertex v ) {
    const int ones = std::popcount( v & 0b01111u );
    return ones == 2 || ones == 3 || v == 0b11111u;
  } );
}

bool is_alternating_shortcut( const truth_table& f, const walk& w )
{
  if ( f.arity() != 3 || w.arity() != 3 || w.size() != 6 )
  {
    return false;
  }
  if ( !is_alternating( w ) )
  {
    return false;
  }
  const walk head( 3, { w.vertices().begin(), w.vertices().begin() + 4 } );
  return head.cost( f ) == 0 && w.cost( f ) <= 1;
}

lemma_shortcut_report check_lemma_shortcuts( const truth_table& f )
{
  if ( f.arity() != 3 )
  {
    throw std::invalid_argument( "lemma shortcuts are stated for 3-variable functions" );
  }
  const function_cube cube( f );
  lemma_shortcut_report report;
  report.foci = cube.foci();

  std::vector<bool> covered( 8, false );
  for ( vertex v = 0; v < 8; ++v )
  {
    for ( const auto focus : report.foci )
    {
      if ( std::popcount( v ^ focus ) <= 1 )
      {
        report.near_focus.push_back( v );
        covered[v] = true;
        break;
      }
    }
  }

  for ( vertex start = 0; start < 8; ++start )
  {
    // All 3^5 six-point walks from `start`, least first.
    for ( unsigned code = 0; code < 243; ++code )
    {
      std::vector<vertex> points{ start };
      unsigned place = 81;
      for ( int step = 0; step < 5; ++step, place /= 3 )
      {
        points.push_back( flip_coordinate( points.back(), ( code / place ) % 3u, 3 ) );
      }
      const walk w( 3, std::move( points ) );
      if ( is_alternating_shortcut( f, w ) )
      {
        report.alternating_walks.emplace_back( start, w );
        covered[start] = true;
        break;
      }
    }
  }

  for ( const auto& minimal : minimal_vectors( 3 ) )
  {
    if ( !covered[minimal.alpha()] )
    {
      continue;
    }
    if ( complete_optimal_walk( f, minimal ) )
    {
      ++report.confirmed;
    }
    else
    {
      report.violations.push_back( minimal );
    }
  }
  return report;
}

} // namespace tralg
