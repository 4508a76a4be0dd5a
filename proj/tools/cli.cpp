#include "cli.hpp"

#include "tralg/tralg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace tralg::cli
{

namespace
{

using json = nlohmann::json;

struct common_options
{
  std::string method = "auto";
  std::uint64_t budget_paths = evaluation_budget{}.max_paths;
  std::uint64_t budget_states = evaluation_budget{}.max_states;
  unsigned prolong_budget = default_prolongation_budget;
  std::uint64_t seed = 1;
  std::string format = "text";
  bool check = false;

  [[nodiscard]] evaluation_budget budget() const { return { budget_paths, budget_states }; }
  [[nodiscard]] bool json_lines() const { return format == "json-lines"; }
};

void add_common( CLI::App& cmd, common_options& o )
{
  cmd.add_option( "--method", o.method, "Evaluator: auto, brute, dp or formula" )
      ->check( CLI::IsMember( { "auto", "brute", "dp", "formula" } ) );
  cmd.add_option( "--budget-paths", o.budget_paths, "Path budget for brute-force enumeration" );
  cmd.add_option( "--budget-states", o.budget_states, "State budget for the prefix-lattice DP" );
  cmd.add_option( "--prolong-budget", o.prolong_budget, "Extra change pairs per component when falsifying" );
  cmd.add_option( "--seed", o.seed, "Seed for sampled runs" );
  cmd.add_option( "--format", o.format, "Output format" )->check( CLI::IsMember( { "text", "json-lines" } ) );
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw parse_error( "cannot open '" + path + "'" );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<pure_kind> pure_kind_of( const truth_table& f )
{
  if ( f == make_primitive( primitive::xor_gate, f.arity() ) )
  {
    return pure_kind::xor_kind;
  }
  if ( f == make_primitive( primitive::or_gate, f.arity() ) )
  {
    return pure_kind::or_kind;
  }
  if ( f == make_primitive( primitive::and_gate, f.arity() ) )
  {
    return pure_kind::and_kind;
  }
  return std::nullopt;
}

struct evaluation
{
  transient extension;
  std::uint64_t cost;
  std::string method;
};

evaluation evaluate( const truth_table& f, const transient_vector& x, const common_options& o )
{
  const auto method = o.method;
  const auto decomposition = g_decompose( f );
  auto by_formula = [&] {
    if ( !decomposition )
    {
      throw std::invalid_argument( "closed-form evaluation needs a function of class G" );
    }
    const auto ext = extension_formula( *decomposition, x );
    return evaluation{ ext, x.changes() - ext.changes(), "formula" };
  };
  auto by_dp = [&] {
    const auto r = extension_dp( f, x, o.budget() );
    return evaluation{ r.extension, r.cost, "dp" };
  };
  auto by_brute = [&] {
    const auto r = extension_bruteforce( f, x, o.budget() );
    return evaluation{ r.extension, r.cost, "brute" };
  };

  evaluation result = method == "brute"     ? by_brute()
                      : method == "dp"      ? by_dp()
                      : method == "formula" ? by_formula()
                      : decomposition       ? by_formula()
                                            : by_dp();
  if ( o.check )
  {
    std::vector<evaluation> others;
    if ( decomposition )
    {
      others.push_back( by_formula() );
    }
    others.push_back( by_dp() );
    if ( const auto paths = multinomial( x.deltas() ); paths && *paths <= o.budget_paths )
    {
      others.push_back( by_brute() );
    }
    for ( const auto& e : others )
    {
      if ( e.extension != result.extension || e.cost != result.cost )
      {
        throw inconsistency_error( result.method + " gives " + result.extension.letters() + " but " + e.method +
                                   " gives " + e.extension.letters() );
      }
    }
  }
  return result;
}

int cmd_eval( const std::string& fn, const std::string& vec, const common_options& o, std::ostream& out )
{
  const auto x = transient_vector::parse( vec );
  const auto f = resolve_function( fn, x.arity() );
  const auto e = evaluate( f, x, o );
  if ( o.json_lines() )
  {
    out << json{ { "function", f.literal() },
                 { "vector", x.to_string() },
                 { "extension", e.extension.letters() },
                 { "cost", e.cost },
                 { "method", e.method } }
               .dump()
        << "\n";
  }
  else
  {
    out << e.extension.letters() << " cost=" << e.cost << " method=" << e.method << "\n";
  }
  return exit_ok;
}

int cmd_cost( const std::string& fn, const std::string& vec, const common_options& o, std::ostream& out )
{
  const auto x = transient_vector::parse( vec );
  const auto f = resolve_function( fn, x.arity() );
  std::uint64_t cost = 0;
  std::string method;
  const auto kind = pure_kind_of( f );
  if ( ( o.method == "auto" || o.method == "formula" ) && kind && x.proper() )
  {
    cost = cost_formula( *kind, x );
    method = "cost-formula";
    if ( o.check && extension_dp( f, x, o.budget() ).cost != cost )
    {
      throw inconsistency_error( "cost formula disagrees with the DP" );
    }
  }
  else
  {
    const auto e = evaluate( f, x, o );
    cost = e.cost;
    method = e.method;
  }
  if ( o.json_lines() )
  {
    out << json{ { "function", f.literal() }, { "vector", x.to_string() }, { "cost", cost }, { "method", method } }
               .dump()
        << "\n";
  }
  else
  {
    out << "cost=" << cost << " method=" << method << "\n";
  }
  return exit_ok;
}

std::string support_text( const truth_table& f )
{
  std::string s;
  for ( const auto k : f.support() )
  {
    s += ( s.empty() ? "x" : ",x" ) + std::to_string( k + 1 );
  }
  return s.empty() ? "-" : s;
}

json classify_json( const truth_table& f )
{
  const auto canonical = npn_canonical( f );
  const auto d = g_decompose( f );
  json j{ { "function", f.literal() },
          { "canonical", canonical.literal() },
          { "class_size", npn_orbit( f ).size() },
          { "degenerate", !f.depends_on_all() },
          { "support", support_text( f ) },
          { "class_g", d.has_value() } };
  if ( d )
  {
    j["decomposition"] = d->to_string();
  }
  return j;
}

int cmd_classify( const std::string& fn, const common_options& o, std::ostream& out )
{
  const auto f = resolve_function( fn );
  if ( f.arity() > max_canonical_arity )
  {
    throw std::invalid_argument( "classification supports arity <= 5" );
  }
  const auto j = classify_json( f );
  if ( o.json_lines() )
  {
    out << j.dump() << "\n";
    return exit_ok;
  }
  out << "function " << j["function"].get<std::string>() << "\n";
  out << "canonical " << j["canonical"].get<std::string>() << "\n";
  out << "class-size " << j["class_size"].get<std::size_t>() << "\n";
  out << "degenerate " << ( j["degenerate"].get<bool>() ? "yes" : "no" ) << " support=" << j["support"].get<std::string>()
      << "\n";
  out << "class-g " << ( j["class_g"].get<bool>() ? "yes " + j["decomposition"].get<std::string>() : "no" ) << "\n";
  return exit_ok;
}

int cmd_census( unsigned arity, const common_options& o, std::ostream& out )
{
  const auto partition = npn_classes( arity );
  std::uint64_t degenerate_classes = 0, degenerate_functions = 0, g_classes = 0, g_functions = 0, other_classes = 0,
                other_functions = 0;
  for ( std::size_t c = 0; c < partition.representatives.size(); ++c )
  {
    const auto& rep = partition.representatives[c];
    const auto size = partition.class_sizes[c];
    const bool degenerate = !rep.depends_on_all();
    const bool g = !degenerate && in_class_g( rep );
    if ( degenerate )
    {
      ++degenerate_classes;
      degenerate_functions += size;
    }
    else if ( g )
    {
      ++g_classes;
      g_functions += size;
    }
    else
    {
      ++other_classes;
      other_functions += size;
    }
    const std::string kind = degenerate ? "degenerate" : g ? "class-g" : "other";
    if ( o.json_lines() )
    {
      out << json{ { "class", rep.literal() }, { "size", size }, { "kind", kind }, { "support", support_text( rep ) } }
                 .dump()
          << "\n";
    }
    else
    {
      out << "class " << rep.literal() << " size=" << size << " kind=" << kind << " support=" << support_text( rep )
          << "\n";
    }
  }
  const auto functions = partition.class_of.size();
  if ( o.json_lines() )
  {
    out << json{ { "arity", arity },
                 { "functions", functions },
                 { "classes", partition.representatives.size() },
                 { "degenerate_classes", degenerate_classes },
                 { "degenerate_functions", degenerate_functions },
                 { "g_classes", g_classes },
                 { "g_functions", g_functions },
                 { "other_classes", other_classes },
                 { "other_functions", other_functions } }
               .dump()
        << "\n";
  }
  else
  {
    out << "census arity=" << arity << " functions=" << functions << " classes=" << partition.representatives.size()
        << " degenerate-classes=" << degenerate_classes << " degenerate-functions=" << degenerate_functions
        << " g-classes=" << g_classes << " g-functions=" << g_functions << " other-classes=" << other_classes
        << " other-functions=" << other_functions << "\n";
  }
  return exit_ok;
}

json verdict_json( const convenience_verdict& v )
{
  json j{ { "function", v.function.literal() },
          { "status", std::string( status_name( v.status ) ) },
          { "support", support_text( v.function ) },
          { "prolongation_budget", v.prolongation_budget } };
  if ( v.projected )
  {
    j["projected"] = v.projected->literal();
  }
  json certificates = json::array();
  for ( const auto& c : v.certificates )
  {
    certificates.push_back( { { "minimal", c.minimal.to_string() }, { "cost", c.cost }, { "walk", c.witness.to_string() } } );
  }
  j["certificates"] = certificates;
  json uncertified = json::array();
  for ( const auto& m : v.uncertified )
  {
    uncertified.push_back( m.to_string() );
  }
  j["uncertified"] = uncertified;
  j["prolongations_checked"] = v.prolongations_checked;
  if ( v.witness )
  {
    j["witness"] = { { "minimal", v.witness->minimal.to_string() },
                     { "minimal_cost", v.witness->minimal_cost },
                     { "prolongation", v.witness->prolongation.to_string() },
                     { "prolongation_cost", v.witness->prolongation_cost } };
  }
  return j;
}

int cmd_convenience( const std::string& fn, const common_options& o, std::ostream& out )
{
  const auto f = resolve_function( fn );
  const auto verdict = decide_convenience( f, o.prolong_budget );
  if ( verdict.witness )
  {
    // The witness must survive an independent recomputation.
    const auto a = extension_dp( *verdict.projected, verdict.witness->minimal ).cost;
    const auto b = extension_dp( *verdict.projected, verdict.witness->prolongation ).cost;
    if ( a == b || characteristic_vector( verdict.witness->prolongation ) != verdict.witness->minimal )
    {
      throw inconsistency_error( "inconvenience witness does not reproduce" );
    }
  }
  if ( o.json_lines() )
  {
    out << verdict_json( verdict ).dump() << "\n";
  }
  else
  {
    out << to_text( verdict );
  }
  return exit_ok;
}

struct survey_options
{
  bool classes_only = false;
  std::uint64_t sample = 0;
};

int cmd_survey( unsigned arity, const survey_options& so, const common_options& o, std::ostream& out )
{
  if ( arity == 0 || arity > 4 )
  {
    throw std::invalid_argument( "survey supports arity 1..4" );
  }
  const auto partition = npn_classes( arity );
  const auto table_of = [arity]( std::uint64_t value ) {
    return truth_table::from_function( arity, [value]( vertex v ) { return ( value >> v ) & 1u; } );
  };

  std::vector<std::uint64_t> selected;
  if ( so.classes_only )
  {
    for ( const auto& rep : partition.representatives )
    {
      selected.push_back( rep.bits64() );
    }
  }
  else if ( so.sample > 0 )
  {
    std::mt19937_64 rng( o.seed );
    std::uniform_int_distribution<std::uint64_t> pick( 0, partition.class_of.size() - 1 );
    for ( std::uint64_t k = 0; k < so.sample; ++k )
    {
      selected.push_back( pick( rng ) );
    }
    std::sort( selected.begin(), selected.end() );
    selected.erase( std::unique( selected.begin(), selected.end() ), selected.end() );
  }
  else
  {
    selected.resize( partition.class_of.size() );
    for ( std::uint64_t k = 0; k < selected.size(); ++k )
    {
      selected[k] = k;
    }
  }

  std::vector<convenience_status> status( selected.size() );
  std::atomic<std::size_t> next{ 0 };
  std::vector<std::string> failures( selected.size() );
  auto worker = [&] {
    for ( std::size_t k; ( k = next.fetch_add( 1 ) ) < selected.size(); )
    {
      status[k] = decide_convenience( table_of( selected[k] ), o.prolong_budget ).status;
    }
  };
  const unsigned threads = std::max( 1u, std::min( 16u, std::thread::hardware_concurrency() ) );
  std::vector<std::thread> pool;
  for ( unsigned t = 1; t < threads; ++t )
  {
    pool.emplace_back( worker );
  }
  worker();
  for ( auto& t : pool )
  {
    t.join();
  }

  struct tally
  {
    std::uint64_t evaluated = 0, certified = 0, unknown = 0, inconvenient = 0;
  };
  std::vector<tally> per_class( partition.representatives.size() );
  tally total;
  for ( std::size_t k = 0; k < selected.size(); ++k )
  {
    auto& t = per_class[partition.class_of[selected[k]]];
    for ( auto* c : { &t, &total } )
    {
      ++c->evaluated;
      switch ( status[k] )
      {
      case convenience_status::convenient_certified:
        ++c->certified;
        break;
      case convenience_status::unknown:
        ++c->unknown;
        break;
      case convenience_status::inconvenient_witnessed:
        ++c->inconvenient;
        break;
      }
    }
  }

  for ( std::size_t c = 0; c < per_class.size(); ++c )
  {
    const auto& t = per_class[c];
    if ( t.evaluated == 0 )
    {
      continue;
    }
    const auto& rep = partition.representatives[c];
    if ( o.json_lines() )
    {
      out << json{ { "class", rep.literal() },
                   { "size", partition.class_sizes[c] },
                   { "evaluated", t.evaluated },
                   { "certified", t.certified },
                   { "unknown", t.unknown },
                   { "inconvenient", t.inconvenient } }
                 .dump()
          << "\n";
    }
    else
    {
      out << "class " << rep.literal() << " size=" << partition.class_sizes[c] << " evaluated=" << t.evaluated
          << " certified=" << t.certified << " unknown=" << t.unknown << " inconvenient=" << t.inconvenient << "\n";
    }
  }
  const std::string mode = so.classes_only ? "representatives" : so.sample ? "sample" : "all";
  if ( o.json_lines() )
  {
    out << json{ { "arity", arity },
                 { "mode", mode },
                 { "evaluated", total.evaluated },
                 { "certified", total.certified },
                 { "unknown", total.unknown },
                 { "inconvenient", total.inconvenient },
                 { "prolongation_budget", o.prolong_budget } }
               .dump()
        << "\n";
  }
  else
  {
    out << "survey arity=" << arity << " mode=" << mode << " evaluated=" << total.evaluated
        << " certified=" << total.certified << " unknown=" << total.unknown << " inconvenient=" << total.inconvenient
        << " prolong-budget=" << o.prolong_budget << "\n";
  }
  return exit_ok;
}

int cmd_circuit( const std::string& netlist_path, const std::string& assignment_path, const common_options& o,
                 std::ostream& out )
{
  const auto n = netlist::parse( read_file( netlist_path ) );
  const auto a = parse_assignment( read_file( assignment_path ) );
  const auto report = propagate( n, a, o.budget() );
  if ( o.json_lines() )
  {
    for ( const auto& w : report.wires )
    {
      out << json{ { "wire", w.name },
                   { "transient", w.value.letters() },
                   { "classification", std::string( hazard_name( w.classification ) ) } }
                 .dump()
          << "\n";
    }
  }
  else
  {
    out << report.to_text();
  }
  return exit_ok;
}

int cmd_walks( const std::string& fn, const std::string& vec, std::uint64_t max_walks, const common_options& o,
               std::ostream& out )
{
  const auto x = transient_vector::parse( vec );
  const auto f = resolve_function( fn, x.arity() );
  const auto set = optimal_walks( f, x, max_walks, o.budget() );
  if ( o.json_lines() )
  {
    out << json{ { "function", f.literal() },
                 { "vector", x.to_string() },
                 { "cost", set.cost },
                 { "walks", set.walks.size() },
                 { "truncated", set.truncated } }
               .dump()
        << "\n";
    for ( const auto& w : set.walks )
    {
      out << json{ { "walk", w.to_string() }, { "cost", w.cost( f ) }, { "complete", is_complete( w, f ) } }.dump()
          << "\n";
    }
    return exit_ok;
  }
  out << "cost=" << set.cost << " walks=" << set.walks.size() << " truncated=" << ( set.truncated ? "yes" : "no" )
      << "\n";
  for ( const auto& w : set.walks )
  {
    out << w.to_string() << " cost=" << w.cost( f ) << ( is_complete( w, f ) ? " complete" : " incomplete" ) << "\n";
  }
  return exit_ok;
}

int cmd_export_cube( const std::string& fn, bool live_only, std::ostream& out )
{
  out << function_cube( resolve_function( fn ) ).edge_list( live_only );
  return exit_ok;
}

} // namespace

truth_table resolve_function( std::string_view text, std::optional<unsigned> arity )
{
  if ( text == "prop3" )
  {
    if ( arity && *arity != 5 )
    {
      throw parse_error( "prop3 is a 5-variable function" );
    }
    return s23_plus_and5();
  }
  return parse_function( text, arity );
}

int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Transient-algebra hazard analysis", "tralg" };
  app.require_subcommand( 1 );

  common_options o;
  std::string fn, vec, netlist_path, assignment_path;
  unsigned arity = 0;
  std::uint64_t max_walks = default_walk_cap;
  bool live_only = false;
  bool census = false;
  survey_options so;

  auto* eval = app.add_subcommand( "eval", "Evaluate the extension of a function on a transient vector" );
  eval->add_option( "function", fn, "Function literal" )->required();
  eval->add_option( "vector", vec, "Transient vector literal" )->required();
  eval->add_flag( "--check", o.check, "Cross-check every applicable evaluator" );
  add_common( *eval, o );

  auto* cost = app.add_subcommand( "cost", "Cost of a transient vector for a function" );
  cost->add_option( "function", fn, "Function literal" )->required();
  cost->add_option( "vector", vec, "Transient vector literal" )->required();
  cost->add_flag( "--check", o.check, "Cross-check against the DP" );
  add_common( *cost, o );

  auto* classify = app.add_subcommand( "classify", "NPN class, degeneracy and class-G membership" );
  classify->add_option( "function", fn, "Function literal, or an arity with --census" )->required();
  classify->add_flag( "--census", census, "List every class of the given arity (1..4)" );
  add_common( *classify, o );

  auto* convenience = app.add_subcommand( "convenience", "Decide convenience of a function" );
  convenience->add_option( "function", fn, "Function literal" )->required();
  add_common( *convenience, o );

  auto* survey = app.add_subcommand( "survey", "Convenience verdicts for every function of an arity" );
  survey->add_option( "arity", arity, "Arity (1..4)" )->required();
  survey->add_flag( "--classes-only", so.classes_only, "Evaluate one representative per NPN class" );
  survey->add_option( "--sample", so.sample, "Evaluate this many randomly drawn functions instead (uses --seed)" );
  add_common( *survey, o );

  auto* circuit = app.add_subcommand( "circuit", "Hazard analysis of a netlist under an input assignment" );
  circuit->add_option( "netlist", netlist_path, "Netlist file" )->required();
  circuit->add_option( "assignment", assignment_path, "Assignment file" )->required();
  add_common( *circuit, o );

  auto* walks = app.add_subcommand( "walks", "Optimal walks for a transient vector" );
  walks->add_option( "function", fn, "Function literal" )->required();
  walks->add_option( "vector", vec, "Transient vector literal" )->required();
  walks->add_option( "--max-walks", max_walks, "Enumerate all optimal walks only up to this many" );
  add_common( *walks, o );

  auto* export_cube = app.add_subcommand( "export-cube", "Edge list of the function cube" );
  export_cube->add_option( "function", fn, "Function literal" )->required();
  export_cube->add_flag( "--live-only", live_only, "Only the live graph" );
  add_common( *export_cube, o );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( eval->parsed() )
    {
      return cmd_eval( fn, vec, o, out );
    }
    if ( cost->parsed() )
    {
      return cmd_cost( fn, vec, o, out );
    }
    if ( classify->parsed() )
    {
      if ( census )
      {
        unsigned n = 0;
        try
        {
          n = static_cast<unsigned>( std::stoul( fn ) );
        }
        catch ( const std::exception& )
        {
          throw parse_error( "--census expects an arity" );
        }
        return cmd_census( n, o, out );
      }
      return cmd_classify( fn, o, out );
    }
    if ( convenience->parsed() )
    {
      return cmd_convenience( fn, o, out );
    }
    if ( survey->parsed() )
    {
      return cmd_survey( arity, so, o, out );
    }
    if ( circuit->parsed() )
    {
      return cmd_circuit( netlist_path, assignment_path, o, out );
    }
    if ( walks->parsed() )
    {
      return cmd_walks( fn, vec, max_walks, o, out );
    }
    if ( export_cube->parsed() )
    {
      return cmd_export_cube( fn, live_only, out );
    }
  }
  catch ( const parse_error& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
  catch ( const budget_exceeded& e )
  {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  }
  catch ( const inconsistency_error& e )
  {
    err << "internal inconsistency: " << e.what() << "\n";
    return exit_inconsistency;
  }
  catch ( const std::invalid_argument& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
  catch ( const std::out_of_range& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
  return exit_usage;
}

} // namespace tralg::cli
