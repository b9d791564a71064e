// revsynth command-line front end.  Talks to the library only through the C API.
//
// Exit codes: 0 success / verified, 1 semantic mismatch, 2 usage or parse
// error, 3 internal invariant violation.

#include <revsynth/revsynth.h>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace
{

enum exit_code
{
  exit_ok = 0,
  exit_mismatch = 1,
  exit_usage = 2,
  exit_internal = 3
};

struct cli_error
{
  int code;
  std::string message;
};

template<typename T, void ( *Free )( T* )>
struct handle_deleter
{
  void operator()( T* p ) const { Free( p ); }
};

using function_ptr = std::unique_ptr<rsyn_function, handle_deleter<rsyn_function, rsyn_function_free>>;
using permutation_ptr = std::unique_ptr<rsyn_permutation, handle_deleter<rsyn_permutation, rsyn_permutation_free>>;
using circuit_ptr = std::unique_ptr<rsyn_circuit, handle_deleter<rsyn_circuit, rsyn_circuit_free>>;

struct string_deleter
{
  void operator()( char* s ) const { rsyn_string_free( s ); }
};
using owned_string = std::unique_ptr<char, string_deleter>;

int code_for( rsyn_status s )
{
  switch ( s )
  {
  case RSYN_OK:
    return exit_ok;
  case RSYN_ERR_INVARIANT:
  case RSYN_ERR_INTERNAL:
    return exit_internal;
  default:
    return exit_usage;
  }
}

void check( rsyn_status s, const std::string& context )
{
  if ( s != RSYN_OK )
  {
    throw cli_error{ code_for( s ), context + ": " + rsyn_last_error() };
  }
}

std::string take( char* s )
{
  owned_string owner( s );
  return std::string( s );
}

std::string read_text( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw cli_error{ exit_usage, "cannot open '" + path + "'" };
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text( const std::string& path, const std::string& text )
{
  if ( path.empty() || path == "-" )
  {
    std::cout << text;
    return;
  }
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    throw cli_error{ exit_usage, "cannot write '" + path + "'" };
  }
  out << text;
}

/* first keyword of a spec file, skipping blank and comment lines */
std::string spec_keyword( const std::string& text )
{
  std::istringstream in( text );
  for ( std::string line; std::getline( in, line ); )
  {
    line = line.substr( 0u, line.find( '#' ) );
    std::istringstream ls( line );
    std::string word;
    if ( ls >> word )
      return word;
  }
  return {};
}

function_ptr parse_function( const std::string& text, const std::string& path )
{
  rsyn_function* f = nullptr;
  check( rsyn_function_parse( text.c_str(), &f ), path );
  return function_ptr( f );
}

permutation_ptr parse_permutation( const std::string& text, const std::string& path )
{
  rsyn_permutation* p = nullptr;
  check( rsyn_permutation_parse( text.c_str(), &p ), path );
  return permutation_ptr( p );
}

std::string real_text( const rsyn_circuit* c )
{
  char* s = nullptr;
  check( rsyn_circuit_write_real( c, &s ), "write" );
  return take( s );
}

/* n or lo..hi */
std::pair<unsigned, unsigned> parse_range( const std::string& text )
{
  auto const dots = text.find( ".." );
  try
  {
    if ( dots == std::string::npos )
    {
      auto const v = static_cast<unsigned>( std::stoul( text ) );
      return { v, v };
    }
    auto const lo = static_cast<unsigned>( std::stoul( text.substr( 0u, dots ) ) );
    auto const hi = static_cast<unsigned>( std::stoul( text.substr( dots + 2u ) ) );
    if ( lo > hi )
      throw std::invalid_argument( "empty range" );
    return { lo, hi };
  }
  catch ( const std::exception& )
  {
    throw cli_error{ exit_usage, "invalid range '" + text + "' (expected N or LO..HI)" };
  }
}

std::string assignment_text( std::uint64_t a, unsigned n )
{
  std::string s;
  for ( auto i = 0u; i < n; ++i )
  {
    if ( i )
      s += ',';
    s += "x" + std::to_string( i + 1u ) + "=" + std::to_string( ( a >> i ) & 1u );
  }
  return s;
}

/* Re-reads the serialized circuit and checks it against the spec it was built from. */
void reverify_function( const std::string& real, const rsyn_function* f )
{
  rsyn_circuit* raw = nullptr;
  check( rsyn_circuit_read_real( real.c_str(), &raw ), "re-read" );
  circuit_ptr c( raw );
  std::uint32_t out = 0u;
  check( rsyn_circuit_primary_output( c.get(), &out ), "re-read" );
  rsyn_verify_report r{};
  check( rsyn_verify_function( c.get(), f, out, &r ), "re-verify" );
  if ( !r.correct || !r.ancilla_ok )
  {
    throw cli_error{ exit_internal, "written circuit failed re-verification" };
  }
}

void reverify_permutation( const std::string& real, const rsyn_permutation* p )
{
  rsyn_circuit* raw = nullptr;
  check( rsyn_circuit_read_real( real.c_str(), &raw ), "re-read" );
  circuit_ptr c( raw );
  rsyn_verify_report r{};
  check( rsyn_verify_permutation( c.get(), p, &r ), "re-verify" );
  if ( !r.correct )
  {
    throw cli_error{ exit_internal, "written circuit failed re-verification" };
  }
}

/* ---- convert ---- */

struct convert_options
{
  std::string input;
  std::string to;
  std::string out;
};

int run_convert( const convert_options& o )
{
  auto const text = read_text( o.input );
  if ( spec_keyword( text ) == "perm" )
  {
    throw cli_error{ exit_usage, o.input + ": permutation specs have a single representation" };
  }
  auto const f = parse_function( text, o.input );
  rsyn_repr target;
  if ( o.to.empty() )
    target = rsyn_function_source_repr( f.get() ) == RSYN_REPR_TT ? RSYN_REPR_ANF : RSYN_REPR_TT;
  else
    target = o.to == "anf" ? RSYN_REPR_ANF : RSYN_REPR_TT;

  char* s = nullptr;
  check( rsyn_function_to_spec( f.get(), target, &s ), "convert" );
  write_text( o.out, take( s ) );
  return exit_ok;
}

/* ---- synth ---- */

struct synth_options
{
  std::string method;
  std::string input;
  std::optional<int> k;
  std::string out;
};

std::string opt_cell( bool has, std::int64_t v )
{
  return has ? std::to_string( v ) : std::string{};
}

int run_synth( const synth_options& o )
{
  auto const text = read_text( o.input );
  bool const is_perm = spec_keyword( text ) == "perm";
  std::string real, report;

  if ( o.method == "decomp" )
  {
    if ( is_perm )
      throw cli_error{ exit_usage, "method decomp takes a single-output function spec" };
    auto const f = parse_function( text, o.input );
    rsyn_circuit* raw = nullptr;
    rsyn_decomp_report r{};
    check( rsyn_synth_decomp( f.get(), o.k.value_or( -1 ), &raw, &r ), "synth" );
    circuit_ptr c( raw );
    real = real_text( c.get() );
    reverify_function( real, f.get() );
    report = "n,k,gates_measured,bound_paper,bound_impl,lines,ancilla,garbage\n" + std::to_string( r.n ) + ',' +
             std::to_string( r.k ) + ',' + std::to_string( r.gates ) + ',' +
             opt_cell( r.has_bound_closed, r.bound_closed ) + ',' + std::to_string( r.bound_impl ) + ',' +
             std::to_string( r.lines ) + ',' + std::to_string( r.ancilla ) + ',' + std::to_string( r.garbage ) + '\n';
  }
  else
  {
    if ( !is_perm )
      throw cli_error{ exit_usage, "method " + o.method + " takes a permutation spec" };
    auto const p = parse_permutation( text, o.input );
    auto const n = rsyn_permutation_num_vars( p.get() );
    rsyn_circuit* raw = nullptr;
    std::size_t stgs = 0u;
    std::int64_t bound = 0;
    bool has_bound = true;
    if ( o.method == "mmd" )
    {
      check( rsyn_synth_mmd( p.get(), &raw ), "synth" );
      check( rsyn_bound( RSYN_BOUND_MMD_MCT, n, 0u, &bound ), "bound" );
    }
    else
    {
      check( rsyn_synth_esop_young( p.get(), &raw, &stgs ), "synth" );
      has_bound = rsyn_bound( RSYN_BOUND_ESOP_TOTAL, n, 0u, &bound ) == RSYN_OK;
    }
    circuit_ptr c( raw );
    real = real_text( c.get() );
    reverify_permutation( real, p.get() );
    rsyn_metrics m{};
    check( rsyn_circuit_metrics( c.get(), &m ), "metrics" );
    bool within = !has_bound || static_cast<std::int64_t>( m.gate_count ) <= bound;
    if ( o.method == "esop-young" )
      within = within && stgs <= 2u * n - 1u;
    report = "method,n,gates,bound,within_bound\n" + o.method + ',' + std::to_string( n ) + ',' +
             std::to_string( m.gate_count ) + ',' + opt_cell( has_bound, bound ) + ',' + ( within ? "1" : "0" ) + '\n';
  }

  if ( o.out.empty() || o.out == "-" )
  {
    std::cout << real;
    std::cerr << report;
  }
  else
  {
    write_text( o.out, real );
    std::cout << report;
  }
  return exit_ok;
}

/* ---- verify ---- */

struct verify_options
{
  std::string circuit;
  std::string spec;
};

int run_verify( const verify_options& o )
{
  auto const real = read_text( o.circuit );
  rsyn_circuit* raw = nullptr;
  check( rsyn_circuit_read_real( real.c_str(), &raw ), o.circuit );
  circuit_ptr c( raw );

  auto const text = read_text( o.spec );
  rsyn_verify_report r{};
  unsigned n = 0u;
  if ( spec_keyword( text ) == "perm" )
  {
    auto const p = parse_permutation( text, o.spec );
    n = rsyn_permutation_num_vars( p.get() );
    check( rsyn_verify_permutation( c.get(), p.get(), &r ), "verify" );
    r.ancilla_ok = 1;
  }
  else
  {
    auto const f = parse_function( text, o.spec );
    n = rsyn_function_num_vars( f.get() );
    std::uint32_t out = 0u;
    check( rsyn_circuit_primary_output( c.get(), &out ), o.circuit );
    check( rsyn_verify_function( c.get(), f.get(), out, &r ), "verify" );
  }

  std::cout << "correct=" << r.correct << '\n'
            << "ancilla_ok=" << r.ancilla_ok << '\n'
            << "gates=" << r.gate_count << '\n'
            << "lines=" << r.line_count << '\n'
            << "garbage=" << r.garbage_count << '\n';
  if ( r.has_mismatch )
  {
    std::cout << "first_mismatch=" << r.first_mismatch << " (" << assignment_text( r.first_mismatch, n ) << ")\n";
  }
  return r.correct && r.ancilla_ok ? exit_ok : exit_mismatch;
}

/* ---- bounds ---- */

struct bounds_options
{
  std::string n = "2..16";
  std::string format = "csv";
  std::string out;
};

int run_bounds( const bounds_options& o )
{
  auto const [lo, hi] = parse_range( o.n );
  char* s = nullptr;
  check( rsyn_bounds_csv( lo, hi, &s ), "bounds" );
  write_text( o.out, take( s ) );
  return exit_ok;
}

/* ---- bench ---- */

struct bench_options
{
  std::string method;
  std::string n;
  std::optional<int> k;
  unsigned trials = 100u;
  bool exhaustive = false;
  std::uint64_t seed = 1u;
  unsigned jobs = 0u;
  std::string format = "csv";
  std::string out;
};

struct trial
{
  unsigned n;
  std::uint64_t index;
  std::uint64_t seed;
};

struct trial_result
{
  std::string row;
  bool verified = false;
  std::optional<double> ratio;
  std::size_t gates = 0u;
  int error = exit_ok;
  std::string message;
};

constexpr const char* bench_header =
    "method,n,trial,k,gates,bound,bound_paper,within_bound,lines,ancilla,garbage,stgs,verified";

/* Permutation of the given lexicographic rank. */
std::vector<std::uint32_t> unrank_permutation( std::uint64_t rank, std::size_t size )
{
  std::vector<std::uint32_t> pool( size );
  std::iota( pool.begin(), pool.end(), 0u );
  std::vector<std::uint64_t> fact( size + 1u, 1u );
  for ( std::size_t i = 1; i <= size; ++i )
    fact[i] = fact[i - 1u] * i;
  std::vector<std::uint32_t> images;
  for ( std::size_t i = size; i > 0u; --i )
  {
    auto const q = rank / fact[i - 1u];
    rank %= fact[i - 1u];
    images.push_back( pool[q] );
    pool.erase( pool.begin() + static_cast<std::ptrdiff_t>( q ) );
  }
  return images;
}

trial_result run_trial( const bench_options& o, const trial& t )
{
  trial_result res;
  auto const prefix = o.method + ',' + std::to_string( t.n ) + ',' + std::to_string( t.index ) + ',';

  if ( o.method == "decomp" )
  {
    rsyn_function* fraw = nullptr;
    if ( o.exhaustive )
    {
      std::uint64_t word = t.index;
      check( rsyn_function_from_words( t.n, &word, 1u, &fraw ), "function" );
    }
    else
    {
      check( rsyn_function_random( t.n, t.seed, &fraw ), "function" );
    }
    function_ptr f( fraw );
    rsyn_circuit* craw = nullptr;
    rsyn_decomp_report r{};
    check( rsyn_synth_decomp( f.get(), o.k.value_or( -1 ), &craw, &r ), "synth" );
    circuit_ptr c( craw );
    reverify_function( real_text( c.get() ), f.get() );
    res.verified = true;
    res.gates = r.gates;
    res.ratio = static_cast<double>( r.gates ) / static_cast<double>( r.bound_impl );
    bool const within = static_cast<std::int64_t>( r.gates ) <= r.bound_impl && r.garbage_bound_ok;
    res.row = prefix + std::to_string( r.k ) + ',' + std::to_string( r.gates ) + ',' + std::to_string( r.bound_impl ) +
              ',' + opt_cell( r.has_bound_closed, r.bound_closed ) + ',' + ( within ? "1" : "0" ) + ',' +
              std::to_string( r.lines ) + ',' + std::to_string( r.ancilla ) + ',' + std::to_string( r.garbage ) +
              ",,1";
    return res;
  }

  rsyn_permutation* praw = nullptr;
  if ( o.exhaustive )
  {
    auto const images = unrank_permutation( t.index, std::size_t{ 1 } << t.n );
    check( rsyn_permutation_from_images( t.n, images.data(), images.size(), &praw ), "permutation" );
  }
  else
  {
    check( rsyn_permutation_random( t.n, t.seed, &praw ), "permutation" );
  }
  permutation_ptr p( praw );

  rsyn_circuit* craw = nullptr;
  std::size_t stgs = 0u;
  std::int64_t bound = 0;
  bool has_bound = true;
  if ( o.method == "mmd" )
  {
    check( rsyn_synth_mmd( p.get(), &craw ), "synth" );
    check( rsyn_bound( RSYN_BOUND_MMD_MCT, t.n, 0u, &bound ), "bound" );
  }
  else
  {
    check( rsyn_synth_esop_young( p.get(), &craw, &stgs ), "synth" );
    has_bound = rsyn_bound( RSYN_BOUND_ESOP_TOTAL, t.n, 0u, &bound ) == RSYN_OK;
  }
  circuit_ptr c( craw );
  reverify_permutation( real_text( c.get() ), p.get() );
  rsyn_metrics m{};
  check( rsyn_circuit_metrics( c.get(), &m ), "metrics" );

  res.verified = true;
  res.gates = m.gate_count;
  if ( has_bound )
    res.ratio = static_cast<double>( m.gate_count ) / static_cast<double>( bound );
  bool within = !has_bound || static_cast<std::int64_t>( m.gate_count ) <= bound;
  std::string stg_cell;
  if ( o.method == "esop-young" )
  {
    within = within && stgs <= 2u * t.n - 1u;
    stg_cell = std::to_string( stgs );
  }
  res.row = prefix + ',' + std::to_string( m.gate_count ) + ',' + opt_cell( has_bound, bound ) + ",," +
            ( within ? "1" : "0" ) + ',' + std::to_string( m.width ) + ',' + std::to_string( m.ancilla_count ) + ',' +
            std::to_string( m.garbage_count ) + ',' + stg_cell + ",1";
  return res;
}

int run_bench( const bench_options& o )
{
  if ( o.format != "csv" )
    throw cli_error{ exit_usage, "only --format csv is supported" };
  auto const [lo, hi] = parse_range( o.n );

  std::vector<trial> trials;
  for ( auto n = lo; n <= hi; ++n )
  {
    std::uint64_t count = o.trials;
    if ( o.exhaustive )
    {
      if ( o.method == "decomp" )
      {
        if ( n > 4u )
          throw cli_error{ exit_usage, "exhaustive decomp sweeps are limited to n <= 4" };
        count = std::uint64_t{ 1 } << ( 1u << n );
      }
      else
      {
        if ( n > 3u )
          throw cli_error{ exit_usage, "exhaustive permutation sweeps are limited to n <= 3" };
        count = 1u;
        for ( std::uint64_t i = 2; i <= ( std::uint64_t{ 1 } << n ); ++i )
          count *= i;
      }
    }
    auto const run_seed = rsyn_trial_seed( o.seed, n );
    for ( std::uint64_t i = 0; i < count; ++i )
    {
      trials.push_back( { n, i, rsyn_trial_seed( run_seed, i ) } );
    }
  }

  std::vector<trial_result> results( trials.size() );
  std::atomic<std::size_t> next{ 0u };
  auto worker = [&]() {
    for ( auto i = next++; i < trials.size(); i = next++ )
    {
      try
      {
        results[i] = run_trial( o, trials[i] );
      }
      catch ( const cli_error& e )
      {
        results[i].error = e.code;
        results[i].message = e.message;
      }
    }
  };
  auto jobs = o.jobs ? o.jobs : std::max( 1u, std::thread::hardware_concurrency() );
  jobs = static_cast<unsigned>( std::min<std::size_t>( jobs, std::max<std::size_t>( 1u, trials.size() ) ) );
  std::vector<std::thread> pool;
  for ( auto j = 1u; j < jobs; ++j )
    pool.emplace_back( worker );
  worker();
  for ( auto& t : pool )
    t.join();

  std::ostringstream out;
  out << bench_header << '\n';
  int code = exit_ok;
  std::size_t verified = 0u, max_gates = 0u;
  std::optional<double> max_ratio;
  for ( std::size_t i = 0; i < results.size(); ++i )
  {
    auto const& r = results[i];
    if ( r.error != exit_ok )
    {
      std::cerr << "trial " << trials[i].index << " (n=" << trials[i].n << "): " << r.message << '\n';
      code = std::max( code, r.error == exit_internal ? int{ exit_internal } : int{ exit_mismatch } );
      continue;
    }
    out << r.row << '\n';
    verified += r.verified ? 1u : 0u;
    max_gates = std::max( max_gates, r.gates );
    if ( r.ratio && ( !max_ratio || *r.ratio > *max_ratio ) )
      max_ratio = r.ratio;
  }
  char ratio[32] = "";
  if ( max_ratio )
    std::snprintf( ratio, sizeof ratio, "%.6f", *max_ratio );
  out << "# summary method=" << o.method << " rows=" << results.size() << " verified=" << verified
      << " max_gates=" << max_gates << " max_ratio=" << ratio << '\n';
  write_text( o.out, out.str() );
  return code;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Reversible logic synthesis workbench" };
  app.require_subcommand( 1 );
  app.set_version_flag( "--version", std::string( rsyn_version() ) );

  std::vector<std::string> const methods{ "decomp", "mmd", "esop-young" };

  convert_options conv;
  auto* convert = app.add_subcommand( "convert", "Convert a function spec between tt and anf form" );
  convert->add_option( "input", conv.input, "Function spec file" )->required();
  convert->add_option( "--to", conv.to, "Target representation (default: the other one)" )
      ->check( CLI::IsMember( { "tt", "anf" } ) );
  convert->add_option( "--out", conv.out, "Output file (default: stdout)" );

  synth_options syn;
  auto* synth = app.add_subcommand( "synth", "Synthesize a circuit and print a CSV report row" );
  synth->add_option( "input", syn.input, "Function spec (decomp) or permutation spec (mmd, esop-young)" )->required();
  synth->add_option( "--method", syn.method, "Synthesis method" )->required()->check( CLI::IsMember( methods ) );
  synth->add_option( "--k", syn.k, "Decomposition depth (default: floor(n/2))" )->check( CLI::NonNegativeNumber );
  synth->add_option( "--out", syn.out, "REAL output file (default: stdout, report on stderr)" );

  verify_options ver;
  auto* verify = app.add_subcommand( "verify", "Check a REAL circuit against a function or permutation spec" );
  verify->add_option( "circuit", ver.circuit, "REAL file" )->required();
  verify->add_option( "spec", ver.spec, "Function or permutation spec" )->required();

  bounds_options bnd;
  auto* bounds = app.add_subcommand( "bounds", "Print the gate-count bound comparison table as CSV" );
  bounds->add_option( "--n", bnd.n, "N or LO..HI (default 2..16)" );
  bounds->add_option( "--format", bnd.format, "Output format" )->check( CLI::IsMember( { "csv" } ) );
  bounds->add_option( "--out", bnd.out, "Output file (default: stdout)" );

  bench_options bo;
  auto* bench = app.add_subcommand( "bench", "Synthesize and verify many random or all functions" );
  bench->add_option( "--method", bo.method, "Synthesis method" )->required()->check( CLI::IsMember( methods ) );
  bench->add_option( "--n", bo.n, "N or LO..HI" )->required();
  bench->add_option( "--k", bo.k, "Decomposition depth (decomp only)" )->check( CLI::NonNegativeNumber );
  bench->add_option( "--trials", bo.trials, "Random trials per n" );
  bench->add_flag( "--exhaustive", bo.exhaustive, "Enumerate every function / permutation" );
  bench->add_option( "--seed", bo.seed, "Run seed" );
  bench->add_option( "--jobs", bo.jobs, "Worker threads (default: hardware concurrency)" );
  bench->add_option( "--format", bo.format, "Output format" )->check( CLI::IsMember( { "csv" } ) );
  bench->add_option( "--out", bo.out, "Output file (default: stdout)" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    auto const rc = app.exit( e );
    return rc == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( *convert )
      return run_convert( conv );
    if ( *synth )
      return run_synth( syn );
    if ( *verify )
      return run_verify( ver );
    if ( *bounds )
      return run_bounds( bnd );
    if ( *bench )
      return run_bench( bo );
  }
  catch ( const cli_error& e )
  {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_usage;
}
