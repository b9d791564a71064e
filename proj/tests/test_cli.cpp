#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace
{

struct run_result
{
  int code;
  std::string out;
};

run_result run( const std::string& args )
{
  std::string const cmd = std::string( REVSYNTH_CLI ) + " " + args + " 2>/dev/null";
  FILE* pipe = popen( cmd.c_str(), "r" );
  REQUIRE( pipe != nullptr );
  std::string out;
  char buf[4096];
  for ( std::size_t n; ( n = std::fread( buf, 1u, sizeof buf, pipe ) ) > 0u; )
    out.append( buf, n );
  auto const status = pclose( pipe );
  return { WIFEXITED( status ) ? WEXITSTATUS( status ) : -1, out };
}

std::string data( const std::string& name )
{
  return std::string( REVSYNTH_TEST_DATA ) + "/" + name;
}

fs::path scratch()
{
  auto const dir = fs::temp_directory_path() / "revsynth_cli_test";
  fs::create_directories( dir );
  return dir;
}

void put( const fs::path& p, const std::string& text )
{
  std::ofstream( p ) << text;
}

std::string slurp( const fs::path& p )
{
  std::ifstream in( p );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines( const std::string& s, char skip )
{
  std::istringstream in( s );
  std::size_t n = 0u;
  for ( std::string line; std::getline( in, line ); )
    if ( !line.empty() && line[0] != skip )
      ++n;
  return n;
}

} // namespace

TEST_SUITE( "cli" )
{

TEST_CASE( "convert" )
{
  auto const r = run( "convert " + data( "and2.spec" ) );
  CHECK( r.code == 0 );
  CHECK( r.out == "vars 2\nanf x1*x2\n" );

  CHECK( run( "convert " + data( "example_fn.spec" ) ).out == "vars 3\ntt 0x51\n" );

  auto const empty = scratch() / "empty.spec";
  put( empty, "vars 3\nanf\n" );
  CHECK( run( "convert " + empty.string() ).out == "vars 3\ntt 0x0\n" );

  auto const bad = scratch() / "bad.spec";
  put( bad, "vars 3\nanf x1 +* x2\n" );
  CHECK( run( "convert " + bad.string() ).code == 2 );
}

TEST_CASE( "synth and verify" )
{
  auto const out = scratch() / "example.real";
  auto const r = run( "synth --method decomp --k 1 --out " + out.string() + " " + data( "example_fn.spec" ) );
  CHECK( r.code == 0 );
  CHECK( r.out.rfind( "n,k,gates_measured,bound_paper,bound_impl,lines,ancilla,garbage\n3,1,", 0 ) == 0 );
  CHECK( slurp( out ) == slurp( data( "decomp_example.real" ) ) );
  CHECK( run( "verify " + out.string() + " " + data( "example_fn.spec" ) ).code == 0 );

  auto const id = scratch() / "id.real";
  CHECK( run( "synth --method mmd --out " + id.string() + " " + data( "identity3.perm" ) ).code == 0 );
  CHECK( slurp( id ).find( ".begin\n.end\n" ) != std::string::npos );

  auto const perm = scratch() / "p4.perm";
  put( perm, "perm 4\n3 14 0 7 9 1 12 5 15 2 8 11 4 6 13 10\n" );
  auto const ey = scratch() / "p4.real";
  auto const e = run( "synth --method esop-young --out " + ey.string() + " " + perm.string() );
  CHECK( e.code == 0 );
  CHECK( slurp( ey ).find( ".numvars 4\n" ) != std::string::npos );
  CHECK( run( "verify " + ey.string() + " " + perm.string() ).code == 0 );

  CHECK( run( "synth --method mmd " + data( "example_fn.spec" ) ).code == 2 );
  CHECK( run( "synth --method decomp " + data( "identity3.perm" ) ).code == 2 );
  CHECK( run( "synth --method nope " + data( "example_fn.spec" ) ).code == 2 );
  CHECK( run( "synth --method decomp --k 3 " + data( "example_fn.spec" ) ).code == 2 );
}

TEST_CASE( "verify exit codes" )
{
  auto const ok = run( "verify " + data( "toffoli_combine.real" ) + " " + data( "toffoli_combine_fn.spec" ) );
  CHECK( ok.code == 0 );
  CHECK( ok.out.find( "correct=1" ) != std::string::npos );

  auto const bad = run( "verify " + data( "toffoli_combine.real" ) + " " + data( "zero3.spec" ) );
  CHECK( bad.code == 1 );
  CHECK( bad.out.find( "first_mismatch=3 (x1=1,x2=1,x3=0)" ) != std::string::npos );

  CHECK( run( "verify " + data( "truncated.real" ) + " " + data( "toffoli_combine_fn.spec" ) ).code == 2 );
  CHECK( run( "verify " + data( "missing.real" ) + " " + data( "toffoli_combine_fn.spec" ) ).code == 2 );
}

TEST_CASE( "bounds" )
{
  auto const r = run( "bounds --n 3..8" );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "\n3,17,13,24,,,,,\n" ) != std::string::npos );
  CHECK( r.out.find( "\n6,321,264,192,,,22,31,341\n" ) != std::string::npos );
  CHECK( r.out.find( "\n8,1793,1546,768,29,435,94,130,1950\n" ) != std::string::npos );
  CHECK( run( "bounds --n 1..4" ).code == 2 );
  CHECK( run( "bounds --format json" ).code == 2 );
}

TEST_CASE( "bench is deterministic and parallel-safe" )
{
  auto const a = run( "bench --method decomp --n 6 --trials 100 --seed 7 --jobs 1" );
  auto const b = run( "bench --method decomp --n 6 --trials 100 --seed 7 --jobs 4" );
  CHECK( a.code == 0 );
  CHECK( a.out == b.out );
  CHECK( count_lines( a.out, '#' ) == 101u );
  CHECK( a.out.find( "# summary method=decomp rows=100 verified=100 " ) != std::string::npos );
  CHECK( run( "bench --method decomp --n 6 --trials 100 --seed 8" ).out != a.out );

  auto const file = scratch() / "bench.csv";
  CHECK( run( "bench --method decomp --n 6 --trials 100 --seed 7 --jobs 2 --out " + file.string() ).code == 0 );
  CHECK( slurp( file ) == a.out );
}

TEST_CASE( "bench sweeps" )
{
  auto const m = run( "bench --method mmd --n 3 --exhaustive" );
  CHECK( m.code == 0 );
  CHECK( count_lines( m.out, '#' ) == 40321u );
  CHECK( m.out.find( "max_gates=17 max_ratio=1.000000" ) != std::string::npos );

  auto const e = run( "bench --method esop-young --n 3 --exhaustive" );
  CHECK( e.code == 0 );
  std::istringstream in( e.out );
  std::string line;
  std::getline( in, line );
  std::size_t rows = 0u;
  while ( std::getline( in, line ) )
  {
    if ( line[0] == '#' )
      continue;
    ++rows;
    /* method,n,trial,k,gates,bound,bound_paper,within_bound,lines,ancilla,garbage,stgs,verified */
    std::vector<std::string> cells;
    std::istringstream ls( line );
    for ( std::string cell; std::getline( ls, cell, ',' ); )
      cells.push_back( cell );
    cells.resize( 13u );
    REQUIRE( cells[8] == "3" );
    REQUIRE( cells[9] == "0" );
    REQUIRE( cells[12] == "1" );
  }
  CHECK( rows == 40320u );

  CHECK( run( "bench --method mmd --n 4 --exhaustive" ).code == 2 );
  CHECK( run( "bench --n 4" ).code == 2 );
}

} // TEST_SUITE
