#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <revsynth/revsynth.h>

#include <cstdint>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

namespace
{

std::string take( char* s )
{
  std::string out( s );
  rsyn_string_free( s );
  return out;
}

} // namespace

TEST_SUITE( "c_api" )
{

TEST_CASE( "function round trip" )
{
  rsyn_function* f = nullptr;
  REQUIRE( rsyn_function_parse( "vars 3\nanf x1*x2*x3 + x1*x2 + x2*x3 + x1 + x2 + 1\n", &f ) == RSYN_OK );
  CHECK( rsyn_function_num_vars( f ) == 3u );
  CHECK( rsyn_function_source_repr( f ) == RSYN_REPR_ANF );
  int v = -1;
  CHECK( rsyn_function_eval( f, 0b100, &v ) == RSYN_OK );
  CHECK( v == 1 );
  unsigned d = 0;
  CHECK( rsyn_function_degree( f, &d ) == RSYN_OK );
  CHECK( d == 3u );
  char* s = nullptr;
  REQUIRE( rsyn_function_to_spec( f, RSYN_REPR_TT, &s ) == RSYN_OK );
  CHECK( take( s ) == "vars 3\ntt 0x51\n" );
  CHECK( rsyn_function_eval( f, 8u, &v ) == RSYN_ERR_INVALID_ARGUMENT );
  rsyn_function_free( f );
}

TEST_CASE( "parse errors report a line" )
{
  rsyn_function* f = nullptr;
  CHECK( rsyn_function_parse( "vars 3\nanf x1 + x9\n", &f ) == RSYN_ERR_PARSE );
  CHECK( f == nullptr );
  CHECK( rsyn_last_error_line() == 2u );
  CHECK( std::strlen( rsyn_last_error() ) > 0u );

  rsyn_circuit* c = nullptr;
  CHECK( rsyn_circuit_read_real( ".numvars 1\n.variables a\n.begin\nt9 a\n.end\n", &c ) == RSYN_ERR_PARSE );
  CHECK( rsyn_last_error_line() == 4u );
}

TEST_CASE( "null arguments" )
{
  CHECK( rsyn_function_parse( nullptr, nullptr ) == RSYN_ERR_INVALID_ARGUMENT );
  rsyn_function_free( nullptr );
  rsyn_circuit_free( nullptr );
  rsyn_permutation_free( nullptr );
  rsyn_string_free( nullptr );
}

TEST_CASE( "synthesize, serialize, re-read, verify" )
{
  std::uint64_t word = 0x51;
  rsyn_function* f = nullptr;
  REQUIRE( rsyn_function_from_words( 3u, &word, 1u, &f ) == RSYN_OK );
  rsyn_circuit* c = nullptr;
  rsyn_decomp_report r{};
  REQUIRE( rsyn_synth_decomp( f, 1, &c, &r ) == RSYN_OK );
  CHECK( r.n == 3u );
  CHECK( r.k == 1u );
  CHECK( r.has_bound_closed == 0 );
  CHECK( static_cast<std::int64_t>( r.gates ) <= r.bound_impl );
  CHECK( r.garbage_bound_ok == 1 );

  char* text = nullptr;
  REQUIRE( rsyn_circuit_write_real( c, &text ) == RSYN_OK );
  rsyn_circuit* back = nullptr;
  REQUIRE( rsyn_circuit_read_real( text, &back ) == RSYN_OK );
  rsyn_string_free( text );

  std::uint32_t out = 0;
  REQUIRE( rsyn_circuit_primary_output( back, &out ) == RSYN_OK );
  CHECK( out == r.output_line );
  rsyn_verify_report v{};
  REQUIRE( rsyn_verify_function( back, f, out, &v ) == RSYN_OK );
  CHECK( v.correct == 1 );
  CHECK( v.ancilla_ok == 1 );
  CHECK( v.gate_count == r.gates );

  rsyn_metrics m{};
  REQUIRE( rsyn_circuit_metrics( back, &m ) == RSYN_OK );
  CHECK( m.width == r.lines );
  CHECK( m.num_inputs == 3u );

  std::vector<std::uint8_t> in( m.width, 0u ), res( m.width, 0u );
  in[1] = in[2] = 1u; /* x2 = x3 = 1 */
  REQUIRE( rsyn_circuit_simulate( back, in.data(), res.data(), m.width ) == RSYN_OK );
  CHECK( res[out] == 1u );
  in[2] = 0u;
  REQUIRE( rsyn_circuit_simulate( back, in.data(), res.data(), m.width ) == RSYN_OK );
  CHECK( res[out] == 0u );

  rsyn_circuit_free( back );
  rsyn_circuit_free( c );
  rsyn_function_free( f );
}

TEST_CASE( "mismatch is reported" )
{
  rsyn_circuit* c = nullptr;
  REQUIRE( rsyn_circuit_read_real( ".numvars 3\n.variables a b c\n.outputs a b f\n.begin\nt3 a b c\n.end\n", &c ) ==
           RSYN_OK );
  rsyn_function* zero = nullptr;
  REQUIRE( rsyn_function_parse( "vars 3\ntt 0\n", &zero ) == RSYN_OK );
  rsyn_verify_report v{};
  REQUIRE( rsyn_verify_function( c, zero, 2u, &v ) == RSYN_OK );
  CHECK( v.correct == 0 );
  CHECK( v.has_mismatch == 1 );
  CHECK( v.first_mismatch == 3u );
  CHECK( rsyn_verify_function( c, zero, 0u, &v ) == RSYN_ERR_INVALID_ARGUMENT );
  rsyn_function_free( zero );
  rsyn_circuit_free( c );
}

TEST_CASE( "permutation synthesis" )
{
  rsyn_permutation* p = nullptr;
  REQUIRE( rsyn_permutation_random( 4u, 42u, &p ) == RSYN_OK );
  for ( auto method : { 0, 1 } )
  {
    rsyn_circuit* c = nullptr;
    std::size_t stgs = 0u;
    if ( method == 0 )
      REQUIRE( rsyn_synth_mmd( p, &c ) == RSYN_OK );
    else
      REQUIRE( rsyn_synth_esop_young( p, &c, &stgs ) == RSYN_OK );
    rsyn_verify_report v{};
    REQUIRE( rsyn_verify_permutation( c, p, &v ) == RSYN_OK );
    CHECK( v.correct == 1 );
    rsyn_metrics m{};
    REQUIRE( rsyn_circuit_metrics( c, &m ) == RSYN_OK );
    CHECK( m.width == 4u );
    if ( method == 1 )
      CHECK( stgs <= 7u );
    rsyn_circuit_free( c );
  }
  char* s = nullptr;
  REQUIRE( rsyn_permutation_to_spec( p, &s ) == RSYN_OK );
  rsyn_permutation* q = nullptr;
  REQUIRE( rsyn_permutation_parse( s, &q ) == RSYN_OK );
  rsyn_string_free( s );
  for ( std::uint32_t x = 0; x < 16u; ++x )
  {
    std::uint32_t a = 0, b = 0;
    rsyn_permutation_image( p, x, &a );
    rsyn_permutation_image( q, x, &b );
    CHECK( a == b );
  }
  rsyn_permutation_free( q );
  rsyn_permutation_free( p );

  std::uint32_t const bad[] = { 0u, 0u };
  CHECK( rsyn_permutation_from_images( 1u, bad, 2u, &p ) == RSYN_ERR_INVALID_ARGUMENT );
}

TEST_CASE( "bounds" )
{
  std::int64_t v = 0;
  CHECK( rsyn_bound( RSYN_BOUND_MMD_MCT, 3u, 0u, &v ) == RSYN_OK );
  CHECK( v == 17 );
  CHECK( rsyn_bound( RSYN_BOUND_DECOMP_TOTAL, 8u, 0u, &v ) == RSYN_OK );
  CHECK( v == 1950 );
  CHECK( rsyn_bound( RSYN_BOUND_ESOP_TOTAL, 7u, 0u, &v ) == RSYN_ERR_UNDEFINED );
  CHECK( rsyn_bound( RSYN_BOUND_DECOMP_SINGLE, 4u, 4u, &v ) == RSYN_ERR_INVALID_ARGUMENT );
  CHECK( rsyn_bound( static_cast<rsyn_bound_kind>( 99 ), 4u, 0u, &v ) == RSYN_ERR_INVALID_ARGUMENT );
  char* csv = nullptr;
  REQUIRE( rsyn_bounds_csv( 8u, 8u, &csv ) == RSYN_OK );
  CHECK( take( csv ) == "n,mmd_mct,mmd_fredkin,bdd,esop_stg,esop_total,nabilla_small,decomp_single,decomp_total\n"
                        "8,1793,1546,768,29,435,94,130,1950\n" );
}

TEST_CASE( "errors are per thread" )
{
  rsyn_function* f = nullptr;
  CHECK( rsyn_function_parse( "bogus", &f ) == RSYN_ERR_PARSE );
  std::string other;
  std::thread( [&] { other = rsyn_last_error(); } ).join();
  CHECK( other.empty() );
  CHECK( std::strlen( rsyn_last_error() ) > 0u );
}

TEST_CASE( "trial seeds are stable" )
{
  CHECK( rsyn_trial_seed( 7u, 0u ) == rsyn_trial_seed( 7u, 0u ) );
  CHECK( rsyn_trial_seed( 7u, 0u ) != rsyn_trial_seed( 7u, 1u ) );
  CHECK( std::strcmp( rsyn_version(), "1.0.0" ) == 0 );
}

} // TEST_SUITE
