/* Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails. */

#include "oracle.hpp"

#include <revsynth/boolfn.hpp>
#include <revsynth/bounds.hpp>
#include <revsynth/circuit.hpp>
#include <revsynth/io.hpp>
#include <revsynth/random.hpp>
#include <revsynth/synth_baselines.hpp>
#include <revsynth/synth_decomp.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

using namespace revsynth;

namespace
{

struct outcome
{
  bool pass = true;
  std::string detail;

  void expect( bool cond, const std::string& what )
  {
    if ( !cond && pass )
    {
      pass = false;
      detail = what;
    }
  }
};

truth_table table_of( unsigned n, std::uint64_t bits )
{
  std::uint64_t w = bits;
  return truth_table( n, std::span<const std::uint64_t>( &w, 1u ) );
}

outcome anf_round_trip()
{
  outcome o;
  for ( std::uint64_t bits = 0; bits < 256u; ++bits )
  {
    auto const tt = table_of( 3u, bits );
    auto const f = anf_from_tt( tt );
    o.expect( f.monomials() == oracle::anf_by_subsets( oracle::bits_of( tt ), 3u ),
              "anf mismatch for table " + std::to_string( bits ) );
    o.expect( tt_from_anf( f ) == tt, "round trip mismatch for table " + std::to_string( bits ) );
  }
  return o;
}

outcome decomposition_identities()
{
  outcome o;
  for ( std::uint64_t bits = 0; bits < 256u; ++bits )
  {
    auto const tt = table_of( 3u, bits );
    auto const f = anf_from_tt( tt );
    for ( auto kind : { decomposition_kind::shannon, decomposition_kind::positive_davio,
                        decomposition_kind::negative_davio } )
    {
      for ( unsigned v = 1u; v <= 3u; ++v )
      {
        auto const d = decompose( f, v, kind );
        auto const bit = 1u << ( v - 1u );
        o.expect( !( d.part0.support() & bit ) && !( d.part1.support() & bit ),
                  "part depends on its pivot" );
        /* recomposition checked pointwise from the parts' own terms */
        for ( std::uint64_t a = 0; a < 8u; ++a )
        {
          bool const xv = a & bit;
          bool const p0 = oracle::eval_terms( d.part0.monomials(), a );
          bool const p1 = oracle::eval_terms( d.part1.monomials(), a );
          bool value = false;
          switch ( kind )
          {
          case decomposition_kind::shannon:
            value = xv ? p1 : p0;
            break;
          case decomposition_kind::positive_davio:
            value = p0 ^ ( xv && p1 );
            break;
          case decomposition_kind::negative_davio:
            value = p0 ^ ( !xv && p1 );
            break;
          }
          o.expect( value == tt.get_bit( a ), "recomposition differs at table " + std::to_string( bits ) + " (" +
                                                  std::string( to_string( kind ) ) + ", x" + std::to_string( v ) +
                                                  ")" );
        }
        o.expect( recompose( d ) == f, "recompose differs" );
      }
    }
  }
  return o;
}

outcome minterm_bank_shape()
{
  outcome o;
  auto const b3 = build_minterm_bank( 3u, false );
  o.expect( b3.circ.num_gates() == 4u && b3.circ.width() == 7u, "m = 3 bank is not 4 gates / 7 lines" );
  for ( unsigned m = 2u; m <= 10u; ++m )
  {
    auto const b = build_minterm_bank( m, false );
    auto const met = metrics( b.circ );
    o.expect( met.gate_count == ( 1u << m ) - m - 1u, "gate formula fails at m = " + std::to_string( m ) );
    o.expect( met.width == ( 1u << m ) - 1u, "line formula fails at m = " + std::to_string( m ) );
    if ( m > 6u )
      continue;
    auto const s = oracle::run_batch( b.circ, 0u );
    for ( auto const& [mask, line] : b.bank.line_of )
      for ( std::uint64_t a = 0; a < ( std::uint64_t{ 1 } << m ); ++a )
        o.expect( static_cast<bool>( ( s[line] >> a ) & 1u ) == ( ( a & mask ) == mask ),
                  "bank line wrong at m = " + std::to_string( m ) );
  }
  return o;
}

struct decomp_stats
{
  std::size_t runs = 0u;
  std::size_t worst_gates = 0u;
  double worst_ratio = 0.0;
};

void check_decomp( outcome& o, decomp_stats& st, const truth_table& f )
{
  auto const n = f.num_vars();
  auto const r = synthesize_decomp( f, { n / 2u, true } );
  auto const sim = oracle::realizes( r.circ, oracle::bits_of( f ), r.report.output_line );
  auto const tag = " (n = " + std::to_string( n ) + ", run " + std::to_string( st.runs ) + ")";
  o.expect( sim.correct, "output differs" + tag );
  o.expect( sim.constants_restored, "ancilla not restored" + tag );
  o.expect( static_cast<std::int64_t>( r.circ.num_gates() ) <= bounds::decomp_impl( n, n / 2u ),
            "gate count above envelope" + tag );
  auto const extra = r.circ.width() - n;
  o.expect( extra <= ( std::size_t{ 1 } << ( ( n + 1u ) / 2u + 1u ) ) + n, "too many extra lines" + tag );
  ++st.runs;
  st.worst_gates = std::max( st.worst_gates, r.circ.num_gates() );
  st.worst_ratio = std::max( st.worst_ratio, double( r.circ.num_gates() ) / double( bounds::decomp_impl( n, n / 2u ) ) );
}

outcome decomp_correctness()
{
  outcome o;
  decomp_stats st;
  for ( std::uint64_t bits = 0; bits < 256u; ++bits )
    check_decomp( o, st, table_of( 3u, bits ) );
  for ( unsigned n = 4u; n <= 12u; ++n )
  {
    auto const run_seed = trial_seed( 2024u, n );
    for ( std::uint64_t i = 0; i < 1000u; ++i )
    {
      std::mt19937_64 rng( trial_seed( run_seed, i ) );
      check_decomp( o, st, random_function( n, rng ) );
    }
  }
  char buf[96];
  std::snprintf( buf, sizeof buf, "%zu circuits, max gates/envelope %.3f", st.runs, st.worst_ratio );
  if ( o.pass )
    o.detail = buf;
  return o;
}

outcome decomp_calculators()
{
  outcome o;
  unsigned const ns[] = { 4u, 6u, 8u, 10u };
  std::int64_t const single[] = { 6, 31, 130, 521 };
  std::int64_t const total[] = { 42, 341, 1950, 9899 };
  for ( int i = 0; i < 4; ++i )
  {
    auto const n = ns[i];
    o.expect( bounds::decomp_single( n, n / 2u ) == single[i], "single bound at n = " + std::to_string( n ) );
    o.expect( bounds::decomp_total( n ) == total[i], "total bound at n = " + std::to_string( n ) );
    /* independent evaluation of the even-n closed form */
    std::int64_t const h = n / 2u;
    o.expect( ( std::int64_t{ 1 } << ( n - 1u ) ) + ( std::int64_t{ 1 } << ( h - 1 ) ) - h - 2 == single[i],
              "closed form disagrees at n = " + std::to_string( n ) );
  }
  return o;
}

outcome mmd_exhaustive()
{
  outcome o;
  std::vector<std::uint32_t> images( 8u );
  std::iota( images.begin(), images.end(), 0u );
  std::size_t count = 0u, worst = 0u;
  do
  {
    auto const c = mmd_synthesize( permutation( 3u, images ) );
    o.expect( c.width() == 3u, "extra lines" );
    o.expect( oracle::images_of( c, 3u ) == images, "wrong permutation at rank " + std::to_string( count ) );
    worst = std::max( worst, c.num_gates() );
    ++count;
  } while ( std::next_permutation( images.begin(), images.end() ) );
  o.expect( count == 40320u, "enumeration incomplete" );
  o.expect( worst <= 17u, "max gates " + std::to_string( worst ) + " > 17" );
  if ( o.pass )
    o.detail = std::to_string( count ) + " permutations, max gates " + std::to_string( worst );
  return o;
}

outcome young_exhaustive()
{
  outcome o;
  std::vector<std::uint32_t> images( 8u );
  std::iota( images.begin(), images.end(), 0u );
  std::size_t worst_stgs = 0u, worst_gates = 0u;
  do
  {
    auto const r = esop_young_synthesize( permutation( 3u, images ) );
    o.expect( r.circ.width() == 3u, "width is not 3" );
    o.expect( oracle::images_of( r.circ, 3u ) == images, "wrong permutation" );
    o.expect( r.stg_count <= 5u, "more than 2n - 1 single-target gates" );
    worst_stgs = std::max( worst_stgs, r.stg_count );
    worst_gates = std::max( worst_gates, r.circ.num_gates() );
  } while ( std::next_permutation( images.begin(), images.end() ) );
  if ( o.pass )
    o.detail = "max stgs " + std::to_string( worst_stgs ) + ", max gates " + std::to_string( worst_gates );
  return o;
}

outcome recurrence()
{
  outcome o;
  std::int64_t f = 4;
  for ( unsigned n = 4u; n <= 20u; ++n )
  {
    if ( n > 4u )
      f = 2 * f + 2;
    o.expect( f == 3 * ( std::int64_t{ 1 } << ( n - 3u ) ) - 2, "closed form at n = " + std::to_string( n ) );
    o.expect( bounds::recurrence_iter( n ) == f && bounds::recurrence_closed( n ) == f,
              "calculator at n = " + std::to_string( n ) );
    if ( n == 5u )
      o.expect( f == 10, "f(5) != 10" );
  }
  return o;
}

outcome orderings()
{
  outcome o;
  o.expect( bounds::decomp_total( 6u ) == 341 && bounds::mmd_mct( 6u ) == 321, "n = 6 values" );
  o.expect( *bounds::decomp_total( 6u ) > bounds::mmd_mct( 6u ), "n = 6 ordering" );
  o.expect( bounds::esop_total( 8u ) == 435 && bounds::esop_total( 10u ) == 2204, "esop values" );
  for ( unsigned n : { 8u, 10u, 12u } )
  {
    auto const esop = std::int64_t{ 29 } * ( std::int64_t{ 1 } << ( n - 8u ) ) * ( 2 * n - 1 );
    o.expect( bounds::esop_total( n ) == esop, "esop total at n = " + std::to_string( n ) );
    o.expect( *bounds::decomp_total( n ) > esop, "ordering at n = " + std::to_string( n ) );
  }
  o.expect( bounds::decomp_total( 4u ) == 42 && bounds::mmd_mct( 4u ) == 49, "n = 4 values" );
  o.expect( *bounds::decomp_total( 4u ) < bounds::mmd_mct( 4u ), "n = 4 exception no longer holds" );
  if ( o.pass )
    o.detail = "n = 12: " + std::to_string( *bounds::decomp_total( 12u ) ) + " > " +
               std::to_string( *bounds::esop_total( 12u ) ) + "; n = 4: 42 < 49";
  return o;
}

std::string canonical_whitespace( const std::string& text )
{
  std::istringstream in( text );
  std::string out;
  for ( std::string line; std::getline( in, line ); )
  {
    std::istringstream ls( line );
    std::string word, joined;
    while ( ls >> word )
      joined += ( joined.empty() ? "" : " " ) + word;
    if ( !joined.empty() )
      out += joined + "\n";
  }
  return out;
}

outcome real_round_trip()
{
  outcome o;
  bool saw_negative = false;
  for ( auto name : { "toffoli_combine.real", "negctl.real", "decomp_example.real" } )
  {
    auto const text = read_file( std::string( REVSYNTH_TEST_DATA ) + "/" + name );
    auto const c = read_real( text );
    o.expect( canonical_whitespace( write_real( c ) ) == canonical_whitespace( text ),
              std::string( name ) + " does not round trip" );
    for ( auto const& g : c.gates() )
      saw_negative |= !g.neg_controls().empty();
  }
  o.expect( saw_negative, "no negative controls exercised" );
  return o;
}

} // namespace

int main()
{
  struct criterion
  {
    int id;
    const char* name;
    double budget_s;
    std::function<outcome()> run;
  };
  std::vector<criterion> const criteria{
      { 1, "ANF/TT round trip, all n=3 tables", 1.0, anf_round_trip },
      { 2, "Shannon/Davio identities, n=3 x 3 variants x 3 pivots", 1.0, decomposition_identities },
      { 3, "minterm bank size and line functions", 5.0, minterm_bank_shape },
      { 4, "decomposition synthesis, n=3 exhaustive + 1000 random per n=4..12", 600.0, decomp_correctness },
      { 5, "decomposition bound calculators", 1.0, decomp_calculators },
      { 6, "transformation-based synthesis, all n=3 permutations <= 17 gates", 120.0, mmd_exhaustive },
      { 7, "Young subgroup + ESOP, all n=3 permutations", 300.0, young_exhaustive },
      { 8, "recurrence closed form", 1.0, recurrence },
      { 9, "bound orderings", 1.0, orderings },
      { 10, "REAL round trip on golden files", 1.0, real_round_trip } };

  int failures = 0;
  for ( auto const& c : criteria )
  {
    auto const start = std::chrono::steady_clock::now();
    outcome o;
    try
    {
      o = c.run();
    }
    catch ( const std::exception& e )
    {
      o.pass = false;
      o.detail = std::string( "exception: " ) + e.what();
    }
    auto const secs = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
    if ( secs > c.budget_s )
    {
      if ( o.pass )
        o.detail = "over time budget";
      o.pass = false;
    }
    std::printf( "criterion %2d: %s  %-68s %8.3f s / %.0f s%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs,
                 c.budget_s, o.detail.empty() ? "" : "  ", o.detail.c_str() );
    std::fflush( stdout );
    failures += o.pass ? 0 : 1;
  }
  std::printf( "%d/%zu criteria passed\n", static_cast<int>( criteria.size() ) - failures, criteria.size() );
  return failures == 0 ? 0 : 1;
}
