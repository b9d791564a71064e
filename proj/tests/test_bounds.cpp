#include <doctest.h>

#include <revsynth/bounds.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>

using namespace revsynth;

TEST_SUITE( "bounds" )
{

TEST_CASE( "transformation based" )
{
  CHECK( bounds::mmd_mct( 1u ) == 1 );
  CHECK( bounds::mmd_mct( 3u ) == 17 );
  CHECK( bounds::mmd_mct( 6u ) == 321 );
  CHECK( bounds::mmd_fredkin( 2u ) == 4 );
  CHECK( bounds::mmd_fredkin( 3u ) == 13 );
  CHECK( bounds::mmd_fredkin( 6u ) == 264 );
  CHECK_THROWS_AS( bounds::mmd_fredkin( 1u ), std::invalid_argument );
}

TEST_CASE( "bdd and esop" )
{
  CHECK( bounds::bdd( 1u ) == 6 );
  CHECK( bounds::bdd( 3u ) == 24 );
  CHECK( bounds::bdd( 8u ) == 768 );
  CHECK( bounds::esop_stg( 8u ) == 29 );
  CHECK( bounds::esop_total( 8u ) == 435 );
  CHECK( bounds::esop_stg( 10u ) == 116 );
  CHECK( bounds::esop_total( 10u ) == 2204 );
  CHECK_FALSE( bounds::esop_stg( 7u ).has_value() );
  CHECK_FALSE( bounds::esop_total( 7u ).has_value() );
}

TEST_CASE( "recurrence" )
{
  CHECK( bounds::recurrence_closed( 4u ) == 4 );
  CHECK( bounds::recurrence_closed( 5u ) == 10 );
  CHECK( bounds::recurrence_closed( 8u ) == 94 );
  for ( unsigned n = 4u; n <= 20u; ++n )
    CHECK( bounds::recurrence_iter( n ) == bounds::recurrence_closed( n ) );
  CHECK_THROWS_AS( bounds::recurrence_closed( 3u ), std::invalid_argument );
}

TEST_CASE( "decomposition" )
{
  CHECK( bounds::decomp_single( 4u, 2u ) == 6 );
  CHECK( bounds::decomp_single( 6u, 3u ) == 31 );
  CHECK( bounds::decomp_single( 8u, 4u ) == 130 );
  CHECK( bounds::decomp_single( 10u, 5u ) == 521 );
  CHECK( bounds::decomp_total( 4u ) == 42 );
  CHECK( bounds::decomp_total( 6u ) == 341 );
  CHECK( bounds::decomp_total( 8u ) == 1950 );
  CHECK( bounds::decomp_total( 10u ) == 9899 );
  CHECK_FALSE( bounds::decomp_total( 5u ).has_value() );
  CHECK_THROWS_AS( bounds::decomp_single( 4u, 4u ), std::invalid_argument );
  CHECK_THROWS_AS( bounds::decomp_single( 4u, 0u ), std::invalid_argument );

  for ( unsigned n = 4u; n <= 20u; n += 2u )
  {
    std::int64_t const h = n / 2u;
    CHECK( bounds::decomp_single( n, n / 2u ) ==
           ( std::int64_t{ 1 } << ( n - 1u ) ) + ( std::int64_t{ 1 } << ( h - 1 ) ) - h - 2 );
    CHECK( bounds::decomp_impl( n, n / 2u ) >= bounds::decomp_single( n, n / 2u ) );
  }
}

TEST_CASE( "multiplicative complexity" )
{
  CHECK( bounds::mc_lower( 1u ) == 0 );
  CHECK( bounds::mc_lower( 3u ) == 2 );
  CHECK( bounds::mc_random_upper( 8u ) == 26 );
  CHECK_THROWS_AS( bounds::mc_random_upper( 7u ), std::invalid_argument );
}

TEST_CASE( "orderings" )
{
  CHECK( *bounds::decomp_total( 6u ) > bounds::mmd_mct( 6u ) );
  for ( unsigned n : { 8u, 10u, 12u } )
    CHECK( *bounds::decomp_total( n ) > *bounds::esop_total( n ) );
  CHECK( *bounds::decomp_total( 4u ) < bounds::mmd_mct( 4u ) );
}

TEST_CASE( "strictly increasing" )
{
  for ( unsigned n = 2u; n < bounds::max_n; ++n )
  {
    CHECK( bounds::mmd_mct( n + 1u ) > bounds::mmd_mct( n ) );
    CHECK( bounds::mmd_fredkin( n + 1u ) > bounds::mmd_fredkin( n ) );
    CHECK( bounds::bdd( n + 1u ) > bounds::bdd( n ) );
    if ( n >= 8u )
      CHECK( *bounds::esop_total( n + 1u ) > *bounds::esop_total( n ) );
    if ( n >= 4u )
      CHECK( bounds::recurrence_closed( n + 1u ) > bounds::recurrence_closed( n ) );
    if ( n >= 4u && n % 2u == 0u && n + 2u <= bounds::max_n )
      CHECK( *bounds::decomp_total( n + 2u ) > *bounds::decomp_total( n ) );
  }
  CHECK_THROWS_AS( bounds::mmd_mct( bounds::max_n + 1u ), std::invalid_argument );
}

TEST_CASE( "comparison table" )
{
  auto const rows = bounds::comparison_table( 3u, 8u );
  REQUIRE( rows.size() == 6u );
  auto const& r8 = rows.back();
  CHECK( r8.mmd_mct == 1793 );
  CHECK( r8.bdd == 768 );
  CHECK( r8.esop_total == 435 );
  CHECK( r8.decomp_total == 1950 );
  auto const& r6 = rows[3];
  CHECK( r6.mmd_mct == 321 );
  CHECK( r6.decomp_total == 341 );
  CHECK_FALSE( rows[0].esop_total.has_value() );
  CHECK_FALSE( rows[0].decomp_total.has_value() );

  auto const csv = bounds::to_csv( rows );
  std::istringstream in( csv );
  std::string header, first;
  std::getline( in, header );
  std::getline( in, first );
  CHECK( header == bounds::csv_header );
  CHECK( first == "3,17,13,24,,,,," );

  CHECK_THROWS_AS( bounds::comparison_table( 1u, 4u ), std::invalid_argument );
  CHECK_THROWS_AS( bounds::comparison_table( 5u, 4u ), std::invalid_argument );
  CHECK_THROWS_AS( bounds::comparison_table( 2u, 33u ), std::invalid_argument );
}

} // TEST_SUITE
