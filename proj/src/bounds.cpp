#include <revsynth/bounds.hpp>

#include <stdexcept>

namespace revsynth::bounds
{

namespace
{

std::int64_t pow2( unsigned e )
{
  return std::int64_t{ 1 } << e;
}

void require( bool cond, const char* what )
{
  if ( !cond )
  {
    throw std::invalid_argument( what );
  }
}

void check_n( unsigned n )
{
  require( n >= 1u && n <= max_n, "n must be in 1..32" );
}

std::string cell( const std::optional<std::int64_t>& v )
{
  return v ? std::to_string( *v ) : std::string{};
}

} // namespace

std::int64_t mmd_mct( unsigned n )
{
  check_n( n );
  return ( std::int64_t{ n } - 1 ) * pow2( n ) + 1;
}

std::int64_t mmd_fredkin( unsigned n )
{
  check_n( n );
  require( n >= 2u, "Fredkin bound needs n >= 2" );
  return ( std::int64_t{ n } - 2 ) * pow2( n ) + 2 + n;
}

std::int64_t bdd( unsigned n )
{
  check_n( n );
  return 3 * pow2( n );
}

std::optional<std::int64_t> esop_stg( unsigned n )
{
  check_n( n );
  if ( n < 8u )
    return std::nullopt;
  return 29 * pow2( n - 8u );
}

std::optional<std::int64_t> esop_total( unsigned n )
{
  auto const stg = esop_stg( n );
  if ( !stg )
    return std::nullopt;
  return *stg * ( 2 * std::int64_t{ n } - 1 );
}

std::int64_t recurrence_closed( unsigned n )
{
  check_n( n );
  require( n >= 4u, "recurrence starts at n = 4" );
  return 3 * pow2( n - 3u ) - 2;
}

std::int64_t recurrence_iter( unsigned n )
{
  check_n( n );
  require( n >= 4u, "recurrence starts at n = 4" );
  std::int64_t f = 4;
  for ( auto i = 5u; i <= n; ++i )
  {
    f = 2 * f + 2;
  }
  return f;
}

std::int64_t decomp_single( unsigned n, unsigned k )
{
  check_n( n );
  require( k >= 1u && k < n, "decomposition depth must satisfy 1 <= k < n" );
  auto const m = n - k;
  return ( pow2( k ) - 1 ) + ( pow2( m ) - m - 1 ) + pow2( n - 1u ) - 3 * pow2( k - 1u );
}

std::optional<std::int64_t> decomp_total( unsigned n )
{
  check_n( n );
  if ( n % 2u != 0u || n < 4u )
    return std::nullopt;
  return ( 2 * std::int64_t{ n } - 1 ) * decomp_single( n, n / 2u );
}

std::int64_t decomp_impl( unsigned n, unsigned k )
{
  check_n( n );
  require( k < n, "decomposition depth must satisfy k < n" );
  auto const m = n - k;
  return ( pow2( k ) - 1 ) + ( pow2( m ) - m - 1 ) + ( pow2( m ) - 1 ) + pow2( k ) * ( pow2( m - 1u ) + 2 );
}

std::int64_t mc_lower( unsigned d )
{
  require( d >= 1u, "degree must be at least 1" );
  return std::int64_t{ d } - 1;
}

std::int64_t mc_random_upper( unsigned n )
{
  check_n( n );
  require( n % 2u == 0u, "random-function bound is stated for even n" );
  return pow2( n / 2u + 1u ) - n / 2u - 2;
}

std::vector<bound_row> comparison_table( unsigned n_min, unsigned n_max )
{
  require( 2u <= n_min && n_min <= n_max && n_max <= max_n, "table range must satisfy 2 <= n_min <= n_max <= 32" );
  std::vector<bound_row> rows;
  for ( auto n = n_min; n <= n_max; ++n )
  {
    bound_row r{};
    r.n = n;
    r.mmd_mct = mmd_mct( n );
    r.mmd_fredkin = mmd_fredkin( n );
    r.bdd = bdd( n );
    r.esop_stg = esop_stg( n );
    r.esop_total = esop_total( n );
    if ( n >= 4u )
      r.nabilla_small = recurrence_closed( n );
    r.decomp_total = decomp_total( n );
    if ( r.decomp_total )
      r.decomp_single = decomp_single( n, n / 2u );
    rows.push_back( r );
  }
  return rows;
}

std::string to_csv( const std::vector<bound_row>& rows )
{
  std::string out = csv_header;
  out += '\n';
  for ( auto const& r : rows )
  {
    out += std::to_string( r.n ) + ',' + std::to_string( r.mmd_mct ) + ',' + std::to_string( r.mmd_fredkin ) + ',' +
           std::to_string( r.bdd ) + ',' + cell( r.esop_stg ) + ',' + cell( r.esop_total ) + ',' +
           cell( r.nabilla_small ) + ',' + cell( r.decomp_single ) + ',' + cell( r.decomp_total ) + '\n';
  }
  return out;
}

} // namespace revsynth::bounds
