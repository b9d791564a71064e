#include <revsynth/errors.hpp>
#include <revsynth/synth_baselines.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace revsynth
{

namespace
{

void check_width( const permutation& p )
{
  if ( p.num_vars() < 1u || p.num_vars() > max_baseline_vars )
  {
    throw std::invalid_argument( "baseline synthesis supports 1.." + std::to_string( max_baseline_vars ) +
                                 " variables" );
  }
}

circuit input_lines( unsigned n )
{
  circuit c;
  for ( auto i = 1u; i <= n; ++i )
  {
    c.add_input( "x" + std::to_string( i ), i );
  }
  return c;
}

std::vector<line_index> bits_of( std::uint32_t mask )
{
  std::vector<line_index> lines;
  for ( auto b = 0u; mask >> b; ++b )
  {
    if ( ( mask >> b ) & 1u )
      lines.push_back( b );
  }
  return lines;
}

/* Row-wise table of a single-target control: g(a) for every assignment a. */
single_target_gate stg_from_table( unsigned target_var, const std::vector<std::uint8_t>& values, unsigned n )
{
  truth_table tt( n );
  for ( std::uint64_t a = 0; a < values.size(); ++a )
  {
    if ( values[a] )
      tt.set_bit( a, true );
  }
  return { target_var, anf_from_tt( tt ) };
}

} // namespace

circuit mmd_synthesize( const permutation& p )
{
  check_width( p );
  auto const n = p.num_vars();
  auto images = p.images();

  std::vector<mpmct_gate> gates;
  auto apply = [&]( std::uint32_t controls, std::uint32_t target_bit ) {
    for ( auto& y : images )
    {
      if ( ( y & controls ) == controls )
        y ^= target_bit;
    }
    gates.emplace_back( static_cast<line_index>( std::countr_zero( target_bit ) ), bits_of( controls ) );
  };

  for ( std::uint32_t row = 0; row < images.size(); ++row )
  {
    /* images[row] >= row here, since all smaller rows are already fixed */
    auto const y = images[row];
    if ( y == row )
      continue;
    for ( auto set = row & ~y; set; set &= set - 1u )
    {
      apply( images[row], set & ( ~set + 1u ) );
    }
    for ( auto clear = images[row] & ~row; clear; clear &= clear - 1u )
    {
      apply( row, clear & ( ~clear + 1u ) );
    }
    if ( images[row] != row )
    {
      throw invariant_error( "transformation step failed to fix row " + std::to_string( row ) );
    }
  }

  /* gates were applied on the output side, so the circuit runs them in reverse */
  auto c = input_lines( n );
  std::reverse( gates.begin(), gates.end() );
  c.append( gates );
  return c;
}

permutation apply_stg( const single_target_gate& g, unsigned num_vars )
{
  if ( g.target_var < 1u || g.target_var > num_vars || g.control.num_vars() != num_vars )
  {
    throw std::invalid_argument( "single-target gate does not fit the variable count" );
  }
  auto const bit = std::uint32_t{ 1 } << ( g.target_var - 1u );
  if ( g.control.support() & bit )
  {
    throw std::invalid_argument( "single-target gate control depends on its target" );
  }
  auto const values = tt_from_anf( g.control );
  std::vector<std::uint32_t> images( std::size_t{ 1 } << num_vars );
  for ( std::uint32_t x = 0; x < images.size(); ++x )
  {
    images[x] = values.get_bit( x ) ? x ^ bit : x;
  }
  return permutation( num_vars, std::move( images ) );
}

permutation compose_stgs( const std::vector<single_target_gate>& gates, unsigned num_vars )
{
  auto result = permutation::identity( num_vars );
  for ( auto const& g : gates )
  {
    result = apply_stg( g, num_vars ).after( result );
  }
  return result;
}

std::vector<single_target_gate> young_decompose( const permutation& p )
{
  check_width( p );
  auto const n = p.num_vars();
  auto const size = std::uint32_t{ 1 } << n;
  auto mid = p.images();

  std::vector<single_target_gate> right, left;
  for ( auto j = 0u; j + 1u < n; ++j )
  {
    auto const e = std::uint32_t{ 1 } << j;
    std::vector<std::uint32_t> inv( size );
    for ( std::uint32_t x = 0; x < size; ++x )
      inv[mid[x]] = x;

    /* Two-colour the edges x -> mid[x] of the bipartite graph between input
     * pairs {x, x^e} and output pairs {y, y^e}; every node gets one edge of
     * each colour.  The colour becomes the pivot bit in the middle factor. */
    std::vector<std::int8_t> colour( size, -1 );
    for ( std::uint32_t start = 0; start < size; ++start )
    {
      if ( colour[start] != -1 )
        continue;
      colour[start] = 0;
      colour[start ^ e] = 1;
      auto cur = start;
      while ( true )
      {
        auto const other = inv[mid[cur] ^ e];
        auto const want = static_cast<std::int8_t>( 1 - colour[cur] );
        if ( colour[other] != -1 )
        {
          if ( colour[other] != want )
            throw invariant_error( "inconsistent cycle colouring" );
          break;
        }
        colour[other] = want;
        colour[other ^ e] = static_cast<std::int8_t>( 1 - want );
        cur = other ^ e;
      }
    }

    std::vector<std::uint8_t> swap_in( size ), swap_out( size );
    for ( std::uint32_t x = 0; x < size; ++x )
    {
      swap_in[x] = static_cast<std::uint8_t>( colour[x & ~e] );
      swap_out[x] = static_cast<std::uint8_t>( colour[inv[x & ~e]] );
    }

    std::vector<std::uint32_t> next( size );
    for ( std::uint32_t x = 0; x < size; ++x )
    {
      auto const y = mid[x];
      next[swap_in[x] ? x ^ e : x] = swap_out[y] ? y ^ e : y;
    }
    for ( std::uint32_t x = 0; x < size; ++x )
    {
      if ( ( ( next[x] ^ x ) & e ) != 0u )
        throw invariant_error( "middle factor moves the pivot bit" );
    }
    mid = std::move( next );

    right.push_back( stg_from_table( j + 1u, swap_in, n ) );
    left.push_back( stg_from_table( j + 1u, swap_out, n ) );
  }

  auto const top = std::uint32_t{ 1 } << ( n - 1u );
  std::vector<std::uint8_t> flip( size );
  for ( std::uint32_t x = 0; x < size; ++x )
  {
    auto const diff = mid[x] ^ x;
    if ( diff & ~top )
      throw invariant_error( "final factor is not a single-target gate" );
    flip[x] = ( mid[x & ~top] ^ ( x & ~top ) ) ? 1u : 0u;
  }

  std::vector<single_target_gate> result = std::move( right );
  result.push_back( stg_from_table( n, flip, n ) );
  result.insert( result.end(), std::make_move_iterator( left.rbegin() ), std::make_move_iterator( left.rend() ) );
  std::erase_if( result, []( auto const& g ) { return g.control.empty(); } );
  return result;
}

std::vector<mpmct_gate> stg_to_mpmct( const single_target_gate& g )
{
  auto const bit = std::uint32_t{ 1 } << ( g.target_var - 1u );
  if ( g.target_var < 1u || g.target_var > g.control.num_vars() || ( g.control.support() & bit ) )
  {
    throw std::invalid_argument( "single-target gate control depends on its target" );
  }
  std::vector<mpmct_gate> gates;
  for ( auto mask : g.control.monomials() )
  {
    gates.emplace_back( g.target_var - 1u, bits_of( mask ) );
  }
  return gates;
}

esop_young_result esop_young_synthesize( const permutation& p )
{
  auto const stgs = young_decompose( p );
  esop_young_result result{ input_lines( p.num_vars() ), stgs.size() };
  for ( auto const& g : stgs )
  {
    result.circ.append( stg_to_mpmct( g ) );
  }
  return result;
}

} // namespace revsynth
