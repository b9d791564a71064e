#include <revsynth/boolfn.hpp>
#include <revsynth/errors.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace revsynth
{

namespace
{

constexpr std::uint64_t lo_masks[] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };

std::size_t word_count( unsigned num_vars )
{
  return num_vars <= 6u ? 1u : std::size_t{ 1 } << ( num_vars - 6u );
}

void check_vars( unsigned num_vars )
{
  if ( num_vars > max_table_vars )
  {
    throw std::invalid_argument( "variable count " + std::to_string( num_vars ) + " exceeds " +
                                 std::to_string( max_table_vars ) );
  }
}

void check_var( const anf& f, unsigned var )
{
  if ( var < 1u || var > f.num_vars() )
  {
    throw std::invalid_argument( "variable index " + std::to_string( var ) + " outside 1.." +
                                 std::to_string( f.num_vars() ) );
  }
}

/* Positive-polarity Reed-Muller transform, in place; it is its own inverse. */
void moebius( std::vector<std::uint64_t>& words, unsigned num_vars )
{
  for ( auto i = 0u; i < std::min( num_vars, 6u ); ++i )
  {
    auto const shift = 1u << i;
    for ( auto& w : words )
    {
      w ^= ( w & lo_masks[i] ) << shift;
    }
  }
  for ( auto i = 6u; i < num_vars; ++i )
  {
    auto const stride = std::size_t{ 1 } << ( i - 6u );
    for ( std::size_t j = 0; j < words.size(); ++j )
    {
      if ( ( j & stride ) == 0u )
      {
        words[j | stride] ^= words[j];
      }
    }
  }
}

/* Monomial order for printing: higher degree first, then lexicographic on variable lists. */
bool print_before( std::uint32_t a, std::uint32_t b )
{
  auto const da = std::popcount( a ), db = std::popcount( b );
  if ( da != db )
  {
    return da > db;
  }
  auto const diff = a ^ b;
  if ( diff == 0u )
  {
    return false;
  }
  return ( a & ( diff & ( ~diff + 1u ) ) ) != 0u;
}

anf multiply_by_var( const anf& f, std::uint32_t bit )
{
  std::vector<std::uint32_t> masks;
  masks.reserve( f.size() );
  for ( auto m : f.monomials() )
  {
    masks.push_back( m | bit );
  }
  return anf( f.num_vars(), masks );
}

} // namespace

/* truth_table */

truth_table::truth_table( unsigned num_vars )
    : num_vars_( num_vars )
{
  check_vars( num_vars );
  words_.assign( word_count( num_vars ), 0u );
}

truth_table::truth_table( unsigned num_vars, std::span<const std::uint64_t> words )
    : truth_table( num_vars )
{
  if ( words.size() != words_.size() )
  {
    throw std::invalid_argument( "truth table word count mismatch" );
  }
  std::copy( words.begin(), words.end(), words_.begin() );
  mask_tail();
}

truth_table truth_table::projection( unsigned num_vars, unsigned var )
{
  if ( var < 1u || var > num_vars )
  {
    throw std::invalid_argument( "projection variable out of range" );
  }
  truth_table tt( num_vars );
  auto const i = var - 1u;
  if ( i < 6u )
  {
    std::fill( tt.words_.begin(), tt.words_.end(), ~lo_masks[i] );
  }
  else
  {
    auto const stride = std::size_t{ 1 } << ( i - 6u );
    for ( std::size_t j = 0; j < tt.words_.size(); ++j )
    {
      tt.words_[j] = ( j & stride ) ? ~std::uint64_t{ 0 } : 0u;
    }
  }
  tt.mask_tail();
  return tt;
}

void truth_table::mask_tail() noexcept
{
  if ( num_vars_ < 6u )
  {
    words_[0] &= ( std::uint64_t{ 1 } << ( 1u << num_vars_ ) ) - 1u;
  }
}

bool truth_table::get_bit( std::uint64_t assignment ) const
{
  if ( assignment >= num_bits() )
  {
    throw std::out_of_range( "assignment out of range" );
  }
  return ( words_[assignment >> 6] >> ( assignment & 63u ) ) & 1u;
}

void truth_table::set_bit( std::uint64_t assignment, bool value )
{
  if ( get_bit( assignment ) != value )
  {
    flip_bit( assignment );
  }
}

void truth_table::flip_bit( std::uint64_t assignment )
{
  if ( assignment >= num_bits() )
  {
    throw std::out_of_range( "assignment out of range" );
  }
  words_[assignment >> 6] ^= std::uint64_t{ 1 } << ( assignment & 63u );
}

bool truth_table::is_const0() const noexcept
{
  return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0u; } );
}

std::uint64_t truth_table::count_ones() const noexcept
{
  std::uint64_t count = 0u;
  for ( auto w : words_ )
  {
    count += std::popcount( w );
  }
  return count;
}

truth_table& truth_table::operator^=( const truth_table& other )
{
  if ( other.num_vars_ != num_vars_ )
  {
    throw std::invalid_argument( "truth table size mismatch" );
  }
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

truth_table& truth_table::operator&=( const truth_table& other )
{
  if ( other.num_vars_ != num_vars_ )
  {
    throw std::invalid_argument( "truth table size mismatch" );
  }
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    words_[i] &= other.words_[i];
  }
  return *this;
}

truth_table truth_table::operator~() const
{
  auto copy = *this;
  for ( auto& w : copy.words_ )
  {
    w = ~w;
  }
  copy.mask_tail();
  return copy;
}

truth_table operator^( truth_table lhs, const truth_table& rhs )
{
  return lhs ^= rhs;
}

truth_table operator&( truth_table lhs, const truth_table& rhs )
{
  return lhs &= rhs;
}

/* anf */

anf::anf( unsigned num_vars )
    : num_vars_( num_vars )
{
  if ( num_vars > 31u )
  {
    throw std::invalid_argument( "ANF variable count exceeds mask width" );
  }
}

anf::anf( unsigned num_vars, std::initializer_list<std::uint32_t> monomials )
    : anf( num_vars, std::span<const std::uint32_t>( monomials.begin(), monomials.size() ) )
{
}

anf::anf( unsigned num_vars, std::span<const std::uint32_t> monomials )
    : anf( num_vars )
{
  std::vector<std::uint32_t> sorted( monomials.begin(), monomials.end() );
  std::sort( sorted.begin(), sorted.end() );
  auto const limit = std::uint64_t{ 1 } << num_vars;
  for ( std::size_t i = 0; i < sorted.size(); )
  {
    auto j = i;
    while ( j < sorted.size() && sorted[j] == sorted[i] )
    {
      ++j;
    }
    if ( sorted[i] >= limit )
    {
      throw std::invalid_argument( "monomial mask outside variable range" );
    }
    if ( ( j - i ) % 2u == 1u )
    {
      monomials_.push_back( sorted[i] );
    }
    i = j;
  }
}

bool anf::contains( std::uint32_t mask ) const
{
  return std::binary_search( monomials_.begin(), monomials_.end(), mask );
}

std::uint32_t anf::support() const noexcept
{
  std::uint32_t s = 0u;
  for ( auto m : monomials_ )
  {
    s |= m;
  }
  return s;
}

void anf::toggle( std::uint32_t mask )
{
  if ( mask >= ( std::uint64_t{ 1 } << num_vars_ ) )
  {
    throw std::invalid_argument( "monomial mask outside variable range" );
  }
  auto it = std::lower_bound( monomials_.begin(), monomials_.end(), mask );
  if ( it != monomials_.end() && *it == mask )
  {
    monomials_.erase( it );
  }
  else
  {
    monomials_.insert( it, mask );
  }
}

anf& anf::operator^=( const anf& other )
{
  if ( other.num_vars_ != num_vars_ )
  {
    throw std::invalid_argument( "ANF variable count mismatch" );
  }
  std::vector<std::uint32_t> result;
  result.reserve( monomials_.size() + other.monomials_.size() );
  std::set_symmetric_difference( monomials_.begin(), monomials_.end(), other.monomials_.begin(),
                                 other.monomials_.end(), std::back_inserter( result ) );
  monomials_ = std::move( result );
  return *this;
}

anf operator^( anf lhs, const anf& rhs )
{
  return lhs ^= rhs;
}

/* conversions */

anf anf_from_tt( const truth_table& tt )
{
  std::vector<std::uint64_t> words( tt.words().begin(), tt.words().end() );
  moebius( words, tt.num_vars() );

  std::vector<std::uint32_t> masks;
  for ( std::size_t j = 0; j < words.size(); ++j )
  {
    auto w = words[j];
    while ( w )
    {
      auto const bit = static_cast<std::uint32_t>( std::countr_zero( w ) );
      masks.push_back( static_cast<std::uint32_t>( j * 64u ) + bit );
      w &= w - 1u;
    }
  }
  return anf( tt.num_vars(), masks );
}

truth_table tt_from_anf( const anf& expr )
{
  truth_table tt( expr.num_vars() );
  for ( auto m : expr.monomials() )
  {
    tt.flip_bit( m );
  }
  std::vector<std::uint64_t> words( tt.words().begin(), tt.words().end() );
  moebius( words, expr.num_vars() );
  return truth_table( expr.num_vars(), words );
}

bool evaluate( const anf& expr, std::uint64_t assignment )
{
  if ( assignment >= ( std::uint64_t{ 1 } << expr.num_vars() ) )
  {
    throw std::out_of_range( "assignment out of range" );
  }
  bool value = false;
  for ( auto m : expr.monomials() )
  {
    value ^= ( assignment & m ) == m;
  }
  return value;
}

anf cofactor( const anf& f, unsigned var, unsigned polarity )
{
  check_var( f, var );
  auto const bit = std::uint32_t{ 1 } << ( var - 1u );
  std::vector<std::uint32_t> masks;
  for ( auto m : f.monomials() )
  {
    auto const has = ( m & bit ) != 0u;
    switch ( polarity )
    {
    case 0u:
      if ( !has )
        masks.push_back( m );
      break;
    case 1u:
      masks.push_back( m & ~bit );
      break;
    case 2u:
      if ( has )
        masks.push_back( m & ~bit );
      break;
    default:
      throw std::invalid_argument( "cofactor polarity must be 0, 1 or 2" );
    }
  }
  return anf( f.num_vars(), masks );
}

decomposition_parts decompose( const anf& f, unsigned var, decomposition_kind kind )
{
  switch ( kind )
  {
  case decomposition_kind::shannon:
    return { kind, var, cofactor( f, var, 0u ), cofactor( f, var, 1u ) };
  case decomposition_kind::positive_davio:
    return { kind, var, cofactor( f, var, 0u ), cofactor( f, var, 2u ) };
  case decomposition_kind::negative_davio:
    return { kind, var, cofactor( f, var, 1u ), cofactor( f, var, 2u ) };
  }
  throw std::invalid_argument( "unknown decomposition kind" );
}

anf recompose( const decomposition_parts& parts )
{
  check_var( parts.part0, parts.pivot );
  auto const bit = std::uint32_t{ 1 } << ( parts.pivot - 1u );
  if ( ( parts.part0.support() | parts.part1.support() ) & bit )
  {
    throw std::invalid_argument( "decomposition part depends on its pivot" );
  }
  switch ( parts.kind )
  {
  case decomposition_kind::shannon:
    return parts.part0 ^ multiply_by_var( parts.part0 ^ parts.part1, bit );
  case decomposition_kind::positive_davio:
    return parts.part0 ^ multiply_by_var( parts.part1, bit );
  case decomposition_kind::negative_davio:
    return parts.part0 ^ parts.part1 ^ multiply_by_var( parts.part1, bit );
  }
  throw std::invalid_argument( "unknown decomposition kind" );
}

division_result divide_by_variable( const anf& f, unsigned var )
{
  return { cofactor( f, var, 2u ), cofactor( f, var, 0u ) };
}

unsigned degree( const anf& f )
{
  unsigned d = 0u;
  for ( auto m : f.monomials() )
  {
    d = std::max( d, static_cast<unsigned>( std::popcount( m ) ) );
  }
  return d;
}

/* text */

std::string to_string( const anf& expr )
{
  if ( expr.empty() )
  {
    return "0";
  }
  auto masks = expr.monomials();
  std::sort( masks.begin(), masks.end(), print_before );

  std::string out;
  for ( auto m : masks )
  {
    if ( !out.empty() )
    {
      out += " + ";
    }
    if ( m == 0u )
    {
      out += '1';
      continue;
    }
    bool first = true;
    for ( auto i = 0u; i < expr.num_vars(); ++i )
    {
      if ( ( m >> i ) & 1u )
      {
        if ( !first )
        {
          out += '*';
        }
        out += 'x';
        out += std::to_string( i + 1u );
        first = false;
      }
    }
  }
  return out;
}

anf parse_anf( std::string_view text, unsigned num_vars )
{
  anf result( num_vars );
  std::size_t pos = 0u;

  auto skip_ws = [&]() {
    while ( pos < text.size() && std::isspace( static_cast<unsigned char>( text[pos] ) ) )
    {
      ++pos;
    }
  };
  auto fail = [&]( const std::string& msg ) -> parse_error {
    return parse_error( msg + " at column " + std::to_string( pos + 1u ) );
  };

  skip_ws();
  if ( pos == text.size() )
  {
    return result;
  }

  while ( true )
  {
    std::uint32_t mask = 0u;
    bool zero_term = false;
    while ( true )
    {
      skip_ws();
      if ( pos >= text.size() )
      {
        throw fail( "expected factor" );
      }
      if ( text[pos] == 'x' || text[pos] == 'X' )
      {
        ++pos;
        unsigned idx = 0u;
        auto const [ptr, ec] = std::from_chars( text.data() + pos, text.data() + text.size(), idx );
        if ( ec != std::errc{} )
        {
          throw fail( "expected variable index" );
        }
        pos = static_cast<std::size_t>( ptr - text.data() );
        if ( idx < 1u || idx > num_vars )
        {
          throw fail( "variable x" + std::to_string( idx ) + " outside 1.." + std::to_string( num_vars ) );
        }
        mask |= std::uint32_t{ 1 } << ( idx - 1u );
      }
      else if ( text[pos] == '1' )
      {
        ++pos;
      }
      else if ( text[pos] == '0' )
      {
        ++pos;
        zero_term = true;
      }
      else
      {
        throw fail( std::string( "unexpected character '" ) + text[pos] + "'" );
      }
      skip_ws();
      if ( pos < text.size() && text[pos] == '*' )
      {
        ++pos;
        continue;
      }
      break;
    }
    if ( !zero_term )
    {
      result.toggle( mask );
    }
    skip_ws();
    if ( pos == text.size() )
    {
      break;
    }
    if ( text[pos] != '+' )
    {
      throw fail( std::string( "expected '+', got '" ) + text[pos] + "'" );
    }
    ++pos;
  }
  return result;
}

std::string to_hex( const truth_table& tt )
{
  auto const digits = std::max<std::uint64_t>( 1u, tt.num_bits() / 4u );
  std::string out;
  out.reserve( digits );
  for ( auto d = digits; d-- > 0u; )
  {
    unsigned nibble = 0u;
    for ( auto b = 0u; b < 4u; ++b )
    {
      auto const idx = d * 4u + b;
      if ( idx < tt.num_bits() && tt.get_bit( idx ) )
      {
        nibble |= 1u << b;
      }
    }
    if ( nibble || !out.empty() || d == 0u )
    {
      out += "0123456789abcdef"[nibble];
    }
  }
  return out;
}

truth_table parse_hex( std::string_view text, unsigned num_vars )
{
  truth_table tt( num_vars );
  if ( text.starts_with( "0x" ) || text.starts_with( "0X" ) )
  {
    text.remove_prefix( 2u );
  }
  if ( text.empty() )
  {
    throw parse_error( "empty hex string" );
  }
  std::uint64_t bit = 0u;
  for ( auto it = text.rbegin(); it != text.rend(); ++it, bit += 4u )
  {
    auto const c = static_cast<unsigned char>( std::tolower( static_cast<unsigned char>( *it ) ) );
    unsigned nibble;
    if ( c >= '0' && c <= '9' )
      nibble = c - '0';
    else if ( c >= 'a' && c <= 'f' )
      nibble = c - 'a' + 10u;
    else
      throw parse_error( std::string( "invalid hex digit '" ) + static_cast<char>( *it ) + "'" );

    for ( auto b = 0u; b < 4u; ++b )
    {
      if ( ( nibble >> b ) & 1u )
      {
        if ( bit + b >= tt.num_bits() )
        {
          throw parse_error( "hex value has bits beyond 2^" + std::to_string( num_vars ) );
        }
        tt.set_bit( bit + b, true );
      }
    }
  }
  return tt;
}

std::string_view to_string( decomposition_kind kind )
{
  switch ( kind )
  {
  case decomposition_kind::shannon:
    return "shannon";
  case decomposition_kind::positive_davio:
    return "positive-davio";
  case decomposition_kind::negative_davio:
    return "negative-davio";
  }
  return "?";
}

} // namespace revsynth
