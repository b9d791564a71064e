#include <revsynth/circuit.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace revsynth
{

namespace
{

bool intersects( const std::vector<line_index>& a, const std::vector<line_index>& b )
{
  auto i = a.begin();
  auto j = b.begin();
  while ( i != a.end() && j != b.end() )
  {
    if ( *i == *j )
      return true;
    *i < *j ? ++i : ++j;
  }
  return false;
}

std::vector<line_index> sorted_unique( std::vector<line_index> v )
{
  std::sort( v.begin(), v.end() );
  if ( std::adjacent_find( v.begin(), v.end() ) != v.end() )
  {
    throw std::invalid_argument( "duplicate control line" );
  }
  return v;
}

std::uint64_t mask_of( const std::vector<line_index>& lines )
{
  std::uint64_t m = 0u;
  for ( auto l : lines )
  {
    m |= std::uint64_t{ 1 } << l;
  }
  return m;
}

} // namespace

/* mpmct_gate */

mpmct_gate::mpmct_gate( line_index target, std::vector<line_index> pos_controls,
                        std::vector<line_index> neg_controls )
    : target_( target ),
      pos_( sorted_unique( std::move( pos_controls ) ) ),
      neg_( sorted_unique( std::move( neg_controls ) ) )
{
  if ( std::binary_search( pos_.begin(), pos_.end(), target_ ) ||
       std::binary_search( neg_.begin(), neg_.end(), target_ ) )
  {
    throw std::invalid_argument( "gate target is also a control" );
  }
  if ( intersects( pos_, neg_ ) )
  {
    throw std::invalid_argument( "line is both a positive and a negative control" );
  }
}

line_index mpmct_gate::max_line() const noexcept
{
  auto m = target_;
  if ( !pos_.empty() )
    m = std::max( m, pos_.back() );
  if ( !neg_.empty() )
    m = std::max( m, neg_.back() );
  return m;
}

/* circuit */

line_index circuit::add_input( std::string name, unsigned var )
{
  if ( var == 0u )
  {
    throw std::invalid_argument( "input variable indices are 1-based" );
  }
  circuit_line l;
  l.name = std::move( name );
  l.kind = line_kind::input;
  l.var = var;
  lines_.push_back( std::move( l ) );
  return static_cast<line_index>( lines_.size() - 1u );
}

line_index circuit::add_constant( std::string name, bool value )
{
  circuit_line l;
  l.name = std::move( name );
  l.kind = line_kind::constant;
  l.constant_value = value;
  lines_.push_back( std::move( l ) );
  return static_cast<line_index>( lines_.size() - 1u );
}

void circuit::check_line( line_index line ) const
{
  if ( line >= lines_.size() )
  {
    throw std::out_of_range( "line index " + std::to_string( line ) + " outside circuit width " +
                             std::to_string( lines_.size() ) );
  }
}

void circuit::set_primary_output( line_index line, std::string name )
{
  check_line( line );
  if ( name.empty() || name == lines_[line].name )
  {
    throw std::invalid_argument( "primary output name must be non-empty and differ from its line name" );
  }
  lines_[line].output = output_kind::primary;
  lines_[line].output_name = std::move( name );
}

void circuit::set_garbage( line_index line )
{
  check_line( line );
  lines_[line].output = output_kind::garbage;
  lines_[line].output_name.clear();
}

void circuit::clear_output( line_index line )
{
  check_line( line );
  lines_[line].output = output_kind::none;
  lines_[line].output_name.clear();
}

void circuit::add_gate( mpmct_gate gate )
{
  check_line( gate.max_line() );
  gates_.push_back( std::move( gate ) );
}

void circuit::append( const std::vector<mpmct_gate>& gates )
{
  for ( auto const& g : gates )
  {
    add_gate( g );
  }
}

unsigned circuit::num_inputs() const noexcept
{
  return static_cast<unsigned>(
      std::count_if( lines_.begin(), lines_.end(), []( auto const& l ) { return l.kind == line_kind::input; } ) );
}

std::optional<line_index> circuit::find_line( std::string_view name ) const
{
  for ( std::size_t i = 0; i < lines_.size(); ++i )
  {
    if ( lines_[i].name == name )
    {
      return static_cast<line_index>( i );
    }
  }
  return std::nullopt;
}

std::vector<line_index> circuit::primary_outputs() const
{
  std::vector<line_index> result;
  for ( std::size_t i = 0; i < lines_.size(); ++i )
  {
    if ( lines_[i].output == output_kind::primary )
    {
      result.push_back( static_cast<line_index>( i ) );
    }
  }
  return result;
}

circuit circuit::reversed() const
{
  circuit r = *this;
  std::reverse( r.gates_.begin(), r.gates_.end() );
  return r;
}

/* permutation */

permutation::permutation( unsigned num_vars, std::vector<std::uint32_t> images )
    : num_vars_( num_vars ), images_( std::move( images ) )
{
  if ( num_vars > max_permutation_width )
  {
    throw std::invalid_argument( "permutation width exceeds " + std::to_string( max_permutation_width ) );
  }
  if ( images_.size() != ( std::size_t{ 1 } << num_vars ) )
  {
    throw std::invalid_argument( "permutation needs exactly 2^n images" );
  }
  std::vector<bool> seen( images_.size(), false );
  for ( auto y : images_ )
  {
    if ( y >= images_.size() || seen[y] )
    {
      throw std::invalid_argument( "images do not form a bijection" );
    }
    seen[y] = true;
  }
}

permutation permutation::identity( unsigned num_vars )
{
  std::vector<std::uint32_t> images( std::size_t{ 1 } << num_vars );
  std::iota( images.begin(), images.end(), 0u );
  return permutation( num_vars, std::move( images ) );
}

permutation permutation::inverse() const
{
  std::vector<std::uint32_t> inv( images_.size() );
  for ( std::uint32_t x = 0; x < images_.size(); ++x )
  {
    inv[images_[x]] = x;
  }
  return permutation( num_vars_, std::move( inv ) );
}

permutation permutation::after( const permutation& first ) const
{
  if ( first.num_vars_ != num_vars_ )
  {
    throw std::invalid_argument( "permutation width mismatch" );
  }
  std::vector<std::uint32_t> out( images_.size() );
  for ( std::size_t x = 0; x < images_.size(); ++x )
  {
    out[x] = images_[first.images_[x]];
  }
  return permutation( num_vars_, std::move( out ) );
}

bool permutation::is_identity() const noexcept
{
  for ( std::size_t x = 0; x < images_.size(); ++x )
  {
    if ( images_[x] != x )
      return false;
  }
  return true;
}

/* simulation */

std::uint64_t apply_gate( std::uint64_t state, const mpmct_gate& gate )
{
  if ( gate.max_line() >= 64u )
  {
    throw std::out_of_range( "packed state holds at most 64 lines" );
  }
  auto const pos = mask_of( gate.pos_controls() );
  auto const neg = mask_of( gate.neg_controls() );
  if ( ( state & pos ) == pos && ( state & neg ) == 0u )
  {
    state ^= std::uint64_t{ 1 } << gate.target();
  }
  return state;
}

void apply_gate( std::vector<bool>& state, const mpmct_gate& gate )
{
  if ( gate.max_line() >= state.size() )
  {
    throw std::out_of_range( "gate references a line outside the state" );
  }
  for ( auto l : gate.pos_controls() )
  {
    if ( !state[l] )
      return;
  }
  for ( auto l : gate.neg_controls() )
  {
    if ( state[l] )
      return;
  }
  state[gate.target()] = !state[gate.target()];
}

std::vector<bool> simulate( const circuit& c, const std::vector<bool>& input )
{
  if ( input.size() != c.width() )
  {
    throw std::invalid_argument( "input width does not match circuit width" );
  }
  for ( std::size_t i = 0; i < c.width(); ++i )
  {
    auto const& l = c.lines()[i];
    if ( l.kind == line_kind::constant && input[i] != l.constant_value )
    {
      throw std::invalid_argument( "input sets constant line '" + l.name + "' to " + ( input[i] ? "1" : "0" ) );
    }
  }
  auto state = input;
  for ( auto const& g : c.gates() )
  {
    apply_gate( state, g );
  }
  return state;
}

std::uint64_t simulate_packed( const circuit& c, std::uint64_t input )
{
  if ( c.width() > 64u )
  {
    throw std::invalid_argument( "packed simulation supports at most 64 lines" );
  }
  for ( auto const& g : c.gates() )
  {
    input = apply_gate( input, g );
  }
  return input;
}

permutation permutation_of( const circuit& c )
{
  if ( c.width() > max_permutation_width )
  {
    throw std::invalid_argument( "circuit too wide to enumerate (" + std::to_string( c.width() ) + " > " +
                                 std::to_string( max_permutation_width ) + " lines)" );
  }
  auto const w = static_cast<unsigned>( c.width() );
  std::vector<std::uint32_t> images( std::size_t{ 1 } << w );
  for ( std::uint32_t a = 0; a < images.size(); ++a )
  {
    images[a] = static_cast<std::uint32_t>( simulate_packed( c, a ) );
  }
  return permutation( w, std::move( images ) );
}

std::vector<truth_table> line_functions( const circuit& c )
{
  auto const n = c.num_inputs();
  if ( n > max_table_vars )
  {
    throw std::invalid_argument( "too many input lines for exhaustive simulation" );
  }
  std::vector<bool> seen( n + 1u, false );
  for ( auto const& l : c.lines() )
  {
    if ( l.kind == line_kind::input )
    {
      if ( l.var < 1u || l.var > n || seen[l.var] )
      {
        throw std::invalid_argument( "input lines must cover variables 1.." + std::to_string( n ) + " exactly once" );
      }
      seen[l.var] = true;
    }
  }

  truth_table const zero( n );
  auto const ones = ~zero;
  auto const words = zero.words().size();

  /* flat storage, one row of words per line */
  std::vector<std::uint64_t> state( c.width() * words );
  for ( std::size_t i = 0; i < c.width(); ++i )
  {
    auto const& l = c.lines()[i];
    auto const& src = l.kind == line_kind::input ? truth_table::projection( n, l.var )
                                                 : ( l.constant_value ? ones : zero );
    std::copy( src.words().begin(), src.words().end(), state.begin() + i * words );
  }

  std::vector<std::uint64_t> cond( words );
  for ( auto const& g : c.gates() )
  {
    std::copy( ones.words().begin(), ones.words().end(), cond.begin() );
    for ( auto l : g.pos_controls() )
    {
      auto const* row = &state[l * words];
      for ( std::size_t w = 0; w < words; ++w )
        cond[w] &= row[w];
    }
    for ( auto l : g.neg_controls() )
    {
      auto const* row = &state[l * words];
      for ( std::size_t w = 0; w < words; ++w )
        cond[w] &= ~row[w];
    }
    auto* target = &state[g.target() * words];
    for ( std::size_t w = 0; w < words; ++w )
      target[w] ^= cond[w];
  }

  std::vector<truth_table> result;
  result.reserve( c.width() );
  for ( std::size_t i = 0; i < c.width(); ++i )
  {
    result.emplace_back( n, std::span<const std::uint64_t>( state.data() + i * words, words ) );
  }
  return result;
}

verify_report verify_realizes( const circuit& c, const truth_table& f, line_index out_line )
{
  if ( c.num_inputs() != f.num_vars() )
  {
    throw std::invalid_argument( "circuit has " + std::to_string( c.num_inputs() ) + " input lines, function has " +
                                 std::to_string( f.num_vars() ) + " variables" );
  }
  if ( out_line >= c.width() || c.line( out_line ).output != output_kind::primary )
  {
    throw std::invalid_argument( "output line is not a primary output" );
  }

  auto const values = line_functions( c );

  verify_report report;
  report.gate_count = c.num_gates();
  report.line_count = c.width();

  auto const diff = values[out_line] ^ f;
  report.correct = diff.is_const0();
  if ( !report.correct )
  {
    for ( std::uint64_t a = 0; a < diff.num_bits(); ++a )
    {
      if ( diff.get_bit( a ) )
      {
        report.first_mismatch = a;
        break;
      }
    }
  }

  truth_table const zero( f.num_vars() );
  report.ancilla_ok = true;
  for ( std::size_t i = 0; i < c.width(); ++i )
  {
    auto const& l = c.lines()[i];
    if ( l.output == output_kind::garbage )
    {
      ++report.garbage_count;
    }
    if ( l.kind == line_kind::constant && l.output == output_kind::none )
    {
      auto const expected = l.constant_value ? ~zero : zero;
      if ( values[i] != expected && report.ancilla_ok )
      {
        report.ancilla_ok = false;
        report.dirty_ancilla = static_cast<line_index>( i );
      }
    }
  }
  return report;
}

permutation_report verify_permutation( const circuit& c, const permutation& p )
{
  if ( c.width() != p.num_vars() )
  {
    throw std::invalid_argument( "circuit width " + std::to_string( c.width() ) + " does not match permutation width " +
                                 std::to_string( p.num_vars() ) );
  }
  auto const actual = permutation_of( c );
  permutation_report report;
  report.correct = true;
  for ( std::uint32_t a = 0; a < p.size(); ++a )
  {
    if ( actual[a] != p[a] )
    {
      report.correct = false;
      report.first_mismatch = a;
      break;
    }
  }
  return report;
}

circuit_metrics metrics( const circuit& c )
{
  circuit_metrics m;
  m.gate_count = c.num_gates();
  m.width = c.width();
  for ( auto const& g : c.gates() )
  {
    m.max_controls = std::max( m.max_controls, g.num_controls() );
  }

  std::vector<truth_table> values;
  if ( c.num_inputs() <= max_table_vars )
  {
    values = line_functions( c );
  }
  for ( std::size_t i = 0; i < c.width(); ++i )
  {
    auto const& l = c.lines()[i];
    if ( l.output == output_kind::garbage )
    {
      ++m.garbage_count;
    }
    if ( l.kind != line_kind::constant )
    {
      continue;
    }
    if ( values.empty() )
    {
      /* too many inputs to simulate; trust the declared role */
      m.ancilla_count += l.output == output_kind::none ? 1u : 0u;
      continue;
    }
    auto const& v = values[i];
    if ( l.constant_value ? ( ~v ).is_const0() : v.is_const0() )
    {
      ++m.ancilla_count;
    }
  }
  return m;
}

} // namespace revsynth
