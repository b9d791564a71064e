#include <revsynth/bounds.hpp>
#include <revsynth/errors.hpp>
#include <revsynth/synth_decomp.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace revsynth
{

namespace
{

bool bank_order( std::uint32_t a, std::uint32_t b )
{
  auto const da = std::popcount( a ), db = std::popcount( b );
  if ( da != db )
    return da < db;
  auto const diff = a ^ b;
  return diff != 0u && ( a & ( diff & ( ~diff + 1u ) ) ) != 0u;
}

std::string product_name( std::uint32_t mask )
{
  std::string name = "m_";
  for ( auto i = 0u; mask >> i; ++i )
  {
    if ( ( mask >> i ) & 1u )
      name += "x" + std::to_string( i + 1u );
  }
  return name;
}

std::vector<line_index> controls_of( std::uint32_t mask, const std::vector<line_index>& var_line )
{
  std::vector<line_index> controls;
  for ( auto i = 0u; mask >> i; ++i )
  {
    if ( ( mask >> i ) & 1u )
      controls.push_back( var_line.at( i ) );
  }
  return controls;
}

/* line holding the monomial `mask` once the bank has run */
line_index source_line( std::uint32_t mask, const minterm_bank& bank )
{
  if ( std::popcount( mask ) == 1 )
  {
    return bank.var_line.at( static_cast<unsigned>( std::countr_zero( mask ) ) );
  }
  auto const it = bank.line_of.find( mask );
  if ( it == bank.line_of.end() )
  {
    throw std::invalid_argument( "bank has no line for " + product_name( mask ) );
  }
  return it->second;
}

} // namespace

/* plan and tree */

decomp_plan decomp_plan::make( unsigned num_vars, std::optional<unsigned> k )
{
  if ( num_vars < 1u || num_vars > max_table_vars )
  {
    throw std::invalid_argument( "variable count must be in 1.." + std::to_string( max_table_vars ) );
  }
  decomp_plan plan;
  plan.num_vars = num_vars;
  plan.k = k.value_or( num_vars / 2u );
  if ( plan.k >= num_vars )
  {
    throw std::invalid_argument( "decomposition depth k=" + std::to_string( plan.k ) + " must be below n=" +
                                 std::to_string( num_vars ) );
  }
  for ( auto i = 1u; i <= num_vars; ++i )
  {
    ( i <= plan.k ? plan.split_vars : plan.leaf_vars ).push_back( i );
  }
  return plan;
}

std::uint32_t decomp_plan::leaf_mask() const noexcept
{
  std::uint32_t mask = 0u;
  for ( auto v : leaf_vars )
    mask |= std::uint32_t{ 1 } << ( v - 1u );
  return mask;
}

decomposition_tree build_decomposition_tree( const anf& f, const decomp_plan& plan )
{
  if ( f.num_vars() != plan.num_vars )
  {
    throw std::invalid_argument( "plan and function disagree on the variable count" );
  }
  std::vector<anf> level{ f };
  for ( auto j = 0u; j < plan.k; ++j )
  {
    auto const var = plan.split_vars[j];
    std::vector<anf> next( level.size() * 2u, anf( f.num_vars() ) );
    for ( std::size_t p = 0; p < level.size(); ++p )
    {
      auto [quotient, remainder] = divide_by_variable( level[p], var );
      next[p] = std::move( remainder );
      next[p | ( std::size_t{ 1 } << j )] = std::move( quotient );
    }
    level = std::move( next );
  }
  return { plan, std::move( level ) };
}

anf decomposition_tree::recombine() const
{
  auto nodes = leaves;
  for ( auto j = plan.k; j-- > 0u; )
  {
    auto const half = std::size_t{ 1 } << j;
    for ( std::size_t p = 0; p < half; ++p )
    {
      nodes[p] = recompose( { decomposition_kind::positive_davio, plan.split_vars[j], nodes[p], nodes[p | half] } );
    }
  }
  return nodes.front();
}

std::string decomposition_tree::path_name( std::uint32_t leaf ) const
{
  std::string s;
  for ( auto j = 0u; j < plan.k; ++j )
  {
    s += ( ( leaf >> j ) & 1u ) ? '1' : '0';
  }
  return s;
}

/* minterm bank */

std::vector<std::uint32_t> all_products( std::uint32_t var_mask )
{
  std::vector<std::uint32_t> out;
  for ( std::uint32_t sub = var_mask; sub; sub = ( sub - 1u ) & var_mask )
  {
    if ( std::popcount( sub ) >= 2 )
      out.push_back( sub );
  }
  std::sort( out.begin(), out.end(), bank_order );
  return out;
}

minterm_bank add_minterm_bank( circuit& c, const std::vector<line_index>& var_line, std::uint32_t var_mask,
                               const std::vector<std::uint32_t>& masks, bool with_all_xor )
{
  minterm_bank bank;
  bank.var_mask = var_mask;
  bank.var_line = var_line;

  auto sorted = masks;
  std::sort( sorted.begin(), sorted.end(), bank_order );
  sorted.erase( std::unique( sorted.begin(), sorted.end() ), sorted.end() );
  if ( with_all_xor && sorted != all_products( var_mask ) )
  {
    throw std::invalid_argument( "all-XOR line needs the complete bank" );
  }

  for ( auto mask : sorted )
  {
    if ( std::popcount( mask ) < 2 || ( mask & ~var_mask ) )
    {
      throw std::invalid_argument( "bank product " + product_name( mask ) + " is not a product over the bank variables" );
    }
    auto const line = c.add_constant( product_name( mask ), false );
    bank.line_of.emplace( mask, line );
    bank.gates.emplace_back( line, controls_of( mask, var_line ) );
  }

  if ( with_all_xor )
  {
    auto const line = c.add_constant( "m_all", false );
    bank.all_xor_line = line;
    for ( auto i = 0u; var_mask >> i; ++i )
    {
      if ( ( var_mask >> i ) & 1u )
        bank.gates.push_back( mpmct_gate::cnot( var_line.at( i ), line ) );
    }
    for ( auto mask : sorted )
    {
      bank.gates.push_back( mpmct_gate::cnot( bank.line_of.at( mask ), line ) );
    }
  }
  return bank;
}

minterm_bank_circuit build_minterm_bank( unsigned m, bool with_all_xor )
{
  if ( m < 1u || m > max_table_vars )
  {
    throw std::invalid_argument( "bank size must be in 1.." + std::to_string( max_table_vars ) );
  }
  minterm_bank_circuit result;
  std::vector<line_index> var_line;
  for ( auto i = 1u; i <= m; ++i )
  {
    var_line.push_back( result.circ.add_input( "x" + std::to_string( i ), i ) );
  }
  auto const var_mask = static_cast<std::uint32_t>( ( std::uint64_t{ 1 } << m ) - 1u );
  result.bank = add_minterm_bank( result.circ, var_line, var_mask, all_products( var_mask ), with_all_xor );
  result.circ.append( result.bank.gates );
  return result;
}

/* leaf assembly */

leaf_cost assembly_cost( const anf& leaf, std::uint32_t var_mask )
{
  auto const constant = leaf.has_constant() ? 1u : 0u;
  auto const nonconstant = leaf.size() - constant;
  auto const products = ( std::size_t{ 1 } << std::popcount( var_mask ) ) - 1u;
  return { leaf.size(), 1u + ( products - nonconstant ) + constant };
}

std::vector<mpmct_gate> assemble_leaf( const anf& leaf, const minterm_bank& bank, line_index target )
{
  if ( leaf.support() & ~bank.var_mask )
  {
    throw std::invalid_argument( "leaf depends on a variable outside the bank" );
  }

  std::vector<mpmct_gate> gates;
  auto const cost = assembly_cost( leaf, bank.var_mask );
  if ( bank.all_xor_line && cost.complement < cost.direct )
  {
    gates.push_back( mpmct_gate::cnot( *bank.all_xor_line, target ) );
    for ( std::uint32_t sub = bank.var_mask; sub; sub = ( sub - 1u ) & bank.var_mask )
    {
      if ( !leaf.contains( sub ) )
        gates.push_back( mpmct_gate::cnot( source_line( sub, bank ), target ) );
    }
  }
  else
  {
    for ( auto mask : leaf.monomials() )
    {
      if ( mask != 0u )
        gates.push_back( mpmct_gate::cnot( source_line( mask, bank ), target ) );
    }
  }
  if ( leaf.has_constant() )
  {
    gates.push_back( mpmct_gate::not_gate( target ) );
  }
  return gates;
}

std::vector<mpmct_gate> combine( const std::vector<line_index>& targets, const decomp_plan& plan,
                                 const std::vector<line_index>& var_line, const std::vector<bool>& nonzero )
{
  auto const leaves = std::size_t{ 1 } << plan.k;
  if ( targets.size() != leaves || nonzero.size() != leaves )
  {
    throw std::invalid_argument( "combine needs one target per leaf" );
  }
  auto live = nonzero;
  std::vector<mpmct_gate> gates;
  for ( auto j = plan.k; j-- > 0u; )
  {
    auto const half = std::size_t{ 1 } << j;
    auto const control = var_line.at( plan.split_vars[j] - 1u );
    for ( std::size_t p = 0; p < half; ++p )
    {
      if ( live[p | half] )
      {
        gates.push_back( mpmct_gate::toffoli( control, targets[p | half], targets[p] ) );
        live[p] = true;
      }
    }
  }
  return gates;
}

/* pipeline */

const char* decomp_report::csv_header()
{
  return "n,k,gates_measured,bound_paper,bound_impl,lines,ancilla,garbage";
}

std::string decomp_report::csv_row() const
{
  return std::to_string( n ) + ',' + std::to_string( k ) + ',' + std::to_string( gates ) + ',' +
         ( bound_closed ? std::to_string( *bound_closed ) : std::string{} ) + ',' + std::to_string( bound_impl ) + ',' +
         std::to_string( lines ) + ',' + std::to_string( ancilla ) + ',' + std::to_string( garbage );
}

decomp_result synthesize_decomp( const anf& f, const decomp_params& ps )
{
  auto const n = f.num_vars();
  if ( n < 2u )
  {
    throw std::invalid_argument( "decomposition synthesis needs at least 2 variables" );
  }
  auto const plan = decomp_plan::make( n, ps.k );
  auto const tree = build_decomposition_tree( f, plan );
  auto const var_mask = plan.leaf_mask();
  auto const m = plan.num_leaf_vars();

  /* Choose between a bank of only the products the leaves use, and the full
   * bank plus the all-XOR line that lets each leaf take its complement form. */
  std::set<std::uint32_t> used;
  std::size_t cost_direct = 0u, cost_complement = 0u;
  for ( auto const& leaf : tree.leaves )
  {
    for ( auto mask : leaf.monomials() )
    {
      if ( std::popcount( mask ) >= 2 )
        used.insert( mask );
    }
    auto const cost = assembly_cost( leaf, var_mask );
    cost_direct += cost.direct;
    cost_complement += std::min( cost.direct, cost.complement );
  }
  auto const full_bank = ( std::size_t{ 1 } << m ) - m - 1u;
  cost_direct += used.size();
  cost_complement += full_bank + ( ( std::size_t{ 1 } << m ) - 1u );
  bool const with_all_xor = cost_complement < cost_direct;

  circuit c;
  std::vector<line_index> var_line;
  for ( auto i = 1u; i <= n; ++i )
  {
    var_line.push_back( c.add_input( "x" + std::to_string( i ), i ) );
  }
  auto const bank = add_minterm_bank( c, var_line, var_mask,
                                      with_all_xor ? all_products( var_mask )
                                                   : std::vector<std::uint32_t>( used.begin(), used.end() ),
                                      with_all_xor );

  std::vector<line_index> targets;
  std::vector<bool> nonzero;
  for ( std::uint32_t p = 0; p < tree.leaves.size(); ++p )
  {
    targets.push_back( c.add_constant( plan.k == 0u ? "t" : "t_" + tree.path_name( p ), false ) );
    nonzero.push_back( !tree.leaves[p].empty() );
  }

  c.append( bank.gates );
  for ( std::size_t p = 0; p < tree.leaves.size(); ++p )
  {
    c.append( assemble_leaf( tree.leaves[p], bank, targets[p] ) );
  }
  c.append( combine( targets, plan, var_line, nonzero ) );

  for ( auto const& [mask, line] : bank.line_of )
  {
    c.set_garbage( line );
  }
  if ( bank.all_xor_line )
  {
    c.set_garbage( *bank.all_xor_line );
  }
  std::vector<bool> written( c.width(), false );
  for ( auto const& g : c.gates() )
  {
    written[g.target()] = true;
  }
  for ( std::size_t p = 1; p < targets.size(); ++p )
  {
    if ( written[targets[p]] )
      c.set_garbage( targets[p] );
  }
  c.set_primary_output( targets[0], "f" );

  decomp_report report;
  report.n = n;
  report.k = plan.k;
  report.gates = c.num_gates();
  if ( n % 2u == 0u && n >= 4u && plan.k == n / 2u )
  {
    report.bound_closed = bounds::decomp_single( n, plan.k );
  }
  report.bound_impl = bounds::decomp_impl( n, plan.k );
  report.lines = c.width();
  report.extra_lines = c.width() - n;
  report.bank_gates = bank.gates.size();
  report.all_xor_used = with_all_xor;
  report.output_line = targets[0];
  for ( auto const& l : c.lines() )
  {
    if ( l.output == output_kind::garbage )
      ++report.garbage;
    else if ( l.kind == line_kind::constant && l.output == output_kind::none )
      ++report.ancilla;
  }

  if ( ps.verify )
  {
    auto const v = verify_realizes( c, tt_from_anf( f ), targets[0] );
    if ( !v.correct )
      throw invariant_error( "decomposition circuit does not realize the function" );
    if ( !v.ancilla_ok )
      throw invariant_error( "decomposition circuit leaves an ancilla dirty" );
    if ( static_cast<std::int64_t>( report.gates ) > report.bound_impl )
      throw invariant_error( "decomposition circuit exceeds its gate envelope" );
  }
  return { std::move( c ), report };
}

decomp_result synthesize_decomp( const truth_table& f, const decomp_params& ps )
{
  return synthesize_decomp( anf_from_tt( f ), ps );
}

bool garbage_bound_check( const decomp_report& report )
{
  auto const half_up = ( report.n + 1u ) / 2u;
  return report.extra_lines <= ( std::size_t{ 1 } << ( half_up + 1u ) ) + report.n;
}

} // namespace revsynth
