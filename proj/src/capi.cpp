#include <revsynth/bounds.hpp>
#include <revsynth/errors.hpp>
#include <revsynth/io.hpp>
#include <revsynth/random.hpp>
#include <revsynth/revsynth.h>
#include <revsynth/synth_baselines.hpp>
#include <revsynth/synth_decomp.hpp>

#include <cstdlib>
#include <cstring>
#include <string>

struct rsyn_function
{
  revsynth::truth_table table;
  rsyn_repr source;
};

struct rsyn_permutation
{
  revsynth::permutation perm;
};

struct rsyn_circuit
{
  revsynth::circuit circ;
};

namespace
{

thread_local std::string last_error;
thread_local std::size_t last_error_line = 0u;

rsyn_status fail( rsyn_status status, const char* message, std::size_t line = 0u )
{
  last_error = message;
  last_error_line = line;
  return status;
}

template<typename Fn>
rsyn_status guarded( Fn&& fn )
{
  try
  {
    last_error.clear();
    last_error_line = 0u;
    return fn();
  }
  catch ( const revsynth::parse_error& e )
  {
    return fail( RSYN_ERR_PARSE, e.what(), e.line() );
  }
  catch ( const revsynth::invariant_error& e )
  {
    return fail( RSYN_ERR_INVARIANT, e.what() );
  }
  catch ( const std::invalid_argument& e )
  {
    return fail( RSYN_ERR_INVALID_ARGUMENT, e.what() );
  }
  catch ( const std::out_of_range& e )
  {
    return fail( RSYN_ERR_INVALID_ARGUMENT, e.what() );
  }
  catch ( const std::exception& e )
  {
    return fail( RSYN_ERR_INTERNAL, e.what() );
  }
  catch ( ... )
  {
    return fail( RSYN_ERR_INTERNAL, "unknown error" );
  }
}

rsyn_status null_arg()
{
  return fail( RSYN_ERR_INVALID_ARGUMENT, "null argument" );
}

char* copy_string( const std::string& s )
{
  auto* out = static_cast<char*>( std::malloc( s.size() + 1u ) );
  if ( out == nullptr )
  {
    throw std::bad_alloc();
  }
  std::memcpy( out, s.c_str(), s.size() + 1u );
  return out;
}

void fill( rsyn_verify_report* out, const revsynth::verify_report& r )
{
  out->correct = r.correct ? 1 : 0;
  out->ancilla_ok = r.ancilla_ok ? 1 : 0;
  out->has_mismatch = r.first_mismatch ? 1 : 0;
  out->first_mismatch = r.first_mismatch.value_or( 0u );
  out->garbage_count = r.garbage_count;
  out->gate_count = r.gate_count;
  out->line_count = r.line_count;
}

} // namespace

extern "C" {

const char* rsyn_version( void )
{
  return "1.0.0";
}

const char* rsyn_last_error( void )
{
  return last_error.c_str();
}

size_t rsyn_last_error_line( void )
{
  return last_error_line;
}

void rsyn_string_free( char* s )
{
  std::free( s );
}

/* functions */

rsyn_status rsyn_function_parse( const char* text, rsyn_function** out )
{
  if ( !text || !out )
    return null_arg();
  return guarded( [&] {
    auto spec = revsynth::read_function_spec( text );
    *out = new rsyn_function{ std::move( spec.table ),
                              spec.repr == revsynth::function_repr::anf ? RSYN_REPR_ANF : RSYN_REPR_TT };
    return RSYN_OK;
  } );
}

rsyn_status rsyn_function_from_words( unsigned num_vars, const uint64_t* words, size_t num_words, rsyn_function** out )
{
  if ( !words || !out )
    return null_arg();
  return guarded( [&] {
    *out = new rsyn_function{ revsynth::truth_table( num_vars, std::span<const std::uint64_t>( words, num_words ) ),
                              RSYN_REPR_TT };
    return RSYN_OK;
  } );
}

rsyn_status rsyn_function_random( unsigned num_vars, uint64_t seed, rsyn_function** out )
{
  if ( !out )
    return null_arg();
  return guarded( [&] {
    std::mt19937_64 rng( seed );
    *out = new rsyn_function{ revsynth::random_function( num_vars, rng ), RSYN_REPR_TT };
    return RSYN_OK;
  } );
}

void rsyn_function_free( rsyn_function* f )
{
  delete f;
}

unsigned rsyn_function_num_vars( const rsyn_function* f )
{
  return f ? f->table.num_vars() : 0u;
}

rsyn_repr rsyn_function_source_repr( const rsyn_function* f )
{
  return f ? f->source : RSYN_REPR_TT;
}

rsyn_status rsyn_function_eval( const rsyn_function* f, uint64_t assignment, int* value )
{
  if ( !f || !value )
    return null_arg();
  return guarded( [&] {
    *value = f->table.get_bit( assignment ) ? 1 : 0;
    return RSYN_OK;
  } );
}

rsyn_status rsyn_function_degree( const rsyn_function* f, unsigned* degree )
{
  if ( !f || !degree )
    return null_arg();
  return guarded( [&] {
    *degree = revsynth::degree( revsynth::anf_from_tt( f->table ) );
    return RSYN_OK;
  } );
}

rsyn_status rsyn_function_to_spec( const rsyn_function* f, rsyn_repr repr, char** out )
{
  if ( !f || !out )
    return null_arg();
  return guarded( [&] {
    *out = copy_string( revsynth::write_function_spec(
        f->table, repr == RSYN_REPR_ANF ? revsynth::function_repr::anf : revsynth::function_repr::tt ) );
    return RSYN_OK;
  } );
}

/* permutations */

rsyn_status rsyn_permutation_parse( const char* text, rsyn_permutation** out )
{
  if ( !text || !out )
    return null_arg();
  return guarded( [&] {
    *out = new rsyn_permutation{ revsynth::read_permutation_spec( text ) };
    return RSYN_OK;
  } );
}

rsyn_status rsyn_permutation_from_images( unsigned num_vars, const uint32_t* images, size_t count,
                                          rsyn_permutation** out )
{
  if ( !images || !out )
    return null_arg();
  return guarded( [&] {
    *out = new rsyn_permutation{ revsynth::permutation( num_vars, std::vector<std::uint32_t>( images, images + count ) ) };
    return RSYN_OK;
  } );
}

rsyn_status rsyn_permutation_random( unsigned num_vars, uint64_t seed, rsyn_permutation** out )
{
  if ( !out )
    return null_arg();
  return guarded( [&] {
    if ( num_vars > revsynth::max_permutation_width )
      throw std::invalid_argument( "permutation width too large" );
    std::mt19937_64 rng( seed );
    *out = new rsyn_permutation{ revsynth::random_permutation( num_vars, rng ) };
    return RSYN_OK;
  } );
}

void rsyn_permutation_free( rsyn_permutation* p )
{
  delete p;
}

unsigned rsyn_permutation_num_vars( const rsyn_permutation* p )
{
  return p ? p->perm.num_vars() : 0u;
}

rsyn_status rsyn_permutation_image( const rsyn_permutation* p, uint32_t x, uint32_t* y )
{
  if ( !p || !y )
    return null_arg();
  if ( x >= p->perm.size() )
    return fail( RSYN_ERR_INVALID_ARGUMENT, "point outside the permutation domain" );
  *y = p->perm[x];
  return RSYN_OK;
}

rsyn_status rsyn_permutation_to_spec( const rsyn_permutation* p, char** out )
{
  if ( !p || !out )
    return null_arg();
  return guarded( [&] {
    *out = copy_string( revsynth::write_permutation_spec( p->perm ) );
    return RSYN_OK;
  } );
}

/* circuits */

rsyn_status rsyn_circuit_read_real( const char* text, rsyn_circuit** out )
{
  if ( !text || !out )
    return null_arg();
  return guarded( [&] {
    *out = new rsyn_circuit{ revsynth::read_real( text ) };
    return RSYN_OK;
  } );
}

rsyn_status rsyn_circuit_write_real( const rsyn_circuit* c, char** out )
{
  if ( !c || !out )
    return null_arg();
  return guarded( [&] {
    *out = copy_string( revsynth::write_real( c->circ ) );
    return RSYN_OK;
  } );
}

void rsyn_circuit_free( rsyn_circuit* c )
{
  delete c;
}

rsyn_status rsyn_circuit_metrics( const rsyn_circuit* c, rsyn_metrics* out )
{
  if ( !c || !out )
    return null_arg();
  return guarded( [&] {
    auto const m = revsynth::metrics( c->circ );
    out->gate_count = m.gate_count;
    out->max_controls = m.max_controls;
    out->width = m.width;
    out->ancilla_count = m.ancilla_count;
    out->garbage_count = m.garbage_count;
    out->num_inputs = c->circ.num_inputs();
    return RSYN_OK;
  } );
}

rsyn_status rsyn_circuit_simulate( const rsyn_circuit* c, const uint8_t* input, uint8_t* output, size_t width )
{
  if ( !c || !input || !output )
    return null_arg();
  return guarded( [&] {
    if ( width != c->circ.width() )
      throw std::invalid_argument( "buffer width does not match circuit width" );
    std::vector<bool> state( input, input + width );
    auto const result = revsynth::simulate( c->circ, state );
    for ( std::size_t i = 0; i < width; ++i )
      output[i] = result[i] ? 1u : 0u;
    return RSYN_OK;
  } );
}

rsyn_status rsyn_circuit_primary_output( const rsyn_circuit* c, uint32_t* line )
{
  if ( !c || !line )
    return null_arg();
  auto const outputs = c->circ.primary_outputs();
  if ( outputs.size() != 1u )
  {
    return fail( RSYN_ERR_INVALID_ARGUMENT, outputs.empty() ? "circuit declares no primary output"
                                                            : "circuit declares several primary outputs" );
  }
  *line = outputs.front();
  return RSYN_OK;
}

rsyn_status rsyn_verify_function( const rsyn_circuit* c, const rsyn_function* f, uint32_t out_line,
                                  rsyn_verify_report* out )
{
  if ( !c || !f || !out )
    return null_arg();
  return guarded( [&] {
    fill( out, revsynth::verify_realizes( c->circ, f->table, out_line ) );
    return RSYN_OK;
  } );
}

rsyn_status rsyn_verify_permutation( const rsyn_circuit* c, const rsyn_permutation* p, rsyn_verify_report* out )
{
  if ( !c || !p || !out )
    return null_arg();
  return guarded( [&] {
    auto const r = revsynth::verify_permutation( c->circ, p->perm );
    auto const m = revsynth::metrics( c->circ );
    *out = rsyn_verify_report{};
    out->correct = r.correct ? 1 : 0;
    out->ancilla_ok = 1;
    out->has_mismatch = r.first_mismatch ? 1 : 0;
    out->first_mismatch = r.first_mismatch.value_or( 0u );
    out->garbage_count = m.garbage_count;
    out->gate_count = m.gate_count;
    out->line_count = m.width;
    return RSYN_OK;
  } );
}

/* synthesis */

rsyn_status rsyn_synth_decomp( const rsyn_function* f, int k, rsyn_circuit** out, rsyn_decomp_report* report )
{
  if ( !f || !out )
    return null_arg();
  return guarded( [&] {
    revsynth::decomp_params ps;
    if ( k >= 0 )
      ps.k = static_cast<unsigned>( k );
    auto result = revsynth::synthesize_decomp( f->table, ps );
    if ( report )
    {
      auto const& r = result.report;
      report->n = r.n;
      report->k = r.k;
      report->gates = r.gates;
      report->has_bound_closed = r.bound_closed ? 1 : 0;
      report->bound_closed = r.bound_closed.value_or( 0 );
      report->bound_impl = r.bound_impl;
      report->lines = r.lines;
      report->extra_lines = r.extra_lines;
      report->ancilla = r.ancilla;
      report->garbage = r.garbage;
      report->output_line = r.output_line;
      report->garbage_bound_ok = revsynth::garbage_bound_check( r ) ? 1 : 0;
    }
    *out = new rsyn_circuit{ std::move( result.circ ) };
    return RSYN_OK;
  } );
}

rsyn_status rsyn_synth_mmd( const rsyn_permutation* p, rsyn_circuit** out )
{
  if ( !p || !out )
    return null_arg();
  return guarded( [&] {
    *out = new rsyn_circuit{ revsynth::mmd_synthesize( p->perm ) };
    return RSYN_OK;
  } );
}

rsyn_status rsyn_synth_esop_young( const rsyn_permutation* p, rsyn_circuit** out, size_t* stg_count )
{
  if ( !p || !out )
    return null_arg();
  return guarded( [&] {
    auto result = revsynth::esop_young_synthesize( p->perm );
    if ( stg_count )
      *stg_count = result.stg_count;
    *out = new rsyn_circuit{ std::move( result.circ ) };
    return RSYN_OK;
  } );
}

/* bounds */

rsyn_status rsyn_bound( rsyn_bound_kind kind, unsigned n, unsigned k, int64_t* out )
{
  if ( !out )
    return null_arg();
  return guarded( [&] {
    namespace b = revsynth::bounds;
    std::optional<std::int64_t> v;
    switch ( kind )
    {
    case RSYN_BOUND_MMD_MCT: v = b::mmd_mct( n ); break;
    case RSYN_BOUND_MMD_FREDKIN: v = b::mmd_fredkin( n ); break;
    case RSYN_BOUND_BDD: v = b::bdd( n ); break;
    case RSYN_BOUND_ESOP_STG: v = b::esop_stg( n ); break;
    case RSYN_BOUND_ESOP_TOTAL: v = b::esop_total( n ); break;
    case RSYN_BOUND_RECURRENCE_CLOSED: v = b::recurrence_closed( n ); break;
    case RSYN_BOUND_RECURRENCE_ITER: v = b::recurrence_iter( n ); break;
    case RSYN_BOUND_DECOMP_SINGLE: v = b::decomp_single( n, k ); break;
    case RSYN_BOUND_DECOMP_TOTAL: v = b::decomp_total( n ); break;
    case RSYN_BOUND_DECOMP_IMPL: v = b::decomp_impl( n, k ); break;
    case RSYN_BOUND_MC_LOWER: v = b::mc_lower( n ); break;
    case RSYN_BOUND_MC_RANDOM_UPPER: v = b::mc_random_upper( n ); break;
    default: throw std::invalid_argument( "unknown bound kind" );
    }
    if ( !v )
      return fail( RSYN_ERR_UNDEFINED, "bound is not defined for this n" );
    *out = *v;
    return RSYN_OK;
  } );
}

rsyn_status rsyn_bounds_csv( unsigned n_min, unsigned n_max, char** out )
{
  if ( !out )
    return null_arg();
  return guarded( [&] {
    *out = copy_string( revsynth::bounds::to_csv( revsynth::bounds::comparison_table( n_min, n_max ) ) );
    return RSYN_OK;
  } );
}

uint64_t rsyn_trial_seed( uint64_t seed, uint64_t index )
{
  return revsynth::trial_seed( seed, index );
}

} // extern "C"
