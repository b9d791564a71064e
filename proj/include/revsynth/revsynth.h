/* C interface to the revsynth library.
 *
 * All objects are opaque handles created by the library and released with the
 * matching *_free function.  Functions return an rsyn_status; on failure the
 * message (and line number, for parse errors) of the calling thread's last
 * error is available through rsyn_last_error / rsyn_last_error_line.
 * Strings returned through char** are allocated by the library and must be
 * released with rsyn_string_free.
 *
 * Variable x1 is the least significant bit of an assignment index throughout.
 */
#ifndef REVSYNTH_H
#define REVSYNTH_H

#include <stddef.h>
#include <stdint.h>

#if defined( _WIN32 )
#define RSYN_API __declspec( dllexport )
#else
#define RSYN_API __attribute__( ( visibility( "default" ) ) )
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rsyn_status
{
  RSYN_OK = 0,
  RSYN_ERR_INVALID_ARGUMENT = 1,
  RSYN_ERR_PARSE = 2,
  RSYN_ERR_UNDEFINED = 3, /* bound outside the domain its formula is stated for */
  RSYN_ERR_INVARIANT = 4, /* synthesis result failed its own post-condition */
  RSYN_ERR_IO = 5,
  RSYN_ERR_INTERNAL = 6
} rsyn_status;

typedef struct rsyn_function rsyn_function;
typedef struct rsyn_permutation rsyn_permutation;
typedef struct rsyn_circuit rsyn_circuit;

typedef enum rsyn_repr
{
  RSYN_REPR_TT = 0,
  RSYN_REPR_ANF = 1
} rsyn_repr;

RSYN_API const char* rsyn_version( void );
RSYN_API const char* rsyn_last_error( void );
RSYN_API size_t rsyn_last_error_line( void );
RSYN_API void rsyn_string_free( char* s );

/* ---- single-output functions ---- */

/* Parses a function spec file (`vars <n>` then `tt <hex>` or `anf <expr>`). */
RSYN_API rsyn_status rsyn_function_parse( const char* text, rsyn_function** out );
/* words: ceil(2^n / 64) little-endian 64-bit words, bit a = f(a). */
RSYN_API rsyn_status rsyn_function_from_words( unsigned num_vars, const uint64_t* words, size_t num_words,
                                               rsyn_function** out );
RSYN_API rsyn_status rsyn_function_random( unsigned num_vars, uint64_t seed, rsyn_function** out );
RSYN_API void rsyn_function_free( rsyn_function* f );
RSYN_API unsigned rsyn_function_num_vars( const rsyn_function* f );
/* Representation the function was parsed from; RSYN_REPR_TT for other constructors. */
RSYN_API rsyn_repr rsyn_function_source_repr( const rsyn_function* f );
RSYN_API rsyn_status rsyn_function_eval( const rsyn_function* f, uint64_t assignment, int* value );
RSYN_API rsyn_status rsyn_function_degree( const rsyn_function* f, unsigned* degree );
/* Spec file text in the requested representation. */
RSYN_API rsyn_status rsyn_function_to_spec( const rsyn_function* f, rsyn_repr repr, char** out );

/* ---- permutations ---- */

RSYN_API rsyn_status rsyn_permutation_parse( const char* text, rsyn_permutation** out );
RSYN_API rsyn_status rsyn_permutation_from_images( unsigned num_vars, const uint32_t* images, size_t count,
                                                   rsyn_permutation** out );
RSYN_API rsyn_status rsyn_permutation_random( unsigned num_vars, uint64_t seed, rsyn_permutation** out );
RSYN_API void rsyn_permutation_free( rsyn_permutation* p );
RSYN_API unsigned rsyn_permutation_num_vars( const rsyn_permutation* p );
RSYN_API rsyn_status rsyn_permutation_image( const rsyn_permutation* p, uint32_t x, uint32_t* y );
RSYN_API rsyn_status rsyn_permutation_to_spec( const rsyn_permutation* p, char** out );

/* ---- circuits ---- */

typedef struct rsyn_metrics
{
  size_t gate_count;
  size_t max_controls;
  size_t width;
  size_t ancilla_count;
  size_t garbage_count;
  size_t num_inputs;
} rsyn_metrics;

RSYN_API rsyn_status rsyn_circuit_read_real( const char* text, rsyn_circuit** out );
RSYN_API rsyn_status rsyn_circuit_write_real( const rsyn_circuit* c, char** out );
RSYN_API void rsyn_circuit_free( rsyn_circuit* c );
RSYN_API rsyn_status rsyn_circuit_metrics( const rsyn_circuit* c, rsyn_metrics* out );
/* One byte per line (0 or 1); constant lines must carry their declared value. */
RSYN_API rsyn_status rsyn_circuit_simulate( const rsyn_circuit* c, const uint8_t* input, uint8_t* output,
                                            size_t width );
/* Index of the only primary-output line; error if there is none or several. */
RSYN_API rsyn_status rsyn_circuit_primary_output( const rsyn_circuit* c, uint32_t* line );

typedef struct rsyn_verify_report
{
  int correct;
  int ancilla_ok;
  int has_mismatch;
  uint64_t first_mismatch;
  size_t garbage_count;
  size_t gate_count;
  size_t line_count;
} rsyn_verify_report;

RSYN_API rsyn_status rsyn_verify_function( const rsyn_circuit* c, const rsyn_function* f, uint32_t out_line,
                                           rsyn_verify_report* out );
/* correct set iff the circuit realizes p; first_mismatch holds the first differing input otherwise. */
RSYN_API rsyn_status rsyn_verify_permutation( const rsyn_circuit* c, const rsyn_permutation* p,
                                              rsyn_verify_report* out );

/* ---- synthesis ---- */

typedef struct rsyn_decomp_report
{
  unsigned n;
  unsigned k;
  size_t gates;
  int has_bound_closed;
  int64_t bound_closed;
  int64_t bound_impl;
  size_t lines;
  size_t extra_lines;
  size_t ancilla;
  size_t garbage;
  uint32_t output_line;
  int garbage_bound_ok;
} rsyn_decomp_report;

/* k < 0 selects floor(n/2). */
RSYN_API rsyn_status rsyn_synth_decomp( const rsyn_function* f, int k, rsyn_circuit** out,
                                        rsyn_decomp_report* report );
RSYN_API rsyn_status rsyn_synth_mmd( const rsyn_permutation* p, rsyn_circuit** out );
/* stg_count receives the number of single-target gates before expansion (may be NULL). */
RSYN_API rsyn_status rsyn_synth_esop_young( const rsyn_permutation* p, rsyn_circuit** out, size_t* stg_count );

/* ---- bounds ---- */

typedef enum rsyn_bound_kind
{
  RSYN_BOUND_MMD_MCT = 0,
  RSYN_BOUND_MMD_FREDKIN = 1,
  RSYN_BOUND_BDD = 2,
  RSYN_BOUND_ESOP_STG = 3,
  RSYN_BOUND_ESOP_TOTAL = 4,
  RSYN_BOUND_RECURRENCE_CLOSED = 5,
  RSYN_BOUND_RECURRENCE_ITER = 6,
  RSYN_BOUND_DECOMP_SINGLE = 7, /* uses k */
  RSYN_BOUND_DECOMP_TOTAL = 8,
  RSYN_BOUND_DECOMP_IMPL = 9, /* uses k */
  RSYN_BOUND_MC_LOWER = 10,   /* n is the degree */
  RSYN_BOUND_MC_RANDOM_UPPER = 11
} rsyn_bound_kind;

RSYN_API rsyn_status rsyn_bound( rsyn_bound_kind kind, unsigned n, unsigned k, int64_t* out );
RSYN_API rsyn_status rsyn_bounds_csv( unsigned n_min, unsigned n_max, char** out );

/* ---- misc ---- */

RSYN_API uint64_t rsyn_trial_seed( uint64_t seed, uint64_t index );

#ifdef __cplusplus
}
#endif

#endif /* REVSYNTH_H */
