#pragma once

#include <revsynth/boolfn.hpp>
#include <revsynth/circuit.hpp>

#include <vector>

namespace revsynth
{

/*! \brief Transformation-based synthesis, unidirectional.
 *
 * Rows are fixed in ascending order; each row's image is moved onto the row
 * value with gates that leave all smaller rows in place.  The result is
 * ancilla-free (width n) and uses at most (n-1) 2^n + 1 gates.
 */
circuit mmd_synthesize( const permutation& p );

inline constexpr unsigned max_baseline_vars = 12u;

/*! \brief x_target ^= control(other variables). */
struct single_target_gate
{
  unsigned target_var; /* 1-based */
  anf control;         /* never mentions target_var */
};

/*! \brief Applies one single-target gate to every row of a permutation's output. */
permutation apply_stg( const single_target_gate& g, unsigned num_vars );

/*! \brief Composes gates first-to-last into the permutation they realize. */
permutation compose_stgs( const std::vector<single_target_gate>& gates, unsigned num_vars );

/*! \brief Young-subgroup factorization into at most 2n - 1 single-target gates.
 *
 * Targets run x1, x2, ..., xn, ..., x2, x1; gates whose control is constant 0
 * are dropped.
 */
std::vector<single_target_gate> young_decompose( const permutation& p );

/*! \brief One MCT gate per ANF monomial of the control, on n lines. */
std::vector<mpmct_gate> stg_to_mpmct( const single_target_gate& g );

struct esop_young_result
{
  circuit circ;
  std::size_t stg_count{ 0u };
};

esop_young_result esop_young_synthesize( const permutation& p );

} // namespace revsynth
