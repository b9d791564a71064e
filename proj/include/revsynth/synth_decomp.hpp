#pragma once

#include <revsynth/boolfn.hpp>
#include <revsynth/circuit.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace revsynth
{

/*! \brief Split on x1..xk by positive Davio, then build the 2^k leaves over x(k+1)..xn. */
struct decomp_plan
{
  unsigned num_vars{ 0u };
  unsigned k{ 0u };
  std::vector<unsigned> split_vars; /* 1-based, in split order */
  std::vector<unsigned> leaf_vars;  /* 1-based, ascending */

  /*! \brief Default depth is floor(n/2); requires k < n. */
  static decomp_plan make( unsigned num_vars, std::optional<unsigned> k = std::nullopt );

  unsigned num_leaf_vars() const noexcept { return num_vars - k; }
  std::uint32_t leaf_mask() const noexcept;
};

/*! \brief Leaves of the depth-k division tree.
 *
 * Leaf index bit (j-1) is the branch taken at split variable j: 1 for the
 * quotient, 0 for the remainder.  Folding leaves with f = x * f1 ^ f0 from the
 * deepest split upward gives back the root.
 */
struct decomposition_tree
{
  decomp_plan plan;
  std::vector<anf> leaves;

  anf recombine() const;

  /*! \brief Branch string i1 i2 ... ik for a leaf index. */
  std::string path_name( std::uint32_t leaf ) const;
};

decomposition_tree build_decomposition_tree( const anf& f, const decomp_plan& plan );

/*! \brief Bank of AND lines, one MCT gate per product of two or more variables. */
struct minterm_bank
{
  std::vector<mpmct_gate> gates;
  std::map<std::uint32_t, line_index> line_of; /* monomial mask -> bank line */
  std::optional<line_index> all_xor_line;      /* XOR of every non-constant monomial */
  std::uint32_t var_mask{ 0u };                /* variables the bank is built over */
  std::vector<line_index> var_line;            /* input line per variable, index = var - 1 */
};

/*! \brief Allocates 0-initialized lines in `c` and returns the gates computing them.
 *
 * `masks` lists the products to materialize (popcount >= 2, subsets of
 * var_mask); with_all_xor requires the full set and adds 2^m - 1 CNOTs onto an
 * extra line.  Gates are not appended to `c`.
 */
minterm_bank add_minterm_bank( circuit& c, const std::vector<line_index>& var_line, std::uint32_t var_mask,
                               const std::vector<std::uint32_t>& masks, bool with_all_xor );

/*! \brief Stand-alone full bank over x1..xm, gates already appended. */
struct minterm_bank_circuit
{
  circuit circ;
  minterm_bank bank;
};

minterm_bank_circuit build_minterm_bank( unsigned m, bool with_all_xor );

/*! \brief Every product of two or more variables of var_mask, in bank order. */
std::vector<std::uint32_t> all_products( std::uint32_t var_mask );

struct leaf_cost
{
  std::size_t direct;
  std::size_t complement; /* through the all-XOR line */
};

leaf_cost assembly_cost( const anf& leaf, std::uint32_t var_mask );

/*! \brief Gates XOR-ing `leaf` onto a 0-initialized target.
 *
 * Uses the complement form when the bank has an all-XOR line and it is
 * strictly cheaper.  Throws std::invalid_argument if the leaf mentions a
 * variable outside the bank or needs a product the bank lacks.
 */
std::vector<mpmct_gate> assemble_leaf( const anf& leaf, const minterm_bank& bank, line_index target );

/*! \brief Toffoli fold of the leaf targets onto targets[0].
 *
 * One Toffoli per tree node whose quotient subtree is non-zero; at most
 * 2^k - 1.  `nonzero` flags each leaf.
 */
std::vector<mpmct_gate> combine( const std::vector<line_index>& targets, const decomp_plan& plan,
                                 const std::vector<line_index>& var_line, const std::vector<bool>& nonzero );

struct decomp_report
{
  unsigned n{ 0u };
  unsigned k{ 0u };
  std::size_t gates{ 0u };
  std::optional<std::int64_t> bound_closed; /* even n >= 4 with k = n/2 */
  std::int64_t bound_impl{ 0 };
  std::size_t lines{ 0u };
  std::size_t extra_lines{ 0u };
  std::size_t ancilla{ 0u };
  std::size_t garbage{ 0u };
  std::size_t bank_gates{ 0u };
  bool all_xor_used{ false };
  line_index output_line{ 0u };

  /*! \brief n,k,gates_measured,bound_paper,bound_impl,lines,ancilla,garbage */
  std::string csv_row() const;
  static const char* csv_header();
};

struct decomp_params
{
  std::optional<unsigned> k;
  /* simulate the result and throw invariant_error on any failed post-condition */
  bool verify{ true };
};

struct decomp_result
{
  circuit circ;
  decomp_report report;
};

decomp_result synthesize_decomp( const anf& f, const decomp_params& ps = {} );
decomp_result synthesize_decomp( const truth_table& f, const decomp_params& ps = {} );

/*! \brief Extra lines stay within 2^(ceil(n/2)+1) + n. */
bool garbage_bound_check( const decomp_report& report );

} // namespace revsynth
