#pragma once

#include <revsynth/boolfn.hpp>
#include <revsynth/circuit.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace revsynth
{

/*! \brief Reads the RevLib `.real` subset with `t<k>` gates only.
 *
 * Negative controls are written `-name`.  Non-constant lines become inputs
 * numbered 1, 2, ... in line order.  A line whose `.outputs` entry differs from
 * its variable name is a primary output; `.garbage` marks garbage lines.
 * Throws parse_error carrying the offending line number.
 */
circuit read_real( std::string_view text );

/*! \brief Canonical writer; read_real(write_real(c)) reproduces c. */
std::string write_real( const circuit& c );

/* Function spec files:
 *
 *   vars <n>
 *   tt <hex>        or      anf <expression>
 *
 * Bit i of the table is f(i) with x1 the least significant assignment bit.
 * `#` starts a comment.
 */
enum class function_repr
{
  tt,
  anf
};

struct function_spec
{
  truth_table table;
  function_repr repr;
};

function_spec read_function_spec( std::string_view text );
std::string write_function_spec( const truth_table& f, function_repr repr );

/* Permutation spec files: `perm <n>` followed by 2^n whitespace-separated images. */
permutation read_permutation_spec( std::string_view text );
std::string write_permutation_spec( const permutation& p );

/*! \brief Either spec kind, chosen by the leading keyword. */
using any_spec = std::variant<function_spec, permutation>;
any_spec read_any_spec( std::string_view text );

std::string read_file( const std::string& path );
void write_file( const std::string& path, std::string_view contents );

} // namespace revsynth
