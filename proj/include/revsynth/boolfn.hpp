#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revsynth
{

/*! \brief Largest variable count supported by table-based representations. */
inline constexpr unsigned max_table_vars = 16u;

/*! \brief Single-output Boolean function stored as a 2^n-bit vector.
 *
 * Variable x_i corresponds to bit (i-1) of the assignment index, so x1 is the
 * least significant bit.  Bit `a` of the table holds f(a).
 */
class truth_table
{
public:
  explicit truth_table( unsigned num_vars );
  truth_table( unsigned num_vars, std::span<const std::uint64_t> words );

  /*! \brief Projection function x_i over num_vars variables (1-based i). */
  static truth_table projection( unsigned num_vars, unsigned var );

  unsigned num_vars() const noexcept { return num_vars_; }
  std::uint64_t num_bits() const noexcept { return std::uint64_t{ 1 } << num_vars_; }

  bool get_bit( std::uint64_t assignment ) const;
  void set_bit( std::uint64_t assignment, bool value );
  void flip_bit( std::uint64_t assignment );

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  bool is_const0() const noexcept;
  std::uint64_t count_ones() const noexcept;

  truth_table& operator^=( const truth_table& other );
  truth_table& operator&=( const truth_table& other );
  truth_table operator~() const;

  bool operator==( const truth_table& other ) const = default;

private:
  void mask_tail() noexcept;

  unsigned num_vars_;
  std::vector<std::uint64_t> words_;
};

truth_table operator^( truth_table lhs, const truth_table& rhs );
truth_table operator&( truth_table lhs, const truth_table& rhs );

/*! \brief Algebraic normal form: XOR of positive monomials.
 *
 * A monomial is a variable mask; bit (i-1) set means x_i is a factor, mask 0
 * is the constant 1.  Masks are kept sorted and unique.  Constructing from a
 * list that repeats a mask cancels the pair, as XOR would.
 */
class anf
{
public:
  explicit anf( unsigned num_vars );
  anf( unsigned num_vars, std::initializer_list<std::uint32_t> monomials );
  anf( unsigned num_vars, std::span<const std::uint32_t> monomials );

  unsigned num_vars() const noexcept { return num_vars_; }
  const std::vector<std::uint32_t>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  bool empty() const noexcept { return monomials_.empty(); }

  bool contains( std::uint32_t mask ) const;
  bool has_constant() const { return contains( 0u ); }

  /*! \brief Mask of all variables that occur in some monomial. */
  std::uint32_t support() const noexcept;

  /*! \brief XOR a single monomial into the expression. */
  void toggle( std::uint32_t mask );

  anf& operator^=( const anf& other );

  bool operator==( const anf& other ) const = default;

private:
  unsigned num_vars_;
  std::vector<std::uint32_t> monomials_;
};

anf operator^( anf lhs, const anf& rhs );

enum class decomposition_kind
{
  shannon,
  positive_davio,
  negative_davio
};

/*! \brief Two cofactor parts produced by splitting a function on one variable.
 *
 * shannon: part0 = f|x=0, part1 = f|x=1
 * positive_davio: part0 = f|x=0, part1 = f|x=0 ^ f|x=1
 * negative_davio: part0 = f|x=1, part1 = f|x=0 ^ f|x=1
 *
 * Both parts live in the same variable space as the source with the pivot bit
 * absent from every monomial.
 */
struct decomposition_parts
{
  decomposition_kind kind;
  unsigned pivot;
  anf part0;
  anf part1;
};

/*! \brief Quotient and remainder of dividing by a variable: f = x_i * quotient ^ remainder. */
struct division_result
{
  anf quotient;
  anf remainder;
};

anf anf_from_tt( const truth_table& tt );
truth_table tt_from_anf( const anf& expr );

bool evaluate( const anf& expr, std::uint64_t assignment );

/*! \brief Cofactor on x_var; polarity 0 or 1 substitutes, polarity 2 is the Boolean derivative. */
anf cofactor( const anf& f, unsigned var, unsigned polarity );

decomposition_parts decompose( const anf& f, unsigned var, decomposition_kind kind );

/*! \brief Inverse of decompose. */
anf recompose( const decomposition_parts& parts );

division_result divide_by_variable( const anf& f, unsigned var );

unsigned degree( const anf& f );

/*! \brief Formats as `x1*x2*x3 + x1 + 1`; the zero function prints as `0`. */
std::string to_string( const anf& expr );

/*! \brief Parses the `+`/`*` syntax produced by to_string.  Throws parse_error. */
anf parse_anf( std::string_view text, unsigned num_vars );

/*! \brief Lower-case hex without leading zeros or prefix. */
std::string to_hex( const truth_table& tt );

/*! \brief Accepts an optional `0x` prefix; missing leading digits are zero. */
truth_table parse_hex( std::string_view text, unsigned num_vars );

std::string_view to_string( decomposition_kind kind );

} // namespace revsynth
