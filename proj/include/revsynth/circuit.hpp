#pragma once

#include <revsynth/boolfn.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace revsynth
{

using line_index = std::uint32_t;

/*! \brief Mixed-polarity multiple-control Toffoli gate.
 *
 * The target flips iff every positive control is 1 and every negative control
 * is 0.  Control lists are sorted; the three line sets are pairwise disjoint.
 */
class mpmct_gate
{
public:
  mpmct_gate( line_index target, std::vector<line_index> pos_controls = {},
              std::vector<line_index> neg_controls = {} );

  static mpmct_gate not_gate( line_index target ) { return mpmct_gate( target ); }
  static mpmct_gate cnot( line_index control, line_index target ) { return mpmct_gate( target, { control } ); }
  static mpmct_gate toffoli( line_index c1, line_index c2, line_index target )
  {
    return mpmct_gate( target, { c1, c2 } );
  }

  line_index target() const noexcept { return target_; }
  const std::vector<line_index>& pos_controls() const noexcept { return pos_; }
  const std::vector<line_index>& neg_controls() const noexcept { return neg_; }
  std::size_t num_controls() const noexcept { return pos_.size() + neg_.size(); }

  /*! \brief Largest line index referenced. */
  line_index max_line() const noexcept;

  bool operator==( const mpmct_gate& ) const = default;

private:
  line_index target_;
  std::vector<line_index> pos_;
  std::vector<line_index> neg_;
};

enum class line_kind
{
  input,
  constant
};

enum class output_kind
{
  none,
  primary,
  garbage
};

struct circuit_line
{
  std::string name;
  line_kind kind{ line_kind::input };
  unsigned var{ 0u };          /* 1-based variable index, input lines only */
  bool constant_value{ false }; /* constant lines only */
  output_kind output{ output_kind::none };
  std::string output_name; /* primary outputs only */
};

/*! \brief Ordered MPMCT gate list over named lines with input/constant roles. */
class circuit
{
public:
  circuit() = default;

  line_index add_input( std::string name, unsigned var );
  line_index add_constant( std::string name, bool value );

  void set_primary_output( line_index line, std::string name );
  void set_garbage( line_index line );
  void clear_output( line_index line );

  void add_gate( mpmct_gate gate );
  void append( const std::vector<mpmct_gate>& gates );

  std::size_t width() const noexcept { return lines_.size(); }
  std::size_t num_gates() const noexcept { return gates_.size(); }
  unsigned num_inputs() const noexcept;

  const std::vector<circuit_line>& lines() const noexcept { return lines_; }
  const std::vector<mpmct_gate>& gates() const noexcept { return gates_; }
  const circuit_line& line( line_index i ) const { return lines_.at( i ); }

  std::optional<line_index> find_line( std::string_view name ) const;

  /*! \brief Lines tagged as primary outputs, in line order. */
  std::vector<line_index> primary_outputs() const;

  /*! \brief Same lines and roles, gates in reverse order. */
  circuit reversed() const;

private:
  void check_line( line_index line ) const;

  std::vector<circuit_line> lines_;
  std::vector<mpmct_gate> gates_;
};

/*! \brief Bijection on {0, ..., 2^n - 1}; x1 is the least significant bit. */
class permutation
{
public:
  permutation( unsigned num_vars, std::vector<std::uint32_t> images );

  static permutation identity( unsigned num_vars );

  unsigned num_vars() const noexcept { return num_vars_; }
  std::size_t size() const noexcept { return images_.size(); }
  std::uint32_t operator[]( std::size_t i ) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  permutation inverse() const;

  /*! \brief (*this) after `first`: x -> this(first(x)). */
  permutation after( const permutation& first ) const;

  bool is_identity() const noexcept;

  bool operator==( const permutation& ) const = default;

private:
  unsigned num_vars_;
  std::vector<std::uint32_t> images_;
};

inline constexpr unsigned max_permutation_width = 20u;

std::uint64_t apply_gate( std::uint64_t state, const mpmct_gate& gate );
void apply_gate( std::vector<bool>& state, const mpmct_gate& gate );

/*! \brief Runs all gates on one input.  Constant lines must carry their declared value. */
std::vector<bool> simulate( const circuit& c, const std::vector<bool>& input );

/*! \brief Word-packed simulation ignoring line roles; width must be at most 64. */
std::uint64_t simulate_packed( const circuit& c, std::uint64_t input );

/*! \brief Permutation realized on all 2^width states, treating every line as free. */
permutation permutation_of( const circuit& c );

/*! \brief Final value of every line as a function of the input variables.
 *
 * All 2^n assignments are simulated at once, one truth table per line.  Input
 * lines must carry variable indices 1..n, each exactly once.
 */
std::vector<truth_table> line_functions( const circuit& c );

struct verify_report
{
  bool correct{ false };
  bool ancilla_ok{ false };
  std::optional<std::uint64_t> first_mismatch; /* assignment where out_line differs */
  std::optional<line_index> dirty_ancilla;     /* first constant line not restored */
  std::size_t garbage_count{ 0u };
  std::size_t gate_count{ 0u };
  std::size_t line_count{ 0u };

  bool ok() const noexcept { return correct && ancilla_ok; }
};

/*! \brief Checks that out_line computes f and every constant non-output line is restored. */
verify_report verify_realizes( const circuit& c, const truth_table& f, line_index out_line );

struct permutation_report
{
  bool correct{ false };
  std::optional<std::uint32_t> first_mismatch;
};

permutation_report verify_permutation( const circuit& c, const permutation& p );

struct circuit_metrics
{
  std::size_t gate_count{ 0u };
  std::size_t max_controls{ 0u };
  std::size_t width{ 0u };
  std::size_t ancilla_count{ 0u };
  std::size_t garbage_count{ 0u };
};

circuit_metrics metrics( const circuit& c );

} // namespace revsynth
