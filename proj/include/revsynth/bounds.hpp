#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace revsynth::bounds
{

/* Closed-form gate-count bounds.  All arithmetic is 64-bit; n is capped at
 * max_n so every formula stays in range.  Formulas that are only stated for a
 * restricted domain return std::nullopt outside it; other precondition
 * violations throw std::invalid_argument. */

inline constexpr unsigned max_n = 32u;

/*! \brief Transformation-based synthesis, MPMCT library: (n-1) 2^n + 1. */
std::int64_t mmd_mct( unsigned n );

/*! \brief Transformation-based synthesis with Fredkin gates: (n-2) 2^n + 2 + n, n >= 2. */
std::int64_t mmd_fredkin( unsigned n );

/*! \brief BDD-based synthesis: 3 * 2^n. */
std::int64_t bdd( unsigned n );

/*! \brief MPMCT gates per single-target gate, 29 * 2^(n-8); defined for n >= 8. */
std::optional<std::int64_t> esop_stg( unsigned n );

/*! \brief Young subgroup + ESOP total, 29 * 2^(n-8) * (2n - 1); defined for n >= 8. */
std::optional<std::int64_t> esop_total( unsigned n );

/*! \brief 3 * 2^(n-3) - 2, the solution of f(n) = 2 f(n-1) + 2 with f(4) = 4. n >= 4. */
std::int64_t recurrence_closed( unsigned n );

/*! \brief Same quantity by iterating the recurrence upward from f(4) = 4. n >= 4. */
std::int64_t recurrence_iter( unsigned n );

/*! \brief Functional decomposition stopped after k steps:
 *  (2^k - 1) + (2^(n-k) - (n-k) - 1) + 2^(n-1) - 3 * 2^(k-1), for 1 <= k < n. */
std::int64_t decomp_single( unsigned n, unsigned k );

/*! \brief (2n - 1) * decomp_single(n, n/2); defined for even n >= 4. */
std::optional<std::int64_t> decomp_total( unsigned n );

/*! \brief Gate envelope of the concrete decomposition pipeline with m = n - k leaf variables:
 *  (2^k - 1) + (2^m - m - 1) + (2^m - 1) + 2^k (2^(m-1) + 2). */
std::int64_t decomp_impl( unsigned n, unsigned k );

/*! \brief Multiplicative complexity lower bound for degree d: d - 1, d >= 1. */
std::int64_t mc_lower( unsigned d );

/*! \brief Multiplicative complexity of a random function, n even: 2^(n/2+1) - n/2 - 2. */
std::int64_t mc_random_upper( unsigned n );

struct bound_row
{
  unsigned n;
  std::int64_t mmd_mct;
  std::int64_t mmd_fredkin;
  std::int64_t bdd;
  std::optional<std::int64_t> esop_stg;
  std::optional<std::int64_t> esop_total;
  std::optional<std::int64_t> nabilla_small;
  std::optional<std::int64_t> decomp_single;
  std::optional<std::int64_t> decomp_total;
};

/*! \brief One row per n in [n_min, n_max], 2 <= n_min <= n_max <= 32. */
std::vector<bound_row> comparison_table( unsigned n_min, unsigned n_max );

/*! \brief CSV with header; undefined values are empty cells. */
std::string to_csv( const std::vector<bound_row>& rows );

inline constexpr const char* csv_header =
    "n,mmd_mct,mmd_fredkin,bdd,esop_stg,esop_total,nabilla_small,decomp_single,decomp_total";

} // namespace revsynth::bounds
