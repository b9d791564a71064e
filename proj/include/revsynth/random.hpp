#pragma once

#include <revsynth/boolfn.hpp>
#include <revsynth/circuit.hpp>

#include <cstdint>
#include <random>

namespace revsynth
{

/*! \brief Seed of trial `index` derived from a run seed, so any trial can be replayed alone. */
std::uint64_t trial_seed( std::uint64_t seed, std::uint64_t index ) noexcept;

/* Both generators consume only raw 64-bit draws, so output is identical across standard libraries. */
truth_table random_function( unsigned num_vars, std::mt19937_64& rng );
permutation random_permutation( unsigned num_vars, std::mt19937_64& rng );

} // namespace revsynth
