#include <revsynth/random.hpp>

#include <numeric>
#include <utility>

namespace revsynth
{

std::uint64_t trial_seed( std::uint64_t seed, std::uint64_t index ) noexcept
{
  /* splitmix64 finalizer over the (seed, index) pair */
  std::uint64_t z = seed + ( index + 1u ) * 0x9e3779b97f4a7c15ull;
  z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
  z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
  return z ^ ( z >> 31 );
}

truth_table random_function( unsigned num_vars, std::mt19937_64& rng )
{
  truth_table tt( num_vars );
  std::vector<std::uint64_t> words( tt.words().size() );
  for ( auto& w : words )
  {
    w = rng();
  }
  return truth_table( num_vars, words );
}

permutation random_permutation( unsigned num_vars, std::mt19937_64& rng )
{
  std::vector<std::uint32_t> images( std::size_t{ 1 } << num_vars );
  std::iota( images.begin(), images.end(), 0u );
  for ( auto i = images.size(); i > 1u; --i )
  {
    /* unbiased draw from [0, i) by rejection */
    auto const bound = static_cast<std::uint64_t>( i );
    auto const limit = ~std::uint64_t{ 0 } - ( ~std::uint64_t{ 0 } % bound );
    std::uint64_t r;
    do
    {
      r = rng();
    } while ( r >= limit );
    std::swap( images[i - 1u], images[r % bound] );
  }
  return permutation( num_vars, std::move( images ) );
}

} // namespace revsynth
